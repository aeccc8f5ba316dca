"""Problem instances: a graph plus one weight per edge."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from errors import GraphError
from graph import Graph


class Origin(Enum):
    """Where an instance came from."""

    CANONICAL = "canonical"
    MWCS = "mwcs"
    GMWCS = "gmwcs"
    GENERATED = "generated"


@dataclass
class Instance:
    """A weighted connected matching instance."""

    graph: Graph
    weights: np.ndarray
    name: str = ""
    origin: Origin = Origin.CANONICAL
    labels: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        self.weights = np.asarray(self.weights, dtype=np.float64)
        if self.weights.shape != (self.graph.m,):
            raise GraphError(f"expected {self.graph.m} weights, got {self.weights.shape[0]}")
        if not all(math.isfinite(w) for w in self.weights):
            raise GraphError("weights must be finite")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def __eq__(self, other: object) -> bool:
        """Same graph and bit-identical weights; name and origin are ignored."""
        if not isinstance(other, Instance):
            return NotImplemented
        return (
            self.graph.n == other.graph.n
            and self.graph.edges == other.graph.edges
            and np.array_equal(self.weights, other.weights)
        )

    def label(self, u: int) -> int:
        """Original vertex label (STP node id) for reporting."""
        return self.labels[u] if self.labels is not None else u
