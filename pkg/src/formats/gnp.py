"""Random G(n, p) benchmark instances with uniform or Gaussian edge weights."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx
import numpy as np

from errors import FormatError
from graph import build_graph
from instance import Instance, Origin


@dataclass(frozen=True)
class Uniform:
    a: float
    b: float

    def __post_init__(self) -> None:
        if self.a > self.b:
            raise ValueError(f"uniform({self.a}, {self.b}): lower bound exceeds upper bound")

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return rng.uniform(self.a, self.b, size=size)

    def __str__(self) -> str:
        return f"uniform:{self.a:g},{self.b:g}"


@dataclass(frozen=True)
class Gaussian:
    mu: float
    sigma: float

    def __post_init__(self) -> None:
        if self.sigma < 0:
            raise ValueError(f"gaussian({self.mu}, {self.sigma}): sigma must be non-negative")

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return rng.normal(self.mu, self.sigma, size=size)

    def __str__(self) -> str:
        return f"gaussian:{self.mu:g},{self.sigma:g}"


Distribution = Uniform | Gaussian


def parse_distribution(spec: str) -> Distribution:
    """Parse ``uniform:a,b`` or ``gaussian:mu,sigma``."""
    kind, _, params = spec.partition(":")
    try:
        first, second = (float(p) for p in params.split(","))
    except ValueError:
        raise FormatError(f"invalid distribution '{spec}' (expected uniform:a,b or gaussian:mu,sigma)")

    kind = kind.strip().lower()
    try:
        if kind == "uniform":
            return Uniform(first, second)
        if kind == "gaussian":
            return Gaussian(first, second)
    except ValueError as e:
        raise FormatError(str(e))
    raise FormatError(f"unknown distribution '{kind}' (expected uniform or gaussian)")


def generate_gnp(n: int, p: float, dist: Distribution, seed: int) -> Instance:
    """Generate a binomial random graph with i.i.d. edge weights.

    Each unordered pair is an edge independently with probability ``p``. The
    graph and the weights are deterministic for a fixed seed.

    Args:
        n: Vertex count (at least 1).
        p: Edge probability in [0, 1].
        dist: Weight distribution.
        seed: Random seed.

    Returns:
        Instance with edges sorted lexicographically.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")

    h = nx.fast_gnp_random_graph(n, p, seed=seed)
    edges = sorted((min(u, v), max(u, v)) for u, v in h.edges())

    rng = np.random.default_rng(seed)
    weights = dist.sample(rng, len(edges))

    return Instance(
        graph=build_graph(n, edges),
        weights=weights,
        name=f"gnp-n{n}-p{p:g}-s{seed}",
        origin=Origin.GENERATED,
    )
