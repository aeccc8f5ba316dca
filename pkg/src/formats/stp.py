"""Import of DIMACS-challenge STP files (MWCS and GMWCS families).

The grammar is tolerant: keywords are case-insensitive, unknown sections are
skipped and node weights are accepted from any ``SECTION Terminals`` /
``SECTION NodeWeights`` style block as ``<tag> <node> <weight>`` records.
STP node ids are 1-based and are remapped to dense 0-based ids; the original
labels are kept on `Instance.labels`.
"""

from __future__ import annotations

import math
from enum import Enum

from errors import FormatError
from formats.canonical import _text
from graph import build_graph
from instance import Instance, Origin
from log import get_logger

logger = get_logger(__name__)

NODE_WEIGHT_SECTIONS = {"terminals", "nodeweights", "nodeweight", "weights"}
NODE_WEIGHT_TAGS = {"t", "tp", "nw", "n", "tw"}
EDGE_TAGS = {"e", "a"}


class StpMode(Enum):
    """How edge weights are derived from an STP file."""

    MWCS = "mwcs"
    GMWCS = "gmwcs"


def _number(token: str, what: str, line: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise FormatError(f"{what} must be numeric, got '{token}'", line)
    if not math.isfinite(value):
        raise FormatError(f"{what} must be finite, got '{token}'", line)
    return value


def _node(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"node id must be an integer, got '{token}'", line)


def import_stp(data: bytes | str, mode: StpMode | str, name: str = "") -> Instance:
    """Import an STP file as a WCM instance.

    Args:
        data: File contents.
        mode: ``mwcs`` derives w(e) = w(u) + w(v) from node weights; ``gmwcs``
            reads the weight on each edge record and ignores node weights.
        name: Instance name to record.

    Returns:
        Instance with dense vertex ids and ``labels`` mapping back to STP ids.

    Raises:
        FormatError: Missing Graph section, edge on an unknown node, missing
            weights for the chosen mode, or malformed records.
    """
    mode = StpMode(mode)
    declared_nodes: int | None = None
    declared_edges: int | None = None
    has_graph = False
    section: str | None = None
    raw_edges: list[tuple[int, int, float | None, int]] = []
    node_weights: dict[int, float] = {}

    for lineno, raw in enumerate(_text(data).split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        keyword = tokens[0].lower()

        if keyword == "eof":
            break
        if keyword == "section":
            if len(tokens) < 2:
                raise FormatError("SECTION without a name", lineno)
            section = tokens[1].lower()
            has_graph = has_graph or section == "graph"
            continue
        if keyword == "end":
            section = None
            continue

        if section == "graph":
            if keyword == "nodes" and len(tokens) >= 2:
                declared_nodes = _node(tokens[1], lineno)
            elif keyword in ("edges", "arcs") and len(tokens) >= 2:
                declared_edges = _node(tokens[1], lineno)
            elif keyword in EDGE_TAGS:
                if len(tokens) < 3:
                    raise FormatError(f"edge record needs two endpoints: '{line}'", lineno)
                weight = _number(tokens[3], "edge weight", lineno) if len(tokens) >= 4 else None
                raw_edges.append((_node(tokens[1], lineno), _node(tokens[2], lineno), weight, lineno))
        elif section in NODE_WEIGHT_SECTIONS and keyword in NODE_WEIGHT_TAGS:
            if len(tokens) < 3:
                continue
            node = _node(tokens[1], lineno)
            weight = _number(tokens[2], "node weight", lineno)
            if node in node_weights:
                if mode is StpMode.MWCS:
                    raise FormatError(f"duplicate weight record for node {node}", lineno)
                logger.warning("line %d: ignoring repeated weight record for node %d", lineno, node)
                continue
            node_weights[node] = weight

    if not has_graph:
        raise FormatError("missing 'SECTION Graph'")

    if declared_nodes is None:
        declared_nodes = max((max(u, v) for u, v, _, _ in raw_edges), default=0)
        logger.warning("no 'Nodes' record; assuming %d nodes", declared_nodes)

    edges: list[tuple[int, int]] = []
    weights: list[float] = []
    seen: set[tuple[int, int]] = set()

    for u, v, w, lineno in raw_edges:
        for node in (u, v):
            if not 1 <= node <= declared_nodes:
                raise FormatError(f"edge references unknown node {node}", lineno)
        if u == v:
            logger.warning("line %d: skipping self-loop on node %d", lineno, u)
            continue
        key = (min(u, v) - 1, max(u, v) - 1)
        if key in seen:
            logger.warning("line %d: merging duplicate edge (%d, %d)", lineno, u, v)
            continue
        seen.add(key)

        if mode is StpMode.GMWCS:
            if w is None:
                raise FormatError(f"edge ({u}, {v}) has no weight (required in gmwcs mode)", lineno)
        else:
            for node in (u, v):
                if node not in node_weights:
                    raise FormatError(f"node {node} has no weight record (required in mwcs mode)")
            w = node_weights[u] + node_weights[v]

        edges.append(key)
        weights.append(w)

    if mode is StpMode.MWCS:
        missing = [u for u in range(1, declared_nodes + 1) if u not in node_weights]
        if missing:
            raise FormatError(f"node {missing[0]} has no weight record (required in mwcs mode)")

    if declared_edges is not None and declared_edges != len(raw_edges):
        logger.warning("header declares %d edges but %d were read", declared_edges, len(raw_edges))

    graph = build_graph(declared_nodes, edges)
    origin = Origin.MWCS if mode is StpMode.MWCS else Origin.GMWCS
    labels = tuple(range(1, declared_nodes + 1))
    return Instance(graph=graph, weights=weights, name=name, origin=origin, labels=labels)
