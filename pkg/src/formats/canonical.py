"""Canonical ``wcm`` instance format.

    wcm <n> <m>
    e <u> <v> <w>      (exactly m lines, 0-based endpoints, u < v)

Lines starting with ``#`` are comments and may appear anywhere.
"""

from __future__ import annotations

import math

from errors import FormatError, GraphError
from graph import build_graph
from instance import Instance, Origin

HEADER = "wcm"


def _text(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise FormatError(f"not UTF-8 text: {e}")
    return data


def _parse_int(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got '{token}'", line)


def _parse_weight(token: str, line: int) -> float:
    try:
        w = float(token)
    except ValueError:
        raise FormatError(f"weight must be a decimal number, got '{token}'", line)
    if not math.isfinite(w):
        raise FormatError(f"weight must be finite, got '{token}'", line)
    return w


def parse_canonical(data: bytes | str, name: str = "") -> Instance:
    """Parse an instance in the canonical format.

    Args:
        data: File contents.
        name: Instance name to record.

    Returns:
        Instance with edges in file order.

    Raises:
        FormatError: Malformed line (with its number), inconsistent counts or invalid edges.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    weights: list[float] = []
    seen: set[tuple[int, int]] = set()

    for lineno, raw in enumerate(_text(data).split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()

        if header is None:
            if tokens[0] != HEADER or len(tokens) != 3:
                raise FormatError(f"expected header '{HEADER} <n> <m>', got '{line}'", lineno)
            n = _parse_int(tokens[1], "vertex count", lineno)
            m = _parse_int(tokens[2], "edge count", lineno)
            if n < 0 or m < 0:
                raise FormatError("counts must be non-negative", lineno)
            header = (n, m)
            continue

        if tokens[0] != "e" or len(tokens) != 4:
            raise FormatError(f"expected 'e <u> <v> <w>', got '{line}'", lineno)
        u = _parse_int(tokens[1], "endpoint", lineno)
        v = _parse_int(tokens[2], "endpoint", lineno)
        if not (0 <= u < header[0] and 0 <= v < header[0]):
            raise FormatError(f"edge ({u}, {v}) has an endpoint outside 0..{header[0] - 1}", lineno)
        if u == v:
            raise FormatError(f"self-loop ({u}, {v})", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge ({u}, {v})", lineno)
        seen.add(key)
        edges.append(key)
        weights.append(_parse_weight(tokens[3], lineno))

    if header is None:
        raise FormatError("missing header line")
    if len(edges) != header[1]:
        raise FormatError(f"header declares {header[1]} edges but {len(edges)} were given")

    try:
        graph = build_graph(header[0], edges)
    except GraphError as e:
        raise FormatError(str(e))

    return Instance(graph=graph, weights=weights, name=name, origin=Origin.CANONICAL)


def format_weight(w: float) -> str:
    """Shortest decimal that reads back to the same double."""
    negative_zero = w == 0 and math.copysign(1.0, w) < 0
    if w.is_integer() and abs(w) < 2**53 and not negative_zero:
        return str(int(w))
    return repr(w)


def write_canonical(inst: Instance) -> bytes:
    """Serialize an instance to the canonical format (LF line endings)."""
    lines = [f"{HEADER} {inst.n} {inst.m}"]
    for (u, v), w in zip(inst.graph.edges, inst.weights):
        lines.append(f"e {u} {v} {format_weight(float(w))}")
    return ("\n".join(lines) + "\n").encode("utf-8")
