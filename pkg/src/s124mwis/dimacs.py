"""Read and write the DIMACS-like instance format.

    c <comment>
    p edge <n> <m>
    e <u> <v>          1-indexed endpoints
    n <v> <weight>     optional; absent vertices weigh 1
"""

from __future__ import annotations

from .graph import WeightedGraph


class DimacsError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _ints(tokens: list[str], count: int, lineno: int) -> list[int]:
    if len(tokens) != count:
        raise DimacsError(f"expected {count} fields, got {len(tokens)}", lineno)
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise DimacsError(f"non-integer field in {' '.join(tokens)!r}", lineno) from None


def parse_dimacs(text: str) -> WeightedGraph:
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    weights: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind, rest = tokens[0], tokens[1:]
        if kind == "p":
            if n is not None:
                raise DimacsError("second problem line", lineno)
            if not rest or rest[0] != "edge":
                raise DimacsError("problem line must read 'p edge <n> <m>'", lineno)
            n, m = _ints(rest[1:], 2, lineno)
            if n < 0 or m < 0:
                raise DimacsError("negative counts", lineno)
            continue
        if n is None:
            raise DimacsError(f"{kind!r} line before the problem line", lineno)
        if kind == "e":
            u, v = _ints(rest, 2, lineno)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise DimacsError(f"vertex {x} out of range 1..{n}", lineno)
            if u == v:
                raise DimacsError(f"self-loop at vertex {u}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DimacsError(f"duplicate edge {u} {v}", lineno)
            seen.add(key)
            edges.append((u - 1, v - 1))
        elif kind == "n":
            v, wt = _ints(rest, 2, lineno)
            if not 1 <= v <= n:
                raise DimacsError(f"vertex {v} out of range 1..{n}", lineno)
            if wt < 0:
                raise DimacsError(f"negative weight {wt} for vertex {v}", lineno)
            if v in weights:
                raise DimacsError(f"second weight for vertex {v}", lineno)
            weights[v] = wt
        else:
            raise DimacsError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise DimacsError("missing problem line")
    if len(edges) != m:
        raise DimacsError(f"header announces {m} edges, body has {len(edges)}")
    return WeightedGraph.from_edges(n, edges, [weights.get(v + 1, 1) for v in range(n)])


def emit_dimacs(g: WeightedGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"c {part}" for part in comment.splitlines())
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    lines.extend(f"n {v + 1} {w}" for v, w in enumerate(g.weights) if w != 1)
    return "\n".join(lines) + "\n"
