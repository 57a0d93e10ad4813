"""Decide (strong) rainbow connectivity of an edge-colored graph.

Rainbow paths are found by breadth-first search over states
``(vertex, set of colors used so far)``. A rainbow walk can always be
shortcut to a rainbow path on a subset of its colors, so state
reachability is exactly rainbow-path existence, and the first time a
target vertex is reached the walk is a path. The search never goes deeper
than the number of colors in use.

Rainbow geodesics are found by propagating color sets forward along the
geodesic DAG of the source.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional

from .coloring import EdgeColoring
from .errors import InvalidParameterError
from .graph import Graph, geodesic_dag

Mode = Literal["rainbow", "strong"]
Path = tuple[int, ...]
_State = tuple[int, int]


@dataclass(frozen=True)
class VerificationReport:
    mode: Mode
    passed: bool
    violating_pair: Optional[tuple[int, int]]
    checked_pairs: int
    witness_paths: Optional[dict[tuple[int, int], Path]] = field(default=None, compare=False)

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "passed": self.passed,
            "violating_pair": list(self.violating_pair) if self.violating_pair else None,
            "checked_pairs": self.checked_pairs,
        }


def _prepare(g: Graph, c: EdgeColoring) -> None:
    c.check_bound(g)
    if g.vertex_count < 2:
        raise InvalidParameterError("rainbow connectivity needs a graph with at least 2 vertices")


def _rainbow_search(
    g: Graph, colors: tuple[int, ...], source: int, targets: set[int]
) -> tuple[dict[int, _State], dict[_State, Optional[_State]]]:
    depth_limit = min(len(set(colors)), g.vertex_count - 1)
    inc = g.incidence
    start: _State = (source, 0)
    parent: dict[_State, Optional[_State]] = {start: None}
    found: dict[int, _State] = {}
    remaining = set(targets)
    remaining.discard(source)
    frontier = [start]
    depth = 0
    while frontier and remaining and depth < depth_limit:
        nxt = []
        for state in frontier:
            x, mask = state
            for y, idx in inc[x]:
                bit = 1 << colors[idx]
                if mask & bit:
                    continue
                s2 = (y, mask | bit)
                if s2 in parent:
                    continue
                parent[s2] = state
                nxt.append(s2)
                if y in remaining:
                    remaining.discard(y)
                    found[y] = s2
        frontier = nxt
        depth += 1
    return found, parent


def _unwind(parent: dict, state) -> Path:
    out = []
    while state is not None:
        out.append(state[0])
        state = parent[state]
    return tuple(reversed(out))


def exists_rainbow_path(g: Graph, c: EdgeColoring, u: int, v: int) -> Optional[Path]:
    """A shortest rainbow ``u``-``v`` path, or ``None`` if there is none."""
    _prepare(g, c)
    if u == v:
        raise InvalidParameterError("endpoints must differ")
    found, parent = _rainbow_search(g, c.colors, u, {v})
    return _unwind(parent, found[v]) if v in found else None


def _geodesic_color_sets(g: Graph, colors: tuple[int, ...], source: int):
    """Per vertex, ``{color mask: (pred, pred mask)}`` over rainbow geodesics."""
    dag = geodesic_dag(g, source)
    table: list[dict[int, Optional[tuple[int, int]]]] = [dict() for _ in range(g.vertex_count)]
    table[source][0] = None
    for t in dag.order:
        if t == source:
            continue
        here = table[t]
        for p in dag.preds[t]:
            bit = 1 << colors[g.index_of(p, t)]
            for m in table[p]:
                if not m & bit and (m | bit) not in here:
                    here[m | bit] = (p, m)
    return table


def _unwind_geodesic(table, source: int, target: int) -> Path:
    mask = next(iter(table[target]))
    out = [target]
    v = target
    while v != source:
        v, mask = table[v][mask]
        out.append(v)
    return tuple(reversed(out))


def exists_rainbow_geodesic(g: Graph, c: EdgeColoring, u: int, v: int) -> Optional[Path]:
    """A rainbow shortest ``u``-``v`` path, or ``None`` if every geodesic repeats a color."""
    _prepare(g, c)
    if u == v:
        raise InvalidParameterError("endpoints must differ")
    table = _geodesic_color_sets(g, c.colors, u)
    return _unwind_geodesic(table, u, v) if table[v] else None


def _check(g: Graph, c: EdgeColoring, mode: Mode, certificate: bool) -> VerificationReport:
    _prepare(g, c)
    n = g.vertex_count
    checked = 0
    paths: dict[tuple[int, int], Path] = {}
    for u in range(n - 1):
        targets = set(range(u + 1, n))
        if mode == "rainbow":
            ok, parent = _rainbow_search(g, c.colors, u, targets)
        else:
            table = _geodesic_color_sets(g, c.colors, u)
            ok = {t: None for t in targets if table[t]}
        for v in range(u + 1, n):
            checked += 1
            if v not in ok:
                return VerificationReport(mode, False, (u, v), checked, paths if certificate else None)
            if certificate:
                if mode == "rainbow":
                    paths[(u, v)] = _unwind(parent, ok[v])
                else:
                    paths[(u, v)] = _unwind_geodesic(table, u, v)
    return VerificationReport(mode, True, None, checked, paths if certificate else None)


def is_rainbow_connected(g: Graph, c: EdgeColoring, certificate: bool = False) -> VerificationReport:
    """Check every pair ``u < v`` in lexicographic order for a rainbow path.

    With ``certificate=True`` the report carries one rainbow path per
    checked pair.
    """
    return _check(g, c, "rainbow", certificate)


def is_strong_rainbow_connected(
    g: Graph, c: EdgeColoring, certificate: bool = False
) -> VerificationReport:
    """Check every pair ``u < v`` in lexicographic order for a rainbow geodesic."""
    return _check(g, c, "strong", certificate)


def verify(g: Graph, c: EdgeColoring, mode: Mode, certificate: bool = False) -> VerificationReport:
    if mode not in ("rainbow", "strong"):
        raise InvalidParameterError(f"unknown mode {mode!r}")
    return _check(g, c, mode, certificate)
