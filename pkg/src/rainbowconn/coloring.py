"""Edge colorings and the two explicit colorings of ``G(a, b)``."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import BindingError, InvalidParameterError
from .graph import Graph
from .witness import WitnessGraph


@dataclass(frozen=True)
class EdgeColoring:
    """Colors ``1..palette_size`` indexed by a graph's canonical edge order."""

    graph_edge_count: int
    palette_size: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if len(self.colors) != self.graph_edge_count:
            raise InvalidParameterError(
                f"{len(self.colors)} colors given for {self.graph_edge_count} edges"
            )
        if self.palette_size < 1:
            raise InvalidParameterError(f"palette size must be positive, got {self.palette_size}")
        bad = [c for c in self.colors if not 1 <= c <= self.palette_size]
        if bad:
            raise InvalidParameterError(f"color {bad[0]} outside 1..{self.palette_size}")

    @classmethod
    def of(cls, colors: Sequence[int], palette_size: int | None = None) -> "EdgeColoring":
        colors = tuple(colors)
        k = palette_size if palette_size is not None else max(colors, default=1)
        return cls(len(colors), k, colors)

    @classmethod
    def constant(cls, g: Graph, color: int = 1) -> "EdgeColoring":
        return cls(g.edge_count, color, (color,) * g.edge_count)

    @classmethod
    def injective(cls, g: Graph) -> "EdgeColoring":
        m = g.edge_count
        return cls(m, max(m, 1), tuple(range(1, m + 1)))

    def check_bound(self, g: Graph) -> None:
        if self.graph_edge_count != g.edge_count:
            raise BindingError(
                f"coloring covers {self.graph_edge_count} edges but the graph has {g.edge_count}"
            )

    def color_of(self, g: Graph, u: int, v: int) -> int:
        return self.colors[g.index_of(u, v)]

    def recolor(self, mapping: dict[int, int]) -> "EdgeColoring":
        """Apply ``mapping`` to every color (unmapped colors stay put)."""
        new = tuple(mapping.get(c, c) for c in self.colors)
        return EdgeColoring(self.graph_edge_count, max(max(new, default=1), 1), new)


def used_colors(c: EdgeColoring) -> set[int]:
    return set(c.colors)


def restrict_palette_check(c: EdgeColoring, limit: int) -> bool:
    return len(used_colors(c)) <= limit


def random_coloring(g: Graph, k: int, rng: random.Random) -> EdgeColoring:
    """Uniform coloring with colors from ``1..k`` (a test and sampling utility)."""
    return EdgeColoring(g.edge_count, k, tuple(rng.randint(1, k) for _ in range(g.edge_count)))


def _finish(wg: WitnessGraph, assigned: dict[int, int], palette: int) -> EdgeColoring:
    g = wg.graph
    missing = [g.edges[i] for i in range(g.edge_count) if i not in assigned]
    if missing:
        raise AssertionError(f"edges left uncolored by the case rules: {missing[:5]}")
    return EdgeColoring(g.edge_count, palette, tuple(assigned[i] for i in range(g.edge_count)))


def _assign(g: Graph, assigned: dict[int, int], x: int, y: int, color: int) -> None:
    idx = g.index_of(x, y)
    if idx in assigned:
        raise AssertionError(f"edge {g.edges[idx]} matched two case rules")
    assigned[idx] = color


def rc_coloring(wg: WitnessGraph) -> EdgeColoring:
    """Rainbow ``a``-coloring of ``G(a, b)``.

    Path edge ``u_i u_{i+1}`` gets ``i``; ``v_i v`` gets ``a - 1`` for odd
    ``i`` and ``a`` for even ``i``; every ``v_i w`` gets ``a``; the remaining
    edges, which must be exactly the cycle edges, get 1.
    """
    g, a, n = wg.graph, wg.a, wg.n
    assigned: dict[int, int] = {}
    for i, (x, y) in enumerate(wg.path_edges(), start=1):
        _assign(g, assigned, x, y, i)
    for i in range(1, n + 1):
        _assign(g, assigned, wg.cycle(i), wg.v_id, a - 1 if i % 2 else a)
        _assign(g, assigned, wg.cycle(i), wg.w_id, a)
    rest = {g.edges[i] for i in range(g.edge_count) if i not in assigned}
    cycle_edges = {tuple(sorted((wg.cycle(i), wg.cycle(i + 1)))) for i in range(1, n + 1)}
    if rest != cycle_edges:
        raise AssertionError("the fallback case does not cover exactly the cycle edges")
    for x, y in rest:
        _assign(g, assigned, x, y, 1)
    return _finish(wg, assigned, a)


def src_coloring(wg: WitnessGraph) -> EdgeColoring:
    """Strong rainbow ``b``-coloring of ``G(a, b)``.

    v-hub edges come in ``b - a + 2`` blocks of ``3b`` consecutive cycle
    vertices colored ``a - 1, a, .., b``. Inside each block the w-hub edges
    run through colors ``1..b`` three vertices at a time. Cycle edges repeat
    1, 2, 3 starting from ``v_1 v_2``.
    """
    g, a, b, n = wg.graph, wg.a, wg.b, wg.n
    if n % 3:
        raise AssertionError(f"cycle length {n} is not divisible by 3")
    blocks = b - a + 2
    assigned: dict[int, int] = {}
    for i, (x, y) in enumerate(wg.path_edges(), start=1):
        _assign(g, assigned, x, y, i)
    for i in range(1, blocks + 1):
        for j in range(1, 3 * b + 1):
            _assign(g, assigned, wg.cycle(3 * b * (i - 1) + j), wg.v_id, a - 2 + i)
    for j in range(1, blocks + 1):
        for i in range(1, b + 1):
            for k in range(1, 4):
                _assign(g, assigned, wg.cycle(3 * (j - 1) * b + 3 * (i - 1) + k), wg.w_id, i)
    for i in range(1, b * blocks + 1):
        _assign(g, assigned, wg.cycle(3 * (i - 1) + 1), wg.cycle(3 * (i - 1) + 2), 1)
        _assign(g, assigned, wg.cycle(3 * (i - 1) + 2), wg.cycle(3 * (i - 1) + 3), 2)
    rest = {g.edges[i] for i in range(g.edge_count) if i not in assigned}
    expected = {tuple(sorted((wg.cycle(3 * i), wg.cycle(3 * i + 1)))) for i in range(1, n // 3 + 1)}
    if rest != expected:
        raise AssertionError("the fallback case does not cover exactly the edges v_{3i} v_{3i+1}")
    for x, y in rest:
        _assign(g, assigned, x, y, 3)
    return _finish(wg, assigned, b)
