"""Replay of the lower bound ``src(G(a, b)) >= b`` on a concrete coloring.

Given any coloring of ``G(a, b)`` with at most ``b - 1`` colors, the audit
walks the pigeonhole argument and returns a vertex pair with no rainbow
geodesic, together with the evidence that led to it:

1. Each ``v_i`` reaches ``u_1`` by exactly one geodesic ``v_i v u_{a-2} .. u_1``.
   If the path edges repeat a color, or some ``v_i v`` reuses a path color,
   that geodesic is the refutation.
2. Otherwise the v-hub edges use at most ``b - a + 1`` colors, so one color
   class ``A`` has at least ``ceil(n / (b - a + 1)) >= 3b + 1`` edges.
3. The w-hub edges at the endpoints of ``A`` use at most ``b - 1`` colors,
   so one class ``B`` has at least ``ceil(|A| / (b - 1)) >= 4`` edges.
4. Two endpoints of ``B`` far apart on the cycle have exactly the two hub
   geodesics, and both are monochromatic.

Every returned pair is re-checked with the geodesic verifier; a mismatch
raises :class:`AuditInconsistencyError`.
"""
from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Union

from .coloring import EdgeColoring, random_coloring, restrict_palette_check, used_colors
from .errors import (
    ArithmeticInconsistencyError,
    AuditInconsistencyError,
    InvalidParameterError,
    PreconditionError,
)
from .graph import geodesic_dag
from .verify import exists_rainbow_geodesic
from .witness import WitnessGraph, WitnessParams

# Cycle distance the pigeonhole step aims for. Any distance >= 3 already
# leaves only the two hub geodesics, which is the fallback when the class
# sits inside an arc of length 3.
PREFERRED_SEPARATION = 4
MIN_SEPARATION = 3


@dataclass(frozen=True)
class HubFailure:
    path: tuple[int, int, int]
    repeated_color: int


@dataclass(frozen=True)
class AuditTrace:
    forced_path_colors: tuple[int, ...]
    set_a_color: int
    set_a_edges: tuple[tuple[int, int], ...]
    set_b_color: int
    set_b_edges: tuple[tuple[int, int], ...]
    chosen_pair: tuple[int, int]
    cycle_distance: int
    geodesic_failures: tuple[HubFailure, HubFailure]

    @property
    def pair(self) -> tuple[int, int]:
        return self.chosen_pair

    def to_json(self) -> dict:
        return {
            "kind": "trace",
            "forced_path_colors": list(self.forced_path_colors),
            "set_A_class": {"color": self.set_a_color, "edges": [list(e) for e in self.set_a_edges]},
            "set_B_class": {"color": self.set_b_color, "edges": [list(e) for e in self.set_b_edges]},
            "chosen_pair": list(self.chosen_pair),
            "cycle_distance": self.cycle_distance,
            "geodesic_failures": [
                {"path": list(f.path), "repeated_color": f.repeated_color} for f in self.geodesic_failures
            ],
        }


@dataclass(frozen=True)
class EarlyRefutation:
    """Step 1 failed: the unique ``v_i``-``u_1`` geodesic repeats a color."""

    pair: tuple[int, int]
    geodesic: tuple[int, ...]
    repeated_color: int
    reason: str

    def to_json(self) -> dict:
        return {
            "kind": "early",
            "pair": list(self.pair),
            "geodesic": list(self.geodesic),
            "repeated_color": self.repeated_color,
            "reason": self.reason,
        }


AuditResult = Union[AuditTrace, EarlyRefutation]


def pigeonhole_margins(params: WitnessParams) -> tuple[int, int]:
    a, b = params.a, params.b
    n = params.cycle_length
    ceil_a = math.ceil(n / (b - a + 1))
    ceil_b = math.ceil((3 * b + 1) / (b - 1))
    if ceil_a < 3 * b + 1:
        raise ArithmeticInconsistencyError(f"ceil({n}/{b - a + 1}) = {ceil_a} < {3 * b + 1}")
    if ceil_b < 4:
        raise ArithmeticInconsistencyError(f"ceil({3 * b + 1}/{b - 1}) = {ceil_b} < 4")
    return ceil_a, ceil_b


def cyclic_distance(i: int, j: int, n: int) -> int:
    d = abs(i - j) % n
    return min(d, n - d)


def separated_pair(
    cycle_positions: Iterable[int], n: int, min_distance: int = PREFERRED_SEPARATION
) -> tuple[int, int]:
    """First pair (lexicographic) of positions at cyclic distance ``>= min_distance``."""
    positions = sorted(set(cycle_positions))
    if len(positions) < 4:
        raise InvalidParameterError(f"need at least 4 distinct positions, got {len(positions)}")
    if n < 18:
        raise InvalidParameterError(f"cycle length must be at least 18, got {n}")
    for i, j in combinations(positions, 2):
        if cyclic_distance(i, j, n) >= min_distance:
            return i, j
    raise InvalidParameterError(
        f"no two of {positions} are at cyclic distance >= {min_distance} on C_{n}"
    )


def _largest_class(colors: dict[tuple[int, int], int]) -> tuple[int, list[tuple[int, int]]]:
    counts = Counter(colors.values())
    best = max(counts.values())
    color = min(c for c, k in counts.items() if k == best)
    return color, sorted(e for e, c in colors.items() if c == color)


def _edge(x: int, y: int) -> tuple[int, int]:
    return (x, y) if x < y else (y, x)


def _confirm(wg: WitnessGraph, c: EdgeColoring, pair: tuple[int, int]) -> None:
    found = exists_rainbow_geodesic(wg.graph, c, *pair)
    if found is not None:
        raise AuditInconsistencyError(f"pair {pair} has rainbow geodesic {found}")


def _early(wg: WitnessGraph, c: EdgeColoring) -> EarlyRefutation | None:
    g = wg.graph
    path_colors = [c.color_of(g, x, y) for x, y in wg.path_edges()]
    u1 = wg.u(1)
    repeated = [col for col, k in Counter(path_colors).items() if k > 1]
    if repeated:
        vi = wg.cycle(1)
        reason = "pendant path repeats a color"
        color = min(repeated)
    else:
        vi = None
        for i in range(1, wg.n + 1):
            col = c.color_of(g, wg.cycle(i), wg.v_id)
            if col in path_colors:
                vi, color = wg.cycle(i), col
                break
        if vi is None:
            return None
        reason = f"edge v_{wg.cycle_position(vi)} v reuses a pendant path color"
    dag = geodesic_dag(g, vi)
    geodesics = dag.geodesics(u1)
    if len(geodesics) != 1 or dag.dist[u1] != wg.a - 1:
        raise AuditInconsistencyError(f"v_i-u_1 geodesic is not unique for vertex {vi}: {geodesics}")
    pair = (min(vi, u1), max(vi, u1))
    return EarlyRefutation(pair, geodesics[0], color, reason)


def audit_lower_bound(wg: WitnessGraph, c: EdgeColoring) -> AuditResult:
    """Refute ``c`` as a strong rainbow coloring of ``wg`` (``c`` uses < b colors)."""
    g = wg.graph
    c.check_bound(g)
    if not restrict_palette_check(c, wg.b - 1):
        raise PreconditionError(
            f"coloring uses {len(used_colors(c))} colors; the audit needs at most b - 1 = {wg.b - 1}"
        )
    early = _early(wg, c)
    if early is not None:
        _confirm(wg, c, early.pair)
        return early

    ceil_a, _ = pigeonhole_margins(wg.params)
    path_colors = tuple(c.color_of(g, x, y) for x, y in wg.path_edges())

    v_hub = {_edge(x, wg.v_id): c.color_of(g, x, wg.v_id) for x in wg.cycle_ids}
    a_color, a_edges = _largest_class(v_hub)
    if len(a_edges) < ceil_a:
        raise AuditInconsistencyError(f"largest v-hub class has {len(a_edges)} < {ceil_a} edges")
    a_ends = [x for x, _ in a_edges]

    w_hub = {_edge(x, wg.w_id): c.color_of(g, x, wg.w_id) for x in a_ends}
    b_color, b_edges = _largest_class(w_hub)
    need_b = math.ceil(len(a_edges) / (wg.b - 1))
    if len(b_edges) < max(need_b, 4):
        raise AuditInconsistencyError(f"largest w-hub class has {len(b_edges)} < {max(need_b, 4)} edges")
    b_ends = [x for x, _ in b_edges]

    try:
        x, y = separated_pair(b_ends, wg.n, PREFERRED_SEPARATION)
    except InvalidParameterError:
        x, y = separated_pair(b_ends, wg.n, MIN_SEPARATION)

    dag = geodesic_dag(g, x)
    geodesics = dag.geodesics(y)
    expected = sorted([(x, wg.w_id, y), (x, wg.v_id, y)])
    if dag.dist[y] != 2 or geodesics != expected:
        raise AuditInconsistencyError(f"geodesics between {x} and {y} are {geodesics}, not the two hub paths")
    failures = []
    for path in expected:
        c1 = c.color_of(g, path[0], path[1])
        c2 = c.color_of(g, path[1], path[2])
        if c1 != c2:
            raise AuditInconsistencyError(f"hub geodesic {path} is rainbow")
        failures.append(HubFailure(path, c1))
    trace = AuditTrace(
        forced_path_colors=path_colors,
        set_a_color=a_color,
        set_a_edges=tuple(a_edges),
        set_b_color=b_color,
        set_b_edges=tuple(b_edges),
        chosen_pair=(x, y),
        cycle_distance=wg.cycle_distance(x, y),
        geodesic_failures=(failures[0], failures[1]),
    )
    _confirm(wg, c, trace.pair)
    return trace


def sample_colorings(wg: WitnessGraph, count: int, seed: int = 0) -> list[EdgeColoring]:
    """Seeded pseudorandom colorings of ``wg`` with at most ``b - 1`` colors.

    Even-indexed samples are uniform over ``1..b-1``. Odd-indexed samples
    give the pendant path distinct colors and keep the v-hub edges off them,
    so they survive step 1 and exercise the pigeonhole steps.
    """
    a, b = wg.a, wg.b
    k = b - 1
    rng = random.Random(f"audit-{seed}-{a}-{b}")
    g = wg.graph
    out = []
    for s in range(count):
        base = random_coloring(g, k, rng)
        if s % 2 == 0:
            out.append(base)
            continue
        colors = list(base.colors)
        palette = list(range(1, k + 1))
        rng.shuffle(palette)
        path_palette, hub_palette = palette[: a - 2], palette[a - 2 :]
        for (x, y), col in zip(wg.path_edges(), path_palette):
            colors[g.index_of(x, y)] = col
        for x in wg.cycle_ids:
            colors[g.index_of(x, wg.v_id)] = rng.choice(hub_palette)
        out.append(EdgeColoring(g.edge_count, k, tuple(colors)))
    return out
