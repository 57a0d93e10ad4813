"""Witness graphs ``G(a, b)`` with ``rc = a`` and ``src = b``.

``G(a, b)`` is an ``n``-cycle ``v_1 .. v_n`` (``n = 3b(b - a + 2)``) with two
hubs ``w`` and ``v`` joined to every cycle vertex, plus a pendant path
``u_1 .. u_{a-2}`` hanging off ``v``. Vertex ids are fixed:

* ``v_i -> i - 1``
* ``w -> n``, ``v -> n + 1``
* ``u_j -> n + 1 + (a - 1 - j)``, so ``u_{a-2}`` is adjacent to ``v`` and
  ``u_1`` gets the largest id.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameterError
from .graph import Graph, build_complete, build_cycle


@dataclass(frozen=True)
class WitnessParams:
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 3 or self.b < self.a:
            raise InvalidParameterError(
                f"witness parameters must satisfy 3 <= a <= b, got a={self.a}, b={self.b} "
                "(a = b in {1, 2} is covered by build_small_witness)"
            )

    @property
    def cycle_length(self) -> int:
        return 3 * self.b * (self.b - self.a + 2)


@dataclass(frozen=True)
class WitnessGraph:
    graph: Graph
    params: WitnessParams
    n: int
    cycle_ids: tuple[int, ...]
    w_id: int
    v_id: int
    path_ids: tuple[int, ...]  # u_1 .. u_{a-2}

    @property
    def a(self) -> int:
        return self.params.a

    @property
    def b(self) -> int:
        return self.params.b

    def cycle(self, i: int) -> int:
        """Vertex id of ``v_i``, 1-based and taken modulo ``n``."""
        return self.cycle_ids[(i - 1) % self.n]

    def u(self, j: int) -> int:
        """Vertex id of ``u_j`` for ``1 <= j <= a - 1`` (``u_{a-1}`` is ``v``)."""
        if j == self.a - 1:
            return self.v_id
        if not 1 <= j <= self.a - 2:
            raise InvalidParameterError(f"u_{j} does not exist for a={self.a}")
        return self.path_ids[j - 1]

    def path_edges(self) -> list[tuple[int, int]]:
        """``u_i u_{i+1}`` for ``i = 1 .. a-2`` as vertex pairs."""
        return [(self.u(i), self.u(i + 1)) for i in range(1, self.a - 1)]

    def cycle_position(self, vertex: int) -> int:
        """1-based index ``i`` of cycle vertex ``v_i``."""
        if not 0 <= vertex < self.n:
            raise InvalidParameterError(f"vertex {vertex} is not on the cycle")
        return vertex + 1

    def cycle_distance(self, x: int, y: int) -> int:
        d = abs(self.cycle_position(x) - self.cycle_position(y))
        return min(d, self.n - d)


def build_witness(params: WitnessParams | tuple[int, int]) -> WitnessGraph:
    if not isinstance(params, WitnessParams):
        params = WitnessParams(*params)
    a, n = params.a, params.cycle_length
    w, v = n, n + 1
    path_ids = tuple(n + 1 + (a - 1 - j) for j in range(1, a - 1))
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, w) for i in range(n)]
    edges += [(i, v) for i in range(n)]
    chain = path_ids + (v,)
    edges += list(zip(chain, chain[1:]))
    graph = Graph.from_edges(n + a, edges)
    return WitnessGraph(graph, params, n, tuple(range(n)), w, v, path_ids)


def build_small_witness(t: int) -> Graph:
    """Representative with ``rc = src = t`` for ``t`` in {1, 2}: ``K_3`` or ``C_4``."""
    if t == 1:
        return build_complete(3)
    if t == 2:
        return build_cycle(4)
    raise InvalidParameterError(f"small witnesses exist only for t in {{1, 2}}, got {t}")
