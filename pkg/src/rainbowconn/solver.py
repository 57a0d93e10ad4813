"""Exact ``rc(G)`` and ``src(G)`` for small graphs by exhaustive search.

Colorings are enumerated once per color-permutation class as
restricted-growth sequences, for ``k`` increasing from the diameter. The
first ``k`` with a passing coloring is optimal.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Literal, Optional

from .coloring import EdgeColoring
from .errors import BoundTooSmallError, InvalidParameterError, SizeLimitError
from .graph import Graph, diameter
from .verify import verify

Kind = Literal["rc", "src"]

DEFAULT_MAX_EDGES = 16


@dataclass(frozen=True)
class SolveResult:
    kind: Kind
    value: int
    certificate: EdgeColoring
    colorings_tested: int
    lower_bound_used: int

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "value": self.value,
            "certificate": {"k": self.certificate.palette_size, "colors": list(self.certificate.colors)},
            "colorings_tested": self.colorings_tested,
        }


def canonical_colorings(m: int, k: int) -> Iterator[tuple[int, ...]]:
    """Restricted-growth sequences of length ``m`` using exactly colors ``1..k``.

    Each surjective ``m``-edge ``k``-coloring appears once up to renaming of
    colors; there are ``S(m, k)`` of them (Stirling numbers of the second
    kind). Output is in lexicographic order.
    """
    if m < 1 or k < 1:
        raise InvalidParameterError(f"need m >= 1 and k >= 1, got m={m}, k={k}")
    if k > m:
        return
    seq = [0] * m

    def extend(pos: int, top: int) -> Iterator[tuple[int, ...]]:
        if pos == m:
            if top == k:
                yield tuple(seq)
            return
        # every color above `top` still has to appear in the remaining slots
        if k - top > m - pos:
            return
        for color in range(1, min(top + 1, k) + 1):
            seq[pos] = color
            yield from extend(pos + 1, max(top, color))

    seq[0] = 1
    yield from extend(1, 1)


def bounds(g: Graph) -> tuple[int, int]:
    """``(diameter, edge count)``: every optimum lies in this range."""
    return diameter(g), g.edge_count


def _solve(
    g: Graph,
    kind: Kind,
    k_max: Optional[int],
    max_edges: int,
    prune: Optional[Callable[[tuple[int, ...]], bool]],
) -> SolveResult:
    if g.vertex_count < 2:
        raise InvalidParameterError("rc and src are undefined for the one-vertex graph")
    m = g.edge_count
    if m > max_edges:
        raise SizeLimitError(
            f"graph has {m} edges; the exact solver is limited to {max_edges} "
            "(raise max_edges to override)"
        )
    lower, upper = bounds(g)
    if k_max is not None:
        upper = min(upper, k_max)
    mode = "rainbow" if kind == "rc" else "strong"
    tested = 0
    for k in range(lower, upper + 1):
        for colors in canonical_colorings(m, k):
            if prune is not None and prune(colors):
                continue
            tested += 1
            coloring = EdgeColoring(m, k, colors)
            if verify(g, coloring, mode).passed:
                return SolveResult(kind, k, coloring, tested, lower)
    raise BoundTooSmallError(
        f"no {mode} coloring with at most {upper} colors (diameter {lower}, k_max {k_max})"
    )


def rc_exact(
    g: Graph,
    k_max: Optional[int] = None,
    *,
    max_edges: int = DEFAULT_MAX_EDGES,
    prune: Optional[Callable[[tuple[int, ...]], bool]] = None,
) -> SolveResult:
    """Rainbow connection number with an optimal coloring as certificate.

    ``prune`` is called on each complete candidate before verification and
    may return True to skip it; it must only reject colorings that cannot
    pass, or optimality is lost.
    """
    return _solve(g, "rc", k_max, max_edges, prune)


def src_exact(
    g: Graph,
    k_max: Optional[int] = None,
    *,
    max_edges: int = DEFAULT_MAX_EDGES,
    prune: Optional[Callable[[tuple[int, ...]], bool]] = None,
) -> SolveResult:
    """Strong rainbow connection number; see :func:`rc_exact`."""
    return _solve(g, "src", k_max, max_edges, prune)
