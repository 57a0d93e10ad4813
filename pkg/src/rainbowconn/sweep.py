"""Grid check of the witness family: both certificates, diameter, margins, audits."""
from __future__ import annotations

from collections import Counter
from dataclasses import asdict, dataclass

from .audit import AuditTrace, audit_lower_bound, pigeonhole_margins, sample_colorings
from .coloring import rc_coloring, src_coloring, used_colors
from .graph import diameter
from .verify import exists_rainbow_geodesic, is_rainbow_connected, is_strong_rainbow_connected
from .witness import WitnessParams, build_witness


@dataclass(frozen=True)
class PointResult:
    a: int
    b: int
    vertices: int
    edges: int
    diameter: int
    rc_passed: bool
    rc_colors: int
    src_passed: bool
    src_colors: int
    margins: tuple[int, int]
    audits_early: int
    audits_trace: int
    audits_refuted: int

    @property
    def ok(self) -> bool:
        return (
            self.diameter == self.a
            and self.rc_passed
            and self.rc_colors == self.a
            and self.src_passed
            and self.src_colors == self.b
            and self.audits_refuted == self.audits_early + self.audits_trace
        )

    def to_json(self) -> dict:
        out = asdict(self)
        out["margins"] = list(self.margins)
        out["ok"] = self.ok
        return out


def check_point(a: int, b: int, samples: int = 100, seed: int = 0) -> PointResult:
    wg = build_witness(WitnessParams(a, b))
    g = wg.graph
    rc, src = rc_coloring(wg), src_coloring(wg)
    kinds: Counter = Counter()
    refuted = 0
    for c in sample_colorings(wg, samples, seed):
        result = audit_lower_bound(wg, c)
        kinds["trace" if isinstance(result, AuditTrace) else "early"] += 1
        # independent of the audit's own cross-check
        if exists_rainbow_geodesic(g, c, *result.pair) is None:
            refuted += 1
    return PointResult(
        a=a,
        b=b,
        vertices=g.vertex_count,
        edges=g.edge_count,
        diameter=diameter(g),
        rc_passed=is_rainbow_connected(g, rc).passed,
        rc_colors=len(used_colors(rc)),
        src_passed=is_strong_rainbow_connected(g, src).passed,
        src_colors=len(used_colors(src)),
        margins=pigeonhole_margins(wg.params),
        audits_early=kinds["early"],
        audits_trace=kinds["trace"],
        audits_refuted=refuted,
    )


def grid(a_max: int, b_max: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(3, a_max + 1) for b in range(a, b_max + 1)]


def sweep(a_max: int, b_max: int, samples: int = 100, seed: int = 0) -> list[PointResult]:
    return [check_point(a, b, samples, seed) for a, b in grid(a_max, b_max)]
