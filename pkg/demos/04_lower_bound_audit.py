"""Replay the pigeonhole refutation on colorings with fewer than b colors.

Run: python demos/04_lower_bound_audit.py
"""
from collections import Counter

from rainbowconn import AuditTrace, audit_lower_bound, build_witness, pigeonhole_margins, src_coloring
from rainbowconn.audit import sample_colorings

wg = build_witness((3, 3))

# %% merge two colors of the strong 3-coloring: the audit finds a bad pair
merged = src_coloring(wg).recolor({3: 2})
result = audit_lower_bound(wg, merged)
print(type(result).__name__, result.to_json())

# %% margins behind the argument
print("margins for (3,3):", pigeonhole_margins(wg.params))

# %% sampled (b-1)-colorings of G(4, 6) are all refuted
wg = build_witness((4, 6))
kinds = Counter(type(audit_lower_bound(wg, c)).__name__ for c in sample_colorings(wg, 100, seed=0))
print("G(4,6), 100 samples:", dict(kinds))
trace = next(audit_lower_bound(wg, c) for c in sample_colorings(wg, 10, seed=0)
             if isinstance(audit_lower_bound(wg, c), AuditTrace))
print(f"A-class: color {trace.set_a_color}, {len(trace.set_a_edges)} edges; "
      f"B-class: color {trace.set_b_color}, {len(trace.set_b_edges)} edges; "
      f"pair {trace.chosen_pair} at cycle distance {trace.cycle_distance}")
