"""The explicit a- and b-colorings of G(a, b), checked by the verifiers.

Run: python demos/02_colorings_and_verification.py
"""
from rainbowconn import (
    build_witness,
    exists_rainbow_geodesic,
    is_rainbow_connected,
    is_strong_rainbow_connected,
    rc_coloring,
    src_coloring,
    used_colors,
)

wg = build_witness((4, 5))
g = wg.graph
rc, src = rc_coloring(wg), src_coloring(wg)

# %% the rc coloring uses a colors and rainbow-connects every pair
report = is_rainbow_connected(g, rc)
print(f"rc coloring: colors {sorted(used_colors(rc))}, rainbow connected: {report.passed}")

# %% it is not a strong rainbow coloring: v_1 and v_3 have no rainbow geodesic
strong = is_strong_rainbow_connected(g, rc)
print(f"rc coloring strongly rainbow connected: {strong.passed}, first bad pair {strong.violating_pair}")

# %% the src coloring uses b colors and passes the strong check
print(f"src coloring: colors {sorted(used_colors(src))}, strong: {is_strong_rainbow_connected(g, src).passed}")
v1, v5 = wg.cycle(1), wg.cycle(5)
print(f"rainbow geodesic v_1 -> v_5 under src: {exists_rainbow_geodesic(g, src, v1, v5)}")

# %% reports serialize to JSON
print(strong.to_json())
