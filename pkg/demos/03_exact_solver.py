"""Exact rc and src of small graphs by symmetry-broken exhaustive search.

Run: python demos/03_exact_solver.py
"""
from rainbowconn import build_cycle, build_path, build_star, canonical_colorings, rc_exact, src_exact

# %% colorings are enumerated once per renaming of colors
print("m=3, k=2:", list(canonical_colorings(3, 2)))

# %% cycles: rc = src = ceil(n/2)
for n in range(4, 9):
    g = build_cycle(n)
    rc, src = rc_exact(g), src_exact(g)
    print(f"C_{n}: rc={rc.value} src={src.value} (tested {rc.colorings_tested}+{src.colorings_tested} colorings)")

# %% stars separate nothing, paths need every edge distinct
print("src(K_1,4) =", src_exact(build_star(4)).value)
res = rc_exact(build_path(5))
print("rc(P_5) =", res.value, "certificate", res.certificate.colors)
