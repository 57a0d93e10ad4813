"""Build the witness graphs G(a, b) and look at their shape.

Run: python demos/01_witness_graphs.py
"""
from rainbowconn import bfs_distances, build_witness, diameter

# %% G(3, 3): an 18-cycle, two hubs, one pendant vertex
wg = build_witness((3, 3))
g = wg.graph
print(f"G(3,3): n={wg.n}, {g.vertex_count} vertices, {g.edge_count} edges")
print(f"hub w = {wg.w_id} (degree {g.degree(wg.w_id)}), hub v = {wg.v_id} (degree {g.degree(wg.v_id)})")
print(f"pendant path u_1..u_{wg.a - 2}: {wg.path_ids}")

# %% the diameter equals a, realized between w and u_1
for a, b in [(3, 3), (3, 5), (4, 5), (6, 6)]:
    wg = build_witness((a, b))
    d = bfs_distances(wg.graph, wg.w_id).dist[wg.u(1)]
    print(f"G({a},{b}): diameter {diameter(wg.graph)}, d(w, u_1) = {d}")
