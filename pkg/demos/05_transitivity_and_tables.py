"""Transitivity survey and the enhanced-cube distinguishing grid.

Everything here is recomputed from orbits, never quoted: the locally twisted
cube at n = 3 comes out vertex-transitive (its dihedral group acts in one
orbit) even though it stops being so from n = 4 on, and the enhanced-cube
grid shows distinguishing number 3 at (n,k) = (3,2) and (4,2), where the
plain product structure K_2 box K_4 / K_2 box K_{4,4} forces a symmetric
2-coloring pattern.
"""

from cubesym.tables import enhanced_dist_table, summary_table, transitivity_table

for n in (3, 4):
    table = transitivity_table(n)
    print(f"transitivity at n = {n} (vertex / edge / arc / distance):")
    for name, row in table["rows"].items():
        if row.get("status") != "ok":
            print(f"  {name:18s} {row['status']}")
            continue
        flags = "".join("Y" if row[key] else "n" for key in
                        ("vertex_transitive", "edge_transitive",
                         "arc_transitive", "distance_transitive"))
        print(f"  {name:18s} {flags}")
    print()

print("dist(Q_{n,k}) grid, computed exactly (rows k, columns n):")
grid = enhanced_dist_table(5)["cells"]
ns = range(2, 6)
print("      " + "  ".join(f"n={n}" for n in ns))
for k in range(1, 5):
    cells = []
    for n in ns:
        v = grid.get(f"{n},{k}", {}).get("value")
        cells.append("  ." if v is None else f"  {v}")
    print(f"  k={k}" + "".join(cells))
print("  (plus the out-of-grid check dist(Q_{6,4}) =",
      str(grid["6,4"]["value"]) + ")")

print()
print("parameter summary at n = 6:")
rows = summary_table(6)["rows"]
for name in ("hypercube", "folded", "augmented", "locally-twisted"):
    row = rows[name]
    print(f"  {name:16s} det={row.get('det')} dist={row.get('dist')} "
          f"cost={row.get('cost')}")
