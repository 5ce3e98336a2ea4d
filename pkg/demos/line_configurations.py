"""The standard Galois-stable line configurations and their invariants.

Each configuration is a graph (lines as edges, intersection points as
vertices) carrying a permutation action; degree, connected components and
arithmetic genus are read off the graph, and the p-gon recognizer picks out
the minimal-degree reducible shape at odd prime index.
"""

from sbcurves import complete, cube, disjoint_lines, is_pgon, ngon, report

print("two disjoint lines (the Klein-orbit curve of degree 2 on a biquaternion variety):")
print(" ", report(disjoint_lines()))
print()

print("cycles of lines (degree p, arithmetic genus 1):")
for p in [3, 5, 7]:
    print(f"  ngon({p}):", report(ngon(p)))
print()

print("cube configurations (degree r*2^(r-1)):")
for r in [2, 3, 4]:
    rep = report(cube(r))
    print(f"  cube({r}): degree={rep.degree}  h1={rep.h1}  edge_transitive={rep.edge_transitive}")
print()

print("complete configurations on n points (degree n(n-1)/2):")
for n in [4, 5, 6]:
    rep = report(complete(n))
    print(f"  complete({n}): degree={rep.degree}  h1={rep.h1}")
print()

print("p-gon recognition (connected, p lines, p points, two lines per point, transitive):")
for config, p, label in [
    (ngon(5), 5, "ngon(5)"),
    (ngon(9), 9, "ngon(9)"),
    (complete(5), 5, "complete(5)"),
    (cube(3), 3, "cube(3)"),
]:
    print(f"  is_pgon({label}, {p}) = {is_pgon(config, p)}")
