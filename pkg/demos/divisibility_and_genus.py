"""The number-theoretic constraints: degree and Euler divisibility, genus bounds.

Curve degrees on a variety of index n are multiples of n (n odd) or n/2
(n even); the same divisor controls Euler characteristics; a geometrically
integral nondegenerate curve obeys the classical genus bound; and a smooth
degree-n genus-1 curve moves in an n^2-dimensional family.
"""

from sbcurves import (
    castelnuovo,
    degree_admissible,
    euler_admissible,
    min_curve_degree,
    normal_bundle_euler,
)

print("minimal curve degree by index:")
for n in [2, 3, 4, 5, 8, 9, 16]:
    f = min_curve_degree(n)
    admissible = [deg for deg in range(1, 20) if degree_admissible(deg, n)]
    print(f"  n={n:<3} f(n)={f:<3} admissible degrees < 20: {admissible}")
print()

print("Euler characteristics an index-5 variety allows, |chi| <= 12:")
print(" ", [chi for chi in range(-12, 13) if euler_admissible(chi, 5)])
print()

print("genus bound for a degree-n curve spanning dimension n-1 (always 1):")
for n in range(4, 10):
    print(f"  n={n}: {castelnuovo(n, n)}")
print()

print("the bound grows quadratically once the degree exceeds the dimension:")
for deg in [5, 10, 15, 20, 25]:
    print(f"  degree {deg:>2} in P^4: g_max = {castelnuovo(deg, 5).g_max}")
print()

print("normal-bundle Euler characteristic of a smooth degree-n genus-1 curve:")
for n in range(3, 13):
    print(f"  n={n:<3} chi(N) = {normal_bundle_euler(n, n, 1)}")
