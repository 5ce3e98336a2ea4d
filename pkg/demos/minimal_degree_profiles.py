"""Walk through the minimal-degree classification for a division algebra of index 5.

A subscheme of the associated variety with linear polynomial 5t contains a
unique curve of degree 5, and the constraints leave exactly four numerical
shapes.  This script reproduces that case analysis step by step.
"""

from sbcurves import (
    AlgebraInvariants,
    NumPoly,
    decompose,
    enumerate_profiles,
    euler_admissible,
    h1_upper_bound,
    hilb_nonempty,
)

alg = AlgebraInvariants(d=5, n=5, m=5, is_division=True)
poly = NumPoly(5, 0)

print("Algebra invariants:", alg)
print("Queried polynomial:", poly)
print()

# Step 1: the Hilbert scheme of 5t is nonempty at all.
dec = decompose(poly)
print(f"binomial decomposition: m0={dec.m0}, m1={dec.m1}")
print("nonempty Hilbert scheme:", hilb_nonempty(poly))
print()

# Step 2: a reduced connected curve of degree 5 has h^1 at most 6, and the
# index forces h^1 - 1 to be divisible by 5, leaving h^1 = 1 or 6.
bound = h1_upper_bound(5, 1)
allowed = [h1 for h1 in range(bound + 1) if euler_admissible(1 - h1, 5)]
print(f"h^1 bound for a connected reduced curve: {bound}")
print(f"values compatible with the index: {allowed}")
print()

# Step 3: the full rule engine.
print("admissible profiles for 5t:")
for profile in enumerate_profiles(alg, poly):
    points = list(profile.extra_point_degrees) or "none"
    print(
        f"  {profile.narrative.value:<18} h0={profile.h0}  h1={profile.h1}  "
        f"residual points: {points}"
    )
print()

# Step 4: a constant term the index cannot divide kills every candidate.
print("profiles for 5t+1:", enumerate_profiles(alg, NumPoly(5, 1)))

# Step 5: with constant term 5 a smooth curve can carry one residual point.
print("profiles for 5t+5:")
for profile in enumerate_profiles(alg, NumPoly(5, 5)):
    print(
        f"  {profile.narrative.value:<18} h0={profile.h0}  h1={profile.h1}  "
        f"points={list(profile.extra_point_degrees)}  [{profile.provenance}]"
    )
