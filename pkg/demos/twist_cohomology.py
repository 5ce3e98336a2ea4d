"""Exact cohomology of twists on embedded line configurations.

Sections of O(m) on a union of lines are one binary form per line agreeing
at the intersection points; the kernel and cokernel of the agreement matrix
give h^0 and h^1 with exact rational arithmetic.  The n-gon embedded at the
standard basis vectors is the witness configuration: h^1(O) = 1 while
h^1(O(1)) vanishes, and every vertex is a node.
"""

from fractions import Fraction

from sbcurves import (
    EmbeddedConfig,
    cube,
    disjoint_lines,
    ngon,
    smoothing_hypotheses,
    standard_embedding,
    twist_cohomology,
)

print("twists of the standard 5-gon in 5 coordinates:")
pentagon = standard_embedding(ngon(5), 5)
for m in range(4):
    print(" ", twist_cohomology(pentagon, m))
print()

print("smoothing hypotheses:")
print("  5-gon:          ", smoothing_hypotheses(pentagon))
print("  cube(3) in d=8: ", smoothing_hypotheses(standard_embedding(cube(3), 8)))
print("  disjoint lines: ", smoothing_hypotheses(standard_embedding(disjoint_lines(), 4)))
print()

# The outputs do not depend on the chosen coordinate representatives: put
# the triangle at three non-basis points and the numbers match ngon(3).
triangle = ngon(3)
skew = EmbeddedConfig(
    triangle,
    3,
    {
        0: (Fraction(1), Fraction(1, 2), Fraction(0)),
        1: (Fraction(0), Fraction(2), Fraction(-1)),
        2: (Fraction(3), Fraction(0), Fraction(1, 3)),
    },
)
print("triangle at skew rational points vs the standard embedding:")
for m in range(3):
    a = twist_cohomology(skew, m)
    b = twist_cohomology(standard_embedding(triangle, 3), m)
    print(f"  m={m}: skew (h0,h1)=({a.h0},{a.h1})  standard (h0,h1)=({b.h0},{b.h1})")
