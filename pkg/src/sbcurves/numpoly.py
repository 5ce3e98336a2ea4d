"""Exact arithmetic on linear numerical polynomials r*t + s.

Subschemes of projective space that are curves-and-points have linear
Hilbert polynomials.  Whether any subscheme with a given polynomial exists,
and how large h^1 of its structure sheaf can be, both reduce to integer
arithmetic on the coefficients (r, s) through the two-binomial
decomposition implemented here.  Everything is exact; floats are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantError, PreconditionError


def _check_int(name, value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvariantError(f"{name} must be an exact integer, got {value!r}")


@dataclass(frozen=True)
class NumPoly:
    """The linear numerical polynomial phi(t) = r*t + s."""

    r: int
    s: int

    def __post_init__(self):
        _check_int("r", self.r)
        _check_int("s", self.s)

    def __call__(self, t: int) -> int:
        return self.r * t + self.s

    def __str__(self) -> str:
        if self.s == 0:
            return f"{self.r}t"
        return f"{self.r}t{self.s:+d}"


@dataclass(frozen=True)
class BinomialDecomposition:
    """Coefficients (m0, m1) of the two-binomial expansion of a linear polynomial.

    The expansion evaluates to m0 + m1*t + (m1 - m1^2)/2; the division by 2
    is exact because m1 - m1^2 is a product of consecutive integers.
    """

    m0: int
    m1: int

    def value_at(self, t: int) -> int:
        return self.m0 + self.m1 * t + (self.m1 - self.m1 * self.m1) // 2

    def to_poly(self) -> NumPoly:
        """Reassemble the linear polynomial this decomposition came from."""
        return NumPoly(self.m1, self.value_at(0))


def decompose(poly: NumPoly) -> BinomialDecomposition:
    """Rewrite r*t + s as the binomial expansion, by comparing coefficients.

    m1 equals r and m0 equals s + (m1^2 - m1)/2.  Rejects r < 0: a negative
    leading coefficient cannot be the polynomial of a curves-and-points
    subscheme, so it signals malformed input rather than emptiness.
    """
    if poly.r < 0:
        raise PreconditionError(
            f"leading coefficient must be nonnegative, got r={poly.r}"
        )
    m1 = poly.r
    m0 = poly.s + (m1 * m1 - m1) // 2
    return BinomialDecomposition(m0=m0, m1=m1)


def hilb_nonempty(poly: NumPoly) -> bool:
    """Whether some subscheme of projective space has Hilbert polynomial ``poly``.

    The criterion is m0 >= m1 >= 0 on the binomial decomposition.
    """
    dec = decompose(poly)
    return dec.m0 >= dec.m1 >= 0


def h1_upper_bound(r: int, h0: int) -> int:
    """Largest possible h^1 of the structure sheaf of a degree-r subscheme with given h^0.

    Returns (r^2 - 3r)/2 + h0 (the division is exact: r^2 - 3r is even).
    Requires r >= 1: the bound is about subschemes with a curve component.
    """
    _check_int("r", r)
    _check_int("h0", h0)
    if r < 1:
        raise PreconditionError(f"r must be >= 1, got {r}")
    if h0 < 0:
        raise PreconditionError(f"h0 must be >= 0, got {h0}")
    return (r * r - 3 * r) // 2 + h0
