"""Cohomology of twists O(m) on a line configuration with explicit coordinates.

A section of O(m) on a union of lines is one binary form of degree m per
line, subject to agreement of the branch values at every intersection
point.  Gluing the structure sheaves of the lines along the vertices gives
a two-term complex

    (forms of degree m, one per line)  -->  (one value per extra branch at each vertex)

whose kernel is H^0 and whose cokernel is H^1; no higher terms enter for
m >= 0 because a line carries no higher cohomology in those twists.

Lines are parametrized by their two endpoint representatives, so a form
evaluates at an endpoint to its leading or trailing coefficient, and the
stored coordinate vector of a vertex fixes the fiber trivialization that
makes values on different branches comparable.  Rescaling any vertex vector
rescales all branch values at that vertex alike, so the computed dimensions
do not depend on the chosen representatives.

All ranks are computed by fraction-exact Gaussian elimination; no floats
anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantError, PreconditionError
from .lineconfig import LineConfig


def _rank(rows, ncols):
    """Rank over the rationals; pivots on the first nonzero entry per column."""
    mat = [[Fraction(x) for x in row] for row in rows]
    nrows = len(mat)
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, nrows):
            if mat[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        lead = mat[rank][col]
        for i in range(rank + 1, nrows):
            factor = mat[i][col]
            if factor:
                ratio = factor / lead
                row_i, row_r = mat[i], mat[rank]
                for j in range(col, ncols):
                    row_i[j] -= ratio * row_r[j]
        rank += 1
        if rank == nrows:
            break
    return rank


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise InvariantError(
        f"coordinates must be exact rationals (int or Fraction), got {value!r}"
    )


def _direction(vec):
    # proportional vectors agree after dividing by the first nonzero entry
    lead = next(x for x in vec if x)
    return tuple(x / lead for x in vec)


class EmbeddedConfig:
    """A line configuration with exact rational coordinates for each vertex.

    ``ambient_dim`` is the number d of homogeneous coordinates (the ambient
    projective space has dimension d - 1, so d >= 3).  Coordinate vectors
    must be nonzero and pairwise non-proportional; in particular the two
    endpoints of every edge span an honest line.
    """

    __slots__ = ("base", "ambient_dim", "coords")

    def __init__(self, base: LineConfig, ambient_dim: int, coords):
        if isinstance(ambient_dim, bool) or not isinstance(ambient_dim, int) or ambient_dim < 3:
            raise InvariantError(
                f"ambient_dim must be an integer >= 3, got {ambient_dim!r}"
            )
        clean = {}
        for v in base.vertices:
            if v not in coords:
                raise InvariantError(f"vertex {v!r} has no coordinates")
            vec = tuple(_as_fraction(x) for x in coords[v])
            if len(vec) != ambient_dim:
                raise InvariantError(
                    f"vertex {v!r} has {len(vec)} coordinates, expected {ambient_dim}"
                )
            if not any(vec):
                raise InvariantError(f"vertex {v!r} has the zero vector as coordinates")
            clean[v] = vec
        directions = {}
        for v in base.vertices:
            direction = _direction(clean[v])
            if direction in directions:
                raise InvariantError(
                    f"vertices {directions[direction]!r} and {v!r} have proportional "
                    "coordinate vectors"
                )
            directions[direction] = v
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "coords", clean)

    def __setattr__(self, name, value):
        raise AttributeError("EmbeddedConfig is immutable")


@dataclass(frozen=True)
class CohomReport:
    """Cohomology of one twist, plus whether the vertices span the ambient space."""

    m: int
    h0: int
    h1: int
    chi: int
    spans: bool


@dataclass(frozen=True)
class SmoothingReport:
    """The cohomological and nodality hypotheses of the smoothing argument.

    Certifies only the hypotheses (h^1(O) = 1, h^1(O(1)) = 0, every vertex a
    node), not smoothability itself.
    """

    h1_O_equals_1: bool
    h1_O1_vanishes: bool
    nodal: bool


def standard_embedding(config: LineConfig, d: int) -> EmbeddedConfig:
    """Place the i-th vertex at the i-th standard basis vector of length d.

    Requires at most d vertices; basis vectors are pairwise independent, so
    the result always satisfies the embedding invariants.  With more
    vertices than d there is no canonical choice and the caller must supply
    coordinates explicitly.
    """
    if isinstance(d, bool) or not isinstance(d, int) or d < 3:
        raise PreconditionError(f"ambient dimension d must be an integer >= 3, got {d!r}")
    if len(config.vertices) > d:
        raise PreconditionError(
            f"{len(config.vertices)} vertices do not fit in {d} coordinates; "
            "supply explicit coordinates instead"
        )
    coords = {
        v: tuple(Fraction(1 if j == i else 0) for j in range(d))
        for i, v in enumerate(config.vertices)
    }
    return EmbeddedConfig(config, d, coords)


def _spans(cfg: EmbeddedConfig) -> bool:
    rows = [cfg.coords[v] for v in cfg.base.vertices]
    return _rank(rows, cfg.ambient_dim) == cfg.ambient_dim


def twist_cohomology(cfg: EmbeddedConfig, m: int) -> CohomReport:
    """h^0 and h^1 of O(m) on the configuration, for m >= 0.

    Builds the agreement matrix taking the per-line forms to the pairwise
    differences of their values at each vertex, evaluated in the fiber
    trivializations fixed by the vertex representatives, and returns the
    exact kernel and cokernel dimensions.  Negative m is rejected: the
    two-term complex is only valid while the lines carry no h^1.
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise PreconditionError(f"twist must be a nonnegative integer, got {m!r}")
    base = cfg.base
    width = m + 1
    ncols = len(base.edges) * width
    position = {edge: i for i, edge in enumerate(base.edges)}

    def value_column(edge, v):
        # evaluation at parameter (1,0) or (0,1) picks the x^m or y^m coefficient
        offset = 0 if edge[0] == v else m
        return position[edge] * width + offset

    rows = []
    for v in base.vertices:
        incident = [edge for edge in base.edges if v in edge]
        reference = incident[0]
        for other in incident[1:]:
            row = [0] * ncols
            row[value_column(reference, v)] = 1
            row[value_column(other, v)] = -1
            rows.append(row)

    rank = _rank(rows, ncols)
    h0 = ncols - rank
    h1 = len(rows) - rank
    return CohomReport(m=m, h0=h0, h1=h1, chi=h0 - h1, spans=_spans(cfg))


def smoothing_hypotheses(cfg: EmbeddedConfig) -> SmoothingReport:
    """Check h^1(O) = 1, h^1(O(1)) = 0 and that every vertex joins exactly two lines."""
    at_zero = twist_cohomology(cfg, 0)
    at_one = twist_cohomology(cfg, 1)
    nodal = all(count == 2 for count in cfg.base.branch_counts().values())
    return SmoothingReport(
        h1_O_equals_1=at_zero.h1 == 1,
        h1_O1_vanishes=at_one.h1 == 0,
        nodal=nodal,
    )
