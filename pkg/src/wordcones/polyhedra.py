"""Exact rational polyhedral kernel for homogeneous cones.

Everything here is a *cone*: inequality systems have no constant terms and
ray sets generate conic (not convex) hulls.  All decisions are made in exact
integer/rational arithmetic; there is no floating point anywhere.

Conventions:
- a vector is a tuple of Python ints (arbitrary precision),
- an H-cone is a list of inward normals ``a`` meaning ``a . x >= 0``,
- a V-cone is a list of primitive generating rays,
- rays and normals are normalised to primitive integer form (denominators
  cleared, divided by the gcd), so parallel vectors compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

Vector = tuple[int, ...]


class DegenerateConeError(ValueError):
    """Raised when an operation needs a full-dimensional cone and got less."""


class NonPointedError(ValueError):
    """Raised when an operation needs a pointed cone; carries a witness line."""

    def __init__(self, witness: Vector):
        super().__init__(f"cone contains the line through {witness}")
        self.witness = witness


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def vneg(a: Sequence) -> Vector:
    return tuple(-x for x in a)


def primitive(vec: Iterable) -> Vector:
    """Scale a rational vector to primitive integer form (direction kept).

    >>> primitive((Fraction(1, 2), Fraction(-3, 4)))
    (2, -3)
    >>> primitive((4, -6, 0))
    (2, -3, 0)
    """
    fracs = [Fraction(x) for x in vec]
    denom = 1
    for f in fracs:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(f * denom) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(0 for _ in ints)
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class HCone:
    """Homogeneous cone {x : a . x >= 0 for every normal a}."""

    dim: int
    ineqs: tuple[Vector, ...]
    irredundant: bool = field(default=False, compare=False)

    def __post_init__(self):
        for a in self.ineqs:
            if len(a) != self.dim:
                raise ValueError(f"normal {a} has wrong dimension (want {self.dim})")

    def contains(self, point: Sequence) -> bool:
        return all(dot(a, point) >= 0 for a in self.ineqs)

    def contains_strictly(self, point: Sequence) -> bool:
        return all(dot(a, point) > 0 for a in self.ineqs)

    def to_json(self) -> dict:
        return {"dim": self.dim, "ineqs": [[str(c) for c in a] for a in self.ineqs]}


@dataclass(frozen=True)
class VCone:
    """Cone generated by non-negative combinations of primitive rays."""

    dim: int
    rays: tuple[Vector, ...]

    def __post_init__(self):
        seen = set()
        for r in self.rays:
            if len(r) != self.dim:
                raise ValueError(f"ray {r} has wrong dimension (want {self.dim})")
            if all(x == 0 for x in r):
                raise ValueError("zero vector is not a ray")
            if r in seen:
                raise ValueError(f"duplicate ray {r}")
            seen.add(r)

    def to_json(self) -> dict:
        return {"dim": self.dim, "rays": [[str(c) for c in r] for r in self.rays]}


def hcone(ineqs: Iterable[Sequence], dim: int, irredundant: bool = False) -> HCone:
    """Build an HCone, normalising and deduplicating the normals."""
    out, seen = [], set()
    for a in ineqs:
        p = primitive(a)
        if all(x == 0 for x in p):
            continue
        if p not in seen:
            seen.add(p)
            out.append(p)
    return HCone(dim, tuple(out), irredundant)


def vcone(rays: Iterable[Sequence], dim: int) -> VCone:
    """Build a VCone, normalising rays and dropping parallel duplicates."""
    out, seen = [], set()
    for r in rays:
        p = primitive(r)
        if all(x == 0 for x in p):
            raise ValueError("zero vector is not a ray")
        if p not in seen:
            seen.add(p)
            out.append(p)
    return VCone(dim, tuple(out))


def nonneg_orthant(dim: int) -> HCone:
    eye = [tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)]
    return HCone(dim, tuple(eye), irredundant=True)


def intersect(a: HCone, b: HCone) -> HCone:
    """Concatenated inequality lists; not reduced to irredundant form."""
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    return hcone(a.ineqs + b.ineqs, a.dim)


# ---------------------------------------------------------------------------
# Exact linear programming (phase-1 simplex with integer pivoting)
# ---------------------------------------------------------------------------

_MAX_PIVOTS = 100_000


def solve_inequalities(rows: Sequence[Vector], rhs: Sequence[int], dim: int
                       ) -> Optional[tuple[Fraction, ...]]:
    """Find x with rows[i] . x >= rhs[i] for all i, or None if infeasible.

    Phase-1 simplex on the standard form with x = x+ - x-.  Bland's rule
    guarantees termination; the tableau is kept in scaled-integer form
    (entry = true value times the running pivot determinant D > 0) so every
    operation is exact integer arithmetic with one exact division per entry.
    """
    m = len(rows)
    if m == 0:
        return (Fraction(0),) * dim
    art_of = {}
    for i in range(m):
        if rhs[i] > 0:
            art_of[i] = 2 * dim + m + len(art_of)
    ncols = 2 * dim + m + len(art_of)
    rhs_col = ncols

    tab = []
    basis = []
    for i in range(m):
        row = [0] * (ncols + 1)
        if i in art_of:
            for j in range(dim):
                row[j] = rows[i][j]
                row[dim + j] = -rows[i][j]
            row[2 * dim + i] = -1
            row[art_of[i]] = 1
            row[rhs_col] = rhs[i]
            basis.append(art_of[i])
        else:
            # multiply by -1 so the slack enters the basis with coefficient +1
            for j in range(dim):
                row[j] = -rows[i][j]
                row[dim + j] = rows[i][j]
            row[2 * dim + i] = 1
            row[rhs_col] = 0
            basis.append(2 * dim + i)
        tab.append(row)

    # phase-1 objective: minimise the sum of artificials.  With artificials
    # basic, the objective row is the sum of their rows.
    obj = [0] * (ncols + 1)
    for i in art_of:
        r = tab[i]
        for j in range(ncols + 1):
            obj[j] += r[j]
    artificial = set(art_of.values())
    det = 1

    for _ in range(_MAX_PIVOTS):
        col = -1
        for j in range(ncols):
            if j not in artificial and obj[j] > 0:
                col = j
                break
        if col < 0:
            break
        # ratio test, Bland tie-break on the basis variable index
        best = None
        for i in range(m):
            piv = tab[i][col]
            if piv > 0:
                key = (Fraction(tab[i][rhs_col], piv), basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise RuntimeError("phase-1 objective unbounded; cannot happen")
        r = best[1]
        pivot = tab[r][col]
        prow = tab[r]
        for i in range(m):
            if i == r:
                continue
            row = tab[i]
            f = row[col]
            for j in range(ncols + 1):
                row[j] = (pivot * row[j] - f * prow[j]) // det
        f = obj[col]
        for j in range(ncols + 1):
            obj[j] = (pivot * obj[j] - f * prow[j]) // det
        det = pivot
        basis[r] = col
    else:
        raise RuntimeError("simplex pivot limit exceeded")

    if obj[rhs_col] != 0:
        return None
    x = [Fraction(0)] * dim
    for i in range(m):
        v = basis[i]
        if v < dim:
            x[v] += Fraction(tab[i][rhs_col], det)
        elif v < 2 * dim:
            x[v - dim] -= Fraction(tab[i][rhs_col], det)
    point = tuple(x)
    assert all(dot(rows[i], point) >= rhs[i] for i in range(m))
    return point


def _scaled_integer_point(point: Sequence[Fraction]) -> Vector:
    denom = 1
    for f in point:
        fr = Fraction(f)
        denom = denom * fr.denominator // gcd(denom, fr.denominator)
    return tuple(int(Fraction(f) * denom) for f in point)


def lp_feasible(cone: HCone, strict: Iterable[int] = ()) -> bool:
    """Is there a point satisfying the cone, strictly on the flagged normals?

    Indices in ``strict`` refer to positions in ``cone.ineqs`` (0-based).
    Empty systems are feasible.  Strictness is scale-free: a . x > 0 has a
    solution iff a . x >= 1 does.
    """
    strict = set(strict)
    rhs = [1 if i in strict else 0 for i in range(len(cone.ineqs))]
    return solve_inequalities(cone.ineqs, rhs, cone.dim) is not None


def interior_point(ineqs: Sequence[Vector], dim: int) -> Optional[Vector]:
    """An integer point satisfying every inequality strictly, or None."""
    sol = solve_inequalities(ineqs, [1] * len(ineqs), dim)
    if sol is None:
        return None
    if len(ineqs) == 0:
        return tuple([1] + [0] * (dim - 1)) if dim else ()
    return _scaled_integer_point(sol)


def is_full_dimensional(ineqs: Sequence[Vector], dim: int) -> bool:
    return interior_point(ineqs, dim) is not None


def implies(ineqs: Sequence[Vector], a: Vector, dim: int) -> bool:
    """Does a . x >= 0 hold on all of {x : ineqs}?  (One exact LP.)"""
    rows = list(ineqs) + [vneg(a)]
    rhs = [0] * len(ineqs) + [1]
    return solve_inequalities(rows, rhs, dim) is None


def irredundant_h(cone: HCone) -> HCone:
    """Minimal inequality sub-list defining the same full-dimensional cone.

    For a full-dimensional cone this is the facet list, unique up to positive
    scaling.  Raises DegenerateConeError when the cone has empty interior.
    """
    if interior_point(cone.ineqs, cone.dim) is None:
        raise DegenerateConeError(
            f"cone is not full-dimensional ({len(cone.ineqs)} inequalities in "
            f"dimension {cone.dim})")
    keep = list(dict.fromkeys(primitive(a) for a in cone.ineqs))
    i = 0
    while i < len(keep):
        rest = keep[:i] + keep[i + 1:]
        if implies(rest, keep[i], cone.dim):
            keep.pop(i)
        else:
            i += 1
    return HCone(cone.dim, tuple(sorted(keep)), irredundant=True)


def facet_count(cone: HCone) -> int:
    c = cone if cone.irredundant else irredundant_h(cone)
    return len(c.ineqs)


# ---------------------------------------------------------------------------
# Double description
# ---------------------------------------------------------------------------

def double_description(ineqs: Sequence[Vector], dim: int
                       ) -> tuple[list[Vector], list[Vector]]:
    """Generators (lines, rays) of {x : a . x >= 0 for a in ineqs}.

    Incremental double description starting from the whole space (a basis of
    lines).  While a constraint meets the lineality space it trades one line
    for a ray; afterwards the classic ray-pairing step with the combinatorial
    adjacency test keeps only extreme rays.
    """
    lines: list[Vector] = [tuple(1 if i == j else 0 for j in range(dim))
                           for i in range(dim)]
    rays: list[Vector] = []
    processed: list[Vector] = []

    def zeroset(r: Vector) -> frozenset[int]:
        return frozenset(i for i, a in enumerate(processed) if dot(a, r) == 0)

    for a in ineqs:
        a = primitive(a)
        if all(x == 0 for x in a):
            continue
        dl = [dot(a, l) for l in lines]
        pivot = next((i for i, d in enumerate(dl) if d != 0), None)
        if pivot is not None:
            z, dz = lines[pivot], dl[pivot]
            if dz < 0:
                z, dz = vneg(z), -dz
            new_lines = []
            for i, l in enumerate(lines):
                if i == pivot:
                    continue
                new_lines.append(primitive(
                    tuple(dz * x - dl[i] * y for x, y in zip(l, z))))
            new_rays = []
            for r in rays:
                dr = dot(a, r)
                new_rays.append(primitive(
                    tuple(dz * x - dr * y for x, y in zip(r, z))))
            new_rays.append(z)
            lines = new_lines
            rays = list(dict.fromkeys(new_rays))
        else:
            pos = [r for r in rays if dot(a, r) > 0]
            neg = [r for r in rays if dot(a, r) < 0]
            if neg:
                zero = [r for r in rays if dot(a, r) == 0]
                keep = pos + zero
                zsets = {r: zeroset(r) for r in rays}
                new = []
                for p in pos:
                    dp = dot(a, p)
                    for n in neg:
                        common = zsets[p] & zsets[n]
                        if any(common <= zsets[r] for r in rays
                               if r is not p and r is not n):
                            continue
                        dn = dot(a, n)
                        new.append(primitive(
                            tuple(dp * x - dn * y for x, y in zip(n, p))))
                rays = list(dict.fromkeys(keep + new))
        processed.append(a)
    return lines, rays


def extreme_rays(cone: HCone) -> VCone:
    """Complete set of primitive extreme rays of a pointed cone."""
    lines, rays = double_description(cone.ineqs, cone.dim)
    if lines:
        raise NonPointedError(lines[0])
    return VCone(cone.dim, tuple(sorted(rays)))


def cone_from_rays(rays: VCone) -> HCone:
    """H-description of the conic hull of the given rays.

    The dual cone {a : a . r >= 0 for all rays r} is computed by double
    description; its lines (one pair of inequalities each) and rays become
    the inequalities.  Round-trips with extreme_rays on pointed
    full-dimensional inputs.
    """
    lines, dual_rays = double_description(rays.rays, rays.dim)
    ineqs: list[Vector] = []
    for l in lines:
        ineqs.append(l)
        ineqs.append(vneg(l))
    ineqs.extend(dual_rays)
    return hcone(ineqs, rays.dim)


def _as_hcone(c) -> HCone:
    if isinstance(c, HCone):
        return c
    if isinstance(c, VCone):
        return cone_from_rays(c)
    raise TypeError(f"expected HCone or VCone, got {type(c).__name__}")


def cone_equal(a, b) -> bool:
    """Set equality of two cones (H or V form) via mutual containment."""
    ha, hb = _as_hcone(a), _as_hcone(b)
    if ha.dim != hb.dim:
        raise ValueError("dimension mismatch")
    return (all(implies(hb.ineqs, g, ha.dim) for g in ha.ineqs)
            and all(implies(ha.ineqs, g, hb.dim) for g in hb.ineqs))


def subtract_full_dim(pieces: list[tuple[Vector, ...]],
                      ineqs: Sequence[Vector], dim: int
                      ) -> list[tuple[Vector, ...]]:
    """Full-dimensional parts of (union of pieces) minus {x : ineqs}.

    Each piece is an inequality tuple.  The difference against one convex
    piece P is the union over j of {g_1 >= 0, ..., g_{j-1} >= 0, g_j < 0};
    only full-dimensional parts are kept (interiors are what matter for
    coverage arguments over closed cones).
    """
    out = []
    for piece in pieces:
        acc = list(piece)
        for g in ineqs:
            cand = acc + [vneg(g)]
            if interior_point(cand, dim) is not None:
                out.append(tuple(cand))
            acc.append(g)
    return out
