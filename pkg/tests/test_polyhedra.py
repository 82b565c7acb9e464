import random

import pytest

from wordcones.polyhedra import (DegenerateConeError, NonPointedError,
                                 cone_equal, cone_from_rays, dot,
                                 extreme_rays, hcone, implies, intersect,
                                 interior_point, irredundant_h, lp_feasible,
                                 nonneg_orthant, primitive,
                                 solve_inequalities, subtract_full_dim, vcone)


def test_primitive_normalisation():
    assert primitive((4, -6, 0)) == (2, -3, 0)
    assert primitive((0, 0)) == (0, 0)
    from fractions import Fraction
    assert primitive((Fraction(1, 2), Fraction(-3, 4))) == (2, -3)


def test_lp_feasible_examples():
    c = hcone([(1, 0), (-1, 0)], 2)
    assert lp_feasible(c)
    assert not lp_feasible(c, strict=[0])
    c2 = hcone([(1, 0)], 2)
    assert lp_feasible(c2, strict=[0])


def test_lp_feasible_empty_system():
    assert lp_feasible(hcone([], 3))


def test_solution_satisfies_system():
    rng = random.Random(42)
    for _ in range(50):
        dim = rng.randrange(2, 6)
        rows = [tuple(rng.randrange(-4, 5) for _ in range(dim))
                for _ in range(rng.randrange(1, 8))]
        rows = [r for r in rows if any(r)]
        rhs = [rng.randrange(0, 2) for _ in rows]
        sol = solve_inequalities(rows, rhs, dim)
        if sol is not None:
            assert all(dot(r, sol) >= b for r, b in zip(rows, rhs))


def test_irredundant_drops_implied():
    c = hcone([(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)], 3)
    red = irredundant_h(c)
    assert set(red.ineqs) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert red.irredundant


def test_irredundant_each_facet_necessary():
    c = irredundant_h(hcone([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)], 3))
    for i, g in enumerate(c.ineqs):
        rest = [a for j, a in enumerate(c.ineqs) if j != i]
        assert not implies(rest, g, 3)


def test_irredundant_order_independent():
    rng = random.Random(9)
    base = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (2, 1, 1)]
    reference = irredundant_h(hcone(base, 3)).ineqs
    for _ in range(5):
        shuffled = base[:]
        rng.shuffle(shuffled)
        assert irredundant_h(hcone(shuffled, 3)).ineqs == reference


def test_irredundant_rejects_degenerate():
    with pytest.raises(DegenerateConeError):
        irredundant_h(hcone([(1, 0), (-1, 0)], 2))


def test_extreme_rays_orthant():
    assert extreme_rays(nonneg_orthant(3)).rays == \
        ((0, 0, 1), (0, 1, 0), (1, 0, 0))


def test_extreme_rays_halfplane_wedge():
    c = hcone([(1, 0), (0, 1), (1, -1)], 2)
    assert set(extreme_rays(c).rays) == {(1, 0), (1, 1)}


def test_extreme_rays_reports_non_pointed():
    with pytest.raises(NonPointedError) as err:
        extreme_rays(hcone([(1, 0)], 2))
    witness = err.value.witness
    assert witness[0] == 0 and witness[1] != 0


def test_cone_from_rays_single_ray():
    h = cone_from_rays(vcone([(1, 1)], 2))
    expected = hcone([(1, -1), (-1, 1), (1, 0)], 2)
    assert cone_equal(h, expected)
    assert set(h.ineqs) == set(expected.ineqs)


def test_cone_from_rays_orthant():
    h = cone_from_rays(vcone([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3))
    assert cone_equal(h, nonneg_orthant(3))


def _random_pointed_cone(rng, dim, extra):
    # rays in the open halfspace x_0 > 0 form a pointed, full-dimensional cone
    rays = [tuple([1] + [0] * (dim - 1))]
    for i in range(1, dim):
        rays.append(tuple(1 if j in (0, i) else 0 for j in range(dim)))
    for _ in range(extra):
        rays.append(tuple([rng.randrange(1, 5)] +
                          [rng.randrange(-3, 4) for _ in range(dim - 1)]))
    return vcone(rays, dim)


def test_round_trip_random_cones():
    rng = random.Random(77)
    for dim in (2, 3, 4, 6, 10):
        for _ in range(3):
            v = _random_pointed_cone(rng, dim, extra=3)
            h = cone_from_rays(v)
            v2 = extreme_rays(h)
            assert cone_equal(cone_from_rays(v2), h)
            assert set(v2.rays) <= set(v.rays)


def _kernel_direction(rows, dim):
    """A nonzero rational solution of rows . x = 0, or None."""
    from fractions import Fraction
    m = [[Fraction(x) for x in r] for r in rows]
    lead = {}
    rank = 0
    for c in range(dim):
        piv = next((r for r in range(rank, len(m)) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        lead[rank] = c
        rank += 1
    free = [c for c in range(dim) if c not in lead.values()]
    if not free:
        return None
    vec = [Fraction(0)] * dim
    vec[free[0]] = Fraction(1)
    for r, c in lead.items():
        vec[c] = -m[r][free[0]]
    return vec


def _brute_force_rays(ineqs, dim):
    """Reference extreme-ray enumeration: directions cut out by (dim-1)
    independent active hyperplanes, kept when feasible and extreme."""
    from itertools import combinations

    from wordcones.regions import matrix_rank
    out = set()
    for subset in combinations(range(len(ineqs)), dim - 1):
        rows = [ineqs[i] for i in subset]
        if matrix_rank(rows) != dim - 1:
            continue
        vec = _kernel_direction(rows, dim)
        if vec is None:
            continue
        for cand in (primitive(vec), primitive([-x for x in vec])):
            if all(dot(a, cand) >= 0 for a in ineqs):
                active = [a for a in ineqs if dot(a, cand) == 0]
                if matrix_rank(active) == dim - 1:
                    out.add(cand)
    return out


def test_extreme_rays_against_brute_force():
    rng = random.Random(404)
    for _ in range(15):
        dim = rng.randrange(2, 5)
        ineqs = []
        while len(ineqs) < dim + 2:
            v = tuple(rng.randrange(-3, 4) for _ in range(dim))
            if any(v):
                ineqs.append(v)
        eye = [tuple(1 if i == j else 0 for j in range(dim))
               for i in range(dim)]
        cone = hcone(ineqs + eye, dim)  # the orthant part keeps it pointed
        assert set(extreme_rays(cone).rays) == _brute_force_rays(cone.ineqs, dim)


def test_cone_equal_examples():
    orth = nonneg_orthant(3)
    assert cone_equal(orth, orth)
    assert cone_equal(orth, extreme_rays(orth))
    from wordcones.lusztig import lusztig_cone
    from wordcones.words import parse_word
    c = lusztig_cone(parse_word("132132")).with_nonneg()
    assert not cone_equal(c, nonneg_orthant(6))
    # witness: e_1 is in the orthant but violates c >= a + d
    assert not c.contains((1, 0, 0, 0, 0, 0))


def test_intersect():
    orth = nonneg_orthant(2)
    assert cone_equal(intersect(orth, orth), orth)
    free = hcone([], 2)
    c = hcone([(1, -1)], 2)
    assert cone_equal(intersect(c, free), c)


def test_subtract_full_dim_covers():
    orth = nonneg_orthant(2)
    half = ((1, -1),)
    remainder = subtract_full_dim([tuple(orth.ineqs)], half, 2)
    assert len(remainder) == 1
    # remainder is the wedge 0 <= x1 <= x2
    assert interior_point(remainder[0], 2) is not None
    gone = subtract_full_dim(remainder, ((-1, 1),), 2)
    assert gone == []
