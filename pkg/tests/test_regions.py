import random

import pytest

from wordcones.polyhedra import (cone_equal, hcone, interior_point,
                                 irredundant_h, nonneg_orthant)
from wordcones.regions import (apply_braid_triple, braid_move_map,
                               braid_move_count, class_region_isomorphism_report,
                               default_move_path, det, detour_move_path,
                               evaluate, match_spanned_regions,
                               minimal_braid_path, orthant_restriction_analysis,
                               region_graph, simplicial_decomposition,
                               standard_atlas, transition_atlas)
from wordcones.words import (is_connected, random_reduced_word,
                             standard_words)


def test_braid_triple_examples():
    assert apply_braid_triple(0, 0, 0) == (0, 0, 0)
    assert apply_braid_triple(2, 5, 3) == (6, 2, 5)


def test_braid_triple_involution_random():
    rng = random.Random(1)
    for _ in range(200):
        triple = tuple(rng.randrange(-20, 21) for _ in range(3))
        assert apply_braid_triple(*apply_braid_triple(*triple)) == triple


def test_braid_branch_matrices_agree_on_guard():
    (sign_low, low), (sign_high, high) = braid_move_map()
    assert sign_low == 1 and sign_high == -1
    for a, b in ((0, 0), (3, -1), (2, 7)):
        triple = (a, b, a)  # guard boundary a = c
        via_low = tuple(sum(m * t for m, t in zip(row, triple)) for row in low)
        via_high = tuple(sum(m * t for m, t in zip(row, triple)) for row in high)
        assert via_low == via_high == apply_braid_triple(*triple)


def test_atlas_region_counts(atlas2, atlas3):
    assert len(atlas2.regions) == 2
    assert atlas2.histogram() == {1: 2}
    assert len(atlas3.regions) == 10
    assert atlas3.histogram() == {3: 8, 4: 2}


def test_rank1_atlas_is_trivial():
    atlas = standard_atlas(1)
    assert len(atlas.regions) == 1
    assert atlas.regions[0].facet_count == 0
    assert atlas.regions[0].matrix == ((1,),)


def test_minimal_braid_path_lengths():
    for rank, expected in ((2, 1), (3, 4), (4, 10)):
        j, jp = standard_words(rank)
        path = minimal_braid_path(j, jp)
        assert braid_move_count(path) == expected


def test_region_maps_are_unimodular(atlas2, atlas3, atlas4):
    for atlas in (atlas2, atlas3, atlas4):
        for region in atlas.regions:
            assert det(region.matrix) in (1, -1)


def test_distinct_matrices(atlas3, atlas4):
    for atlas in (atlas3, atlas4):
        assert len({r.matrix for r in atlas.regions}) == len(atlas.regions)


def test_evaluate_examples():
    j, jp = standard_words(2)
    assert evaluate(j, jp, (2, 5, 3)) == (6, 2, 5)
    assert evaluate(j, jp, (0, 0, 0)) == (0, 0, 0)


def test_evaluate_round_trip_and_atlas_agreement(atlas2, atlas3):
    rng = random.Random(99)
    for atlas in (atlas2, atlas3):
        j, jp = atlas.src, atlas.dst
        back = default_move_path(jp, j)
        for _ in range(500):
            x = tuple(rng.randrange(0, 30) for _ in range(atlas.dim))
            y = atlas.evaluate(x)
            assert evaluate(jp, j, y, back) == x
            region = atlas.region_containing(x)
            assert region.cone.contains(x)
            assert region.apply(x) == y


def test_interior_points_in_exactly_one_region(atlas3):
    rng = random.Random(4)
    hits = 0
    for _ in range(200):
        x = tuple(rng.randrange(0, 40) for _ in range(atlas3.dim))
        containing = atlas3.regions_containing(x)
        assert len(containing) >= 1
        if len(containing) == 1:
            hits += 1
            assert atlas3.region_containing(x) is containing[0]
    assert hits > 100  # most random points are interior to one region


def test_region_witnesses_are_interior(atlas3):
    for region in atlas3.regions:
        assert region.cone.contains_strictly(region.witness)


def test_atlas_covers_space(atlas3):
    rng = random.Random(12)
    for _ in range(200):
        x = tuple(rng.randrange(-25, 26) for _ in range(atlas3.dim))
        assert atlas3.regions_containing(x)


def test_match_spanned_regions_small(atlas2, atlas3):
    rep2 = match_spanned_regions(atlas2)
    assert rep2.ok and len(rep2.matches) == 2 and rep2.minimal_facets == 1
    rep3 = match_spanned_regions(atlas3)
    assert rep3.ok and len(rep3.matches) == 8 and rep3.minimal_facets == 3


def test_orthant_restriction_rank3(atlas3):
    restricted = sorted((r.region_facets, r.restricted_facets)
                        for r in orthant_restriction_analysis(atlas3))
    assert restricted == [(3, 6)] * 8 + [(4, 8), (4, 9)]


def _restricted_cone(atlas, region_index):
    region = atlas.regions[region_index]
    return irredundant_h(hcone(
        region.cone.ineqs + nonneg_orthant(atlas.dim).ineqs, atlas.dim))


def test_simplicial_decomposition_trivial():
    orth = nonneg_orthant(3)
    dec = simplicial_decomposition(orth)
    assert dec.minimal and len(dec.pieces) == 1
    assert cone_equal(dec.pieces[0], orth)


def test_simplicial_decompositions_rank3(atlas3):
    sizes = {}
    for r in orthant_restriction_analysis(atlas3):
        if r.region_facets != 4:
            continue
        cone = _restricted_cone(atlas3, r.region_index)
        dec = simplicial_decomposition(cone)
        assert dec.minimal
        sizes[r.restricted_facets] = len(dec.pieces)
        # pieces are simplicial and sit inside the cone
        for piece in dec.pieces:
            assert len(piece.rays) == atlas3.dim
            assert all(cone.contains(ray) for ray in piece.rays)
    assert sizes == {8: 2, 9: 4}


def test_region_graph_rank2(atlas2):
    graph = region_graph(atlas2)
    assert len(graph) == 2
    assert sum(len(v) for v in graph.values()) // 2 == 1


def test_region_graph_rank3_minimal(atlas3):
    graph = region_graph(atlas3, minimal_only=True)
    assert len(graph) == 8
    assert is_connected(graph)


def test_isomorphism_report_small(atlas2, atlas3):
    for atlas in (atlas2, atlas3):
        report = class_region_isomorphism_report(atlas)
        assert report["match_ok"]
        assert report["class_vertices"] == report["region_vertices"]
        assert report["is_isomorphism"]


def test_isomorphism_report_rank4(atlas4):
    report = class_region_isomorphism_report(atlas4)
    assert report["class_vertices"] == report["region_vertices"] == 62
    assert report["class_edges"] == report["region_edges"] == 100
    assert report["match_ok"] and report["is_isomorphism"]


def test_path_independence(atlas2, atlas3):
    for atlas in (atlas2, atlas3):
        j, jp = atlas.src, atlas.dst
        alt = detour_move_path(j, jp)
        assert list(alt) != list(atlas.moves)
        other = transition_atlas(j, jp, alt)
        assert {(r.matrix, r.cone.ineqs) for r in atlas.regions} == \
            {(r.matrix, r.cone.ineqs) for r in other.regions}


def test_transition_atlas_rejects_rank_mismatch():
    j2, _ = standard_words(2)
    j3, _ = standard_words(3)
    with pytest.raises(ValueError):
        transition_atlas(j2, j3)


def test_atlas_between_random_words_is_consistent():
    rng = random.Random(55)
    src = random_reduced_word(3, rng)
    dst = random_reduced_word(3, rng)
    atlas = transition_atlas(src, dst)
    for _ in range(200):
        x = tuple(rng.randrange(0, 25) for _ in range(atlas.dim))
        region = atlas.region_containing(x)
        assert region.apply(x) == atlas.evaluate(x)


def test_transition_coherence_through_intermediate_words():
    # composing the maps through any intermediate word equals the direct map
    from wordcones.regions import evaluate_along
    rng = random.Random(8)
    for rank in (2, 3, 4):
        j, jp = standard_words(rank)
        mid = random_reduced_word(rank, rng)
        first = default_move_path(j, mid)
        second = default_move_path(mid, jp)
        direct = default_move_path(j, jp)
        for _ in range(300):
            x = tuple(rng.randrange(0, 40) for _ in range(len(j.letters)))
            via = evaluate_along(evaluate_along(x, j.letters, first),
                                 mid.letters, second)
            assert via == evaluate_along(x, j.letters, direct)
