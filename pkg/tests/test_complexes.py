"""Combinatorial layer: face sets, subcomplexes, shiftedness, validation."""

import random

import pytest

from polyprod.complexes import (
    SimplicialComplex,
    ensure_valid,
    face_sort_key,
    join_complex,
    mask_from_vertices,
    skeleton,
    submasks,
    validate,
    vertices_from_mask,
)
from polyprod.catalog import (
    all_complexes_on,
    cycle_complex,
    disjoint_points,
    pentagon,
    random_complex,
    random_shifted_complex,
    simplex,
    simplex_boundary,
    square,
    star_complex,
)
from polyprod.errors import (
    FaceNotInComplex,
    GhostVertex,
    InputError,
    NotDownwardClosed,
    SearchBoundExceeded,
)


def test_mask_roundtrip():
    assert mask_from_vertices((1, 3), 4) == 0b101
    assert vertices_from_mask(0b101) == (1, 3)
    assert vertices_from_mask(0) == ()
    with pytest.raises(InputError):
        mask_from_vertices((5,), 4)
    with pytest.raises(InputError):
        mask_from_vertices((0,), 4)


def test_submasks_enumerates_powerset():
    assert sorted(submasks(0b101)) == [0b000, 0b001, 0b100, 0b101]
    assert list(submasks(0)) == [0]


def test_face_sort_key_orders_by_cardinality_then_mask():
    masks = [0b11, 0b100, 0b1, 0b111, 0b10]
    assert sorted(masks, key=face_sort_key) == [0b1, 0b10, 0b100, 0b11, 0b111]


def test_from_maximal_faces_closes_downward():
    k = SimplicialComplex.from_maximal_faces(3, [(1, 2, 3)])
    assert len(k.faces) == 8
    assert k.has_face(())
    assert k.has_face((1, 3))
    assert k.dim() == 2
    assert k.maximal_faces == (0b111,)


def test_from_faces_wraps_without_closure_but_validate_catches_it():
    # from_faces trusts its input; the gap surfaces through validation
    k = SimplicialComplex.from_faces(2, (0, 0b11))
    assert [d.kind for d in validate(k)].count("not_downward_closed") == 2
    with pytest.raises(NotDownwardClosed):
        ensure_valid(k)
    with pytest.raises(InputError):
        SimplicialComplex.from_faces(2, (0b100,))    # vertex beyond m


def test_square_f_and_h_vector():
    k = square()
    assert k.f_vector() == (4, 4)
    assert k.h_vector() == (1, 2, 1)
    assert k.minimal_non_faces() == (0b0101, 0b1010)   # the two diagonals


def test_simplex_boundary_h_vector_all_ones():
    for m in (3, 4, 5):
        assert simplex_boundary(m).h_vector() == (1,) * m


def test_full_subcomplex_relabels_and_keeps_names():
    k = square()
    sub = k.full_subcomplex((1, 3))
    assert sub.m == 2
    assert sub.face_tuples() == ((), (1,), (2,))       # two points, no edge
    assert sub.vertex_labels == (1, 3)
    edge = k.full_subcomplex((3, 4))
    assert edge.has_face((1, 2))


def test_skeleton_free_function_matches_method():
    k = simplex(4)
    assert skeleton(4, 1).faces == k.skeleton(1).faces
    assert skeleton(4, -1).face_tuples() == ((),)
    with pytest.raises(InputError):
        k.skeleton(4)


def test_minimal_non_faces_of_boundary_is_full_set():
    for m in (2, 3, 4):
        k = simplex_boundary(m)
        assert k.minimal_non_faces() == ((1 << m) - 1,)


def test_order_complex_below_vertex_of_square():
    # edges {1,2} and {1,4} strictly contain vertex 1 and are incomparable,
    # so the order complex is two isolated points
    oc = square().order_complex_below((1,))
    assert oc.m == 2
    assert oc.f_vector() == (2,)


def test_order_complex_below_empty_face_is_barycentric_subdivision():
    from polyprod.homology import reduced_simplicial_homology

    k = square()
    sd = k.order_complex_below(())
    assert sd.f_vector() == (8, 8)     # 4 vertices + 4 edges, one edge per incidence
    assert reduced_simplicial_homology(sd) == reduced_simplicial_homology(k)


def test_order_complex_below_maximal_face_is_empty_complex():
    oc = square().order_complex_below((1, 2))
    assert oc.m == 0
    assert oc.face_tuples() == ((),)


def test_order_complex_requires_a_face():
    with pytest.raises(FaceNotInComplex):
        square().order_complex_below((1, 3))


def test_star_complex_is_shifted_under_identity():
    verdict = star_complex().is_shifted()
    assert verdict
    assert verdict.labeling == (1, 2, 3)
    assert verdict.counterexample is None


def test_square_is_not_shifted_under_any_labeling():
    verdict = square().is_shifted()
    assert not verdict
    assert verdict.labeling is None
    assert verdict.counterexample is not None


def test_shifted_search_recovers_scrambled_labeling():
    rng = random.Random(7)
    for _ in range(10):
        m = rng.randrange(2, 6)
        k = random_shifted_complex(rng, m)
        assert k.is_shifted((tuple(range(1, m + 1))))
        perm = list(range(1, m + 1))
        rng.shuffle(perm)
        scrambled = k.relabeled(perm)
        verdict = scrambled.is_shifted()
        assert verdict.shifted
        assert scrambled.relabeled(verdict.labeling).is_shifted(
            tuple(range(1, m + 1)))


def test_shifted_search_bound():
    k = disjoint_points(9)
    with pytest.raises(SearchBoundExceeded):
        k.is_shifted()
    # explicit labeling bypasses the search
    assert k.is_shifted(tuple(range(1, 10)))


def test_join_of_two_point_pairs_is_a_cycle():
    from polyprod.homology import reduced_simplicial_homology

    j = join_complex(disjoint_points(2), disjoint_points(2))
    assert j.m == 4
    assert j.f_vector() == (4, 4)
    assert reduced_simplicial_homology(j) == reduced_simplicial_homology(square())


def test_validate_clean_complex_has_no_diagnostics():
    assert validate(pentagon()) == []
    assert validate(pentagon(), strict=True) == []


def test_validate_flags_ghost_vertex_only_in_strict_mode():
    k = SimplicialComplex.from_maximal_faces(3, [(1, 2)])
    assert validate(k) == []
    kinds = [d.kind for d in validate(k, strict=True)]
    assert kinds == ["ghost_vertex"]
    ensure_valid(k)
    with pytest.raises(GhostVertex):
        ensure_valid(k, strict=True)


def test_validate_detects_hand_built_closure_gap():
    k = SimplicialComplex.from_maximal_faces(2, [(1, 2)])
    broken = object.__new__(SimplicialComplex)
    object.__setattr__(broken, "m", 2)
    object.__setattr__(broken, "faces", frozenset({0, 0b11}))
    object.__setattr__(broken, "maximal_faces", (0b11,))
    object.__setattr__(broken, "vertex_labels", k.vertex_labels)
    kinds = {d.kind for d in validate(broken)}
    assert "not_downward_closed" in kinds
    with pytest.raises(NotDownwardClosed):
        ensure_valid(broken)


def test_cycle_complex_needs_three_vertices():
    with pytest.raises(InputError):
        cycle_complex(2)


def test_all_complexes_on_counts():
    # labeled counts are the Dedekind numbers minus the void family
    assert [len(all_complexes_on(m, up_to_iso=False)) for m in (1, 2, 3, 4)] \
        == [2, 5, 19, 167]
    assert [len(all_complexes_on(m)) for m in (1, 2, 3, 4)] == [2, 4, 9, 29]


def test_all_complexes_are_valid_and_deduplicated():
    seen = set()
    for k in all_complexes_on(3, up_to_iso=False):
        assert validate(k) == []
        assert k.faces not in seen
        seen.add(k.faces)


def test_random_complex_is_always_valid():
    rng = random.Random(2024)
    for _ in range(40):
        k = random_complex(rng, rng.randrange(1, 7))
        assert validate(k) == []


def test_relabeled_requires_permutation():
    with pytest.raises(InputError):
        square().relabeled((1, 1, 2, 3))
