"""Characteristic matrices, quotient Betti numbers, kernel lattices."""

import pytest

from polyprod.catalog import (
    pentagon,
    polytopal_catalog,
    projective_characteristic,
    simplex_boundary,
    square,
    square_characteristic,
)
from polyprod.complexes import SimplicialComplex
from polyprod.errors import (
    DimensionMismatch,
    InputError,
    InvalidCharacteristic,
    NonpolynomialQuotient,
    NotPure,
    RankDeficient,
)
from polyprod.toric import (
    CharacteristicMatrix,
    ensure_characteristic,
    kernel_lattice_basis,
    kernel_rank,
    toric_betti,
    toric_presentation,
    validate_characteristic,
)


def test_matrix_constructor_checks_shape():
    with pytest.raises(InputError):
        CharacteristicMatrix.from_rows([[1, 0], [1]])
    lam = CharacteristicMatrix.from_rows([[1, 0], [0, 1], [-1, -1]])
    assert (lam.m, lam.n) == (3, 2)
    assert tuple(lam.column(0)) == (1, 0, -1)
    assert [list(r) for r in lam.submatrix((1, 3))] == [[1, 0], [-1, -1]]


def test_projective_data_is_admissible():
    for m in (3, 4, 5):
        k = simplex_boundary(m)
        lam = projective_characteristic(m)
        assert validate_characteristic(k, lam) == []
        ensure_characteristic(k, lam)


def test_non_primitive_row_is_flagged():
    lam = CharacteristicMatrix.from_rows([[2, 0], [0, 1], [-1, -1]])
    diags = validate_characteristic(simplex_boundary(3), lam)
    # the same row also spoils every maximal face containing vertex 1
    assert diags[0].kind == "row_not_primitive"
    assert diags[0].vertex == 1
    assert {d.kind for d in diags} == {"row_not_primitive",
                                       "face_not_unimodular"}
    with pytest.raises(InvalidCharacteristic):
        ensure_characteristic(simplex_boundary(3), lam)


def test_non_unimodular_face_is_flagged_with_the_face():
    lam = CharacteristicMatrix.from_rows([[1, 0], [0, 1], [-2, 1], [0, -1]])
    diags = validate_characteristic(square(), lam)
    kinds = {(d.kind, d.face) for d in diags}
    assert ("face_not_unimodular", (2, 3)) in kinds


def test_dependent_face_rows_are_flagged():
    lam = CharacteristicMatrix.from_rows([[1, 0], [1, 0], [-1, -1], [0, -1]])
    diags = validate_characteristic(square(), lam)
    assert any(d.kind == "face_rows_dependent" and d.face == (1, 2)
               for d in diags)


def test_shape_errors_raise_rather_than_diagnose():
    with pytest.raises(DimensionMismatch):
        validate_characteristic(square(), projective_characteristic(3))
    mixed = SimplicialComplex.from_maximal_faces(3, [(1, 2), (3,)])
    with pytest.raises(NotPure):
        validate_characteristic(mixed, CharacteristicMatrix.from_rows(
            [[1, 0], [0, 1], [1, 1]]))


def test_projective_space_betti():
    for m in (3, 4, 5, 6):
        report = toric_betti(simplex_boundary(m), m - 1)
        assert report.betti == tuple(
            1 if i % 2 == 0 else 0 for i in range(2 * m - 1))
        assert report.euler == m
        assert report.h_vector == (1,) * m


def test_square_and_pentagon_betti():
    sq = toric_betti(square(), 2)
    assert sq.betti == (1, 0, 2, 0, 1)
    assert sq.euler == 4
    assert sq.quotient_polynomial == (1, 0, 2, 0, 1)
    pent = toric_betti(pentagon(), 2)
    assert pent.betti == (1, 0, 3, 0, 1)
    assert pent.euler == 5


def test_polytopal_catalog_h_vectors_are_symmetric():
    for name, k in polytopal_catalog():
        h = k.h_vector()
        assert h == tuple(reversed(h)), name
        report = toric_betti(k, k.dim() + 1)
        assert report.betti[::2] == h


def test_toric_betti_shape_checks():
    with pytest.raises(DimensionMismatch):
        toric_betti(square(), 3)
    with pytest.raises(InputError):
        toric_betti(square(), 0)


def test_non_cohen_macaulay_complex_is_rejected():
    # two disjoint edges: h = (1, 2, -1), no even-cell structure exists
    k = SimplicialComplex.from_maximal_faces(4, [(1, 2), (3, 4)])
    with pytest.raises(NonpolynomialQuotient):
        toric_betti(k, 2)


def test_presentation_of_projective_plane_data():
    pres = toric_presentation(simplex_boundary(3), projective_characteristic(3))
    assert pres.ideal.relation_strings() == ("x1*x2*x3",)
    assert pres.linear_relations == ((1, 0, -1), (0, 1, -1))
    assert pres.display_relations == ("x1 - x3", "x2 - x3")


def test_presentation_of_square_data():
    pres = toric_presentation(square(), square_characteristic())
    assert pres.ideal.relation_strings() == ("x1*x3", "x2*x4")
    assert pres.display_relations == ("x1 - x3", "x2 - x4")


def test_presentation_requires_admissible_matrix():
    lam = CharacteristicMatrix.from_rows([[2, 0], [0, 1], [-1, -1]])
    with pytest.raises(InvalidCharacteristic):
        toric_presentation(simplex_boundary(3), lam)


def test_kernel_lattice_pairs_to_zero():
    cases = [
        projective_characteristic(3),
        projective_characteristic(5),
        square_characteristic(),
        CharacteristicMatrix.from_rows(
            [[1, 0], [0, 1], [-1, 2], [3, -1], [1, 1]]),
    ]
    for lam in cases:
        basis = kernel_lattice_basis(lam)
        assert len(basis) == lam.m - lam.n == kernel_rank(lam)
        for vec in basis:
            for j in range(lam.n):
                assert sum(v * c for v, c in zip(vec, lam.column(j))) == 0


def test_kernel_of_projective_data_is_the_diagonal():
    (vec,) = kernel_lattice_basis(projective_characteristic(3))
    assert tuple(abs(x) for x in vec) == (1, 1, 1)


def test_rank_deficient_matrix_is_rejected():
    lam = CharacteristicMatrix.from_rows([[1, 0], [2, 0], [3, 0]])
    with pytest.raises(RankDeficient):
        kernel_lattice_basis(lam)
