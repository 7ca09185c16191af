"""Exact linear algebra and homology: Smith form properties against
independent oracles, classical spaces, Kunneth/tensor/join consistency."""

import random
from fractions import Fraction

import pytest

from polyprod.complexes import SimplicialComplex, join_complex
from polyprod.catalog import (
    disjoint_points,
    pentagon,
    projective_plane,
    random_complex,
    simplex,
    simplex_boundary,
    square,
)
from polyprod.errors import (
    InputError,
    BoundaryNotSquareZero,
    DimensionMismatch,
    NotASubcomplex,
)
from polyprod.homology import (
    ChainComplex,
    HomologySummary,
    algebraic_join,
    augmented,
    check_boundaries,
    direct_sum,
    empty_chain_complex,
    homology,
    invariant_factors,
    kunneth_join,
    kunneth_product,
    make_chain_complex,
    quotient_complex,
    reduced_simplicial_homology,
    shift,
    simplicial_chain_complex,
    smith_normal_form,
    tensor,
    tensor_many,
    trivial_summary,
)
from polyprod.pairs import circle_space, pair_chain, pair_disk_sphere, rp2_space


# ---------------------------------------------------------------------------
# independent helpers (kept deliberately dumb: these are the oracles)
# ---------------------------------------------------------------------------

def det(m):
    """Integer determinant by cofactor expansion; fine for the sizes here."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * det(minor)
    return total


def rank_over_q(matrix):
    """Row-echelon rank with exact rationals."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][c]
        rows[rank] = [x / inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                f = rows[r][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b)))
             for j in range(len(b[0]))] for i in range(len(a))]


def random_matrix(rng, rows, cols):
    return [[rng.randrange(-9, 10) if rng.random() < 0.7 else 0
             for _ in range(cols)] for _ in range(rows)]


def moore_space(k: int) -> ChainComplex:
    """Cells v, e, f with boundary f = k*e: a mod-k Moore space in degree 1."""
    return make_chain_complex({0: 1, 1: 1, 2: 1}, {1: [{}], 2: [{0: k}]})


def summary(**groups) -> HomologySummary:
    """summary(d0=(betti, orders), ...) convenience builder."""
    return HomologySummary.from_map(
        {int(k[1:]): v for k, v in groups.items()})


# ---------------------------------------------------------------------------
# invariant factors and Smith normal form
# ---------------------------------------------------------------------------

def test_invariant_factors_recombination():
    assert invariant_factors([2, 3]) == (6,)
    assert invariant_factors([4, 6]) == (2, 12)
    assert invariant_factors([2, 3, 4, 6]) == (2, 6, 12)
    assert invariant_factors([4, 2, 2]) == (2, 2, 4)
    assert invariant_factors([1, 1, 5]) == (5,)
    assert invariant_factors([]) == ()


def test_invariant_factors_canonical_properties():
    rng = random.Random(11)
    for _ in range(60):
        orders = [rng.randrange(2, 200) for _ in range(rng.randrange(0, 6))]
        chain = invariant_factors(orders)
        # divisibility chain, order preserved, idempotent
        assert all(chain[i + 1] % chain[i] == 0 for i in range(len(chain) - 1))
        prod = 1
        for o in orders:
            prod *= o
        prod_chain = 1
        for c in chain:
            prod_chain *= c
        assert prod == prod_chain
        assert invariant_factors(chain) == chain


def test_smith_normal_form_known_values():
    snf = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    assert snf.diagonal == (2, 2, 156)
    # zero entries are trimmed: diagonal holds exactly the nonzero factors
    zero = smith_normal_form([[0, 0], [0, 0]])
    assert zero.diagonal == () and zero.rank == 0
    assert smith_normal_form([]).diagonal == ()
    assert smith_normal_form([[6]]).diagonal == (6,)
    assert smith_normal_form([[2, 0], [0, 0]]).diagonal == (2,)


def test_smith_normal_form_witnessed_factorization():
    rng = random.Random(99)
    for trial in range(50):
        rows = rng.randrange(1, 6)
        cols = rng.randrange(1, 6)
        a = random_matrix(rng, rows, cols)
        snf = smith_normal_form(a, with_transforms=True)
        u, v = [list(r) for r in snf.u], [list(r) for r in snf.v]
        d = mat_mul(mat_mul(u, a), v)
        for i in range(rows):
            for j in range(cols):
                expected = snf.diagonal[i] if i == j and i < len(snf.diagonal) else 0
                assert d[i][j] == expected, (trial, a)
        assert abs(det(u)) == 1
        assert abs(det(v)) == 1
        nonzero = [x for x in snf.diagonal if x]
        assert all(x > 0 for x in nonzero)
        assert all(nonzero[i + 1] % nonzero[i] == 0
                   for i in range(len(nonzero) - 1))
        assert snf.rank == len(nonzero) == rank_over_q(a)


def test_smith_fast_path_agrees_with_witnessed_path():
    rng = random.Random(5)
    for _ in range(80):
        a = random_matrix(rng, rng.randrange(1, 7), rng.randrange(1, 7))
        assert smith_normal_form(a).diagonal == \
            smith_normal_form(a, with_transforms=True).diagonal


# ---------------------------------------------------------------------------
# chain complexes and homology of classical spaces
# ---------------------------------------------------------------------------

def test_check_boundaries_rejects_nonsquare_zero():
    # the constructor checks shapes only; the composite is checked separately
    c = make_chain_complex({0: 1, 1: 1, 2: 1}, {1: [{0: 1}], 2: [{0: 1}]})
    with pytest.raises(BoundaryNotSquareZero):
        check_boundaries(c)
    with pytest.raises(BoundaryNotSquareZero):
        homology(c)


def test_make_chain_complex_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        make_chain_complex({0: 1, 1: 2}, {1: [{0: 1}]})


def test_empty_chain_complex_is_trivial():
    c = empty_chain_complex()
    assert c.total_cells() == 0
    assert homology(c) == trivial_summary()
    assert homology(c).is_trivial()


def test_simplex_is_contractible():
    for m in (1, 2, 3, 4):
        assert reduced_simplicial_homology(simplex(m)).is_trivial()


def test_boundary_of_simplex_is_a_sphere():
    for m in (2, 3, 4, 5):
        h = reduced_simplicial_homology(simplex_boundary(m))
        assert h == summary(**{f"d{m - 2}": (1, ())})


def test_disjoint_points_reduced_rank():
    for m in (1, 2, 3, 5):
        h = reduced_simplicial_homology(disjoint_points(m))
        assert h.betti(0) == m - 1
        assert h.is_torsion_free()


def test_cycles_are_circles():
    for k in (square(), pentagon()):
        assert reduced_simplicial_homology(k) == summary(d1=(1, ()))


def test_projective_plane_torsion():
    h = reduced_simplicial_homology(projective_plane())
    assert h.betti(0) == 0 and h.betti(1) == 0 and h.betti(2) == 0
    assert h.torsion(1) == (2,)
    assert not h.is_torsion_free()
    full = homology(simplicial_chain_complex(projective_plane()))
    assert full.betti(0) == 1
    assert full.torsion(1) == (2,)


def test_reduced_homology_memoization_is_stable():
    k = projective_plane()
    assert reduced_simplicial_homology(k) is reduced_simplicial_homology(k)


def test_euler_characteristic_matches_alternating_betti():
    rng = random.Random(31)
    for _ in range(25):
        k = random_complex(rng, rng.randrange(1, 6))
        c = simplicial_chain_complex(k)
        h = homology(c)
        assert c.euler_characteristic() == sum(
            (-1) ** d * h.betti(d) for d in h.degrees())


def test_augmented_shifts_h0_to_reduced():
    c = simplicial_chain_complex(square())
    assert homology(augmented(c)) == homology(c, reduced=True)
    assert homology(c, reduced=True).betti(0) == 0


# ---------------------------------------------------------------------------
# tensor, join, quotient
# ---------------------------------------------------------------------------

def test_torus_from_two_circles():
    t2 = tensor(pair_chain(circle_space()), pair_chain(circle_space()))
    check_boundaries(t2)
    assert homology(t2) == summary(d0=(1, ()), d1=(2, ()), d2=(1, ()))


def test_circle_times_projective_plane():
    c = tensor(pair_chain(circle_space()), pair_chain(rp2_space()))
    assert homology(c) == summary(d0=(1, ()), d1=(1, (2,)), d2=(0, (2,)))


def test_tor_term_in_product_of_torsion_spaces():
    # mod-2 Moore square: the degree-3 class exists only through Tor
    c = tensor(moore_space(2), moore_space(2))
    h = homology(c)
    assert h.torsion(2) == (2,)
    assert h.torsion(3) == (2,)
    assert h.betti(3) == 0


def test_kunneth_oracle_on_random_tensors():
    rng = random.Random(404)
    sources = []
    for _ in range(8):
        sources.append(simplicial_chain_complex(
            random_complex(rng, rng.randrange(1, 5))))
    for k in (2, 3, 4, 6, 12):
        sources.append(moore_space(k))
    sources.append(pair_chain(rp2_space()))
    sources.append(pair_chain(pair_disk_sphere(2)))
    for trial in range(50):
        a = rng.choice(sources)
        b = rng.choice(sources)
        prod = tensor(a, b)
        check_boundaries(prod)
        assert homology(prod) == kunneth_product(homology(a), homology(b)), trial


def test_tensor_with_empty_factor_is_empty():
    c = tensor(simplicial_chain_complex(square()), empty_chain_complex())
    assert c.total_cells() == 0
    single = tensor_many([simplicial_chain_complex(square())])
    assert homology(single) == homology(simplicial_chain_complex(square()))
    with pytest.raises(InputError):
        tensor_many([])


def test_join_three_ways():
    # simplicial join, algebraic join, and the Kunneth prediction must agree
    rng = random.Random(77)
    for trial in range(25):
        k1 = random_complex(rng, rng.randrange(1, 4))
        k2 = random_complex(rng, rng.randrange(1, 4))
        topological = reduced_simplicial_homology(join_complex(k1, k2))
        algebraic = homology(algebraic_join(
            simplicial_chain_complex(k1, reduced=True),
            simplicial_chain_complex(k2, reduced=True)))
        predicted = kunneth_join(reduced_simplicial_homology(k1),
                                 reduced_simplicial_homology(k2))
        assert topological == algebraic == predicted, trial


def test_join_with_projective_plane_creates_torsion_shift():
    # S^0 * RP^2 = suspension of RP^2: the Z/2 moves from degree 1 to 2
    joined = algebraic_join(
        simplicial_chain_complex(disjoint_points(2), reduced=True),
        simplicial_chain_complex(projective_plane(), reduced=True))
    assert homology(joined) == summary(d2=(0, (2,)))


def test_shift_moves_degrees():
    c = simplicial_chain_complex(square())
    assert homology(shift(c, 3)) == homology(c).shifted(3)


def test_quotient_disk_by_boundary_sphere():
    for n in (0, 1, 2):
        full = pair_chain(pair_disk_sphere(n))
        rel = quotient_complex(
            full, lambda deg, i, _n=n: full.label(deg, i) == "e")
        assert homology(rel) == summary(**{f"d{n + 1}": (1, ())})


def test_quotient_rejects_non_subcomplex_complement():
    full = pair_chain(pair_disk_sphere(1))
    with pytest.raises(NotASubcomplex):
        # dropping only the top cell leaves its boundary exposed
        quotient_complex(full, lambda deg, i: full.label(deg, i) != "e")


def test_quotient_by_everything_is_empty():
    c = simplicial_chain_complex(square())
    q = quotient_complex(c, lambda deg, i: False)
    assert q.total_cells() == 0


# ---------------------------------------------------------------------------
# summaries
# ---------------------------------------------------------------------------

def test_summary_direct_sum_and_shift():
    a = summary(d1=(2, (2,)), d3=(1, ()))
    b = summary(d1=(1, (3,)), d2=(4, ()))
    s = a.direct_sum(b)
    assert s.betti(1) == 3
    assert s.torsion(1) == (6,)       # Z/2 + Z/3 recombined canonically
    assert s.betti(2) == 4
    assert direct_sum([a, b]) == s
    assert a.shifted(2).betti(3) == 2
    assert a.shifted(2).torsion(3) == (2,)


def test_summary_betti_vector_and_total_rank():
    a = summary(d0=(1, ()), d3=(2, ()))
    assert a.betti_vector(0, 4) == (1, 0, 0, 2, 0)
    assert a.total_rank() == 3


def test_summary_string_form():
    assert str(summary(d1=(1, (2,)))) == "H_1 = Z + Z/2"
    assert str(summary(d2=(3, ()))) == "H_2 = Z^3"
    assert str(trivial_summary()) == "0"


def test_summary_entries_roundtrip():
    a = summary(d0=(1, ()), d2=(1, (2, 4)))
    entries = a.to_entries()
    assert entries == [
        {"degree": 0, "betti": 1, "torsion": []},
        {"degree": 2, "betti": 1, "torsion": [2, 4]},
    ]
