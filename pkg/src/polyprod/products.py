"""Chain models of polyhedral products and their decompositions.

Z(K; (X,A)) is modeled inside the tensor product of the m pair chain
complexes: the basis is every tensor c_1 @ ... @ c_m whose support
{i : c_i is an X-only cell} is a face of K.  Boundaries shrink support, and
K is downward closed, so this span really is a subcomplex.

The smash form Zhat kills every tensor with a basepoint coordinate; its
homology is the reduced homology of the smash-image space.  The remaining
functions compute the right-hand sides of the various additive
decompositions of Z and Zhat so the two sides can be compared exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from math import comb
from typing import Callable, Iterable, Sequence

from .complexes import (
    MAX_ENUMERATION_VERTICES,
    SimplicialComplex,
    face_sort_key,
    vertices_from_mask,
)
from .errors import (
    ArityMismatch,
    BudgetExceeded,
    InputError,
    NotShifted,
    PairNotCertified,
    SearchBoundExceeded,
    SeriesError,
    TorsionInShiftedSubcomplex,
)
from .homology import (
    ChainComplex,
    HomologySummary,
    algebraic_join,
    direct_sum,
    homology,
    make_chain_complex,
    quotient_complex,
    reduced_simplicial_homology,
    simplicial_chain_complex,
    tensor_many,
)
from .pairs import PairModel, pair_chain
from .series import RationalSeries

DEFAULT_CELL_BUDGET = 2_000_000
SPLITTING_SUBSET_BOUND = 12

MapFn = Callable[[Callable, Iterable], Iterable]


@dataclass(frozen=True)
class SplitSummand:
    """One piece of an additive decomposition, tagged by its index subset
    (or face) and a human-readable description of the formula side."""

    subset: tuple[int, ...]
    description: str
    homology: HomologySummary


@dataclass(frozen=True)
class SplittingResult:
    """Summands, their direct sum, the brute-force oracle, and the verdict."""

    summands: tuple[SplitSummand, ...]
    total: HomologySummary
    oracle: HomologySummary
    verified: bool


@dataclass(frozen=True)
class SphereList:
    """Wedge-of-spheres bookkeeping: (dimension, multiplicity) pairs."""

    spheres: tuple[tuple[int, int], ...]

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> "SphereList":
        items = []
        for dim in sorted(counts):
            mult = counts[dim]
            if mult < 0:
                raise InputError(f"negative multiplicity at dimension {dim}")
            if mult:
                items.append((dim, mult))
        return cls(tuple(items))

    def to_summary(self) -> HomologySummary:
        return HomologySummary(tuple((d, mult, ()) for d, mult in self.spheres))

    def shifted(self, k: int) -> "SphereList":
        return SphereList(tuple((d + k, mult) for d, mult in self.spheres))

    def total_count(self) -> int:
        return sum(mult for _, mult in self.spheres)

    def __str__(self) -> str:
        if not self.spheres:
            return "(empty wedge)"
        return " v ".join(f"{mult} x S^{d}" if mult > 1 else f"S^{d}"
                          for d, mult in self.spheres)


def _subset_label(vertices: Sequence[int]) -> str:
    return "{" + ",".join(map(str, vertices)) + "}"


# -- the two chain models -------------------------------------------------------


def _check_arity(k: SimplicialComplex, pairs: Sequence[PairModel]) -> tuple[PairModel, ...]:
    pairs = tuple(pairs)
    if len(pairs) != k.m:
        raise ArityMismatch(f"{len(pairs)} pair models for m = {k.m} vertices")
    return pairs


def _moment_angle_cells(k: SimplicialComplex, pairs: tuple[PairModel, ...],
                        budget: int):
    """Basis tuples of the Z(K;(X,A)) model, bucketed and ordered by degree.

    Returns (by_degree, z) where by_degree[d] is the ordered list of basis
    tuples in degree d and z is the assembled ChainComplex.
    """
    a_cells = [p.a_cells() for p in pairs]
    x_cells = [p.x_only_cells() for p in pairs]
    needed = 0
    for face in k.faces:
        count = 1
        for i in range(k.m):
            count *= len(x_cells[i]) if face >> i & 1 else len(a_cells[i])
        needed += count
    if needed > budget:
        raise BudgetExceeded(needed, budget)

    by_degree: dict[int, list[tuple[int, ...]]] = {}
    for face in sorted(k.faces, key=face_sort_key):
        ranges = [x_cells[i] if face >> i & 1 else a_cells[i]
                  for i in range(k.m)]
        for cell in iter_product(*ranges):
            deg = sum(pairs[i].dims[ci] for i, ci in enumerate(cell))
            by_degree.setdefault(deg, []).append(cell)
    for cells in by_degree.values():
        cells.sort()
    pos = {cell: (d, i)
           for d, cells in by_degree.items() for i, cell in enumerate(cells)}

    dims = {d: len(cells) for d, cells in by_degree.items()}
    boundaries: dict[int, list[dict[int, int]]] = {}
    labels: dict[int, list[str]] = {}
    for d, cells in by_degree.items():
        cols = []
        for cell in cells:
            col: dict[int, int] = {}
            prefix = 0
            for i, ci in enumerate(cell):
                sign = -1 if prefix % 2 else 1
                for t, coeff in pairs[i].boundaries[ci]:
                    # support shrinks, so the target tuple is always present
                    row = pos[cell[:i] + (t,) + cell[i + 1:]][1]
                    col[row] = col.get(row, 0) + sign * coeff
                prefix += pairs[i].dims[ci]
            cols.append(col)
        boundaries[d] = cols
        labels[d] = ["(" + ",".join(pairs[i].cell_ids[ci]
                                    for i, ci in enumerate(cell)) + ")"
                     for cell in cells]
    return by_degree, make_chain_complex(dims, boundaries, labels)


def moment_angle_chain(k: SimplicialComplex, pairs: Sequence[PairModel],
                       budget: int = DEFAULT_CELL_BUDGET) -> ChainComplex:
    """Chain model of Z(K;(X,A)); its homology is the unreduced homology of Z."""
    pairs = _check_arity(k, pairs)
    _, z = _moment_angle_cells(k, pairs, budget)
    return z


def smash_moment_angle_chain(k: SimplicialComplex, pairs: Sequence[PairModel],
                             budget: int = DEFAULT_CELL_BUDGET) -> ChainComplex:
    """Quotient model of Zhat(K;(X,A)); its homology is H-tilde of the smash image."""
    pairs = _check_arity(k, pairs)
    by_degree, z = _moment_angle_cells(k, pairs, budget)
    keep = {d: [i for i, cell in enumerate(cells)
                if all(ci != pairs[j].basepoint for j, ci in enumerate(cell))]
            for d, cells in by_degree.items()}
    return quotient_complex(z, keep)


# -- stable splitting over full subcomplexes -------------------------------------


def _restricted(pairs: tuple[PairModel, ...], vertices: tuple[int, ...]):
    return tuple(pairs[v - 1] for v in vertices)


def _splitting_task(args) -> tuple[tuple[int, ...], HomologySummary]:
    k, pairs, mask, budget = args
    verts = vertices_from_mask(mask)
    sub = k.full_subcomplex(verts)
    h = homology(smash_moment_angle_chain(sub, _restricted(pairs, verts), budget))
    return verts, h


def stable_splitting(k: SimplicialComplex, pairs: Sequence[PairModel],
                     budget: int = DEFAULT_CELL_BUDGET,
                     subset_bound: int = SPLITTING_SUBSET_BOUND,
                     job_map: MapFn | None = None) -> SplittingResult:
    """Reduced homology of Z against the direct sum over nonempty subsets I
    of the reduced homology of Zhat(K_I); verified is the exact comparison.
    """
    pairs = _check_arity(k, pairs)
    if k.m > subset_bound:
        raise SearchBoundExceeded(
            f"splitting enumerates 2^{k.m} subsets; bound is m <= {subset_bound}")
    masks = sorted(range(1, 1 << k.m), key=face_sort_key)
    tasks = [(k, pairs, mask, budget) for mask in masks]
    results = list((job_map or map)(_splitting_task, tasks))
    summands = tuple(
        SplitSummand(verts, f"Zhat(K_{_subset_label(verts)})", h)
        for verts, h in results)
    total = direct_sum(s.homology for s in summands)
    oracle = homology(moment_angle_chain(k, pairs, budget), reduced=True)
    return SplittingResult(summands, total, oracle, total == oracle)


# -- Hochster-type formula for (D^{n+1}, S^n) -------------------------------------


def _hochster_task(args) -> tuple[tuple[int, ...], int, HomologySummary]:
    k, mask, dims = args
    verts = vertices_from_mask(mask)
    shift_by = 1 + sum(dims[v - 1] for v in verts)
    h = reduced_simplicial_homology(k.full_subcomplex(verts))
    return verts, shift_by, h.shifted(shift_by)


def hochster_homology(k: SimplicialComplex, n: int | Sequence[int],
                      job_map: MapFn | None = None
                      ) -> tuple[HomologySummary, tuple[SplitSummand, ...]]:
    """H-tilde of Z(K;(D^{n+1},S^n)) as the sum over subsets I not in K of the
    reduced homology of K_I shifted up by 1 + n|I|.

    Subsets that are faces contribute nothing (K_I is then a full simplex),
    so only the non-faces are enumerated.  `n` may also be one sphere
    dimension per vertex, in which case a subset I is shifted up by
    1 + sum of its dimensions.
    """
    dims = tuple(n for _ in range(k.m)) if isinstance(n, int) else tuple(n)
    if len(dims) != k.m:
        raise ArityMismatch(f"expected {k.m} sphere dimensions, got {len(dims)}")
    if any(d < 0 for d in dims):
        raise InputError("sphere dimension n must be >= 0")
    if k.m > MAX_ENUMERATION_VERTICES:
        raise SearchBoundExceeded(f"m = {k.m} exceeds {MAX_ENUMERATION_VERTICES}")
    masks = sorted((mask for mask in range(1, 1 << k.m) if mask not in k.faces),
                   key=face_sort_key)
    tasks = [(k, mask, dims) for mask in masks]
    results = list((job_map or map)(_hochster_task, tasks))
    summands = tuple(
        SplitSummand(verts,
                     f"K_{_subset_label(verts)} shifted by {shift_by}", h)
        for verts, shift_by, h in results)
    total = direct_sum(s.homology for s in summands)
    return total, summands


# -- wedge decomposition over faces (null-homotopic inclusions) -------------------


def wedge_lemma_decomposition(k: SimplicialComplex, pairs: Sequence[PairModel],
                              budget: int = DEFAULT_CELL_BUDGET) -> SplittingResult:
    """Per-face join decomposition of Zhat for certified pair models.

    Each face sigma contributes the join of the order complex of faces
    strictly containing sigma with the smash of (X_i for i in sigma, A_i
    otherwise).  Valid when every inclusion A_i -> X_i is null-homotopic;
    models carry that certificate structurally, and uncertified ones are
    refused.  The direct sum is compared against the smash-quotient oracle.
    """
    pairs = _check_arity(k, pairs)
    for p in pairs:
        if not p.null_homotopic_inclusion:
            raise PairNotCertified(
                f"pair model {p.name} carries no null-homotopy certificate")
    summands = []
    for sigma in k.faces_sorted():
        order = k.order_complex_below(vertices_from_mask(sigma))
        left = simplicial_chain_complex(order, reduced=True)
        factors = [pair_chain(p, a_only=not sigma >> i & 1, drop_basepoint=True)
                   for i, p in enumerate(pairs)]
        joined = algebraic_join(left, tensor_many(factors))
        verts = vertices_from_mask(sigma)
        summands.append(SplitSummand(
            verts,
            f"order complex above {_subset_label(verts)} joined with Dhat",
            homology(joined)))
    total = direct_sum(s.homology for s in summands)
    oracle = homology(smash_moment_angle_chain(k, pairs, budget))
    return SplittingResult(tuple(summands), total, oracle, total == oracle)


# -- contractible X: join model ----------------------------------------------------


def contractible_X_summary(k: SimplicialComplex,
                           a_models: Sequence[PairModel]) -> HomologySummary:
    """H-tilde of Zhat(K;(CA,A)) computed as the join of |K| with the smash
    of the A's (no cone cells are ever built)."""
    models = _check_arity(k, a_models)
    left = simplicial_chain_complex(k, reduced=True)
    factors = [pair_chain(p, a_only=True, drop_basepoint=True) for p in models]
    return homology(algebraic_join(left, tensor_many(factors)))


# -- contractible A: additive series ----------------------------------------------


def _require_reduced(series: RationalSeries) -> RationalSeries:
    if series.constant_term() != 0:
        raise SeriesError("reduced series must have zero constant term")
    return series


def contractible_A_series(k: SimplicialComplex,
                          x_series: Sequence[RationalSeries]) -> RationalSeries:
    """Reduced Poincare series of Z(K;(X,*)): sum over nonempty faces I of
    the product of the reduced series of the X_i with i in I."""
    series = tuple(x_series)
    if len(series) != k.m:
        raise ArityMismatch(f"{len(series)} series for m = {k.m} vertices")
    for s in series:
        _require_reduced(s)
    total = RationalSeries.zero()
    for mask in k.faces_sorted():
        if not mask:
            continue
        term = RationalSeries.one()
        for v in vertices_from_mask(mask):
            term = term * series[v - 1]
        total = total + term
    return total


def poincare_polynomial(k: SimplicialComplex,
                        px: RationalSeries) -> RationalSeries:
    """Identical-X special case: sum over k of f_k * (reduced series)^(k+1)."""
    _require_reduced(px)
    total = RationalSeries.zero()
    for deg, count in enumerate(k.f_vector()):
        if count:
            total = total + RationalSeries.from_polynomial((count,)) * px ** (deg + 1)
    return total


# -- skeleton decompositions --------------------------------------------------------


def porter_decomposition(m: int, q: int,
                         y_dims: Sequence[int]) -> SphereList:
    """Sphere wedge with the homology of Z(Delta[m-1]_q; (CY, Y)), Y_i = S^{y_i}.

    Every subset I with |I| > q+1 contributes a sphere of dimension
    q + 1 + sum of the y_i over I, with multiplicity C(|I|-1, q+1).  This is
    the oracle-confirmed bookkeeping; see porter_decomposition_printed_variant
    for the rejected alternative.
    """
    dims = tuple(int(d) for d in y_dims)
    if len(dims) != m:
        raise ArityMismatch(f"{len(dims)} sphere dimensions for m = {m}")
    if any(d < 0 for d in dims):
        raise InputError("sphere dimensions must be >= 0")
    if not 0 <= q <= m - 2:
        raise InputError(f"skeleton degree q = {q} outside 0..{m - 2}")
    counts: dict[int, int] = {}
    for mask in range(1, 1 << m):
        size = mask.bit_count()
        if size <= q + 1:
            continue
        dim = q + 1 + sum(dims[i] for i in range(m) if mask >> i & 1)
        counts[dim] = counts.get(dim, 0) + comb(size - 1, q + 1)
    return SphereList.from_counts(counts)


def porter_decomposition_printed_variant(m: int, q: int,
                                         y_dims: Sequence[int]) -> SphereList:
    """Alternative bookkeeping with suspension |I| + 1 and multiplicity
    C(|I|+1, q+1) over the same subsets.

    Rejected: it disagrees with the brute-force chain oracle (already at
    m = 3, q = 1, where the correct answer is a single S^5).  Kept so the
    test suite can pin down exactly where it fails.
    """
    dims = tuple(int(d) for d in y_dims)
    if len(dims) != m:
        raise ArityMismatch(f"{len(dims)} sphere dimensions for m = {m}")
    if not 0 <= q <= m - 2:
        raise InputError(f"skeleton degree q = {q} outside 0..{m - 2}")
    counts: dict[int, int] = {}
    for mask in range(1, 1 << m):
        size = mask.bit_count()
        if size <= q + 1:
            continue
        dim = size + 1 + sum(dims[i] for i in range(m) if mask >> i & 1)
        counts[dim] = counts.get(dim, 0) + comb(size + 1, q + 1)
    return SphereList.from_counts(counts)


def sphere_wedge_report(k: SimplicialComplex, n: int,
                        labeling: Sequence[int] | None = None) -> SphereList:
    """Wedge of spheres carried by Sigma Z(K;(D^{n+1},S^n)) for a shifted K.

    Every non-face subset I contributes spheres of dimension j + 2 + n|I|
    with multiplicity the rank of H-tilde_j(K_I); full subcomplexes of a
    shifted complex are torsion-free, and a torsion violation is reported as
    its own error.  Dimensions are at the suspended level; subtract 1 to
    land on Z itself.
    """
    if n < 0:
        raise InputError("sphere dimension n must be >= 0")
    verdict = k.is_shifted(labeling)
    if not verdict.shifted:
        raise NotShifted(
            f"no labeling makes the complex shifted "
            f"(counterexample face {verdict.counterexample})")
    counts: dict[int, int] = {}
    for mask in range(1, 1 << k.m):
        if mask in k.faces:
            continue
        verts = vertices_from_mask(mask)
        h = reduced_simplicial_homology(k.full_subcomplex(verts))
        if not h.is_torsion_free():
            raise TorsionInShiftedSubcomplex(
                f"full subcomplex on {_subset_label(verts)} has torsion {h}")
        for j, betti, _ in h.groups:
            dim = j + 2 + n * len(verts)
            counts[dim] = counts.get(dim, 0) + betti
    return SphereList.from_counts(counts)
