"""Exact integer homological algebra.

Smith normal form over Z (Python ints, so arithmetic never wraps), chain
complexes with a first-class degree -1 (augmentation), tensor products with
Koszul signs, algebraic joins, quotient complexes, and finitely generated
abelian groups presented as (betti rank, invariant-factor chain).

Boundary matrices are stored sparse and column-major: boundaries[d] is a
tuple with one {row_index: coefficient} dict per degree-d basis cell.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterable, Mapping, Sequence

from .complexes import SimplicialComplex, vertices_from_mask
from .errors import (
    BoundaryNotSquareZero,
    DimensionMismatch,
    InputError,
    NotASubcomplex,
)


# -- abelian group bookkeeping ------------------------------------------------

def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def invariant_factors(orders: Iterable[int]) -> tuple[int, ...]:
    """Canonical divisibility chain (entries > 1) of the group  + Z/o.

    The input orders need not satisfy any divisibility relation; e.g.
    (2, 3) -> (6,) and (4, 2, 2) -> (2, 2, 4).
    """
    by_prime: dict[int, list[int]] = {}
    for o in orders:
        o = abs(int(o))
        if o <= 1:
            continue
        for p, e in _factorize(o).items():
            by_prime.setdefault(p, []).append(e)
    if not by_prime:
        return ()
    width = max(len(v) for v in by_prime.values())
    slots = [1] * width
    for p, exps in by_prime.items():
        exps.sort(reverse=True)
        for s, e in enumerate(exps):
            slots[s] *= p ** e
    slots.reverse()
    return tuple(slots)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


# -- Smith normal form --------------------------------------------------------

@dataclass(frozen=True)
class SmithNormalForm:
    """diagonal is nonnegative with d1 | d2 | ... (unit entries included)."""

    diagonal: tuple[int, ...]
    rank: int
    u: tuple[tuple[int, ...], ...] | None = None
    v: tuple[tuple[int, ...], ...] | None = None


def smith_normal_form(matrix: Sequence[Sequence[int]],
                      with_transforms: bool = False) -> SmithNormalForm:
    """Smith normal form of an integer matrix.

    Without transforms only the invariant factors are computed (fast sparse
    elimination).  With transforms, unimodular U (rows x rows) and
    V (cols x cols) are returned such that U * matrix * V is diagonal with
    the invariant factors on the diagonal.
    """
    rows = [list(map(int, r)) for r in matrix]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    if any(len(r) != n_cols for r in rows):
        raise DimensionMismatch("ragged matrix")
    if not with_transforms:
        cols: list[dict[int, int]] = [{} for _ in range(n_cols)]
        for i, row in enumerate(rows):
            for j, val in enumerate(row):
                if val:
                    cols[j][i] = val
        orders = _elimination_orders(cols)
        chain = invariant_factors(orders)
        diag = (1,) * (len(orders) - len(chain)) + chain
        return SmithNormalForm(diag, len(orders))
    return _snf_with_transforms(rows, n_rows, n_cols)


def _elimination_orders(cols: Sequence[Mapping[int, int]]) -> list[int]:
    """Diagonal orders of the matrix under unimodular row/column operations.

    Values come back unsorted and without divisibility structure; feed them
    to invariant_factors for the canonical chain.  Unit pivots are eliminated
    first on a min-fill heap; the (typically tiny) remainder with no +-1
    entries is finished densely.
    """
    row_data: dict[int, dict[int, int]] = {}
    col_data: dict[int, dict[int, int]] = {}
    for j, col in enumerate(cols):
        for i, val in enumerate_col(col):
            row_data.setdefault(i, {})[j] = val
            col_data.setdefault(j, {})[i] = val
    heap: list[tuple[int, int, int]] = []
    for i, row in row_data.items():
        for j, val in row.items():
            if val == 1 or val == -1:
                fill = (len(row) - 1) * (len(col_data[j]) - 1)
                heap.append((fill, i, j))
    heapq.heapify(heap)
    unit_count = 0
    while heap:
        _, pi, pj = heapq.heappop(heap)
        prow = row_data.get(pi)
        if prow is None:
            continue
        pval = prow.get(pj, 0)
        if pval != 1 and pval != -1:
            continue
        # clear column pj with row operations (pval is a unit, so exact)
        pivot_items = list(prow.items())
        for i2 in list(col_data[pj].keys()):
            if i2 == pi:
                continue
            factor = col_data[pj][i2] * pval
            target = row_data[i2]
            for j2, val in pivot_items:
                new = target.get(j2, 0) - factor * val
                if new:
                    target[j2] = new
                    col_data[j2][i2] = new
                    if new == 1 or new == -1:
                        heapq.heappush(
                            heap,
                            ((len(target) - 1) * (len(col_data[j2]) - 1), i2, j2))
                elif j2 in target:
                    del target[j2]
                    del col_data[j2][i2]
            if not target:
                del row_data[i2]
        # pivot row entries in other columns vanish under column operations
        # that touch nothing else (column pj now holds only the pivot)
        for j2 in list(prow.keys()):
            cd = col_data[j2]
            del cd[pi]
            if not cd:
                del col_data[j2]
        del row_data[pi]
        unit_count += 1
    orders = [1] * unit_count
    if row_data:
        live_rows = sorted(row_data)
        live_cols = sorted({j for row in row_data.values() for j in row})
        col_pos = {j: a for a, j in enumerate(live_cols)}
        dense = [[0] * len(live_cols) for _ in live_rows]
        for a, i in enumerate(live_rows):
            for j, val in row_data[i].items():
                dense[a][col_pos[j]] = val
        orders.extend(_dense_diagonal_orders(dense))
    return orders


def enumerate_col(col) -> Iterable[tuple[int, int]]:
    items = col.items() if isinstance(col, Mapping) else enumerate(col)
    return [(i, v) for i, v in items if v]


def _dense_diagonal_orders(m: list[list[int]]) -> list[int]:
    """Diagonalize a small dense matrix; returns positive diagonal values."""
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    orders = []
    t = 0
    while True:
        best = None
        for i in range(t, n_rows):
            row = m[i]
            for j in range(t, n_cols):
                val = row[j]
                if val and (best is None or abs(val) < best[0]):
                    best = (abs(val), i, j)
        if best is None:
            return orders
        _, bi, bj = best
        m[t], m[bi] = m[bi], m[t]
        if bj != t:
            for row in m:
                row[t], row[bj] = row[bj], row[t]
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
        while True:
            pivot = m[t][t]
            moved = False
            for i in range(t + 1, n_rows):
                if m[i][t]:
                    q = m[i][t] // pivot
                    if q:
                        m[i] = [a - q * b for a, b in zip(m[i], m[t])]
                    if m[i][t]:        # remainder: strictly smaller new pivot
                        m[t], m[i] = m[i], m[t]
                        moved = True
                        break
            if moved:
                continue
            for j in range(t + 1, n_cols):
                if m[t][j]:
                    q = m[t][j] // pivot
                    if q:
                        for row in m:
                            row[j] -= q * row[t]
                    if m[t][j]:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        moved = True
                        break
            if not moved:
                break
        orders.append(m[t][t])
        t += 1


def _snf_with_transforms(m: list[list[int]], n_rows: int, n_cols: int) -> SmithNormalForm:
    u = [[1 if i == j else 0 for j in range(n_rows)] for i in range(n_rows)]
    v = [[1 if i == j else 0 for j in range(n_cols)] for i in range(n_cols)]

    def negate_row(i):
        m[i] = [-x for x in m[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while True:
        best = None
        for i in range(t, n_rows):
            for j in range(t, n_cols):
                val = m[i][j]
                if val and (best is None or abs(val) < best[0]):
                    best = (abs(val), i, j)
        if best is None:
            break
        _, bi, bj = best
        m[t], m[bi] = m[bi], m[t]
        u[t], u[bi] = u[bi], u[t]
        if bj != t:
            for row in m:
                row[t], row[bj] = row[bj], row[t]
            for row in v:
                row[t], row[bj] = row[bj], row[t]
        if m[t][t] < 0:
            negate_row(t)
        while True:
            pivot = m[t][t]
            moved = False
            for i in range(t + 1, n_rows):
                if m[i][t]:
                    q = m[i][t] // pivot
                    if q:
                        m[i] = [a - q * b for a, b in zip(m[i], m[t])]
                        u[i] = [a - q * b for a, b in zip(u[i], u[t])]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        u[t], u[i] = u[i], u[t]
                        moved = True
                        break
            if moved:
                continue
            for j in range(t + 1, n_cols):
                if m[t][j]:
                    q = m[t][j] // pivot
                    if q:
                        for row in m:
                            row[j] -= q * row[t]
                        for row in v:
                            row[j] -= q * row[t]
                    if m[t][j]:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        for row in v:
                            row[t], row[j] = row[j], row[t]
                        moved = True
                        break
            if not moved:
                break
        t += 1
    # enforce the divisibility chain d_i | d_j with 2x2 unimodular blocks
    for i in range(t):
        for j in range(i + 1, t):
            a, b = m[i][i], m[j][j]
            if b % a == 0:
                continue
            for r in range(n_rows):
                m[r][i] += m[r][j]
            for r in range(n_cols):
                v[r][i] += v[r][j]
            g, s, tt = _xgcd(a, b)
            row_i, row_j = m[i][:], m[j][:]
            m[i] = [s * x + tt * y for x, y in zip(row_i, row_j)]
            m[j] = [(-b // g) * x + (a // g) * y for x, y in zip(row_i, row_j)]
            urow_i, urow_j = u[i][:], u[j][:]
            u[i] = [s * x + tt * y for x, y in zip(urow_i, urow_j)]
            u[j] = [(-b // g) * x + (a // g) * y for x, y in zip(urow_i, urow_j)]
            q = m[i][j] // g
            for r in range(n_rows):
                m[r][j] -= q * m[r][i]
            for r in range(n_cols):
                v[r][j] -= q * v[r][i]
    diag = tuple(m[i][i] for i in range(t))
    return SmithNormalForm(diag, t,
                           tuple(tuple(r) for r in u),
                           tuple(tuple(r) for r in v))


# -- chain complexes ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ChainComplex:
    """Bounded complex of free Z-modules; degree -1 (augmentation) is legal.

    dims maps degree -> basis size (only nonzero entries are stored);
    boundaries[d] sends C_d into C_{d-1}; degrees with a zero boundary map
    may omit their key entirely.
    """

    dims: dict[int, int]
    boundaries: dict[int, tuple[dict[int, int], ...]]
    labels: dict[int, tuple[str, ...]] | None = None

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self.dims))

    def dim(self, d: int) -> int:
        return self.dims.get(d, 0)

    def boundary(self, d: int) -> tuple[dict[int, int], ...]:
        stored = self.boundaries.get(d)
        if stored is not None:
            return stored
        return tuple({} for _ in range(self.dim(d)))

    def total_cells(self) -> int:
        return sum(self.dims.values())

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in self.dims.items())

    def label(self, d: int, i: int) -> str:
        if self.labels and d in self.labels:
            return self.labels[d][i]
        return f"c{d}_{i}"


def make_chain_complex(dims: Mapping[int, int],
                       boundaries: Mapping[int, Sequence[Mapping[int, int]]],
                       labels: Mapping[int, Sequence[str]] | None = None) -> ChainComplex:
    """Validated constructor: shapes line up, indices in range, zero entries dropped."""
    clean_dims = {int(d): int(n) for d, n in dims.items() if n}
    clean_bnd: dict[int, tuple[dict[int, int], ...]] = {}
    for d, cols in boundaries.items():
        n_d = clean_dims.get(d, 0)
        n_low = clean_dims.get(d - 1, 0)
        if len(cols) != n_d:
            raise DimensionMismatch(
                f"degree {d}: {len(cols)} boundary columns for {n_d} cells")
        converted = []
        any_entry = False
        for col in cols:
            new = {int(i): int(val) for i, val in col.items() if val}
            for i in new:
                if not 0 <= i < n_low:
                    raise DimensionMismatch(
                        f"degree {d}: boundary row {i} outside 0..{n_low - 1}")
            any_entry = any_entry or bool(new)
            converted.append(new)
        if any_entry:
            clean_bnd[d] = tuple(converted)
    clean_labels = None
    if labels is not None:
        clean_labels = {}
        for d, names in labels.items():
            if clean_dims.get(d, 0) != len(names):
                raise DimensionMismatch(f"degree {d}: label count mismatch")
            clean_labels[d] = tuple(names)
    return ChainComplex(clean_dims, clean_bnd, clean_labels)


def empty_chain_complex() -> ChainComplex:
    return ChainComplex({}, {}, None)


def check_boundaries(c: ChainComplex) -> None:
    """Verify del o del = 0; raise BoundaryNotSquareZero at the first failure."""
    for d in sorted(c.boundaries):
        upper = c.boundaries[d]
        lower = c.boundaries.get(d - 1)
        if lower is None:      # lower map is zero, composite vanishes
            continue
        for j, col in enumerate(upper):
            acc: dict[int, int] = {}
            for i, val in col.items():
                for r, low in lower[i].items():
                    new = acc.get(r, 0) + val * low
                    if new:
                        acc[r] = new
                    elif r in acc:
                        del acc[r]
            if acc:
                raise BoundaryNotSquareZero(d, f"column {j}")


def augmented(c: ChainComplex) -> ChainComplex:
    """Add a degree -1 augmentation cell; every 0-cell maps to it with +1."""
    if -1 in c.dims:
        raise InputError("complex already has degree -1 cells")
    if any(d < 0 for d in c.dims):
        raise InputError("cannot augment below existing negative degrees")
    dims = dict(c.dims)
    dims[-1] = 1
    boundaries = dict(c.boundaries)
    n0 = c.dim(0)
    if n0:
        boundaries[0] = tuple({0: 1} for _ in range(n0))
    labels = dict(c.labels) if c.labels else None
    if labels is not None:
        labels[-1] = ("[]",)
    return ChainComplex(dims, boundaries, labels)


# -- homology -----------------------------------------------------------------

@dataclass(frozen=True)
class HomologySummary:
    """Graded f.g. abelian group: per degree a free rank and torsion chain.

    groups holds (degree, betti, invariant factors) triples, sorted by
    degree, with trivial degrees omitted; torsion chains are canonical, so
    two summaries are equal iff the graded groups are isomorphic.
    """

    groups: tuple[tuple[int, int, tuple[int, ...]], ...]

    @classmethod
    def from_map(cls, mapping: Mapping[int, tuple[int, Iterable[int]]]) -> "HomologySummary":
        entries = []
        for d in sorted(mapping):
            betti, torsion = mapping[d]
            chain = invariant_factors(torsion)
            if betti or chain:
                entries.append((int(d), int(betti), chain))
        return cls(tuple(entries))

    def betti(self, d: int) -> int:
        for deg, betti, _ in self.groups:
            if deg == d:
                return betti
        return 0

    def torsion(self, d: int) -> tuple[int, ...]:
        for deg, _, chain in self.groups:
            if deg == d:
                return chain
        return ()

    def degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _, _ in self.groups)

    def is_trivial(self) -> bool:
        return not self.groups

    def is_torsion_free(self) -> bool:
        return all(not chain for _, _, chain in self.groups)

    def shifted(self, k: int) -> "HomologySummary":
        return HomologySummary(tuple((d + k, b, c) for d, b, c in self.groups))

    def direct_sum(self, other: "HomologySummary") -> "HomologySummary":
        acc: dict[int, tuple[int, list[int]]] = {}
        for d, b, chain in self.groups + other.groups:
            betti, orders = acc.get(d, (0, []))
            acc[d] = (betti + b, orders + list(chain))
        return HomologySummary.from_map(acc)

    def betti_vector(self, lo: int = 0, hi: int | None = None) -> tuple[int, ...]:
        if hi is None:
            hi = max((d for d, _, _ in self.groups), default=lo)
        return tuple(self.betti(d) for d in range(lo, hi + 1))

    def total_rank(self) -> int:
        return sum(b for _, b, _ in self.groups)

    def to_entries(self) -> list[dict]:
        return [{"degree": d, "betti": b, "torsion": list(chain)}
                for d, b, chain in self.groups]

    def __str__(self) -> str:
        if not self.groups:
            return "0"
        parts = []
        for d, b, chain in self.groups:
            terms = []
            if b == 1:
                terms.append("Z")
            elif b:
                terms.append(f"Z^{b}")
            terms.extend(f"Z/{n}" for n in chain)
            parts.append(f"H_{d} = " + " + ".join(terms))
        return ", ".join(parts)


def trivial_summary() -> HomologySummary:
    return HomologySummary(())


def direct_sum(summaries: Iterable[HomologySummary]) -> HomologySummary:
    acc: dict[int, tuple[int, list[int]]] = {}
    for s in summaries:
        for d, b, chain in s.groups:
            betti, orders = acc.get(d, (0, []))
            acc[d] = (betti + b, orders + list(chain))
    return HomologySummary.from_map(acc)


def homology(c: ChainComplex, reduced: bool = False) -> HomologySummary:
    """Integral homology of a chain complex, with torsion.

    reduced=True augments at degree -1 unless the complex already carries an
    augmentation cell; it is only meaningful when every 0-cell is a point.
    """
    if reduced and -1 not in c.dims:
        c = augmented(c)
    check_boundaries(c)
    orders: dict[int, list[int]] = {}
    for d, cols in c.boundaries.items():
        if c.dim(d - 1):
            orders[d] = _elimination_orders(cols)
    result: dict[int, tuple[int, Iterable[int]]] = {}
    for d, n in c.dims.items():
        rank_down = len(orders.get(d, ()))
        up = orders.get(d + 1, ())
        betti = n - rank_down - len(up)
        result[d] = (betti, up)
    return HomologySummary.from_map(result)


def simplicial_chain_complex(k: SimplicialComplex,
                             reduced: bool = False) -> ChainComplex:
    """Cellular chains of a simplicial complex, ordered by face mask.

    reduced=True adds the empty face as a degree -1 cell, so homology of the
    result is reduced homology; the {empty} complex then has H_{-1} = Z.
    """
    by_degree: dict[int, list[int]] = {}
    for mask in sorted(k.faces):
        card = mask.bit_count()
        if card:
            by_degree.setdefault(card - 1, []).append(mask)
    index = {d: {mask: i for i, mask in enumerate(masks)}
             for d, masks in by_degree.items()}
    dims = {d: len(masks) for d, masks in by_degree.items()}
    boundaries: dict[int, list[dict[int, int]]] = {}
    for d, masks in by_degree.items():
        if d == 0:
            continue
        cols = []
        for mask in masks:
            col: dict[int, int] = {}
            for pos, vtx in enumerate(vertices_from_mask(mask)):
                sub = mask & ~(1 << (vtx - 1))
                col[index[d - 1][sub]] = 1 if pos % 2 == 0 else -1
            cols.append(col)
        boundaries[d] = cols
    cc = make_chain_complex(dims, boundaries)
    if reduced:
        cc = augmented(cc)
    return cc


_simplicial_homology_memo: dict[tuple[int, frozenset[int]], HomologySummary] = {}


def reduced_simplicial_homology(k: SimplicialComplex) -> HomologySummary:
    """Reduced homology of a complex, memoized on the exact face set."""
    key = (k.m, k.faces)
    cached = _simplicial_homology_memo.get(key)
    if cached is None:
        cached = homology(simplicial_chain_complex(k, reduced=True))
        _simplicial_homology_memo[key] = cached
    return cached


# -- constructions ------------------------------------------------------------

def tensor(c: ChainComplex, d: ChainComplex) -> ChainComplex:
    """Tensor product with the Koszul sign: del(x@y) = del x@y + (-1)^|x| x@del y.

    Basis at each degree is ordered by (left degree, left index, right index).
    """
    if not c.dims or not d.dims:
        return empty_chain_complex()
    offsets: dict[tuple[int, int], int] = {}
    dims: dict[int, int] = {}
    for p in sorted(c.dims):
        for q in sorted(d.dims):
            deg = p + q
            offsets[(deg, p)] = dims.get(deg, 0)
            dims[deg] = dims.get(deg, 0) + c.dims[p] * d.dims[q]
    boundaries: dict[int, list[dict[int, int]]] = {}
    both_labeled = c.labels is not None and d.labels is not None
    labels: dict[int, list[str]] = {} if both_labeled else None
    for deg in sorted(dims):
        cols: list[dict[int, int]] = []
        if labels is not None:
            labels[deg] = []
        for p in sorted(c.dims):
            q = deg - p
            nq = d.dims.get(q)
            if nq is None:
                continue
            c_cols = c.boundary(p) if p - 1 in c.dims else None
            d_cols = d.boundary(q) if q - 1 in d.dims else None
            sign = -1 if p % 2 else 1
            nq_down = d.dims.get(q - 1, 0)
            for i in range(c.dims[p]):
                for j in range(nq):
                    col: dict[int, int] = {}
                    if c_cols is not None:
                        base = offsets[(deg - 1, p - 1)]
                        for r, val in c_cols[i].items():
                            col[base + r * nq + j] = val
                    if d_cols is not None:
                        base = offsets[(deg - 1, p)]
                        for r, val in d_cols[j].items():
                            col[base + i * nq_down + r] = sign * val
                    cols.append(col)
                    if labels is not None:
                        labels[deg].append(
                            f"{c.labels[p][i]}*{d.labels[q][j]}")
        boundaries[deg] = cols
    return make_chain_complex(dims, boundaries, labels)


def tensor_many(factors: Sequence[ChainComplex]) -> ChainComplex:
    if not factors:
        raise InputError("tensor_many needs at least one factor")
    acc = factors[0]
    for f in factors[1:]:
        acc = tensor(acc, f)
    return acc


def shift(c: ChainComplex, k: int) -> ChainComplex:
    """Relabel degrees upward by k (homology shifts accordingly)."""
    return ChainComplex({d + k: n for d, n in c.dims.items()},
                        {d + k: cols for d, cols in c.boundaries.items()},
                        {d + k: names for d, names in c.labels.items()}
                        if c.labels else None)


def algebraic_join(c: ChainComplex, d: ChainComplex) -> ChainComplex:
    """Join model: tensor of reduced/augmented complexes, degrees shifted by 1.

    Feed augmented complexes (with a degree -1 cell) for honest, possibly
    empty spaces, and basepoint-deleted models for pointed spaces.  Joining
    with the one-cell {empty} complex returns the other factor unchanged up
    to relabeling.
    """
    return shift(tensor(c, d), 1)


def quotient_complex(c: ChainComplex,
                     keep: Mapping[int, Iterable[int]] | Callable[[int, int], bool]) -> ChainComplex:
    """Project onto a subset of basis cells whose complement spans a subcomplex.

    keep is either a degree -> kept-indices mapping or a predicate
    keep(degree, index).  Raises NotASubcomplex when a discarded cell's
    boundary touches a kept cell.
    """
    kept: dict[int, list[int]] = {}
    for deg, n in c.dims.items():
        if callable(keep):
            sel = [i for i in range(n) if keep(deg, i)]
        else:
            chosen = set(keep.get(deg, ()))
            bad = [i for i in chosen if not 0 <= i < n]
            if bad:
                raise DimensionMismatch(f"kept index {bad[0]} outside degree {deg}")
            sel = sorted(chosen)
        if sel:
            kept[deg] = sel
    kept_sets = {deg: set(sel) for deg, sel in kept.items()}
    for deg, cols in c.boundaries.items():
        low = kept_sets.get(deg - 1, set())
        if not low:
            continue
        chosen = kept_sets.get(deg, set())
        for j, col in enumerate(cols):
            if j in chosen:
                continue
            hit = [i for i in col if i in low]
            if hit:
                raise NotASubcomplex(
                    f"discarded cell {c.label(deg, j)} has boundary in kept cell "
                    f"{c.label(deg - 1, hit[0])}")
    position = {deg: {i: a for a, i in enumerate(sel)} for deg, sel in kept.items()}
    dims = {deg: len(sel) for deg, sel in kept.items()}
    boundaries: dict[int, list[dict[int, int]]] = {}
    for deg, sel in kept.items():
        cols = c.boundary(deg)
        low_pos = position.get(deg - 1)
        new_cols = []
        for i in sel:
            if low_pos:
                new_cols.append({low_pos[r]: val for r, val in cols[i].items()
                                 if r in low_pos})
            else:
                new_cols.append({})
        boundaries[deg] = new_cols
    labels = None
    if c.labels is not None:
        labels = {deg: [c.labels[deg][i] for i in sel]
                  for deg, sel in kept.items() if deg in c.labels}
    return make_chain_complex(dims, boundaries, labels)


# -- Kunneth predictions (used as an independent oracle in tests) -------------

def kunneth_product(a: HomologySummary, b: HomologySummary) -> HomologySummary:
    """H(X x Y) from H(X), H(Y): free parts at i+j, Tor terms at i+j+1."""
    acc: dict[int, tuple[int, list[int]]] = {}

    def add(deg: int, betti: int, orders: Iterable[int]):
        cur_b, cur_t = acc.get(deg, (0, []))
        acc[deg] = (cur_b + betti, cur_t + list(orders))

    for d1, b1, t1 in a.groups:
        for d2, b2, t2 in b.groups:
            tensor_tor = ([x] * b2 for x in t1)
            orders = [x for sub in tensor_tor for x in sub]
            orders += [y for y in t2 for _ in range(b1)]
            orders += [gcd(x, y) for x in t1 for y in t2]
            add(d1 + d2, b1 * b2, orders)
            tor = [gcd(x, y) for x in t1 for y in t2]
            if tor:
                add(d1 + d2 + 1, 0, tor)
    return HomologySummary.from_map(acc)


def kunneth_join(a: HomologySummary, b: HomologySummary) -> HomologySummary:
    """Reduced homology of a join: the product prediction shifted up by 1."""
    return kunneth_product(a, b).shifted(1)
