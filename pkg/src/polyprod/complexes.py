"""Finite simplicial complexes on labeled vertices, stored as bitmask face sets.

Vertices are 1-based integers 1..m.  A face is an int bitmask: bit i-1 set
means vertex i belongs to the face, so the empty face is 0 and masks compare
deterministically.  All face listings in this package are ordered by
(cardinality, numeric mask value).

Operations that enumerate all 2^m subsets (skeleta, minimal non-faces,
subset sums) are capped at m <= MAX_ENUMERATION_VERTICES.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import (
    FaceNotInComplex,
    GhostVertex,
    InputError,
    NotDownwardClosed,
    SearchBoundExceeded,
)

MAX_ENUMERATION_VERTICES = 24
SHIFTED_SEARCH_BOUND = 8


# -- bitmask helpers ----------------------------------------------------------

def mask_from_vertices(vertices: Iterable[int], m: int) -> int:
    """Bitmask of a 1-based vertex collection, range-checked against m."""
    mask = 0
    for v in vertices:
        if not 1 <= v <= m:
            raise InputError(f"vertex {v} out of range 1..{m}")
        mask |= 1 << (v - 1)
    return mask


def vertices_from_mask(mask: int) -> tuple[int, ...]:
    """Increasing 1-based vertex tuple of a face mask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def submasks(mask: int) -> Iterator[int]:
    """All subsets of a mask, including 0 and the mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def face_sort_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


def sorted_faces(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(masks, key=face_sort_key))


@dataclass(frozen=True)
class Diagnostic:
    """One validation finding; kind is a stable machine-readable tag."""

    kind: str
    message: str
    face: tuple[int, ...] | None = None
    vertex: int | None = None


# -- the complex --------------------------------------------------------------

@dataclass(frozen=True)
class SimplicialComplex:
    """An abstract simplicial complex: a downward-closed set of face masks.

    `faces` always contains the empty face 0.  `vertex_labels` keeps the
    original names of the vertices when the complex was produced by
    relabelling (full subcomplexes, order complexes); for a freshly built
    complex it is simply (1, ..., m).
    """

    m: int
    faces: frozenset[int]
    maximal_faces: tuple[int, ...]
    vertex_labels: tuple[int, ...]

    # construction ------------------------------------------------------

    @classmethod
    def from_maximal_faces(cls, m: int,
                           maximal: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Downward closure of the given faces on vertex set {1..m}.

        Dominated and duplicate input faces are dropped from the stored
        maximal list.  m = 0 is rejected; use from_faces((0,)) for the
        empty-complex-with-no-vertices edge case.
        """
        if m < 1:
            raise InputError("from_maximal_faces needs m >= 1")
        if m > MAX_ENUMERATION_VERTICES:
            raise InputError(f"m = {m} exceeds enumeration cap {MAX_ENUMERATION_VERTICES}")
        input_masks = [mask_from_vertices(f, m) for f in maximal]
        faces = {0}
        for mask in input_masks:
            faces.update(submasks(mask))
        antichain = _maximal_of(faces)
        return cls(m=m, faces=frozenset(faces), maximal_faces=antichain,
                   vertex_labels=tuple(range(1, m + 1)))

    @classmethod
    def from_faces(cls, m: int, faces: Iterable[int],
                   vertex_labels: Sequence[int] | None = None) -> "SimplicialComplex":
        """Wrap an explicit face-mask set without forcing closure.

        The empty face is always added.  Closure is NOT checked here; run
        validate() when the face set comes from an untrusted source.
        """
        fs = frozenset(faces) | {0}
        for mask in fs:
            if mask >> m:
                raise InputError(f"face mask {mask:#b} uses vertices beyond m={m}")
        labels = tuple(vertex_labels) if vertex_labels is not None else tuple(range(1, m + 1))
        if len(labels) != m:
            raise InputError("vertex_labels length must equal m")
        return cls(m=m, faces=fs, maximal_faces=_maximal_of(fs), vertex_labels=labels)

    # basic queries -----------------------------------------------------

    def has_face(self, vertices: Iterable[int]) -> bool:
        return mask_from_vertices(vertices, self.m) in self.faces

    def dim(self) -> int:
        """Dimension: max face cardinality - 1; the {empty} complex has dim -1."""
        return max(mask.bit_count() for mask in self.faces) - 1

    def faces_sorted(self) -> tuple[int, ...]:
        return sorted_faces(self.faces)

    def faces_of_cardinality(self, k: int) -> tuple[int, ...]:
        return tuple(sorted(mask for mask in self.faces if mask.bit_count() == k))

    def used_vertices(self) -> tuple[int, ...]:
        used = 0
        for mask in self.maximal_faces:
            used |= mask
        return vertices_from_mask(used)

    def face_tuples(self) -> tuple[tuple[int, ...], ...]:
        return tuple(vertices_from_mask(mask) for mask in self.faces_sorted())

    # f- and h-vectors --------------------------------------------------

    def f_vector(self) -> tuple[int, ...]:
        """(f_0, ..., f_dim): face counts by dimension, empty face excluded."""
        d = self.dim()
        counts = [0] * (d + 1)
        for mask in self.faces:
            k = mask.bit_count()
            if k:
                counts[k - 1] += 1
        return tuple(counts)

    def h_vector(self) -> tuple[int, ...]:
        """(h_0, ..., h_n) with n = dim + 1, via sum_i f_{i-1} (t-1)^{n-i}."""
        n = self.dim() + 1
        f = (1,) + self.f_vector()          # f[-1] = 1 shifted to index 0
        # accumulate coefficients of sum_i f[i] * (t-1)^(n-i) as a poly in t
        coeffs = [0] * (n + 1)
        for i in range(n + 1):
            # (t-1)^(n-i): term t^j has coefficient C(n-i, j) * (-1)^(n-i-j)
            for j in range(n - i + 1):
                coeffs[j] += f[i] * comb(n - i, j) * (-1) ** (n - i - j)
        # h_k is the coefficient of t^(n-k)
        return tuple(coeffs[n - k] for k in range(n + 1))

    # subcomplexes ------------------------------------------------------

    def full_subcomplex(self, subset: Iterable[int]) -> "SimplicialComplex":
        """K_I = { sigma /\\ I }, re-labeled 1..|I| preserving vertex order.

        Original vertex names survive in vertex_labels.
        """
        sel = sorted(set(subset))
        sel_mask = mask_from_vertices(sel, self.m)
        positions = {v: i for i, v in enumerate(sel)}
        new_faces = set()
        for mask in self.faces:
            inter = mask & sel_mask
            new_faces.add(_compress_mask(inter, positions))
        labels = tuple(self.vertex_labels[v - 1] for v in sel)
        return SimplicialComplex.from_faces(len(sel), new_faces, labels)

    def skeleton(self, q: int) -> "SimplicialComplex":
        """Faces of cardinality <= q+1.  q = -1 gives the {empty} complex."""
        if q < -1 or q > self.dim():
            raise InputError(f"skeleton degree {q} outside -1..{self.dim()}")
        keep = frozenset(mask for mask in self.faces if mask.bit_count() <= q + 1)
        return SimplicialComplex.from_faces(self.m, keep, self.vertex_labels)

    def minimal_non_faces(self) -> tuple[int, ...]:
        """Subsets not in K all of whose proper subsets are in K, sorted."""
        if self.m > MAX_ENUMERATION_VERTICES:
            raise SearchBoundExceeded(f"m = {self.m} exceeds {MAX_ENUMERATION_VERTICES}")
        out = []
        for mask in range(1 << self.m):
            if mask in self.faces:
                continue
            if all((mask & ~(1 << b)) in self.faces
                   for b in range(self.m) if mask >> b & 1):
                out.append(mask)
        return sorted_faces(out)

    def order_complex_below(self, sigma: Iterable[int]) -> "SimplicialComplex":
        """Order complex of the poset of faces strictly containing sigma.

        Vertices of the result are those faces (ordered by (size, mask) and
        re-labeled 1..N, with the face masks kept as vertex_labels); faces of
        the result are the chains in the strict containment order.
        """
        smask = mask_from_vertices(sigma, self.m)
        if smask not in self.faces:
            raise FaceNotInComplex(vertices_from_mask(smask))
        above = sorted_faces(t for t in self.faces if t != smask and t & smask == smask)
        n = len(above)
        if n == 0:
            return SimplicialComplex.from_faces(0, (0,), ())
        succ = [[j for j in range(n) if above[i] != above[j]
                 and above[i] & above[j] == above[i]] for i in range(n)]
        chains = [0]
        stack = [(i, 1 << i) for i in range(n - 1, -1, -1)]
        while stack:
            i, chain = stack.pop()
            chains.append(chain)
            for j in succ[i]:
                stack.append((j, chain | 1 << j))
        return SimplicialComplex.from_faces(n, chains, above)

    # shiftedness -------------------------------------------------------

    def is_shifted(self, labeling: Sequence[int] | None = None,
                   bound: int = SHIFTED_SEARCH_BOUND):
        """Search for a vertex relabelling making K shifted.

        Returns ShiftedVerdict.  With an explicit labeling only that one is
        checked; otherwise all m! relabellings are tried (m <= bound).
        labeling[i-1] is the new label of vertex i.
        """
        if labeling is not None:
            perm = tuple(labeling)
            if sorted(perm) != list(range(1, self.m + 1)):
                raise InputError("labeling must be a permutation of 1..m")
            bad = self._shift_violation(perm)
            return ShiftedVerdict(bad is None, perm if bad is None else None, bad)
        if self.m > bound:
            raise SearchBoundExceeded(
                f"shifted search over {self.m}! labelings exceeds bound m <= {bound}")
        identity_violation = None
        for perm in permutations(range(1, self.m + 1)):
            bad = self._shift_violation(perm)
            if bad is None:
                return ShiftedVerdict(True, perm, None)
            if identity_violation is None:
                identity_violation = bad
        return ShiftedVerdict(False, None, identity_violation)

    def _shift_violation(self, perm: tuple[int, ...]):
        """First face (relabeled) witnessing failure, or None if shifted."""
        relabeled = frozenset(_relabel_mask(mask, perm) for mask in self.faces)
        for mask in sorted(relabeled):
            for v in range(self.m - 1, -1, -1):
                if not mask >> v & 1:
                    continue
                for u in range(v):
                    if mask >> u & 1:
                        continue
                    if (mask & ~(1 << v)) | (1 << u) not in relabeled:
                        return vertices_from_mask(mask)
        return None

    def relabeled(self, perm: Sequence[int]) -> "SimplicialComplex":
        """Apply the vertex permutation perm (perm[i-1] = new label of i)."""
        p = tuple(perm)
        if sorted(p) != list(range(1, self.m + 1)):
            raise InputError("perm must be a permutation of 1..m")
        faces = frozenset(_relabel_mask(mask, p) for mask in self.faces)
        return SimplicialComplex.from_faces(self.m, faces, self.vertex_labels)


@dataclass(frozen=True)
class ShiftedVerdict:
    shifted: bool
    labeling: tuple[int, ...] | None
    counterexample: tuple[int, ...] | None

    def __bool__(self) -> bool:
        return self.shifted


# -- free functions -----------------------------------------------------------

def skeleton(m: int, q: int) -> SimplicialComplex:
    """q-skeleton of the full simplex on m vertices; q = m-1 is the simplex."""
    if m < 1:
        raise InputError("skeleton needs m >= 1")
    if m > MAX_ENUMERATION_VERTICES:
        raise InputError(f"m = {m} exceeds enumeration cap {MAX_ENUMERATION_VERTICES}")
    if q < -1 or q > m - 1:
        raise InputError(f"skeleton degree {q} outside -1..{m - 1}")
    faces = [0]
    for k in range(1, q + 2):
        for combo in combinations(range(m), k):
            mask = 0
            for b in combo:
                mask |= 1 << b
            faces.append(mask)
    return SimplicialComplex.from_faces(m, faces)


def join_complex(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join: faces are unions sigma | tau on m1 + m2 vertices."""
    faces = set()
    for a in k1.faces:
        for b in k2.faces:
            faces.add(a | (b << k1.m))
    labels = k1.vertex_labels + tuple(k1.m + v for v in range(1, k2.m + 1))
    return SimplicialComplex.from_faces(k1.m + k2.m, faces, labels)


def validate(k: SimplicialComplex, strict: bool = False) -> list[Diagnostic]:
    """Check closure, mask ranges, maximal-face consistency; strict adds ghosts."""
    out = []
    if 0 not in k.faces:
        out.append(Diagnostic("missing_empty_face", "face set lacks the empty face"))
    for mask in k.faces_sorted():
        if mask >> k.m:
            out.append(Diagnostic("vertex_out_of_range",
                                  f"face {vertices_from_mask(mask)} uses vertices beyond m={k.m}",
                                  face=vertices_from_mask(mask)))
            continue
        for b in range(k.m):
            if mask >> b & 1 and (mask & ~(1 << b)) not in k.faces:
                missing = vertices_from_mask(mask & ~(1 << b))
                out.append(Diagnostic("not_downward_closed",
                                      f"missing subset {missing} of face {vertices_from_mask(mask)}",
                                      face=missing))
    if _maximal_of(k.faces) != k.maximal_faces:
        out.append(Diagnostic("maximal_faces_stale",
                              "stored maximal_faces do not match the face set"))
    if strict:
        used = 0
        for mask in k.faces:
            used |= mask
        for v in range(1, k.m + 1):
            if not used >> (v - 1) & 1:
                out.append(Diagnostic("ghost_vertex", f"vertex {v} lies in no face",
                                      vertex=v))
    return out


def ensure_valid(k: SimplicialComplex, strict: bool = False) -> None:
    """Raise the typed exception for the first validation failure, if any."""
    for d in validate(k, strict=strict):
        if d.kind == "not_downward_closed":
            raise NotDownwardClosed(d.face)
        if d.kind == "ghost_vertex":
            raise GhostVertex(d.vertex)
        raise InputError(d.message)


# -- internals ----------------------------------------------------------------

def _maximal_of(faces) -> tuple[int, ...]:
    sorted_desc = sorted(faces, key=face_sort_key, reverse=True)
    maximal: list[int] = []
    for mask in sorted_desc:
        if not any(mask & big == mask for big in maximal):
            maximal.append(mask)
    return sorted_faces(maximal)


def _compress_mask(mask: int, positions: dict[int, int]) -> int:
    out = 0
    for v in vertices_from_mask(mask):
        out |= 1 << positions[v]
    return out


def _relabel_mask(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    for v in vertices_from_mask(mask):
        out |= 1 << (perm[v - 1] - 1)
    return out
