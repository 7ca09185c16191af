"""Ready-made complexes, characteristic matrices, pair families, and the
exhaustive / randomized generators the test suite and CLI examples draw from."""

from __future__ import annotations

from itertools import permutations
from random import Random

from .complexes import SimplicialComplex, skeleton
from .errors import InputError
from .pairs import PairModel, pair_disk_sphere, rp2_pair, sphere_pair
from .toric import CharacteristicMatrix


# -- named complexes -----------------------------------------------------------

def simplex(m: int) -> SimplicialComplex:
    return skeleton(m, m - 1)


def simplex_boundary(m: int) -> SimplicialComplex:
    return skeleton(m, m - 2)


def disjoint_points(m: int) -> SimplicialComplex:
    return skeleton(m, 0)


def cycle_complex(m: int) -> SimplicialComplex:
    """m-gon: edges {i, i+1} and {m, 1}."""
    if m < 3:
        raise InputError("a cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(1, m)] + [(m, 1)]
    return SimplicialComplex.from_maximal_faces(m, edges)


def square() -> SimplicialComplex:
    return cycle_complex(4)


def pentagon() -> SimplicialComplex:
    return cycle_complex(5)


def star_complex() -> SimplicialComplex:
    """Two edges sharing vertex 1; shifted under the identity labeling."""
    return SimplicialComplex.from_maximal_faces(3, [(1, 2), (1, 3)])


def projective_plane() -> SimplicialComplex:
    """Minimal 6-vertex triangulation of the real projective plane."""
    return SimplicialComplex.from_maximal_faces(6, [
        (1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 5), (1, 4, 6),
        (2, 3, 4), (2, 3, 6), (2, 4, 5), (3, 5, 6), (4, 5, 6),
    ])


def polytopal_catalog() -> tuple[tuple[str, SimplicialComplex], ...]:
    """Boundary complexes of simple-polytope duals used by invariant tests."""
    return (
        ("triangle", simplex_boundary(3)),
        ("tetrahedron-boundary", simplex_boundary(4)),
        ("4-simplex-boundary", simplex_boundary(5)),
        ("square", square()),
        ("pentagon", pentagon()),
    )


# -- characteristic matrices -----------------------------------------------------

def projective_characteristic(m: int) -> CharacteristicMatrix:
    """Standard matrix over the boundary of the (m-1)-simplex: identity rows
    followed by the all-minus-ones row; the quotient is CP^{m-1}."""
    if m < 2:
        raise InputError("projective data needs m >= 2")
    n = m - 1
    rows = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    rows.append([-1] * n)
    return CharacteristicMatrix.from_rows(rows)


def square_characteristic() -> CharacteristicMatrix:
    """Standard matrix over the square (quotient is a Hirzebruch-type surface)."""
    return CharacteristicMatrix.from_rows([[1, 0], [0, 1], [-1, 0], [0, -1]])


# -- pair families ----------------------------------------------------------------

def standard_pair_library() -> tuple[PairModel, ...]:
    """The four pair models exercised by the splitting and wedge checks."""
    return (pair_disk_sphere(1), pair_disk_sphere(0), sphere_pair(2), rp2_pair())


# -- exhaustive enumeration --------------------------------------------------------

def all_complexes_on(m: int, up_to_iso: bool = True) -> tuple[SimplicialComplex, ...]:
    """Every downward-closed face family on m labeled vertices (including
    families with unused vertices), optionally one per isomorphism class.

    Families are generated as antichains of maximal faces (depth-first, so
    the work is proportional to the Dedekind-number count, not 2^(2^m));
    m = 5 yields 7580 labeled families and is the practical ceiling.
    """
    if not 1 <= m <= 5:
        raise InputError("exhaustive complex enumeration supports 1 <= m <= 5")
    n_subsets = 1 << m
    candidates = sorted(range(1, n_subsets), key=lambda s: (s.bit_count(), s))

    families: list[int] = []        # bitmap over the 2^m subsets; bit 0 = empty face

    def closure(tops: list[int]) -> int:
        fam = 1
        for top in tops:
            sub = top
            while True:
                fam |= 1 << sub
                if sub == 0:
                    break
                sub = (sub - 1) & top
        return fam

    def extend(start: int, tops: list[int]) -> None:
        families.append(closure(tops))
        for idx in range(start, len(candidates)):
            cand = candidates[idx]
            if all(cand & t not in (cand, t) for t in tops):
                tops.append(cand)
                extend(idx + 1, tops)
                tops.pop()

    extend(0, [])

    def faces_of(fam: int) -> tuple[int, ...]:
        return tuple(s for s in range(n_subsets) if fam >> s & 1)

    if up_to_iso:
        tables = [
            [_apply_perm(mask, perm) for mask in range(n_subsets)]
            for perm in permutations(range(m))
        ]
        seen = set()
        unique = []
        for fam in families:
            faces = faces_of(fam)
            canon = min(tuple(sorted(table[f] for f in faces)) for table in tables)
            if canon not in seen:
                seen.add(canon)
                unique.append(canon)
        chosen = unique
    else:
        chosen = [faces_of(fam) for fam in families]

    complexes = [SimplicialComplex.from_faces(m, faces) for faces in chosen]
    complexes.sort(key=lambda k: (len(k.faces), tuple(sorted(k.faces))))
    return tuple(complexes)


def _apply_perm(mask: int, perm: tuple[int, ...]) -> int:
    out = 0
    for b, target in enumerate(perm):
        if mask >> b & 1:
            out |= 1 << target
    return out


# -- randomized generators ----------------------------------------------------------

def random_complex(rng: Random, m: int) -> SimplicialComplex:
    """Downward closure of a few random faces; unused vertices are possible."""
    if m < 1:
        raise InputError("random_complex needs m >= 1")
    count = rng.randrange(1, m + 2)
    faces = []
    for _ in range(count):
        size = rng.randrange(1, m + 1)
        faces.append(rng.sample(range(1, m + 1), size))
    return SimplicialComplex.from_maximal_faces(m, faces)


def random_shifted_complex(rng: Random, m: int) -> SimplicialComplex:
    """Random complex closed under vertex-lowering moves, so it is shifted
    under the identity labeling by construction."""
    faces = set(random_complex(rng, m).faces)
    changed = True
    while changed:
        changed = False
        for mask in list(faces):
            for v in range(m):
                if not mask >> v & 1:
                    continue
                smaller = mask & ~(1 << v)
                if smaller not in faces:
                    faces.add(smaller)
                    changed = True
                for u in range(v):
                    if mask >> u & 1:
                        continue
                    moved = smaller | (1 << u)
                    if moved not in faces:
                        faces.add(moved)
                        changed = True
    return SimplicialComplex.from_faces(m, faces)
