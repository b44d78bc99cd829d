"""Face complexes T_y on the extremal rays and their reduced homology.

For y in the semigroup S_A (homogenized coordinates), T_y has vertex j
when y - D*e_j stays in S_A, and more generally face F when the whole
sum over F can be subtracted.  Reduced homology of these complexes
drives the regularity formula; the empty face is kept as the single
(-1)-cell, so the void-looking complex {emptyset} has betti_{-1} = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from .errors import PreconditionError
from .lattice import GeneratorSet, Point, norm
from .linalg import bareiss_rank, rank_mod_p

FieldTag = Union[str, int]  # "q" or a prime


def semigroup_member(A: GeneratorSet, y: Sequence[int]) -> bool:
    """Is y (in N^{d+1}) an N-combination of the homogenized generators?

    Every generator has norm D, so membership reduces to a single sumset
    level: y in S_A iff D | |y| and the dehomogenized part lies in sA
    for s = |y|/D.
    """
    y = tuple(int(c) for c in y)
    if len(y) != A.d + 1:
        raise PreconditionError(f"expected a vector of length {A.d + 1}")
    if any(c < 0 for c in y):
        return False
    total = norm(y)
    if total % A.D:
        return False
    s = total // A.D
    return A.level(s).contains(y[1:])


@dataclass
class FaceComplex:
    """Faces of T_y encoded as subset bitmasks of {0, ..., d}."""
    y: Point
    n_vertices: int  # d + 1 candidate vertices
    faces: frozenset[int]  # bitmasks; 0 is the empty face

    @property
    def vertex_mask(self) -> int:
        mask = 0
        for f in self.faces:
            if f and not (f & (f - 1)):
                mask |= f
        return mask

    def face_list(self) -> list[tuple[int, ...]]:
        out = []
        for f in sorted(self.faces):
            out.append(tuple(j for j in range(self.n_vertices) if f >> j & 1))
        return out


def build_T(A: GeneratorSet, y: Sequence[int]) -> FaceComplex:
    """The complex of subtractable extremal-ray subsets at y."""
    if not semigroup_member(A, y):
        raise PreconditionError(f"{tuple(y)} is not in the semigroup")
    y = tuple(int(c) for c in y)
    d1 = A.d + 1
    faces = set()
    for mask in range(1 << d1):
        z = list(y)
        for j in range(d1):
            if mask >> j & 1:
                z[j] -= A.D
        if all(c >= 0 for c in z) and semigroup_member(A, z):
            faces.add(mask)
    # translation by D*e_j stays in S_A, so the family must be downward closed
    for f in faces:
        for j in range(d1):
            if f >> j & 1:
                assert (f ^ (1 << j)) in faces, "face family not subset-closed"
    return FaceComplex(y, d1, frozenset(faces))


@dataclass
class ReducedHomologyProfile:
    betti: dict[int, int]  # i -> rank, i = -1..n_vertices-1
    field_tag: FieldTag

    def nonzero_degrees(self) -> list[int]:
        return sorted(i for i, b in self.betti.items() if b)

    def to_json_dict(self) -> dict:
        return {"betti": {str(i): b for i, b in sorted(self.betti.items())},
                "field": str(self.field_tag)}


def _boundary_matrix(lower: list[int], upper: list[int]) -> list[list[int]]:
    """Signed incidence of k-subsets (upper) over (k-1)-subsets (lower)."""
    index = {f: r for r, f in enumerate(lower)}
    M = [[0] * len(upper) for _ in lower]
    for c, f in enumerate(upper):
        sign = 1
        for j in range(f.bit_length()):
            if f >> j & 1:
                M[index[f ^ (1 << j)]][c] = sign
                sign = -sign
    return M


_homology_cache: dict[tuple, tuple] = {}


def betti_numbers(faces: frozenset[int], n_vertices: int,
                  field: FieldTag = "q") -> dict[int, int]:
    """Reduced Betti numbers of a face family, exact over Q or F_p."""
    key = (faces, n_vertices, field)
    cached = _homology_cache.get(key)
    if cached is None:
        by_dim: dict[int, list[int]] = {}
        for f in faces:
            by_dim.setdefault(bin(f).count("1") - 1, []).append(f)
        for cells in by_dim.values():
            cells.sort()
        rank = bareiss_rank if field == "q" else (
            lambda M: rank_mod_p(M, field))
        top = max(by_dim, default=-1)
        ranks = {}  # i -> rank of boundary C_i -> C_{i-1}
        for i in range(0, top + 1):
            M = _boundary_matrix(by_dim.get(i - 1, []), by_dim.get(i, []))
            ranks[i] = rank(M) if M and M[0] else 0
        betti = {}
        for i in range(-1, n_vertices):
            betti[i] = (len(by_dim.get(i, ()))
                        - ranks.get(i, 0) - ranks.get(i + 1, 0))
        assert all(b >= 0 for b in betti.values())
        # reduced Euler characteristic must match the alternating face count
        chi_faces = sum((-1) ** (bin(f).count("1") - 1) for f in faces)
        chi_betti = sum((-1) ** i * b for i, b in betti.items())
        assert chi_faces == chi_betti, (chi_faces, chi_betti)
        cached = tuple(sorted(betti.items()))
        _homology_cache[key] = cached
    return dict(cached)


def reduced_homology(complex_: FaceComplex,
                     field: FieldTag = "q") -> ReducedHomologyProfile:
    betti = betti_numbers(complex_.faces, complex_.n_vertices, field)
    return ReducedHomologyProfile(betti, field)


def face_tables_for_level(A: GeneratorSet, s: int) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized T_y face families for every y in S_A of norm s*D.

    Returns (points, tables): points are the dehomogenized members of the
    level-s sumset, and tables[r] is an integer whose bit m says whether
    the vertex subset with mask m is a face of T_y (bit 0 = homogenizing
    coordinate).  Requires d <= 5 so tables fit in 64 bits.
    """
    d, D = A.d, A.D
    if d + 1 > 6:
        raise PreconditionError("face tables support at most 6 vertices")
    lvl = A.level(s)
    pts = lvl.points.astype(np.int64)
    n = pts.shape[0]
    tables = np.zeros(n, dtype=np.int64)
    for mask in range(1 << (d + 1)):
        k = bin(mask).count("1")
        if k > s:
            continue
        k0 = mask & 1
        v = np.array([D if mask >> (j + 1) & 1 else 0 for j in range(d)],
                     dtype=np.int64)
        shifted = pts - v
        norms = shifted.sum(axis=1)
        sub = A.level(s - k)
        ok = ((shifted >= 0).all(axis=1)
              & (pts.sum(axis=1) <= (s - k0) * D)
              & (norms <= sub.slice.N))
        if ok.any():
            ranks = sub.slice.rank_array(shifted[ok], validate=False)
            ok[ok] = sub.membership[ranks]
        tables |= ok.astype(np.int64) << mask
    return pts, tables


def min_nonzero_degree(table: int, n_vertices: int,
                       field: FieldTag = "q") -> Optional[int]:
    """Smallest i with betti_i != 0 for the face family encoded by table."""
    faces = frozenset(m for m in range(1 << n_vertices) if table >> m & 1)
    betti = betti_numbers(faces, n_vertices, field)
    nz = [i for i, b in sorted(betti.items()) if b]
    return nz[0] if nz else None
