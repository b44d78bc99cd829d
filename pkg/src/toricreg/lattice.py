"""Lattice vectors, generator sets, simplex slices and iterated sumsets.

Points are plain tuples of nonnegative ints.  A ``SimplexSlice`` is the set
of lattice points of bounded coordinate sum (optionally restricted to sums
divisible by ``e``) together with a colexicographic rank/unrank bijection;
sumset levels are stored as dense bit indicators over the slice, keyed by
that rank.
"""

from __future__ import annotations

import itertools
import math
from math import comb, gcd
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    InvalidInstanceError,
    OutOfDomainError,
    PreconditionError,
    ResourceLimitError,
)

Point = tuple[int, ...]

#: Default cap on the number of lattice points a single slice may hold.
DEFAULT_MAX_SLICE_SIZE = 2**27


def norm(point: Sequence[int]) -> int:
    """Coordinate sum |y| of a lattice point."""
    return sum(point)


def unit(d: int, i: int, scale: int = 1) -> Point:
    """scale * e_i in N^d (i is 0-based)."""
    return tuple(scale if j == i else 0 for j in range(d))


class SimplexSlice:
    """Lattice points y in N^d with |y| <= s*D and e | |y|.

    Provides a rank/unrank bijection onto [0, size) that embeds the
    colexicographic order (last coordinate most significant).
    """

    def __init__(self, d: int, D: int, s: int, e: int = 1,
                 max_size: int = DEFAULT_MAX_SLICE_SIZE):
        if d < 1 or D < 1 or s < 0 or e < 1:
            raise PreconditionError(f"bad slice parameters d={d} D={D} s={s} e={e}")
        self.d = d
        self.D = D
        self.s = s
        self.e = e
        self.N = s * D
        self._build_tables()
        self.size = int(self._cnt[d][self.N, 0])
        if self.size > max_size:
            raise ResourceLimitError(
                f"slice d={d} D={D} s={s} e={e} holds {self.size} points "
                f"(cap {max_size})")

    def _build_tables(self) -> None:
        d, N, e = self.d, self.N, self.e
        # cnt[k][M, r] = #{z in N^k : |z| <= M, |z| = r (mod e)}
        cnt = [np.zeros((N + 1, e), dtype=np.int64) for _ in range(d + 1)]
        cnt[0][:, 0] = 1
        for k in range(1, d + 1):
            layer = np.zeros((N + 1, e), dtype=np.int64)
            for M in range(N + 1):
                if M > 0:
                    layer[M] = layer[M - 1]
                layer[M, M % e] += comb(M + k - 1, k - 1)
            cnt[k] = layer
        self._cnt = cnt
        # Qp[k][X+1] = sum_{m=0..X} cnt[k][m, (m-N) mod e]  (Qp[k][0] = 0)
        Qp = np.zeros((d, N + 2), dtype=np.int64)
        for k in range(d):
            ms = np.arange(N + 1)
            vals = cnt[k][ms, (ms - N) % e]
            Qp[k, 1:] = np.cumsum(vals)
        self._Qp = Qp

    # -- membership -----------------------------------------------------

    def contains(self, point: Sequence[int]) -> bool:
        return (len(point) == self.d
                and all(c >= 0 for c in point)
                and sum(point) <= self.N
                and sum(point) % self.e == 0)

    # -- rank / unrank --------------------------------------------------

    def rank(self, point: Sequence[int]) -> int:
        if not self.contains(point):
            raise OutOfDomainError(f"{tuple(point)} not in slice "
                                   f"(d={self.d}, N={self.N}, e={self.e})")
        arr = np.asarray(point, dtype=np.int64).reshape(1, self.d)
        return int(self.rank_array(arr, validate=False)[0])

    def rank_array(self, points: np.ndarray, validate: bool = True) -> np.ndarray:
        """Vectorized rank of an (n, d) array of slice points."""
        pts = np.asarray(points, dtype=np.int64)
        if pts.ndim != 2 or pts.shape[1] != self.d:
            raise OutOfDomainError(f"expected shape (n, {self.d})")
        if validate and pts.size:
            norms = pts.sum(axis=1)
            if (pts < 0).any() or (norms > self.N).any() or (norms % self.e).any():
                raise OutOfDomainError("point outside slice")
        n = pts.shape[0]
        ranks = np.zeros(n, dtype=np.int64)
        suf = np.zeros(n, dtype=np.int64)  # suffix sum over columns > c
        for c in range(self.d - 1, -1, -1):
            suf_incl = suf + pts[:, c]
            ranks += self._Qp[c, self.N - suf + 1] - self._Qp[c, self.N - suf_incl + 1]
            suf = suf_incl
        return ranks

    def unrank(self, index: int) -> Point:
        if not 0 <= index < self.size:
            raise OutOfDomainError(f"rank {index} outside [0, {self.size})")
        i = index
        coords = [0] * self.d
        budget = self.N
        res = 0  # required residue (mod e) of the remaining coordinate sum
        for j in range(self.d, 0, -1):
            t = 0
            while True:
                c = int(self._cnt[j - 1][budget - t, (res - t) % self.e])
                if i < c:
                    break
                i -= c
                t += 1
            coords[j - 1] = t
            budget -= t
            res = (res - t) % self.e
        return tuple(coords)

    def points_array(self) -> np.ndarray:
        """All slice points as an (size, d) int array, sorted by rank."""
        axes = [np.arange(self.N + 1, dtype=np.int32)] * self.d
        grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)
        pts = grid.reshape(-1, self.d)
        norms = pts.sum(axis=1, dtype=np.int64)
        pts = pts[(norms <= self.N) & (norms % self.e == 0)]
        order = np.argsort(self.rank_array(pts, validate=False), kind="stable")
        return pts[order]

    def __repr__(self) -> str:
        return f"SimplexSlice(d={self.d}, D={self.D}, s={self.s}, e={self.e})"


class SumsetLevel:
    """Indicator of the s-fold sumset sA inside its simplex slice."""

    def __init__(self, s: int, slice_: SimplexSlice,
                 membership: np.ndarray, points: np.ndarray):
        self.s = s
        self.slice = slice_
        self.membership = membership
        self.points = points  # (cardinality, d), sorted by rank
        self.cardinality = int(points.shape[0])

    def contains(self, point: Sequence[int]) -> bool:
        if not self.slice.contains(point):
            return False
        return bool(self.membership[self.slice.rank(point)])

    def contains_array(self, points: np.ndarray) -> np.ndarray:
        """Membership of candidate points; points outside the slice are False."""
        pts = np.asarray(points, dtype=np.int64)
        out = np.zeros(pts.shape[0], dtype=bool)
        norms = pts.sum(axis=1)
        ok = ((pts >= 0).all(axis=1) & (norms <= self.slice.N)
              & (norms % self.slice.e == 0))
        if ok.any():
            ranks = self.slice.rank_array(pts[ok], validate=False)
            out[ok] = self.membership[ranks]
        return out

    def point_set(self) -> set[Point]:
        return {tuple(int(c) for c in row) for row in self.points}


class GeneratorSet:
    """A finite A in N^d with 0 and all D*e_i present; the single source
    instance for every downstream computation.

    D is the maximum coordinate sum over A and e = gcd(D, gcd |a|).
    Sumset levels are cached append-only on the instance.
    """

    def __init__(self, d: int, points: Iterable[Sequence[int]],
                 max_slice_size: int = DEFAULT_MAX_SLICE_SIZE):
        if d < 1:
            raise InvalidInstanceError("dimension must be >= 1")
        pts = [tuple(int(c) for c in p) for p in points]
        for p in pts:
            if len(p) != d:
                raise InvalidInstanceError(f"point {p} does not have length {d}")
            if any(c < 0 for c in p):
                raise InvalidInstanceError(f"point {p} has a negative coordinate")
            if any(c > 2**31 - 1 for c in p):
                raise InvalidInstanceError(f"coordinate overflow in {p}")
        seen = set()
        for p in pts:
            if p in seen:
                raise InvalidInstanceError(f"duplicate point {p}")
            seen.add(p)
        if not pts:
            raise InvalidInstanceError("empty generator set")
        self.d = d
        self.points: tuple[Point, ...] = tuple(sorted(pts))
        self.D = max(norm(p) for p in self.points)
        if self.D < 2:
            raise InvalidInstanceError(
                f"maximum generator norm must be >= 2 (got {self.D})")
        zero = (0,) * d
        if zero not in seen:
            raise InvalidInstanceError("generator set must contain the origin")
        for i in range(d):
            if unit(d, i, self.D) not in seen:
                raise InvalidInstanceError(
                    f"generator set must contain {self.D}*e_{i + 1}")
        self.e = gcd(self.D, *(norm(p) for p in self.points if norm(p)))
        self.max_slice_size = max_slice_size
        self._arr = np.array(self.points, dtype=np.int64)
        self._levels: list[SumsetLevel] = []
        self._slices: dict[int, SimplexSlice] = {}

    # -- derived data ---------------------------------------------------

    @property
    def n_plus_1(self) -> int:
        return len(self.points)

    @property
    def contains_origin(self) -> bool:
        return True  # validated at construction

    @property
    def contains_axis_tops(self) -> bool:
        return True  # validated at construction

    def slice(self, s: int) -> SimplexSlice:
        if s not in self._slices:
            self._slices[s] = SimplexSlice(self.d, self.D, s, self.e,
                                           self.max_slice_size)
        return self._slices[s]

    # -- sumsets --------------------------------------------------------

    def level(self, s: int) -> SumsetLevel:
        if s < 0:
            raise PreconditionError("level must be >= 0")
        while len(self._levels) <= s:
            self._levels.append(self._next_level())
        return self._levels[s]

    def _next_level(self) -> SumsetLevel:
        s = len(self._levels)
        sl = self.slice(s)
        if s == 0:
            pts = np.zeros((1, self.d), dtype=np.int64)
        else:
            prev = self._levels[s - 1]
            cand = (prev.points[:, None, :] + self._arr[None, :, :])
            pts = cand.reshape(-1, self.d)
        ranks = sl.rank_array(pts, validate=False)
        uniq, first = np.unique(ranks, return_index=True)
        pts = pts[first]
        membership = np.zeros(sl.size, dtype=bool)
        membership[uniq] = True
        return SumsetLevel(s, sl, membership, pts)

    def __repr__(self) -> str:
        return (f"GeneratorSet(d={self.d}, D={self.D}, e={self.e}, "
                f"|A|={len(self.points)})")

    def __eq__(self, other) -> bool:
        return (isinstance(other, GeneratorSet)
                and self.d == other.d and self.points == other.points)

    def __hash__(self) -> int:
        return hash((self.d, self.points))


class HomogenizedGeneratorSet:
    """Image of A under a -> (D - |a|, a); every point has norm exactly D."""

    def __init__(self, parent: GeneratorSet):
        self.parent = parent
        D = parent.D
        self.points: tuple[Point, ...] = tuple(
            (D - norm(a),) + a for a in parent.points)
        assert all(norm(b) == D for b in self.points)

    @property
    def d(self) -> int:
        return self.parent.d + 1


def homogenize(A: GeneratorSet) -> HomogenizedGeneratorSet:
    """Lift A to the norm-D hyperplane of N^(d+1)."""
    return HomogenizedGeneratorSet(A)


def sumset_level(A: GeneratorSet, s: int,
                 prev: Optional[SumsetLevel] = None) -> SumsetLevel:
    """Exact indicator of sA (incremental from prev when supplied)."""
    if prev is not None and prev.s != s - 1:
        raise PreconditionError(f"prev has level {prev.s}, expected {s - 1}")
    return A.level(s)


def hilbert_function(A: GeneratorSet, s_max: int) -> list[int]:
    """|sA| for s = 0..s_max (the Hilbert function of the coordinate ring)."""
    if s_max < 0:
        raise PreconditionError("s_max must be >= 0")
    return [A.level(s).cardinality for s in range(s_max + 1)]


def step_threshold(d: int, D: int, e: int = 1) -> int:
    """Smallest s with slice(s) + {0, D*e_1, ..., D*e_d} = slice(s+1).

    Equals ceil(d - (d + e - 1) / D).
    """
    if d < 1 or D < 2 or e < 1 or D % e:
        raise PreconditionError(f"bad parameters d={d} D={D} e={e}")
    num = d * D - (d + e - 1)
    return -(-num // D)


def step_equality_holds(d: int, D: int, e: int, s: int,
                        max_slice_size: int = DEFAULT_MAX_SLICE_SIZE) -> bool:
    """Direct set computation of slice(s) + {0, D*e_i} == slice(s+1)."""
    if s < 0:
        return False
    lo = SimplexSlice(d, D, s, e, max_slice_size)
    hi = SimplexSlice(d, D, s + 1, e, max_slice_size)
    pts = lo.points_array().astype(np.int64)
    covered = np.zeros(hi.size, dtype=bool)
    covered[hi.rank_array(pts, validate=False)] = True
    for i in range(d):
        shifted = pts.copy()
        shifted[:, i] += D
        covered[hi.rank_array(shifted, validate=False)] = True
    return bool(covered.all())


def naive_slice_points(d: int, N: int, e: int = 1) -> set[Point]:
    """Brute-force enumeration of {y in N^d : |y| <= N, e | |y|} (test aid)."""
    out = set()
    for p in itertools.product(range(N + 1), repeat=d):
        t = sum(p)
        if t <= N and t % e == 0:
            out.add(p)
    return out
