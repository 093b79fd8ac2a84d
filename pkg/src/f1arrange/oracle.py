"""Point counts of arrangement complements over prime fields.

This is the ground truth the lattice code is checked against, so it never
looks at the intersection lattice: it enumerates ``F_p^l`` and tests every
linear form directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import linalg
from .arrangement import Arrangement, delete, restrict
from .errors import AffineNotSupported, BudgetExceeded, SubsetBudgetExceeded, UncertifiedPrime
from .lattice import characteristic_polynomial

__all__ = [
    "FieldSpec",
    "CountResult",
    "is_prime",
    "next_prime",
    "certify",
    "good_prime",
    "count_points",
    "count_complement",
    "verify_delres_partition",
]

MAX_SUBSET_N = 14
ENUMERATION_BUDGET = 10**8
_CHUNK = 1 << 18


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def next_prime(n: int) -> int:
    """Smallest prime ``>= n``."""
    n = max(n, 2)
    while not is_prime(n):
        n += 1
    return n


@dataclass(frozen=True)
class FieldSpec:
    p: int
    certified: bool


@dataclass(frozen=True)
class CountResult:
    p: int
    points: int
    predicted: int
    match: bool
    enumerated: int

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "points": self.points,
            "predicted": self.predicted,
            "match": self.match,
            "enumerated": self.enumerated,
        }


def _require_central(a: Arrangement):
    if not a.is_central:
        raise AffineNotSupported("point counting is implemented for central arrangements; apply cone() first")


def _subset_ranks(a: Arrangement, max_n: int):
    if a.n > max_n:
        raise SubsetBudgetExceeded(f"{a.n} hyperplanes exceeds the subset-certification cap of {max_n}")
    normals = [h.normal for h in a.hyperplanes]
    top = min(a.n, a.ambient_dim + 1)
    for k in range(1, top + 1):
        for s in combinations(range(a.n), k):
            rows = [normals[i] for i in s]
            yield rows, linalg.rank(linalg.RatMatrix(rows, cols=a.ambient_dim))


def certify(a: Arrangement, p: int, max_n: int = MAX_SUBSET_N) -> bool:
    """Whether every subset of at most ``l + 1`` normals keeps its rank mod ``p``.

    Subset ranks determine the intersection lattice, so a certified prime
    has ``|M(A over F_p)| = chi(A, p)``.
    """
    _require_central(a)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    for rows, r in _subset_ranks(a, max_n):
        if linalg.rank_mod_p_int([[c % p for c in row] for row in rows], a.ambient_dim, p) != r:
            return False
    return True


def good_prime(a: Arrangement, start: int = 2, max_n: int = MAX_SUBSET_N) -> FieldSpec:
    """Smallest certified prime ``>= start``."""
    _require_central(a)
    ranks = list(_subset_ranks(a, max_n))
    p = next_prime(start)
    while True:
        if all(
            linalg.rank_mod_p_int([[c % p for c in row] for row in rows], a.ambient_dim, p) == r
            for rows, r in ranks
        ):
            return FieldSpec(p, True)
        p = next_prime(p + 1)


def count_points(a: Arrangement, p: int, budget: int = ENUMERATION_BUDGET) -> int:
    """Number of points of ``F_p^l`` on none of the hyperplanes of ``a``.

    Coordinates are fixed left to right.  Each form is tested as soon as its
    last nonzero coordinate is fixed, and a partial point is discarded the
    moment one of its completed forms vanishes; the count is still exact
    because every discarded completion lies on that hyperplane.  For the
    last coordinate the surviving values are counted as ``p`` minus the
    number of distinct roots of the forms that end there.
    """
    _require_central(a)
    ell = a.ambient_dim
    if p**ell > budget:
        raise BudgetExceeded(f"{p}^{ell} = {p**ell} points exceeds the enumeration budget {budget}")
    if a.n == 0:
        return p**ell
    normals = np.array([[c % p for c in h.normal] for h in a.hyperplanes], dtype=np.int64)
    if not normals.any(axis=1).all():
        return 0  # a form vanishing identically mod p covers everything
    last = np.array([max(np.flatnonzero(row)) for row in normals])
    dtype = np.int16 if p < 128 else np.int64
    xs = np.arange(p, dtype=np.int64)

    def extend(vals: np.ndarray, k: int) -> int:
        if k == ell:
            return len(vals)
        done = last == k
        if k == ell - 1:
            return last_coordinate(vals, done)
        total = 0
        step = max(1, _CHUNK // (p * a.n))
        col = normals[:, k]
        for lo in range(0, len(vals), step):
            block = vals[lo:lo + step].astype(np.int64)
            ext = (block[:, None, :] + xs[None, :, None] * col[None, None, :]) % p
            ext = ext.reshape(-1, a.n)
            if done.any():
                ext = ext[(ext[:, done] != 0).all(axis=1)]
            if len(ext):
                total += extend(ext.astype(dtype), k + 1)
        return total

    def last_coordinate(vals: np.ndarray, done: np.ndarray) -> int:
        # every form still open has a nonzero last coefficient c and partial
        # value v, so it vanishes at exactly one x = -v / c
        if not done.any():
            return len(vals) * p
        inv = np.array([pow(int(c), -1, p) for c in normals[done, ell - 1]], dtype=np.int64)
        total = 0
        step = max(1, _CHUNK // a.n)
        for lo in range(0, len(vals), step):
            roots = np.sort((-vals[lo:lo + step, done].astype(np.int64) * inv) % p, axis=1)
            distinct = 1 + (np.diff(roots, axis=1) != 0).sum(axis=1)
            total += int((p - distinct).sum())
        return total

    return int(extend(np.zeros((1, a.n), dtype=dtype), 0))


def count_complement(a: Arrangement, f: FieldSpec, budget: int = ENUMERATION_BUDGET) -> CountResult:
    """Enumerate the complement over ``F_p`` and compare with ``chi(A, p)``."""
    if not f.certified:
        raise UncertifiedPrime(f"p = {f.p} is not certified for this arrangement")
    points = count_points(a, f.p, budget)
    predicted = characteristic_polynomial(a)(f.p)
    return CountResult(f.p, points, predicted, points == predicted, f.p**a.ambient_dim)


def verify_delres_partition(a: Arrangement, h: int, f: FieldSpec, budget: int = ENUMERATION_BUDGET) -> bool:
    """``|M(A')| = |M(A)| + |M(A'')|`` over ``F_p`` for the deletion and restriction at ``h``.

    The restriction is counted in its own coordinates, so ``p`` must be
    certified for it too; otherwise :class:`UncertifiedPrime` is raised.
    """
    if not f.certified:
        raise UncertifiedPrime(f"p = {f.p} is not certified for this arrangement")
    res = restrict(a, h)
    if not certify(res, f.p):
        raise UncertifiedPrime(f"p = {f.p} is not certified for the restriction to hyperplane {h}")
    whole = count_points(a, f.p, budget)
    deleted = count_points(delete(a, h), f.p, budget)
    restricted = count_points(res, f.p, budget)
    return deleted == whole + restricted
