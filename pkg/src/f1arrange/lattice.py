"""Intersection lattice, Moebius function and characteristic polynomial.

The lattice is grown one codimension at a time: every flat of codimension
``k + 1`` is a flat of codimension ``k`` cut by one more hyperplane, so no
subset enumeration is needed.  Flats are keyed by the reduced row echelon
form of their defining equations, which makes deduplication exact.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd

import numpy as np

from . import linalg
from .arrangement import Arrangement, delete, restrict
from .errors import AffineNotSupported, RecursionBudgetExceeded
from .polynomial import IntPolynomial

__all__ = [
    "Flat",
    "IntersectionPoset",
    "build_lattice",
    "mobius",
    "charpoly_mobius",
    "charpoly_delres",
    "characteristic_polynomial",
    "grothendieck_class",
    "LEFSCHETZ",
]

LEFSCHETZ = "𝕃"

DEFAULT_DELRES_BUDGET = 200_000


@dataclass(frozen=True)
class Flat:
    """One element of the intersection lattice.

    ``rows`` are the rows of the RREF of the augmented system
    ``[normals | -offsets]`` cutting out the flat, each rescaled to a
    primitive integer vector with positive pivot.  That rescaling is unique,
    so ``rows`` is a canonical key exactly like the RREF itself.
    ``contains`` lists every hyperplane containing the flat.
    """

    rows: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]
    dim: int
    contains: frozenset[int]
    mobius: int | None = None

    @property
    def codim(self) -> int:
        return len(self.pivots)

    @property
    def equations(self) -> linalg.RatMatrix:
        """The RREF of the augmented system as a rational matrix."""
        ncols = self.dim + len(self.pivots) + 1
        return linalg.RatMatrix(
            ([Fraction(x, r[pc]) for x in r] for r, pc in zip(self.rows, self.pivots)), cols=ncols
        )

    @property
    def normal_space(self) -> linalg.RatMatrix:
        """RREF of the normals of the hyperplanes containing this flat."""
        ncols = self.dim + len(self.pivots)
        return linalg.rref(linalg.RatMatrix((r[:ncols] for r in self.rows), cols=ncols))[0]


@dataclass(frozen=True)
class IntersectionPoset:
    """``L(A)`` ordered by reverse inclusion.

    ``layers[k]`` holds the flats of codimension ``k``; ``covers[k][i]`` are
    the indices in ``layers[k + 1]`` of the flats covering ``layers[k][i]``.
    """

    arrangement: Arrangement
    layers: tuple[tuple[Flat, ...], ...]
    covers: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def bottom(self) -> Flat:
        return self.layers[0][0]

    @property
    def flats(self) -> tuple[Flat, ...]:
        return tuple(f for layer in self.layers for f in layer)

    def __len__(self):
        return sum(len(layer) for layer in self.layers)

    def maximal_flats(self) -> list[Flat]:
        out = []
        for k, layer in enumerate(self.layers):
            for i, f in enumerate(layer):
                if k + 1 >= len(self.layers) or not self.covers[k][i]:
                    out.append(f)
        return out

    def counts_by_dim(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for f in self.flats:
            out[f.dim] = out.get(f.dim, 0) + 1
        return out

    def has_mobius(self) -> bool:
        return all(f.mobius is not None for f in self.flats)


def _primitive(v) -> tuple[int, ...]:
    g = gcd(*v)
    lead = next(x for x in v if x != 0)
    if lead < 0:
        g = -g
    return tuple(x // g for x in v)


def _reduce(rows, pivots, v):
    """Clear the pivot columns of ``v`` using integer row operations.

    The result is a nonzero multiple of the rational residue of ``v`` modulo
    the row space, or all zeros when ``v`` lies in it.
    """
    for row, pc in zip(rows, pivots):
        c = v[pc]
        if c:
            a = row[pc]
            v = [a * x - c * y for x, y in zip(v, row)]
    return v


def _extend(rows, pivots, direction, pc):
    """Canonical rows after adjoining ``direction``, whose pivot is ``pc``."""
    lead = direction[pc]
    out = []
    for row in rows:
        c = row[pc]
        out.append(_primitive([lead * x - c * y for x, y in zip(row, direction)]) if c else row)
    at = sum(1 for q in pivots if q < pc)
    out.insert(at, direction)
    return tuple(out), pivots[:at] + (pc,) + pivots[at:]


def _augmented_row(h) -> tuple[int, ...]:
    d = h.offset.denominator
    return _primitive([c * d for c in h.normal] + [-h.offset.numerator])


def build_lattice(a: Arrangement) -> IntersectionPoset:
    """All nonempty intersections of ``a``, each exactly once.

    For each flat every remaining hyperplane is reduced against the flat's
    equations.  Two hyperplanes cut out the same next flat exactly when
    their residues are parallel, so grouping residues by direction yields
    the covers directly.  Affine arrangements are accepted; a residue that
    survives only in the offset column means an empty intersection.
    """
    ell = a.ambient_dim
    aug = [_augmented_row(h) for h in a.hyperplanes]
    bottom = Flat((), (), ell, frozenset())
    layers = [[bottom]]
    covers = []
    while True:
        index: dict[tuple, int] = {}
        nxt: list[Flat] = []
        up: list[tuple[int, ...]] = []
        for flat in layers[-1]:
            groups: dict[tuple, list[int]] = {}
            for i, row in enumerate(aug):
                if i in flat.contains:
                    continue
                res = _reduce(flat.rows, flat.pivots, row)
                if not any(res[:ell]):
                    continue  # parallel to the flat: empty intersection
                groups.setdefault(_primitive(res), []).append(i)
            ups = []
            for direction, members in groups.items():
                pc = next(k for k, x in enumerate(direction) if x != 0)
                key, pivots = _extend(flat.rows, flat.pivots, direction, pc)
                j = index.get(key)
                if j is None:
                    j = len(nxt)
                    index[key] = j
                    nxt.append(Flat(key, pivots, ell - len(pivots), flat.contains | frozenset(members)))
                ups.append(j)
            up.append(tuple(sorted(ups)))
        covers.append(tuple(up))
        if not nxt:
            break
        layers.append(nxt)
    covers.pop()
    return IntersectionPoset(a, tuple(tuple(layer) for layer in layers), tuple(covers))


def mobius(p: IntersectionPoset) -> IntersectionPoset:
    """Fill in Moebius values from the bottom up.

    ``mu(V) = 1`` and ``mu(X) = -sum(mu(Y) for V <= Y < X)``.  ``Y < X`` is
    tested as strict inclusion of the sets of containing hyperplanes, on
    bitmasks when there are few enough hyperplanes.
    """
    if p.arrangement.n <= _MASK_BITS:
        values = _mobius_masks(p)
    else:
        values = _mobius_sets(p)
    it = iter(values)
    layers = tuple(tuple(replace(f, mobius=next(it)) for f in layer) for layer in p.layers)
    return replace(p, layers=layers)


_MASK_BITS = 62


def _mobius_sets(p: IntersectionPoset) -> list[int]:
    flats = p.flats
    out: list[int] = []
    for f in flats:
        out.append(1 if not f.contains else
                   -sum(mu for g, mu in zip(flats, out) if g.contains < f.contains))
    return out


def _mobius_masks(p: IntersectionPoset) -> list[int]:
    masks = np.array([sum(1 << i for i in f.contains) for f in p.flats], dtype=np.int64)
    mu = np.zeros(len(masks), dtype=object)
    mu[0] = 1
    lo = 1
    for layer in p.layers[1:]:
        hi = lo + len(layer)
        below = masks[:lo]
        for j in range(lo, hi):
            inside = (below & ~masks[j]) == 0
            mu[j] = -mu[:lo][inside].sum()
        lo = hi
    return [int(x) for x in mu]


def charpoly_mobius(p: IntersectionPoset) -> IntPolynomial:
    """``sum(mu(X) * t**dim(X))`` over the lattice."""
    if not p.has_mobius():
        p = mobius(p)
    coeffs = [0] * (p.arrangement.ambient_dim + 1)
    for f in p.flats:
        coeffs[f.dim] += f.mobius
    return IntPolynomial(coeffs)


def charpoly_delres(a: Arrangement, budget: int = DEFAULT_DELRES_BUDGET) -> IntPolynomial:
    """Characteristic polynomial by deletion-restriction.

    Always splits off the largest hyperplane in sorted order, so the recursion
    tree is a function of the hyperplane set alone.  Subproblems are memoized
    on :meth:`Arrangement.key`; more than ``budget`` distinct subproblems
    raises :class:`RecursionBudgetExceeded`.
    """
    if not a.is_central:
        raise AffineNotSupported("deletion-restriction needs a central arrangement; apply cone() first")
    memo: dict[tuple, IntPolynomial] = {}

    def rec(b: Arrangement) -> IntPolynomial:
        key = b.key()
        hit = memo.get(key)
        if hit is not None:
            return hit
        if len(memo) >= budget:
            raise RecursionBudgetExceeded(f"more than {budget} distinct deletion-restriction subproblems")
        if b.n == 0:
            out = IntPolynomial.monomial(b.ambient_dim)
        else:
            h = max(range(b.n), key=lambda i: b.hyperplanes[i])
            out = rec(delete(b, h)) - rec(restrict(b, h))
        memo[key] = out
        return out

    return rec(a)


def characteristic_polynomial(a: Arrangement) -> IntPolynomial:
    return charpoly_mobius(mobius(build_lattice(a)))


def grothendieck_class(chi: IntPolynomial) -> IntPolynomial:
    """Class of the complement in the Grothendieck ring, as a polynomial in 𝕃."""
    return chi.with_var(LEFSCHETZ)
