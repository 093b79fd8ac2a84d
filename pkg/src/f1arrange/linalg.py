"""Exact linear algebra over the rationals, plus rank over prime fields.

Entries are :class:`fractions.Fraction`, which already keeps numerator and
denominator coprime with a positive denominator.  Nothing here touches
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DenominatorDivisibleByP

__all__ = [
    "RatMatrix",
    "as_fraction",
    "rref",
    "rank",
    "kernel_basis",
    "rank_mod_p",
    "solve_in_row_space",
    "primitive_integer_vector",
    "det",
]


def as_fraction(x) -> Fraction:
    """Coerce ``int``, ``Fraction`` or a ``'p/q'`` string to a Fraction.

    Floats are refused: they would smuggle rounding into exact code.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if hasattr(x, "__index__"):
        return Fraction(x.__index__())
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


class RatMatrix:
    """Immutable dense matrix of rationals.

    The column count is stored explicitly so that matrices with zero rows
    still know their width.
    """

    __slots__ = ("_rows", "_cols", "_hash")

    def __init__(self, rows: Iterable[Iterable] = (), cols: int | None = None):
        data = tuple(tuple(as_fraction(x) for x in r) for r in rows)
        if cols is None:
            if not data:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(data[0])
        for r in data:
            if len(r) != cols:
                raise ValueError(f"ragged row: expected {cols} entries, got {len(r)}")
        self._rows = data
        self._cols = cols
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(([int(i == j) for j in range(n)] for i in range(n)), cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(([0] * cols for _ in range(rows)), cols=cols)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self._rows), self._cols)

    def entries(self) -> tuple[Fraction, ...]:
        """Row-major entries."""
        return tuple(x for r in self._rows for x in r)

    def stack(self, other: "RatMatrix | Sequence[Sequence]") -> "RatMatrix":
        other = other if isinstance(other, RatMatrix) else RatMatrix(other, cols=self._cols)
        if other.ncols != self._cols:
            raise ValueError("column counts differ")
        return RatMatrix(self._rows + other.rows, cols=self._cols)

    def transpose(self) -> "RatMatrix":
        return RatMatrix(([r[j] for r in self._rows] for j in range(self._cols)), cols=len(self._rows))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self._cols != other.nrows:
            raise ValueError("shape mismatch")
        o = other.rows
        return RatMatrix(
            ([sum((r[k] * o[k][j] for k in range(self._cols)), Fraction(0)) for j in range(other.ncols)]
             for r in self._rows),
            cols=other.ncols,
        )

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self._cols == other._cols and self._rows == other._rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._cols, self._rows))
        return self._hash

    def __repr__(self):
        body = ", ".join("(" + ", ".join(str(x) for x in r) + ")" for r in self._rows)
        return f"RatMatrix([{body}], cols={self._cols})"


def _coerce(m) -> RatMatrix:
    return m if isinstance(m, RatMatrix) else RatMatrix(m)


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    # Gauss-Jordan in place; returns nonzero rows and pivots.
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f != 0:
                    rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(m) -> tuple[RatMatrix, tuple[int, ...]]:
    """Reduced row echelon form with zero rows dropped, and pivot columns.

    The result is unique for a given row space, so it serves as the canonical
    key of a subspace.

    >>> rref([[1, 1, 1], [2, 2, 2]])[1]
    (0,)
    """
    m = _coerce(m)
    rows, pivots = _rref_rows([list(r) for r in m.rows], m.ncols)
    return RatMatrix(rows, cols=m.ncols), tuple(pivots)


def rank(m) -> int:
    return len(rref(m)[1])


def kernel_basis(m) -> RatMatrix:
    """Basis of ``{v : m v = 0}`` as the rows of a matrix.

    Row ``k`` has a 1 in the ``k``-th free column, 0 in the other free
    columns, and the negated RREF entries in the pivot columns.
    """
    m = _coerce(m)
    red, pivots = rref(m)
    n = m.ncols
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, pc in zip(red.rows, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return RatMatrix(basis, cols=n)


def solve_in_row_space(basis_rows: Sequence[Sequence[Fraction]], v: Sequence[Fraction]):
    """Coefficients expressing ``v`` in linearly independent ``basis_rows``.

    Returns ``None`` when ``v`` is not in their span.
    """
    k = len(basis_rows)
    if k == 0:
        return [] if all(x == 0 for x in v) else None
    n = len(v)
    # Solve B^T c = v via the augmented system [B^T | v].
    aug = [[as_fraction(basis_rows[j][i]) for j in range(k)] + [as_fraction(v[i])] for i in range(n)]
    red, pivots = _rref_rows(aug, k + 1)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for row, pc in zip(red, pivots):
        coeffs[pc] = row[k]
    return coeffs


def _mod_p(x: Fraction, p: int) -> int:
    den = x.denominator % p
    if den == 0:
        raise DenominatorDivisibleByP(f"denominator {x.denominator} vanishes mod {p}")
    return (x.numerator * pow(den, -1, p)) % p


def rank_mod_p(m, p: int) -> int:
    """Rank of ``m`` after reducing every entry modulo the prime ``p``."""
    m = _coerce(m)
    rows = [[_mod_p(x, p) for x in r] for r in m.rows]
    return rank_mod_p_int(rows, m.ncols, p)


def rank_mod_p_int(rows: list[list[int]], ncols: int, p: int) -> int:
    """Rank over F_p of a matrix already reduced to residues; mutates ``rows``."""
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c] % p), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], -1, p)
        prow = [(x * inv) % p for x in rows[r]]
        rows[r] = prow
        for i in range(r + 1, nrows):
            f = rows[i][c] % p
            if f:
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
        r += 1
    return r


def primitive_integer_vector(v: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers, first nonzero entry positive."""
    fr = [as_fraction(x) for x in v]
    den = 1
    for x in fr:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        g = -g
    return tuple(x // g for x in ints)


def det(m) -> Fraction:
    """Determinant of a square matrix by fraction-exact elimination."""
    m = _coerce(m)
    n = m.nrows
    if n != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    rows = [list(r) for r in m.rows]
    out = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            rows[c], rows[pr] = rows[pr], rows[c]
            out = -out
        piv = rows[c][c]
        out *= piv
        for i in range(c + 1, n):
            f = rows[i][c] / piv
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return out
