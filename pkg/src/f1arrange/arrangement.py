"""Hyperplane arrangements: canonical storage, coning, deletion, restriction.

A hyperplane is ``{x : normal . x = offset}``.  Normals are stored as
primitive integer vectors whose first nonzero entry is positive, so two
hyperplanes are the same set exactly when their stored forms are equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .errors import AffineNotSupported, IndexOutOfRange, ParseError, ZeroNormal

__all__ = [
    "Hyperplane",
    "Arrangement",
    "normalize",
    "is_essential",
    "is_boolean",
    "cone",
    "delete",
    "restrict",
    "coordinate_arrangement",
    "parse_arrangement",
    "format_arrangement",
    "read_arrangement",
]


@dataclass(frozen=True, order=True)
class Hyperplane:
    normal: tuple[int, ...]
    offset: Fraction = Fraction(0)

    @classmethod
    def from_raw(cls, normal: Sequence, offset=0) -> "Hyperplane":
        fr = [linalg.as_fraction(x) for x in normal]
        off = linalg.as_fraction(offset)
        if all(x == 0 for x in fr):
            raise ZeroNormal("hyperplane normal is the zero vector")
        prim = linalg.primitive_integer_vector(fr)
        # prim = fr * s for the scalar s read off any nonzero coordinate
        j = next(i for i, x in enumerate(fr) if x != 0)
        scale = Fraction(prim[j]) / fr[j]
        return cls(prim, off * scale)

    @property
    def dim(self) -> int:
        return len(self.normal)

    @property
    def is_linear(self) -> bool:
        return self.offset == 0

    def __str__(self):
        terms = []
        for i, c in enumerate(self.normal):
            if c == 0:
                continue
            name = f"x{i + 1}"
            mag = abs(c)
            body = name if mag == 1 else f"{mag}{name}"
            if not terms:
                terms.append(body if c > 0 else "-" + body)
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return f"{' '.join(terms)} = {self.offset}"


@dataclass(frozen=True, eq=False)
class Arrangement:
    """A reduced arrangement in ``Q^ambient_dim``.

    Hyperplane order is the order of first appearance in the input and is
    what indices refer to.  Equality ignores that order.
    """

    ambient_dim: int
    hyperplanes: tuple[Hyperplane, ...] = ()
    merged_duplicates: int = field(default=0, compare=False)

    @property
    def n(self) -> int:
        return len(self.hyperplanes)

    @property
    def kind(self) -> str:
        return "central" if all(h.is_linear for h in self.hyperplanes) else "affine"

    @property
    def is_central(self) -> bool:
        return self.kind == "central"

    def normal_matrix(self) -> linalg.RatMatrix:
        return linalg.RatMatrix((h.normal for h in self.hyperplanes), cols=self.ambient_dim)

    def key(self) -> tuple:
        """Order-independent canonical key, used for memoization and equality."""
        return (self.ambient_dim, tuple(sorted(self.hyperplanes)))

    def __eq__(self, other):
        if not isinstance(other, Arrangement):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __len__(self):
        return len(self.hyperplanes)

    def __iter__(self):
        return iter(self.hyperplanes)

    def __repr__(self):
        hs = ", ".join(str(h) for h in self.hyperplanes)
        return f"Arrangement(dim={self.ambient_dim}, {self.kind}, [{hs}])"


def normalize(normals: Iterable[Sequence], ambient_dim: int, offsets: Iterable | None = None) -> Arrangement:
    """Canonicalize raw hyperplanes and merge coincident ones.

    >>> normalize([[1, 0], [2, 0], [0, 1]], 2).n
    2
    """
    normals = list(normals)
    offs = [0] * len(normals) if offsets is None else list(offsets)
    if len(offs) != len(normals):
        raise ValueError("offsets and normals differ in length")
    seen = {}
    for raw, off in zip(normals, offs):
        if isinstance(raw, Hyperplane):
            raw, off = raw.normal, raw.offset
        if len(raw) != ambient_dim:
            raise ValueError(f"normal {list(raw)} has length {len(raw)}, expected {ambient_dim}")
        h = Hyperplane.from_raw(raw, off)
        seen.setdefault(h, None)
    return Arrangement(ambient_dim, tuple(seen), merged_duplicates=len(normals) - len(seen))


def coordinate_arrangement(n: int, ambient_dim: int) -> Arrangement:
    """The Boolean arrangement ``x_1 ... x_n = 0`` in ``Q^ambient_dim``."""
    if n > ambient_dim:
        raise ValueError("a coordinate arrangement needs n <= ambient_dim")
    return normalize(([int(i == j) for j in range(ambient_dim)] for i in range(n)), ambient_dim)


def _require_central(a: Arrangement, what: str):
    if not a.is_central:
        raise AffineNotSupported(f"{what} needs a central arrangement; apply cone() first")


def is_essential(a: Arrangement) -> bool:
    _require_central(a, "is_essential")
    return linalg.rank(a.normal_matrix()) == a.ambient_dim


def is_boolean(a: Arrangement) -> bool:
    """True iff the normals are linearly independent.

    For a reduced central arrangement that is the same as the lattice of
    flats being the lattice of all subsets.
    """
    _require_central(a, "is_boolean")
    return linalg.rank(a.normal_matrix()) == a.n


def cone(a: Arrangement) -> Arrangement:
    """Homogenize with a new last coordinate ``x0`` and add ``{x0 = 0}``."""
    lifted = [tuple(h.normal) + (-h.offset,) for h in a.hyperplanes]
    lifted.append((0,) * a.ambient_dim + (1,))
    return normalize(lifted, a.ambient_dim + 1)


def _check_index(a: Arrangement, h: int):
    if not 0 <= h < a.n:
        raise IndexOutOfRange(f"hyperplane index {h} out of range for {a.n} hyperplanes")


def delete(a: Arrangement, h: int) -> Arrangement:
    _check_index(a, h)
    return Arrangement(a.ambient_dim, a.hyperplanes[:h] + a.hyperplanes[h + 1:])


def restriction_chart(a: Arrangement, h: int) -> linalg.RatMatrix:
    """Rows form the basis of hyperplane ``h`` used as coordinates by :func:`restrict`."""
    _check_index(a, h)
    return linalg.kernel_basis(linalg.RatMatrix([a.hyperplanes[h].normal]))


def restrict(a: Arrangement, h: int) -> Arrangement:
    """Restriction of the other hyperplanes to hyperplane ``h``.

    ``H`` is identified with ``Q^(l-1)`` through the canonical kernel basis
    of its normal; each other normal is pulled back through that chart.
    Hyperplanes containing ``H`` pull back to zero and are dropped.
    """
    _check_index(a, h)
    _require_central(a, "restrict")
    chart = restriction_chart(a, h).rows
    pulled = []
    for i, other in enumerate(a.hyperplanes):
        if i == h:
            continue
        v = [sum((c * x for c, x in zip(row, other.normal)), Fraction(0)) for row in chart]
        if any(v):
            pulled.append(v)
    return normalize(pulled, a.ambient_dim - 1)


# --- text format -----------------------------------------------------------

def parse_arrangement(text: str) -> Arrangement:
    """Parse the line-based arrangement format.

    ::

        arrangement central dim=4
        H 1 0 0 0
        H 1 1 1 0
        # affine files add an offset:  H 1 -1/2 = 3
    """
    header = None
    normals, offsets = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if header is None:
            if tokens[0] != "arrangement" or len(tokens) != 3 or not tokens[2].startswith("dim="):
                raise ParseError("expected 'arrangement <central|affine> dim=<l>'", lineno)
            kind = tokens[1]
            if kind not in ("central", "affine"):
                raise ParseError(f"unknown arrangement kind {kind!r}", lineno)
            try:
                dim = int(tokens[2][4:])
            except ValueError:
                raise ParseError(f"bad dimension {tokens[2][4:]!r}", lineno) from None
            if dim < 0:
                raise ParseError("dimension must be nonnegative", lineno)
            header = (kind, dim)
            continue
        kind, dim = header
        if tokens[0] != "H":
            raise ParseError(f"expected a hyperplane line starting with 'H', got {tokens[0]!r}", lineno)
        body = tokens[1:]
        offset = "0"
        if "=" in body:
            if kind == "central":
                raise ParseError("offsets are not allowed in a central arrangement", lineno)
            eq = body.index("=")
            if eq != len(body) - 2:
                raise ParseError("expected exactly one offset after '='", lineno)
            offset = body[-1]
            body = body[:eq]
        elif kind == "affine":
            raise ParseError("affine hyperplane lines need '= <offset>'", lineno)
        if len(body) != dim:
            raise ParseError(f"expected {dim} coefficients, got {len(body)}", lineno)
        try:
            coeffs = [Fraction(c) for c in body]
            off = Fraction(offset)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational coefficient: {exc}", lineno) from None
        if all(c == 0 for c in coeffs):
            raise ParseError("zero normal vector", lineno)
        normals.append(coeffs)
        offsets.append(off)
    if header is None:
        raise ParseError("empty arrangement file")
    return normalize(normals, header[1], offsets)


def read_arrangement(path) -> Arrangement:
    with open(path, encoding="utf-8") as fh:
        return parse_arrangement(fh.read())


def format_arrangement(a: Arrangement, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"arrangement {a.kind} dim={a.ambient_dim}")
    for h in a.hyperplanes:
        coeffs = " ".join(str(c) for c in h.normal)
        if a.kind == "affine":
            lines.append(f"H {coeffs} = {h.offset}")
        else:
            lines.append(f"H {coeffs}".rstrip())
    return "\n".join(lines) + "\n"
