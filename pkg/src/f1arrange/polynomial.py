"""Univariate polynomials with integer coefficients."""

from __future__ import annotations

from math import comb
from typing import Iterable


class IntPolynomial:
    """Dense integer polynomial; ``coeffs[k]`` multiplies ``var**k``.

    Trailing zeros are stripped, so the zero polynomial has no coefficients
    and degree -1.  ``var`` only affects rendering: a characteristic
    polynomial in ``t`` and its Grothendieck class in ``L`` share coefficients.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[int] = (), var: str = "t"):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1, var: str = "t") -> "IntPolynomial":
        return cls([0] * degree + [coeff], var=var)

    @classmethod
    def t_minus_one_power(cls, n: int, var: str = "t") -> "IntPolynomial":
        return cls([comb(n, k) * (-1) ** (n - k) for k in range(n + 1)], var=var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def with_var(self, var: str) -> "IntPolynomial":
        return IntPolynomial(self.coeffs, var=var)

    def _other(self, other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial([other], var=self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial((self[k] + other[k] for k in range(n)), var=self.var)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial((-c for c in self.coeffs), var=self.var)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(var=self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out, var=self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = IntPolynomial([1], var=self.var)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        return self.pretty()

    def pretty(self, var: str | None = None) -> str:
        """Render highest degree first, e.g. ``t^4 - 4t^3 + 6t^2 - 3t``."""
        var = var or self.var
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)
