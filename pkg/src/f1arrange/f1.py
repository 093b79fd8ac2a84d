"""Torifiability of arrangement complements.

An arrangement complement is torifiable exactly when the arrangement is
Boolean.  Nonnegativity of the Taylor coefficients of the characteristic
polynomial at ``t = 1`` is necessary, and also sufficient once the
arrangement is essential.  :func:`torification_verdict` decides the first
and cross-checks the second on every call.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import linalg
from .arrangement import Arrangement, is_boolean, is_essential
from .errors import AffineNotSupported, InternalTheoremViolation
from .lattice import characteristic_polynomial
from .polynomial import IntPolynomial

__all__ = [
    "TaylorAtOne",
    "TorificationReport",
    "taylor_at_one",
    "condition_c",
    "lemma31_check",
    "find_circuit",
    "torus_decomposition",
    "torification_verdict",
]

TORIFIABLE = "torifiable"
NOT_TORIFIABLE = "not_torifiable"


@dataclass(frozen=True)
class TaylorAtOne:
    """Coefficients ``c_i`` with ``chi(t) = sum(c_i * (t - 1)**i)``."""

    coeffs: tuple[int, ...]

    def expand(self) -> IntPolynomial:
        out = IntPolynomial()
        for i, c in enumerate(self.coeffs):
            if c:
                out = out + c * IntPolynomial.t_minus_one_power(i)
        return out

    def first_negative(self) -> int | None:
        return next((i for i, c in enumerate(self.coeffs) if c < 0), None)


@dataclass
class TorificationReport:
    condition_a: bool
    condition_c: bool
    essential: bool
    verdict: str
    witness: dict
    torus_decomposition: list[tuple[int, int]] | None
    charpoly: IntPolynomial
    taylor: TaylorAtOne
    n: int
    ambient_dim: int
    notes: list[str] = field(default_factory=list)

    @property
    def torifiable(self) -> bool:
        return self.verdict == TORIFIABLE

    def to_dict(self) -> dict:
        return {
            "condition_a": self.condition_a,
            "condition_c": self.condition_c,
            "essential": self.essential,
            "verdict": self.verdict,
            "torifiable": self.torifiable,
            "witness": self.witness,
            "torus_decomposition": (
                None if self.torus_decomposition is None
                else [{"dim": d, "multiplicity": m} for d, m in self.torus_decomposition]
            ),
            "notes": list(self.notes),
        }


def taylor_at_one(chi: IntPolynomial) -> TaylorAtOne:
    """Expand ``chi`` around ``t = 1``: ``c_i = sum_j a_j * C(j, i)``.

    >>> taylor_at_one(IntPolynomial([0, -3, 6, -4, 1])).coeffs
    (0, 1, 0, 0, 1)
    """
    a = chi.coeffs
    return TaylorAtOne(tuple(sum(a[j] * comb(j, i) for j in range(i, len(a))) for i in range(len(a))))


def condition_c(ta: TaylorAtOne) -> bool:
    return all(c >= 0 for c in ta.coeffs)


def lemma31_check(a: Arrangement, ta: TaylorAtOne) -> bool:
    """Nonnegative Taylor data forces ``n <= l``; returns whether that held."""
    return not condition_c(ta) or a.n <= a.ambient_dim


def find_circuit(a: Arrangement) -> list[int] | None:
    """A minimal linearly dependent set of normals, or ``None`` if independent.

    Normals are added greedily; the first one falling into the span of the
    independent ones collected so far, together with the members its unique
    expression actually uses, is a circuit.
    """
    basis: list[tuple] = []
    used: list[int] = []
    for i, h in enumerate(a.hyperplanes):
        coeffs = linalg.solve_in_row_space(basis, [Fraction(c) for c in h.normal])
        if coeffs is None:
            basis.append(h.normal)
            used.append(i)
            continue
        return sorted([used[k] for k, c in enumerate(coeffs) if c != 0] + [i])
    return None


def torus_decomposition(n: int, ambient_dim: int) -> list[tuple[int, int]]:
    """Split ``(L-1)^n L^(l-n)`` into tori: ``C(l-n, k)`` copies of dimension ``n+k``.

    Listed with the largest torus first.
    """
    free = ambient_dim - n
    return [(n + k, comb(free, k)) for k in range(free, -1, -1)]


def torification_verdict(a: Arrangement, chi: IntPolynomial | None = None) -> TorificationReport:
    """Decide torifiability of the complement of a central arrangement.

    The verdict is Boolean-ness.  The Taylor test is evaluated independently
    and the proven implications between the two are asserted; a failure
    raises :class:`InternalTheoremViolation`.
    """
    if not a.is_central:
        raise AffineNotSupported("torification analysis needs a central arrangement; apply cone() first")
    if chi is None:
        chi = characteristic_polynomial(a)
    ta = taylor_at_one(chi)
    cond_a = is_boolean(a)
    cond_c = condition_c(ta)
    essential = is_essential(a)

    if cond_a and not cond_c:
        raise InternalTheoremViolation(f"Boolean arrangement with negative Taylor data {ta.coeffs}")
    if not lemma31_check(a, ta):
        raise InternalTheoremViolation(f"Taylor data nonnegative but n={a.n} > l={a.ambient_dim}")
    if essential and cond_a != cond_c:
        raise InternalTheoremViolation(
            f"essential arrangement with condition_a={cond_a} but condition_c={cond_c}"
        )

    notes = []
    if cond_a:
        _, pivots = linalg.rref(a.normal_matrix())
        witness = {"kind": "independent_normals", "pivot_columns": list(pivots)}
        decomposition = torus_decomposition(a.n, a.ambient_dim)
        expected = IntPolynomial.t_minus_one_power(a.n) * IntPolynomial.monomial(a.ambient_dim - a.n)
        if chi != expected:
            raise InternalTheoremViolation(f"Boolean arrangement with chi = {chi}, expected {expected}")
    else:
        decomposition = None
        neg = ta.first_negative()
        if neg is not None:
            witness = {"kind": "negative_taylor", "index": neg, "value": ta.coeffs[neg]}
        else:
            witness = {"kind": "circuit", "hyperplanes": find_circuit(a)}
            notes.append("condition (c) holds but the arrangement is non-essential: "
                         "(c) is necessary, not sufficient, for torifiability")
    return TorificationReport(
        condition_a=cond_a,
        condition_c=cond_c,
        essential=essential,
        verdict=TORIFIABLE if cond_a else NOT_TORIFIABLE,
        witness=witness,
        torus_decomposition=decomposition,
        charpoly=chi,
        taylor=ta,
        n=a.n,
        ambient_dim=a.ambient_dim,
        notes=notes,
    )
