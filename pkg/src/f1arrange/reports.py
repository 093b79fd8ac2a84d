"""Report objects shared by the command line and library callers."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields

from .arrangement import Arrangement, cone
from .errors import InternalTheoremViolation, UncertifiedPrime
from .f1 import torification_verdict
from .graphs import Graph, theorem44_report
from .lattice import build_lattice, charpoly_delres, charpoly_mobius, grothendieck_class, mobius
from .oracle import FieldSpec, certify, count_complement, good_prime
from .polynomial import IntPolynomial

__all__ = ["Report", "charpoly_report", "f1_report", "graph_report", "count_report"]

SCHEMA_VERSION = 1


@dataclass
class Report:
    """Machine-readable result of one command.

    Every field is JSON-native, so ``Report.from_json(r.to_json()) == r``.
    """

    command: str
    input_summary: dict
    verdict: str | None = None
    charpoly: list[int] | None = None
    charpoly_methods: dict[str, list[int]] | None = None
    taylor: list[int] | None = None
    verdicts: dict | None = None
    witness: dict | None = None
    torus_decomposition: list[dict] | None = None
    oracle: list[dict] | None = None
    theorem44: dict | None = None
    warnings: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    schema: int = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        names = {f.name for f in fields(cls)}
        unknown = set(d) - names
        if unknown:
            raise ValueError(f"unknown report fields: {sorted(unknown)}")
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"== {self.command} =="]
        s = self.input_summary
        lines.append("input: " + ", ".join(f"{k}={v}" for k, v in s.items()))
        if self.charpoly is not None:
            chi = IntPolynomial(self.charpoly)
            lines.append(f"chi(A, t) = {chi.pretty('t')}")
            lines.append(f"[M(A)]    = {grothendieck_class(chi).pretty()}")
        if self.charpoly_methods:
            agree = len({tuple(v) for v in self.charpoly_methods.values()}) == 1
            lines.append(f"methods: {', '.join(sorted(self.charpoly_methods))} ({'agree' if agree else 'DISAGREE'})")
        if self.taylor is not None:
            lines.append(f"Taylor at 1 = {IntPolynomial(self.taylor).pretty('(t-1)')}  coeffs={self.taylor}")
        if self.verdicts:
            v = self.verdicts
            lines.append(
                f"condition (a) Boolean: {v['condition_a']}; condition (c) Taylor >= 0: {v['condition_c']}; "
                f"essential: {v['essential']}"
            )
        if self.theorem44:
            t = self.theorem44
            conds = " ".join(f"({k})={'T' if b else 'F'}" for k, b in t["conditions"].items())
            lines.append(f"b1 = {t['b1']}, |A_G| = {t['hyperplane_count']}; {conds}")
            how = "all" if t["forests_exhaustive"] else "sampled"
            lines.append(f"spanning forests checked: {t['forests_checked']} ({how})")
        if self.verdict:
            lines.append(f"verdict: {self.verdict}")
        if self.witness:
            lines.append("witness: " + _render_witness(self.witness))
        if self.torus_decomposition:
            parts = [f"{d['multiplicity']} x G_m^{d['dim']}" for d in self.torus_decomposition]
            lines.append("torus decomposition: " + " + ".join(parts))
        for o in self.oracle or ():
            status = "match" if o["match"] else "MISMATCH"
            lines.append(f"F_{o['p']}: {o['points']} of {o['enumerated']} points off the hyperplanes, "
                         f"chi({o['p']}) = {o['predicted']} [{status}]")
        for w in self.warnings:
            lines.append(f"warning: {w}")
        for n in self.notes:
            lines.append(f"note: {n}")
        return "\n".join(lines) + "\n"


def _render_witness(w: dict) -> str:
    kind = w.get("kind")
    if kind == "negative_taylor":
        return f"Taylor coefficient c_{w['index']} = {w['value']} < 0"
    if kind == "circuit":
        return f"dependent hyperplanes {w['hyperplanes']}"
    if kind == "independent_normals":
        return f"independent normals, pivot columns {w['pivot_columns']}"
    if kind == "separated_basis":
        cyc = "; ".join("{" + ", ".join(map(str, c)) + "}" for c in w["cycles"])
        return f"separated basis (edge indices): {cyc or 'empty'}"
    if kind == "shared_edge":
        return (f"edge {w['edge']} lies on the fundamental cycles of edges {w['cycles']}; "
                f"|A_G| = {w['hyperplane_count']} > b1 = {w['b1']}")
    return json.dumps(w, sort_keys=True)


def _arrangement_summary(a: Arrangement) -> dict:
    return {"kind": a.kind, "dim": a.ambient_dim, "hyperplanes": a.n}


def _merge_warning(a: Arrangement) -> list[str]:
    if a.merged_duplicates:
        return [f"merged {a.merged_duplicates} duplicate hyperplane(s)"]
    return []


def charpoly_report(a: Arrangement, method: str = "both") -> Report:
    if method not in ("mobius", "delres", "both"):
        raise ValueError(f"unknown method {method!r}")
    methods = {}
    if method in ("mobius", "both"):
        methods["mobius"] = list(charpoly_mobius(mobius(build_lattice(a))).coeffs)
    if method in ("delres", "both"):
        methods["delres"] = list(charpoly_delres(a).coeffs)
    if len({tuple(v) for v in methods.values()}) != 1:
        raise InternalTheoremViolation(f"characteristic polynomial methods disagree: {methods}")
    chi = next(iter(methods.values()))
    return Report(
        command="charpoly",
        input_summary=_arrangement_summary(a),
        charpoly=chi,
        charpoly_methods=methods,
        warnings=_merge_warning(a),
    )


def _oracle_entry(a: Arrangement, q: int | None) -> dict:
    if q is None:
        spec = good_prime(a)
    else:
        if not certify(a, q):
            raise UncertifiedPrime(f"q = {q} does not preserve the intersection lattice; try a larger prime")
        spec = FieldSpec(q, True)
    res = count_complement(a, spec)
    if not res.match:
        raise InternalTheoremViolation(f"point count {res.points} != chi({res.p}) = {res.predicted}")
    return res.to_dict()


def f1_report(a: Arrangement, oracle: bool = False, q: int | None = None) -> Report:
    """Torification analysis; affine input is coned and labeled as such."""
    notes, warnings = [], _merge_warning(a)
    summary = _arrangement_summary(a)
    if not a.is_central:
        a = cone(a)
        notes.append(f"input is affine: analysis applies to its cone in dimension {a.ambient_dim}")
        summary["coned"] = True
    tr = torification_verdict(a)
    notes.extend(tr.notes)
    d = tr.to_dict()
    rep = Report(
        command="f1",
        input_summary=summary,
        verdict=tr.verdict,
        charpoly=list(tr.charpoly.coeffs),
        taylor=list(tr.taylor.coeffs),
        verdicts={k: d[k] for k in ("condition_a", "condition_c", "essential", "torifiable")},
        witness=tr.witness,
        torus_decomposition=d["torus_decomposition"],
        warnings=warnings,
        notes=notes,
    )
    if oracle or q is not None:
        rep.oracle = [_oracle_entry(a, q)]
    return rep


def graph_report(g: Graph, oracle: bool = False) -> tuple[Report, Arrangement]:
    rec = theorem44_report(g)
    tr = torification_verdict(rec.arrangement)
    d = rec.to_dict()
    rep = Report(
        command="graph",
        input_summary={"vertices": g.vertex_count, "edges": g.edge_count, "b1": rec.b1},
        verdict=d["verdict"],
        charpoly=list(tr.charpoly.coeffs),
        taylor=list(tr.taylor.coeffs),
        verdicts={
            "condition_a": tr.condition_a,
            "condition_c": tr.condition_c,
            "essential": tr.essential,
            "torifiable": tr.torifiable,
        },
        witness=rec.witness,
        torus_decomposition=tr.to_dict()["torus_decomposition"],
        theorem44=d,
    )
    if oracle:
        rep.oracle = [_oracle_entry(rec.arrangement, None)]
    return rep, rec.arrangement


def count_report(a: Arrangement, q: int) -> Report:
    notes = []
    summary = _arrangement_summary(a)
    if not a.is_central:
        a = cone(a)
        notes.append(f"input is affine: counting its cone in dimension {a.ambient_dim}")
        summary["coned"] = True
    entry = _oracle_entry(a, q)
    return Report(
        command="count",
        input_summary=summary,
        charpoly=list(charpoly_mobius(mobius(build_lattice(a))).coeffs),
        oracle=[entry],
        warnings=_merge_warning(a),
        notes=notes,
    )

