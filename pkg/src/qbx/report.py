"""The full pipeline report: every check, plus agreement of the three
equivalent condition groups."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from .core import CapExceeded, ConsistencyError, Enumeration
from .koszul import (
    DEFAULT_WORD_BUDGET,
    check_frobenius,
    check_regular_socle,
    eta_chain,
    koszul_dual,
    principal_monomial,
    exterior_dims,
)
from .presentation import Presentation, check_axioms, check_ore, check_weak_cyclic, structural_summary
from .rewriting import DEFAULT_MAX_N, RewriteSystem, find_skew_order, normal_word_counts, pbw_counts
from .yangbaxter import check_linear_ybe, check_set_ybe, tensor_to_json, word_chain_str

HILBERT_CAP = 8


@dataclass(frozen=True)
class ReportConfig:
    hilbert_degree: int = 5
    max_n: int = DEFAULT_MAX_N
    word_budget: int = DEFAULT_WORD_BUDGET

    def __post_init__(self):
        if not 0 <= self.hilbert_degree <= HILBERT_CAP:
            raise CapExceeded("Hilbert degree %d outside 0..%d" % (self.hilbert_degree, HILBERT_CAP))


def order_names(p: Presentation, e: Enumeration) -> list:
    return [p.names[g] for g in e.order]


def set_ybe_json(p: Presentation, v) -> dict:
    out = {"holds": v.holds, "counterexample": None}
    if v.counterexample:
        w, left, right = v.counterexample
        out["counterexample"] = {"triple": p.fmt(w), "r12r23r12": word_chain_str(p, left), "r23r12r23": word_chain_str(p, right)}
    return out


def linear_ybe_json(p: Presentation, v) -> dict:
    out = {"holds": v.holds, "counterexample": None}
    if v.counterexample:
        w, left, right = v.counterexample
        out["counterexample"] = {"word": p.fmt(w), "R12R23R12": tensor_to_json(p, left), "R23R12R23": tensor_to_json(p, right)}
    return out


def frobenius_json(p: Presentation, fv) -> dict:
    out = {"holds": fv.holds, "failure": fv.failure}
    out.update(fv.dims.to_dict())
    out["socle_representative"] = p.fmt(fv.socle.base) if fv.socle is not None else None
    return out


@dataclass
class TheoremBReport:
    presentation: Presentation
    axioms: object
    structure: dict = field(default_factory=dict)
    ore: tuple | None = None
    weak_cyclic: object = None
    frobenius: object = None
    principal: object = None
    regular_socle: object = None
    skew_orders: list | None = None
    set_ybe: object = None
    linear_ybe: object = None
    hilbert: dict | None = None
    chains: tuple | None = None
    dual_dims_check: dict | None = None
    chain_failure: str | None = None
    notes: list = field(default_factory=list)

    @property
    def evaluated(self) -> bool:
        """The conditions are computed whenever the canonical map exists."""
        return self.axioms.binomial.ok and self.axioms.single_occurrence.ok

    @property
    def conditions_agree(self) -> bool | None:
        if not self.evaluated:
            return None
        return len({self.condition_1, self.condition_2, self.condition_3}) == 1

    @property
    def condition_1(self) -> bool | None:
        if not self.evaluated:
            return None
        socle = self.regular_socle.holds if self.regular_socle is not None else False
        return self.weak_cyclic.holds and self.frobenius.holds and socle

    @property
    def condition_2(self) -> bool | None:
        return bool(self.skew_orders) if self.evaluated else None

    @property
    def condition_3(self) -> bool | None:
        return self.linear_ybe.holds if self.evaluated else None

    @property
    def consistent(self) -> bool:
        """False only on a genuine contradiction; agreement of the three
        conditions is enforced for presentations passing all axioms."""
        if not self.evaluated:
            return True
        if self.axioms.ok and not self.conditions_agree:
            return False
        if self.dual_dims_check is not None and not self.dual_dims_check["agrees"]:
            return False
        if self.hilbert is not None and self.hilbert["counts"] != self.hilbert["expected"]:
            return False
        return self.chain_failure is None

    def to_dict(self) -> dict:
        p = self.presentation
        doc = {
            "schema": "qbx/1-report",
            "n": p.n,
            "generators": list(p.names),
            "field": p.field.describe(),
            "relations": [p.fmt_relation(r) for r in p.relations],
            "axioms": self.axioms.to_dict(),
            "structure": self.structure,
        }
        if self.evaluated:
            pm = self.principal
            doc.update({
                "ore": {"left": self.ore[0], "right": self.ore[1]},
                "weak_cyclic": self.weak_cyclic.to_dict(p),
                "frobenius": frobenius_json(p, self.frobenius),
                "principal_monomial": pm.to_dict(p) if pm is not None else None,
                "regular_socle": None if self.regular_socle is None else {
                    "holds": self.regular_socle.holds,
                    "presentations": [p.fmt(w) for w in self.regular_socle.presentations],
                },
                "skew_orders": [order_names(p, e) for e in self.skew_orders],
                "set_ybe": set_ybe_json(p, self.set_ybe),
                "linear_ybe": linear_ybe_json(p, self.linear_ybe),
                "hilbert": self.hilbert,
                "chains": None if self.chains is None else {
                    "order": order_names(p, self.chains[0]),
                    "eta": [p.names[g] for g in self.chains[1]],
                    "theta": [p.names[g] for g in self.chains[2]],
                },
                "dual_dims_check": self.dual_dims_check,
            })
        doc["conditions"] = {
            "weak_cyclic_frobenius_regular_socle": self.condition_1,
            "skew_polynomial_order": self.condition_2,
            "linear_ybe": self.condition_3,
        }
        doc["conditions_agree"] = self.conditions_agree
        doc["consistent"] = self.consistent
        doc["notes"] = list(self.notes)
        return doc


def run_theorem_b(p: Presentation, cfg: ReportConfig = ReportConfig()) -> TheoremBReport:
    rep = TheoremBReport(p, check_axioms(p), structural_summary(p))
    if not rep.evaluated:
        rep.notes.append("canonical map undefined; conditions not evaluated")
        return rep
    if not rep.axioms.ok:
        rep.notes.append("not quantum binomial; agreement of the conditions is reported, not enforced")
    rep.ore = check_ore(p)
    rep.weak_cyclic = check_weak_cyclic(p)
    rep.set_ybe = check_set_ybe(p)
    rep.linear_ybe = check_linear_ybe(p)
    rep.skew_orders = find_skew_order(p, cfg.max_n)

    dual = koszul_dual(p)
    rep.frobenius = check_frobenius(dual, cfg.word_budget)
    if rep.frobenius.holds:
        rep.principal = principal_monomial(dual, cfg.word_budget)
        rep.regular_socle = check_regular_socle(dual, cfg.word_budget)
        if len(rep.principal.klass) != factorial(p.n):
            rep.notes.append("principal class has %d members" % len(rep.principal.klass))

    if rep.skew_orders:
        e = rep.skew_orders[0]
        rs = RewriteSystem(p, e)
        counts = normal_word_counts(rs, cfg.hilbert_degree)
        rep.hilbert = {"order": order_names(p, e), "counts": counts, "expected": pbw_counts(p.n, cfg.hilbert_degree)}
        expected = exterior_dims(p.n)
        rep.dual_dims_check = {"expected": expected, "dual_dims": list(rep.frobenius.dims.dims), "agrees": list(rep.frobenius.dims.dims) == expected}
        try:
            eta, theta = eta_chain(p, e)
            rep.chains = (e, eta, theta)
        except ConsistencyError as exc:
            rep.chain_failure = str(exc)
            rep.notes.append(str(exc))
    return rep


# ---------------------------------------------------------------------------
# text rendering


def _yes(v) -> str:
    return {True: "yes", False: "no", None: "n/a"}[v]


def render_text(rep: TheoremBReport) -> str:
    p = rep.presentation
    lines = ["presentation: n=%d over %s, %d relations" % (p.n, p.field.describe(), len(p.relations))]
    for r in p.relations:
        lines.append("  " + p.fmt_relation(r))
    ax = rep.axioms
    for label, v in (("(a) binomial", ax.binomial), ("(b) single occurrence", ax.single_occurrence),
                     ("(c) square-free", ax.square_free), ("(d) nondegenerate", ax.nondegenerate)):
        lines.append("%-24s %s%s" % (label, _yes(v.ok), "" if v.ok else "  [%s]" % v.witness))
    if rep.evaluated:
        d = rep.to_dict()
        lines.append("%-24s left=%s right=%s" % ("Ore", _yes(rep.ore[0]), _yes(rep.ore[1])))
        wc = d["weak_cyclic"]
        lines.append("%-24s %s%s" % ("weak cyclic", _yes(wc["holds"]), "" if wc["holds"] else "  %s" % wc["witness"]))
        fr = d["frobenius"]
        lines.append("%-24s %s  dims=%s ranks=%s%s" % ("dual Frobenius", _yes(fr["holds"]), fr["dims"], fr["pairing_ranks"],
                                                      "" if fr["holds"] else "  [%s]" % fr["failure"]))
        if d["principal_monomial"]:
            pm = d["principal_monomial"]
            lines.append("%-24s %s, class size %d" % ("principal monomial", pm["representative"], pm["class_size"]))
        if d["regular_socle"]:
            rs = d["regular_socle"]
            lines.append("%-24s %s  %s" % ("regular socle", _yes(rs["holds"]), ", ".join(rs["presentations"])))
        lines.append("%-24s %d found%s" % ("skew orders", len(rep.skew_orders),
                                           "" if not rep.skew_orders else "  e.g. " + " < ".join(d["skew_orders"][0])))
        lines.append("%-24s %s" % ("set YBE", _yes(rep.set_ybe.holds)))
        lines.append("%-24s %s" % ("linear YBE", _yes(rep.linear_ybe.holds)))
        if rep.hilbert:
            lines.append("%-24s %s (expected %s)" % ("Hilbert table", rep.hilbert["counts"], rep.hilbert["expected"]))
        if rep.chains:
            lines.append("%-24s eta=%s theta=%s" % ("chains", d["chains"]["eta"], d["chains"]["theta"]))
    lines.append("conditions: (1) %s  (2) %s  (3) %s" % (_yes(rep.condition_1), _yes(rep.condition_2), _yes(rep.condition_3)))
    lines.append("conditions agree: %s" % _yes(rep.conditions_agree))
    lines.append("consistent: %s" % _yes(rep.consistent))
    for note in rep.notes:
        lines.append("note: " + note)
    return "\n".join(lines) + "\n"

