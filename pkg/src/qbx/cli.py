"""Command-line front end.

Every subcommand reads a ``qbx/1`` presentation file and writes a JSON
document to stdout (or ``--out``); a short text summary goes to stderr
unless ``--json`` is given.

Exit codes: 0 ok, 1 input error, 2 internal consistency failure,
3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import CapExceeded, ConsistencyError, Enumeration, Field, InputError, QbxError
from .fileio import load
from .koszul import (
    check_frobenius,
    check_regular_socle,
    dual_complement,
    dual_normal_words,
    eta_chain,
    koszul_dual,
    principal_monomial,
)
from .presentation import Presentation, check_axioms, check_ore, check_weak_cyclic, structural_summary
from .report import HILBERT_CAP, ReportConfig, frobenius_json, linear_ybe_json, order_names, render_text, run_theorem_b, set_ybe_json
from .rewriting import DEFAULT_MAX_N, RewriteSystem, check_groebner, find_skew_order, normal_word_counts, pbw_counts
from .yangbaxter import check_linear_ybe, check_set_ybe

EXIT_OK, EXIT_INPUT, EXIT_CONSISTENCY, EXIT_CAP = 0, 1, 2, 3


class Failure(Exception):
    """A computed document that must still be written, with a nonzero status."""

    def __init__(self, doc, code, message):
        super().__init__(message)
        self.doc, self.code = doc, code


def parse_order(p: Presentation, text: str) -> Enumeration:
    """``"i1,i2,..."`` with 1-based indices or generator names, least first."""
    parts = [s.strip() for s in text.split(",") if s.strip()]
    index = {name: i for i, name in enumerate(p.names)}
    order = []
    for s in parts:
        if s in index:
            order.append(index[s])
        elif s.isdigit() and 1 <= int(s) <= p.n:
            order.append(int(s) - 1)
        else:
            raise InputError("unknown generator %r in --order" % s)
    if sorted(order) != list(range(p.n)):
        raise InputError("--order must list each of the %d generators once" % p.n)
    return Enumeration(tuple(order))


def require_canonical_map(p: Presentation, what: str):
    ax = check_axioms(p)
    if not (ax.binomial.ok and ax.single_occurrence.ok):
        raise Failure({"axioms": ax.to_dict()}, EXIT_INPUT, "%s needs conditions (a) and (b)" % what)


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(p, args):
    ax = check_axioms(p)
    doc = {"axioms": ax.to_dict(), "structure": structural_summary(p)}
    if ax.binomial.ok and ax.single_occurrence.ok:
        left, right = check_ore(p)
        doc["ore"] = {"left": left, "right": right}
        doc["weak_cyclic"] = check_weak_cyclic(p).to_dict(p)
    return doc


def cmd_order_search(p, args):
    require_canonical_map(p, "order search")
    found = find_skew_order(p, args.max_n)
    return {"count": len(found), "orders": [order_names(p, e) for e in found]}


def cmd_groebner(p, args):
    e = parse_order(p, args.order) if args.order else Enumeration.identity(p.n)
    v = check_groebner(RewriteSystem(p, e))
    failures = []
    for w, a, b in v.failures:
        failures.append({
            "overlap": p.fmt(w),
            "left_branch": _branch(p, a),
            "right_branch": _branch(p, b),
        })
    return {"order": order_names(p, e), "holds": v.holds, "reason": v.reason, "failures": failures}


def _branch(p, nf):
    from .core import format_scalar

    w, c = nf
    return {"word": None if w is None else p.fmt(w), "coeff": format_scalar(c)}


def cmd_ybe(p, args):
    require_canonical_map(p, "the braid check")
    both = not (args.set or args.linear)
    doc = {}
    if args.set or both:
        doc["set_ybe"] = set_ybe_json(p, check_set_ybe(p))
    if args.linear or both:
        doc["linear_ybe"] = linear_ybe_json(p, check_linear_ybe(p))
    return doc


def cmd_dual(p, args):
    dp = koszul_dual(p)
    return {"generators": list(dp.names), "relation_count": dp.relation_count, "relations": dp.relation_strings()}


def cmd_frobenius(p, args):
    return frobenius_json(p, check_frobenius(koszul_dual(p)))


def cmd_socle(p, args):
    dp = koszul_dual(p)
    fv = check_frobenius(dp)
    if not fv.holds:
        return {"frobenius": frobenius_json(p, fv), "principal_monomial": None, "regular_socle": None}
    pm = principal_monomial(dp)
    rs = check_regular_socle(dp)
    doc = {
        "frobenius": frobenius_json(p, fv),
        "principal_monomial": pm.to_dict(p),
        "regular_socle": {"holds": rs.holds, "presentations": [p.fmt(w) for w in rs.presentations]},
    }
    if args.order:
        e = parse_order(p, args.order)
        chains = eta_chain(p, e)
        doc["chains"] = {"order": order_names(p, e), "eta": [p.names[g] for g in chains[0]], "theta": [p.names[g] for g in chains[1]]}
        doc["complements"] = {}
        for k in range(p.n + 1):
            for u in dual_normal_words(e, k):
                u1, u2 = dual_complement(dp, e, u, chains)
                doc["complements"][p.fmt(u)] = {"right": p.fmt(u1), "left": p.fmt(u2)}
    return doc


def cmd_hilbert(p, args):
    if not 0 <= args.max_degree <= HILBERT_CAP:
        raise CapExceeded("--max-degree %d outside 0..%d" % (args.max_degree, HILBERT_CAP))
    if args.order:
        e = parse_order(p, args.order)
        if not check_groebner(RewriteSystem(p, e)).holds:
            raise Failure({"order": order_names(p, e), "certified": False}, EXIT_INPUT, "order is not a certified skew order")
    else:
        require_canonical_map(p, "the Hilbert table")
        found = find_skew_order(p, args.max_n)
        if not found:
            return {"certified": False, "order": None, "counts": None, "expected": pbw_counts(p.n, args.max_degree)}
        e = found[0]
    counts = normal_word_counts(RewriteSystem(p, e), args.max_degree)
    return {"certified": True, "order": order_names(p, e), "counts": counts, "expected": pbw_counts(p.n, args.max_degree)}


def cmd_theorem_b(p, args):
    rep = run_theorem_b(p, ReportConfig(hilbert_degree=args.hilbert_degree, max_n=args.max_n))
    if not args.json:
        sys.stderr.write(render_text(rep))
    doc = rep.to_dict()
    if not rep.consistent:
        raise Failure(doc, EXIT_CONSISTENCY, "equivalent conditions disagree; see report")
    return doc


COMMANDS = {
    "check": (cmd_check, "axioms, structural consequences, Ore and weak cyclic conditions"),
    "order-search": (cmd_order_search, "all enumerations giving a skew-polynomial Groebner basis"),
    "groebner": (cmd_groebner, "overlap resolution under one enumeration"),
    "ybe": (cmd_ybe, "set-theoretic and linear braid relations"),
    "dual": (cmd_dual, "relations of the Koszul dual"),
    "frobenius": (cmd_frobenius, "graded dimensions and pairing ranks of the dual"),
    "socle": (cmd_socle, "principal monomial, regular socle, chains and complements"),
    "theorem-b": (cmd_theorem_b, "full report with the three equivalent conditions"),
    "hilbert": (cmd_hilbert, "normal-word counts of the algebra under a certified order"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="presentation file (JSON, schema qbx/1)")
    common.add_argument("--field", help="rational | fp | fp:<p> (overrides the file)")
    common.add_argument("--json", action="store_true", help="suppress the text summary on stderr")
    common.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="refuse presentations with more generators")
    common.add_argument("--out", help="write the JSON document here instead of stdout")

    parser = argparse.ArgumentParser(prog="qbx", description="Quadratic binomial algebra toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if name in ("groebner", "socle", "hilbert"):
            sp.add_argument("--order", help="enumeration, least first: 1-based indices or names, comma separated")
        if name == "ybe":
            sp.add_argument("--set", action="store_true", help="set-theoretic check only")
            sp.add_argument("--linear", action="store_true", help="linear check only")
        if name == "hilbert":
            sp.add_argument("--max-degree", type=int, default=5)
        if name == "theorem-b":
            sp.add_argument("--hilbert-degree", type=int, default=5)
    return parser


def _summary(doc, indent=""):
    lines = []
    for k, v in doc.items():
        if isinstance(v, dict) and v and len(json.dumps(v)) > 70:
            lines.append("%s%s:" % (indent, k))
            lines.extend(_summary(v, indent + "  "))
        else:
            lines.append("%s%s: %s" % (indent, k, json.dumps(v, ensure_ascii=False)))
    return lines


def _emit(doc, args):
    text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        if args.max_n > DEFAULT_MAX_N:
            raise CapExceeded("--max-n %d exceeds the hard cap %d" % (args.max_n, DEFAULT_MAX_N))
        fld = Field.parse(args.field) if args.field else None
        p = load(args.file, fld)
        if p.n > args.max_n:
            raise CapExceeded("n=%d exceeds the cap %d" % (p.n, args.max_n))
        doc = func(p, args)
    except Failure as exc:
        _emit(exc.doc, args)
        sys.stderr.write("qbx: %s\n" % exc)
        return exc.code
    except InputError as exc:
        sys.stderr.write("qbx: input error: %s\n" % exc)
        return EXIT_INPUT
    except CapExceeded as exc:
        sys.stderr.write("qbx: refused: %s\n" % exc)
        return EXIT_CAP
    except ConsistencyError as exc:
        sys.stderr.write("qbx: internal consistency failure: %s\n" % exc)
        return EXIT_CONSISTENCY
    except QbxError as exc:
        sys.stderr.write("qbx: %s\n" % exc)
        return EXIT_INPUT
    _emit(doc, args)
    if not args.json and args.command != "theorem-b":
        sys.stderr.write("\n".join(_summary(doc)) + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
