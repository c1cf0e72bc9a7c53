"""Braid-relation checks for the canonical map and its linearisation."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import Tensor, format_scalar
from .presentation import Presentation, canonical_map


@dataclass(frozen=True)
class SetSolutionVerdict:
    holds: bool
    counterexample: tuple | None = None  # (triple, r12 r23 r12 chain, r23 r12 r23 chain)


@dataclass(frozen=True)
class LinearSolutionVerdict:
    holds: bool
    counterexample: tuple | None = None  # (basis word, left Tensor, right Tensor)


def check_set_ybe(p: Presentation) -> SetSolutionVerdict:
    """Compare ``r12 r23 r12`` with ``r23 r12 r23`` on all triples; the
    reported witness is the deglex-least failing triple."""
    r = canonical_map(p)

    def r12(u):
        return r(u[0], u[1]) + u[2:]

    def r23(u):
        return u[:1] + r(u[1], u[2])

    for w in product(range(p.n), repeat=3):
        left = [w]
        for f in (r12, r23, r12):
            left.append(f(left[-1]))
        right = [w]
        for f in (r23, r12, r23):
            right.append(f(right[-1]))
        if left[-1] != right[-1]:
            return SetSolutionVerdict(False, (w, tuple(left), tuple(right)))
    return SetSolutionVerdict(True)


def linear_map(p: Presentation) -> dict:
    """The linear map on pairs: ``pair -> (image pair, scalar)``.

    ``R(lhs) = c * rhs`` and ``R(rhs) = c^-1 * lhs`` for ``lhs = c * rhs``;
    pairs outside every relation are fixed.
    """
    one = p.field.one
    R = {(x, y): ((x, y), one) for x in range(p.n) for y in range(p.n)}
    canonical_map(p)  # rejects repeated occurrences
    for rel in p.relations:
        R[rel.lhs] = (rel.rhs, rel.coeff)
        R[rel.rhs] = (rel.lhs, 1 / rel.coeff)
    return R


def apply_at(R: dict, t: Tensor, i: int) -> Tensor:
    """Apply ``R`` to tensor factors ``i, i+1``."""
    out = []
    for w, c in t.items():
        img, k = R[w[i:i + 2]]
        out.append((w[:i] + img + w[i + 2:], c * k))
    return Tensor(out, t.degree)


def check_linear_ybe(p: Presentation) -> LinearSolutionVerdict:
    R = linear_map(p)
    one = p.field.one
    for w in product(range(p.n), repeat=3):
        t = Tensor({w: one})
        left = apply_at(R, apply_at(R, apply_at(R, t, 0), 1), 0)
        right = apply_at(R, apply_at(R, apply_at(R, t, 1), 0), 1)
        if left != right:
            return LinearSolutionVerdict(False, (w, left, right))
    return LinearSolutionVerdict(True)


def word_chain_str(p: Presentation, chain) -> list:
    return [p.fmt(w) for w in chain]


def tensor_to_json(p: Presentation, t: Tensor) -> dict:
    return {p.fmt(w): format_scalar(c) for w, c in sorted(t.items())}

