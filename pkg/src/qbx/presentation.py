"""Quadratic binomial presentations and the checks that read only the relations."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .core import QQ, Enumeration, Field, InputError, Word, format_scalar


def default_names(n: int) -> tuple:
    return tuple("x%d" % (i + 1) for i in range(n))


@dataclass(frozen=True)
class BinomialRelation:
    """``lhs = coeff * rhs`` in the algebra, i.e. ``lhs - coeff*rhs`` is a relation."""

    lhs: Word
    coeff: object
    rhs: Word

    def __post_init__(self):
        object.__setattr__(self, "lhs", tuple(self.lhs))
        object.__setattr__(self, "rhs", tuple(self.rhs))
        if len(self.lhs) != 2 or len(self.rhs) != 2:
            raise InputError("relations must be quadratic: %r, %r" % (self.lhs, self.rhs))
        if not self.coeff:
            raise InputError("zero coefficient in relation %r = 0 * %r" % (self.lhs, self.rhs))

    def swapped(self) -> "BinomialRelation":
        return BinomialRelation(self.rhs, 1 / self.coeff, self.lhs)


@dataclass(frozen=True)
class Presentation:
    """Generators ``0..n-1`` with binomial relations, stored with ``lhs`` the
    deglex-greater side under the declared (index) order."""

    n: int
    relations: tuple
    names: tuple = None
    field: Field = QQ

    def __post_init__(self):
        names = default_names(self.n) if self.names is None else tuple(self.names)
        if len(names) != self.n or len(set(names)) != self.n:
            raise InputError("need %d distinct generator names, got %r" % (self.n, names))
        object.__setattr__(self, "names", names)
        ident = Enumeration.identity(self.n)
        rels = []
        seen = set()
        for rel in self.relations:
            if not isinstance(rel, BinomialRelation):
                lhs, c, rhs = rel
                rel = BinomialRelation(lhs, self.field(c), rhs)
            else:
                rel = BinomialRelation(rel.lhs, self.field(rel.coeff), rel.rhs)
            for a in rel.lhs + rel.rhs:
                if not (isinstance(a, int) and 0 <= a < self.n):
                    raise InputError("generator index %r out of range for n=%d" % (a, self.n))
            if ident.key(rel.rhs) > ident.key(rel.lhs):
                rel = rel.swapped()
            if rel.lhs in seen:
                raise InputError("two relations share the leading word %s" % self.fmt(rel.lhs))
            seen.add(rel.lhs)
            rels.append(rel)
        object.__setattr__(self, "relations", tuple(rels))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable, names: Sequence[str] | None = None, field: Field = QQ):
        """Build from ``(lhs, rhs)`` or ``(lhs, coeff, rhs)`` using 1-based indices."""
        rels = []
        for item in pairs:
            if len(item) == 2:
                lhs, rhs = item
                c = 1
            else:
                lhs, c, rhs = item
            rels.append((tuple(a - 1 for a in lhs), c, tuple(a - 1 for a in rhs)))
        return cls(n, tuple(rels), names, field)

    def with_field(self, fld: Field) -> "Presentation":
        return Presentation(self.n, tuple((r.lhs, _lift(r.coeff), r.rhs) for r in self.relations), self.names, fld)

    def fmt(self, w: Sequence[int]) -> str:
        return "".join(self.names[a] for a in w) if w else "1"

    def fmt_relation(self, rel: BinomialRelation) -> str:
        c = format_scalar(rel.coeff)
        coeff = "" if c == "1/1" else "(%s)*" % c
        return "%s = %s%s" % (self.fmt(rel.lhs), coeff, self.fmt(rel.rhs))

    @cached_property
    def moves(self) -> dict:
        """``pair -> [(other, c), ...]`` with ``pair = c * other`` in the algebra."""
        m = defaultdict(list)
        for rel in self.relations:
            if rel.lhs == rel.rhs:
                continue
            m[rel.lhs].append((rel.rhs, rel.coeff))
            m[rel.rhs].append((rel.lhs, 1 / rel.coeff))
        return dict(m)


def _lift(c):
    from fractions import Fraction

    from .core import Mod

    return c.v if isinstance(c, Mod) else Fraction(c)


# ---------------------------------------------------------------------------
# canonical map


@dataclass(frozen=True)
class CanonicalMap:
    """Involutive permutation of pairs read off the relations."""

    n: int
    table: dict = field(hash=False)

    def __call__(self, x: int, y: int) -> tuple:
        return self.table[(x, y)]

    def left(self, x: int, y: int) -> int:
        """The left action of ``x`` applied to ``y``."""
        return self.table[(x, y)][0]

    def right(self, y: int, x: int) -> int:
        """The right action of ``y`` applied to ``x``."""
        return self.table[(x, y)][1]

    def is_involutive(self) -> bool:
        return all(self.table[q] == p for p, q in self.table.items())

    def left_degenerate_at(self) -> int | None:
        for x in range(self.n):
            if len({self.left(x, y) for y in range(self.n)}) != self.n:
                return x
        return None

    def right_degenerate_at(self) -> int | None:
        for y in range(self.n):
            if len({self.right(y, x) for x in range(self.n)}) != self.n:
                return y
        return None

    def is_nondegenerate(self) -> bool:
        return self.left_degenerate_at() is None and self.right_degenerate_at() is None

    def is_square_free(self) -> bool:
        return all(self.table[(x, x)] == (x, x) for x in range(self.n))


def _occurrences(p: Presentation) -> dict:
    occ = defaultdict(int)
    for rel in p.relations:
        occ[rel.lhs] += 1
        occ[rel.rhs] += 1
    return occ


def canonical_map(p: Presentation) -> CanonicalMap:
    table = {(x, y): (x, y) for x in range(p.n) for y in range(p.n)}
    for w, k in _occurrences(p).items():
        if k > 1:
            raise InputError("canonical map undefined: %s occurs %d times" % (p.fmt(w), k))
    for rel in p.relations:
        table[rel.lhs] = rel.rhs
        table[rel.rhs] = rel.lhs
    return CanonicalMap(p.n, table)


# ---------------------------------------------------------------------------
# axioms


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: str | None = None

    def to_dict(self):
        return {"ok": self.ok, "witness": self.witness}


@dataclass(frozen=True)
class AxiomReport:
    binomial: Verdict
    single_occurrence: Verdict
    square_free: Verdict
    nondegenerate: Verdict

    @property
    def ok(self) -> bool:
        return all(v.ok for v in (self.binomial, self.single_occurrence, self.square_free, self.nondegenerate))

    def to_dict(self):
        return {
            "ok": self.ok,
            "binomial": self.binomial.to_dict(),
            "single_occurrence": self.single_occurrence.to_dict(),
            "square_free": self.square_free.to_dict(),
            "nondegenerate": self.nondegenerate.to_dict(),
        }


def check_axioms(p: Presentation) -> AxiomReport:
    a = Verdict(True)
    for rel in p.relations:
        if rel.lhs == rel.rhs:
            a = Verdict(False, "relation %s is not a binomial" % p.fmt_relation(rel))
            break

    b = Verdict(True)
    for w, k in sorted(_occurrences(p).items()):
        if w[0] != w[1] and k > 1:
            b = Verdict(False, "%s occurs %d times" % (p.fmt(w), k))
            break

    c = Verdict(True)
    for rel in p.relations:
        sq = [w for w in (rel.lhs, rel.rhs) if w[0] == w[1]]
        if sq:
            c = Verdict(False, "relation %s contains the square %s" % (p.fmt_relation(rel), p.fmt(sq[0])))
            break

    if not (a.ok and b.ok):
        d = Verdict(False, "canonical map undefined: conditions (a)/(b) fail")
    else:
        r = canonical_map(p)
        x = r.left_degenerate_at()
        y = r.right_degenerate_at()
        if x is not None:
            d = Verdict(False, "left action of %s is not a bijection" % p.names[x])
        elif y is not None:
            d = Verdict(False, "right action of %s is not a bijection" % p.names[y])
        else:
            d = Verdict(True)
    return AxiomReport(a, b, c, d)


def check_ore(p: Presentation) -> tuple:
    """Unique solvability of ``ax = by`` (right) and ``za = tb`` (left) for ``a != b``.

    Degree-2 classes of the associated semigroup are ``{w, r(w)}``, so for
    ``a != b`` the equality ``ax = by`` holds iff ``r(ax) == by``.
    """
    r = canonical_map(p)
    n = p.n
    right = left = True
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            sols = [x for x in range(n) if r(a, x)[0] == b]
            right &= len(sols) == 1
            sols = [z for z in range(n) if r(z, a)[1] == b]
            left &= len(sols) == 1
    return left, right


@dataclass(frozen=True)
class WeakCyclicVerdict:
    holds: bool
    witness: tuple | None = None  # (x, y, "R" | "L")

    def to_dict(self, p: Presentation | None = None):
        w = self.witness
        if w is not None and p is not None:
            w = [p.names[w[0]], p.names[w[1]], w[2]]
        return {"holds": self.holds, "witness": None if w is None else list(w)}


def check_weak_cyclic(p: Presentation) -> WeakCyclicVerdict:
    r = canonical_map(p)
    L, R = r.left, r.right
    for x in range(p.n):
        for y in range(p.n):
            if x == y:
                continue
            if R(L(y, x), y) != R(x, y):
                return WeakCyclicVerdict(False, (x, y, "R"))
            if L(R(x, y), x) != L(y, x):
                return WeakCyclicVerdict(False, (x, y, "L"))
    return WeakCyclicVerdict(True)


def skew_shape_violation(p: Presentation, e: Enumeration) -> str | None:
    """Reason the relations are not of skew-polynomial type under ``e``, or None."""
    rank = e.rank
    covered = set()
    for rel in p.relations:
        big, small = rel.lhs, rel.rhs
        if e.key(small) > e.key(big):
            big, small = small, big
        j, i = rank[big[0]], rank[big[1]]
        i2, j2 = rank[small[0]], rank[small[1]]
        if not j > i:
            return "leading word %s is not descending" % p.fmt(big)
        if not i2 < j2:
            return "lower word %s is not strictly ascending" % p.fmt(small)
        if not j > i2:
            return "relation %s violates j > i'" % p.fmt_relation(rel)
        covered.add((i2, j2))
    for i in range(p.n):
        for j in range(i + 1, p.n):
            if (i, j) not in covered:
                return "ordered monomial %s is not a lower word" % p.fmt((e.order[i], e.order[j]))
    return None


def check_skew_shape(p: Presentation, e: Enumeration) -> bool:
    return skew_shape_violation(p, e) is None


def structural_summary(p: Presentation) -> dict:
    """Relation count and off-diagonal coverage (the consequences expected of
    a quantum binomial presentation)."""
    occ = _occurrences(p)
    missing = [(x, y) for x in range(p.n) for y in range(p.n) if x != y and occ.get((x, y), 0) == 0]
    excluded = True
    for rel in p.relations:
        (x, y), (y2, x2) = rel.lhs, rel.rhs
        if y2 == x or x2 == y:
            excluded = False
    return {
        "relation_count": len(p.relations),
        "expected_count": p.n * (p.n - 1) // 2,
        "uncovered_pairs": [p.fmt(w) for w in missing],
        "primes_avoid_partner": excluded,
    }
