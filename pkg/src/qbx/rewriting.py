"""Degree-preserving rewriting: equivalence classes, normal forms, overlap
resolution, skew-order search and dihedral orbits on triples."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .core import CapExceeded, Enumeration, Word, has_square
from .presentation import Presentation, canonical_map, check_skew_shape, skew_shape_violation

DEFAULT_MAX_N = 9


# ---------------------------------------------------------------------------
# equivalence classes in the associated semigroup


@dataclass
class EquivalenceClass:
    """All words equal to ``base`` in the associated semigroup.

    ``coefficients[w] = c`` records ``w = c * base`` in the algebra along the
    first path found; ``conflict`` is set when two paths disagree, which
    places ``base`` in the ideal.
    """

    degree: int
    base: Word
    coefficients: dict
    conflict: bool = False

    @property
    def members(self) -> list:
        return sorted(self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def __contains__(self, w):
        return tuple(w) in self.coefficients

    def has_square_member(self) -> bool:
        return any(has_square(w) for w in self.coefficients)

    def rebased(self, w: Word) -> "EquivalenceClass":
        w = tuple(w)
        if w == self.base:
            return self
        cw = self.coefficients[w]
        coeffs = {u: c / cw for u, c in self.coefficients.items()}
        return EquivalenceClass(self.degree, w, coeffs, self.conflict)


@lru_cache(maxsize=64)
def _closure_cache(p: Presentation) -> dict:
    return {}


def class_closure(p: Presentation, w) -> EquivalenceClass:
    """Breadth-first closure of ``w`` under single-relation rewrites."""
    w = tuple(w)
    cache = _closure_cache(p)
    hit = cache.get(w)
    if hit is not None:
        return hit.rebased(w)
    one = p.field.one
    moves = p.moves
    coeffs = {w: one}
    conflict = False
    queue = deque([w])
    while queue:
        u = queue.popleft()
        cu = coeffs[u]
        for i in range(len(u) - 1):
            for other, c in moves.get(u[i:i + 2], ()):
                v = u[:i] + other + u[i + 2:]
                cv = cu / c
                old = coeffs.get(v)
                if old is None:
                    coeffs[v] = cv
                    queue.append(v)
                elif old != cv:
                    conflict = True
    cls = EquivalenceClass(len(w), w, coeffs, conflict)
    for u in coeffs:
        cache[u] = cls
    return cls


# ---------------------------------------------------------------------------
# rewrite systems


@dataclass(frozen=True)
class RewriteSystem:
    """Rules ``w -> c*u`` with ``u`` below ``w`` under ``enumeration``.

    With ``squares_zero`` every square ``xx`` also rewrites to 0, which is
    the rule set of the Koszul-type quotient.
    """

    presentation: Presentation
    enumeration: Enumeration
    squares_zero: bool = False
    rules: dict = field(init=False, compare=False, hash=False)
    zero_words: frozenset = field(init=False, compare=False, hash=False)

    def __post_init__(self):
        rules = {}
        key = self.enumeration.key
        for rel in self.presentation.relations:
            if rel.lhs == rel.rhs:
                continue
            if key(rel.lhs) > key(rel.rhs):
                lead, c, low = rel.lhs, rel.coeff, rel.rhs
            else:
                lead, c, low = rel.rhs, 1 / rel.coeff, rel.lhs
            if lead in rules:
                raise ValueError("two rules share the leading word %s" % self.presentation.fmt(lead))
            rules[lead] = (low, c)
        zeros = frozenset((x, x) for x in range(self.presentation.n)) if self.squares_zero else frozenset()
        for z in zeros:
            rules.pop(z, None)
        object.__setattr__(self, "rules", rules)
        object.__setattr__(self, "zero_words", zeros)

    @property
    def leading_words(self) -> set:
        return set(self.rules) | set(self.zero_words)

    def step(self, w: Word, i: int):
        """Rewrite at position ``i``; returns ``(word, c)`` or ``(None, 0)``."""
        pair = w[i:i + 2]
        if pair in self.zero_words:
            return None, self.presentation.field.zero
        low, c = self.rules[pair]
        return w[:i] + low + w[i + 2:], c


def normal_form(rs: RewriteSystem, w):
    """``(Nor(w), c)`` with ``w = c * Nor(w)``; ``(None, 0)`` when ``w`` vanishes.

    Always rewrites the leftmost reducible position.
    """
    w = tuple(w)
    c = rs.presentation.field.one
    rules, zeros = rs.rules, rs.zero_words
    i = 0
    while i < len(w) - 1:
        pair = w[i:i + 2]
        if pair in zeros:
            return None, rs.presentation.field.zero
        hit = rules.get(pair)
        if hit is None:
            i += 1
            continue
        low, k = hit
        w = w[:i] + low + w[i + 2:]
        c = c * k
        i = max(i - 1, 0)
    return w, c


def is_normal(rs: RewriteSystem, w) -> bool:
    lead = rs.leading_words
    return all(tuple(w[i:i + 2]) not in lead for i in range(len(w) - 1))


@dataclass(frozen=True)
class GroebnerVerdict:
    holds: bool
    reason: str | None = None
    failures: tuple = ()  # (overlap word, (nf, c) via first pair, (nf, c) via second pair)

    @property
    def witness(self):
        return self.failures[0][0] if self.failures else None


def overlaps(rs: RewriteSystem) -> list:
    """Words ``abc`` with both ``ab`` and ``bc`` leading words, in deglex order."""
    lead = rs.leading_words
    out = [(a, b, c) for (a, b) in lead for (b2, c) in lead if b == b2]
    return sorted(out, key=rs.enumeration.key)


def check_groebner(rs: RewriteSystem) -> GroebnerVerdict:
    """Diamond-lemma test: every overlap resolves to the same word and scalar."""
    reason = skew_shape_violation(rs.presentation, rs.enumeration)
    if reason is not None:
        return GroebnerVerdict(False, "not skew-shaped: " + reason)
    failures = []
    for w in overlaps(rs):
        branches = []
        for i in (0, 1):
            u, c = rs.step(w, i)
            if u is not None:
                v, k = normal_form(rs, u)
                branches.append((v, c * k) if v is not None else (None, rs.presentation.field.zero))
            else:
                branches.append((None, c))
        if branches[0] != branches[1]:
            failures.append((w, branches[0], branches[1]))
    if failures:
        return GroebnerVerdict(False, "unresolvable overlap", tuple(failures))
    return GroebnerVerdict(True)


def find_skew_order(p: Presentation, max_n: int = DEFAULT_MAX_N) -> list:
    """Every enumeration making the relations a skew-type Groebner basis."""
    if p.n > max_n:
        raise CapExceeded("order search over %d! enumerations refused (n=%d > cap %d)" % (p.n, p.n, max_n))
    found = []
    for perm in itertools.permutations(range(p.n)):
        e = Enumeration(perm)
        if not check_skew_shape(p, e):
            continue
        if check_groebner(RewriteSystem(p, e)).holds:
            found.append(e)
    return found


def normal_word_counts(rs: RewriteSystem, max_degree: int) -> list:
    """Number of normal words of each length ``0..max_degree`` (transfer matrix)."""
    n = rs.presentation.n
    lead = rs.leading_words
    counts = [1]
    if max_degree == 0:
        return counts
    ending = [1] * n
    counts.append(n)
    for _ in range(2, max_degree + 1):
        ending = [sum(ending[a] for a in range(n) if (a, b) not in lead) for b in range(n)]
        counts.append(sum(ending))
    return counts


def pbw_counts(n: int, max_degree: int) -> list:
    return [comb(n + d - 1, d) for d in range(max_degree + 1)]


# ---------------------------------------------------------------------------
# dihedral orbits on triples


@dataclass(frozen=True)
class OrbitD:
    base: Word
    paths: dict = field(hash=False)  # member -> tuple of "r12"/"r23" applied from base

    @property
    def members(self) -> list:
        return sorted(self.paths)

    def __len__(self):
        return len(self.paths)


def dihedral_orbit(p: Presentation, w) -> OrbitD:
    w = tuple(w)
    if len(w) != 3:
        raise ValueError("dihedral orbits live on words of length 3")
    r = canonical_map(p)

    def r12(u):
        return r(u[0], u[1]) + u[2:]

    def r23(u):
        return u[:1] + r(u[1], u[2])

    paths = {w: ()}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        for name, f in (("r12", r12), ("r23", r23)):
            v = f(u)
            if v not in paths:
                paths[v] = paths[u] + (name,)
                queue.append(v)
    return OrbitD(w, paths)
