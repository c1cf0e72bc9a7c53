"""Koszul dual of a quantum binomial presentation and its Frobenius structure.

The dual has the binomials ``xi_lhs + c^-1 xi_rhs`` (for ``lhs = c*rhs``)
plus every square ``xi_i^2``. Graded dimensions come from exact row
reduction of the degree-``k`` part of the ideal, so they do not depend on
any Groebner property of the relations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations, product
from math import comb

from .core import CapExceeded, ConsistencyError, Echelon, Enumeration, InputError, Word, has_square
from .presentation import Presentation, canonical_map, check_axioms
from .rewriting import EquivalenceClass, class_closure

# Words without adjacent repeats the dual-dimension routine may enumerate.
DEFAULT_WORD_BUDGET = 2_000_000


def _dual_name(name: str) -> str:
    m = re.fullmatch(r"x(\d+)", name)
    return "ξ" + m.group(1) if m else "ξ_" + name


@dataclass(frozen=True)
class DualPresentation:
    base: Presentation

    @cached_property
    def binomial(self) -> Presentation:
        """The binomial part, written ``lhs = (-1/c) * rhs``."""
        b = self.base
        rels = tuple((r.lhs, -1 / r.coeff, r.rhs) for r in b.relations)
        return Presentation(b.n, rels, tuple(_dual_name(s) for s in b.names), b.field)

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def names(self) -> tuple:
        return self.binomial.names

    @property
    def squares(self) -> list:
        return [(i, i) for i in range(self.n)]

    @property
    def relation_count(self) -> int:
        return len(self.base.relations) + self.n

    def relation_strings(self) -> list:
        from .core import format_scalar

        fmt = self.binomial.fmt
        out = []
        for r in self.base.relations:
            c = format_scalar(1 / r.coeff)
            out.append("%s + (%s)*%s" % (fmt(r.lhs), c, fmt(r.rhs)))
        out.extend(fmt(s) for s in self.squares)
        return out


def koszul_dual(p: Presentation) -> DualPresentation:
    ax = check_axioms(p)
    if not (ax.binomial.ok and ax.single_occurrence.ok):
        raise InputError("Koszul dual needs binomial relations with single occurrences")
    return DualPresentation(p)


# ---------------------------------------------------------------------------
# graded dimensions


def square_free_words(n: int, k: int):
    """Words of length ``k`` with no two equal adjacent letters, lexicographically."""
    if k == 0:
        yield ()
        return
    for w in product(range(n), repeat=k):
        if not has_square(w):
            yield w


def ideal_rows(dp: DualPresentation, k: int) -> list:
    """All products ``a*g*b`` of degree ``k`` with ``g`` a dual relation, as dicts.

    This is the unpruned spanning set; :func:`graded_dimension` reduces an
    equivalent pruned set.
    """
    n = dp.n
    one = dp.base.field.one
    rows = []
    rels = [((r.lhs, one), (r.rhs, -r.coeff)) for r in dp.binomial.relations]
    rels += [((s, one),) for s in dp.squares]
    for i in range(k - 1):
        for a in product(range(n), repeat=i):
            for b in product(range(n), repeat=k - 2 - i):
                for g in rels:
                    row = {}
                    for w, c in g:
                        row[a + w + b] = c
                    rows.append(row)
    return rows


@lru_cache(maxsize=256)
def _degree_part(dp: DualPresentation, k: int, budget: int):
    """Echelon form of the degree-``k`` ideal after clearing square words.

    Every word with an adjacent repeat lies in the ideal, so reducing the
    binomial rows modulo those words leaves rows supported on
    :func:`square_free_words`; the rank of the full ideal is that reduced
    rank plus the number of words with a square.
    """
    n = dp.n
    if k < 0:
        raise ValueError("negative degree")
    if k > n + 1:
        raise CapExceeded("dual degree %d exceeds n+1=%d" % (k, n + 1))
    size = n * (n - 1) ** (k - 1) if k else 1
    if size > budget:
        raise CapExceeded("degree-%d dual part needs %d words (budget %d)" % (k, size, budget))
    one = dp.base.field.one
    moves = {}
    for r in dp.binomial.relations:
        moves[r.lhs] = (r.rhs, r.coeff)
        moves[r.rhs] = (r.lhs, None)
    columns = list(square_free_words(n, k))
    ech = Echelon()
    for u in columns:
        for i in range(k - 1):
            hit = moves.get(u[i:i + 2])
            if hit is None:
                continue
            other, c = hit
            v = u[:i] + other + u[i + 2:]
            if c is None:
                if has_square(v):
                    ech.add({u: one})
                continue
            if has_square(v):
                ech.add({u: one})
            else:
                ech.add({u: one, v: -c})
    return ech, columns


def graded_dimension(dp: DualPresentation, k: int, budget: int = DEFAULT_WORD_BUDGET) -> int:
    """Dimension of the degree-``k`` component of the dual algebra."""
    ech, columns = _degree_part(dp, k, budget)
    return len(columns) - ech.rank


def quotient_basis(dp: DualPresentation, k: int, budget: int = DEFAULT_WORD_BUDGET) -> list:
    """Words whose images form a basis of the degree-``k`` component."""
    ech, columns = _degree_part(dp, k, budget)
    return [w for w in columns if w not in ech.pivots]


def quotient_rank(dp: DualPresentation, k: int, words, budget: int = DEFAULT_WORD_BUDGET) -> int:
    """Rank of the images of degree-``k`` ``words`` in the dual algebra."""
    ech, _ = _degree_part(dp, k, budget)
    one = dp.base.field.one
    images = Echelon()
    for u in words:
        u = tuple(u)
        if len(u) != k:
            raise ValueError("word %r is not of degree %d" % (u, k))
        if not has_square(u):
            images.add(ech.reduce({u: one}))
    return images.rank


# ---------------------------------------------------------------------------
# Frobenius property


@dataclass(frozen=True)
class GradedDims:
    dims: tuple
    pairing_ranks: tuple = ()  # rank of the degree j x degree n-j pairing, j = 0..n

    def to_dict(self):
        return {"dims": list(self.dims), "pairing_ranks": list(self.pairing_ranks)}


@dataclass(frozen=True)
class FrobeniusVerdict:
    holds: bool
    dims: GradedDims
    failure: str | None = None
    socle: EquivalenceClass | None = field(default=None, compare=False)


def _socle_class(dp: DualPresentation, budget: int) -> EquivalenceClass:
    (w,) = quotient_basis(dp, dp.n, budget)
    cls = class_closure(dp.binomial, w)
    if cls.conflict or cls.has_square_member():
        raise ConsistencyError("socle representative degenerates")
    return cls.rebased(min(cls.coefficients))


def pairing_matrix(dp: DualPresentation, j: int, socle: EquivalenceClass, budget: int = DEFAULT_WORD_BUDGET) -> list:
    """Entries ``M[u][v]``: coefficient of the socle word in ``u*v``."""
    zero = dp.base.field.zero
    coeffs = socle.coefficients
    rows = quotient_basis(dp, j, budget)
    cols = quotient_basis(dp, dp.n - j, budget)
    return [[coeffs.get(u + v, zero) for v in cols] for u in rows]


def check_frobenius(dp: DualPresentation, budget: int = DEFAULT_WORD_BUDGET) -> FrobeniusVerdict:
    from .core import matrix_rank

    n = dp.n
    dims = tuple(graded_dimension(dp, k, budget) for k in range(n + 2))
    if dims[n] != 1:
        return FrobeniusVerdict(False, GradedDims(dims), "degree %d has dimension %d, not 1" % (n, dims[n]))
    if dims[n + 1] != 0:
        return FrobeniusVerdict(False, GradedDims(dims), "degree %d has dimension %d, not 0" % (n + 1, dims[n + 1]))
    try:
        socle = _socle_class(dp, budget)
    except ConsistencyError as exc:
        return FrobeniusVerdict(False, GradedDims(dims), str(exc))
    ranks = []
    failure = None
    for j in range(n + 1):
        rk = matrix_rank(pairing_matrix(dp, j, socle, budget))
        ranks.append(rk)
        if failure is None and not rk == dims[j] == dims[n - j]:
            failure = "pairing of degrees %d and %d has rank %d (dims %d, %d)" % (j, n - j, rk, dims[j], dims[n - j])
    return FrobeniusVerdict(failure is None, GradedDims(dims, tuple(ranks)), failure, socle)


# ---------------------------------------------------------------------------
# principal monomial and regular socle


@dataclass(frozen=True)
class PrincipalMonomial:
    representative: Word
    klass: EquivalenceClass = field(compare=False)
    heads: frozenset
    tails: frozenset
    multilinear: tuple

    def to_dict(self, p: Presentation):
        return {
            "representative": p.fmt(self.representative),
            "class_size": len(self.klass),
            "heads": [p.names[x] for x in sorted(self.heads)],
            "tails": [p.names[x] for x in sorted(self.tails)],
            "multilinear": [p.fmt(w) for w in self.multilinear],
        }


def principal_monomial(dp: DualPresentation, budget: int = DEFAULT_WORD_BUDGET) -> PrincipalMonomial:
    fv = check_frobenius(dp, budget)
    if not fv.holds:
        raise ValueError("dual is not Frobenius: %s" % fv.failure)
    rep = fv.socle.base
    klass = class_closure(dp.base, rep)
    members = klass.members
    heads = frozenset(w[0] for w in members)
    tails = frozenset(w[-1] for w in members)
    multi = tuple(w for w in members if len(set(w)) == dp.n)
    return PrincipalMonomial(rep, klass, heads, tails, multi)


@dataclass(frozen=True)
class RegularSocleVerdict:
    holds: bool
    presentations: tuple = ()


def check_regular_socle(dp: DualPresentation, budget: int = DEFAULT_WORD_BUDGET) -> RegularSocleVerdict:
    pm = principal_monomial(dp, budget)
    found = []
    for w in pm.multilinear:
        key = Enumeration(w).key
        kw = key(w)
        if all(key(u) > kw for u in pm.klass.coefficients if u != w):
            found.append(w)
    return RegularSocleVerdict(bool(found), tuple(found))


# ---------------------------------------------------------------------------
# eta / theta chains and dual complements


def _unique_solution(p: Presentation, target: Word, make) -> int:
    klass = class_closure(p, target)
    sols = [x for x in range(p.n) if make(x) in klass]
    if len(sols) != 1:
        raise ConsistencyError("expected a unique solution for %s, found %s" % (p.fmt(target), [p.names[x] for x in sols]))
    return sols[0]


def eta_chain(p: Presentation, e: Enumeration) -> tuple:
    """``(eta, theta)`` with ``y_{j+1}..y_n eta_j = y_j..y_n`` and
    ``theta_{j+1} y_1..y_j = y_1..y_{j+1}`` in the associated semigroup,
    where ``y`` lists the generators in ``e``-order.

    Each value is computed twice: by walking the canonical map along the
    word, and by scanning all generators against the equivalence class.
    """
    y = e.order
    n = p.n
    r = canonical_map(p)
    # a = L_u(x)  <=>  x = left_inv[u][a]; likewise for the right action
    left_inv = [{r.left(u, x): x for x in range(n)} for u in range(n)]
    right_inv = [{r.right(u, x): x for x in range(n)} for u in range(n)]
    eta, theta = [], []
    for j in range(n - 1):
        # pulling eta left through y_n..y_{j+1} must leave y_j in front
        cur = y[j]
        for s in range(j + 1, n):
            cur = left_inv[y[s]][cur]
        scanned = _unique_solution(p, y[j:], lambda x, j=j: y[j + 1:] + (x,))
        if scanned != cur:
            raise ConsistencyError("eta chain disagrees with class scan at j=%d" % (j + 1))
        eta.append(cur)
    for j in range(1, n):
        # pushing theta right through y_1..y_j must leave y_{j+1} behind
        cur = y[j]
        for s in range(j - 1, -1, -1):
            cur = right_inv[y[s]][cur]
        scanned = _unique_solution(p, y[: j + 1], lambda x, j=j: (x,) + y[:j])
        if scanned != cur:
            raise ConsistencyError("theta chain disagrees with class scan at j=%d" % (j + 1))
        theta.append(cur)
    if len(set(eta)) != len(eta) or len(set(theta)) != len(theta):
        raise ConsistencyError("eta or theta values are not pairwise distinct")
    return tuple(eta), tuple(theta)


def star(p: Presentation, e: Enumeration, u, v=()):
    """Product in the semigroup with zero attached to the dual.

    Returns the ``e``-least word equal to ``uv``, or None when ``uv`` is
    equal to a word containing a square (or its class carries a
    coefficient conflict, which also puts it in the ideal).
    """
    cls = class_closure(p, tuple(u) + tuple(v))
    if cls.conflict or cls.has_square_member():
        return None
    return min(cls.coefficients, key=e.key)


def dual_normal_words(e: Enumeration, k: int) -> list:
    """Square-free ordered words of length ``k`` under ``e``."""
    return [tuple(c) for c in combinations(e.order, k)]


def dual_complement(dp: DualPresentation, e: Enumeration, u, chains: tuple | None = None) -> tuple:
    """``(u', u'')`` with ``u*u' = u''*u = y_1...y_n``; also checks that no
    other ordered word completes ``u`` on either side."""
    u = tuple(u)
    n = dp.n
    p = dp.base
    y = e.order
    ranks = [e.rank[a] for a in u]
    if ranks != sorted(set(ranks)):
        raise ValueError("%s is not a square-free ordered word" % p.fmt(u))
    missing = [k not in ranks for k in range(n)]
    eta, theta = chains if chains is not None else eta_chain(p, e)

    right = ([y[n - 1]] if missing[n - 1] else []) + [eta[k] for k in range(n - 2, -1, -1) if missing[k]]
    left = [theta[k - 1] for k in range(n - 1, 0, -1) if missing[k]] + ([y[0]] if missing[0] else [])
    top = star(p, e, y)
    u1 = star(p, e, right) if right else ()
    u2 = star(p, e, left) if left else ()
    if u1 is None or u2 is None or star(p, e, u, u1) != top or star(p, e, u2, u) != top:
        raise ConsistencyError("dual complement of %s does not reach the top word" % p.fmt(u))
    others = dual_normal_words(e, n - len(u))
    if sum(star(p, e, u, v) == top for v in others) != 1 or sum(star(p, e, v, u) == top for v in others) != 1:
        raise ConsistencyError("dual complement of %s is not unique" % p.fmt(u))
    return u1, u2


def exterior_dims(n: int) -> list:
    return [comb(n, i) for i in range(n + 2)]
