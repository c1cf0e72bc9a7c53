"""Exact scalars, words, degree-lexicographic orders and sparse row reduction.

Words are tuples of generator indices. A word of length ``d`` is a basis
element of the ``d``-th tensor power of the span of the generators, and a
:class:`Tensor` is a sparse linear combination of words of one length.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Hashable, Iterable, Mapping, Sequence

Word = tuple  # tuple[int, ...]

DEFAULT_PRIME = 2147483647


class QbxError(Exception):
    """Base class for errors raised by this package."""


class InputError(QbxError, ValueError):
    """Malformed input: bad file, unknown generator, zero coefficient..."""


class CapExceeded(QbxError):
    """A hard size cap (generator count, degree, work budget) was hit."""


class ConsistencyError(QbxError):
    """An internal cross-check failed; either a bug or a counterexample."""


# ---------------------------------------------------------------------------
# scalars


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17):
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for p < 3.4e14
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class Mod:
    """Residue class modulo a prime. Supports mixing with Python ints."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ValueError("mixing residues of different primes")
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.v, self.p)

    def inverse(self) -> "Mod":
        if self.v == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Mod(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Mod(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.inverse() * o

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "Mod(%d, %d)" % (self.v, self.p)

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class Field:
    """The coefficient field: the rationals (``p is None``) or GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or self.p > 2**31 or not is_prime(self.p):
                raise InputError("field characteristic must be a prime <= 2^31, got %r" % (self.p,))

    @classmethod
    def parse(cls, text: str) -> "Field":
        """``"rational"`` or ``"fp:<p>"`` (``"fp"`` alone uses the default prime)."""
        text = text.strip()
        if text in ("rational", "rationals", "Q", "QQ"):
            return cls()
        if text == "fp":
            return cls(DEFAULT_PRIME)
        if text.startswith("fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise InputError("bad field descriptor %r" % text) from None
            return cls(p)
        raise InputError("bad field descriptor %r (expected 'rational' or 'fp:<p>')" % text)

    def describe(self) -> str:
        return "rational" if self.p is None else "fp:%d" % self.p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, value):
        """Convert an int, Fraction, residue or ``"p/q"`` string to a field element."""
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise InputError("bad coefficient %r" % value) from None
        if self.p is None:
            if isinstance(value, Mod):
                raise ValueError("cannot lift a residue to the rationals")
            return Fraction(value)
        if isinstance(value, Mod):
            if value.p != self.p:
                raise ValueError("residue of a different prime")
            return value
        value = Fraction(value)
        if value.denominator % self.p == 0:
            raise ZeroDivisionError("denominator vanishes in GF(%d)" % self.p)
        return Mod(value.numerator, self.p) / value.denominator


QQ = Field()


def format_scalar(c) -> str:
    """Exact ``"p/q"`` string for a scalar (residues print as ``"v/1"``)."""
    if isinstance(c, Mod):
        return "%d/1" % c.v
    c = Fraction(c)
    return "%d/%d" % (c.numerator, c.denominator)


# ---------------------------------------------------------------------------
# words and orders


@dataclass(frozen=True)
class Enumeration:
    """Generator ranking ``order[0] < order[1] < ... < order[n-1]``."""

    order: tuple

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError("enumeration must be a permutation of range(n), got %r" % (self.order,))

    @classmethod
    def identity(cls, n: int) -> "Enumeration":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.order)

    @cached_property
    def rank(self) -> tuple:
        r = [0] * len(self.order)
        for k, g in enumerate(self.order):
            r[g] = k
        return tuple(r)

    def key(self, word: Sequence[int]) -> tuple:
        """Sort key realising the degree-lexicographic order."""
        rank = self.rank
        try:
            return (len(word), tuple(rank[a] for a in word))
        except IndexError:
            raise ValueError("generator index out of range in %r" % (word,)) from None

    def __lt__(self, other: "Enumeration") -> bool:
        return self.order < other.order


def compare_deglex(a: Sequence[int], b: Sequence[int], e: Enumeration) -> int:
    """Return -1, 0 or 1 as ``a`` precedes, equals or follows ``b``."""
    for w in (a, b):
        for x in w:
            if not 0 <= x < e.n:
                raise ValueError("generator index %r out of range for n=%d" % (x, e.n))
    ka, kb = e.key(a), e.key(b)
    return (ka > kb) - (ka < kb)


def words(n: int, d: int) -> Iterable[Word]:
    """All words of length ``d`` in lexicographic (identity deglex) order."""
    from itertools import product

    return product(range(n), repeat=d)


def has_square(w: Sequence[int]) -> bool:
    return any(w[i] == w[i + 1] for i in range(len(w) - 1))


# ---------------------------------------------------------------------------
# tensors


class Tensor:
    """Sparse homogeneous combination of words; zero coefficients are dropped."""

    __slots__ = ("terms", "degree")

    def __init__(self, terms: Mapping[Word, object] | Iterable = (), degree: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for w, c in items:
            w = tuple(w)
            if w in clean:
                c = clean[w] + c
            if c:
                clean[w] = c
            else:
                clean.pop(w, None)
        lengths = {len(w) for w in clean}
        if len(lengths) > 1:
            raise ValueError("tensor mixes degrees %s" % sorted(lengths))
        if lengths:
            (d,) = lengths
            if degree is not None and degree != d:
                raise ValueError("tensor degree %d does not match declared %d" % (d, degree))
            degree = d
        self.terms = clean
        self.degree = degree

    @classmethod
    def word(cls, w: Sequence[int], c=1) -> "Tensor":
        return cls({tuple(w): c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Tensor") -> "Tensor":
        return Tensor(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + other.scale(-1)

    def scale(self, c) -> "Tensor":
        return Tensor({w: c * v for w, v in self.terms.items()}, self.degree)

    def items(self):
        return self.terms.items()

    def __repr__(self):
        if not self.terms:
            return "Tensor(0)"
        body = " + ".join("%s*%s" % (c, "".join("x%d" % (a + 1) for a in w)) for w, c in sorted(self.terms.items()))
        return "Tensor(%s)" % body


# ---------------------------------------------------------------------------
# sparse reduced row echelon form


class Echelon:
    """Incrementally maintained reduced row echelon form of sparse rows.

    Rows are dicts ``column -> scalar``. The pivot of each row is its
    least column under ``key``; pivots are normalised to 1 and eliminated
    from every other row.
    """

    def __init__(self, key: Callable[[Hashable], object] = lambda c: c):
        self.key = key
        self.pivots: dict = {}
        # column -> pivots of rows holding it as a non-pivot entry
        self._users = defaultdict(set)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping) -> dict:
        # plain ints would turn into floats on division
        r = {c: Fraction(v) if isinstance(v, int) else v for c, v in row.items() if v}
        for c in [c for c in r if c in self.pivots]:
            a = r.pop(c, None)
            if not a:
                continue
            for c2, v2 in self.pivots[c].items():
                if c2 == c:
                    continue
                nv = r[c2] - a * v2 if c2 in r else -a * v2
                if nv:
                    r[c2] = nv
                else:
                    del r[c2]
        return r

    def add(self, row: Mapping) -> bool:
        """Insert a row; return True when it raised the rank."""
        r = self.reduce(row)
        if not r:
            return False
        p = min(r, key=self.key)
        inv = 1 / r[p]
        r = {c: v * inv for c, v in r.items()}
        for q in list(self._users.pop(p, ())):
            other = self.pivots[q]
            a = other.pop(p)
            for c2, v2 in r.items():
                if c2 == p:
                    continue
                nv = other[c2] - a * v2 if c2 in other else -a * v2
                if nv:
                    other[c2] = nv
                    self._users[c2].add(q)
                else:
                    del other[c2]
                    self._users[c2].discard(q)
        self.pivots[p] = r
        for c in r:
            if c != p:
                self._users[c].add(p)
        return True

    def rows(self) -> list:
        return [self.pivots[p] for p in sorted(self.pivots, key=self.key)]


def row_reduce(rows: Sequence[Tensor], enumeration: Enumeration | None = None):
    """Reduced row echelon basis of the span of ``rows`` and its rank.

    Pivots sit on the least word under the degree-lexicographic order of
    ``enumeration`` (identity when omitted). Raises ``ValueError`` on mixed
    degrees.
    """
    degrees = {t.degree for t in rows if t}
    if len(degrees) > 1:
        raise ValueError("row_reduce needs rows of one degree, got %s" % sorted(degrees))
    if enumeration is None:
        key = lambda w: w
    else:
        key = enumeration.key
    ech = Echelon(key)
    for t in rows:
        ech.add(t.terms)
    basis = [Tensor(r) for r in ech.rows()]
    return basis, ech.rank


def matrix_rank(matrix: Sequence[Sequence]) -> int:
    """Exact rank of a dense matrix given as a list of rows."""
    ech = Echelon()
    for row in matrix:
        ech.add({j: v for j, v in enumerate(row) if v})
    return ech.rank
