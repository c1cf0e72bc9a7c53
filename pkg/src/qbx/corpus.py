"""Test and experiment corpus: worked examples, flips and random samples."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .presentation import Presentation, canonical_map

P = Presentation.from_pairs


def a1() -> Presentation:
    return P(3, [((3, 2), (1, 3)), ((3, 1), (1, 3)), ((2, 1), (1, 2))])


def a2(a=1, b=1, c=1, d=1, e=1, f=1) -> Presentation:
    """Four-generator skew polynomial family; a Groebner basis when
    ``a^2 = f^2 = be/cd = cd/be``."""
    return P(4, [
        ((4, 3), a, (3, 4)),
        ((4, 2), b, (1, 3)),
        ((4, 1), c, (2, 3)),
        ((3, 2), d, (1, 4)),
        ((3, 1), e, (2, 4)),
        ((2, 1), f, (1, 2)),
    ])


def non_standard_example() -> Presentation:
    """Quantum binomial but Groebner under no enumeration."""
    return P(4, [
        ((4, 3), (2, 4)),
        ((4, 2), (1, 3)),
        ((4, 1), (3, 4)),
        ((3, 2), (2, 3)),
        ((3, 1), (1, 4)),
        ((2, 1), (1, 2)),
    ])


def set_solution_example() -> Presentation:
    """Four generators; the relations define a set-theoretic braided map."""
    return P(4, [
        ((1, 2), (3, 4)),
        ((1, 3), (2, 4)),
        ((4, 2), (3, 1)),
        ((4, 3), (2, 1)),
        ((1, 4), (4, 1)),
        ((2, 3), (3, 2)),
    ])


def flip(n: int, coeff=1) -> Presentation:
    return P(n, [((j, i), coeff, (i, j)) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def disjoint_union(p: Presentation, q: Presentation) -> Presentation:
    """Generators of ``p`` then of ``q``; the two sets commute with each other."""
    m = p.n
    rels = [(r.lhs, r.coeff, r.rhs) for r in p.relations]
    rels += [(tuple(a + m for a in r.lhs), r.coeff, tuple(a + m for a in r.rhs)) for r in q.relations]
    rels += [((y, x), 1, (x, y)) for x in range(m) for y in range(m, m + q.n)]
    return Presentation(m + q.n, tuple(rels), field=p.field)


def larger_examples() -> dict:
    """Five- and six-generator presentations built from the worked examples."""
    return {
        "set_solution+flip1": disjoint_union(set_solution_example(), flip(1)),
        "set_solution+flip2": disjoint_union(set_solution_example(), flip(2)),
        "A2_signs+flip2": disjoint_union(a2(a=-1, f=-1), flip(2, coeff=-1)),
        "flip3+flip3": disjoint_union(flip(3, coeff=2), flip(3)),
        "A2_broken+flip1": disjoint_union(a2(e=2), flip(1)),
        "flip-6": flip(6),
    }


def named_examples() -> dict:
    return {
        "A1": a1(),
        "A2": a2(),
        "A2_signs": a2(a=-1, f=-1),
        "A2_mixed": a2(a=1, b=2, c=2, d=1, e=1, f=-1),
        "A2_broken": a2(e=2),
        "non_standard": non_standard_example(),
        "set_solution": set_solution_example(),
    }


# ---------------------------------------------------------------------------
# random presentations


def off_diagonal(n: int) -> list:
    return [(x, y) for x in range(n) for y in range(n) if x != y]


def random_matching(n: int, rng: random.Random) -> list:
    pairs = off_diagonal(n)
    rng.shuffle(pairs)
    return [(pairs[i], pairs[i + 1]) for i in range(0, len(pairs), 2)]


def backtrack_matching(n: int, rng: random.Random) -> list:
    """A random nondegenerate square-free pair permutation built pair by pair.

    Partial left and right actions are kept injective, so every completed
    matching is nondegenerate; not uniform over such matchings.
    """
    left = [{x: x} for x in range(n)]  # left[x][y] = L_x(y)
    right = [{y: y} for y in range(n)]  # right[y][x] = R_y(x)
    pairs = off_diagonal(n)
    out = []

    def free(x, y, z, t):
        return (z not in left[x].values() and t not in right[y].values()
                and x not in left[z].values() and y not in right[t].values())

    def extend():
        todo = [u for u in pairs if u[1] not in left[u[0]]]
        if not todo:
            return True
        x, y = todo[0]
        options = [(z, t) for z, t in todo[1:] if free(x, y, z, t)]
        rng.shuffle(options)
        for z, t in options:
            left[x][y], right[y][x], left[z][t], right[t][z] = z, t, x, y
            out.append(((x, y), (z, t)))
            if extend():
                return True
            out.pop()
            del left[x][y], right[y][x], left[z][t], right[t][z]
        return False

    if not extend():
        raise RuntimeError("no nondegenerate matching at n=%d" % n)
    return out


def all_matchings(items: list):
    """Every perfect matching of ``items`` (which must have even length)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k, other in enumerate(rest):
        for m in all_matchings(rest[:k] + rest[k + 1:]):
            yield [(first, other)] + m


def is_quantum_binomial_matching(n: int, matching) -> bool:
    p = Presentation(n, tuple((u, 1, v) for u, v in matching))
    return canonical_map(p).is_nondegenerate()


def gauge_coefficients(matching, weights) -> list:
    """Coefficients of ``x -> weights[x] * x`` applied to all-ones relations."""
    out = []
    for (x, y), (z, t) in matching:
        out.append(Fraction(weights[x] * weights[y], weights[z] * weights[t]))
    return out


def _random_rational(rng: random.Random, size: int = 5) -> Fraction:
    while True:
        num = rng.randint(-size, size)
        if num:
            return Fraction(num, rng.randint(1, size))


@dataclass(frozen=True)
class CorpusConfig:
    seed: int = 20240607
    sizes: tuple = (3, 4)
    per_size: int = 60
    # share of samples drawn with all-ones / gauge / random coefficients
    modes: tuple = ("ones", "gauge", "random")
    max_tries: int = 200_000
    # "rejection" draws uniform matchings and filters; "backtrack" builds
    # nondegenerate ones directly and is the only practical choice for n >= 5
    sampler: str = "rejection"


def random_presentations(cfg: CorpusConfig = CorpusConfig()) -> list:
    """``(label, Presentation)`` pairs of random quantum binomial presentations.

    Pair permutations are drawn as random matchings of the off-diagonal
    pairs and kept when nondegenerate; coefficients cycle through ``cfg.modes``.
    """
    rng = random.Random(cfg.seed)
    out = []
    for n in cfg.sizes:
        kept = 0
        tries = 0
        while kept < cfg.per_size:
            tries += 1
            if tries > cfg.max_tries:
                raise RuntimeError("could not sample %d nondegenerate matchings at n=%d" % (cfg.per_size, n))
            if cfg.sampler == "backtrack":
                m = backtrack_matching(n, rng)
            else:
                m = random_matching(n, rng)
            if not is_quantum_binomial_matching(n, m):
                continue
            mode = cfg.modes[kept % len(cfg.modes)]
            if mode == "ones":
                coeffs = [1] * len(m)
            elif mode == "gauge":
                coeffs = gauge_coefficients(m, [_random_rational(rng) for _ in range(n)])
            else:
                coeffs = [_random_rational(rng) for _ in m]
            p = Presentation(n, tuple((u, c, v) for (u, v), c in zip(m, coeffs)))
            out.append(("random-n%d-%s-%d" % (n, mode, kept), p))
            kept += 1
    return out


def quantum_binomial_matchings(n: int) -> list:
    """All nondegenerate square-free pair permutations at small ``n``."""
    return [m for m in all_matchings(off_diagonal(n)) if is_quantum_binomial_matching(n, m)]


def full_corpus(cfg: CorpusConfig = CorpusConfig(), max_flip: int = 5, larger: bool = True) -> list:
    out = list(named_examples().items())
    if larger:
        out += list(larger_examples().items())
    out += [("flip-%d" % n, flip(n)) for n in range(1, max_flip + 1)]
    out += random_presentations(cfg)
    return out
