import random
from fractions import Fraction
from itertools import product
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import dense_rank, dual_dim_by_components
from qbx.core import CapExceeded, ConsistencyError, Echelon, Enumeration, InputError
from qbx.corpus import a1, a2, flip, non_standard_example, set_solution_example
from qbx.koszul import (
    check_frobenius,
    check_regular_socle,
    dual_complement,
    dual_normal_words,
    eta_chain,
    graded_dimension,
    ideal_rows,
    koszul_dual,
    pairing_matrix,
    principal_monomial,
    quotient_basis,
    quotient_rank,
    star,
    exterior_dims,
)
from qbx.presentation import Presentation, check_axioms
from qbx.rewriting import find_skew_order


def w(*letters):
    return tuple(a - 1 for a in letters)


def names(p, words):
    return {p.fmt(u) for u in words}


class TestDualPresentation:
    def test_flip_two(self):
        dp = koszul_dual(flip(2))
        assert dp.relation_count == 3
        assert dp.relation_strings() == ["ξ2ξ1 + (1/1)*ξ1ξ2", "ξ1ξ1", "ξ2ξ2"]

    def test_a2_count_and_signs(self):
        dp = koszul_dual(a2())
        assert dp.relation_count == 10
        assert all(r.coeff == -1 for r in dp.binomial.relations)

    def test_single_generator(self):
        dp = koszul_dual(Presentation(1, ()))
        assert dp.relation_count == 1 and dp.relation_strings() == ["ξ1ξ1"]

    def test_reciprocal_translation(self):
        dp = koszul_dual(a2(b=3))
        rel = next(r for r in dp.binomial.relations if r.lhs == w(4, 2))
        assert rel.coeff == Fraction(-1, 3)

    def test_requires_a_and_b(self):
        with pytest.raises(InputError):
            koszul_dual(a1())

    def test_count_on_corpus(self, corpus):
        for name, p in corpus:
            a = check_axioms(p)
            if a.binomial.ok and a.single_occurrence.ok and a.ok:
                assert koszul_dual(p).relation_count == comb(p.n, 2) + p.n, name


class TestGradedDimension:
    def test_flip(self):
        dp = koszul_dual(flip(3))
        assert [graded_dimension(dp, k) for k in range(5)] == [1, 3, 3, 1, 0]

    def test_a2(self):
        dp = koszul_dual(a2())
        assert graded_dimension(dp, 4) == 1
        assert graded_dimension(dp, 5) == 0

    def test_caps(self):
        dp = koszul_dual(flip(3))
        with pytest.raises(CapExceeded):
            graded_dimension(dp, 5)
        with pytest.raises(CapExceeded):
            graded_dimension(dp, 4, budget=10)

    def test_matches_unpruned_ideal(self, corpus):
        # n^k minus the rank of every a*g*b product, no pruning
        rng = random.Random(1)
        sample = [c for c in corpus if c[1].n <= 4 and check_axioms(c[1]).ok]
        for name, p in rng.sample(sample, 12):
            dp = koszul_dual(p)
            for k in range(p.n + 2):
                ech = Echelon()
                for row in ideal_rows(dp, k):
                    ech.add(row)
                assert graded_dimension(dp, k) == p.n ** k - ech.rank, (name, k)

    def test_matches_dense_rank_small(self):
        dp = koszul_dual(set_solution_example())
        cols = list(product(range(4), repeat=3))
        rows = ideal_rows(dp, 3)
        m = [[r.get(c, 0) for c in cols] for r in rows]
        assert 64 - dense_rank(m) == graded_dimension(dp, 3) == 4

    def test_matches_components(self, corpus):
        for name, p in corpus:
            a = check_axioms(p)
            if not (a.binomial.ok and a.single_occurrence.ok) or p.n > 4:
                continue
            dp = koszul_dual(p)
            for k in range(p.n + 2):
                assert graded_dimension(dp, k) == dual_dim_by_components(p, k), (name, k)

    def test_quotient_basis_size(self):
        dp = koszul_dual(set_solution_example())
        for k in range(6):
            assert len(quotient_basis(dp, k)) == graded_dimension(dp, k)


class TestFrobenius:
    def test_flip(self):
        fv = check_frobenius(koszul_dual(flip(3)))
        assert fv.holds and fv.dims.dims == (1, 3, 3, 1, 0)
        assert fv.dims.pairing_ranks == (1, 3, 3, 1)

    def test_set_solution_example(self):
        fv = check_frobenius(koszul_dual(set_solution_example()))
        assert fv.holds and fv.dims.dims[:5] == (1, 4, 6, 4, 1) and fv.dims.dims[5] == 0

    def test_non_standard_fails(self):
        fv = check_frobenius(koszul_dual(non_standard_example()))
        assert not fv.holds and "degree 4" in fv.failure

    def test_broken_coefficients_fail(self):
        fv = check_frobenius(koszul_dual(a2(e=2)))
        assert not fv.holds

    def test_pairing_rank_bounded(self, corpus):
        for name, p in corpus:
            if not check_axioms(p).ok or p.n > 5:
                continue
            fv = check_frobenius(koszul_dual(p))
            for j, rk in enumerate(fv.dims.pairing_ranks):
                assert rk <= min(fv.dims.dims[j], fv.dims.dims[p.n - j])
            assert fv.dims.dims[0] == 1

    def test_pairing_against_dense(self):
        dp = koszul_dual(set_solution_example())
        fv = check_frobenius(dp)
        for j in range(5):
            m = pairing_matrix(dp, j, fv.socle)
            assert dense_rank(m) == fv.dims.pairing_ranks[j]


class TestPrincipalMonomial:
    def test_flip(self):
        pm = principal_monomial(koszul_dual(flip(3)))
        assert set(pm.klass.members) == {u for u in product(range(3), repeat=3) if len(set(u)) == 3}
        assert pm.heads == pm.tails == frozenset(range(3))

    def test_set_solution_example(self):
        p = set_solution_example()
        pm = principal_monomial(koszul_dual(p))
        assert {"x2x3x1x4", "x1x4x2x3", "x4x1x3x2"} <= names(p, pm.klass.members)
        assert len(pm.klass) == 24
        assert pm.heads == pm.tails == frozenset(range(4))

    def test_representative_is_least_nonzero(self):
        p = set_solution_example()
        dp = koszul_dual(p)
        pm = principal_monomial(dp)
        for u in product(range(4), repeat=4):
            if u == pm.representative:
                break
            assert star(p, Enumeration.identity(4), u) is None

    def test_requires_frobenius(self):
        with pytest.raises(ValueError):
            principal_monomial(koszul_dual(a2(e=2)))


class TestRegularSocle:
    def test_set_solution_example(self):
        p = set_solution_example()
        rs = check_regular_socle(koszul_dual(p))
        found = names(p, rs.presentations)
        assert rs.holds
        assert "x1x2x3x4" not in found
        assert {"x2x3x1x4", "x1x4x2x3", "x4x1x3x2"} <= found

    def test_flip_all_regular(self):
        rs = check_regular_socle(koszul_dual(flip(3)))
        assert rs.holds and len(rs.presentations) == 6


class TestChains:
    def test_flip(self):
        assert eta_chain(flip(3), Enumeration.identity(3)) == (w(1, 2), w(2, 3))

    def test_single_generator(self):
        assert eta_chain(Presentation(1, ()), Enumeration.identity(1)) == ((), ())

    def test_set_solution_distinct(self):
        p = set_solution_example()
        for e in find_skew_order(p):
            eta, theta = eta_chain(p, e)
            assert len(set(eta)) == 3 and len(set(theta)) == 3

    def test_defining_equalities(self, corpus):
        from qbx.rewriting import class_closure

        for name, p in corpus:
            if not check_axioms(p).ok:
                continue
            for e in find_skew_order(p)[:2]:
                y = e.order
                eta, theta = eta_chain(p, e)
                for j in range(p.n - 1):
                    assert y[j + 1:] + (eta[j],) in class_closure(p, y[j:]), name
                    assert (theta[j],) + y[:j + 1] in class_closure(p, y[:j + 2]), name

    def test_inconsistent_input(self):
        # the printed order is no skew order here, and the chain has no solution
        with pytest.raises(ConsistencyError):
            eta_chain(non_standard_example(), Enumeration.identity(4))


class TestDualComplement:
    def test_extremes(self):
        p = flip(4)
        dp, e = koszul_dual(p), Enumeration.identity(4)
        top = tuple(range(4))
        assert dual_complement(dp, e, top) == ((), ())
        assert dual_complement(dp, e, ()) == (top, top)

    def test_flip_three(self):
        p = flip(3)
        dp, e = koszul_dual(p), Enumeration.identity(3)
        u1, u2 = dual_complement(dp, e, w(1, 3))
        assert u1 == u2 == w(2)
        hits = [v for k in range(4) for v in dual_normal_words(e, k) if star(p, e, w(1, 3), v) == w(1, 2, 3)]
        assert hits == [w(2)]
        assert len([v for k in range(4) for v in dual_normal_words(e, k)]) == 8

    def test_rejects_unordered(self):
        with pytest.raises(ValueError):
            dual_complement(koszul_dual(flip(3)), Enumeration.identity(3), w(3, 1))

    def test_bijective(self, corpus):
        done = 0
        for name, p in corpus:
            if not check_axioms(p).ok or p.n > 5:
                continue
            orders = find_skew_order(p)
            if not orders:
                continue
            e = orders[0]
            dp = koszul_dual(p)
            chains = eta_chain(p, e)
            for k in range(p.n + 1):
                right = {dual_complement(dp, e, u, chains)[0] for u in dual_normal_words(e, k)}
                assert right == set(dual_normal_words(e, p.n - k)), name
            done += 1
        assert done > 20


def _nonzero_normal(p, e, rng):
    k = rng.randint(0, p.n)
    return tuple(sorted(rng.sample(range(p.n), k), key=lambda g: e.rank[g]))


def test_cancellation(corpus):
    rng = random.Random(7)
    cases = [(p, find_skew_order(p)) for _, p in corpus if check_axioms(p).ok and 3 <= p.n <= 5]
    cases = [(p, orders[0]) for p, orders in cases if orders]
    checked = 0
    while checked < 200:
        p, e = rng.choice(cases)
        a, b, c = (_nonzero_normal(p, e, rng) for _ in range(3))
        ab, ac = star(p, e, a, b), star(p, e, a, c)
        if ab is not None and ab == ac:
            assert b == c
        ba, ca = star(p, e, b, a), star(p, e, c, a)
        if ba is not None and ba == ca:
            assert b == c
        if ab is not None or ba is not None:
            checked += 1


def test_principal_class_size(corpus):
    for name, p in corpus:
        if not check_axioms(p).ok or p.n > 5:
            continue
        dp = koszul_dual(p)
        if check_frobenius(dp).holds:
            assert len(principal_monomial(dp).klass) == factorial(p.n), name


def test_exterior_dims():
    assert exterior_dims(4) == [1, 4, 6, 4, 1, 0]


@given(st.integers(1, 5))
def test_exterior_algebra_dims(n):
    dp = koszul_dual(flip(n))
    assert [graded_dimension(dp, k) for k in range(n + 2)] == exterior_dims(n)


class TestQuotientRank:
    def test_ordered_words_span(self):
        dp, e = koszul_dual(flip(3)), Enumeration.identity(3)
        assert [quotient_rank(dp, k, dual_normal_words(e, k)) for k in range(4)] == [1, 3, 3, 1]

    def test_class_members_are_proportional(self):
        dp = koszul_dual(flip(3))
        assert quotient_rank(dp, 2, [w(2, 1), w(1, 2)]) == 1
        assert quotient_rank(dp, 2, [w(1, 1), w(2, 2)]) == 0

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            quotient_rank(koszul_dual(flip(3)), 2, [w(1, 2, 3)])
