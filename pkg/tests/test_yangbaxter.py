from fractions import Fraction
from itertools import product

import pytest

from oracles import braid_matrices
from qbx.core import Tensor
from qbx.corpus import a2, flip, non_standard_example, set_solution_example
from qbx.presentation import Presentation, check_axioms
from qbx.rewriting import find_skew_order
from qbx.yangbaxter import apply_at, check_linear_ybe, check_set_ybe, linear_map


def ones(p):
    return Presentation(p.n, tuple((r.lhs, 1, r.rhs) for r in p.relations), p.names)


class TestSetYBE:
    def test_flip(self):
        assert check_set_ybe(flip(4)).holds

    def test_set_solution_example(self):
        assert check_set_ybe(set_solution_example()).holds

    def test_non_standard_example(self):
        v = check_set_ybe(non_standard_example())
        assert not v.holds
        triple, left, right = v.counterexample
        assert left[0] == right[0] == triple and left[-1] != right[-1]
        # least failing triple in deglex order
        for u in product(range(4), repeat=3):
            if u == triple:
                break
            assert check_set_ybe_at(non_standard_example(), u)


def check_set_ybe_at(p, u):
    from qbx.presentation import canonical_map

    r = canonical_map(p)
    a = lambda v: r(*v[:2]) + v[2:]
    b = lambda v: v[:1] + r(*v[1:])
    return a(b(a(u))) == b(a(b(u)))


class TestLinearYBE:
    def test_flip(self):
        assert check_linear_ybe(flip(3)).holds

    def test_a2_ones(self):
        assert check_linear_ybe(a2()).holds

    def test_a2_broken(self):
        v = check_linear_ybe(a2(e=2))
        assert not v.holds
        word, left, right = v.counterexample
        assert left != right and len(word) == 3

    def test_a2_admissible_families(self):
        assert check_linear_ybe(a2(a=-1, f=-1)).holds
        assert check_linear_ybe(a2(a=1, b=2, c=2, d=1, e=1, f=-1)).holds

    def test_involution_up_to_scalar(self, corpus):
        for name, p in corpus:
            a = check_axioms(p)
            if not (a.binomial.ok and a.single_occurrence.ok):
                continue
            R = linear_map(p)
            for pair in product(range(p.n), repeat=2):
                img, c = R[pair]
                back, k = R[img]
                assert back == pair and c * k == 1, name

    def test_apply_at(self):
        R = linear_map(a2(b=3))
        t = Tensor({(3, 1, 0): 1})
        assert apply_at(R, t, 0) == Tensor({(0, 2, 0): 3})

    def test_ones_agrees_with_set_check(self, corpus):
        for name, p in corpus:
            a = check_axioms(p)
            if a.binomial.ok and a.single_occurrence.ok:
                assert check_linear_ybe(ones(p)).holds == check_set_ybe(p).holds, name

    def test_matches_dense_matrices(self, corpus):
        for name, p in corpus:
            a = check_axioms(p)
            if not (a.binomial.ok and a.single_occurrence.ok) or p.n > 4:
                continue
            left, right = braid_matrices(p)
            assert check_linear_ybe(p).holds == (left == right), name

    def test_groebner_implies_linear_ybe(self, corpus):
        for name, p in corpus:
            if check_axioms(p).ok and find_skew_order(p):
                assert check_linear_ybe(p).holds, name

    @pytest.mark.parametrize("c", [Fraction(2), Fraction(-3, 5)])
    def test_multiparameter_flip(self, c):
        # x_j x_i = c x_i x_j for every pair: a braided twist of the flip
        assert check_linear_ybe(flip(4, coeff=c)).holds
