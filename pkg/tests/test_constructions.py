from fractions import Fraction

import pytest
import sympy

from oracles import closure_h, partitions_count, poly_coeffs
from pureo.constructions import (
    Partition,
    ci_h_vector,
    compute_c_e,
    disjoint_sum,
    disjoint_sum_witness,
    format_fraction,
    nonunimodal_factory,
    p_r,
    partitions,
    shifted_sum,
    truncation_generators,
    truncation_h,
)
from pureo.monomials import Monomial, divisor_closure, h_vector, is_pure, support
from pureo.purity import validate_witness
from pureo.sequences import analyze_shape, first_difference, is_o_sequence


class TestPartition:
    def test_parse(self):
        assert Partition.parse("4+1+1").parts == (4, 1, 1)
        assert Partition.parse("1,4,1").parts == (4, 1, 1)
        assert str(Partition((2, 3))) == "3+2"

    @pytest.mark.parametrize("bad", ["", "3+x", "0+1", "-1"])
    def test_parse_errors(self, bad):
        with pytest.raises(ValueError):
            Partition.parse(bad)

    def test_listing(self):
        assert [p.parts for p in partitions(5, 2)] == [(4, 1), (3, 2)]
        assert [p.parts for p in partitions(6, 3)] == [(4, 1, 1), (3, 2, 1), (2, 2, 2)]
        for e in range(1, 15):
            ps = list(partitions(e))
            assert len(ps) == len(set(ps)) == sympy.partition(e)
            assert all(p.total == e for p in ps)


class TestCounts:
    def test_examples(self):
        assert p_r(5, 2) == 2
        assert p_r(6, 3) == 3
        assert all(p_r(e, 1) == 1 for e in range(1, 30))
        assert p_r(3, 5) == 0

    def test_against_listing(self):
        for e in range(1, 25):
            for r in range(1, e + 1):
                assert p_r(e, r) == partitions_count(e, r)

    def test_sum_is_partition_number(self):
        for e in range(1, 41):
            assert sum(p_r(e, r) for r in range(1, e + 1)) == sympy.partition(e)


class TestCompleteIntersections:
    def test_examples(self):
        assert ci_h_vector(Partition((1, 1, 1))) == (1, 3, 3, 1)
        assert ci_h_vector(Partition((3,))) == (1, 1, 1, 1)
        assert ci_h_vector(Partition((2, 1))) == (1, 2, 2, 1)

    def test_symmetric_strictly_unimodal(self):
        for e in range(1, 13):
            for p in partitions(e):
                h = ci_h_vector(p)
                assert tuple(h) == tuple(reversed(h))
                assert analyze_shape(h).is_strictly_unimodal
                assert tuple(h) == poly_coeffs(p.parts)

    def test_matches_closure(self):
        for e in range(1, 10):
            for p in partitions(e):
                assert h_vector(divisor_closure([p.monomial()])) == ci_h_vector(p)
                assert closure_h([p.parts]) == tuple(ci_h_vector(p))

    def test_distinct_partitions_distinct_vectors(self):
        for e in range(1, 13):
            for r in range(1, e + 1):
                vecs = {tuple(ci_h_vector(p)) for p in partitions(e, r)}
                assert len(vecs) == p_r(e, r)


class TestTruncation:
    def test_examples(self):
        assert truncation_h(4, 4) == (1, 4, 10, 20, 35)
        assert truncation_h(5, 4) == (1, 5, 15, 35, 70)
        assert truncation_h(1, 6) == (1,) * 7

    def test_generators_realize_it(self):
        for r in range(1, 5):
            for e in range(1, 5):
                assert h_vector(divisor_closure(truncation_generators(r, e))) == truncation_h(r, e)


class TestDisjointSum:
    def test_examples(self):
        assert disjoint_sum([(1, 4, 10, 20, 35), (1, 4, 6, 4, 1)]) == (1, 8, 16, 24, 36)
        assert disjoint_sum([(1, 5, 15, 35, 70)] + [(1, 4, 6, 4, 1)] * 11) == (1, 49, 81, 79, 81)
        assert disjoint_sum([(1, 3, 3, 1)]) == (1, 3, 3, 1)

    def test_mismatched_degrees(self):
        with pytest.raises(ValueError):
            disjoint_sum([(1, 2, 1), (1, 1, 1, 1)])

    def test_not_differentiable(self):
        h = disjoint_sum([(1, 4, 10, 20, 35), (1, 4, 6, 4, 1)])
        chk = is_o_sequence(first_difference(h))
        assert not chk and chk.failed_at == 4

    def test_witness_validates(self):
        cases = [
            [truncation_generators(4, 4), [Partition((1, 1, 1, 1)).monomial()]],
            [[Partition((2, 1)).monomial()], [Partition((3,)).monomial()], truncation_generators(2, 3)],
        ]
        for sets in cases:
            w = disjoint_sum_witness(sets)
            h = disjoint_sum([h_vector(divisor_closure(s)) for s in sets])
            assert validate_witness(h, w).is_pure
            assert support(w) == h[1]

    def test_witness_compacts_supports(self):
        w = disjoint_sum_witness([[Monomial.parse("x3^2")], [Monomial.parse("x5*x7")]])
        assert sorted(w) == sorted([Monomial.parse("x1^2"), Monomial.parse("x2*x3")])


class TestShiftedSum:
    def test_definition(self):
        assert shifted_sum((1, 3, 3, 1), (1, 2, 1)) == (1, 4, 5, 2)
        with pytest.raises(ValueError):
            shifted_sum((1, 2), (1, 2, 1))


class TestCe:
    def test_examples(self):
        assert compute_c_e(1) == 1
        assert compute_c_e(2) == Fraction(1, 2)
        assert compute_c_e(3) == Fraction(1, 30)
        assert format_fraction(compute_c_e(3)) == "1/30"

    def test_against_sympy(self):
        for e in range(1, 9):
            n = sympy.binomial(e + 1, 2) - 1
            num = sympy.prod([sympy.binomial(n - sympy.binomial(i + 1, 2), i) for i in range(e - 1)])
            expected = sympy.Rational(num, sympy.factorial(n))
            got = compute_c_e(e)
            assert sympy.Rational(got.numerator, got.denominator) == expected


class TestNonunimodal:
    def test_two_maxima_is_the_classic_example(self):
        rec = nonunimodal_factory(2)
        assert rec.h == (1, 49, 81, 79, 81)
        assert analyze_shape(rec.h).num_local_maxima == 2
        assert not analyze_shape(rec.h).is_unimodal

    @pytest.mark.parametrize("M", range(2, 9))
    def test_exact_maxima(self, M):
        rec = nonunimodal_factory(M)
        assert analyze_shape(rec.h).num_local_maxima == M
        assert is_o_sequence(rec.h)

    @pytest.mark.parametrize("M", [2, 3, 4])
    def test_witness_revalidates(self, M):
        rec = nonunimodal_factory(M)
        w = rec.witness()
        X = divisor_closure(w)
        assert h_vector(X) == rec.h
        assert is_pure(X)
        assert support(w) == rec.codimension

    def test_three_maxima_recipe(self):
        rec = nonunimodal_factory(3)
        assert rec.describe() == "4*CI(6+2) + 13*CI(4+4) + 2*T(3,8)"
        assert rec.h == (1, 40, 63, 84, 107, 106, 107, 106, 107)

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            nonunimodal_factory(1)
