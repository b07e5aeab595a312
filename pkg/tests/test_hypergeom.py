import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from racahkit.errors import DenominatorPole, NonTerminating
from racahkit.exact import rising_factorial
from racahkit.hypergeom import (
    HypSeriesSpec,
    chu_vandermonde,
    classify,
    evaluate_terminating,
    hyp,
    series_terms,
)

from .oracles import pfq_direct

small = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 12))


def test_classify_racah_slice():
    c = classify(hyp([-2, 3, -1, 2], [1, -2, 4], 1))
    assert c.terminating and c.truncation_index == 1
    assert c.denominator_valid and c.saalschutzian and c.unit_argument


def test_classify_non_terminating():
    c = classify(hyp([Fraction(1, 2)], [3], 1))
    assert not c.terminating and c.truncation_index is None


def test_classify_pole():
    c = classify(hyp([-3, 1], [-1], 1))
    assert c.terminating and c.truncation_index == 3 and not c.denominator_valid


def test_pole_boundary():
    # -n+1 .. 0 is forbidden; -n is harmless because the series stops first
    assert not classify(hyp([-3], [-2])).denominator_valid
    assert classify(hyp([-3], [-3])).denominator_valid
    assert classify(hyp([-3], [1])).denominator_valid


def test_zero_numerator_parameter():
    c = classify(hyp([0, -4], [-2], 5))
    assert c.truncation_index == 0 and c.denominator_valid
    assert evaluate_terminating(hyp([0, -4], [-2], 5)) == 1


def test_evaluate_examples():
    assert evaluate_terminating(hyp([-2, 1], [3], 1)) == Fraction(1, 2)
    assert evaluate_terminating(hyp([-1, 2, -1, 2], [1, -1, 3], 1)) == Fraction(-1, 3)
    assert evaluate_terminating(hyp([-5, Fraction(2, 7)], [Fraction(9, 4)], 0)) == 1


def test_evaluate_errors():
    with pytest.raises(NonTerminating):
        evaluate_terminating(hyp([Fraction(1, 2)], [3], 1))
    with pytest.raises(DenominatorPole, match="-1"):
        evaluate_terminating(hyp([-3, 1], [-1], 1))


def test_series_terms_match_direct_terms():
    spec = hyp([-4, Fraction(1, 3), 2], [Fraction(5, 2), 7], Fraction(-3, 2))
    terms = list(series_terms(spec))
    assert len(terms) == 5
    assert sum(terms) == evaluate_terminating(spec)
    assert sum(terms) == pfq_direct(spec.numerator_params, spec.denominator_params, spec.argument, 4)


@given(st.integers(0, 12), st.lists(small, max_size=3), st.lists(small, max_size=3), small)
def test_matches_direct_sum(n, num, den, z):
    assume(all(not (b.denominator == 1 and 1 - n <= b <= 0) for b in den))
    assume(all(not (a.denominator == 1 and -n < a <= 0) for a in num))
    spec = hyp([-n, *num], den, z)
    assert evaluate_terminating(spec) == pfq_direct([-n, *num], den, z, n)


def test_chu_vandermonde_examples():
    assert chu_vandermonde(2, 1, 3) == Fraction(1, 2)
    assert chu_vandermonde(0, Fraction(4, 9), Fraction(-7, 3)) == 1
    assert chu_vandermonde(3, Fraction(-5, 2), Fraction(1, 2)) == 32
    with pytest.raises(DenominatorPole):
        chu_vandermonde(3, 1, -2)


def test_chu_vandermonde_oracle_agreement_small():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(0, 30)
        a = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
        b = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
        if b.denominator == 1 and 1 - n <= b <= 0:
            continue
        assert evaluate_terminating(hyp([-n, a], [b], 1)) == chu_vandermonde(n, a, b)


@given(st.integers(0, 8), st.lists(small, max_size=3), st.lists(small, max_size=3), st.randoms())
def test_parameter_order_invariance(n, num, den, rnd):
    den = [b for b in den if not (b.denominator == 1 and 1 - n <= b <= 0)]
    spec = hyp([-n, *num], den, Fraction(2, 3))
    assume(classify(spec).truncation_index == n)
    shuffled_num = list(spec.numerator_params)
    shuffled_den = list(spec.denominator_params)
    rnd.shuffle(shuffled_num)
    rnd.shuffle(shuffled_den)
    assert evaluate_terminating(hyp(shuffled_num, shuffled_den, spec.argument)) == evaluate_terminating(spec)


@given(st.integers(0, 8), st.lists(small, max_size=2), st.lists(small, max_size=2), small, small)
def test_cancelling_pair(n, num, den, c, z):
    valid = lambda b: not (b.denominator == 1 and 1 - n <= b <= 0)
    den = [b for b in den if valid(b)]
    assume(valid(c) and not (c.denominator == 1 and -n < c <= 0))
    spec = hyp([-n, *num], den, z)
    assume(classify(spec).truncation_index == n)
    assert evaluate_terminating(hyp([-n, *num, c], [*den, c], z)) == evaluate_terminating(spec)


@given(st.integers(0, 7), st.lists(small, max_size=2), st.lists(small, max_size=2))
def test_degree_bound(n, num, den):
    den = [b for b in den if not (b.denominator == 1 and 1 - n <= b <= 0)]
    assume(classify(hyp([-n, *num], den)).truncation_index == n)
    # the (n+1)-th finite difference of a degree <= n polynomial vanishes
    values = [evaluate_terminating(hyp([-n, *num], den, z)) for z in range(n + 2)]
    for _ in range(n + 1):
        values = [b - a for a, b in zip(values, values[1:])]
    assert values == [0]


def test_spec_coerces_and_formats():
    spec = HypSeriesSpec(("1/2", -3), (4,), "2/3")
    assert spec.numerator_params == (Fraction(1, 2), Fraction(-3))
    assert str(spec) == "2F1(1/2, -3; 4; 2/3)"
    assert rising_factorial(spec.argument, 1) == Fraction(2, 3)
