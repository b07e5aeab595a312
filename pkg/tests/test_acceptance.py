"""Exit criteria. Each test carries its time budget and prints a verdict line
in the terminal summary (see conftest.py)."""
import io
import json
import random
import time
from fractions import Fraction

import pytest

from racahkit.cli import main
from racahkit.hypergeom import chu_vandermonde, evaluate_terminating, hyp
from racahkit.suites import (
    expected_cases,
    lemma340_rhs,
    suite_c310a,
    suite_c310b,
    suite_c320,
    suite_kernel_delta,
    suite_lemma340,
)
from racahkit.transforms import (
    inverse_transform,
    inverse_transform_binomial,
    tilde_transform,
    tilde_transform_pochhammer,
)

CORPUS_SEED = 20240601


def random_rational(rng):
    return Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))


@pytest.fixture(scope="module")
def corpus():
    rng = random.Random(CORPUS_SEED)
    seqs = [tuple(random_rational(rng) for _ in range(rng.randint(0, 64))) for _ in range(500)]
    # make sure the full length is exercised regardless of the draw
    seqs[0] = tuple(random_rational(rng) for _ in range(64))
    return seqs


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.1f}s > {self.seconds}s"


@pytest.mark.acceptance(1, "inversion round trip on 500 random sequences, length <= 64")
def test_round_trip(corpus):
    with Budget(30):
        for x in corpus:
            assert inverse_transform(tilde_transform(x)) == x
            assert tilde_transform(inverse_transform(x)) == x


@pytest.mark.acceptance(2, "kernel delta for 0 <= n, m <= 48")
def test_kernel_delta():
    with Budget(10):
        r = suite_kernel_delta(48)
    assert r.passed and r.cases_run == 49 * 49


@pytest.mark.acceptance(3, "lemma identity for 1 <= n <= 500")
def test_alternating_binomial_identity():
    with Budget(10):
        r = suite_lemma340(500)
    assert r.passed and r.cases_run == 500


@pytest.mark.acceptance(4, "column-sum identity to n = 200 and fixed point 1/(2n+1) to n = 200")
def test_column_sums_and_fixed_point():
    with Budget(60):
        a = suite_c310a(200)
        b = suite_c310b(200)
    assert a.passed and a.cases_run == expected_cases("c310a", 200)
    assert b.passed and b.cases_run == 201 + 33


@pytest.mark.acceptance(5, "Racah inverse-transform identity and band for 1 <= T <= 60")
def test_racah_inverse_identity():
    with Budget(300):
        r = suite_c320(60, workers=1)
    assert r.passed and r.cases_run == sum(T * T for T in range(1, 61))


@pytest.mark.acceptance(6, "2F1 series equals Chu-Vandermonde, n <= 100, 200 random (a, b)")
def test_chu_vandermonde():
    rng = random.Random(CORPUS_SEED + 1)
    pairs = []
    while len(pairs) < 200:
        a = random_rational(rng)
        b = Fraction(rng.randint(-200, 200), rng.randint(1, 7))
        if b.denominator == 1 and -99 <= b <= 0:
            continue  # (b)_n = 0 for some n <= 100
        pairs.append((a, b))
    with Budget(30):
        for n in range(101):
            for a, b in pairs:
                assert evaluate_terminating(hyp([-n, a], [b], 1)) == chu_vandermonde(n, a, b)


@pytest.mark.acceptance(7, "sweep 1..40: no violations, max 1 on a boundary cell, same bytes for 1/2/8 workers")
def test_sweep():
    outputs = {}
    with Budget(300):
        for workers in (1, 2, 8):
            buf = io.StringIO()
            code = main(["sweep", "--t-min", "1", "--t-max", "40", "--workers", str(workers),
                         "--format", "json"], out=buf)
            outputs[workers] = (code, buf.getvalue())
    assert outputs[1] == outputs[2] == outputs[8]
    code, text = outputs[1]
    doc = json.loads(text)
    assert code == 0 and doc["violations"] == []
    assert doc["max_abs_value"] == "1"
    w = doc["witness"]
    assert w["n"] == 0 or w["s"] == 0
    assert doc["cells_checked"] == sum(T * T for T in range(1, 41))


@pytest.mark.acceptance(8, "binomial and Pochhammer forms of both transforms agree on the corpus")
def test_form_equivalence(corpus):
    for x in corpus:
        assert tilde_transform(x) == tilde_transform_pochhammer(x)
        assert inverse_transform(x) == inverse_transform_binomial(x)


@pytest.mark.acceptance(9, "a sign-flipped lemma oracle makes the lemma suite fail")
def test_mutation():
    assert suite_lemma340(500).passed
    mutated = suite_lemma340(500, oracle=lambda n: -lemma340_rhs(n))
    assert mutated.status == "failed" and len(mutated.failures) == 500
