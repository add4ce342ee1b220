import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qaoa_threshold.errors import DomainError
from qaoa_threshold.numerics import (
    bernoulli_pmf,
    bernoulli_pmf_vector,
    binom_pmf,
    binom_pmf_vector,
    cpow_int,
    log_binomial,
)


def test_log_binomial_small():
    assert log_binomial(5, 2) == pytest.approx(math.log(10), abs=1e-15)
    for n in (0, 1, 7, 64, 65, 500, 10_000):
        assert log_binomial(n, 0) == 0.0
        assert log_binomial(n, n) == pytest.approx(0.0, abs=1e-9)


def test_log_binomial_sums_to_one_at_500():
    total = math.fsum(math.exp(log_binomial(500, k) - 500 * math.log(2)) for k in range(501))
    assert abs(total - 1) <= 1e-12


@pytest.mark.parametrize("n", [65, 100, 500, 2000])
def test_log_binomial_matches_exact_integers(n):
    for k in (0, 1, n // 3, n // 2, n - 1):
        exact = math.log(math.comb(n, k)) if math.comb(n, k) < 1e300 else None
        if exact is not None:
            assert log_binomial(n, k) == pytest.approx(exact, rel=1e-13, abs=1e-12)


def test_binom_pmf_examples():
    assert binom_pmf(1, 0) == 0.5
    assert binom_pmf(4, 2) == 0.375
    expected = math.exp(log_binomial(500, 250) - 500 * math.log(2))
    assert binom_pmf(500, 250) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("n", list(range(0, 70)) + [100, 499, 1000, 5000, 10_000])
def test_binom_mass_normalised(n):
    assert abs(math.fsum(binom_pmf_vector(n)) - 1) <= 1e-12


def test_bernoulli_examples():
    assert bernoulli_pmf(0.0, 9, 0) == 1.0
    assert bernoulli_pmf(0.0, 9, 1) == 0.0
    assert bernoulli_pmf(0.5, 4, 2) == 0.375
    assert bernoulli_pmf(1.0, 7, 7) == 1.0
    assert bernoulli_pmf(1.0, 700, 700) == 1.0
    assert bernoulli_pmf(0.0, 0, 0) == 1.0


@pytest.mark.parametrize("p", [0.0, 1e-9, 0.3, 0.5, 0.999, 1.0])
@pytest.mark.parametrize("n", [0, 1, 17, 64, 65, 499, 3000])
def test_bernoulli_vector_normalised(p, n):
    vec = bernoulli_pmf_vector(p, n)
    assert vec.shape == (n + 1,)
    assert np.all(vec >= 0)
    assert abs(math.fsum(vec) - 1) <= 1e-12
    for l in (0, n // 2, n):
        assert vec[l] == pytest.approx(bernoulli_pmf(p, n, l), rel=1e-12, abs=1e-300)


@pytest.mark.parametrize(
    "call",
    [
        lambda: log_binomial(5, 6),
        lambda: log_binomial(5, -1),
        lambda: log_binomial(-1, 0),
        lambda: binom_pmf(3, 4),
        lambda: binom_pmf(10_001, 0),
        lambda: bernoulli_pmf(1.5, 3, 1),
        lambda: bernoulli_pmf(0.5, 3, 4),
        lambda: bernoulli_pmf_vector(-0.1, 3),
        lambda: cpow_int(2.0, -1),
    ],
)
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()


def test_cpow_examples():
    assert cpow_int(1j, 2) == -1
    assert cpow_int(0.3 + 0.7j, 0) == 1
    assert cpow_int(0j, 0) == 1
    z = 0.3 + 0.4j
    product = complex(1)
    for _ in range(7):
        product *= z
    assert abs(cpow_int(z, 7) - product) <= 1e-14 * abs(product)


finite = st.floats(-2.0, 2.0, allow_nan=False)


@settings(max_examples=200, deadline=None)
@given(finite, finite, st.integers(0, 60))
def test_cpow_matches_repeated_multiplication(re, im, e):
    z = complex(re, im)
    product = complex(1)
    for _ in range(e):
        product *= z
    got = cpow_int(z, e)
    assert abs(got - product) <= 1e-12 * max(1.0, abs(product))


@settings(max_examples=100, deadline=None)
@given(finite, finite, st.integers(0, 30), st.integers(0, 30))
def test_cpow_exponent_law(re, im, a, b):
    z = complex(re, im)
    lhs = cpow_int(z, a + b)
    rhs = cpow_int(z, a) * cpow_int(z, b)
    assert abs(lhs - rhs) <= 1e-11 * max(1.0, abs(lhs))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10_000), st.data())
def test_binom_symmetry(n, data):
    k = data.draw(st.integers(0, n))
    assert binom_pmf(n, k) == pytest.approx(binom_pmf(n, n - k), rel=1e-12, abs=1e-300)
