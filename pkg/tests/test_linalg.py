import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quivergrass.errors import BudgetExceeded, InconsistentSamples, NonIntegralFit
from quivergrass.linalg import (GF, QQ, IntPolynomial, Matrix, enumerate_subspaces, fit_polynomial,
                                gaussian_binomial, is_prime, primes)


def gauss_product(n, k, q):
    # independent product formula prod (q^(n-i) - 1) / (q^(i+1) - 1)
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def test_primes():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert list(itertools.islice(primes(), 5)) == [2, 3, 5, 7, 11]
    with pytest.raises(Exception):
        GF(4)


def test_field_arithmetic():
    F = GF(5)
    assert F.mul(3, 4) == 2
    assert F.mul(3, F.inv(3)) == 1
    assert F(-1) == 4
    assert QQ.div(QQ(1), QQ(3)) == Fraction(1, 3)


def test_rref_examples():
    I = Matrix.identity(GF(2), 3)
    assert I.rank() == 3 and I.kernel_basis() == []
    Z = Matrix.zeros(GF(2), 2, 3)
    assert Z.rank() == 0 and len(Z.kernel_basis()) == 3
    m = Matrix(QQ, 2, 2, [[1, 2], [2, 4]])
    assert m.rank() == 1
    (v,) = m.kernel_basis()
    assert list(v) == [-2, 1]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 5), st.sampled_from([2, 3, 5, 0]), st.data())
def test_rank_nullity_and_idempotence(r, c, p, data):
    F = QQ if p == 0 else GF(p)
    rows = data.draw(st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c),
                              min_size=r, max_size=r))
    m = Matrix(F, r, c, rows)
    R = m.rref()
    assert R.rank + len(m.kernel_basis()) == c
    for v in m.kernel_basis():
        assert all(x == 0 for x in m.apply(v))
    assert R.matrix.rref().matrix == R.matrix
    assert len(m.image_basis()) == R.rank


def test_inverse_and_solve():
    F = GF(7)
    m = Matrix(F, 2, 2, [[1, 2], [3, 4]])
    assert m @ m.inverse() == Matrix.identity(F, 2)
    assert m.solve([1, 0]) is not None
    sing = Matrix(F, 2, 2, [[1, 2], [2, 4]])
    assert sing.solve([1, 0]) is None


@pytest.mark.parametrize("p,d,e,count", [(2, 3, 1, 7), (3, 2, 1, 4), (2, 4, 2, 35)])
def test_enumerate_subspaces_examples(p, d, e, count):
    subs = list(enumerate_subspaces(p, d, e))
    assert len(subs) == count
    assert len(set(map(lambda b: tuple(map(tuple, b)), subs))) == count


def test_enumerate_matches_gaussian_binomial():
    for p in (2, 3, 5):
        for d in range(5):
            for e in range(d + 1):
                if gauss_product(d, e, p) <= 10 ** 4:
                    assert len(list(enumerate_subspaces(p, d, e))) == gauss_product(d, e, p)
                assert gaussian_binomial(d, e, p) == gauss_product(d, e, p)


def test_enumerate_budget():
    with pytest.raises(BudgetExceeded):
        list(enumerate_subspaces(5, 6, 3, budget=100))


def test_polynomial_arithmetic():
    q = IntPolynomial([0, 1])
    p = q * q + q + 1
    assert p(2) == 7 and str(p) == "q^2 + q + 1"
    assert p.degree == 2 and IntPolynomial().is_zero()
    assert (p - p).is_zero() and q.shift(2) == IntPolynomial([0, 0, 0, 1])
    assert IntPolynomial([1]) == 1


@pytest.mark.parametrize("samples,bound,expect", [
    ([(2, 7), (3, 13), (5, 31)], 2, [1, 1, 1]),
    ([(2, 1), (3, 1)], 0, [1]),
    ([(2, 3), (3, 4), (5, 6), (7, 8)], 1, [1, 1]),
])
def test_fit_examples(samples, bound, expect):
    assert fit_polynomial(samples, bound).to_list() == expect


def test_fit_errors():
    with pytest.raises(InconsistentSamples):
        fit_polynomial([(2, 3), (3, 4), (5, 7)], 1)
    with pytest.raises(NonIntegralFit):
        fit_polynomial([(2, 0), (3, 1), (5, 0)], 2)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=5))
def test_fit_recovers_random_polynomials(coeffs):
    P = IntPolynomial(coeffs)
    deg = len(coeffs) - 1
    ps = list(itertools.islice(primes(), deg + 2))
    assert fit_polynomial([(p, P(p)) for p in ps], deg) == P
