import cmath
import math

import numpy as np
import pytest

from lpgst.cyclotomic import (CycloElement, IntPolynomial,
                              cyclotomic_polynomial, euler_phi,
                              from_polynomial, reduce_mod, theta_element)


def test_known_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1).coefficients == (-1, 1)
    assert cyclotomic_polynomial(2).coefficients == (1, 1)
    assert cyclotomic_polynomial(8).coefficients == (1, 0, 0, 0, 1)
    assert cyclotomic_polynomial(10).coefficients == (1, -1, 1, -1, 1)
    assert cyclotomic_polynomial(12).coefficients == (1, 0, -1, 0, 1)
    assert cyclotomic_polynomial(24).coefficients == (1, 0, 0, 0, -1, 0, 0, 0, 1)


def test_cyclotomic_degree_is_totient():
    for m in range(1, 60):
        assert cyclotomic_polynomial(m).degree == euler_phi(m)


def test_cyclotomic_product_identity():
    for m in range(1, 41):
        prod = IntPolynomial((1,))
        for d in range(1, m + 1):
            if m % d == 0:
                prod = prod * cyclotomic_polynomial(d)
        expected = IntPolynomial((-1,) + (0,) * (m - 1) + (1,))
        assert prod == expected, m


def test_cyclotomic_vanishes_at_primitive_root():
    for n in range(2, 65):
        z = cmath.exp(1j * math.pi / n)
        assert abs(cyclotomic_polynomial(2 * n).evaluate(z)) < 1e-8, n


def test_reduce_mod_wraps_powers():
    phi8 = cyclotomic_polynomial(8)
    assert reduce_mod(IntPolynomial.monomial(4), phi8).coefficients == (-1,)
    x5_plus_x = IntPolynomial.monomial(5) + IntPolynomial.monomial(1)
    assert reduce_mod(x5_plus_x, phi8).is_zero()


def test_reduce_mod_requires_monic():
    with pytest.raises(ValueError, match="monic"):
        reduce_mod(IntPolynomial((1, 1)), IntPolynomial((1, 2)))
    with pytest.raises(ValueError, match="monic"):
        reduce_mod(IntPolynomial((1, 1)), IntPolynomial(()))


def test_theta_element_examples():
    assert theta_element(4, 2).coefficients == (2, 0, 0, 0)
    assert theta_element(3, 1).coefficients == (1, 0)
    assert theta_element(3, 2).coefficients == (3, 0)


def test_theta_element_range_check():
    with pytest.raises(ValueError):
        theta_element(5, 0)
    with pytest.raises(ValueError):
        theta_element(5, 5)


def test_theta_element_matches_cosine_eigenvalues():
    for n in range(2, 65):
        for k in range(1, n):
            value = theta_element(n, k).evaluate_at_root()
            target = 2.0 - 2.0 * math.cos(k * math.pi / n)
            assert abs(value - target) < 1e-9, (n, k)


def test_exact_combination_tracks_float_evaluation():
    rng = np.random.default_rng(41)
    for n in (5, 8, 9, 12):
        thetas = [theta_element(n, k) for k in range(1, n)]
        floats = [2.0 - 2.0 * math.cos(k * math.pi / n) for k in range(1, n)]
        for _ in range(40):
            coeffs = rng.integers(-3, 4, size=n - 1)
            total = CycloElement.zero(2 * n)
            for c, th in zip(coeffs, thetas):
                total = total + th.scaled(int(c))
            float_sum = sum(int(c) * f for c, f in zip(coeffs, floats))
            assert total.is_zero() == (abs(float_sum) < 1e-9), (n, coeffs)


def test_witness_polynomial_reduces_to_zero():
    # The (9,1) witness vector lifts to a polynomial with the primitive
    # 18th root as a zero, so reduction modulo Phi_18 kills it exactly.
    l = (1, -1, 0, -1, 1, 0, 1, -1)
    n = 9
    poly = IntPolynomial(())
    for k in range(1, n):
        if l[k - 1]:
            term = (IntPolynomial((2,))
                    - IntPolynomial.monomial(k)
                    - IntPolynomial.monomial(2 * n - k)).scaled(l[k - 1])
            poly = poly + term
    assert reduce_mod(poly, cyclotomic_polynomial(18)).is_zero()


def test_int_polynomial_divmod_roundtrip():
    rng = np.random.default_rng(43)
    for _ in range(30):
        a = IntPolynomial(tuple(int(c) for c in rng.integers(-5, 6, size=9)))
        b_coeffs = tuple(int(c) for c in rng.integers(-5, 6, size=4)) + (1,)
        b = IntPolynomial(b_coeffs)
        quo, rem = divmod(a, b)
        assert quo * b + rem == a
        assert rem.degree < b.degree


def test_int_polynomial_normalizes_trailing_zeros():
    assert IntPolynomial((1, 2, 0, 0)).coefficients == (1, 2)
    assert IntPolynomial((0, 0)).is_zero()
    assert IntPolynomial(()).degree == -1


def test_euler_phi_values():
    assert [euler_phi(m) for m in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    assert euler_phi(128) == 64


def test_cyclo_element_shape_checked():
    with pytest.raises(ValueError):
        CycloElement(8, (1, 2))  # phi(8) = 4
    with pytest.raises(ValueError):
        CycloElement(6, (1,) * 2) + CycloElement(8, (1,) * 4)


def test_from_polynomial_pads_to_full_width():
    el = from_polynomial(IntPolynomial((5,)), 8)
    assert el.coefficients == (5, 0, 0, 0)
