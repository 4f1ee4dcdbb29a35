"""Exact integer arithmetic in Z[x]/Phi_2n(x).

The path eigenvalues 2 - 2 cos(k pi / n) equal 2 - z^k - z^(2n-k) for z a
primitive 2n-th root of unity, so each one has an exact image as an
integer coefficient vector modulo the 2n-th cyclotomic polynomial. All
coefficients are Python ints, so nothing here ever rounds.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; coefficients[i] multiplies x**i."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = self.coefficients
        end = len(coeffs)
        while end > 0 and coeffs[end - 1] == 0:
            end -= 1
        if end != len(coeffs):
            object.__setattr__(self, "coefficients", coeffs[:end])

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(tuple(out))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coefficients))

    def scaled(self, factor: int) -> "IntPolynomial":
        return IntPolynomial(tuple(factor * c for c in self.coefficients))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __divmod__(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division by a monic divisor; stays in integer coefficients."""
        if not divisor.is_monic():
            raise ValueError("division requires a monic divisor")
        rem = list(self.coefficients)
        d = divisor.degree
        quo = [0] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            lead = rem[i]
            if lead == 0:
                continue
            quo[i - d] = lead
            for j, c in enumerate(divisor.coefficients):
                rem[i - d + j] -= lead * c
        return IntPolynomial(tuple(quo)), IntPolynomial(tuple(rem[:d]))

    def evaluate(self, x: complex) -> complex:
        acc = 0.0 + 0.0j
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    @staticmethod
    def monomial(degree: int, coefficient: int = 1) -> "IntPolynomial":
        return IntPolynomial((0,) * degree + (coefficient,))


def euler_phi(m: int) -> int:
    """Euler's totient by trial-division factorization."""
    if m < 1:
        raise ValueError(f"totient needs a positive argument, got {m}")
    result = m
    rest = m
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            result -= result // p
            while rest % p == 0:
                rest //= p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> IntPolynomial:
    """The m-th cyclotomic polynomial, by exact division of x^m - 1.

    x^m - 1 = prod over d | m of Phi_d, so dividing out the proper
    divisors' polynomials leaves Phi_m with exact integer coefficients.
    """
    if m < 1:
        raise ValueError(f"cyclotomic index must be positive, got {m}")
    poly = IntPolynomial((-1,) + (0,) * (m - 1) + (1,))
    for d in range(1, m):
        if m % d == 0:
            quo, rem = divmod(poly, cyclotomic_polynomial(d))
            assert rem.is_zero(), f"x^{m}-1 not divisible by Phi_{d}"
            poly = quo
    return poly


def reduce_mod(p: IntPolynomial, phi: IntPolynomial) -> IntPolynomial:
    """Remainder of p modulo a monic polynomial phi."""
    if phi.is_zero() or not phi.is_monic():
        raise ValueError("modulus must be monic and nonzero")
    _, rem = divmod(p, phi)
    return rem


@dataclass(frozen=True)
class CycloElement:
    """Element of Z[x]/Phi_2n(x) as a fixed-length coefficient vector.

    modulus_order is 2n; coefficients has length phi(2n), indexed by
    power of the root.
    """

    modulus_order: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        expected = euler_phi(self.modulus_order)
        if len(self.coefficients) != expected:
            raise ValueError(
                f"need {expected} coefficients for modulus order "
                f"{self.modulus_order}, got {len(self.coefficients)}")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def __add__(self, other: "CycloElement") -> "CycloElement":
        self._check_compatible(other)
        return CycloElement(self.modulus_order, tuple(
            a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "CycloElement") -> "CycloElement":
        self._check_compatible(other)
        return CycloElement(self.modulus_order, tuple(
            a - b for a, b in zip(self.coefficients, other.coefficients)))

    def scaled(self, factor: int) -> "CycloElement":
        return CycloElement(self.modulus_order,
                            tuple(factor * c for c in self.coefficients))

    def evaluate_at_root(self) -> complex:
        """Numeric value at the primitive root exp(2 pi i / modulus_order)."""
        z = complex(math.cos(2 * math.pi / self.modulus_order),
                    math.sin(2 * math.pi / self.modulus_order))
        return IntPolynomial(self.coefficients).evaluate(z)

    def _check_compatible(self, other: "CycloElement") -> None:
        if self.modulus_order != other.modulus_order:
            raise ValueError(
                f"modulus orders differ: {self.modulus_order} vs {other.modulus_order}")

    @staticmethod
    def zero(modulus_order: int) -> "CycloElement":
        return CycloElement(modulus_order, (0,) * euler_phi(modulus_order))


def from_polynomial(p: IntPolynomial, modulus_order: int) -> CycloElement:
    """Reduce an integer polynomial into Z[x]/Phi_m and pad to full length."""
    phi = cyclotomic_polynomial(modulus_order)
    rem = reduce_mod(p, phi)
    width = phi.degree
    coeffs = rem.coefficients + (0,) * (width - len(rem.coefficients))
    return CycloElement(modulus_order, coeffs)


@functools.lru_cache(maxsize=None)
def theta_element(n: int, k: int) -> CycloElement:
    """Exact image of the path eigenvalue 2 - 2 cos(k pi / n).

    Reduces 2 - x^k - x^(2n-k) modulo Phi_2n; evaluating the result at
    the primitive 2n-th root recovers the floating-point eigenvalue.
    Cached: the same (n, k) recurs across every pair offset a.
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must lie in 1..{n - 1}, got {k}")
    p = (IntPolynomial((2,))
         - IntPolynomial.monomial(k)
         - IntPolynomial.monomial(2 * n - k))
    return from_polynomial(p, 2 * n)
