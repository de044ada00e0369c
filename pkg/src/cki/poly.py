"""Dense univariate polynomials and the Hermite-type families.

Polynomials are immutable, stored by ascending coefficients, and evaluated
by Horner's rule.  The zero polynomial has degree -1.

Four related families are provided:

* ``hermite_he(k)`` - probabilists' Hermite polynomials in the Rodrigues
  form ``exp(x^2/2) d^k/dx^k exp(-x^2/2)`` (no ``(-1)^k`` factor, so
  ``He_1(x) = -x``).
* ``hermite_ne(k)`` - the all-positive-coefficient companion, which is the
  Gaussian convolution of the monomials: ``Ne_k(x) = integral y^k
  psi(y - x) dy``.
* ``discrete_he(k, moments)`` - the grid analogue with continuous moments
  replaced by grid moments, alternating signs.
* ``discrete_ne(k, moments)`` - the grid analogue with all-positive signs;
  identical to the convolution-moment polynomial
  ``q_k(x) = sum_m binom(k, m) M_{k-m} x^m``.

Binomial weights are exact integers (math.comb); Hermite coefficients are
built in integer arithmetic and converted to the working precision at the
end, so the families are reproducible bit-for-bit.
"""

from __future__ import annotations

from math import comb

from . import precision as prec
from .kernel import MomentTable, double_factorial


def _as_moment_lookup(moments):
    """Accept a MomentTable or a plain sequence of moment values."""
    if isinstance(moments, MomentTable):
        return moments
    return _SequenceMoments(moments)


class _SequenceMoments:
    def __init__(self, values):
        self._values = list(values)

    @property
    def max_degree(self):
        return len(self._values) - 1

    def require(self, degree):
        if degree > self.max_degree:
            raise ValueError(
                f"moment table too short: need degree {degree}, "
                f"have {self.max_degree}"
            )

    def __getitem__(self, k):
        return self._values[k]


class Polynomial:
    """Immutable dense polynomial with real coefficients (ascending)."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        coeffs = list(coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x):
        result = 0
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def coefficient(self, k: int):
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"Polynomial({list(self.coefficients)!r})"

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        n = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(
            [self.coefficient(i) + other.coefficient(i) for i in range(n)]
        )

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        n = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(
            [self.coefficient(i) - other.coefficient(i) for i in range(n)]
        )

    def __neg__(self):
        return Polynomial([-c for c in self.coefficients])

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero() or other.is_zero():
                return Polynomial()
            out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
            for i, a in enumerate(self.coefficients):
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
            return Polynomial(out)
        return Polynomial([c * other for c in self.coefficients])

    def __rmul__(self, scalar):
        return Polynomial([c * scalar for c in self.coefficients])

    def compose_shift(self) -> "Polynomial":
        """Return q with ``q(x) = p(x + 1)``, exact in coefficient arithmetic."""
        out = [0] * len(self.coefficients)
        for k, c in enumerate(self.coefficients):
            for j in range(k + 1):
                out[j] += c * comb(k, j)
        return Polynomial(out)

    def forward_difference(self) -> "Polynomial":
        """Return ``p(x + 1) - p(x)``; drops the degree by one exactly."""
        return self.compose_shift() - self

    def dilate(self, factor) -> "Polynomial":
        """Return ``p(factor * x)``: coefficient ``c_k -> c_k * factor**k``."""
        out, power = [], 1
        for c in self.coefficients:
            out.append(c * power)
            power = power * factor
        return Polynomial(out)


def monomial(k: int, coefficient=1) -> Polynomial:
    """The polynomial ``coefficient * x**k``."""
    if k < 0:
        raise ValueError("degree must be non-negative")
    return Polynomial([0] * k + [coefficient])


def hermite_coefficient(k: int, i: int) -> int:
    """Integer weight ``k! / (i! (k-2i)! 2**i)`` (number of i-pairings of k)."""
    num = 1
    for t in range(k, k - 2 * i, -1):
        num *= t
    # num = k! / (k-2i)!; divide by i! 2^i exactly
    den = 1
    for t in range(1, i + 1):
        den *= 2 * t
    return num // den


def hermite_he(k: int) -> Polynomial:
    """Rodrigues-form Hermite polynomial; ``He_1(x) = -x`` in this convention."""
    if k < 0:
        raise ValueError("degree must be non-negative")
    coeffs = [0] * (k + 1)
    for i in range(k // 2 + 1):
        sign = -1 if (k - i) % 2 else 1
        coeffs[k - 2 * i] = sign * hermite_coefficient(k, i)
    return Polynomial([prec.real(c) for c in coeffs])


def hermite_ne(k: int) -> Polynomial:
    """Negative-variance Hermite companion; all coefficients positive."""
    if k < 0:
        raise ValueError("degree must be non-negative")
    coeffs = [0] * (k + 1)
    for i in range(k // 2 + 1):
        coeffs[k - 2 * i] = hermite_coefficient(k, i)
    return Polynomial([prec.real(c) for c in coeffs])


def hermite_ne_moment_form(k: int) -> Polynomial:
    """``Ne_k`` assembled from binomials and continuous Gaussian moments.

    Coincides coefficient-for-coefficient with :func:`hermite_ne`; kept as
    an independent construction for verification.
    """
    coeffs = [0] * (k + 1)
    for i in range(k // 2 + 1):
        coeffs[k - 2 * i] = comb(k, 2 * i) * double_factorial(2 * i)
    return Polynomial([prec.real(c) for c in coeffs])


def discrete_he(k: int, moments) -> Polynomial:
    """Grid Hermite analogue: ``sum_i (-1)^i binom(k,2i) M_{2i} x^(k-2i)``.

    Only even grid moments appear; the leading coefficient is ``M_0``.
    """
    table = _as_moment_lookup(moments)
    table.require(k)
    coeffs = [prec.real(0)] * (k + 1)
    for i in range(k // 2 + 1):
        sign = -1 if i % 2 else 1
        coeffs[k - 2 * i] = sign * comb(k, 2 * i) * table[2 * i]
    return Polynomial(coeffs)


def discrete_ne(k: int, moments) -> Polynomial:
    """Convolution-moment polynomial ``q_k(x) = sum_m binom(k,m) M_{k-m} x^m``.

    For symmetric kernels the odd moments are exact zeros, so this equals
    the even-moment form :func:`discrete_ne_even_form` term for term.  For
    non-symmetric kernels the two differ and this full form is the one that
    satisfies the shifted-moment identities; compare with the even form to
    surface the discrepancy.
    """
    table = _as_moment_lookup(moments)
    table.require(k)
    coeffs = [comb(k, m) * table[k - m] for m in range(k + 1)]
    return Polynomial(coeffs)


def discrete_ne_even_form(k: int, moments) -> Polynomial:
    """Even-moment variant ``sum_i binom(k,2i) M_{2i} x^(k-2i)``."""
    table = _as_moment_lookup(moments)
    table.require(k)
    coeffs = [prec.real(0)] * (k + 1)
    for i in range(k // 2 + 1):
        coeffs[k - 2 * i] = comb(k, 2 * i) * table[2 * i]
    return Polynomial(coeffs)


def coefficient_distance(p: Polynomial, q: Polynomial):
    """Largest absolute coefficient difference between two polynomials."""
    n = max(len(p.coefficients), len(q.coefficients))
    if n == 0:
        return 0.0
    return max(abs(p.coefficient(i) - q.coefficient(i)) for i in range(n))
