"""Coefficient polynomials for cardinal interpolation of monomials.

For a kernel psi with grid moments M_k, the interpolant of the monomial
``x**k`` by integer shifts of psi is

    I[p_k](x) = sum_j a_k(j) * psi(x - j),

where the coefficient polynomials ``a_k`` (degree k, leading coefficient
``1/M_0``) solve the Pascal/moment triangular system

    x**k = sum_{i=0..k} binom(k, i) * M_{k-i} * a_i(x).

Two constructions are provided and must agree:

* :func:`build_coefficients_triangular` - forward substitution on the
  triangular system; the authoritative route for any positive kernel.
* :func:`build_coefficients_q` - the closed-form recursion for symmetric
  kernels, driven by the grid Hermite polynomials.  Shifted-sum images of
  the grid Hermite analogue contain only every fourth power, so the
  recursion needs one correction term per multiple of four.

Evaluation is by truncated sums centred at ``round(x)`` with certified
tail + roundoff budgets.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import NamedTuple

from . import precision as prec
from .errors import SingularSectionError, UnsupportedRouteError
from .kernel import Kernel, MomentTable, truncation_radius
from .poly import Polynomial, discrete_he, discrete_ne, hermite_ne, monomial

#: extra decades demanded from the tail certificate below the evaluation
#: tolerance, so the certified budget, not the target, is the bottleneck.
TAIL_SAFETY = 1e-3

_E = 2.718281828459045236


@dataclass(frozen=True)
class CardinalCoefficients:
    """The family a_0..a_N of coefficient polynomials for one kernel."""

    kernel: Kernel
    moments: MomentTable
    max_degree: int
    polynomials: tuple
    method: str

    def polynomial(self, k: int) -> Polynomial:
        if not 0 <= k <= self.max_degree:
            raise ValueError(
                f"coefficients cover degrees 0..{self.max_degree}, got {k}"
            )
        return self.polynomials[k]

    def combined(self, target: Polynomial) -> Polynomial:
        """Coefficient polynomial for an arbitrary target, by linearity."""
        if target.degree > self.max_degree:
            raise ValueError(
                f"target degree {target.degree} exceeds table degree "
                f"{self.max_degree}"
            )
        out = Polynomial()
        for k, c in enumerate(target.coefficients):
            out = out + c * self.polynomials[k]
        return out


def build_coefficients_triangular(moments: MomentTable, max_degree: int) -> CardinalCoefficients:
    """Solve the triangular system by forward substitution.

    ``a_k = (x**k - sum_{i<k} binom(k,i) M_{k-i} a_i) / M_0``; every a_k
    has degree exactly k and leading coefficient 1/M_0.
    """
    moments.require(max_degree)
    m0 = moments[0]
    if not m0 > 0:
        raise SingularSectionError("M_0 must be positive for a positive kernel")
    polys = []
    for k in range(max_degree + 1):
        acc = monomial(k, prec.real(1))
        for i in range(k):
            weight = comb(k, i) * moments[k - i]
            acc = acc - weight * polys[i]
        polys.append((1 / m0) * acc)
    return CardinalCoefficients(
        kernel=moments.kernel, moments=moments, max_degree=max_degree,
        polynomials=tuple(polys), method="triangular",
    )


def correction_weight(moments: MomentTable, k: int, i: int):
    """Weight of the degree-(k-4i) correction in the closed-form recursion.

    ``sum_{m=0..2i} (-1)^m binom(k,2m) binom(k-2m,4i-2m) M_{2m} M_{4i-2m}``.
    Vanishes identically when grid moments are replaced by continuous ones.
    """
    total = prec.real(0)
    for m in range(2 * i + 1):
        if 4 * i - 2 * m > k - 2 * m:
            continue
        sign = -1 if m % 2 else 1
        total += (
            sign
            * comb(k, 2 * m)
            * comb(k - 2 * m, 4 * i - 2 * m)
            * moments[2 * m]
            * moments[4 * i - 2 * m]
        )
    return total


def build_coefficients_q(moments: MomentTable, max_degree: int,
                         base: str = "grid") -> CardinalCoefficients:
    """Closed-form recursion for symmetric kernels.

    With ``base="grid"`` the recursion seed is the grid Hermite analogue
    (alternating signs, grid moments); this route reproduces the
    triangular coefficients to roundoff:

        Q_k = (He~_k - sum_{i=1..k//4} w_{k,i} Q_{k-4i}) / M_0**2.

    ``base="continuous"`` seeds with the continuous companion ``Ne_k`` and
    leaves the corrections unscaled; it is kept purely for comparison
    reports (it does not interpolate once the degree reaches 2 - adjudicate
    it against the brute-force section solver to see the defect).
    """
    if not moments.kernel.symmetric:
        raise UnsupportedRouteError(
            "closed-form recursion requires a symmetric kernel; "
            "use the triangular route"
        )
    if base not in ("grid", "continuous"):
        raise ValueError(f"unknown recursion base {base!r}")
    moments.require(max_degree)
    m0 = moments[0]
    m0sq = m0 * m0
    polys = []
    for k in range(max_degree + 1):
        if base == "grid":
            acc = discrete_he(k, moments)
            for i in range(1, k // 4 + 1):
                acc = acc - correction_weight(moments, k, i) * polys[k - 4 * i]
            polys.append((1 / m0sq) * acc)
        else:
            acc = (1 / m0sq) * hermite_ne(k)
            for i in range(1, k // 4 + 1):
                acc = acc - correction_weight(moments, k, i) * polys[k - 4 * i]
            polys.append(acc)
    return CardinalCoefficients(
        kernel=moments.kernel, moments=moments, max_degree=max_degree,
        polynomials=tuple(polys), method="q-he" if base == "grid" else "q-ne",
    )


class Evaluation(NamedTuple):
    """A computed value together with its certified error budget."""

    value: object
    budget: object

    def __float__(self):
        return float(self.value)


@dataclass(frozen=True)
class CardinalInterpolant:
    """A target polynomial paired with coefficient polynomials for evaluation."""

    coefficients: CardinalCoefficients
    target: Polynomial
    tol: float = 1e-12

    def coefficient_polynomial(self) -> Polynomial:
        return self.coefficients.combined(self.target)


def _shifted_tail_budget(kernel: Kernel, coeffs: Polynomial, centre: int, radius: int):
    """Certified bound on the dropped tail of a centred evaluation sum.

    Bounds ``sum_{|m|>radius} |a(centre+m)| psi(x - centre - m)`` for any x
    within 1/2 of ``centre`` using ``|centre+m|**k <= 2**k (|centre|**k +
    |m|**k)`` and the kernel's unit-spaced tail certificates at radius-1/2.
    """
    if coeffs.is_zero():
        return prec.real(0)
    r = radius - 0.5
    b0 = kernel.grid_tail_bound(0, r)
    total = prec.real(0)
    c_abs = abs(prec.real(centre))
    for k, c in enumerate(coeffs.coefficients):
        if c == 0:
            continue
        bk = kernel.grid_tail_bound(k, r)
        total += abs(c) * (2 ** k) * (c_abs ** k * b0 + _E * bk)
    return total


def _evaluation_radius(kernel: Kernel, degree: int, tol) -> int:
    degree = max(degree, 0)
    radius = truncation_radius(kernel, degree, tol * TAIL_SAFETY)
    return max(radius, degree + 1, 3)


def evaluate(interp: CardinalInterpolant, x) -> Evaluation:
    """Evaluate the interpolant at x by a certified truncated sum.

    The window is centred at ``round(x)`` with radius taken from the tail
    certificate at ``tol * TAIL_SAFETY``; the returned budget is the
    certified dropped tail plus an n-term roundoff estimate.
    """
    apoly = interp.coefficient_polynomial()
    if apoly.is_zero():
        return Evaluation(prec.real(0), prec.real(0))
    kernel = interp.coefficients.kernel
    x = prec.real(x)
    centre = prec.nearest_integer(x)
    radius = _evaluation_radius(kernel, apoly.degree, interp.tol)
    terms = [
        apoly(prec.real(j)) * kernel.evaluate(x - j)
        for j in range(centre - radius, centre + radius + 1)
    ]
    value = prec.accumulate(terms)
    tail = _shifted_tail_budget(kernel, apoly, centre, radius)
    roundoff = len(terms) * prec.eps() * float(sum(abs(t) for t in terms))
    return Evaluation(value, tail + roundoff)


def interpolate_monomial(coefficients: CardinalCoefficients, k: int,
                         tol: float = 1e-12) -> CardinalInterpolant:
    """Interpolant of ``x**k``, the building block of every identity check."""
    return CardinalInterpolant(coefficients, monomial(k, prec.real(1)), tol)


class IdentitySides(NamedTuple):
    lhs: object
    rhs: object
    budget: object


def verify_poly_convolution(moments: MomentTable, k: int, ell: int,
                            tol: float = 1e-12) -> IdentitySides:
    """Both sides of the shifted-moment identity.

    lhs: truncated ``sum_j j**k psi(j - ell)``;
    rhs: ``sum_i binom(k,i) M_{k-i} ell**i`` - the convolution-moment
    polynomial at ell.  The caller asserts agreement within the budget.
    """
    moments.require(k)
    kernel = moments.kernel
    scale = max(1.0, float(abs(ell))) ** k
    radius = _evaluation_radius(kernel, k, tol / (2.0 ** k * scale))
    terms = [
        prec.real(j) ** k * kernel.evaluate(prec.real(j - ell))
        for j in range(ell - radius, ell + radius + 1)
    ]
    lhs = prec.accumulate(terms)
    rhs = discrete_ne(k, moments)(prec.real(ell))
    # dropped tail: sum_i C(k,i) |ell|^i * tail_{k-i}(radius)
    tail = prec.real(0)
    for i in range(k + 1):
        tail += comb(k, i) * abs(prec.real(ell)) ** i * kernel.grid_tail_bound(
            max(k - i, 0), radius
        )
    roundoff = len(terms) * prec.eps() * float(sum(abs(t) for t in terms))
    return IdentitySides(lhs, rhs, tail + roundoff)


def centred_moment_sum(kernel: Kernel, k: int, x, tol: float = 1e-12) -> Evaluation:
    """Truncated ``sum_j (j-x)**k psi(j-x)`` with certified budget."""
    x = prec.real(x)
    centre = prec.nearest_integer(x)
    radius = _evaluation_radius(kernel, k, tol)
    terms = [
        (prec.real(j) - x) ** k * kernel.evaluate(prec.real(j) - x)
        for j in range(centre - radius, centre + radius + 1)
    ]
    value = prec.accumulate(terms)
    tail = kernel.grid_tail_bound(k, radius - 0.5)
    roundoff = len(terms) * prec.eps() * float(sum(abs(t) for t in terms))
    return Evaluation(value, tail + roundoff)


class ErrorFunctions(NamedTuple):
    """Interpolation error E_k(x) and moment defect, with budgets."""

    interpolation_error: object
    interpolation_budget: object
    moment_defect: object
    defect_budget: object


def error_functions(coefficients: CardinalCoefficients, k: int, x,
                    tol: float = 1e-12) -> ErrorFunctions:
    """The error pair at x.

    ``E_k(x) = I[p_k](x) - x**k`` and the moment defect
    ``sum_j (j-x)**k psi(j-x) - M_k``; the two satisfy the binomial error
    recursion verified by :func:`verify_error_recursion`.
    """
    coefficients.moments.require(k)
    x = prec.real(x)
    ev = evaluate(interpolate_monomial(coefficients, k, tol), x)
    e_value = ev.value - x ** k
    centred = centred_moment_sum(coefficients.kernel, k, x, tol)
    defect = centred.value - coefficients.moments[k]
    defect_budget = centred.budget + coefficients.moments.tails[k]
    return ErrorFunctions(e_value, ev.budget, defect, defect_budget)


def verify_interp_recursion(coefficients: CardinalCoefficients, k: int, x,
                            tol: float = 1e-12) -> IdentitySides:
    """Both sides of the shifted-moment/interpolant identity.

    lhs: ``sum_j (j-x)**k psi(j-x)``;
    rhs: ``sum_i binom(k,i) q_i(-x) I[p_{k-i}](x)`` with q_i the
    convolution-moment polynomials.
    """
    moments = coefficients.moments
    moments.require(k)
    x = prec.real(x)
    lhs = centred_moment_sum(coefficients.kernel, k, x, tol)
    rhs = prec.real(0)
    rhs_budget = prec.real(0)
    for i in range(k + 1):
        weight = comb(k, i) * discrete_ne(i, moments)(-x)
        ev = evaluate(interpolate_monomial(coefficients, k - i, tol), x)
        rhs += weight * ev.value
        rhs_budget += abs(weight) * ev.budget
    return IdentitySides(lhs.value, rhs, lhs.budget + rhs_budget)


def verify_error_recursion(coefficients: CardinalCoefficients, k: int, x,
                           tol: float = 1e-12) -> IdentitySides:
    """Both sides of the error recursion.

    lhs: the moment defect at x; rhs: ``sum_i binom(k,i) q_i(-x)
    E_{k-i}(x)``.
    """
    moments = coefficients.moments
    moments.require(k)
    x = prec.real(x)
    pair = error_functions(coefficients, k, x, tol)
    lhs = pair.moment_defect
    budget = pair.defect_budget
    rhs = prec.real(0)
    for i in range(k + 1):
        weight = comb(k, i) * discrete_ne(i, moments)(-x)
        sub = error_functions(coefficients, k - i, x, tol)
        rhs += weight * sub.interpolation_error
        budget += abs(weight) * sub.interpolation_budget
    return IdentitySides(lhs, rhs, budget)


def monomial_collocation_matrix(kernel: Kernel, max_degree: int,
                                tol: float = 1e-14) -> list:
    """Matrix of ``sum_j j**i psi(j - ell)`` for ell, i in 0..max_degree.

    This is the map from monomial coefficients of a polynomial r to the
    sequence ``ell -> sum_j r(j) psi(j - ell)``; its nonsingularity is the
    uniqueness property of polynomial cardinal interpolation.  Entries are
    computed by direct certified summation.
    """
    rows = []
    for ell in range(max_degree + 1):
        row = []
        for i in range(max_degree + 1):
            radius = _evaluation_radius(kernel, i, tol)
            terms = [
                prec.real(j) ** i * kernel.evaluate(prec.real(j - ell))
                for j in range(ell - radius, ell + radius + 1)
            ]
            row.append(prec.accumulate(terms))
        rows.append(row)
    return rows
