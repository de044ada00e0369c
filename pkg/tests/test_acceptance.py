"""Acceptance gate: ten end-to-end criteria, one test each.

Every test prints a single PASS/FAIL line so the suite doubles as a
checklist.  Three criteria are known to fail for mathematical reasons
(documented in the failure messages and in the README's "known numerical
limits" section); they are asserted at their stated tolerances anyway
rather than weakened:

* criterion 1 - the gap between grid moments and double factorials is
  not uniformly tiny; it grows like ``2 |He_k(2 pi)| exp(-2 pi^2)``.
* criterion 9 - 32 reciprocal coefficients floor the reconstruction
  residual near 6.8e-6 because the coefficients decay like exp(-|z|/2).
* criterion 10 - the degree-10 collocation matrix has singular-value
  ratio ~2.3e-13, below the demanded 1e-12.
"""

import math
from math import comb

import mpmath
import numpy as np
import pytest

import cki
from cki import precision as prec
from cki.kernel import MomentTable
from cki.poly import Polynomial, hermite_coefficient


def _report(number: int, failures: list, detail: str = "") -> None:
    status = "PASS" if not failures else "FAIL"
    tail = detail if not failures else "; ".join(failures[:4])
    print(f"ACCEPTANCE {number}: {status} - {tail}")
    assert not failures, f"criterion {number}: " + "; ".join(failures)


@pytest.fixture(scope="module")
def gaussian():
    return cki.gaussian()


def test_criterion_01_moment_certification(gaussian):
    """Moments at tol 1e-12: even entries vs (k-1)!!, odd exact zeros."""
    failures = []
    for k in range(13):
        value, tail = cki.discrete_moment(gaussian, k, 1e-12)
        if k % 2 == 1:
            if value != 0.0:
                failures.append(f"odd moment k={k} is {value!r}, not exactly 0")
        else:
            gap = abs(float(value) - cki.double_factorial(k))
            if gap > 1e-7:
                predicted = 2 * abs(float(cki.hermite_he(k)(2 * math.pi))) \
                    * math.exp(-2 * math.pi ** 2)
                failures.append(
                    f"|M_{k} - {cki.double_factorial(k)}| = {gap:.3e} > 1e-7 "
                    f"(true transform-series gap 2|He_{k}(2pi)|e^(-2pi^2) "
                    f"= {predicted:.3e}; the gap grows like (2pi)^k)"
                )
    m0 = float(cki.discrete_moment(gaussian, 0, 1e-12).value)
    if not 4e-9 < m0 - 1 < 7e-9:
        failures.append(f"M_0 - 1 = {m0 - 1:.3e} outside (4e-9, 7e-9)")
    _report(1, failures, "even moments near double factorials, odd exact zeros")


def test_criterion_02_integer_interpolation(gaussian):
    """Extended precision: |I[p_k](l) - l**k| <= 1e-9 max(1, |l|**k)."""
    failures = []
    with prec.working_precision(prec.EXTENDED):
        moments = MomentTable.build(gaussian, 10, 1e-12)
        coeffs = cki.build_coefficients_triangular(moments, 10)
        for k in range(11):
            interp = cki.interpolate_monomial(coeffs, k, tol=1e-12)
            for ell in range(-5, 6):
                got = cki.evaluate(interp, prec.real(ell))
                err = abs(float(got.value - prec.real(ell) ** k))
                bound = 1e-9 * max(1.0, abs(float(ell)) ** k)
                if err > bound:
                    failures.append(f"k={k} l={ell}: err {err:.3e} > {bound:.3e}")
    _report(2, failures, "k <= 10, l in [-5, 5], radius at tol 1e-12")


def test_criterion_03_triangular_identity(gaussian):
    """Coefficient residuals of the moment/Pascal identity, k <= 10."""
    failures = []
    moments = MomentTable.build(gaussian, 10, 1e-12)
    coeffs = cki.build_coefficients_triangular(moments, 10)
    scale = max(float(m) for m in moments.values)
    for k in range(11):
        residual = cki.monomial(k, 1.0)
        for i in range(k + 1):
            residual = residual - comb(k, i) * moments[k - i] * coeffs.polynomial(i)
        worst = max((abs(float(c)) for c in residual.coefficients), default=0.0)
        if worst > 1e-12 * scale:
            failures.append(f"k={k}: residual {worst:.3e} > {1e-12 * scale:.3e}")
    _report(3, failures, f"residuals below 1e-12 * max moment ({scale:.4g})")


def test_criterion_04_shifted_moment_identity(gaussian):
    """Both sides within 1e-10 for k <= 8, l in [-4, 4]."""
    failures = []
    moments = MomentTable.build(gaussian, 8, 1e-12)
    for k in range(9):
        for ell in range(-4, 5):
            lhs, rhs, _ = cki.verify_poly_convolution(moments, k, ell)
            gap = abs(float(lhs - rhs))
            if gap > 1e-10:
                failures.append(f"k={k} l={ell}: gap {gap:.3e}")
    _report(4, failures, "k <= 8, l in [-4, 4], within 1e-10")


def test_criterion_05_recursion_identities(gaussian):
    """Shifted-moment and error recursions within 1e-8 at 25 points."""
    failures = []
    moments = MomentTable.build(gaussian, 8, 1e-12)
    coeffs = cki.build_coefficients_triangular(moments, 6)
    xs = [-3 + 6 * i / 24 for i in range(25)]
    for k in range(7):
        for x in xs:
            sides = cki.verify_interp_recursion(coeffs, k, x)
            gap = abs(float(sides.lhs - sides.rhs))
            if gap > 1e-8:
                failures.append(f"shifted-moment k={k} x={x}: {gap:.3e}")
            sides = cki.verify_error_recursion(coeffs, k, x)
            gap = abs(float(sides.lhs - sides.rhs))
            if gap > 1e-8:
                failures.append(f"error-recursion k={k} x={x}: {gap:.3e}")
    _report(5, failures, "k <= 6 at 25 points in [-3, 3], within 1e-8")


def test_criterion_06_umbral_and_convolution(gaussian):
    """Umbral identities exact to 1e-12 (k <= 20); quadrature to 1e-9."""
    failures = []
    with prec.working_precision(prec.EXTENDED):
        for k in range(21):
            he_sum = Polynomial()
            ne_sum = Polynomial()
            for i in range(k // 2 + 1):
                w = hermite_coefficient(k, i)
                he_sum = he_sum + w * cki.hermite_he(k - 2 * i)
                ne_sum = ne_sum + ((-1) ** i * w) * cki.hermite_ne(k - 2 * i)
            sign = 1 if k % 2 == 0 else -1
            d1 = float(cki.coefficient_distance(he_sum, cki.monomial(k, prec.real(sign))))
            d2 = float(cki.coefficient_distance(ne_sum, cki.monomial(k, prec.real(1))))
            if max(d1, d2) > 1e-12:
                failures.append(f"umbral k={k}: distance {max(d1, d2):.3e}")
        # quadrature form of the monomial-recovery identity
        for k in range(11):
            he = cki.hermite_he(k)
            for x in (-2.0, -1.0, 0.0, 0.5, 3.0):
                xm = prec.real(x)
                value = mpmath.quad(
                    lambda y: he(y) * mpmath.exp(-(y - xm) ** 2 / 2)
                    / mpmath.sqrt(2 * mpmath.pi),
                    [xm - 12, xm, xm + 12],
                )
                gap = abs(float(value - (-xm) ** k))
                if gap > 1e-9:
                    failures.append(f"quadrature k={k} x={x}: {gap:.3e}")
    _report(6, failures, "umbral exact (k <= 20); quadrature within 1e-9 (k <= 10)")


def test_criterion_07_route_equivalence(gaussian):
    """Four routes agree to 1e-7 on |j| <= 5 for degrees 0..6."""
    failures = []
    window = list(range(-15, 16))
    with prec.working_precision(prec.EXTENDED):
        moments = MomentTable.build(gaussian, 8, 1e-30)
        triangular = cki.build_coefficients_triangular(moments, 6)
        q_he = cki.build_coefficients_q(moments, 6, base="grid")
        q_ne = cki.build_coefficients_q(moments, 6, base="continuous")
        symbol = cki.periodize(gaussian, 512)
        recip = cki.reciprocal_coefficients(symbol, 120)
        section = cki.finite_section_coefficients(gaussian, 110, 6, window)
        worst_rank = 0.0
        for k in range(7):
            data = [prec.real(j) ** k for j in range(-100, 101)]
            conv = cki.spectral_interpolate(symbol, data, -100, reciprocal=recip)
            routes = {
                "triangular": cki.sequence_from_polynomial(
                    triangular.polynomial(k), window),
                "q-he": cki.sequence_from_polynomial(q_he.polynomial(k), window),
                "q-ne": cki.sequence_from_polynomial(q_ne.polynomial(k), window),
                "spectral": {j: conv.coefficient(j) for j in window},
                "toeplitz": section[k],
            }
            agreeing = ("triangular", "q-he", "spectral", "toeplitz")
            for a in range(len(agreeing)):
                for b in range(a + 1, len(agreeing)):
                    gap = max(
                        abs(float(routes[agreeing[a]][j] - routes[agreeing[b]][j]))
                        for j in range(-5, 6)
                    )
                    if gap > 1e-7:
                        failures.append(
                            f"k={k} {agreeing[a]}|{agreeing[b]}: {gap:.3e}"
                        )
            oracle_values = {j: section[k][j] for j in range(-5, 6)}
            report = cki.adjudicate(
                routes, oracle_values, gaussian,
                lambda ell, k=k: prec.real(ell) ** k, range(-4, 5),
            )
            triangular_row = report.by_route()["triangular"]
            worst_rank = max(worst_rank, triangular_row.max_interpolation_residual)
            if triangular_row.max_interpolation_residual > 1e-9:
                failures.append(
                    f"k={k}: triangular residual "
                    f"{triangular_row.max_interpolation_residual:.3e} > 1e-9"
                )
    _report(7, failures,
            f"triangular/q/spectral/section within 1e-7; worst triangular "
            f"residual {worst_rank:.2e}")


def test_criterion_08_grid_pipeline(gaussian):
    """Node reproduction within 1e-7 (1 + max |f_i|) across the grid set."""
    failures = []
    moments = MomentTable.build(gaussian, 12, 1e-12)
    coeffs = cki.build_coefficients_triangular(moments, 12)
    cases = {
        "one": lambda x: 1.0,
        "identity": lambda x: x,
        "square": lambda x: x * x,
        "sine": lambda x: math.sin(math.pi * x),
    }
    for n in (1, 2, 4, 8, 12):
        for name, f in cases.items():
            values = [f(i / n) for i in range(n + 1)]
            samples = cki.GridSamples(n, values)
            interp = cki.build_grid_interpolant(samples, coeffs)
            bound = 1e-7 * (1 + max(abs(v) for v in values))
            for i in range(n + 1):
                got = cki.evaluate_grid(interp, i / n)
                err = abs(float(got.value) - values[i])
                if err > bound:
                    failures.append(f"n={n} f={name} node {i}: {err:.3e}")
    _report(8, failures, "n in {1,2,4,8,12}, f in {1, x, x^2, sin(pi x)}")


def test_criterion_09_symbol_machinery(gaussian):
    """Wiener minimum, transform identity, reciprocal reconstruction."""
    failures = []
    symbol = cki.periodize(gaussian, 4096)
    wiener = cki.check_wiener(symbol)
    alternating = math.fsum(
        (-1) ** abs(j) * math.exp(-j * j / 2) / math.sqrt(2 * math.pi)
        for j in range(-20, 21)
    )
    if not wiener.holds:
        failures.append("Wiener condition reported as failing")
    if abs(float(wiener.min_modulus) - alternating) > 1e-10:
        failures.append(
            f"min modulus {float(wiener.min_modulus)!r} vs alternating sum "
            f"{alternating!r}"
        )
    worst = 0.0
    for i in range(64):
        lhs, rhs = cki.verify_poisson(gaussian, i / 64)
        worst = max(worst, abs(float(lhs - rhs)))
    if worst > 1e-12:
        failures.append(f"periodization identity deviation {worst:.3e} > 1e-12")
    recip = cki.reciprocal_coefficients(symbol, 32)
    if recip.reconstruction_residual > 1e-9:
        failures.append(
            f"reconstruction residual {recip.reconstruction_residual:.3e} > 1e-9 "
            f"at z_max=32 (coefficients decay like exp(-|z|/2) from the "
            f"symbol's complex zero at 1/2 + i/(4 pi); 32 terms floor the "
            f"residual near 7e-6, z_max ~ 50 would be needed for 1e-9)"
        )
    _report(9, failures, f"min modulus matches alternating sum; transform "
            f"identity within 1e-12 at 64 points")


def test_criterion_10_uniqueness_conditioning(gaussian):
    """Collocation matrices nonsingular: sigma_min > 1e-12 sigma_max, N <= 10."""
    failures = []
    for n in range(1, 11):
        matrix = np.array(cki.monomial_collocation_matrix(gaussian, n), dtype=float)
        singular_values = np.linalg.svd(matrix, compute_uv=False)
        ratio = float(singular_values[-1] / singular_values[0])
        if ratio <= 1e-12:
            failures.append(
                f"N={n}: sigma_min/sigma_max = {ratio:.3e} <= 1e-12 "
                f"(the degree-10 collocation matrix genuinely has a "
                f"conditioning floor near 2.3e-13)"
            )
    _report(10, failures, "sigma ratios above 1e-12 through degree 10")
