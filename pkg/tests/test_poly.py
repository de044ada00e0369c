import math

import pytest
from hypothesis import given, settings, strategies as st

import cki
from cki.poly import Polynomial, hermite_coefficient

X = cki.monomial(1)


def poly(*ascending):
    return Polynomial(ascending)


# ----------------------------------------------------------- ring algebra


def test_compose_shift_square():
    assert poly(0, 0, 1).compose_shift() == poly(1, 2, 1)


def test_add_cancels_to_zero_polynomial():
    total = poly(0, 1) + poly(0, -1)
    assert total.is_zero()
    assert total.degree == -1


def test_multiply_difference_of_squares():
    assert poly(1, 1) * poly(-1, 1) == poly(-1, 0, 1)


def test_scalar_scale():
    assert 3 * poly(1, 2) == poly(3, 6)
    assert poly(1, 2) * 0.5 == poly(0.5, 1)


def test_forward_difference_examples():
    assert poly(0, 0, 1).forward_difference() == poly(1, 2)
    assert poly(5).forward_difference().is_zero()
    assert poly(0, 0, 0, 1).forward_difference() == poly(1, 3, 3)


def test_evaluation_is_horner_on_given_coefficients():
    p = poly(1.0, -2.0, 0.5)
    x = 0.73
    assert p(x) == (0.5 * x + -2.0) * x + 1.0


def test_dilate():
    assert poly(1, 1, 1).dilate(2) == poly(1, 2, 4)


def test_polynomials_are_immutable():
    p = poly(1, 2)
    with pytest.raises(AttributeError):
        p.coefficients = (3,)
    with pytest.raises(TypeError):
        p.coefficients[0] = 3


small_polys = st.lists(
    st.integers(min_value=-9, max_value=9), min_size=1, max_size=6
).map(Polynomial)


@settings(max_examples=60, deadline=None)
@given(small_polys)
def test_forward_difference_annihilates_after_degree_plus_one(p):
    q = p
    for _ in range(p.degree + 1):
        q = q.forward_difference()
    assert q.is_zero()


@settings(max_examples=60, deadline=None)
@given(small_polys, st.integers(min_value=-4, max_value=4))
def test_compose_shift_agrees_with_shifted_evaluation(p, x):
    assert p.compose_shift()(x) == p(x + 1)


@settings(max_examples=60, deadline=None)
@given(small_polys, small_polys)
def test_product_degree_and_values(p, q):
    r = p * q
    if p.is_zero() or q.is_zero():
        assert r.is_zero()
    else:
        assert r.degree == p.degree + q.degree
    assert r(3) == p(3) * q(3)


# ------------------------------------------------------- Hermite families


def test_hermite_he_first_values():
    assert cki.hermite_he(0) == poly(1.0)
    assert cki.hermite_he(1) == poly(0.0, -1.0)
    assert cki.hermite_he(2) == poly(-1.0, 0.0, 1.0)


def test_hermite_he_satisfies_rodrigues_recurrence():
    # d^{k+1} e = (d/dx)(He_k e) => He_{k+1} = He_k' - x He_k
    for k in range(10):
        he_k = cki.hermite_he(k)
        derivative = Polynomial(
            [i * c for i, c in enumerate(he_k.coefficients)][1:]
        )
        assert cki.hermite_he(k + 1) == derivative - X * he_k


def test_hermite_ne_first_values():
    assert cki.hermite_ne(1) == poly(0.0, 1.0)
    assert cki.hermite_ne(2) == poly(1.0, 0.0, 1.0)
    assert cki.hermite_ne(4) == poly(3.0, 0.0, 6.0, 0.0, 1.0)


@pytest.mark.parametrize("k", range(0, 21))
def test_hermite_ne_two_constructions_agree_exactly(k):
    assert cki.hermite_ne(k) == cki.hermite_ne_moment_form(k)


def test_hermite_coefficient_is_pairing_count():
    # k! / (i! (k-2i)! 2^i) computed independently from factorials
    for k in range(0, 21):
        for i in range(k // 2 + 1):
            expected = (
                math.factorial(k)
                // (math.factorial(i) * math.factorial(k - 2 * i) * 2 ** i)
            )
            assert hermite_coefficient(k, i) == expected


@pytest.mark.parametrize("k", range(0, 21))
def test_umbral_composition_exact(k):
    """Monomial recovery from the two families, in exact integers.

    With the Rodrigues sign convention used here the alternating-weight
    sum over Ne gives ``x**k`` and the plain-weight sum over He gives
    ``(-x)**k``.
    """
    he_sum = Polynomial()
    ne_sum = Polynomial()
    for i in range(k // 2 + 1):
        w = hermite_coefficient(k, i)
        he_sum = he_sum + w * cki.hermite_he(k - 2 * i)
        ne_sum = ne_sum + ((-1) ** i * w) * cki.hermite_ne(k - 2 * i)
    assert ne_sum == cki.monomial(k, 1.0)
    sign = 1.0 if k % 2 == 0 else -1.0
    assert he_sum == cki.monomial(k, sign)


# ---------------------------------------------------- discrete analogues


@pytest.fixture(scope="module")
def moments():
    return cki.MomentTable.build(cki.gaussian(), 12, 1e-12)


def test_discrete_he_examples(moments):
    m0, m2, m4 = moments[0], moments[2], moments[4]
    assert cki.discrete_he(0, moments) == poly(m0)
    assert cki.discrete_he(2, moments) == poly(-m2, 0.0, m0)
    assert cki.discrete_he(4, moments) == poly(m4, 0.0, -6 * m2, 0.0, m0)
    # the leading coefficient is M_0, within 6e-9 of 1
    assert cki.coefficient_distance(
        cki.discrete_he(2, moments), poly(-1.0, 0.0, 1.0)
    ) < 1e-6


def test_discrete_ne_examples(moments):
    m0, m1, m2 = moments[0], moments[1], moments[2]
    assert cki.discrete_ne(0, moments) == poly(m0)
    assert cki.discrete_ne(1, moments) == poly(m1, m0)  # m1 == 0 here
    assert cki.discrete_ne(1, moments) == poly(0.0, m0)
    assert cki.discrete_ne(2, moments) == poly(m2, 0.0, m0)


@pytest.mark.parametrize("k", range(0, 13))
def test_discrete_ne_forms_coincide_for_symmetric_kernels(k, moments):
    assert cki.discrete_ne(k, moments) == cki.discrete_ne_even_form(k, moments)


def test_discrete_ne_forms_differ_for_asymmetric_moments():
    fake = [1.0, 0.25, 1.0, 0.5, 3.0]   # nonzero odd entries
    full = cki.discrete_ne(3, fake)
    even = cki.discrete_ne_even_form(3, fake)
    assert full != even
    assert full.coefficient(0) == fake[3]
    assert even.coefficient(0) == 0.0


@pytest.mark.parametrize("k", range(0, 13))
def test_continuous_moment_substitution_recovers_hermite(k):
    continuous = [float(cki.continuous_moment(i)) for i in range(k + 1)]
    ne = cki.discrete_ne(k, continuous)
    assert ne == cki.hermite_ne(k)
    he = cki.discrete_he(k, continuous)
    sign = 1.0 if k % 2 == 0 else -1.0
    assert he == sign * cki.hermite_he(k)


def test_moment_table_too_short_raises(moments):
    with pytest.raises(ValueError):
        cki.discrete_he(13, moments)
    with pytest.raises(ValueError):
        cki.discrete_ne(13, moments)


# -------------------------------------------------- quadrature identities


def _gaussian_density(y):
    return math.exp(-y * y / 2) / math.sqrt(2 * math.pi)


SAMPLE_POINTS = (-2.0, -1.0, 0.0, 0.5, 3.0)


@pytest.mark.filterwarnings("ignore::UserWarning")
@pytest.mark.filterwarnings("ignore:The occurrence of roundoff error")
@pytest.mark.parametrize("k", range(0, 11))
def test_monomial_convolution_matches_ne(k):
    """integral y^k psi(y - x) dy == Ne_k(x), by adaptive quadrature."""
    from scipy.integrate import quad

    for x in SAMPLE_POINTS:
        value, _ = quad(
            lambda y: y ** k * _gaussian_density(y - x), x - 12, x + 12,
            epsabs=1e-13, epsrel=1e-13, limit=200,
        )
        expected = float(cki.hermite_ne(k)(x))
        assert abs(value - expected) <= 1e-9 * max(1.0, abs(expected))


@pytest.mark.filterwarnings("ignore::UserWarning")
@pytest.mark.filterwarnings("ignore:The occurrence of roundoff error")
@pytest.mark.parametrize("k", range(0, 11))
def test_hermite_convolution_recovers_monomial(k):
    """integral He_k(y) psi(y - x) dy == (-x)^k under this sign convention."""
    from scipy.integrate import quad

    he = cki.hermite_he(k)
    for x in SAMPLE_POINTS:
        value, _ = quad(
            lambda y: float(he(y)) * _gaussian_density(y - x), x - 12, x + 12,
            epsabs=1e-13, epsrel=1e-13, limit=200,
        )
        expected = (-x) ** k
        assert abs(value - expected) <= 1e-9 * max(1.0, abs(x) ** k)
