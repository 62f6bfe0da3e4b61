from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wittingrays.numerics import (
    I_SQRT3,
    OMEGA,
    OMEGA2,
    ONE,
    ZERO,
    ArithmeticDomainError,
    Eisenstein,
    HalfInteger,
    NonUnitLeading,
    ProjectiveRay,
    QuadraticCoord,
    WittingScalar,
    ZeroRayError,
    canonicalize,
    complex_inner_float,
    eis_inner,
    is_orthogonal,
    omega_power,
    proj_equal,
    ray_sort_key,
    realified_inner,
)

small = st.integers(-50, 50)
eis = st.builds(Eisenstein, small, small)
nonzero_eis = eis.filter(bool)
units = st.sampled_from([omega_power(k) * s for k in range(3) for s in (1, -1)])
witting = st.builds(WittingScalar, eis, eis)
vec4 = st.lists(eis, min_size=4, max_size=4)
wvec4 = st.lists(witting, min_size=4, max_size=4)
finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
cplx = st.builds(complex, finite, finite)


def close(x: complex, y: complex, tol: float = 1e-9) -> bool:
    return abs(x - y) <= tol * max(1.0, abs(x), abs(y))


@given(eis, eis, eis)
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + ZERO == x and x * ONE == x
    assert x - x == ZERO


@given(eis, eis)
def test_multiplication_matches_complex(x, y):
    assert close(complex(x * y), complex(x) * complex(y))


@given(eis, eis)
def test_conjugate_and_norm_are_multiplicative(x, y):
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x * y).norm() == x.norm() * y.norm()
    assert close(x.norm(), abs(complex(x)) ** 2)
    assert x * x.conjugate() == Eisenstein(x.norm(), 0)


@given(eis, nonzero_eis)
def test_exact_division_round_trip(x, y):
    assert (x * y) / y == x
    assert y.divides(x * y)


def test_division_outside_ring_raises():
    with pytest.raises(ArithmeticDomainError):
        ONE / Eisenstein(2, 0)
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_omega_identities():
    assert OMEGA**3 == ONE
    assert ONE + OMEGA + OMEGA2 == ZERO
    assert I_SQRT3 * I_SQRT3 == Eisenstein(-3, 0)
    assert close(complex(I_SQRT3), 1j * math.sqrt(3))
    assert [u for u in (omega_power(k) for k in range(6))] == [ONE, OMEGA, OMEGA2] * 2


@given(units)
def test_units_have_inverses(u):
    assert u.is_unit()
    assert u * u.inverse() == ONE


@given(witting, witting)
def test_witting_scalar_is_a_ring_homomorphism(x, y):
    assert (x * y).to_eisenstein() == x.to_eisenstein() * y.to_eisenstein()
    assert (x + y).to_eisenstein() == x.to_eisenstein() + y.to_eisenstein()
    assert x.conjugate().to_eisenstein() == x.to_eisenstein().conjugate()
    assert close(complex(x), complex(x.to_eisenstein()))


@given(witting)
def test_realify_matches_float(x):
    re, im = x.realify()
    z = complex(x)
    assert close(float(re), z.real) and close(float(im), z.imag)


@given(st.integers(-1000, 1000), st.integers(-1000, 1000))
def test_half_integer_arithmetic(m, n):
    a, b = HalfInteger(m), HalfInteger(n)
    assert (a + b).as_fraction() == Fraction(m + n, 2)
    assert (a - b).as_fraction() == Fraction(m - n, 2)
    assert HalfInteger.from_value(Fraction(m, 2)) == a
    assert float(-a) == -m / 2


def test_half_integer_rejects_thirds():
    with pytest.raises(ArithmeticDomainError):
        HalfInteger.from_value(Fraction(1, 3))


@given(small, small, small, small)
def test_quadratic_coord_product(p1, q1, p2, q2):
    a, b = QuadraticCoord(p1, q1), QuadraticCoord(p2, q2)
    exact = float(a) * float(b)
    try:
        prod = a * b
    except ArithmeticDomainError:
        rational, surd = a.product_parts(b)
        assert (2 * rational).denominator != 1 or (2 * surd).denominator != 1
        assert close(float(rational) + float(surd) * math.sqrt(3), exact)
    else:
        assert close(float(prod), exact, 1e-9)
    assert close(float(a + b), float(a) + float(b))


@given(vec4, vec4)
def test_inner_product_conjugate_symmetry(u, v):
    assert eis_inner(u, v) == eis_inner(v, u).conjugate()
    assert eis_inner(u, u).b == 0 and eis_inner(u, u).a >= 0


@given(vec4, vec4)
def test_inner_product_matches_float(u, v):
    exact = complex(eis_inner(u, v))
    fl = complex_inner_float([complex(c) for c in u], [complex(c) for c in v])
    assert close(exact, fl)


@given(wvec4, wvec4)
def test_realified_inner_matches_float_dot(u, v):
    ue = [c.to_eisenstein() for c in u]
    ve = [c.to_eisenstein() for c in v]
    ur = np.array([float(x) for c in u for x in c.realify()])
    vr = np.array([float(x) for c in v for x in c.realify()])
    assert close(float(realified_inner(ue, ve)), float(ur @ vr))


def test_inner_dimension_mismatch():
    with pytest.raises(ValueError):
        eis_inner([ONE], [ONE, ONE])
    with pytest.raises(ValueError):
        complex_inner_float([1j], [float("nan")])


def unit_rays():
    comps = st.one_of(st.just(ZERO), units)
    return st.lists(comps, min_size=4, max_size=4).filter(any).map(lambda v: ProjectiveRay(tuple(v)))


@given(unit_rays())
def test_exact_canonicalization_idempotent(r):
    c = canonicalize(r)
    assert canonicalize(c) == c
    lead = next(x for x in c.components if x)
    assert lead == ONE


@given(unit_rays(), units)
def test_exact_canonical_form_is_scale_invariant(r, u):
    scaled = ProjectiveRay(tuple(c * u for c in r.components))
    assert canonicalize(scaled) == canonicalize(r)
    assert proj_equal(scaled, r)


def test_non_unit_leading_raises():
    with pytest.raises(NonUnitLeading):
        canonicalize(ProjectiveRay((Eisenstein(2, 0), ONE)))


float_rays = st.lists(cplx, min_size=4, max_size=4).filter(
    lambda v: max(abs(c) for c in v) > 1e-3
).map(lambda v: ProjectiveRay(tuple(v)))


@given(float_rays)
def test_float_canonicalization_idempotent(r):
    c = canonicalize(r)
    c2 = canonicalize(c)
    assert all(close(a, b) for a, b in zip(c.components, c2.components))
    assert proj_equal(c, r)


@given(float_rays, st.floats(0.1, 10), st.floats(-math.pi, math.pi))
def test_float_projective_equality_under_scaling(r, mag, angle):
    s = mag * cmath.exp(1j * angle)
    assert proj_equal(ProjectiveRay(tuple(c * s for c in r.components)), r)


def test_projective_inequality():
    a = ProjectiveRay.from_complex([1, 0, 0, 0])
    b = ProjectiveRay.from_complex([1, 1e-3, 0, 0])
    assert not proj_equal(a, b)


def test_mixed_or_zero_rays_rejected():
    with pytest.raises(ZeroRayError):
        ProjectiveRay((ZERO, ZERO))
    with pytest.raises(TypeError):
        ProjectiveRay((ONE, 1j))
    with pytest.raises(ValueError):
        ProjectiveRay((1 + 0j, float("inf")))


@given(unit_rays(), unit_rays())
def test_sort_key_is_consistent_with_equality(a, b):
    a, b = canonicalize(a), canonicalize(b)
    assert (ray_sort_key(a) == ray_sort_key(b)) == (a == b)


def test_orthogonality_exact_and_float():
    e1 = ProjectiveRay.exact([1, 0, 0, 0])
    e2 = ProjectiveRay.exact([0, 1, 0, 0])
    assert is_orthogonal(e1, e2) and not is_orthogonal(e1, e1)
    f = ProjectiveRay.from_complex([1, 1j, 0, 0])
    g = ProjectiveRay.from_complex([1, -1j, 0, 0])
    assert is_orthogonal(f, g)
