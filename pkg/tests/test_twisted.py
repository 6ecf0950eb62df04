import math
from fractions import Fraction as F

import numpy as np
import pytest
from scipy.integrate import quad

from quantind import (
    DomainError,
    ExponentVector,
    RaySpec,
    check_gr2,
    converges,
    evaluate,
    fit_decay,
)


def ev(*entries):
    return ExponentVector(entries)


def test_converges_scalar():
    assert converges(ev(F(-1, 2)), 1, 1)
    assert not converges(ev(0), 1, 1)
    assert not converges(ev(F(1, 4)), 1, 1)


def test_converges_multivariate():
    # prefix sums 1, -3 against margins j*(n-1) = 2, 4
    assert converges(ev(1, -4), 2, 3)
    assert not converges(ev(2, -4), 2, 3)
    assert converges(ev(-3, -3), 2, 1)


def test_rayspec_validation():
    with pytest.raises(DomainError):
        RaySpec([0.5, 1.0], [1.0, 2.0])  # increasing direction
    with pytest.raises(DomainError):
        RaySpec([0.0, 0.0], [1.0, 2.0])  # zero direction
    with pytest.raises(DomainError):
        RaySpec([1.0], [2.0, 1.0])  # t not increasing
    ray = RaySpec([1.0, 0.0], [0.0, 1.0])
    assert ray.point(1.0) == (math.e, 1.0)


def test_pinned_scalar_value():
    # independent oracle: direct quadrature in the b variable
    oracle, _ = quad(lambda b: (1 + b * b) ** -0.5 * b**-2.0, 1.0, np.inf)
    assert oracle == pytest.approx(math.sqrt(2.0) - 1.0, rel=1e-10)
    est = evaluate([1.0], ev(-2))
    assert est.value == pytest.approx(math.sqrt(2.0) - 1.0, rel=1e-9)
    assert est.abs_error < 1e-8


def test_evaluate_rejects_divergent():
    with pytest.raises(DomainError):
        evaluate([2.0], ev(0))
    with pytest.raises(DomainError):
        evaluate([0.5], ev(-2))


def test_truncation_soundness():
    est = evaluate([1.5], ev(-2))
    # re-evaluating with a larger domain cannot move the value past abs_error;
    # probe by integrating the b-space integrand far beyond est.truncation_T
    far, far_err = quad(
        lambda b: (1.5**2 + b * b) ** -0.5 * b**-2.0, 1.0, np.inf
    )
    assert abs(far - est.value) <= est.abs_error + far_err + 1e-12


def test_monotone_in_a():
    vals = [evaluate([a], ev(F(-3, 2))).value for a in (1.0, 2.0, 4.0, 8.0)]
    assert all(x > y for x, y in zip(vals, vals[1:]))
    vals2 = [
        evaluate([a, 1.0], ev(-1, -2)).value for a in (1.0, 2.0, 4.0)
    ]
    assert all(x > y for x, y in zip(vals2, vals2[1:]))


def test_single_variable_scaling_identity():
    # L(a, lambda) = a^lambda * int_{b >= 1/a} (1+b^2)^{-1/2} b^lambda db
    lam = -1.5
    for a in (2.0, 5.0, 20.0):
        lhs = evaluate([a], ev(F(-3, 2))).value
        rhs, _ = quad(
            lambda b: (1 + b * b) ** -0.5 * b**lam, 1.0 / a, np.inf
        )
        rhs *= a**lam
        assert lhs == pytest.approx(rhs, rel=1e-6)


def test_scalar_boundedness_windows():
    # a^{1/2} * L(a) bounded above and below for lam = -1/2
    vals = [
        math.sqrt(a) * evaluate([a], ev(F(-1, 2))).value
        for a in np.exp(np.linspace(2.0, 6.0, 9))
    ]
    assert max(vals) / min(vals) < 3.0
    # a * L(a) bounded for lam = -3/2
    vals = [
        a * evaluate([a], ev(F(-3, 2))).value
        for a in np.exp(np.linspace(2.0, 6.0, 9))
    ]
    assert max(vals) / min(vals) < 3.0


def test_fit_decay_scalar():
    ray = RaySpec([1.0], np.linspace(1.0, 6.0, 11))
    assert fit_decay(ray, ev(F(-1, 2))) == pytest.approx(-0.5, abs=0.05)
    assert fit_decay(ray, ev(F(-5, 2))) == pytest.approx(-1.0, abs=0.05)


def test_fit_decay_lsq_available():
    ray = RaySpec([1.0], np.linspace(1.0, 6.0, 11))
    slope = fit_decay(ray, ev(F(-1, 2)), method="lsq")
    assert -0.6 < slope < -0.3
    with pytest.raises(DomainError):
        fit_decay(ray, ev(F(-1, 2)), method="nope")


def test_fit_decay_diagonal_upper_bound():
    # mu = (2,1) so the diagonal decay must be at least (mu_1+mu_2)(1-delta)
    ray = RaySpec([1.0, 1.0], np.linspace(1.0, 4.0, 7))
    slope = fit_decay(ray, ev(-1, -2), method="lsq")
    assert slope <= -(2 + 1) * (1 - 0.05)


def test_check_gr2_basic():
    rays = [RaySpec([1.0, 0.0], np.linspace(1.0, 6.0, 11))]
    report = check_gr2(ev(-1, -2), 2, 2, rays, delta=0.05)
    assert report.mu_bound == ev(-2, -1)
    assert report.ok
    # weaker delta must also pass
    assert check_gr2(ev(-1, -2), 2, 2, rays, delta=0.5).ok


def test_check_gr2_small_case():
    rays = [RaySpec([1.0, 0.0], np.linspace(1.0, 4.0, 5))]
    report = check_gr2(ev(F(-1, 2)), 1, 2, rays, delta=0.05)
    assert report.mu_bound == ev(F(-1, 2), 0)
    assert report.ok


def test_check_gr2_rejects_bad_delta():
    rays = [RaySpec([1.0], [1.0, 2.0, 3.0])]
    with pytest.raises(DomainError):
        check_gr2(ev(-1), 1, 1, rays, delta=0.0)
