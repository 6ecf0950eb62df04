"""Torus matrix coefficients of the oscillator representation and the H kernel.

The closed form evaluated here follows from the Schroedinger-model action
(w(a) f)(x) = prod a_i^{1/2} f(a x) paired against monomials times the
Gaussian: each coordinate contributes a Gaussian moment times an explicit
power of a_i.  Only absolute values matter downstream, so no cover cocycle
is modelled.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from scipy.integrate import quad

from .vectors import DomainError


def gaussian_moment(m: int) -> float:
    """Integral of u^m exp(-u^2/2) over the real line.

    Zero for odd m; (m-1)!! * sqrt(2*pi) for even m (exact double factorial,
    floated only at the end).
    """
    if m < 0:
        raise DomainError("moment order must be nonnegative")
    if m % 2 == 1:
        return 0.0
    df = 1
    for k in range(m - 1, 0, -2):
        df *= k
    return df * math.sqrt(2.0 * math.pi)


def _check_torus(a: Sequence[float]) -> tuple[float, ...]:
    a = tuple(float(x) for x in a)
    if not a or any(x <= 0 for x in a):
        raise DomainError("torus entries must be strictly positive")
    return a


def _check_index(alpha: Sequence[int], dim: int, name: str) -> tuple[int, ...]:
    alpha = tuple(int(x) for x in alpha)
    if len(alpha) != dim:
        raise DomainError(f"{name} must have length {dim}")
    if any(x < 0 for x in alpha):
        raise DomainError(f"{name} entries must be nonnegative")
    return alpha


def oscillator_coefficient(
    a: Sequence[float], alpha: Sequence[int], beta: Sequence[int]
) -> float:
    """(w(a) x^alpha mu, x^beta mu) on the diagonal torus, coordinatewise

        c_{alpha_i, beta_i} * a_i^{alpha_i + 1/2} * (1 + a_i^2)^{-(alpha_i+beta_i+1)/2}

    with c the Gaussian moment of order alpha_i + beta_i.
    """
    a = _check_torus(a)
    alpha = _check_index(alpha, len(a), "alpha")
    beta = _check_index(beta, len(a), "beta")
    out = 1.0
    for ai, al, be in zip(a, alpha, beta):
        c = gaussian_moment(al + be)
        if c == 0.0:
            return 0.0
        out *= c * ai ** (al + 0.5) * (1.0 + ai * ai) ** (-(al + be + 1) / 2.0)
    return out


def oscillator_coefficient_quadrature(
    a: Sequence[float], alpha: Sequence[int], beta: Sequence[int]
) -> float:
    """Direct numerical integration of the coefficient, coordinate by coordinate.

    The integrand factorizes, so each coordinate is a one-dimensional adaptive
    quadrature of a_i^{1/2} (a_i x)^{alpha_i} x^{beta_i} exp(-(a_i^2+1) x^2 / 2),
    truncated at 12 standard deviations (the Gaussian tail beyond that is far
    below the 1e-8 verification threshold).
    """
    a = _check_torus(a)
    alpha = _check_index(alpha, len(a), "alpha")
    beta = _check_index(beta, len(a), "beta")
    out = 1.0
    for ai, al, be in zip(a, alpha, beta):
        sigma = 1.0 / math.sqrt(ai * ai + 1.0)
        cut = 12.0 * sigma

        def integrand(x: float, ai=ai, al=al, be=be) -> float:
            return (
                math.sqrt(ai)
                * (ai * x) ** al
                * x**be
                * math.exp(-0.5 * (ai * ai + 1.0) * x * x)
            )

        val, _ = quad(integrand, -cut, cut, epsabs=1e-14, epsrel=1e-12, limit=200)
        out *= val
    return out


def oscillator_bound(a: Sequence[float]) -> float:
    """prod (a_i + 1/a_i)^{-1/2}, the uniform torus decay envelope."""
    a = _check_torus(a)
    out = 1.0
    for ai in a:
        out *= (ai + 1.0 / ai) ** -0.5
    return out


def h_kernel(a: Sequence[float], b: Sequence[float]) -> float:
    """H(a, b) = prod_{i<=p} prod_{j<=n} (b_i^2 + b_i^-2 + a_j^2 + a_j^-2)^{-1/2}."""
    a = _check_torus(a)
    b = _check_torus(b)
    out = 1.0
    for bi in b:
        tb = bi * bi + 1.0 / (bi * bi)
        for aj in a:
            out *= (tb + aj * aj + 1.0 / (aj * aj)) ** -0.5
    return out


def dual_pair_bound(a: Sequence[float], b: Sequence[float], p: int, q: int) -> float:
    """Matrix-coefficient envelope for the dual pair (O(p,q), Sp(2n)).

    H(a, b) with the extra prod_j (a_j + 1/a_j)^{-(q-p)/2} factor carried by
    the q - p extra rows of the orthogonal form.
    """
    if not (0 <= p <= q):
        raise DomainError("need 0 <= p <= q")
    if len(b) != p:
        raise DomainError(f"b must have length p={p}")
    a = _check_torus(a)
    out = h_kernel(a, b) if p > 0 else 1.0
    ex = Fraction(q - p, 2)
    for aj in a:
        out *= (aj + 1.0 / aj) ** -float(ex)
    return out
