"""Classical and exceptional (X_m) Laguerre / Jacobi polynomial evaluators.

Degrees stay small (<= ~15) so everything uses the three-term recurrence in
the degree, which is analytic in the parameters; this matters because the
rational potential terms evaluate Jacobi polynomials at negative non-integer
parameter values where gamma-function normalizations would misbehave.

The convention ``n = -1 -> zero polynomial`` is used throughout: it makes the
bilinear composition identities for the X_m polynomials valid down to total
degree ``deg = m`` (ground states) without special-casing.

All evaluators accept scalars or numpy arrays for the abscissa and are safe on
complex inputs (used by complex-step differentiation in the test suite).
"""
from __future__ import annotations

import numpy as np


def laguerre(n: int, alpha: float, x):
    """Generalized Laguerre polynomial ``L_n^(alpha)(x)``; zero for n < 0."""
    if n < 0:
        return np.zeros_like(np.asarray(x)) if np.ndim(x) else 0.0 * np.asarray(x)
    p_prev = np.ones_like(np.asarray(x))
    if n == 0:
        return p_prev
    p = 1.0 + alpha - np.asarray(x)
    for k in range(1, n):
        p, p_prev = ((2.0 * k + 1.0 + alpha - x) * p - (k + alpha) * p_prev) / (k + 1.0), p
    return p


def _jacobi_series(n: int, alpha: float, beta: float, z):
    """Explicit binomial double sum for ``P_n^(alpha,beta)(z)``.

    Well defined for every real parameter pair; used as the fallback where
    the three-term recurrence degenerates.
    """
    z = np.asarray(z)
    total = 0.0 * z
    for s in range(n + 1):
        left = 1.0
        for i in range(1, n - s + 1):
            left *= (alpha + s + i) / i
        right = 1.0
        for i in range(1, s + 1):
            right *= (beta + n - s + i) / i
        total = total + left * right * ((z - 1.0) / 2.0) ** s * ((z + 1.0) / 2.0) ** (n - s)
    return total


def jacobi(n: int, alpha: float, beta: float, z):
    """Jacobi polynomial ``P_n^(alpha,beta)(z)``; zero for n < 0.

    Uses the three-term recurrence in the degree; at the isolated parameter
    combinations where a recurrence prefactor ``2k(k+alpha+beta)
    (2k+alpha+beta-2)`` vanishes (``alpha + beta`` a suitable negative
    integer) it falls back to the explicit binomial sum, which is analytic in
    the parameters.  The model parameter ranges never hit the fallback.
    """
    if n < 0:
        return np.zeros_like(np.asarray(z)) if np.ndim(z) else 0.0 * np.asarray(z)
    p_prev = np.ones_like(np.asarray(z))
    if n == 0:
        return p_prev
    p = (alpha + 1.0) + (alpha + beta + 2.0) * (np.asarray(z) - 1.0) / 2.0
    s = alpha + beta
    for k in range(2, n + 1):
        c0 = 2.0 * k * (k + s) * (2.0 * k + s - 2.0)
        if c0 == 0.0:
            return _jacobi_series(n, alpha, beta, z)
        c1 = (2.0 * k + s - 1.0) * ((2.0 * k + s) * (2.0 * k + s - 2.0) * z + alpha ** 2 - beta ** 2)
        c2 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + s)
        p, p_prev = (c1 * p - c2 * p_prev) / c0, p
    return p


def dlaguerre(n: int, alpha: float, x):
    """d/dx of ``L_n^(alpha)(x)``."""
    if n <= 0:
        return np.zeros_like(np.asarray(x)) if np.ndim(x) else 0.0 * np.asarray(x)
    return -laguerre(n - 1, alpha + 1.0, x)


def djacobi(n: int, alpha: float, beta: float, z):
    """d/dz of ``P_n^(alpha,beta)(z)``."""
    if n <= 0:
        return np.zeros_like(np.asarray(z)) if np.ndim(z) else 0.0 * np.asarray(z)
    return 0.5 * (n + alpha + beta + 1.0) * jacobi(n - 1, alpha + 1.0, beta + 1.0, z)


def _check_xm(m: int, deg: int):
    if m < 0:
        raise ValueError("rational index m must be nonnegative")
    if deg < m:
        raise ValueError(f"total degree {deg} below rational index {m}")


def xm_laguerre(m: int, alpha: float, deg: int, z):
    """Exceptional Laguerre polynomial of total degree ``deg = n + m``.

    Evaluated through its bilinear expansion in classical Laguerre
    polynomials; ``m = 0`` degenerates to ``L_deg^(alpha)(z)`` via the
    two-term contiguous identity.
    """
    _check_xm(m, deg)
    n = deg - m
    return (laguerre(m, alpha, -np.asarray(z)) * laguerre(n, alpha - 1.0, z)
            + laguerre(m, alpha - 1.0, -np.asarray(z)) * laguerre(n - 1, alpha, z))


def dxm_laguerre(m: int, alpha: float, deg: int, z):
    """d/dz of :func:`xm_laguerre`."""
    _check_xm(m, deg)
    n = deg - m
    zm = -np.asarray(z)
    return (laguerre(m - 1, alpha + 1.0, zm) * laguerre(n, alpha - 1.0, z)
            - laguerre(m, alpha, zm) * laguerre(n - 1, alpha, z)
            + laguerre(m - 1, alpha, zm) * laguerre(n - 1, alpha, z)
            - laguerre(m, alpha - 1.0, zm) * laguerre(n - 2, alpha + 1.0, z))


def xm_jacobi(m: int, alpha: float, beta: float, deg: int, z):
    """Exceptional Jacobi polynomial of total degree ``deg = n + m``."""
    _check_xm(m, deg)
    n = deg - m
    if 1.0 + alpha + n == 0.0:
        raise ValueError("vanishing denominator 1 + alpha + n in X_m Jacobi expansion")
    c1 = (1.0 + alpha + beta + n) / (1.0 + alpha + n)
    c2 = (1.0 + alpha - m) / (1.0 + alpha + n)
    t1 = c1 * ((np.asarray(z) - 1.0) / 2.0) * jacobi(m, -alpha - 1.0, beta - 1.0, z) \
        * jacobi(n - 1, alpha + 2.0, beta, z)
    t2 = c2 * jacobi(m, -2.0 - alpha, beta, z) * jacobi(n, alpha + 1.0, beta - 1.0, z)
    return (-1.0) ** m * (t1 + t2)


def dxm_jacobi(m: int, alpha: float, beta: float, deg: int, z):
    """d/dz of :func:`xm_jacobi`."""
    _check_xm(m, deg)
    n = deg - m
    if 1.0 + alpha + n == 0.0:
        raise ValueError("vanishing denominator 1 + alpha + n in X_m Jacobi expansion")
    c1 = (1.0 + alpha + beta + n) / (1.0 + alpha + n)
    c2 = (1.0 + alpha - m) / (1.0 + alpha + n)
    pm1 = jacobi(m, -alpha - 1.0, beta - 1.0, z)
    qn1 = jacobi(n - 1, alpha + 2.0, beta, z)
    t1 = c1 * (0.5 * pm1 * qn1
               + ((np.asarray(z) - 1.0) / 2.0) * djacobi(m, -alpha - 1.0, beta - 1.0, z) * qn1
               + ((np.asarray(z) - 1.0) / 2.0) * pm1 * djacobi(n - 1, alpha + 2.0, beta, z))
    t2 = c2 * (djacobi(m, -2.0 - alpha, beta, z) * jacobi(n, alpha + 1.0, beta - 1.0, z)
               + jacobi(m, -2.0 - alpha, beta, z) * djacobi(n, alpha + 1.0, beta - 1.0, z))
    return (-1.0) ** m * (t1 + t2)
