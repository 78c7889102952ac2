"""Scattering amplitudes for the family with a continuum (``gpt``).

On the hyperbolic half line the potential is reflectionless in the usual 1D
sense; the scattering data is a single unimodular amplitude ``s(k')`` with
``k' = sqrt(E - A**2)`` the channel momentum above the threshold ``A**2``.
The four potentials of interest share one modulus and differ by rational
phase factors:

- ``s_plus  = ((A + i k') / (A - i k')) * s_minus``
- ``s_pursey = s_minus``          (level deletion without a scattering trace)
- ``s_am    = ((A + i k') / (A - i k'))**2 * s_minus``

``s_minus`` itself is a ratio of gamma functions times a rational function of
``k'``; it is evaluated through a complex log-gamma (Lanczos approximation)
so conjugate-pair cancellations keep ``|s| = 1`` to machine precision.

Generic 1D partner relations for reflection/transmission pairs with distinct
asymptotic superpotential values ``W(-inf)``, ``W(+inf)`` are also provided;
they apply to any asymptotically flat pair, with momenta
``k = sqrt(E - W(-inf)**2)`` and ``k' = sqrt(E - W(+inf)**2)``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .models import GPT, ModelSpec

#: Scattering amplitudes are plain Python complex numbers.
ComplexValue = complex

_LG_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _lanczos(z: complex) -> complex:
    """Lanczos sum for ``Re z >= 0.5``."""
    zz = z - 1.0
    t = zz + 7.5
    s = _LG_COEF[0]
    for i in range(1, len(_LG_COEF)):
        s += _LG_COEF[i] / (zz + i)
    return (0.5 * math.log(2.0 * math.pi)
            + (zz + 0.5) * cmath.log(t) - t + cmath.log(s))


def log_gamma_complex(z: complex) -> complex:
    """Principal-branch ``log Gamma(z)``; raises at the nonpositive-integer poles."""
    z = complex(z)
    if z.real >= 0.5:
        return _lanczos(z)
    if z.imag == 0.0 and z.real == round(z.real):
        raise ValueError(f"log-gamma pole at z = {z.real}")
    if z.imag < 0.0:
        return log_gamma_complex(z.conjugate()).conjugate()
    # Reflection with a log-sin kept continuous in the upper half plane.
    logsin = (cmath.log(0.5j) - 1j * math.pi * z
              + cmath.log(1.0 - cmath.exp(2j * math.pi * z)))
    return math.log(math.pi) - logsin - _lanczos(1.0 - z)


def _require_gpt(model: ModelSpec):
    if model.family != GPT:
        raise ValueError("scattering amplitudes exist only for the gpt family")


def s_minus(model: ModelSpec, kprime: float) -> ComplexValue:
    """Half-line amplitude of ``V^-`` at channel momentum ``kprime > 0``."""
    _require_gpt(model)
    if not kprime > 0.0:
        raise ValueError("channel momentum must be positive")
    A, B, m = model.A, model.B, model.m
    ik = 1j * kprime
    log_ratio = (log_gamma_complex(2.0 * ik) - log_gamma_complex(-2.0 * ik)
                 + log_gamma_complex(-A - ik) - log_gamma_complex(-A + ik)
                 + log_gamma_complex(B - ik + 0.5) - log_gamma_complex(B + ik + 0.5))
    rational = ((B ** 2 - (ik - 0.5) ** 2 + (B - ik + 0.5) * (1.0 - m))
                / (B ** 2 - (ik + 0.5) ** 2 + (B + ik + 0.5) * (1.0 - m)))
    return cmath.exp(-4.0 * ik * math.log(2.0) + log_ratio) * rational


def _phase_factor(model: ModelSpec, kprime: float) -> ComplexValue:
    ik = 1j * kprime
    return (model.A + ik) / (model.A - ik)


def s_plus(model: ModelSpec, kprime: float) -> ComplexValue:
    """Amplitude of the SUSY partner ``V^+``."""
    return _phase_factor(model, kprime) * s_minus(model, kprime)


def s_pursey(model: ModelSpec, kprime: float) -> ComplexValue:
    """Amplitude of the pursey potential: identical to ``s_minus``."""
    return s_minus(model, kprime)


def s_am(model: ModelSpec, kprime: float) -> ComplexValue:
    """Amplitude of the abraham-moses potential."""
    return _phase_factor(model, kprime) ** 2 * s_minus(model, kprime)


@dataclass(frozen=True)
class AmplitudeSet:
    """The four related amplitudes at one channel momentum."""

    kprime: float
    s_minus: ComplexValue
    s_plus: ComplexValue
    s_pursey: ComplexValue
    s_am: ComplexValue


def amplitude_set(model: ModelSpec, kprime: float) -> AmplitudeSet:
    """Evaluate all four amplitudes, sharing one ``s_minus`` evaluation."""
    base = s_minus(model, kprime)
    f = _phase_factor(model, kprime)
    return AmplitudeSet(kprime=kprime, s_minus=base, s_plus=f * base,
                        s_pursey=base, s_am=f * f * base)


# ---------------------------------------------------------------------------
# generic 1D reflection/transmission relations
# ---------------------------------------------------------------------------

def channel_momenta(energy: float, w_minus_inf: float,
                    w_plus_inf: float) -> tuple[float, float]:
    """Left/right momenta ``(k, k')`` above both thresholds; else raises."""
    if not energy > max(w_minus_inf ** 2, w_plus_inf ** 2):
        raise ValueError(
            "evanescent channel: energy must exceed both asymptotic thresholds")
    return (math.sqrt(energy - w_minus_inf ** 2),
            math.sqrt(energy - w_plus_inf ** 2))


def partner_rt(r_plus: ComplexValue, t_plus: ComplexValue, energy: float,
               w_minus_inf: float, w_plus_inf: float) -> tuple[ComplexValue, ComplexValue]:
    """``(r, t)`` of ``V^-`` from ``(r, t)`` of ``V^+``."""
    k, kp = channel_momenta(energy, w_minus_inf, w_plus_inf)
    r_minus = (w_minus_inf + 1j * k) / (w_minus_inf - 1j * k) * r_plus
    t_minus = (w_plus_inf - 1j * kp) / (w_minus_inf - 1j * k) * t_plus
    return r_minus, t_minus


def pursey_rt(r_minus: ComplexValue, t_minus: ComplexValue, energy: float,
              w_minus_inf: float, w_plus_inf: float) -> tuple[ComplexValue, ComplexValue]:
    """``(r, t)`` of the pursey potential from those of ``V^-``."""
    k, _ = channel_momenta(energy, w_minus_inf, w_plus_inf)
    f = (w_minus_inf - 1j * k) / (w_minus_inf + 1j * k)
    return f ** 2 * r_minus, -f * t_minus


def am_rt(r_minus: ComplexValue, t_minus: ComplexValue, energy: float,
          w_minus_inf: float, w_plus_inf: float) -> tuple[ComplexValue, ComplexValue]:
    """``(r, t)`` of the abraham-moses potential from those of ``V^-``."""
    _, kp = channel_momenta(energy, w_minus_inf, w_plus_inf)
    g = (w_plus_inf + 1j * kp) / (w_plus_inf - 1j * kp)
    return r_minus, -g * t_minus
