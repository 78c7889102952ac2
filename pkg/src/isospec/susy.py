"""One-parameter families of strictly isospectral partner potentials.

Given a model's zero-energy ground state ``psi_0``, every admissible value of
a real parameter ``lambda`` produces a deformed potential

    V_hat = V^- + 4 W psi_0**2 / D + 2 psi_0**4 / D**2,

where ``D`` is a shifted cumulative norm of ``psi_0`` (see below) and ``W`` is
the superpotential.  For generic ``lambda`` the deformation keeps every level
of ``V^-`` including the zero-energy one; at the two boundary values the
lowest level detaches:

- ``lambda = 0`` ("pursey"): the zero-energy state disappears, all excited
  levels survive;
- ``lambda = -1`` ("abraham-moses"): same spectrum as pursey through a
  different potential;
- ``lambda -> +/-inf`` ("undeformed"): ``V_hat -> V^-`` exactly.

Values in the open interval ``(-1, 0)`` are rejected: there the denominator
``I + lambda`` passes through zero inside the domain and the deformed
potential develops a non-removable singularity.

Denominator branches
--------------------
With ``I(x)`` the cumulative integral of ``psi_0**2`` from the left edge and
``J(x)`` the tail integral to the right edge (``I + J = 1`` exactly in the
continuum), the denominator is evaluated on whichever branch keeps *relative*
accuracy:

- ``lambda > 0``:      ``D = I + lambda``
- ``lambda = 0``:      ``D = I``
- ``lambda = -1``:     ``D = -J``
- ``lambda < -1``:     ``D = (1 + lambda) - J``

Near the right edge ``1 - I`` computed in floating point bottoms out at
roundoff (~1e-16) while the true tail is astronomically smaller (e.g. ~1e-60
for a Gaussian-decaying ground state); accumulating ``J`` from the right edge
avoids that cancellation entirely.  Both integrals use wall-aware panels (see
``_norm_integrals``), which keeps the pursey and abraham-moses denominators
*relatively* accurate all the way into the walls where they vanish; should a
denominator still underflow to zero at a wall node, the rational correction
is evaluated as its limiting value zero there.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .models import (ModelSpec, asymptotic_w, eigenfunction_minus,
                     eigenfunction_minus_prime, energy, v_minus, v_plus, w,
                     w_prime)
from .numerics import (Grid, SampledFunction, l2_norm, make_grid,
                       wall_positions)

PURSEY = "pursey"
ABRAHAM_MOSES = "abraham-moses"
GENERIC = "generic"
UNDEFORMED = "undeformed"
PARAM_KINDS = (GENERIC, PURSEY, ABRAHAM_MOSES, UNDEFORMED)


def classify(value: float) -> str:
    """Deformation class of a parameter value; rejects ``(-1, 0)`` and NaN."""
    if math.isnan(value):
        raise ValueError("deformation parameter must not be NaN")
    if math.isinf(value):
        return UNDEFORMED
    if value == 0.0:
        return PURSEY
    if value == -1.0:
        return ABRAHAM_MOSES
    if -1.0 < value < 0.0:
        raise ValueError(
            f"deformation parameter {value} lies in (-1, 0); the deformation "
            "denominator would vanish inside the domain")
    return GENERIC


@dataclass(frozen=True)
class DeformationParam:
    """Validated deformation parameter with its class label."""

    value: float
    kind: str = ""

    def __post_init__(self):
        expected = classify(self.value)
        if self.kind == "":
            object.__setattr__(self, "kind", expected)
        elif self.kind != expected:
            raise ValueError(
                f"deformation parameter {self.value} is of kind {expected!r}, "
                f"not {self.kind!r}")


def parse_lambda(token: str) -> DeformationParam:
    """Parse one CLI token: a float literal or ``inf`` / ``-inf``."""
    text = token.strip().lower()
    if text in ("inf", "+inf"):
        return DeformationParam(math.inf)
    if text == "-inf":
        return DeformationParam(-math.inf)
    try:
        value = float(text)
    except ValueError:
        raise ValueError(f"cannot parse deformation parameter {token!r}") from None
    return DeformationParam(value)


@dataclass(frozen=True, eq=False)
class DeformedFamily:
    """Ground-state data of one model, sampled once and reused for all lambda."""

    base: ModelSpec
    grid: Grid
    psi0: np.ndarray
    w: np.ndarray
    wprime: np.ndarray
    cumulative: np.ndarray  # I(x), accumulated from the left edge
    tail: np.ndarray        # J(x), accumulated from the right edge


#: panels whose wall distance is below this many spacings get the power rule
_WALL_PANEL_SPAN = 100.0


def _power_panel(f_lo: float, f_hi: float, t_lo: float, t_hi: float):
    """Integral of the power law ``C t**p`` through two samples, and ``p``."""
    p = math.log(f_hi / f_lo) / math.log(t_hi / t_lo)
    return (f_hi * t_hi - f_lo * t_lo) / (p + 1.0), p


def _norm_integrals(model: ModelSpec, grid: Grid, f: np.ndarray):
    """Cumulative ``I`` and tail ``J`` of the density ``f = psi_0**2``.

    Trapezoid panels, except near clipped walls where ``f`` behaves like a
    steep power of the wall distance: there a locally power-law-exact panel
    rule is used (plain trapezoid overestimates the first panel by the factor
    ``(p + 1) / 2``, which poisons the pursey/abraham-moses denominators
    exactly where they vanish).  ``I`` also picks up the analytic head between
    the wall and the first node; on a truncated half line ``J`` picks up the
    asymptotic tail ``f(b) / (2 W(b)) * (1 - W'(b) / (2 W(b)**2))`` beyond
    the cutoff, so ``I + J`` approximates the full-line normalization, not
    the truncated one.
    """
    x = grid.nodes
    h = grid.h
    panels = 0.5 * (f[1:] + f[:-1]) * h
    # Logarithmic-mean panels are exact for exponential decay; with plain
    # trapezoid the relative panel error ~(2 W h)**2 / 12 in the decay region
    # enters the abraham-moses denominator and cannot be extrapolated away.
    pos = (f[1:] > 0.0) & (f[:-1] > 0.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        lr = np.log(np.divide(f[1:], f[:-1], out=np.ones_like(f[1:]), where=pos))
    steep = pos & np.isfinite(lr) & (np.abs(lr) > 1e-4)
    panels[steep] = (f[1:] - f[:-1])[steep] * h / lr[steep]
    left_wall, right_wall = wall_positions(grid.kind)
    head = 0.0
    t = x - left_wall
    stop = min(panels.size, int(np.searchsorted(t, _WALL_PANEL_SPAN * h)))
    for j in range(stop):
        if f[j] > 0.0 and f[j + 1] > 0.0 and f[j] != f[j + 1]:
            val, p = _power_panel(f[j], f[j + 1], t[j], t[j + 1])
            if math.isfinite(val) and p > -0.5:
                panels[j] = val
                if j == 0:
                    head = f[0] * t[0] / (p + 1.0)
    if right_wall is not None:
        s = right_wall - x
        start = int(np.searchsorted(-s, -_WALL_PANEL_SPAN * h))
        tail_head = 0.0
        for j in range(max(start - 1, 0), panels.size):
            if f[j] > 0.0 and f[j + 1] > 0.0 and f[j] != f[j + 1]:
                val, p = _power_panel(f[j + 1], f[j], s[j + 1], s[j])
                if math.isfinite(val) and p > -0.5:
                    panels[j] = val
                    if j == panels.size - 1:
                        tail_head = f[-1] * s[-1] / (p + 1.0)
    else:
        wb = float(w(model, np.array([x[-1]]))[0])
        wpb = float(w_prime(model, np.array([x[-1]]))[0])
        if wb > 0.0:
            tail_head = f[-1] / (2.0 * wb) * (1.0 - wpb / (2.0 * wb * wb))
            tail_head = max(tail_head, 0.0)
        else:
            tail_head = 0.0
    cum = np.empty(grid.n)
    cum[0] = head
    cum[1:] = head + np.cumsum(panels)
    tail = np.empty(grid.n)
    tail[-1] = tail_head
    tail[:-1] = tail_head + np.cumsum(panels[::-1])[::-1]
    return cum, tail


def build_family(model: ModelSpec, grid: Grid | None = None, *,
                 clip: float | None = None, cutoff: float | None = None,
                 n: int = 4001) -> DeformedFamily:
    """Sample ground state, superpotential, and norm integrals on one grid."""
    if grid is None:
        kwargs = {"n": n}
        if clip is not None:
            kwargs["clip"] = clip
        if cutoff is not None:
            kwargs["cutoff"] = cutoff
        grid = make_grid(model.grid_kind, **kwargs)
    psi0 = eigenfunction_minus(model, 0, grid.nodes)
    cum, tail = _norm_integrals(model, grid, psi0 ** 2)
    return DeformedFamily(
        base=model, grid=grid, psi0=psi0,
        w=w(model, grid.nodes), wprime=w_prime(model, grid.nodes),
        cumulative=cum, tail=tail)


def denominator(fam: DeformedFamily, param: DeformationParam) -> np.ndarray:
    """Branch-stable deformation denominator ``D`` on the family grid."""
    if param.kind == UNDEFORMED:
        raise ValueError("the undeformed limit has no finite denominator")
    if param.kind == PURSEY:
        return fam.cumulative.copy()
    if param.kind == ABRAHAM_MOSES:
        return -fam.tail
    if param.value > 0:
        return fam.cumulative + param.value
    return (1.0 + param.value) - fam.tail


def deformation_phi(fam: DeformedFamily, param: DeformationParam) -> np.ndarray:
    """Logarithmic-derivative shift ``phi = psi_0**2 / D``.

    ``W_hat = W + phi`` and ``V_hat = V^- + 4 W phi + 2 phi**2``.  Boundary
    nodes with ``D == 0`` evaluate to the limiting value zero.
    """
    if param.kind == UNDEFORMED:
        return np.zeros_like(fam.psi0)
    d = denominator(fam, param)
    p2 = fam.psi0 ** 2
    return np.divide(p2, d, out=np.zeros_like(p2), where=d != 0.0)


def deformed_potential(fam: DeformedFamily, param: DeformationParam) -> SampledFunction:
    """Strictly isospectral deformed potential ``V_hat(lambda)``."""
    base_v = v_minus(fam.base, fam.grid.nodes)
    if param.kind == UNDEFORMED:
        return SampledFunction(fam.grid, base_v)
    phi = deformation_phi(fam, param)
    return SampledFunction(fam.grid, base_v + 4.0 * fam.w * phi + 2.0 * phi ** 2)


def pursey_potential(fam: DeformedFamily) -> SampledFunction:
    """``V_hat`` at ``lambda = 0`` (lowest level deleted)."""
    return deformed_potential(fam, DeformationParam(0.0))


def am_potential(fam: DeformedFamily) -> SampledFunction:
    """``V_hat`` at ``lambda = -1`` (lowest level deleted)."""
    return deformed_potential(fam, DeformationParam(-1.0))


def deformed_ground_state(fam: DeformedFamily, param: DeformationParam) -> SampledFunction:
    """Zero-energy normalized bound state of ``V_hat``; generic lambda only.

    At the pursey and abraham-moses boundary values the zero-energy level is
    absent from the deformed spectrum, and this raises.
    """
    if param.kind == UNDEFORMED:
        return SampledFunction(fam.grid, fam.psi0)
    if param.kind != GENERIC:
        raise ValueError(
            f"the {param.kind} potential has no zero-energy bound state")
    d = denominator(fam, param)
    scale = math.sqrt(param.value * (1.0 + param.value))
    return SampledFunction(fam.grid, scale * fam.psi0 / d)


def deformed_excited_state(fam: DeformedFamily, param: DeformationParam,
                           n: int) -> SampledFunction:
    """Normalized bound state of ``V_hat`` at energy ``energy(base, n)``.

    ``n >= 1`` indexes the original tower; these levels survive every
    admissible deformation including pursey and abraham-moses.
    """
    if n < 1:
        raise ValueError("excited-state index must be >= 1; "
                         "use deformed_ground_state for the zero-energy level")
    psi = eigenfunction_minus(fam.base, n, fam.grid.nodes)
    if param.kind == UNDEFORMED:
        return SampledFunction(fam.grid, psi)
    dpsi = eigenfunction_minus_prime(fam.base, n, fam.grid.nodes)
    phi = deformation_phi(fam, param)
    raw = psi + (phi / energy(fam.base, n)) * (dpsi + fam.w * psi)
    out = SampledFunction(fam.grid, raw)
    return SampledFunction(fam.grid, raw / l2_norm(out))


@dataclass(frozen=True, eq=False)
class SuperpotentialEval:
    """Superpotential samples with the domain-edge limits."""

    w: np.ndarray
    wprime: np.ndarray
    w_minus_inf: float
    w_plus_inf: float


def superpotential_from_ground(fam: DeformedFamily,
                               param: DeformationParam) -> SuperpotentialEval:
    """``W_hat = -(ln psi_hat_0)'`` of the deformed family, analytically.

    ``W_hat = W + phi`` and ``W_hat' = W' - 2 W phi - phi**2`` (using
    ``psi_0' = -W psi_0`` and ``D' = psi_0**2``), so the partner identity
    ``W_hat**2 + W_hat' == W**2 + W' == V^+`` holds exactly node by node:
    the whole lambda family shares one SUSY partner.
    """
    phi = deformation_phi(fam, param)
    what = fam.w + phi
    whatp = fam.wprime - 2.0 * fam.w * phi - phi ** 2
    left, right = asymptotic_w(fam.base)
    if param.kind == PURSEY:
        left = math.inf  # wall strengthens: the shift dominates the left edge
    elif param.kind == ABRAHAM_MOSES:
        right = -right   # gpt: A -> -A; confining walls flip sign of infinity
    return SuperpotentialEval(w=what, wprime=whatp,
                              w_minus_inf=left, w_plus_inf=right)


def partner_potentials(fam: DeformedFamily,
                       param: DeformationParam) -> tuple[SampledFunction, SampledFunction]:
    """``(W_hat**2 - W_hat', W_hat**2 + W_hat')`` from the deformed superpotential.

    The first element reproduces :func:`deformed_potential`; the second is
    the lambda-independent shared partner, equal to ``V^+`` of the base model.
    """
    sup = superpotential_from_ground(fam, param)
    return (SampledFunction(fam.grid, sup.w ** 2 - sup.wprime),
            SampledFunction(fam.grid, sup.w ** 2 + sup.wprime))


def v_plus_shared(fam: DeformedFamily) -> SampledFunction:
    """``V^+`` of the base model on the family grid (shared partner)."""
    return SampledFunction(fam.grid, v_plus(fam.base, fam.grid.nodes))
