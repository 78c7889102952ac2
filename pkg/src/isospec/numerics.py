"""Grids, cumulative quadrature, and finite differences shared by all modules.

Everything here operates on uniform grids.  Singular domain endpoints are
clipped by a small positive amount and truncated infinities are replaced by a
finite cutoff; all bound states of the supported potentials vanish fast enough
at the endpoints for the clipped Dirichlet problem to converge to the true one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import pi

import numpy as np
from scipy.integrate import cumulative_simpson

HALF_LINE_RADIAL = "half-line-radial"
FINITE_INTERVAL = "finite-interval"
HALF_LINE_HYPERBOLIC = "half-line-hyperbolic"

GRID_KINDS = (HALF_LINE_RADIAL, FINITE_INTERVAL, HALF_LINE_HYPERBOLIC)

#: default clip distance from singular endpoints
DEFAULT_CLIP = 1e-6
#: default truncation of the infinite endpoint, per domain kind
DEFAULT_CUTOFF = {HALF_LINE_RADIAL: 12.0, HALF_LINE_HYPERBOLIC: 25.0}


def wall_positions(kind: str) -> tuple[float | None, float | None]:
    """Positions of the singular walls a clipped grid stops short of.

    ``None`` marks a truncated infinity rather than a wall.
    """
    if kind == FINITE_INTERVAL:
        return -pi / 2.0, pi / 2.0
    if kind in (HALF_LINE_RADIAL, HALF_LINE_HYPERBOLIC):
        return 0.0, None
    raise ValueError(f"unknown grid kind {kind!r}")


@dataclass(frozen=True, eq=False)
class Grid:
    """A uniform grid of ``n`` nodes on ``[a, b]``."""

    kind: str
    a: float
    b: float
    n: int
    nodes: np.ndarray = field(repr=False)
    h: float

    def __post_init__(self):
        if self.kind not in GRID_KINDS:
            raise ValueError(f"unknown grid kind {self.kind!r}")
        if self.n < 3:
            raise ValueError("grid needs at least 3 nodes")
        if len(self.nodes) != self.n:
            raise ValueError("node array length disagrees with n")
        d = np.diff(self.nodes)
        if np.any(d <= 0):
            raise ValueError("grid nodes must be strictly increasing")
        # relative uniformity bound, with an absolute floor of a few ulps of
        # the endpoints (node differences cannot be more uniform than that)
        slack = 1e-12 * self.h + 8.0 * np.finfo(float).eps * max(abs(self.a), abs(self.b))
        if np.max(np.abs(d - self.h)) >= slack:
            raise ValueError("grid spacing is not uniform")

    def __eq__(self, other):
        if not isinstance(other, Grid):
            return NotImplemented
        return (self.kind == other.kind and self.n == other.n
                and np.array_equal(self.nodes, other.nodes))


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """Real-valued samples on a :class:`Grid`."""

    grid: Grid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        if len(self.values) != self.grid.n:
            raise ValueError("sample count disagrees with grid size")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("samples must be finite")


def make_grid(kind: str, clip: float = DEFAULT_CLIP, cutoff: float | None = None,
              n: int = 4001) -> Grid:
    """Build the uniform grid for one of the three domain classes.

    ``clip`` is the distance kept from each singular endpoint; ``cutoff``
    truncates the infinite endpoint of the half-line domains (ignored for the
    finite interval, which always spans ``(-pi/2, pi/2)`` clipped on both
    sides).
    """
    if kind not in GRID_KINDS:
        raise ValueError(f"unknown grid kind {kind!r}")
    if n < 3:
        raise ValueError("grid needs at least 3 nodes")
    if clip <= 0:
        raise ValueError("clip distance from a singular endpoint must be positive")
    if kind == FINITE_INTERVAL:
        a, b = -pi / 2 + clip, pi / 2 - clip
    else:
        if cutoff is None:
            cutoff = DEFAULT_CUTOFF[kind]
        a, b = clip, float(cutoff)
    if b <= a:
        raise ValueError("cutoff must exceed clip")
    nodes = np.linspace(a, b, n)
    return Grid(kind=kind, a=a, b=b, n=n, nodes=nodes, h=(b - a) / (n - 1))


def sample(grid: Grid, fn) -> SampledFunction:
    """Evaluate a vectorized callable on the grid nodes."""
    return SampledFunction(grid, np.asarray(fn(grid.nodes), dtype=float))


def cumulative_integral(f: SampledFunction, method: str = "trapezoid") -> SampledFunction:
    """Running integral of ``f`` from the first node; out[0] = 0.

    The composite trapezoid rule is the default because it composes node by
    node and preserves monotonicity for nonnegative integrands; ``simpson`` is
    available as a cross-check.
    """
    y = f.values
    if method == "trapezoid":
        out = np.zeros_like(y)
        np.cumsum((y[1:] + y[:-1]) * (f.grid.h / 2.0), out=out[1:])
    elif method == "simpson":
        out = np.concatenate(([0.0], cumulative_simpson(y, dx=f.grid.h)))
    else:
        raise ValueError(f"unknown quadrature method {method!r}")
    return SampledFunction(f.grid, out)


def tail_integral(f: SampledFunction) -> SampledFunction:
    """Running integral of ``f`` from each node to the last one; out[-1] = 0.

    Computed by accumulating trapezoid panels from the right end, so the small
    tail values keep full relative accuracy instead of being formed as a
    near-cancelling difference of two O(1) quantities.
    """
    y = f.values
    out = np.zeros_like(y)
    out[:-1] = np.cumsum(((y[1:] + y[:-1]) * (f.grid.h / 2.0))[::-1])[::-1]
    return SampledFunction(f.grid, out)


def derivative(f: SampledFunction) -> SampledFunction:
    """Second-order finite-difference derivative (central inside, one-sided ends)."""
    y = f.values
    h = f.grid.h
    out = np.empty_like(y)
    out[1:-1] = (y[2:] - y[:-2]) / (2.0 * h)
    out[0] = (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * h)
    out[-1] = (3.0 * y[-1] - 4.0 * y[-2] + y[-3]) / (2.0 * h)
    return SampledFunction(f.grid, out)


def inner_product(f: SampledFunction, g: SampledFunction) -> float:
    """Trapezoid inner product of two functions on a shared grid."""
    if f.grid is not g.grid and not np.array_equal(f.grid.nodes, g.grid.nodes):
        raise ValueError("inner product requires a shared grid")
    return float(np.trapezoid(f.values * g.values, dx=f.grid.h))


def l2_norm(f: SampledFunction) -> float:
    return float(np.sqrt(np.trapezoid(f.values * f.values, dx=f.grid.h)))
