"""Deterministic quadrature helpers used throughout the package.

Everything here is plain composite Simpson / trapezoid machinery on uniform
grids plus a cached cumulative antiderivative.  No randomness, no adaptivity
(the adaptive Gauss-Kronrod path for kernel identities lives in spectral.py
and goes through scipy.integrate.quad).
"""

from __future__ import annotations

import numpy as np
from scipy.integrate import cumulative_simpson, simpson
from scipy.interpolate import CubicSpline

from .errors import InvalidParameterError

# Node count for the high-accuracy moments of the cutoff bumps.  The exp-type
# ramps have large (but finite) fourth derivatives; 4097 Simpson nodes push the
# quadrature error to ~1e-12 absolute, well below every tolerance keyed to
# these moments (the boundary-layer a0 check at 1e-10 is the tightest).
MOMENT_NODES = 4097


def uniform_grid(a, b, n):
    """n+1 equally spaced points from a to b inclusive."""
    return np.linspace(a, b, n + 1)


def integrate_samples(values, x=None, dx=None):
    """Composite Simpson integral of sampled values on a uniform grid."""
    if x is not None:
        return float(simpson(values, x=x))
    return float(simpson(values, dx=dx))


def cumulative_samples(values, x):
    """Cumulative Simpson antiderivative, anchored at 0 on the first node."""
    return cumulative_simpson(values, x=x, initial=0.0)


def moment(func, a, b, nodes=MOMENT_NODES):
    """High-accuracy Simpson moment of a vectorized function over [a, b]."""
    if nodes % 2 == 0:
        nodes += 1
    x = np.linspace(a, b, nodes)
    return float(simpson(func(x), x=x))


class CachedCumulativeIntegral:
    """Cumulative integral t -> int_0^t f(tau) dtau cached on a fine grid.

    The integrand is sampled once on a uniform grid over [0, horizon], turned
    into a cumulative Simpson table and interpolated with a cubic spline, so
    repeated queries at arbitrary times stay cheap and deterministic.
    """

    def __init__(self, func, horizon, nodes=2049):
        if horizon <= 0:
            raise InvalidParameterError("horizon must be positive")
        if nodes % 2 == 0:
            nodes += 1
        t = np.linspace(0.0, horizon, nodes)
        values = np.asarray(func(t), dtype=float)
        if values.shape != t.shape:
            values = np.broadcast_to(values, t.shape).astype(float)
        cum = cumulative_simpson(values, x=t, initial=0.0)
        self.horizon = float(horizon)
        self._spline = CubicSpline(t, cum)

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        if np.any(t < -1e-12) or np.any(t > self.horizon * (1 + 1e-12)):
            raise InvalidParameterError(
                f"time {t} outside cached range [0, {self.horizon}]"
            )
        out = self._spline(np.clip(t, 0.0, self.horizon))
        return float(out) if out.ndim == 0 else out
