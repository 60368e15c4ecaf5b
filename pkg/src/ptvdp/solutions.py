"""Wrappers giving every kind of solution the same ``states(t)`` surface."""

from __future__ import annotations

from typing import Callable

import numpy as np

from .errors import OutOfRange

# 4th-order central difference step; truncation ~h^4, roundoff ~eps/h
FD_STEP = 1e-3


class ClosedFormSolution:
    """Positions given in closed form; velocities by central differences.

    Parameters
    ----------
    positions : callable
        Maps an array of times to a pair of complex arrays (x, y).
    span : tuple of float, optional
        Interval on which the solution may be sampled.
    """

    def __init__(self, positions: Callable, span=(-np.inf, np.inf), h: float = FD_STEP):
        self.positions = positions
        self.span = (float(span[0]), float(span[1]))
        self.h = h

    def states(self, t) -> np.ndarray:
        t = np.atleast_1d(np.asarray(t, dtype=float))
        if np.any(t < self.span[0]) or np.any(t > self.span[1]):
            raise OutOfRange(f"requested times outside {self.span}")
        return states_from_positions(self.positions, t, self.h)

    __call__ = states


def states_from_positions(positions: Callable, t: np.ndarray, h: float = FD_STEP) -> np.ndarray:
    """Pack (x, y, x', y') with 4th-order central-difference velocities."""
    x, y = (np.asarray(v, dtype=complex) for v in positions(t))
    xp2, yp2 = positions(t + 2 * h)
    xp1, yp1 = positions(t + h)
    xm1, ym1 = positions(t - h)
    xm2, ym2 = positions(t - 2 * h)
    vx = (-xp2 + 8 * xp1 - 8 * xm1 + xm2) / (12 * h)
    vy = (-yp2 + 8 * yp1 - 8 * ym1 + ym2) / (12 * h)
    return np.stack([x, y, vx, vy], axis=-1)


class TabulatedSolution:
    """Samples read back from a trajectory file.

    Positions use cubic Hermite interpolation with the stored velocities;
    velocities use a cubic spline.
    """

    def __init__(self, t, z):
        from scipy.interpolate import CubicHermiteSpline, CubicSpline

        self.t = np.asarray(t, dtype=float)
        self.z = np.asarray(z, dtype=complex)
        if self.t.ndim != 1 or len(self.t) < 2 or np.any(np.diff(self.t) <= 0):
            raise ValueError("sample times must be strictly increasing")
        self.span = (float(self.t[0]), float(self.t[-1]))
        self._pos = CubicHermiteSpline(self.t, self.z[:, :2], self.z[:, 2:])
        self._vel = CubicSpline(self.t, self.z[:, 2:])

    def states(self, t) -> np.ndarray:
        t = np.atleast_1d(np.asarray(t, dtype=float))
        if np.any(t < self.span[0]) or np.any(t > self.span[1]):
            raise OutOfRange(f"requested times outside {self.span}")
        out = np.concatenate([self._pos(t), self._vel(t)], axis=-1)
        idx = np.searchsorted(self.t, t)
        idx = np.clip(idx, 0, len(self.t) - 1)
        hit = self.t[idx] == t
        out[hit] = self.z[idx[hit]]
        return out

    __call__ = states
