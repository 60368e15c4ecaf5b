"""Agreement metrics between solutions and envelope-based orbit classification.

A "solution" is anything with ``states(t) -> ndarray (len(t), 4)`` returning
packed (x, y, x', y'); this covers integrated trajectories, closed forms and
tabulated files alike.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import OutOfRange, TooShort

COMPONENTS = {"x": 0, "y": 1, "vx": 2, "vy": 3}
CENTER_TOL = 1e-3


@dataclass(frozen=True)
class ErrorReport:
    sup_error: float
    l2_error: float
    window: tuple[float, float]


@dataclass(frozen=True)
class OrbitClass:
    """Envelope-based orbit label.

    ``envelope_drift`` is the peak-to-peak spread of the envelope relative to
    its mean, divided by the number of oscillation periods it spans.
    ``growth`` is the largest peak over the first one.
    """

    tag: Literal["Center", "Band", "Divergent"]
    envelope_drift: float
    growth: float


def _span_of(sol):
    span = getattr(sol, "span", None)
    return (-np.inf, np.inf) if span is None else span


def trajectory_error(a, b, window: tuple[float, float], n_samples: int = 2001) -> ErrorReport:
    """Sup and RMS of the pointwise 4-component difference |a(t) - b(t)|.

    The RMS is taken over ``n_samples`` uniform times spanning ``window``.

    Raises
    ------
    OutOfRange
        If ``window`` is not inside both solutions' spans.
    """
    if n_samples < 2:
        raise ValueError("n_samples must be at least 2")
    t0, t1 = window
    if not t1 > t0:
        raise ValueError("window must have positive length")
    for sol in (a, b):
        lo, hi = _span_of(sol)
        if t0 < lo or t1 > hi:
            raise OutOfRange(f"window {window} not inside solution span {(lo, hi)}")
    t = np.linspace(t0, t1, n_samples)
    diff = np.linalg.norm(a.states(t) - b.states(t), axis=-1)
    return ErrorReport(float(diff.max()), float(np.sqrt(np.mean(diff**2))), (float(t0), float(t1)))


def envelope(t, signal, min_periods: float = 3.0):
    """Peaks of |Re(signal)| refined by a parabola through each sample triple.

    Parameters
    ----------
    t : array_like
        Uniformly spaced sample times.
    signal : array_like
        Complex or real samples.
    min_periods : float
        Minimum number of oscillation periods the peaks must cover. |Re|
        peaks twice per period.

    Returns
    -------
    t_peak, peak : ndarray
        Interpolated peak times and heights.

    Raises
    ------
    TooShort
        If fewer than ``2 * min_periods`` peaks are found.
    """
    t = np.asarray(t, dtype=float)
    f = np.abs(np.real(np.asarray(signal)))
    if len(t) < 3:
        raise TooShort("need at least three samples")
    dt = np.diff(t)
    if not np.allclose(dt, dt[0], rtol=1e-6, atol=0):
        raise ValueError("envelope expects uniformly spaced samples")
    h = dt[0]
    mid = f[1:-1]
    is_peak = (mid >= f[:-2]) & (mid > f[2:]) & (mid > 0)
    k = np.flatnonzero(is_peak) + 1
    if len(k) < 2 * min_periods:
        raise TooShort(f"only {len(k)} envelope peaks; need {int(2 * min_periods)}")
    fm, f0, fp = f[k - 1], f[k], f[k + 1]
    curv = fm - 2 * f0 + fp
    with np.errstate(divide="ignore", invalid="ignore"):
        off = np.where(curv != 0, 0.5 * (fm - fp) / curv, 0.0)
    off = np.clip(off, -0.5, 0.5)
    t_peak = t[k] + off * h
    peak = f0 - 0.25 * (fm - fp) * off
    return t_peak, peak


def log_slope(t_peak, peak) -> float:
    """Least-squares slope of log(peak) against time."""
    return float(np.polyfit(t_peak, np.log(peak), 1)[0])


def sample_component(sol, component: str, window, dt: float):
    """Uniform samples of one packed component on ``window``."""
    n = int(np.floor((window[1] - window[0]) / dt + 1e-9)) + 1
    t = window[0] + dt * np.arange(n)
    return t, sol.states(t)[:, COMPONENTS[component]]


def classify_orbit(sol, component: str | tuple[str, ...] = ("x", "y"),
                   center_tol: float = CENTER_TOL,
                   window: tuple[float, float] | None = None, omega: float = 1.0,
                   samples_per_period: int = 600) -> OrbitClass:
    """Label an orbit Center, Band or Divergent from its envelope.

    Divergent if the envelope reaches twice its first peak inside the window;
    otherwise Center when the per-period drift is below ``center_tol`` and
    Band when it is not. With several components the orbit takes the worst
    of them: a Center needs every selected coordinate to keep a constant
    envelope.

    Raises
    ------
    TooShort
        If the window spans fewer than three periods.
    """
    if window is None:
        window = _span_of(sol)
        if not np.all(np.isfinite(window)):
            raise ValueError("a window is required for unbounded solutions")
    comps = (component,) if isinstance(component, str) else tuple(component)
    dt = 2 * np.pi / omega / samples_per_period
    drift = growth = 0.0
    for comp in comps:
        t, sig = sample_component(sol, comp, window, dt)
        t_peak, peak = envelope(t, sig)
        growth = max(growth, float(peak.max() / peak[0]))
        drift = max(drift, _drift(t_peak, peak))
    if growth >= 2.0:
        return OrbitClass("Divergent", drift, growth)
    tag = "Center" if drift < center_tol else "Band"
    return OrbitClass(tag, drift, growth)


def _drift(t_peak, peak) -> float:
    # |Re| peaks come twice per period
    period = 2 * np.mean(np.diff(t_peak))
    n_periods = (t_peak[-1] - t_peak[0]) / period
    return float((peak.max() - peak.min()) / peak.mean() / n_periods)
