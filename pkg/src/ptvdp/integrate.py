"""Adaptive integration of the complexified equations of motion.

The packed state ``[x, y, vx, vy]`` is advanced with the Dormand-Prince 5(4)
embedded pair (local extrapolation, FSAL). Step control measures the local
error over the 8 real components in a mixed absolute/relative max norm.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NonFinite, OutOfRange, StepUnderflow
from .model import InitialData, ModelParams, PhaseState, first_order_rhs

# Dormand & Prince (1980), RK5(4)7M
_C = np.array([0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0])
_A = [np.array(row) for row in [
    [],
    [1 / 5],
    [3 / 40, 9 / 40],
    [44 / 45, -56 / 15, 32 / 9],
    [19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729],
    [9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656],
    [35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84],
]]
_B = np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0])
_E = np.array([71 / 57600, 0.0, -71 / 16695, 71 / 1920, -17253 / 339200,
               22 / 525, -1 / 40])

# continuous extension: z(t + s h) = z + h * (K.T @ _P) @ [s, s^2, s^3, s^4]
_P = np.array([
    [1, -8048581381 / 2820520608, 8663915743 / 2820520608, -12715105075 / 11282082432],
    [0, 0, 0, 0],
    [0, 131558114200 / 32700410799, -68118460800 / 10900136933, 87487479700 / 32700410799],
    [0, -1754552775 / 470086768, 14199869525 / 1410260304, -10690763975 / 1880347072],
    [0, 127303824393 / 49829197408, -318862633887 / 49829197408, 701980252875 / 199316789632],
    [0, -282668133 / 205662961, 2019193451 / 616988883, -1453857185 / 822651844],
    [0, 40617522 / 29380423, -110615467 / 29380423, 69997945 / 29380423],
])

_SAFETY = 0.9
_FAC_MIN = 0.2
_FAC_MAX = 5.0


@dataclass(frozen=True)
class IntegratorConfig:
    """Tolerances and step limits.

    ``method="rk4"`` switches to classical fixed-step RK4 with step
    ``initial_step``; it exists for debugging and performs no error control.
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-10
    max_step: float = np.inf
    initial_step: float = 1e-3
    t_end: float = 100.0
    method: str = "dopri5"

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("tolerances must be positive")
        if not (self.max_step > 0 and self.initial_step > 0):
            raise ValueError("step sizes must be positive")
        if self.method not in ("dopri5", "rk4"):
            raise ValueError(f"unknown method {self.method!r}")


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Ordered samples of an integrated orbit.

    ``z[k]`` is the packed state at ``t[k]`` and ``dz[k]`` its time
    derivative. Adaptive runs also keep the Runge-Kutta stages of every step
    (``stages[k]`` covers ``[t[k], t[k+1]]``) for 4th-order dense output;
    without them sampling falls back to cubic Hermite interpolation.
    """

    t: np.ndarray
    z: np.ndarray
    dz: np.ndarray
    params: ModelParams
    accepted_steps: int = 0
    rejected_steps: int = 0
    config: IntegratorConfig = field(default_factory=IntegratorConfig)
    stages: np.ndarray | None = None

    def __len__(self):
        return len(self.t)

    @property
    def samples(self) -> list[PhaseState]:
        return [PhaseState.from_array(tk, zk) for tk, zk in zip(self.t, self.z)]

    @property
    def span(self) -> tuple[float, float]:
        return float(self.t[0]), float(self.t[-1])

    def states(self, t) -> np.ndarray:
        """Interpolated packed states at the times ``t``; shape (len(t), 4)."""
        t = np.atleast_1d(np.asarray(t, dtype=float))
        t_lo, t_hi = self.span
        if np.any(t < t_lo) or np.any(t > t_hi):
            raise OutOfRange(f"requested times outside [{t_lo}, {t_hi}]")
        idx = np.clip(np.searchsorted(self.t, t, side="right") - 1, 0, len(self.t) - 2)
        if self.stages is None:
            out = _hermite(self, t, idx)
        else:
            out = _dense(self, t, idx)
        # exact hits return the stored sample untouched
        for j in (idx, idx + 1):
            hit = np.flatnonzero(t == self.t[j])
            out[hit] = self.z[j[hit]]
        return out

    __call__ = states


def integrate(init: InitialData | PhaseState, params: ModelParams,
              cfg: IntegratorConfig = IntegratorConfig()) -> Trajectory:
    """Integrate the equations of motion from ``init`` to ``cfg.t_end``.

    Parameters
    ----------
    init : InitialData or PhaseState
        Starting point. ``InitialData`` starts at rest from (a0, b0).
    params : ModelParams
    cfg : IntegratorConfig

    Returns
    -------
    Trajectory
        Every accepted step is stored as a sample; the first sample is the
        initial condition and the last lands exactly on ``cfg.t_end``.

    Raises
    ------
    StepUnderflow
        If the step needed to meet the tolerance drops below
        ``1e-14 * (t_end - t0)``.
    NonFinite
        If the state overflows.
    """
    state = init.to_state() if isinstance(init, InitialData) else init
    t0 = state.t
    if not cfg.t_end > t0:
        raise ValueError("t_end must exceed the initial time")
    z0 = state.as_array()

    def f(z):
        return first_order_rhs(z, params)

    if cfg.method == "rk4":
        return _rk4(f, t0, z0, params, cfg)

    span = cfg.t_end - t0
    h_min = 1e-14 * span
    h = min(cfg.initial_step, cfg.max_step, span)

    ts, zs, dzs, ks = [t0], [z0], [], []
    t, z = t0, z0
    k1 = f(z)
    dzs.append(k1)
    accepted = rejected = 0
    K = np.empty((7, 4), dtype=complex)

    while t < cfg.t_end:
        if h < h_min:
            raise StepUnderflow(f"step {h:.3e} below floor {h_min:.3e} at t={t:.6g}")
        last = t + h >= cfg.t_end
        if last:
            h = cfg.t_end - t

        K[0] = k1
        for i in range(1, 7):
            K[i] = f(z + h * (_A[i] @ K[:i]))
        z_new = z + h * (_B @ K)
        if not np.all(np.isfinite(z_new)):
            raise NonFinite(f"state overflowed near t={t:.6g}")
        err_vec = h * (_E @ K)

        scale_re = cfg.abs_tol + cfg.rel_tol * np.maximum(np.abs(z.real), np.abs(z_new.real))
        scale_im = cfg.abs_tol + cfg.rel_tol * np.maximum(np.abs(z.imag), np.abs(z_new.imag))
        err = max(np.max(np.abs(err_vec.real) / scale_re),
                  np.max(np.abs(err_vec.imag) / scale_im))

        if err <= 1.0:
            t = cfg.t_end if last else t + h
            z = z_new
            k1 = K[6].copy()   # FSAL: last stage is f(z_new)
            ts.append(t)
            zs.append(z)
            dzs.append(k1)
            ks.append(K.copy())
            accepted += 1
            fac = _FAC_MAX if err == 0 else min(_FAC_MAX, max(_FAC_MIN, _SAFETY * err ** -0.2))
            h = min(h * fac, cfg.max_step)
        else:
            rejected += 1
            h *= max(_FAC_MIN, _SAFETY * err ** -0.2)

    return Trajectory(np.array(ts), np.array(zs), np.array(dzs), params,
                      accepted, rejected, cfg, np.array(ks))


def _rk4(f, t0, z0, params, cfg):
    n = max(1, int(np.ceil((cfg.t_end - t0) / cfg.initial_step)))
    h = (cfg.t_end - t0) / n
    ts = t0 + h * np.arange(n + 1)
    zs = np.empty((n + 1, 4), dtype=complex)
    dzs = np.empty_like(zs)
    zs[0] = z0
    for i in range(n):
        z = zs[i]
        k1 = f(z)
        k2 = f(z + 0.5 * h * k1)
        k3 = f(z + 0.5 * h * k2)
        k4 = f(z + h * k3)
        dzs[i] = k1
        zs[i + 1] = z + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        if not np.all(np.isfinite(zs[i + 1])):
            raise NonFinite(f"state overflowed near t={ts[i]:.6g}")
    dzs[n] = f(zs[n])
    return Trajectory(ts, zs, dzs, params, n, 0, cfg)


def _hermite(traj: Trajectory, t: np.ndarray, idx: np.ndarray) -> np.ndarray:
    ta, tb = traj.t[idx], traj.t[idx + 1]
    h = (tb - ta)[:, None]
    s = ((t - ta) / (tb - ta))[:, None]
    h00 = (1 + 2 * s) * (1 - s) ** 2
    h10 = s * (1 - s) ** 2
    h01 = s * s * (3 - 2 * s)
    h11 = s * s * (s - 1)
    return (h00 * traj.z[idx] + h10 * h * traj.dz[idx]
            + h01 * traj.z[idx + 1] + h11 * h * traj.dz[idx + 1])


def _dense(traj: Trajectory, t: np.ndarray, idx: np.ndarray) -> np.ndarray:
    ta, tb = traj.t[idx], traj.t[idx + 1]
    h = tb - ta
    s = (t - ta) / h
    powers = np.stack([s, s**2, s**3, s**4], axis=-1)            # (n, 4)
    Q = np.einsum("nkc,kp->ncp", traj.stages[idx], _P)           # (n, 4 comps, 4 powers)
    return traj.z[idx] + h[:, None] * np.einsum("ncp,np->nc", Q, powers)


def sample_at(traj: Trajectory, t: float) -> PhaseState:
    """Phase state at time ``t`` from the dense output (Hermite for RK4 runs).

    Raises
    ------
    OutOfRange
        If ``t`` lies outside the trajectory's span.
    """
    return PhaseState.from_array(t, traj.states([t])[0])
