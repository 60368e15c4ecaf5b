"""Classical model: Hamiltonian, equations of motion and the PT check.

The Hamiltonian is

    H = p_x p_y + omega^2 x y - i [mu1 (1 - x^2) y p_y + mu2 (1 - y^2) x p_x]

and the dynamics are written as second-order equations in (x, y, x', y').
Every function here broadcasts over numpy arrays, so the same code evaluates
single states and whole sampled trajectories.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ModelParams:
    """Frequency and the two non-Hermiticity couplings."""

    omega: float = 1.0
    mu1: float = 0.0
    mu2: float = 0.0

    def __post_init__(self):
        if not (np.isfinite(self.omega) and self.omega > 0):
            raise ValueError(f"omega must be positive, got {self.omega}")
        if not (np.isfinite(self.mu1) and np.isfinite(self.mu2)):
            raise ValueError("couplings must be finite")

    @property
    def is_pt_symmetric(self) -> bool:
        return self.mu1 == self.mu2

    def swapped(self) -> ModelParams:
        return ModelParams(self.omega, self.mu2, self.mu1)


@dataclass(frozen=True)
class PhaseState:
    """Complex positions and velocities at time ``t``."""

    t: float
    x: complex
    y: complex
    vx: complex
    vy: complex

    def __post_init__(self):
        if not np.all(np.isfinite(self.as_array())):
            raise ValueError("phase state components must be finite")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.vx, self.vy], dtype=complex)

    @classmethod
    def from_array(cls, t: float, z) -> PhaseState:
        z = np.asarray(z, dtype=complex)
        return cls(float(t), complex(z[0]), complex(z[1]), complex(z[2]), complex(z[3]))


@dataclass(frozen=True)
class MomentumState:
    px: complex
    py: complex


@dataclass(frozen=True)
class InitialData:
    """Amplitudes at ``t0``; both velocities vanish there by convention."""

    t0: float = 0.0
    a0: float = 1.0
    b0: float = 1.0

    def to_state(self) -> PhaseState:
        return PhaseState(self.t0, complex(self.a0), complex(self.b0), 0j, 0j)


def eom_accel(x, y, vx, vy, params: ModelParams):
    """Second derivatives (x'', y'') of the coupled complex oscillator."""
    w2 = params.omega**2
    m1, m2 = params.mu1, params.mu2
    gx = 1 - x * x
    gy = 1 - y * y
    ax = (-w2 * x + 1j * m1 * gx * vx - 1j * m2 * gy * vx
          - m1 * m2 * (x * gx * gy - 2 * x * y * y * gx))
    ay = (-w2 * y - 1j * m1 * gx * vy + 1j * m2 * gy * vy
          - m1 * m2 * (y * gx * gy - 2 * x * x * y * gy))
    return ax, ay


def eom_rhs(state: PhaseState, params: ModelParams) -> tuple[complex, complex]:
    """Accelerations (x'', y'') at ``state``."""
    ax, ay = eom_accel(state.x, state.y, state.vx, state.vy, params)
    return complex(ax), complex(ay)


def first_order_rhs(z: np.ndarray, params: ModelParams) -> np.ndarray:
    """Time derivative of the packed state ``z = [x, y, vx, vy]``."""
    ax, ay = eom_accel(z[0], z[1], z[2], z[3], params)
    return np.array([z[2], z[3], ax, ay], dtype=complex)


def momenta_from_velocities(state: PhaseState, params: ModelParams) -> MomentumState:
    """Invert x' = dH/dp_x, y' = dH/dp_y for the canonical momenta."""
    px, py = _momenta(state.x, state.y, state.vx, state.vy, params)
    return MomentumState(complex(px), complex(py))


def _momenta(x, y, vx, vy, params):
    px = vy + 1j * params.mu1 * (1 - x * x) * y
    py = vx + 1j * params.mu2 * (1 - y * y) * x
    return px, py


def hamiltonian_canonical(x, y, px, py, params: ModelParams):
    """H at a point given in canonical coordinates."""
    return (px * py + params.omega**2 * x * y
            - 1j * (params.mu1 * (1 - x * x) * y * py
                    + params.mu2 * (1 - y * y) * x * px))


def hamiltonian_value(state: PhaseState, params: ModelParams) -> complex:
    """H along a (velocity-space) phase state."""
    px, py = _momenta(state.x, state.y, state.vx, state.vy, params)
    return complex(hamiltonian_canonical(state.x, state.y, px, py, params))


def hamiltonian_along(z: np.ndarray, params: ModelParams) -> np.ndarray:
    """Vectorised H for packed states of shape (..., 4)."""
    z = np.asarray(z, dtype=complex)
    x, y, vx, vy = z[..., 0], z[..., 1], z[..., 2], z[..., 3]
    px, py = _momenta(x, y, vx, vy, params)
    return hamiltonian_canonical(x, y, px, py, params)


def pt_image_value(x: float, y: float, px: float, py: float,
                   params: ModelParams) -> complex:
    """H evaluated at the PT image of a real canonical point.

    P swaps x <-> y and p_x <-> p_y, T flips both momenta and conjugates the
    explicit ``i``. The antilinear part is only unambiguous on real points.

    Raises
    ------
    ValueError
        If any coordinate has a nonzero imaginary part.
    """
    vals = np.array([x, y, px, py], dtype=complex)
    if np.any(vals.imag != 0):
        raise ValueError("PT image is only defined here for real phase-space points")
    x, y, px, py = vals.real
    # (x, y, px, py) -> (y, x, -py, -px), i -> -i
    xi, yi, pxi, pyi = y, x, -py, -px
    return complex(pxi * pyi + params.omega**2 * xi * yi
                   + 1j * (params.mu1 * (1 - xi * xi) * yi * pyi
                           + params.mu2 * (1 - yi * yi) * xi * pxi))
