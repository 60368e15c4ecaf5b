"""Renormalization-group resummation of the perturbative solution.

Initial data fixed at t0 are traded for data at an arbitrary time tau via
multiplicative constants Z_A, Z_B and an additive phase shift Z_theta.
Demanding that x and y do not depend on tau gives four flow relations for
A(tau), B(tau), theta(tau). Their two solution branches are:

* ``center``: theta, A and B frozen at their initial values;
* ``limit``: the manifold B = sign * sqrt(mu1/mu2) * A, on which A rotates
  with a constant imaginary rate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import ManifoldViolation, ResonantDenominator, SingularSystem
from .model import InitialData, ModelParams
from .solutions import ClosedFormSolution

MANIFOLD_RTOL = 1e-12


@dataclass(frozen=True)
class RenormConstants:
    """First-order coefficients of Z_A, Z_B and Z_theta.

    ``c10`` and ``c01`` (the phase constants) are never fixed by the
    resummation at this order and are kept at zero.
    """

    a10: complex
    a01: complex
    b10: complex
    b01: complex
    c10: complex = 0j
    c01: complex = 0j

    def z_a(self, params: ModelParams) -> complex:
        return 1 + params.mu1 / 2 * self.a10 + params.mu2 / 2 * self.a01

    def z_b(self, params: ModelParams) -> complex:
        return 1 + params.mu1 / 2 * self.b10 + params.mu2 / 2 * self.b01

    def z_theta(self, params: ModelParams) -> complex:
        return params.mu1 / 2 * self.c10 + params.mu2 / 2 * self.c01


@dataclass(frozen=True)
class RGBranch:
    tag: Literal["center", "limit"] = "center"
    sign: int = 1

    def __post_init__(self):
        if self.tag not in ("center", "limit"):
            raise ValueError(f"unknown branch {self.tag!r}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


def renorm_constants(tau: float, t0: float, A: complex, B: complex) -> RenormConstants:
    """Constants that convert (t - t0) secular growth into (t - tau)."""
    d = tau - t0
    qa = 0.25j * (-4 + A * A) * d
    qb = 0.25j * (-4 + B * B) * d
    return RenormConstants(a10=qa, a01=-qb, b10=-qa, b01=qb)


def alpha_beta(params: ModelParams) -> tuple[float, float]:
    """Slow rotation rate and renormalized frequency of the limit branch.

    Raises
    ------
    ResonantDenominator
        When (mu1 - mu2)**2 equals 4 omega**2.
    """
    w = params.omega
    d = params.mu1 - params.mu2
    den = 4 * w * w - d * d
    if abs(den) <= 1e-14 * 4 * w * w:
        raise ResonantDenominator(f"(mu1-mu2)^2 = 4 omega^2 at {params}")
    return 2 * w * w * d / den, 4 * w**3 / den


def _flow_system(A, B, params):
    w2 = params.omega**2
    m1, m2 = params.mu1, params.mu2
    d = m1 - m2
    M = np.zeros((4, 3), dtype=complex)
    b = np.zeros(4, dtype=complex)
    # fe1
    M[0] = [1, 0, -0.5j * A * d + 7j * m1 * A**3 / 32 - 7j * m2 * A * B**2 / 32]
    b[0] = -0.125j * A * (m1 * (-4 + A * A) - m2 * (-4 + B * B))
    # fe2
    M[1] = [-0.5j * d / w2 + 21j * m1 * A * A / (32 * w2) - 7j * m2 * B * B / (32 * w2),
            -7j * m2 * A * B / (16 * w2),
            -A]
    # fe3
    M[2] = [3 * m1 * A * A - m2 * B * B, -2 * m2 * A * B, 0]
    # fe4
    M[3] = [0, 0, -m2 * A * B * B + m1 * A**3]
    return M, b


def flow_rhs(A: complex, B: complex, theta: float, params: ModelParams,
             theta_rate: float | None = None) -> tuple[complex, complex, float]:
    """Solve the four flow relations for (dA/dtau, dB/dtau, dtheta/dtau).

    The relations are linear in the derivatives. With ``theta_rate=None`` the
    full 4x3 system is solved and must be both nonsingular and consistent.
    Passing ``theta_rate`` fixes dtheta/dtau (0 reproduces the frozen-phase
    branch) and solves the two homogeneous amplitude relations for dA, dB;
    the inhomogeneous first relation is not imposed in that mode.

    Raises
    ------
    SingularSystem
        If the relevant coefficient matrix is rank deficient or the full
        system has no exact solution at this point.
    """
    M, b = _flow_system(complex(A), complex(B), params)

    if theta_rate is not None:
        sub = M[1:3, :2]
        rhs = -M[1:3, 2] * theta_rate
        if abs(np.linalg.det(sub)) <= 1e-14 * max(np.abs(sub).max() ** 2, 1e-300):
            raise SingularSystem("amplitude relations are degenerate at this point")
        dA, dB = np.linalg.solve(sub, rhs)
        return complex(dA), complex(dB), float(theta_rate)

    sv = np.linalg.svd(M, compute_uv=False)
    if sv[-1] <= 1e-12 * sv[0]:
        raise SingularSystem("flow relations are degenerate at this point")
    sol, *_ = np.linalg.lstsq(M, b, rcond=None)
    resid = np.linalg.norm(M @ sol - b)
    scale = sv[0] * np.linalg.norm(sol) + np.linalg.norm(b)
    if resid > 1e-9 * max(scale, 1e-300):
        raise SingularSystem(f"flow relations are inconsistent (residual {resid:.2e})")
    dA, dB, dth = sol
    return complex(dA), complex(dB), float(dth.real)


def _check_manifold(init: InitialData, params: ModelParams, sign: int) -> float:
    if params.mu2 == 0:
        raise ManifoldViolation("limit branch needs mu2 != 0")
    ratio = params.mu1 / params.mu2
    if ratio < 0:
        raise ManifoldViolation("limit branch needs mu1/mu2 >= 0")
    r = sign * np.sqrt(ratio)
    target = float(r * init.a0)
    if abs(init.b0 - target) > MANIFOLD_RTOL * max(abs(target), abs(init.b0), 1e-300):
        raise ManifoldViolation(
            f"b0={init.b0!r} is off the manifold b0 = {sign:+d}*sqrt(mu1/mu2)*a0 = {target!r}")
    return r


def on_manifold(init: InitialData, params: ModelParams, sign: int = 1) -> InitialData:
    """Copy of ``init`` with b0 moved onto the limit-branch manifold."""
    r = sign * np.sqrt(params.mu1 / params.mu2)
    return InitialData(init.t0, init.a0, r * init.a0)


def amplitude_flow(tau, init: InitialData, params: ModelParams, sign: int = 1):
    """Closed-form A(tau), B(tau), theta(tau) on the limit-branch manifold."""
    _check_manifold(init, params, sign)
    alpha, _ = alpha_beta(params)
    w = params.omega
    d = params.mu1 - params.mu2
    tau = np.asarray(tau, dtype=float)
    A = init.a0 * np.exp(1j * alpha * (tau - init.t0))
    B = (init.b0 / init.a0) * A if init.a0 != 0 else 0j * A
    theta = (d * d * tau - 4 * w * w * init.t0) / (4 * w * w - d * d)
    return A, B, theta


def rg_solution_center(t, init: InitialData, params: ModelParams):
    """Frozen-phase RG solution (x, y): harmonic motion plus bounded corrections."""
    w = params.omega
    m1, m2 = params.mu1, params.mu2
    A, B = init.a0, init.b0
    s = np.asarray(t, dtype=float) - init.t0
    c, sn, c2 = np.cos(w * s), np.sin(w * s), np.cos(2 * w * s)
    ka = (8 - 3 * A * A + A * A * c2) * sn
    kb = (8 - 3 * B * B + B * B * c2) * sn
    x = A * c - 1j * m1 * A / (16 * w) * ka + 1j * m2 * A / (16 * w) * kb
    y = B * c + 1j * m1 * B / (16 * w) * ka - 1j * m2 * B / (16 * w) * kb
    return x, y


def rg_solution_limit(t, init: InitialData, params: ModelParams, sign: int = 1):
    """Manifold RG solution (x, y).

    Raises
    ------
    ManifoldViolation
        If b0 differs from sign*sqrt(mu1/mu2)*a0 by more than 1e-12 relative.
    ResonantDenominator
        If (mu1 - mu2)**2 == 4 omega**2.
    """
    r = _check_manifold(init, params, sign)
    alpha, beta = alpha_beta(params)
    w = params.omega
    m1, m2 = params.mu1, params.mu2
    A = init.a0
    s = np.asarray(t, dtype=float) - init.t0
    ca, sa = np.cos(alpha * s), np.sin(alpha * s)
    cb, sb = np.cos(beta * s), np.sin(beta * s)
    k1, k2 = m1 / (2 * w), m2 / (2 * w)
    x = (A * ca * cb + k1 * A * sa * sb - k2 * A * sa * sb
         + 1j * (A * sa * cb - k1 * A * ca * sb + k2 * A * ca * sb))
    y = (r * A * ca * cb + k1 * r * A * sa * sb - k2 * r * A * sa * sb
         + 1j * (-r * A * sa * cb - k1 * r * A * ca * sb + k2 * r * A * ca * sb))
    return x, y


@dataclass(frozen=True, eq=False)
class RGSolution:
    """A resummed closed-form solution bound to its parameters."""

    params: ModelParams
    init: InitialData
    branch: RGBranch
    alpha: float
    beta: float

    def positions(self, t):
        if self.branch.tag == "center":
            return rg_solution_center(t, self.init, self.params)
        return rg_solution_limit(t, self.init, self.params, self.branch.sign)

    def as_solution(self) -> ClosedFormSolution:
        return ClosedFormSolution(self.positions)

    def states(self, t) -> np.ndarray:
        return self.as_solution().states(t)

    __call__ = states


def rg_solution(init: InitialData, params: ModelParams,
                branch: RGBranch = RGBranch()) -> RGSolution:
    """Validate inputs for ``branch`` and bundle them with alpha, beta."""
    alpha, beta = alpha_beta(params)
    if branch.tag == "limit":
        _check_manifold(init, params, branch.sign)
    return RGSolution(params, init, branch, alpha, beta)


def toy_rg(t, t0: float, A: float, eps: float):
    """dy/dt + eps*y = 0 with y(t0) = A: exact, first-order and RG values.

    The RG value rebuilds A(tau) = A exp(-eps (tau - t0)) from the flow
    equation and evaluates A(tau)[1 - eps (t - tau)] at tau = t.
    """
    t = np.asarray(t, dtype=float)
    exact = A * np.exp(-eps * (t - t0))
    perturbative = A - eps * A * (t - t0)
    tau = t
    rg = A * np.exp(-eps * (tau - t0)) * (1 - eps * (t - tau))
    if exact.ndim == 0:
        return float(exact), float(perturbative), float(rg)
    return exact, perturbative, rg
