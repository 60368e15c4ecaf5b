"""First-order perturbative solution and its secular growth.

The expansion is x = x00 + (mu1/2) x10 + (mu2/2) x01 + O(mu^2), and likewise
for y. The first-order pieces carry a term proportional to (t - t0) that grows
without bound: the secular term removed later by the RG resummation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import InitialData, ModelParams


@dataclass(frozen=True)
class PerturbativeTerms:
    x00: complex
    x10: complex
    x01: complex
    y00: complex
    y10: complex
    y01: complex


def zeroth_order(t, init: InitialData, params: ModelParams):
    """Unperturbed harmonic motion (x00, y00)."""
    c = np.cos(params.omega * (np.asarray(t, dtype=float) - init.t0))
    return init.a0 * c + 0j, init.b0 * c + 0j


def _first_order_block(amp, s, omega):
    """Bracket shared by all four first-order terms.

    Returns ``2(-4 + amp^2) s omega cos(omega s)
    + (8 - 3 amp^2 + amp^2 cos(2 omega s)) sin(omega s)``.
    """
    ws = omega * s
    return (2 * (-4 + amp**2) * s * omega * np.cos(ws)
            + (8 - 3 * amp**2 + amp**2 * np.cos(2 * ws)) * np.sin(ws))


def first_order_arrays(t, init: InitialData, params: ModelParams):
    """Vectorised (x10, x01, y10, y01)."""
    s = np.asarray(t, dtype=float) - init.t0
    w = params.omega
    A, B = init.a0, init.b0
    blk_a = _first_order_block(A, s, w)
    blk_b = _first_order_block(B, s, w)
    x10 = -1j * A / (8 * w) * blk_a
    x01 = 1j * A / (8 * w) * blk_b
    y10 = 1j * B / (8 * w) * blk_a
    y01 = -1j * B / (8 * w) * blk_b
    return x10, x01, y10, y01


def first_order_terms(t: float, init: InitialData, params: ModelParams) -> PerturbativeTerms:
    """All six perturbative components at a single time."""
    x00, y00 = zeroth_order(t, init, params)
    x10, x01, y10, y01 = first_order_arrays(t, init, params)
    return PerturbativeTerms(*(complex(v) for v in (x00, x10, x01, y00, y10, y01)))


def perturbative_solution(t, init: InitialData, params: ModelParams):
    """Naive first-order solution (x, y); accepts scalar or array ``t``."""
    x00, y00 = zeroth_order(t, init, params)
    x10, x01, y10, y01 = first_order_arrays(t, init, params)
    h1, h2 = params.mu1 / 2, params.mu2 / 2
    return x00 + h1 * x10 + h2 * x01, y00 + h1 * y10 + h2 * y01


def secular_coefficient(init: InitialData, params: ModelParams) -> tuple[complex, complex]:
    """Coefficients of (t - t0) cos(omega (t - t0)) in x and y."""
    A, B = init.a0, init.b0
    m1, m2 = params.mu1, params.mu2
    cx = -1j * m1 * A / 8 * (-4 + A**2) + 1j * m2 * A / 8 * (-4 + B**2)
    cy = 1j * m1 * B / 8 * (-4 + A**2) - 1j * m2 * B / 8 * (-4 + B**2)
    return complex(cx), complex(cy)
