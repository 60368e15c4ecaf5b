"""Quantum Hamiltonian in a truncated oscillator basis and the PT diagnostic.

The Weyl-ordered operator

    H = P_x P_y + omega^2 X Y
        - i [ mu1/2 (1 - X^2)(Y P_y + P_y Y) + mu2/2 (XP_x + P_x X)(1 - Y^2) ]

is assembled from 1d ladder matrices by Kronecker products, with the x
factor in the first slot. Basis index n_x * n_max + n_y.

The order parameter is the fraction F of eigenvalues with a non-negligible
imaginary part. Eigenvalues at the edge of the truncated spectrum are
dominated by truncation, so by default F is taken over the half of the
spectrum with the smallest |E|; the unfiltered fraction is reported too.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
import scipy.linalg

from .errors import BadBracket, NoConvergence
from .model import ModelParams

IM_TOL = 1e-6
INTERIOR_FRACTION = 0.5
MAX_DENSE_DIM = 4096


@dataclass(frozen=True)
class BasisConfig:
    n_max: int = 12
    omega: float = 1.0

    def __post_init__(self):
        if int(self.n_max) != self.n_max or self.n_max < 2:
            raise ValueError("n_max must be an integer >= 2")
        if not self.omega > 0:
            raise ValueError("basis frequency must be positive")

    @property
    def dim(self) -> int:
        return self.n_max**2


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues sorted by real part, then imaginary part.

    Real parts that agree to 1e-12 relative count as equal for the ordering.
    """

    eigenvalues: np.ndarray
    max_residual: float | None = None
    eigenvectors: np.ndarray | None = field(default=None, repr=False)

    def __len__(self):
        return len(self.eigenvalues)


@dataclass(frozen=True)
class FractionReport:
    F: float
    im_tol: float
    interior_fraction: float
    F_unfiltered: float
    n_retained: int


@dataclass(frozen=True, eq=False)
class SweepResult:
    points: list[tuple[float, float]]
    basis: BasisConfig
    reports: list[FractionReport]

    @property
    def couplings(self) -> np.ndarray:
        return np.array([c for c, _ in self.points])

    @property
    def fractions(self) -> np.ndarray:
        return np.array([f for _, f in self.points])


def position_momentum_matrices(cfg: BasisConfig) -> tuple[np.ndarray, np.ndarray]:
    """Truncated X and P in the oscillator eigenbasis at frequency ``cfg.omega``.

    Only the last diagonal entry of [X, P] deviates from ``i``; that is the
    usual truncation defect.
    """
    n = np.arange(1, cfg.n_max)
    w = cfg.omega
    X = np.diag(np.sqrt(n / (2 * w)), 1).astype(complex)
    X = X + X.T
    P = np.diag(-1j * np.sqrt(w * n / 2), 1)
    P = P + P.conj().T
    return X, P


def build_hamiltonian(params: ModelParams, cfg: BasisConfig) -> np.ndarray:
    """Dense n_max^2 x n_max^2 matrix of the Weyl-ordered Hamiltonian."""
    X, P = position_momentum_matrices(cfg)
    eye = np.eye(cfg.n_max)
    g = eye - X @ X                 # 1 - X^2
    sym = X @ P + P @ X             # Weyl-ordered X P
    kron = np.kron
    return (kron(P, P) + params.omega**2 * kron(X, X)
            - 1j * (params.mu1 / 2 * kron(g, sym) + params.mu2 / 2 * kron(sym, g)))


def swap_permutation(n_max: int) -> np.ndarray:
    """Permutation matrix of the parity map |n_x, n_y> -> |n_y, n_x>."""
    idx = np.arange(n_max * n_max)
    nx, ny = np.divmod(idx, n_max)
    S = np.zeros((idx.size, idx.size))
    S[idx, ny * n_max + nx] = 1.0
    return S


def eigenvalues(H: np.ndarray, vectors: bool = False) -> Spectrum:
    """All eigenvalues of a dense complex matrix.

    Uses LAPACK ``zgeev`` (balancing, Hessenberg reduction, shifted QR).
    With ``vectors=True`` the right eigenvectors are kept and
    ``max_residual`` is max ||H v - lambda v|| / ||v||.

    Raises
    ------
    NoConvergence
        If the QR iteration fails.
    """
    H = np.array(H, dtype=complex)   # the solver works on its own copy
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ValueError("expected a square matrix")
    if H.shape[0] > MAX_DENSE_DIM:
        raise ValueError(f"dimension {H.shape[0]} exceeds dense budget {MAX_DENSE_DIM}")
    try:
        if vectors:
            w, v = scipy.linalg.eig(H, overwrite_a=False, check_finite=True)
        else:
            w = scipy.linalg.eigvals(H, overwrite_a=False, check_finite=True)
            v = None
    except (np.linalg.LinAlgError, scipy.linalg.LinAlgError) as exc:
        raise NoConvergence(str(exc)) from exc
    # real parts equal up to roundoff tie-break on the imaginary part
    grain = 1e-12 * max(1.0, float(np.abs(w).max(initial=0.0)))
    order = np.lexsort((w.imag, np.round(w.real / grain)))
    w = w[order]
    resid = None
    if v is not None:
        v = v[:, order]
        r = H @ v - v * w
        resid = float(np.max(np.linalg.norm(r, axis=0) / np.linalg.norm(v, axis=0)))
    return Spectrum(w, resid, v)


def fraction_complex(spec: Spectrum | np.ndarray, im_tol: float = IM_TOL,
                     interior_fraction: float = INTERIOR_FRACTION) -> FractionReport:
    """Fraction of eigenvalues with |Im E| > im_tol * max(1, |E|).

    Only the ``interior_fraction`` of eigenvalues smallest in |E| enters F.
    """
    if not 0 < interior_fraction <= 1:
        raise ValueError("interior_fraction must lie in (0, 1]")
    ev = np.asarray(getattr(spec, "eigenvalues", spec), dtype=complex)
    is_complex = np.abs(ev.imag) > im_tol * np.maximum(1.0, np.abs(ev))
    n_keep = max(1, int(round(interior_fraction * len(ev))))
    keep = np.argsort(np.abs(ev), kind="stable")[:n_keep]
    return FractionReport(float(np.mean(is_complex[keep])), im_tol, interior_fraction,
                          float(np.mean(is_complex)), n_keep)


def fraction_at(params: ModelParams, cfg: BasisConfig, im_tol: float = IM_TOL,
                interior_fraction: float = INTERIOR_FRACTION) -> FractionReport:
    return fraction_complex(eigenvalues(build_hamiltonian(params, cfg)), im_tol, interior_fraction)


def _sweep(couplings, make_params, cfg, im_tol, interior_fraction, workers):
    couplings = [float(c) for c in couplings]
    if len(couplings) == 0 or np.any(np.diff(couplings) <= 0):
        raise ValueError("coupling values must be strictly increasing")

    def one(c):
        try:
            return fraction_at(make_params(c), cfg, im_tol, interior_fraction)
        except NoConvergence as exc:
            err = NoConvergence(f"eigensolver failed at coupling {c}: {exc}")
            err.coupling = c
            raise err from exc

    if workers == 1:
        reports = [one(c) for c in couplings]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(one, couplings))
    return SweepResult([(c, r.F) for c, r in zip(couplings, reports)], cfg, reports)


def sweep_mu(mu_values: Sequence[float], cfg: BasisConfig, im_tol: float = IM_TOL,
             interior_fraction: float = INTERIOR_FRACTION,
             workers: int | None = None) -> SweepResult:
    """F along the PT-symmetric line mu1 = mu2 = mu."""
    return _sweep(mu_values, lambda m: ModelParams(cfg.omega, m, m), cfg,
                  im_tol, interior_fraction, workers)


def sweep_ratio(mu1: float, ratio_values: Sequence[float], cfg: BasisConfig,
                im_tol: float = IM_TOL, interior_fraction: float = INTERIOR_FRACTION,
                workers: int | None = None) -> SweepResult:
    """F against mu1/mu2 at fixed mu1 (mu2 = mu1 / ratio)."""
    if any(r <= 0 for r in ratio_values):
        raise ValueError("ratios must be positive")
    return _sweep(ratio_values, lambda r: ModelParams(cfg.omega, mu1, mu1 / r), cfg,
                  im_tol, interior_fraction, workers)


def critical_mu(bracket: tuple[float, float], cfg: BasisConfig | None = None,
                im_tol: float = IM_TOL, interior_fraction: float = INTERIOR_FRACTION,
                width: float = 1e-3,
                fraction: Callable[[float], float] | None = None) -> float:
    """Bisect for the coupling where F first becomes nonzero.

    ``fraction`` overrides the default F(mu) on the line mu1 = mu2 = mu. The
    result is the midpoint of the final bracket; a transition estimate
    should be rechecked at a larger basis.

    Raises
    ------
    BadBracket
        Unless F(lo) == 0 and F(hi) > 0.
    """
    if fraction is None:
        if cfg is None:
            raise ValueError("either cfg or fraction is required")

        def fraction(m):
            return fraction_at(ModelParams(cfg.omega, m, m), cfg, im_tol, interior_fraction).F

    lo, hi = map(float, bracket)
    if not hi > lo:
        raise BadBracket("bracket must satisfy lo < hi")
    if fraction(lo) != 0:
        raise BadBracket(f"F({lo}) > 0: lower end already in the broken phase")
    if not fraction(hi) > 0:
        raise BadBracket(f"F({hi}) == 0: upper end still in the unbroken phase")
    while hi - lo >= width:
        mid = 0.5 * (lo + hi)
        if fraction(mid) > 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
