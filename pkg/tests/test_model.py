import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from ptvdp import (ModelParams, PhaseState, eom_rhs, hamiltonian_value,
                   momenta_from_velocities, pt_image_value)
from ptvdp.model import hamiltonian_canonical

x, y, vx, vy, px, py = sp.symbols("x y vx vy px py")
w, m1, m2 = sp.symbols("omega mu1 mu2", real=True)
I = sp.I

H_SYM = px * py + w**2 * x * y - I * (m1 * (1 - x**2) * y * py + m2 * (1 - y**2) * x * px)

# The two equations of motion typed in term by term, independent of the code.
AX_SYM = (-w**2 * x + I * m1 * (1 - x**2) * vx - I * m2 * (1 - y**2) * vx
          - m1 * m2 * (x * (1 - x**2) * (1 - y**2) - 2 * x * y**2 * (1 - x**2)))
AY_SYM = (-w**2 * y - I * m1 * (1 - x**2) * vy + I * m2 * (1 - y**2) * vy
          - m1 * m2 * (y * (1 - x**2) * (1 - y**2) - 2 * x**2 * y * (1 - y**2)))


def _hamilton_accelerations():
    """x'' and y'' obtained from Hamilton's equations of H, as functions of velocities."""
    qdot = {x: sp.diff(H_SYM, px), y: sp.diff(H_SYM, py),
            px: -sp.diff(H_SYM, x), py: -sp.diff(H_SYM, y)}
    ax = sum(sp.diff(qdot[x], q) * qdot[q] for q in qdot)
    ay = sum(sp.diff(qdot[y], q) * qdot[q] for q in qdot)
    mom = {px: vy + I * m1 * (1 - x**2) * y, py: vx + I * m2 * (1 - y**2) * x}
    return [sp.expand(e.subs(mom, simultaneous=True)) for e in (ax, ay)]


_AX_HAM, _AY_HAM = _hamilton_accelerations()
_eom_display = sp.lambdify((x, y, vx, vy, w, m1, m2), [AX_SYM, AY_SYM], "numpy")
_eom_hamilton = sp.lambdify((x, y, vx, vy, w, m1, m2), [_AX_HAM, _AY_HAM], "numpy")
_dH_dp = sp.lambdify((x, y, px, py, w, m1, m2),
                     [sp.diff(H_SYM, px), sp.diff(H_SYM, py)], "numpy")


def _random_state(rng, scale=1.5):
    z = rng.normal(size=4) * scale + 1j * rng.normal(size=4) * scale
    return PhaseState(float(rng.uniform(-5, 5)), *z)


complexes = st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False)
couplings = st.floats(-1, 1, allow_nan=False)
omegas = st.floats(0.2, 3)


def test_harmonic_accelerations():
    s = PhaseState(0.0, 1, 1, 0, 0)
    assert eom_rhs(s, ModelParams(1, 0, 0)) == (-1, -1)


def test_nonlinear_terms_vanish_at_unit_x_and_zero_y():
    assert eom_rhs(PhaseState(0.0, 1, 0, 0, 0), ModelParams(1, 0.01, 0.02)) == (-1, 0)


def test_eom_matches_displayed_equations(rng):
    p = ModelParams(1.3, 0.3, 0.7)
    for _ in range(20):
        s = _random_state(rng)
        expected = _eom_display(s.x, s.y, s.vx, s.vy, p.omega, p.mu1, p.mu2)
        np.testing.assert_allclose(eom_rhs(s, p), expected, rtol=1e-13, atol=1e-12)


def test_hamilton_consistency_on_random_draws(rng):
    # displayed EOM == Hamilton's equations of H composed with the momentum map
    for _ in range(100):
        s = _random_state(rng)
        p = ModelParams(rng.uniform(0.2, 3), rng.uniform(-1, 1), rng.uniform(-1, 1))
        ours = np.array(eom_rhs(s, p))
        ref = np.array(_eom_hamilton(s.x, s.y, s.vx, s.vy, p.omega, p.mu1, p.mu2))
        scale = 1 + np.abs(ref).max()
        assert np.abs(ours - ref).max() < 1e-12 * scale


def test_momenta_free_limit():
    s = PhaseState(0.0, 0.3 + 1j, -2.0, 0.5j, 1.5)
    m = momenta_from_velocities(s, ModelParams(1, 0, 0))
    assert (m.px, m.py) == (s.vy, s.vx)


def test_momenta_at_unit_positions():
    s = PhaseState(0.0, 1, 1, 0.7 - 0.1j, -3j)
    m = momenta_from_velocities(s, ModelParams(2, 0.4, -0.9))
    assert (m.px, m.py) == (s.vy, s.vx)


@settings(max_examples=60, deadline=None)
@given(complexes, complexes, complexes, complexes, omegas)
def test_momenta_reproduce_velocities(zx, zy, zvx, zvy, omega):
    p = ModelParams(omega, 0.2, 0.5)
    s = PhaseState(0.0, zx, zy, zvx, zvy)
    m = momenta_from_velocities(s, p)
    vx_back, vy_back = _dH_dp(zx, zy, m.px, m.py, p.omega, p.mu1, p.mu2)
    assert abs(vx_back - zvx) < 1e-12 * (1 + abs(zvx) + abs(m.px) + abs(m.py))
    assert abs(vy_back - zvy) < 1e-12 * (1 + abs(zvy) + abs(m.px) + abs(m.py))


def test_hamiltonian_examples():
    assert hamiltonian_value(PhaseState(0.0, 1, 1, 0, 0), ModelParams(1, 0, 0)) == 1
    assert hamiltonian_value(PhaseState(0.0, 1, 0, 0, 3), ModelParams(2, 0, 0)) == 0


def test_hamiltonian_matches_symbolic(rng):
    p = ModelParams(0.8, 0.25, -0.4)
    Hf = sp.lambdify((x, y, px, py, w, m1, m2), H_SYM, "numpy")
    for _ in range(10):
        s = _random_state(rng)
        m = momenta_from_velocities(s, p)
        ref = Hf(s.x, s.y, m.px, m.py, p.omega, p.mu1, p.mu2)
        assert abs(hamiltonian_value(s, p) - ref) < 1e-12 * (1 + abs(ref))


def test_pt_image_difference_off_symmetry():
    p = ModelParams(1, 0.1, 0.3)
    X, Y, PX, PY = 2.0, 0.0, 1.0, 0.0
    diff = pt_image_value(X, Y, PX, PY, p) - hamiltonian_canonical(X, Y, PX, PY, p)
    expected = -1j * (p.mu1 - p.mu2) * (1 - Y**2) * X * PX
    assert abs(diff - expected) < 1e-15


def test_pt_image_rejects_complex_points():
    with pytest.raises(ValueError):
        pt_image_value(1.0, 1j, 0.0, 0.0, ModelParams(1, 0.1, 0.1))


reals = st.floats(-3, 3, allow_nan=False)


@settings(max_examples=80, deadline=None)
@given(reals, reals, reals, reals, omegas, couplings)
def test_pt_invariance_at_equal_couplings(X, Y, PX, PY, omega, mu):
    p = ModelParams(omega, mu, mu)
    h = hamiltonian_canonical(X, Y, PX, PY, p)
    assert abs(pt_image_value(X, Y, PX, PY, p) - h) <= 1e-12 * (1 + abs(h))


@settings(max_examples=80, deadline=None)
@given(reals, reals, reals, reals, omegas)
def test_pt_invariance_in_hermitian_limit(X, Y, PX, PY, omega):
    p = ModelParams(omega, 0, 0)
    assert pt_image_value(X, Y, PX, PY, p) == pytest.approx(hamiltonian_canonical(X, Y, PX, PY, p),
                                                            rel=1e-14, abs=1e-14)


def test_pt_broken_when_couplings_differ(rng):
    # converse direction: some real point distinguishes H from its PT image
    for _ in range(20):
        mu1, mu2 = rng.uniform(-1, 1, size=2)
        p = ModelParams(1.0, mu1, mu2)
        pts = rng.uniform(-3, 3, size=(50, 4))
        gaps = [abs(pt_image_value(*q, p) - hamiltonian_canonical(*q, p)) for q in pts]
        assert max(gaps) > 1e-3 * abs(mu1 - mu2)


@settings(max_examples=60, deadline=None)
@given(complexes, complexes, complexes, complexes, complexes, omegas)
def test_hermitian_limit_is_linear(zx, zy, zvx, zvy, lam, omega):
    p = ModelParams(omega, 0, 0)
    s = PhaseState(0.0, zx, zy, zvx, zvy)
    scaled = PhaseState(0.0, lam * zx, lam * zy, lam * zvx, lam * zvy)
    a = np.array(eom_rhs(s, p))
    b = np.array(eom_rhs(scaled, p))
    assert np.abs(b - lam * a).max() <= 1e-12 * (1 + np.abs(lam * a).max())


def test_invalid_parameters():
    with pytest.raises(ValueError):
        ModelParams(0, 0.1, 0.1)
    with pytest.raises(ValueError):
        PhaseState(0.0, np.inf, 0, 0, 0)
