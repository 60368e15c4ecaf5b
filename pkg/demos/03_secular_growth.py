# The first-order perturbative solution carries a term growing like
# (t - t0) cos(omega (t - t0)). Its coefficient is available in closed form
# and the difference to the integrated orbit grows without bound.
#
# Initial data on the line B0 = sqrt(mu1/mu2) A0 keep the integrated orbit
# bounded for long runs, so we use them here.
import numpy as np

from ptvdp import (InitialData, IntegratorConfig, ModelParams, integrate,
                   perturbative_solution, secular_coefficient)

params = ModelParams(1.0, 0.01, 0.02)
init = InitialData(0.0, 1.0, np.sqrt(0.5))
cx, cy = secular_coefficient(init, params)
print(f"secular coefficients: cx={cx:.5f}  cy={cy:.5f}")

traj = integrate(init, params, IntegratorConfig(t_end=1000.0))
t = np.linspace(0, 1000, 100001)
err = np.abs(perturbative_solution(t, init, params)[0] - traj.states(t)[:, 0])
for T in (10, 100, 300, 1000):
    print(f"max |x_pert - x_num| on [0, {T:4d}] = {err[t <= T].max():.4f}")

# On one period the error is second order in the couplings.
def short_error(m1, m2):
    p = ModelParams(1.0, m1, m2)
    tr = integrate(InitialData(), p, IntegratorConfig(1e-12, 1e-12, t_end=2 * np.pi))
    s = np.linspace(0, 2 * np.pi, 1001)
    return np.abs(perturbative_solution(s, InitialData(), p)[0] - tr.states(s)[:, 0]).max()

print("halving both couplings shrinks the one-period error by",
      round(short_error(0.01, 0.02) / short_error(0.005, 0.01), 2))
