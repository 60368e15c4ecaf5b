# A linear toy problem shows why naive perturbation theory fails at late times.
#
#     dy/dt = -eps * y,   y(t0) = A
#
# The first-order series A - eps*A*(t - t0) is fine while eps*t is small and
# useless afterwards. Letting the amplitude depend on a reference time tau and
# demanding that y not depend on tau gives dA/dtau = -eps*A, which resums the
# series into the exact exponential.
import numpy as np

from ptvdp import toy_rg

eps, A = 0.1, 1.0
t = np.array([0.0, 1.0, 5.0, 10.0, 20.0, 50.0])
exact, pert, rg = toy_rg(t, 0.0, A, eps)

print(f"{'t':>6} {'exact':>12} {'first order':>12} {'resummed':>12}")
for row in zip(t, exact, pert, rg):
    print("{:6.1f} {:12.6f} {:12.6f} {:12.6f}".format(*row))

# at t = 50 the series predicts -4 for a quantity that never changes sign
print("resummed == exact everywhere:", np.array_equal(exact, rg))
