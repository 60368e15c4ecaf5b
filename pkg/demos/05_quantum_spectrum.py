# The quantum Hamiltonian in a truncated oscillator basis.
#
# At zero coupling the spectrum is omega * (n_u - n_v): the integers, each
# highly degenerate. Equal couplings keep a PT symmetry, so the spectrum is
# closed under complex conjugation; F counts the eigenvalues that left the
# real axis.
import numpy as np

from ptvdp import (BasisConfig, ModelParams, build_hamiltonian, eigenvalues, fraction_complex,
                   sweep_mu, sweep_ratio)
from ptvdp.quantum import swap_permutation

cfg = BasisConfig(n_max=16)
ev = eigenvalues(build_hamiltonian(ModelParams(1.0, 0.0, 0.0), cfg)).eigenvalues
print("mu = 0, eigenvalues nearest 0, +-1, +-2:",
      [float(np.round(ev[np.abs(ev - k).argmin()].real, 12)) for k in (-2, -1, 0, 1, 2)])

cfg = BasisConfig(n_max=12)
H = build_hamiltonian(ModelParams(1.0, 0.5, 0.5), cfg)
S = swap_permutation(cfg.n_max)
print("PT identity residual at mu = 0.5:", np.abs(S @ H.conj() @ S - H).max())
spec = eigenvalues(H, vectors=True)
print("eigen residual:", f"{spec.max_residual:.1e}", " F:", fraction_complex(spec))

res = sweep_mu(np.linspace(0, 2, 11), cfg)
print("\nF along mu1 = mu2 = mu")
for (mu, F), rep in zip(res.points, res.reports):
    print(f"  mu={mu:4.2f}  F={F:.3f}  (unfiltered {rep.F_unfiltered:.3f})")

res = sweep_ratio(0.01, [0.25, 0.5, 1.0, 2.0, 4.0], cfg)
print("\nF against mu1/mu2 at mu1 = 0.01")
for ratio, F in res.points:
    print(f"  ratio={ratio:4.2f}  F={F:.3f}")
