"""Classical and quantum numerics for a non-Hermitian 2d van der Pol oscillator.

Submodules
----------
model         Hamiltonian, equations of motion, momenta, PT check.
integrate     Adaptive Dormand-Prince integration with dense output.
perturbation  First-order perturbative solution and its secular growth.
rg            Renormalization constants, flow relations, resummed solutions.
compare       Error norms and envelope-based orbit classification.
quantum       Truncated-basis Hamiltonian, spectra and the complex fraction F.
cli           ``ptvdp`` command-line front end.
"""

from .compare import (ErrorReport, OrbitClass, classify_orbit, envelope, log_slope,
                      trajectory_error)
from .errors import (BadBracket, ManifoldViolation, NoConvergence, NonFinite, OutOfRange,
                     ResonantDenominator, SingularSystem, StepUnderflow, TooShort, VdPError)
from .integrate import IntegratorConfig, Trajectory, integrate, sample_at
from .model import (InitialData, ModelParams, MomentumState, PhaseState, eom_rhs,
                    hamiltonian_value, momenta_from_velocities, pt_image_value)
from .perturbation import (PerturbativeTerms, first_order_terms, perturbative_solution,
                           secular_coefficient, zeroth_order)
from .quantum import (BasisConfig, FractionReport, Spectrum, SweepResult, build_hamiltonian,
                      critical_mu, eigenvalues, fraction_complex, position_momentum_matrices,
                      sweep_mu, sweep_ratio)
from .rg import (RenormConstants, RGBranch, RGSolution, alpha_beta, amplitude_flow, flow_rhs,
                 renorm_constants, rg_solution, rg_solution_center, rg_solution_limit, toy_rg)
from .solutions import ClosedFormSolution, TabulatedSolution

__version__ = "0.1.0"

__all__ = [
    "BadBracket", "BasisConfig", "ClosedFormSolution", "ErrorReport", "FractionReport",
    "InitialData", "IntegratorConfig", "ManifoldViolation", "ModelParams", "MomentumState",
    "NoConvergence", "NonFinite", "OrbitClass", "OutOfRange", "PerturbativeTerms", "PhaseState",
    "RGBranch", "RGSolution", "RenormConstants", "ResonantDenominator", "SingularSystem",
    "Spectrum", "StepUnderflow", "SweepResult", "TabulatedSolution", "TooShort", "Trajectory",
    "VdPError", "alpha_beta", "amplitude_flow", "build_hamiltonian", "classify_orbit",
    "critical_mu", "eigenvalues", "envelope", "eom_rhs", "first_order_terms", "flow_rhs",
    "fraction_complex", "hamiltonian_value", "integrate", "log_slope", "momenta_from_velocities",
    "perturbative_solution", "position_momentum_matrices", "pt_image_value", "renorm_constants",
    "rg_solution", "rg_solution_center", "rg_solution_limit", "sample_at", "secular_coefficient",
    "sweep_mu", "sweep_ratio", "toy_rg", "trajectory_error", "zeroth_order",
]
