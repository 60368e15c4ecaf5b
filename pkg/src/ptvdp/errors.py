"""Exception hierarchy shared by every module."""


class VdPError(Exception):
    """Base class for all package errors."""


class StepUnderflow(VdPError):
    """Adaptive step size fell below the allowed floor."""


class NonFinite(VdPError):
    """A state component overflowed or became NaN."""


class OutOfRange(VdPError, ValueError):
    """Requested time lies outside a solution's span."""


class SingularSystem(VdPError):
    """Flow relations are degenerate or inconsistent at the given point."""


class ManifoldViolation(VdPError, ValueError):
    """Initial data do not lie on the B = ±sqrt(mu1/mu2) A manifold."""


class ResonantDenominator(VdPError, ZeroDivisionError):
    """(mu1 - mu2)**2 == 4 omega**2."""


class TooShort(VdPError, ValueError):
    """Signal spans too few oscillation periods."""


class NoConvergence(VdPError):
    """Dense eigensolver failed to converge."""


class BadBracket(VdPError, ValueError):
    """Bisection bracket does not straddle the transition."""
