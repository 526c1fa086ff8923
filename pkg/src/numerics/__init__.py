"""Root finding and the adaptive ODE oracle."""

from .errors import MaxIterations, NoBracket, NumericalError, StepLimit
from .root_finding import find_root
from .tolerances import ToleranceConfig
from .integrator import IvpSolution, TerminationReason, integrate_radial_fall

__all__ = [
    "IvpSolution",
    "MaxIterations",
    "NoBracket",
    "NumericalError",
    "StepLimit",
    "TerminationReason",
    "ToleranceConfig",
    "find_root",
    "integrate_radial_fall",
]
