"""Exception types for numerical failures.

ValueError keeps its usual role for bad arguments (domain violations,
malformed queries). Subclasses of NumericalError mean a computation could
not be completed reliably; the CLI maps them to exit code 3.
"""


class NumericalError(RuntimeError):
    """A numerical procedure failed to produce a trustworthy result."""


class ConvergenceError(NumericalError):
    """Series summation exceeded the defensive term limit."""


class ScanOverflowError(NumericalError):
    """Zero scan ran past the maximum abscissa before finding enough zeros."""


class BracketError(NumericalError):
    """A root bracket could not be established where one was expected."""


class PoleError(NumericalError):
    """Evaluation was requested too close to a pole."""


class BranchError(NumericalError):
    """A real fractional power was requested of a non-positive quantity."""


class PrecisionLossError(NumericalError):
    """Cancellation destroyed too many digits to certify the result."""
