"""Domain-specific exceptions raised by the simulation chain."""


class PilotPlacementError(ValueError):
    """A pilot tone falls inside the quantum signal band."""


class LowSnrError(RuntimeError):
    """Pilot trace power is too close to the in-band noise floor."""


class TimingAmbiguityError(RuntimeError):
    """Symbol-timing correlation peak is not clearly separated."""


class CalibrationMismatchError(ValueError):
    """A calibration record is used with a differently configured chain."""


class NonPositiveShotUnitError(RuntimeError):
    """Vacuum minus electronic variance came out non-positive."""


class ConvergenceError(RuntimeError):
    """An iterative search exhausted its iteration budget."""


class InsufficientDataError(ValueError):
    """Too few samples for the requested statistical estimate."""
