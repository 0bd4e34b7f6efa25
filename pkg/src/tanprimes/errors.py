"""Exception types shared across the workbench."""


class TanPrimesError(Exception):
    """Base class for all workbench errors."""


class DomainError(TanPrimesError):
    """Input outside the mathematical domain of an operation."""


class PrecisionExhausted(TanPrimesError):
    """Requested working precision exceeds the configured cap."""


class FloorUndecidable(TanPrimesError):
    """An enclosure still straddles an integer at the precision cap.

    The straddled integer(s) are reported; the value is never silently
    rounded.
    """

    def __init__(self, lo_floor: int, hi_floor: int, prec: int):
        self.lo_floor = lo_floor
        self.hi_floor = hi_floor
        self.prec = prec
        if hi_floor == lo_floor + 1:
            msg = f"enclosure straddles integer {hi_floor} at {prec} bits"
        else:
            msg = (f"enclosure spans integers {lo_floor + 1}..{hi_floor} "
                   f"at {prec} bits")
        super().__init__(msg)

    @property
    def straddled(self) -> int:
        return self.hi_floor


class RangeError(TanPrimesError):
    """Inversion target outside the invertible range of the window."""


class NoConvergence(TanPrimesError):
    """Root tolerance unreachable within the precision cap."""


class ResourceError(TanPrimesError):
    """Operation would exceed the configured memory budget."""


class ConstructionFailed(TanPrimesError):
    """A construction-time self check failed (a bug, not an input error)."""


class ParamError(TanPrimesError):
    """Parameter set violates required side conditions.

    ``violations`` lists the failed inequalities verbatim.
    """

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("side conditions violated: " + "; ".join(violations))
