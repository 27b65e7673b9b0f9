"""Exception types raised by ldhelix."""


class LDHelixError(ValueError):
    """Base class for every error raised by the package."""


class DomainError(LDHelixError):
    """An argument lies outside the domain of the function."""


class UnsupportedParametersError(LDHelixError):
    """A parameter combination that has no closed form here (e.g. delta != 0 with k != 1)."""


class DegenerateHelixError(LDHelixError):
    """k = 0 collapses the helix; curve-level operations refuse it."""


class PoleError(LDHelixError):
    """The rational Riccati solution is evaluated at (or too near) one of its poles."""

    def __init__(self, s, distance):
        super().__init__(
            f"Riccati solution has a pole at s={s!r} "
            f"(phase is {distance:.3e} rad from an odd multiple of pi)")
        self.s = s
        self.distance = distance


class DegenerateQuadrupleError(LDHelixError):
    """The quadruple discriminant f1*f4 - f2*f3 vanishes."""


class QuadratureError(LDHelixError):
    """Adaptive quadrature did not reach the requested tolerance."""

    def __init__(self, message, achieved):
        super().__init__(f"{message} (achieved abs. error estimate {achieved:.3e})")
        self.achieved = achieved


class AlignmentError(LDHelixError):
    """Point sets are too degenerate for a unique rigid alignment."""
