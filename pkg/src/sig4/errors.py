"""Exception types raised by the numerical layers."""


class Sig4Error(Exception):
    """Base class for all errors raised by :mod:`sig4`."""


class DomainError(Sig4Error, ValueError):
    """An argument lies outside the domain an operation supports."""


class ConvergenceError(Sig4Error, ArithmeticError):
    """An iterative method failed to reach its tolerance within its cap."""


class PoleError(DomainError):
    """The evaluation point is too close to a pole (or other singular point).

    ``distance`` is the distance to the nearest offending point and ``guard``
    names the guard that tripped.
    """

    def __init__(self, guard: str, distance: float, radius: float):
        self.guard = guard
        self.distance = distance
        self.radius = radius
        super().__init__(
            f"{guard}: distance {distance:.3e} to nearest singular point "
            f"is below guard radius {radius:.1e}"
        )
