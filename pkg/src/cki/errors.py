"""Exception types shared across the package."""


class CkiError(Exception):
    """Base class for domain-level failures."""


class TailNotCertifiableError(CkiError):
    """A truncation tail could not be certified below the requested tolerance.

    Carries the best bound that was achieved and the radius at which the
    search stopped.
    """

    def __init__(self, message, best_bound=None, radius=None):
        super().__init__(message)
        self.best_bound = best_bound
        self.radius = radius


class UnsupportedRouteError(CkiError):
    """A coefficient-construction route does not apply to the given kernel."""


class WienerConditionError(CkiError):
    """The periodized symbol has a zero; its reciprocal is not summable."""


class SingularSectionError(CkiError):
    """A truncated interpolation system is numerically singular."""

    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition


class DegreeCapError(CkiError):
    """A degree/order parameter exceeds the configured conditioning cap."""
