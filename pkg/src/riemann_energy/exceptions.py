"""Exception types raised by the library."""


class CoincidentPoints(ValueError):
    """Two points of a configuration are (numerically) the same point.

    The pairwise energy of such a configuration is infinite.  ``pair`` holds
    the offending indices when the error comes from an energy sum.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class ConvergenceFailure(RuntimeError):
    """A quadrature or extrapolation did not reach the requested tolerance."""


class RootFindingFailure(RuntimeError):
    """Computed roots fail the residual criterion."""


class DegreeOutOfRange(ValueError):
    """Polynomial degree outside the supported range ``1 <= N <= 2000``."""


class TooManyRejections(RuntimeError):
    """More than 1% of Monte Carlo samples at some degree were degenerate."""
