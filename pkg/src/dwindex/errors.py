"""Exception types shared across the package."""


class DimensionMismatch(ValueError):
    """A point, functional or operator has the wrong dimension for its space."""


class NonSymmetric(ValueError):
    """The vertex set is not closed under negation."""


class Degenerate(ValueError):
    """The vertex set does not span the ambient space."""


class NotExtreme(ValueError):
    """A listed vertex lies in the convex hull of the remaining ones."""


class NotUnitNorm(ValueError):
    """The point is not on the unit sphere of the space."""


class BadParameter(ValueError):
    """A parameter is outside its admissible range."""


class LPFailure(RuntimeError):
    """The simplex solver exceeded its cycling guard; indicates a bug."""
