"""Exception types raised across the package."""


class DivisionByZero(ZeroDivisionError):
    """Inverting the zero scalar."""


class SpecializationPole(ZeroDivisionError):
    """A denominator vanishes at the chosen root of unity."""


class ParseError(ValueError):
    pass


class NotCentral(ValueError):
    """The Harish-Chandra map was applied to a non-central element."""


class UnsupportedCentralElement(ValueError):
    """No explicit Dirac-homotopy witness is known for this element."""


class TermLimitExceeded(RuntimeError):
    """A normal form grew past the configured term bound."""


class InvalidParameter(ValueError):
    pass


class RelationCheckFailed(ValueError):
    """Matrices do not satisfy the defining relations of U_q(sl2)."""


class NotInfinitesimalCharacter(ValueError):
    """The Casimir element does not act on the module by a scalar."""


class DimensionMismatch(ValueError):
    pass
