"""Exception hierarchy shared by every module of the package."""


class GraphEnergyError(Exception):
    """Base class for all errors raised by graphenergy."""


class InvalidOrderError(GraphEnergyError, ValueError):
    """A graph or family was requested with an unusable number of vertices."""


class InvalidSpecError(GraphEnergyError, ValueError):
    """Malformed construction parameters (superpath parts, adjacency input...)."""


class CapacityError(GraphEnergyError):
    """The requested object exceeds a configured size limit."""


class RegularityError(GraphEnergyError, ValueError):
    """An operand that must be regular is not."""


class NumericFailure(GraphEnergyError, ArithmeticError):
    """The eigensolver did not converge within its sweep budget."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


class UndecidableError(GraphEnergyError):
    """Isomorphism could not be decided within the size cap or node budget."""


class ParseError(GraphEnergyError, ValueError):
    """A graph expression could not be parsed."""

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        detail = f"{message} at position {position}"
        if expected:
            detail += f"; expected one of: {', '.join(expected)}"
        super().__init__(detail)
        self.position = position
        self.expected = expected
