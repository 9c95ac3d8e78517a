"""Exception types raised across the package."""


class MonoquarticError(Exception):
    """Base class for all package errors."""


class ZeroInput(MonoquarticError, ValueError):
    pass


class NegativeInput(MonoquarticError, ValueError):
    pass


class InvalidTrinomial(MonoquarticError, ValueError):
    """Raised when a or d is zero."""


class FactorizationTimeout(MonoquarticError, ArithmeticError):
    """A cofactor survived trial division and the Pollard-rho iteration cap."""

    def __init__(self, n, cofactor):
        super().__init__(f"could not split cofactor {cofactor} of {n}")
        self.n = n
        self.cofactor = cofactor


class DegreeTooSmall(MonoquarticError, ValueError):
    pass


class ModulusMismatch(MonoquarticError, ValueError):
    pass


class NotSquarefree(MonoquarticError, ValueError):
    pass


class NotIrreducible(MonoquarticError, ValueError):
    pass


class DegenerateDiscriminant(MonoquarticError, ValueError):
    pass


class NoIntegerRoot(MonoquarticError, ValueError):
    pass
