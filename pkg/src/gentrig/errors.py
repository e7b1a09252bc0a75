"""Exception hierarchy shared by every module in the package."""


class DomainError(ValueError):
    """An argument or parameter lies outside the supported domain."""


class ConvergenceError(ArithmeticError):
    """An iterative or truncated procedure failed to reach its tolerance."""


class NonConvergent(ConvergenceError):
    """Hypergeometric series exhausted its term budget on every route."""


class NoConvergence(ConvergenceError):
    """Double-exponential quadrature did not settle by its last level."""


class MaxIterExceeded(ConvergenceError):
    """Root finder hit its iteration cap."""


class BracketInvalid(DomainError):
    """Target value is not bracketed by the function values at the ends."""


class DomainViolation(DomainError):
    """A predicate was evaluated at a point outside its declared region."""


class UnknownPredicate(KeyError):
    """No predicate is registered under the requested id."""
