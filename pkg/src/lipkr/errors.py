"""Exception hierarchy.

Every error raised by the library derives from :class:`LipKRError`; the CLI
maps the three families below onto exit codes 2, 3 and 4.
"""


class LipKRError(Exception):
    """Base class for all library errors."""


class ParseError(LipKRError):
    """Malformed input file or value."""


class DomainError(LipKRError):
    """Input is well formed but violates a mathematical precondition."""


class BudgetExceeded(LipKRError):
    """An exhaustive procedure refused an input that is too large."""


# metric
class NotSymmetric(DomainError):
    pass


class NonPositiveDistance(DomainError):
    pass


class TriangleViolation(DomainError):
    def __init__(self, x, y, z, msg=None):
        self.triple = (x, y, z)
        super().__init__(msg or f"rho({x},{z}) > rho({x},{y}) + rho({y},{z})")


class EntryOutOfRange(DomainError):
    pass


class RetryLimitExceeded(DomainError):
    pass


# assignment
class SupplyMismatch(DomainError):
    pass


# admissible
class UnknownPoint(DomainError):
    pass


class NotAdmissible(DomainError):
    pass


class NotATree(DomainError):
    pass


class BadOrientation(DomainError):
    pass


class NotStrict(DomainError):
    pass


class NotGeneric(DomainError):
    def __init__(self, msg, witness=None):
        self.witness = witness
        super().__init__(msg)


# faces
class ArityMismatch(DomainError):
    pass


class InternalContradiction(DomainError):
    pass


class FormulaMismatch(DomainError):
    pass


class NotWhite(DomainError):
    pass


# norms
class SamePoint(DomainError):
    pass


class NotBalanced(DomainError):
    pass


# triangulate
class RegularityViolation(DomainError):
    def __init__(self, pair, msg=None):
        self.pair = pair
        super().__init__(msg or f"pair {pair} is not strictly below the supporting plane")


class EmptyPart(DomainError):
    pass


# classify
class SizeMismatch(DomainError):
    pass
