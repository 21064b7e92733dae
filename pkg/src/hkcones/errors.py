"""Exception hierarchy.

Everything raised on purpose by this package derives from ``HKConesError``.
``DomainError`` marks failures that are answers about the input (a class is
not big, a fan is truncated, ...) rather than programming or usage errors;
the CLI maps them to exit code 1.
"""


class HKConesError(Exception):
    """Base class for all package errors."""


class DomainError(HKConesError):
    """The input is well formed but the requested object does not exist."""


# scalar
class DegenerateQuadratic(HKConesError):
    pass


class IncompatibleRadicals(HKConesError):
    pass


class ScalarParseError(HKConesError, ValueError):
    pass


# lattice
class DimensionMismatch(HKConesError):
    pass


class SingularForm(DomainError):
    pass


# model
class UnknownFixture(DomainError):
    pass


class FixtureError(DomainError):
    """A fixture failed validation or could not be parsed."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


# zariski / cones / chambers / walk
class NotPseudoEffective(DomainError):
    pass


class IncompleteExceptionalData(DomainError):
    pass


class NotBig(DomainError):
    pass


class NotMovable(DomainError):
    pass


class NotAmple(DomainError):
    pass


class RankUnsupported(DomainError):
    pass


class TruncationExceeded(DomainError):
    pass


class EmptyCone(DomainError):
    pass
