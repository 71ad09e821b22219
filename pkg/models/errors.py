"""Exception hierarchy shared by every sfs-monoids package."""

from typing import Any


class AlgebraError(Exception):
    """Base class for all library errors."""


# =============================================================================
# Construction Errors
# =============================================================================

class IndexOutOfRange(AlgebraError):
    """A table entry or element index lies outside the carrier."""


class NonAssociative(AlgebraError):
    """A Cayley table violates (ab)c = a(bc)."""

    def __init__(self, a: int, b: int, c: int):
        self.witness = (a, b, c)
        super().__init__(f"multiplication is not associative at ({a}, {b}, {c})")


class BadIdentity(AlgebraError):
    """The declared identity is not a two-sided identity."""


class ArityMismatch(AlgebraError):
    """Transformations of different arities were mixed."""


class NotIdempotent(AlgebraError):
    """An element required to be idempotent is not."""


class NotAMonoid(AlgebraError):
    """An operation that needs an identity element received a semigroup without one."""


class NotComposable(AlgebraError):
    """Two arrows, homomorphisms or 2-cells do not share the required endpoint."""


class InvalidHomomorphism(AlgebraError):
    """A map between semigroups does not preserve multiplication."""


class SignatureMismatch(AlgebraError):
    """Maps or cells that must share a source and target do not."""


class MissingUnit(AlgebraError):
    """A check needs a unit object but the category declares none."""


class NotSemiPointed(AlgebraError):
    """A functor fails the semi-pointed condition."""


class NotAConjugation(AlgebraError):
    """An element fails the conjugation equations."""


class PreconditionFailed(AlgebraError):
    """The inputs of a construction do not satisfy its hypotheses."""


class CertificateError(AlgebraError):
    """A category could not be certified as unital, complete and thin."""

    def __init__(self, failed: list[str]):
        self.failed = failed
        super().__init__("certification failed: " + ", ".join(failed))


# =============================================================================
# Verification Errors
# =============================================================================

class VerificationFailed(AlgebraError):
    """An equation that a construction relies on does not hold."""

    def __init__(self, equation: str, detail: str = ""):
        self.equation = equation
        message = f"verification failed: {equation}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class InternalDisagreement(AlgebraError):
    """Two independent computations of the same quantity differ."""


# =============================================================================
# Search Errors
# =============================================================================

class BudgetExceeded(AlgebraError):
    """A search ran out of candidates before completing.

    Attributes:
        partial: Whatever was found before the budget ran out
    """

    def __init__(self, message: str, partial: Any = None):
        self.partial = partial
        super().__init__(message)


class ClosureBudgetExceeded(BudgetExceeded):
    """A transformation monoid grew past the configured closure cap."""


# =============================================================================
# Corpus and Input Errors
# =============================================================================

class UnknownExample(AlgebraError):
    """The corpus has no example with the requested name."""


class ParamOutOfRange(AlgebraError):
    """An example parameter lies outside its registered bounds."""


class NotConstructible(AlgebraError):
    """The example exists only as documentation (infinite carrier)."""


class ParseError(AlgebraError):
    """A structure file could not be parsed."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


# Errors caused by the caller's input rather than by a property failing
INPUT_ERRORS = (
    ParseError,
    UnknownExample,
    ParamOutOfRange,
    NotConstructible,
    NotAMonoid,
    IndexOutOfRange,
    NonAssociative,
    BadIdentity,
    ArityMismatch,
    SignatureMismatch,
    InvalidHomomorphism,
    PreconditionFailed,
)
