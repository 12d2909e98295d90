"""Exception hierarchy.

The split mirrors the CLI exit codes: ``InputError`` means the data is
malformed (wrong shape, wrong type), ``InconsistentDataError`` means it is
well formed but violates a structural invariant (asymmetric matrix,
non-unimodular form, failed congruence).
"""


class InvariantError(ValueError):
    """Base class for all errors raised by this package."""


class InputError(InvariantError):
    """Malformed input: wrong shape, wrong type, missing field."""


class InconsistentDataError(InvariantError):
    """Well-formed input that violates a required structural invariant."""


class DegenerateFormError(InconsistentDataError):
    """A symmetric form with determinant zero where a nondegenerate one is required."""


class CongruenceError(InconsistentDataError):
    """An integrality condition of the form ``a ≡ b (mod n)`` fails."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index
