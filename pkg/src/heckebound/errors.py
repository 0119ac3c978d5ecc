"""Exception hierarchy shared by all modules."""


class HeckeboundError(Exception):
    """Base class; ``code`` is the machine-readable name used in reports."""

    code = "error"


class InvalidSystemError(HeckeboundError, ValueError):
    code = "invalid_system"


class InvalidInputError(HeckeboundError, ValueError):
    code = "invalid_input"


class MixedSignError(HeckeboundError, ArithmeticError):
    """A vector expected to be a root has coordinates of both signs."""

    code = "mixed_sign"


class BudgetExceeded(HeckeboundError):
    """An enumeration hit its resource budget; ``partial`` holds what was found."""

    code = "budget_exceeded"

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class SequenceInvalid(InvalidInputError):
    code = "sequence_invalid"


class IndicesNotIncreasing(SequenceInvalid):
    code = "indices_not_increasing"


class IndexOutOfRange(SequenceInvalid):
    code = "index_out_of_range"


class NonConstantOffDiagonal(InvalidInputError):
    code = "non_constant_off_diagonal"


class InvariantViolation(HeckeboundError):
    """A property guaranteed by the theory failed; always an implementation bug."""

    code = "invariant_violation"

    def __init__(self, n, prop, witness=None):
        super().__init__(f"step {n}: property {prop} violated (witness: {witness})")
        self.n = n
        self.prop = prop
        self.witness = witness
