"""Exception types.

Input problems (bad Pearson data, short sequences, mismatched sizes) derive
from :class:`InputError`.  Mathematical failures that a verifier can run into
on well-formed input derive from :class:`CheckFailure`.
"""


class ClassicalSeqError(Exception):
    pass


class InputError(ClassicalSeqError, ValueError):
    pass


class CheckFailure(ClassicalSeqError, ArithmeticError):
    pass


class InvalidPhi(InputError):
    def __init__(self, msg="InvalidPhi: phi(x) = a x^2 + b x + c is identically zero"):
        super().__init__(msg)


class DegenerateRecurrence(InputError):
    """``n*a + d == 0`` at recurrence index ``n``."""

    def __init__(self, n, msg=None):
        self.n = n
        super().__init__(msg or f"DegenerateRecurrence at n={n}")


class ZeroMu0(InputError):
    def __init__(self, msg="ZeroMu0: mu_0 must be nonzero"):
        super().__init__(msg)


class TooShort(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class QuasiDefiniteViolation(CheckFailure):
    """``h_order == 0``, i.e. the Hankel matrix of that order is singular."""

    def __init__(self, order, msg=None):
        self.order = order
        super().__init__(msg or f"QuasiDefiniteViolation at order {order}")


class StructureViolation(CheckFailure):
    def __init__(self, msg, index=None):
        self.index = index
        super().__init__(msg)
