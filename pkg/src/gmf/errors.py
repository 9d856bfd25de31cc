"""Exception types raised by the gmf package.

Every contract violation maps to a distinct class so callers (and the CLI)
can branch on the failure kind instead of parsing messages.
"""


class GmfError(Exception):
    """Base class for all gmf errors."""


# matrix core

class NotSquareError(GmfError):
    pass


class NotHermitianError(GmfError):
    def __init__(self, max_asymmetry):
        self.max_asymmetry = float(max_asymmetry)
        super().__init__(f"matrix is not Hermitian (max |A - A*| entry = {self.max_asymmetry:.3e})")


class NotPsdError(GmfError):
    def __init__(self, min_eigen_estimate, tolerance):
        self.min_eigen_estimate = float(min_eigen_estimate)
        self.tolerance = float(tolerance)
        super().__init__(
            f"matrix is not positive semi-definite "
            f"(min eigenvalue estimate {self.min_eigen_estimate:.3e}, tolerance {self.tolerance:.3e})"
        )


class IndexOutOfRangeError(GmfError):
    pass


# groups

class DegreeMismatchError(GmfError):
    pass


class GroupTooLargeError(GmfError):
    pass


class EnumerationTooLargeError(GmfError):
    pass


class CycleParseError(GmfError):
    pass


# characters

class GroupMismatchError(GmfError):
    pass


class ElementNotInGroupError(GmfError):
    pass


class BadPartitionError(GmfError):
    pass


class ValidationFailedError(GmfError):
    pass


# evaluation / decomposition

class TooLargeError(GmfError):
    pass


class ChiNotIrreducibleError(GmfError):
    pass


class ChiNotLinearError(GmfError):
    pass


class AlphaBetaNotInOmegaError(GmfError):
    """Signals a violated hypothesis of the Cauchy-Binet expansion, not a bug."""


# conjecture

class NTooSmallError(GmfError):
    pass


class ZeroInFirstColumnError(GmfError):
    pass


class LambdaOutOfRangeError(GmfError):
    pass
