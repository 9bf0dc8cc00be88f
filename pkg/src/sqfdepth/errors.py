"""Exception types shared across the package.

The CLI maps these onto exit codes: input/grammar problems exit 2, size
guards exit 3, everything else that is a usage problem exits 1.
"""


class SqfdepthError(Exception):
    """Base class for all package-specific errors."""


class IndexOutOfRangeError(SqfdepthError):
    """A variable index falls outside the ambient range [1..n]."""


class UnitIdealError(SqfdepthError):
    """A degree-0 generator would make the ideal the whole ring."""


class ParseError(SqfdepthError):
    """Malformed ideal text or JSON input."""


class GuardExceededError(SqfdepthError):
    """A size guard was hit; pass force=True / --force to override."""


class TooLargeError(GuardExceededError):
    """The monomial poset exceeds the brute-force element cap."""


class ZeroModuleError(SqfdepthError):
    """Depth and projective dimension of the zero module are undefined."""


class EmptyLeftSideError(SqfdepthError):
    """The divisibility graph has no bottom-degree monomials to match."""


class NotNormalizedError(SqfdepthError):
    """The operation needs a reduced pair; run normalize_pair first."""


class DegenerateReductionError(SqfdepthError):
    """Degree reduction cannot certify the depth-equals-d equivalence here."""


class NotApplicableError(SqfdepthError):
    """A certificate was requested outside the hypothesis it needs."""


class NoKernelError(SqfdepthError):
    """The homogeneous system has no free column (internal inconsistency)."""


class NotEquigeneratedError(SqfdepthError):
    """The ideal has generators in more than one degree."""


class PrincipalIdealError(SqfdepthError):
    """The criterion needs more than one generator."""


class NoLastVariableMultiplesError(SqfdepthError):
    """No bottom-degree monomial of the ideal involves the last variable."""


class UnsatisfiableError(SqfdepthError):
    """Random instance constraints cannot be met with the given parameters."""
