"""Exception types shared across the package."""


class QmetroError(Exception):
    """Base class for all package-specific errors."""


class InsufficientTruncationError(QmetroError):
    """Fock cutoff leaves more tail probability than the declared tolerance."""


class DegenerateStateError(QmetroError):
    """Requested state has vanishing norm (e.g. antisymmetric branches at alpha=0)."""


class IndefiniteMatrixError(QmetroError):
    """Information matrix has a negative eigenvalue beyond tolerance."""


class SingularMatrixError(QmetroError):
    """Information matrix is numerically singular; trace of the inverse undefined."""


class ZeroDerivativeError(QmetroError):
    """Signal mean is insensitive to the phase at the working point."""


class GridInadequateError(QmetroError):
    """Doubling the quadrature grid moved an integral by more than tolerance."""
