"""Exceptions raised by dirichlet_carleson."""


class DirichletCarlesonError(Exception):
    """Base class for every error raised by the package."""


class InputError(DirichletCarlesonError, ValueError):
    """Invalid input supplied by the caller."""


class NotARoot(InputError):
    """A polynomial does not vanish at a point it should vanish at."""

    def __init__(self, point, residual, tolerance):
        self.point = point
        self.residual = residual
        self.tolerance = tolerance
        super().__init__(
            'polynomial does not vanish at {!r}: '
            '|p(λ)| = {:.3e} > {:.3e}'.format(point, residual, tolerance)
        )


class DuplicateNodes(InputError):
    """Two boundary points coincide within the node tolerance."""

    def __init__(self, first, second, tolerance):
        self.first = first
        self.second = second
        self.tolerance = tolerance
        super().__init__(
            'boundary points {!r} and {!r} coincide '
            '(tolerance {:.1e})'.format(first, second, tolerance)
        )


class OutsideDisk(InputError):
    """A point required to lie in the open unit disk does not."""

    def __init__(self, z):
        self.z = z
        super().__init__(
            'point {!r} is not inside the open unit disk'.format(z)
        )


class NonPositiveAlpha(InputError):
    """An atom mass must be strictly positive."""

    def __init__(self, alpha):
        self.alpha = alpha
        super().__init__('alpha must be > 0, got {!r}'.format(alpha))


class AtomDirection(InputError):
    """A boundary direction coincides with an atom of the measure."""

    def __init__(self, zeta, atom):
        self.zeta = zeta
        self.atom = atom
        super().__init__(
            'direction {!r} coincides with the atom {!r}'.format(zeta, atom)
        )


class SchemaError(InputError):
    """A JSON document does not follow its schema."""


class NumericalError(DirichletCarlesonError, ArithmeticError):
    """A numerical procedure failed to deliver the requested accuracy."""


class QuadratureNotConverged(NumericalError):
    """Quadrature refinement stalled above the requested tolerance."""

    def __init__(self, estimate, error, tolerance, where=''):
        self.estimate = estimate
        self.error = error
        self.tolerance = tolerance
        self.where = where
        super().__init__(
            '{}quadrature did not converge: estimate {!r}, '
            'error {:.3e} > tolerance {:.3e}'.format(
                where + ': ' if where else '', estimate, error, tolerance
            )
        )


class SolveFailed(NumericalError):
    """A Gram system could not be factorized."""

    def __init__(self, size, reason):
        self.size = size
        self.reason = reason
        super().__init__(
            'Gram solve of size {} failed: {}'.format(size, reason)
        )
