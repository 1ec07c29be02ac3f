"""Exception types shared across the package.

Everything numerical that can fail derives from :class:`ComputationError` so
that callers (in particular the command-line front end) can separate "the
arithmetic could not deliver" from ordinary usage mistakes, which surface as
:class:`ValueError` at argument-validation time.
"""

from __future__ import annotations


class ComputationError(Exception):
    """Base class for numerical failures raised by this package."""


class GammaPoleError(ComputationError):
    """Gamma function evaluated at a nonpositive integer.

    Attributes:
        pole: The integer argument at which the pole sits.
    """

    def __init__(self, pole: int):
        self.pole = pole
        super().__init__(f"gamma function has a pole at {pole}")


class IllConditionedBasisError(ComputationError):
    """Cholesky factorization of the overlap matrix broke down.

    The overlap matrix stopped being positive definite at the working
    precision; increase the digit count or reduce the basis size.

    Attributes:
        pivot_index: Zero-based index of the first nonpositive pivot.
    """

    def __init__(self, pivot_index: int, message: str | None = None):
        self.pivot_index = pivot_index
        super().__init__(
            message
            or "overlap matrix is not positive definite at working precision "
            f"(pivot {pivot_index}); increase digits or reduce the basis size"
        )


class JacobiConvergenceError(ComputationError):
    """Jacobi diagonalization failed to converge within the sweep cap."""

    def __init__(self, sweeps: int, off_diagonal: object):
        self.sweeps = sweeps
        self.off_diagonal = off_diagonal
        super().__init__(
            f"Jacobi rotations did not converge after {sweeps} sweeps "
            f"(largest off-diagonal entry {off_diagonal})"
        )


class BracketError(ComputationError):
    """A root finder could not bracket a sign change.

    Attributes:
        bracket: The (lo, hi) interval that failed to bracket the root.
    """

    def __init__(self, bracket: tuple[float, float], message: str | None = None):
        self.bracket = bracket
        super().__init__(
            message or f"no sign change on bracket [{bracket[0]}, {bracket[1]}]"
        )


class UnsupportedPotentialError(ComputationError):
    """An operation requires a potential shape it does not support."""
