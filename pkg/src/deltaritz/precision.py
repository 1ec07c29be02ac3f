"""Configurable-precision real arithmetic and the Gaussian moment integral.

Every matrix element assembled elsewhere in the package reduces to the
half-line moment

    M(s, alpha) = integral_0^inf x^s exp(-alpha x^2) dx
                = (1/2) alpha^(-(s+1)/2) Gamma((s+1)/2),

so this module owns the moment formula, exact half-integer Gamma values, and
a double-precision Gamma for the places where fifteen digits are enough.

The overlap matrices downstream are badly conditioned (monomials times a
Gaussian on the half line), which is why everything here runs under an
explicit :class:`PrecisionContext` instead of machine floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from mpmath.ctx_mp import MPContext

from .errors import GammaPoleError

# Extra working digits beyond the requested count.  The downstream Cholesky
# and Jacobi kernels lose roughly log10(cond(S)) digits, so the guard keeps
# the *delivered* accuracy at the contract level for basis sizes up to ~32.
GUARD_DIGITS = 15

MIN_DIGITS = 16
MAX_DIGITS = 200


@dataclass(frozen=True)
class PrecisionContext:
    """Working decimal precision governing all multiprecision arithmetic.

    Args:
        digits: Significant decimal digits carried by every value produced
            under this context.  Must lie in [16, 200]; internally a guard of
            GUARD_DIGITS extra digits is used.

    Instances are immutable and own a private mpmath context, so distinct
    contexts can be used concurrently without any shared mutable state.
    """

    digits: int = 50
    _mp: MPContext = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.digits, int) or isinstance(self.digits, bool):
            raise ValueError("digits must be an integer")
        if not MIN_DIGITS <= self.digits <= MAX_DIGITS:
            raise ValueError(
                f"digits must lie in [{MIN_DIGITS}, {MAX_DIGITS}], got {self.digits}"
            )
        ctx = MPContext()
        ctx.dps = self.digits + GUARD_DIGITS
        object.__setattr__(self, "_mp", ctx)

    @property
    def mp(self) -> MPContext:
        """The underlying mpmath context (dps = digits + guard)."""
        return self._mp

    @property
    def eps(self):
        """Unit-roundoff scale implied by the requested digit count."""
        return self._mp.mpf(10) ** (-self.digits)

    def mpf(self, x):
        """Convert ``x`` to this context's working precision.

        Integers, floats and mpf values convert exactly; strings and
        Fractions are rounded once at the working precision, which makes
        them the right way to feed exact decimal or rational inputs in.
        """
        if isinstance(x, Fraction):
            return self._mp.mpf(x.numerator) / self._mp.mpf(x.denominator)
        return self._mp.mpf(x)


@dataclass(frozen=True)
class HalfInteger:
    """Exact representation of n/2 for integer n; no rounding anywhere.

    This is the natural argument type for Gamma((s+1)/2) with integer s.
    """

    twice_value: int

    def __post_init__(self):
        if not isinstance(self.twice_value, int) or isinstance(self.twice_value, bool):
            raise ValueError("twice_value must be an integer")

    @classmethod
    def from_int(cls, n: int) -> "HalfInteger":
        return cls(2 * n)

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice_value % 2 == 0

    def __add__(self, n: int) -> "HalfInteger":
        if not isinstance(n, int):
            return NotImplemented
        return HalfInteger(self.twice_value + 2 * n)

    def __float__(self) -> float:
        return self.twice_value / 2

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.twice_value // 2)
        return f"{self.twice_value}/2"


def gamma_half_integer(z: HalfInteger, ctx: PrecisionContext):
    """Gamma(z) for positive half-integer z, to full context precision.

    Climbs the recurrence Gamma(z+1) = z Gamma(z) upward from the exact
    seeds Gamma(1/2) = sqrt(pi) and Gamma(1) = 1.  Every multiplier n/2 is
    dyadic, so each step costs exactly one rounding.

    Raises:
        ValueError: if z <= 0 (the recurrence would cross a pole).
    """
    tv = z.twice_value
    if tv <= 0:
        raise ValueError(f"gamma_half_integer requires z > 0, got {z}")
    mp = ctx.mp
    if tv % 2 == 0:
        # Gamma(n) = (n-1)! from the seed Gamma(1) = 1.
        result = mp.mpf(1)
        for k in range(1, tv // 2):
            result *= k
        return result
    result = mp.sqrt(mp.pi)
    for odd in range(1, tv, 2):
        result *= mp.mpf(odd) / 2
    return result


def gamma_real(x: float) -> float:
    """Gamma(x) in double precision for real non-pole arguments.

    Good to better than 1e-13 relative error for |x| <= 50, which is all the
    exact-oscillator oracle and the large-coupling coefficient need.  Not a
    substitute for :func:`gamma_half_integer` where full context precision
    matters.

    Raises:
        GammaPoleError: if x is zero or a negative integer.
    """
    x = float(x)
    if x <= 0 and x == math.floor(x):
        raise GammaPoleError(int(x))
    return math.gamma(x)


def gaussian_moment(s: int, alpha, ctx: PrecisionContext):
    """Half-line Gaussian moment M(s, alpha) = int_0^inf x^s exp(-alpha x^2) dx.

    Evaluates the closed form (1/2) alpha^(-(s+1)/2) Gamma((s+1)/2) at
    context precision.  ``s`` must be a nonnegative integer: products of the
    polynomial-times-Gaussian basis functions only ever need integer powers.

    Raises:
        ValueError: if s is not a nonnegative integer or alpha <= 0.
    """
    if not isinstance(s, int) or isinstance(s, bool) or s < 0:
        raise ValueError(f"moment power s must be a nonnegative integer, got {s!r}")
    a = ctx.mpf(alpha)
    if not a > 0:
        raise ValueError(f"gaussian_moment requires alpha > 0, got {alpha!r}")
    g = gamma_half_integer(HalfInteger(s + 1), ctx)
    inv = 1 / a
    if s % 2 == 1:
        scale = inv ** ((s + 1) // 2)
    else:
        scale = inv ** (s // 2) * ctx.mp.sqrt(inv)
    return scale * g / 2
