"""Hamiltonian and overlap matrices over the delta-adapted Gaussian basis.

The trial space lives on the half line x > 0 with the scalar product
<F|G> = int_0^inf F G dx.  Basis functions are polynomials times a shared
Gaussian, u_j(x) = p_j(x) exp(-a x^2 / 2):

  even sector:  p_1 = 1 + g x,   p_j = x^j  (j >= 2)
  odd sector:   p_j = x^j        (j >= 1)

The (1 + g x) prefactor builds the derivative jump of the delta potential
into every even trial function: u'(0+) = g u(0) holds term by term, so the
variational space never fights the cusp.  The odd sector vanishes at the
origin and never feels the delta; its assembly is independent of g.

Matrix elements reduce to finite sums of half-line Gaussian moments after
polynomial expansion, so the only transcendental ingredient is
:func:`deltaritz.precision.gaussian_moment`.  See docs/derivations.md for
the boundary-term bookkeeping that makes the half-line functional equal to
the full-line Rayleigh quotient of an even trial function.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .precision import PrecisionContext, gaussian_moment


class Sector(Enum):
    """Parity sector of the trial space."""

    EVEN_ADAPTED = "even"
    ODD = "odd"


class DerivativeForm(Enum):
    """Which equivalent kinetic-energy formula the assembler integrates."""

    FIRST_DERIVATIVE = "first"
    SECOND_DERIVATIVE = "second"


def _is_number(x) -> bool:
    return isinstance(x, (int, float, Fraction)) and not isinstance(x, bool)


@dataclass(frozen=True)
class MonomialPotential:
    """Parity-invariant potential V(x) = sum_k A_k |x|^(b_k).

    Terms are (coefficient, exponent) pairs with A_k > 0 and integer
    b_k >= 1, exponents strictly increasing.  Parity invariance is
    structural: |x| powers are even functions by construction.
    """

    terms: tuple[tuple[object, int], ...]

    def __post_init__(self):
        terms = tuple((a, b) for a, b in self.terms)
        if not terms:
            raise ValueError("potential needs at least one term")
        last_b = 0
        for a, b in terms:
            if not _is_number(a) or not a > 0:
                raise ValueError(f"coefficient must be a positive real, got {a!r}")
            if not isinstance(b, int) or isinstance(b, bool) or b < 1:
                raise ValueError(f"exponent must be a positive integer, got {b!r}")
            if b <= last_b:
                raise ValueError("exponents must be strictly increasing")
            last_b = b
        object.__setattr__(self, "terms", terms)

    @classmethod
    def harmonic(cls) -> "MonomialPotential":
        """V(x) = x^2 / 2."""
        return cls(((Fraction(1, 2), 2),))

    @classmethod
    def quartic(cls) -> "MonomialPotential":
        """V(x) = x^4."""
        return cls(((1, 4),))

    @classmethod
    def cubic(cls) -> "MonomialPotential":
        """V(x) = |x|^3."""
        return cls(((1, 3),))

    @property
    def is_single_term(self) -> bool:
        return len(self.terms) == 1

    @property
    def is_harmonic_half_x2(self) -> bool:
        """True exactly for V = x^2/2, the case with a closed-form oracle."""
        return self.is_single_term and self.terms[0][1] == 2 and self.terms[0][0] == 0.5

    def __str__(self) -> str:
        return " + ".join(
            f"{a}*|x|^{b}" if a != 1 else f"|x|^{b}" for a, b in self.terms
        )


@dataclass(frozen=True)
class BasisSpec:
    """Gaussian width, basis size, delta strength and parity sector.

    ``g`` is the delta strength; it shapes the first even basis function and
    the boundary term, and is ignored entirely in the odd sector.
    """

    a: object
    n: int
    g: object = 0.0
    sector: Sector = Sector.EVEN_ADAPTED

    def __post_init__(self):
        if not float(self.a) > 0:
            raise ValueError(f"Gaussian width a must be positive, got {self.a!r}")
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ValueError(f"basis size n must be a positive integer, got {self.n!r}")
        float(self.g)  # must be real-convertible
        if not isinstance(self.sector, Sector):
            raise ValueError(f"sector must be a Sector, got {self.sector!r}")


@dataclass(frozen=True)
class AssembledSystem:
    """The (n x n) symmetric matrices H and S plus their provenance."""

    h: tuple
    s: tuple
    spec: BasisSpec
    potential: MonomialPotential
    form: DerivativeForm = DerivativeForm.FIRST_DERIVATIVE

    @property
    def n(self) -> int:
        return self.spec.n


# -- polynomial helpers (coefficient tuples, low degree first) --------------


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        if pi == 0:
            continue
        for j, qj in enumerate(q):
            out[i + j] = out[i + j] + pi * qj
    return tuple(out)


def _poly_diff(p):
    if len(p) <= 1:
        return (0,)
    return tuple(k * c for k, c in enumerate(p))[1:]


def _poly_xshift(p, k: int):
    """Multiply by x^k."""
    return (0,) * k + tuple(p)


def _poly_add(p, q):
    n = max(len(p), len(q))
    p = tuple(p) + (0,) * (n - len(p))
    q = tuple(q) + (0,) * (n - len(q))
    return tuple(pi + qi for pi, qi in zip(p, q))


def _poly_sub(p, q):
    n = max(len(p), len(q))
    p = tuple(p) + (0,) * (n - len(p))
    q = tuple(q) + (0,) * (n - len(q))
    return tuple(pi - qi for pi, qi in zip(p, q))


def _poly_scale(p, c):
    return tuple(c * pi for pi in p)


def _pair_polynomials(j: int, n: int, g, a, sector: Sector, one):
    """p_j and q_j = p_j' - a x p_j with coefficients of the caller's type.

    ``one`` is the multiplicative unit in that type (1 for plain numbers,
    ctx.mpf(1) for multiprecision assembly).
    """
    if not 1 <= j <= n:
        raise IndexError(f"basis index {j} outside 1..{n}")
    if sector is Sector.EVEN_ADAPTED and j == 1:
        p = (one, g * one)
    else:
        p = _poly_xshift((one,), j)
    q = _poly_sub(_poly_diff(p), _poly_scale(_poly_xshift(p, 1), a))
    return p, q


def basis_polynomial(j: int, spec: BasisSpec):
    """Polynomial factors (p_j, q_j) of basis function j, 1-indexed.

    u_j(x) = p_j(x) exp(-a x^2/2) on x > 0 and u_j'(x) = q_j(x) exp(-a x^2/2)
    with q_j = p_j' - a x p_j.  Coefficients are plain Python numbers built
    from spec.g and spec.a; the assembler rebuilds them at context precision.

    Raises:
        IndexError: if j is outside 1..spec.n.
    """
    return _pair_polynomials(j, spec.n, spec.g, spec.a, spec.sector, 1)


# -- assembly ----------------------------------------------------------------


class _MomentTable:
    """Memoized gaussian_moment(s, a) lookups for one assembly."""

    def __init__(self, a, ctx: PrecisionContext):
        self._a = a
        self._ctx = ctx
        self._cache: dict[int, object] = {}

    def __call__(self, s: int):
        m = self._cache.get(s)
        if m is None:
            m = gaussian_moment(s, self._a, self._ctx)
            self._cache[s] = m
        return m

    def integrate(self, poly):
        """int_0^inf poly(x) exp(-a x^2) dx by termwise moments."""
        total = None
        for s, c in enumerate(poly):
            if c == 0:
                continue
            term = c * self(s)
            total = term if total is None else total + term
        return total if total is not None else self._ctx.mpf(0) * 0


def _context_polynomials(spec: BasisSpec, ctx: PrecisionContext):
    one = ctx.mpf(1)
    g = ctx.mpf(spec.g if spec.sector is Sector.EVEN_ADAPTED else 0)
    a = ctx.mpf(spec.a)
    return [
        _pair_polynomials(j, spec.n, g, a, spec.sector, one)
        for j in range(1, spec.n + 1)
    ]


def _potential_poly(p_i, p_j, potential: MonomialPotential, ctx: PrecisionContext):
    """Sum_k A_k x^(b_k) p_i p_j, the A-linear integrand of the V block."""
    pp = _poly_mul(p_i, p_j)
    total = None
    for coeff, b in potential.terms:
        term = _poly_scale(_poly_xshift(pp, b), ctx.mpf(coeff))
        total = term if total is None else _poly_add(total, term)
    return total


def _potential_matrix(potential, spec, ctx, polys=None, moments=None):
    """Matrix of int_0^inf V p_i p_j exp(-a x^2) dx; exactly linear in each A_k."""
    if polys is None:
        polys = _context_polynomials(spec, ctx)
    if moments is None:
        moments = _MomentTable(ctx.mpf(spec.a), ctx)
    n = spec.n
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = moments.integrate(_potential_poly(polys[i][0], polys[j][0], potential, ctx))
            rows[i][j] = rows[j][i] = v
    return tuple(tuple(r) for r in rows)


def assemble(
    potential: MonomialPotential,
    spec: BasisSpec,
    ctx: PrecisionContext,
    form: DerivativeForm = DerivativeForm.FIRST_DERIVATIVE,
) -> AssembledSystem:
    """Build the overlap matrix S and Hamiltonian matrix H in closed form.

    S_ij = int_0^inf p_i p_j e^(-a x^2) dx.  In the FIRST_DERIVATIVE form

        H_ij = 1/2 int q_i q_j e^(-a x^2) + int V p_i p_j e^(-a x^2)
               + (g/2) p_i(0) p_j(0),

    the boundary entry being the half-line image of the full-line delta
    expectation g psi(0)^2 (even sector only; every odd basis function
    vanishes at the origin).  The SECOND_DERIVATIVE form integrates
    u_i (-1/2 u_j'' + V u_j) termwise instead; integration by parts turns
    that into the first form plus the flux 1/2 u_i(0) u_j'(0), which on the
    cusp-adapted basis equals the boundary entry exactly, so both forms
    agree entrywise (a tested invariant).

    Entries are computed once per unordered pair and mirrored, so H and S
    are symmetric exactly, not just to rounding.
    """
    polys = _context_polynomials(spec, ctx)
    a = ctx.mpf(spec.a)
    g = ctx.mpf(spec.g)
    moments = _MomentTable(a, ctx)
    n = spec.n
    half = ctx.mpf(1) / 2

    s_rows = [[None] * n for _ in range(n)]
    h_rows = [[None] * n for _ in range(n)]
    vmat = _potential_matrix(potential, spec, ctx, polys, moments)

    for i in range(n):
        p_i, q_i = polys[i]
        for j in range(i, n):
            p_j, q_j = polys[j]
            s_rows[i][j] = s_rows[j][i] = moments.integrate(_poly_mul(p_i, p_j))
            if form is DerivativeForm.FIRST_DERIVATIVE:
                kinetic = half * moments.integrate(_poly_mul(q_i, q_j))
                h = kinetic + vmat[i][j]
                if spec.sector is Sector.EVEN_ADAPTED:
                    h = h + g * half * (p_i[0] * p_j[0])
            else:
                # -1/2 u_j'' / e^(-a x^2 / 2) = -1/2 (p_j'' - 2 a x p_j' + (a^2 x^2 - a) p_j)
                ddp = _poly_diff(_poly_diff(p_j))
                curv = _poly_sub(
                    _poly_sub(ddp, _poly_scale(_poly_xshift(_poly_diff(p_j), 1), 2 * a)),
                    _poly_sub(_poly_scale(_poly_xshift(p_j, 2), a * a), _poly_scale(p_j, a)),
                )
                h = -half * moments.integrate(_poly_mul(p_i, curv)) + vmat[i][j]
            h_rows[i][j] = h_rows[j][i] = h

    return AssembledSystem(
        h=tuple(tuple(r) for r in h_rows),
        s=tuple(tuple(r) for r in s_rows),
        spec=spec,
        potential=potential,
        form=form,
    )
