"""Hori-Vafa mirror curve, its distinguished branch, and the Abel-Jacobi check.

In the patch ``x_i1 = -xt, x_i2 = yt, x_i3 = 1`` the remaining coordinates
are monomials in ``xt, yt, q``.  Framing substitutes ``xt = x y^-f, yt = y``,
and the branch through ``y = -1`` at ``x = q = 0`` is written ``y = -(1+u)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from .series import ConvergenceError, TruncatedSeries
from .toric import (BraneSpec, ConfigurationError, GeometryError, ToricCY3,
                    check_grading)


@dataclass(frozen=True)
class SignedMonomial:
    sign: int
    ex: int          # exponent of xt (or x)
    ey: int          # exponent of yt (or y)
    eq: tuple        # exponents of q1..qk


@dataclass(frozen=True)
class CurvePolynomial:
    """Sum of ``coeff * x^ex y^ey q^eq``; ``framing`` is 0 for the tilde curve."""

    terms: tuple     # of (coeff, ex, ey, eq)
    framing: int = 0

    def times_monomial(self, ex: int, ey: int) -> "CurvePolynomial":
        return CurvePolynomial(tuple((c, a + ex, b + ey, e) for c, a, b, e in self.terms),
                               self.framing)

    def sorted_terms(self):
        return sorted(self.terms, key=lambda t: (t[3], t[1], t[2], t[0]))


def solve_coordinates(g: ToricCY3, b: BraneSpec) -> dict:
    """Ray index -> :class:`SignedMonomial` for every ray outside ``{i1,i2,i3}``."""
    rest = [i for i in range(1, g.r + 1) if i not in (b.i1, b.i2, b.i3)]
    M = sympy.Matrix([[g.charge[a][j - 1] for j in rest] for a in range(g.k)])
    if abs(M.det()) != 1:
        raise GeometryError("charge minor on the non-gauge rays is not unimodular")
    inv = M.inv()
    out = {}
    for jj, j in enumerate(rest):
        eq = tuple(int(inv[jj, a]) for a in range(g.k))
        ex = -sum(eq[a] * g.charge[a][b.i1 - 1] for a in range(g.k))
        ey = -sum(eq[a] * g.charge[a][b.i2 - 1] for a in range(g.k))
        # x_i1 = -xt contributes (-1)^ex
        out[j] = SignedMonomial(-1 if ex % 2 else 1, ex, ey, eq)
    return out


def tilde_curve(g: ToricCY3, b: BraneSpec) -> CurvePolynomial:
    zero = (0,) * g.k
    terms = [(Fraction(-1), 1, 0, zero), (Fraction(1), 0, 1, zero), (Fraction(1), 0, 0, zero)]
    for j, m in sorted(solve_coordinates(g, b).items()):
        terms.append((Fraction(m.sign), m.ex, m.ey, m.eq))
    return CurvePolynomial(tuple(terms), 0)


def framed_curve(g: ToricCY3, b: BraneSpec) -> CurvePolynomial:
    f = b.framing
    t = tilde_curve(g, b)
    return CurvePolynomial(tuple((c, a, bb - f * a, e) for c, a, bb, e in t.terms), f)


def curve_exponents(g: ToricCY3, b: BraneSpec) -> list:
    """(x, q)-exponents of the non-gauge curve monomials (framing independent)."""
    return [(m.ex,) + m.eq for _, m in sorted(solve_coordinates(g, b).items())]


def _normalize(curve: CurvePolynomial) -> list:
    """Divide by the monomial that plays the role of the constant gauge term."""
    f = curve.framing
    free = {(a, bb): c for c, a, bb, e in curve.terms if not any(e)}
    for (a, bb), c in sorted(free.items()):
        if free.get((a, bb + 1)) == c and free.get((a + 1, bb - f)) == -c:
            return [(cc / c, x - a, y - bb, e) for cc, x, y, e in curve.terms
                    if (x, y) not in ((a, bb), (a, bb + 1), (a + 1, bb - f)) or any(e)]
    raise GeometryError("curve does not contain the gauge terms -x y^-f, y, 1")


def _binomial_power(one_plus_u: TruncatedSeries, e: int, cache: dict):
    if e not in cache:
        cache[e] = one_plus_u ** e if e >= 0 else one_plus_u.inverse() ** (-e)
    return cache[e]


def y_branch(curve: CurvePolynomial, grading, N: int) -> TruncatedSeries:
    """Series ``u(x, q)`` with ``y = -(1+u)`` solving the curve, ``u(0,0) = 0``.

    The curve is rewritten as ``u = (-1)^(f+1) x (1+u)^-f + sum c (-1)^ey x^ex q^eq (1+u)^ey``
    and iterated; every step fixes at least one more grade.
    """
    grading = tuple(grading)
    f = curve.framing
    rest = _normalize(curve)
    n = len(grading)
    rhs = [(Fraction((-1) ** (f + 1)), (1,) + (0,) * (n - 1), -f)]
    for c, ex, ey, eq in rest:
        e = (ex,) + tuple(eq)
        if len(e) != n:
            raise ConfigurationError("grading length does not match the curve")
        if sum(x * y for x, y in zip(grading, e)) <= 0:
            raise ConfigurationError(f"curve monomial x^{ex} q^{eq} has non-positive grade")
        rhs.append((c * (-1) ** ey, e, ey))
    u = TruncatedSeries.zero(grading, N)
    for _ in range(N + 2):
        one = TruncatedSeries.one(grading, N) + u
        cache: dict = {}
        new = TruncatedSeries.zero(grading, N)
        for c, e, ey in rhs:
            new = new + _binomial_power(one, ey, cache).scale(c).shift(e)
        new = new.truncate(N)
        if new == u:
            return u
        u = new
    raise ConvergenceError("branch iteration did not stabilise")


def curve_residual(curve: CurvePolynomial, u: TruncatedSeries) -> TruncatedSeries:
    """``M(x, -(1+u), q)`` as a series (for verification)."""
    one = TruncatedSeries.one(u.grading, u.order) + u
    cache: dict = {}
    total = TruncatedSeries.zero(u.grading, u.order)
    for c, ex, ey, eq in curve.terms:
        term = _binomial_power(one, ey, cache).scale(c * (-1) ** ey).shift((ex,) + tuple(eq))
        total = total + term
    return total.truncate(u.order)


@dataclass
class AbelJacobiReport:
    epsilon: int | None
    passing: tuple              # epsilons that pass
    residuals: dict             # epsilon -> R(epsilon)

    @property
    def ok(self) -> bool:
        return len(self.passing) == 1

    def x_dependent(self, eps: int) -> dict:
        return {e: c for e, c in self.residuals[eps].items() if e[0]}


def abel_jacobi_check(g: ToricCY3, b: BraneSpec, grading, N: int) -> AbelJacobiReport:
    """Compare ``x dW0/dx`` with ``-eps log(1+u)`` up to x-independent terms."""
    from .bmodel import w0_series

    grading = check_grading(grading, g)
    xdw = w0_series(g, b, grading, N).theta(0)
    log_term = y_branch(framed_curve(g, b), grading, N).log1p()
    residuals = {}
    passing = []
    for eps in (1, -1):
        R = xdw + log_term.scale(eps)
        residuals[eps] = R
        if not any(e[0] for e, _ in R.items()):
            passing.append(eps)
    eps = passing[0] if len(passing) == 1 else None
    return AbelJacobiReport(eps, tuple(passing), residuals)
