"""Disk potential from the hypergeometric (I-function) side.

Winding ``w > 0`` contributes ``q0^w * D+(w) * J(l0, w)``; for an inner brane
winding ``w < 0`` contributes ``q0^w q^(-w alpha) * D-(w) * J(l-, w)`` where
``l- = l0 - <D*, alpha>``.  The bracket ``J`` sums over effective classes, so
the bookkeeping here is indexed differently from the superpotential module.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, prod

from .bmodel import gamma_ratio
from .series import DomainError, TruncatedSeries
from .toric import (BraneSpec, GeometryError, ToricCY3, check_grading,
                    closed_grade, curve_class_alpha, effective_classes,
                    inner_n, open_charge)


def disk_factor_pos(w: int, f: int) -> Fraction:
    if w < 1:
        raise DomainError("positive disk factor needs w >= 1")
    sign = -1 if (f * w) % 2 else 1
    return Fraction(sign * prod(f * w + m for m in range(1, w)), w * factorial(w))


def disk_factor_neg(w: int, f: int, n: int) -> Fraction:
    if w > -1:
        raise DomainError("negative disk factor needs w <= -1")
    v, s = -w, f + n
    sign = -1 if (s * w) % 2 else 1
    return Fraction(sign * prod(s * v + m for m in range(1, v)), v * factorial(v))


def l_minus(g: ToricCY3, b: BraneSpec) -> tuple:
    if not b.inner:
        raise GeometryError("l- is only defined for inner branes")
    alpha = curve_class_alpha(g, b)
    l0 = open_charge(g, b)
    return tuple(x - g.pairing(alpha, i) for i, x in enumerate(l0, 1))


def _limit_ratio(a: int, kappa: int, top: int, bottom: int):
    """``Gamma-ratio(a + kappa*eps; top, bottom)`` near ``eps = 0``.

    Returns ``(coefficient, order)`` of the leading term ``c * eps^order``,
    or ``None`` when a factor vanishes identically in the numerator.
    """
    c, order = Fraction(1), 0
    if top >= bottom:
        for m in range(bottom + 1, top + 1):
            if a + m:
                c *= a + m
            elif kappa:
                c *= kappa
                order += 1
            else:
                return None
        return c, order
    for m in range(top + 1, bottom + 1):
        if a + m:
            c /= a + m
        elif kappa:
            c /= kappa
            order -= 1
        else:
            raise DomainError(f"unregularised pole at a={a}, m={m}")
    return c, order


def bracket_coefficient(g: ToricCY3, l, w: int, beta, direction=None) -> Fraction:
    """Coefficient of ``q^beta`` in the bracket.

    With ``direction`` given, the factor for ray i uses ``w*l_i + direction_i*eps``
    and the value is the limit ``eps -> 0``; zeros and poles in different
    factors then cancel instead of killing the term.
    """
    p = g.pairings(beta)
    if direction is None:
        c = Fraction(1)
        for i in range(g.r):
            c *= gamma_ratio(w * l[i], 0, p[i]).value
            if not c:
                break
        return c
    c, order = Fraction(1), 0
    for i in range(g.r):
        res = _limit_ratio(w * l[i], direction[i], 0, p[i])
        if res is None:
            return Fraction(0)
        c *= res[0]
        order += res[1]
    if order < 0:
        raise DomainError(f"bracket term {beta} has a pole of order {-order}")
    return c if order == 0 else Fraction(0)


def framing_direction(g: ToricCY3, b: BraneSpec) -> tuple:
    """Derivative of ``w*l`` in the framing, scaled by 1/w: +1 at i2, -1 at i3."""
    d = [0] * g.r
    d[b.i2 - 1] = 1
    d[b.i3 - 1] = -1
    return tuple(d)


def j_bracket(g: ToricCY3, l, w: int, grading, N: int, direction=None) -> TruncatedSeries:
    """``1 + sum_{beta>0} q^beta prod_i Gamma-ratio(w l_i; 0, <D_i*, beta>)``.

    Exponents carry a leading zero for ``q0`` so the result shares the
    grading of the open series.  ``direction`` switches on the regularised
    evaluation described in :func:`bracket_coefficient`.
    """
    if w == 0:
        raise DomainError("bracket needs w != 0")
    grading = check_grading(grading, g)
    terms = {}
    for beta in effective_classes(g, grading, N):
        c = bracket_coefficient(g, l, w, beta, direction)
        if c:
            terms[(0,) + beta] = c
    return TruncatedSeries(grading, N, terms)


def f_q_series(g: ToricCY3, b: BraneSpec, grading, N: int,
               regularize: bool = True) -> TruncatedSeries:
    """The A-side disk potential in algebraic coordinates, to grade ``N``.

    With ``regularize`` (the default) bracket terms are evaluated at a generic
    framing and specialised afterwards; see :func:`bracket_coefficient`.
    """
    grading = check_grading(grading, g)
    f = b.framing
    l0 = open_charge(g, b)
    direction = framing_direction(g, b) if regularize else None
    total = TruncatedSeries.zero(grading, N)
    w = 1
    while w * grading[0] <= N:
        shift = (w,) + (0,) * g.k
        J = j_bracket(g, l0, w, grading, N - w * grading[0], direction)
        total = total + J.scale(disk_factor_pos(w, f)).shift(shift)
        w += 1
    if b.inner:
        alpha = curve_class_alpha(g, b)
        n = inner_n(g, b)
        lm = l_minus(g, b)
        step = closed_grade(grading, alpha) - grading[0]
        if step <= 0:
            raise GeometryError("grading must give q0^-1 q^alpha positive grade")
        v = 1
        while v * step <= N:
            shift = (-v,) + tuple(v * a for a in alpha)
            J = j_bracket(g, lm, -v, grading, N - v * step, direction)
            total = total + J.scale(disk_factor_neg(-v, f, n)).shift(shift)
            v += 1
    return total.truncate(N)
