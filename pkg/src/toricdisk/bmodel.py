"""Superpotential coefficients and the series W0.

The coefficient of ``q0^w q^beta`` is organised around the pairings
``c2 = <D_i2*, bt>`` and ``c3 = <D_i3*, bt>`` of the extended class with the
two rays that carry the framing:

    C(bt) = (-1)^(c3 + w) / w * Gamma-ratio(0; -c3-1, c2) * prod_i 1/p_i!

where the product runs over the rays other than i2, i3 and ``1/p! = 0`` for
negative ``p``.  The Gamma ratio is ``(c2+1)(c2+2)...(-c3-1)`` read with the
usual convention when the range is empty or reversed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .series import DomainError, TruncatedSeries
from .toric import (BraneSpec, ToricCY3, check_grading, enumerate_extended,
                    extended_pairing)


@dataclass(frozen=True)
class GammaRatio:
    value: Fraction
    vanished_by_pole: bool


def gamma_ratio(a: int, top: int, bottom: int) -> GammaRatio:
    """``prod_{m<=top}(a+m) / prod_{m<=bottom}(a+m)`` as a finite product.

    >>> gamma_ratio(3, 0, 2).value
    Fraction(1, 20)
    """
    if top >= bottom:
        v = 1
        zero = False
        for m in range(bottom + 1, top + 1):
            v *= a + m
            zero = zero or a + m == 0
        return GammaRatio(Fraction(v), zero)
    v = 1
    for m in range(top + 1, bottom + 1):
        if a + m == 0:
            return GammaRatio(Fraction(0), True)
        v *= a + m
    return GammaRatio(Fraction(1, v), False)


def inv_factorial(p: int) -> Fraction:
    return Fraction(1, factorial(p)) if p >= 0 else Fraction(0)


def c_coeff(g: ToricCY3, b: BraneSpec, bt) -> Fraction:
    """Superpotential coefficient of the extended class ``bt = (w, d...)``."""
    w = bt[0]
    if w == 0:
        raise DomainError("winding number must be nonzero")
    P = Fraction(1)
    for i in range(1, g.r + 1):
        if i in (b.i2, b.i3):
            continue
        P *= inv_factorial(extended_pairing(g, b, bt, i))
        if not P:
            return P
    c2 = extended_pairing(g, b, bt, b.i2)
    c3 = extended_pairing(g, b, bt, b.i3)
    ratio = gamma_ratio(0, -c3 - 1, c2).value
    sign = -1 if (c3 + w) % 2 else 1
    return sign * ratio * P / w


def w0_series(g: ToricCY3, b: BraneSpec, grading, N: int) -> TruncatedSeries:
    """W0 truncated at total grade ``N``."""
    grading = check_grading(grading, g)
    terms = {}
    for bt in enumerate_extended(g, b, grading, N):
        c = c_coeff(g, b, bt)
        if c:
            terms[bt] = c
    return TruncatedSeries(grading, N, terms)
