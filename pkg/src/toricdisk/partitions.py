"""Partition statistics, symmetric group characters and the framing kernel."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import cache
from math import factorial, prod

from sympy.utilities.iterables import partitions as _sympy_partitions


def partitions(d: int) -> list:
    """Partitions of ``d`` as weakly decreasing tuples, in reverse lexicographic order."""
    out = []
    for p in _sympy_partitions(d):
        parts = []
        for part, mult in sorted(p.items(), reverse=True):
            parts += [part] * mult
        out.append(tuple(parts))
    return sorted(out, reverse=True)


def _check(mu) -> tuple:
    mu = tuple(int(x) for x in mu)
    if any(x <= 0 for x in mu) or list(mu) != sorted(mu, reverse=True):
        raise ValueError(f"{mu} is not a partition")
    return mu


def z_mu(mu) -> int:
    mu = _check(mu)
    return prod(factorial(m) for m in Counter(mu).values()) * prod(mu)


def kappa_mu(mu) -> int:
    mu = _check(mu)
    return sum(m * (m - 2 * j + 1) for j, m in enumerate(mu, 1))


@cache
def _chi(beta: frozenset, mu: tuple) -> int:
    # beta: beta-numbers of the shape; remove rim hooks of length mu[0]
    if not mu:
        return 1
    h, rest = mu[0], mu[1:]
    total = 0
    for x in beta:
        y = x - h
        if y < 0 or y in beta:
            continue
        height = sum(1 for z in beta if y < z < x)
        total += (-1) ** height * _chi((beta - {x}) | {y}, rest)
    return total


def chi(nu, mu) -> int:
    """Character of the irreducible representation ``nu`` on the class ``mu``."""
    nu, mu = _check(nu), _check(mu)
    if sum(nu) != sum(mu):
        raise ValueError("partitions of different sizes")
    n = len(nu)
    beta = frozenset(part + n - i for i, part in enumerate(nu, 1))
    return _chi(beta, mu)


class HalfLaurent:
    """Laurent polynomial ``sum c_m t^m`` with exact coefficients (``t = e^(lambda/2)``)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {int(m): Fraction(c) for m, c in (coeffs or {}).items() if c}

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        return sum((c * t ** m for m, c in self.coeffs.items()), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, HalfLaurent):
            return self.coeffs == other.coeffs
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"{c}*t^{m}" for m, c in sorted(self.coeffs.items())) or "0"
        return f"HalfLaurent({body})"


def phi_bullet(mu_plus, mu_minus) -> HalfLaurent:
    mu_plus, mu_minus = _check(mu_plus), _check(mu_minus)
    d = sum(mu_plus)
    if sum(mu_minus) != d:
        raise ValueError("partitions of different sizes")
    zp, zm = z_mu(mu_plus), z_mu(mu_minus)
    out: dict = {}
    for nu in partitions(d):
        c = Fraction(chi(nu, mu_plus) * chi(nu, mu_minus), zp * zm)
        if c:
            k = kappa_mu(nu)
            out[k] = out.get(k, 0) + c
    return HalfLaurent(out)
