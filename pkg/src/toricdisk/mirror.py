"""Mirror maps between algebraic coordinates q and flat coordinates Q.

``Q_a = q_a exp(S_a(q))`` with ``S_a = sum_i l_i^(a) A_i`` for the closed
directions and ``S_0 = sum_i l0_i A_i`` for the open one.  The correction
series ``A_i`` only see classes whose single negative pairing sits on ray i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .bmodel import w0_series
from .series import DomainError, TruncatedSeries, invert_diagonal_map
from .toric import (BraneSpec, ToricCY3, check_grading, effective_classes,
                    open_charge)


def e_coeff(g: ToricCY3, i0: int, beta) -> Fraction:
    if not any(beta):
        raise DomainError("E coefficient needs a nonzero class")
    p = g.pairings(beta)
    if p[i0 - 1] >= 0:
        return Fraction(0)
    den = 1
    for i, x in enumerate(p, 1):
        if i == i0:
            continue
        if x < 0:
            return Fraction(0)
        den *= factorial(x)
    m = -p[i0 - 1] - 1
    return Fraction((-1) ** m * factorial(m), den)


def a_series(g: ToricCY3, i: int, grading, N: int) -> TruncatedSeries:
    grading = check_grading(grading, g)
    terms = {}
    for beta in effective_classes(g, grading, N):
        if any(beta):
            c = e_coeff(g, i, beta)
            if c:
                terms[(0,) + beta] = c
    return TruncatedSeries(grading, N, terms)


@dataclass(frozen=True)
class MirrorMap:
    """Correction series ``S_0..S_k`` together with the inverse ``q_a(Q)``."""

    S: tuple
    inverse: tuple

    @property
    def order(self) -> int:
        return self.S[0].order

    def forward(self) -> tuple:
        """``Q_a(q) = q_a exp(S_a(q))``, each known to ``order + g_a``."""
        out = []
        for a, s in enumerate(self.S):
            e = tuple(1 if j == a else 0 for j in range(s.nvars))
            out.append(s.exp().shift(e))
        return tuple(out)

    def to_flat(self, s: TruncatedSeries) -> TruncatedSeries:
        """Rewrite a series in q as a series in Q."""
        return s.substitute(dict(enumerate(self.inverse))).truncate(s.order)

    def to_algebraic(self, s: TruncatedSeries) -> TruncatedSeries:
        """Rewrite a series in Q as a series in q."""
        return s.substitute(dict(enumerate(self.forward()))).truncate(s.order)


def correction_series(g: ToricCY3, b: BraneSpec | None, grading, N: int) -> tuple:
    """``(S_0, S_1, ..., S_k)``; ``S_0`` is zero without a brane."""
    grading = check_grading(grading, g)
    A = {}
    for i in range(1, g.r + 1):
        s = a_series(g, i, grading, N)
        if not s.is_zero():
            A[i] = s
    rows = [open_charge(g, b) if b is not None else (0,) * g.r] + list(g.charge)
    S = []
    for row in rows:
        acc = TruncatedSeries.zero(grading, N)
        for i, s in A.items():
            if row[i - 1]:
                acc = acc + s.scale(row[i - 1])
        S.append(acc)
    return tuple(S)


def build_mirror_map(g: ToricCY3, b: BraneSpec | None, grading, N: int) -> MirrorMap:
    S = correction_series(g, b, grading, N)
    return MirrorMap(S, tuple(invert_diagonal_map(S, N)))


def invariants_in_flat(g: ToricCY3, b: BraneSpec, grading, N: int) -> TruncatedSeries:
    """W0 rewritten in flat coordinates: the disk invariants indexed by (w, d)."""
    grading = check_grading(grading, g)
    mm = build_mirror_map(g, b, grading, N)
    return mm.to_flat(w0_series(g, b, grading, N))
