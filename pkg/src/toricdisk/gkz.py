"""Extended GKZ operators and annihilation checks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .mirror import correction_series
from .series import LogSeries, TruncatedSeries
from .toric import BraneSpec, ToricCY3, check_grading, open_charge


@dataclass(frozen=True)
class GKZOperator:
    """``prod (L - j) - q_a prod (L' - j')`` with ``L = sum_b c_b theta_b``.

    Each factor is stored as ``(coefficients, j)``.
    """

    a: int
    positive_part: tuple
    negative_part: tuple


def extended_charge(g: ToricCY3, b: BraneSpec) -> tuple:
    """Rows ``(l0, 1, -1)`` and ``(l^(a), 0, 0)``."""
    rows = [open_charge(g, b) + (1, -1)]
    rows += [row + (0, 0) for row in g.charge]
    return tuple(rows)


def build_operator(g: ToricCY3, b: BraneSpec, a: int) -> GKZOperator:
    lt = extended_charge(g, b)
    pos, neg = [], []
    for i in range(g.r + 2):
        form = tuple(row[i] for row in lt)
        c = lt[a][i]
        target = pos if c > 0 else neg
        for j in range(abs(c)):
            target.append((form, j))
    return GKZOperator(a, tuple(pos), tuple(neg))


def _factor(s: LogSeries, form, j) -> LogSeries:
    out = s.scale(-j)
    for bb, c in enumerate(form):
        if c:
            out = out + s.theta(bb).scale(c)
    return out


def apply(op: GKZOperator, s: LogSeries) -> LogSeries:
    p = s
    for form, j in op.positive_part:
        p = _factor(p, form, j)
    m = s
    for form, j in op.negative_part:
        m = _factor(m, form, j)
    e = tuple(1 if i == op.a else 0 for i in range(len(s.grading)))
    return (p - m.shift(e)).truncate(s.order)


@dataclass
class GKZReport:
    failures: list = field(default_factory=list)   # (a, b, log key, exponent, coeff)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def _first_term(res: LogSeries):
    for m, s in sorted(res.terms.items()):
        for e, c in s.sorted_items():
            return m, e, c
    return None


def check_annihilation(g: ToricCY3, b: BraneSpec, grading, N: int) -> GKZReport:
    """``D_b 1 = 0`` and ``D_b (log q_a + S_a) = 0`` to grade ``N`` for all a, b."""
    grading = check_grading(grading, g)
    S = correction_series(g, b, grading, N)
    ops = [build_operator(g, b, bb) for bb in range(g.k + 1)]
    inputs = [(None, LogSeries.from_series(TruncatedSeries.one(grading, N)))]
    for a in range(g.k + 1):
        inputs.append((a, LogSeries.log(grading, N, a) + S[a]))
    rep = GKZReport()
    for op in ops:
        for a, s in inputs:
            rep.checked += 1
            res = apply(op, s)
            if not res.is_zero():
                rep.failures.append((a, op.a) + _first_term(res))
    return rep
