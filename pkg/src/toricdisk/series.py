"""Sparse multivariate truncated power series over the rationals.

A series lives in the variables ``q0, q1, ..., qk``.  Every variable carries a
positive integer weight (the *grading*) and a series is known exactly up to a
total weighted grade ``order``.  Exponents are integer tuples; negative
exponents are allowed (``q0`` is a Laurent variable for inner branes) as long
as every stored monomial has grade at most ``order``.

Truncation rules follow the usual "known up to" bookkeeping:

* the sum of two series is known up to the smaller order;
* in a product ``s*t`` the error of ``s`` is multiplied by the lowest stored
  grade of ``t`` (and vice versa), so the result order is
  ``min(order(s) + v(t), order(t) + v(s))`` capped by ``min(order(s), order(t))``
  where ``v`` is the valuation (lowest stored grade, or ``order + 1`` for a
  series with no stored terms).

Coefficients are :class:`fractions.Fraction` and zero coefficients are never
stored, so two series compare equal exactly when their grading, order and
term maps coincide.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from types import MappingProxyType
from typing import Iterable, Mapping

Exponent = tuple


class SeriesError(ValueError):
    """Base class for series errors."""


class GradingMismatch(SeriesError):
    pass


class DomainError(SeriesError):
    pass


class OutOfRange(SeriesError, LookupError):
    """The requested coefficient lies beyond the truncation order."""


class ConvergenceError(RuntimeError):
    pass


def _check_grading(grading) -> tuple:
    g = tuple(int(x) for x in grading)
    if not g or any(x < 1 for x in g):
        raise SeriesError(f"grading must be positive integers, got {grading!r}")
    return g


def unit_vector(n: int, a: int) -> Exponent:
    return tuple(1 if i == a else 0 for i in range(n))


class TruncatedSeries:
    """Immutable truncated series; see the module docstring."""

    __slots__ = ("grading", "order", "_terms", "_val")

    def __init__(self, grading, order: int, terms: Mapping | Iterable = ()):
        self.grading = _check_grading(grading)
        self.order = int(order)
        n = len(self.grading)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != n:
                raise SeriesError(f"exponent {e} has wrong length (expected {n})")
            c = Fraction(c)
            if c and self.grade(e) <= self.order:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self._terms = clean
        self._val = None

    @classmethod
    def _raw(cls, grading, order, terms):
        # trusted constructor: terms already clean and in range
        s = object.__new__(cls)
        s.grading = grading
        s.order = order
        s._terms = terms
        s._val = None
        return s

    # --- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, grading, order):
        return cls(grading, order)

    @classmethod
    def constant(cls, grading, order, c=1):
        n = len(grading)
        return cls(grading, order, {(0,) * n: c})

    @classmethod
    def one(cls, grading, order):
        return cls.constant(grading, order, 1)

    @classmethod
    def monomial(cls, grading, order, e, c=1):
        return cls(grading, order, {tuple(e): c})

    @classmethod
    def variable(cls, grading, order, a):
        return cls.monomial(grading, order, unit_vector(len(grading), a))

    # --- basic queries ----------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.grading)

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def grade(self, e) -> int:
        return sum(g * x for g, x in zip(self.grading, e))

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, e) -> Fraction:
        e = tuple(e)
        if len(e) != self.nvars:
            raise SeriesError(f"exponent {e} has wrong length")
        if self.grade(e) > self.order:
            raise OutOfRange(f"grade of {e} exceeds truncation order {self.order}")
        return self._terms.get(e, Fraction(0))

    def valuation(self) -> int:
        """Lowest stored grade, or ``order + 1`` when nothing is stored."""
        if not self._terms:
            return self.order + 1
        if self._val is None:
            self._val = min(self.grade(e) for e in self._terms)
        return self._val

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def sorted_items(self):
        return sorted(self._terms.items())

    def __repr__(self):
        if not self._terms:
            body = "0"
        else:
            body = " + ".join(f"{c}*q^{e}" for e, c in self.sorted_items())
        return f"TruncatedSeries({body}; order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.grading == other.grading and self.order == other.order
                and self._terms == other._terms)

    __hash__ = None

    # --- arithmetic -------------------------------------------------------
    def _same(self, other: TruncatedSeries):
        if self.grading != other.grading:
            raise GradingMismatch(f"{self.grading} != {other.grading}")

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            self._same(other)
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(self.grading, self.order, other)
        return None

    def truncate(self, order: int) -> TruncatedSeries:
        order = int(order)
        if order >= self.order:
            return self
        return TruncatedSeries._raw(
            self.grading, order,
            {e: c for e, c in self._terms.items() if self.grade(e) <= order})

    def _with_order(self, order):
        # raising the order is only legitimate for exactly known series;
        # callers use it for polynomials (e.g. monomial images)
        return TruncatedSeries._raw(self.grading, order, dict(self._terms))

    def with_order(self, order: int) -> TruncatedSeries:
        """Declare the series exact up to ``order`` (raising or lowering)."""
        if order <= self.order:
            return self.truncate(order)
        return self._with_order(int(order))

    def __neg__(self):
        return TruncatedSeries._raw(self.grading, self.order,
                                    {e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = min(self.order, other.order)
        out = {}
        for src in (self._terms, other._terms):
            for e, c in src.items():
                if self.grade(e) <= order:
                    v = out.get(e, 0) + c
                    if v:
                        out[e] = v
                    else:
                        out.pop(e, None)
        return TruncatedSeries._raw(self.grading, order, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> TruncatedSeries:
        c = Fraction(c)
        if not c:
            return TruncatedSeries._raw(self.grading, self.order, {})
        return TruncatedSeries._raw(self.grading, self.order,
                                    {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.mul(other)

    __rmul__ = __mul__

    def product_order(self, other: TruncatedSeries) -> int:
        vs, vt = self.valuation(), other.valuation()
        return min(self.order, other.order, self.order + vt, other.order + vs)

    def mul(self, other: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
        """Cauchy product; ``order`` optionally caps the result order further."""
        self._same(other)
        res_order = self.product_order(other)
        if order is not None:
            res_order = min(res_order, int(order))
        grade = self.grade
        a_items = [(grade(e), e, c) for e, c in self._terms.items()]
        b_items = sorted(((grade(e), e, c) for e, c in other._terms.items()),
                         key=lambda t: t[0])
        out: dict = {}
        for ga, ea, ca in a_items:
            budget = res_order - ga
            for gb, eb, cb in b_items:
                if gb > budget:
                    break
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return TruncatedSeries._raw(self.grading, res_order,
                                    {e: c for e, c in out.items() if c})

    def shift(self, e) -> TruncatedSeries:
        """Multiply by the monomial ``q^e``; the order moves with its grade."""
        e = tuple(e)
        return TruncatedSeries._raw(
            self.grading, self.order + self.grade(e),
            {tuple(x + y for x, y in zip(k, e)): c for k, c in self._terms.items()})

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = TruncatedSeries.one(self.grading, self.order)
        base = self
        while n:
            if n & 1:
                result = result.mul(base)
            n >>= 1
            if n:
                base = base.mul(base)
        return result

    def _require_positive(self, what: str):
        for e in self._terms:
            if self.grade(e) <= 0:
                raise DomainError(f"{what} needs a series without terms of grade <= 0; "
                                  f"found exponent {e}")

    def _power_sum(self, coeffs) -> TruncatedSeries:
        # sum_n coeffs(n) * self**n, self of positive valuation
        result = TruncatedSeries.constant(self.grading, self.order, coeffs(0))
        power = TruncatedSeries.one(self.grading, self.order)
        n = 0
        while True:
            n += 1
            power = power.mul(self)
            if power.is_zero():
                break
            c = coeffs(n)
            if c:
                result = result + power.scale(c)
        return result

    def exp(self) -> TruncatedSeries:
        self._require_positive("exp")
        return self._power_sum(lambda n: Fraction(1, factorial(n)))

    def log1p(self) -> TruncatedSeries:
        self._require_positive("log1p")
        return self._power_sum(lambda n: Fraction((-1) ** (n + 1), n) if n else 0)

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse of ``c + h`` with ``c`` nonzero and ``h`` of positive grade."""
        c0 = self.constant_term()
        if not c0:
            raise DomainError("inverse needs a nonzero constant term")
        h = (self - c0).scale(1 / c0)
        h._require_positive("inverse")
        inv = h._power_sum(lambda n: (-1) ** n)
        return inv.scale(1 / c0)

    def theta(self, a: int) -> TruncatedSeries:
        """``q_a d/dq_a`` on a log-free series."""
        return TruncatedSeries._raw(
            self.grading, self.order,
            {e: c * e[a] for e, c in self._terms.items() if e[a]})

    def map_terms(self, fn) -> TruncatedSeries:
        """Apply ``fn(exponent, coeff) -> coeff`` termwise (order unchanged)."""
        return TruncatedSeries(self.grading, self.order,
                               {e: fn(e, c) for e, c in self._terms.items()})

    # --- composition ------------------------------------------------------
    def substitute(self, images: Mapping[int, TruncatedSeries]) -> TruncatedSeries:
        """Replace variable ``q_a`` by ``images[a]``; other variables stay put.

        Each image must have the form ``q_a * v_a`` with ``v_a`` free of
        negative-grade terms, otherwise truncation would be unsound.  Negative
        exponents of a substituted variable need ``v_a`` to be a unit.
        """
        n = self.nvars
        cof = {}
        for a, img in images.items():
            self._same(img)
            v = img.shift(tuple(-1 if i == a else 0 for i in range(n)))
            if any(v.grade(e) < 0 for e in v._terms):
                raise DomainError(f"image of q{a} lowers the grade")
            cof[a] = v
        if not cof:
            return self
        target = self.order
        for e in self._terms:
            orders = [cof[a].order for a in cof if e[a]]
            if orders:
                target = min(target, self.grade(e) + min(orders))
        if not self._terms:
            return TruncatedSeries._raw(self.grading, target, {})
        low = min(self.grade(e) for e in self._terms)
        cache: dict = {}

        def power(a, m):
            key = (a, m)
            if key not in cache:
                if m == 1:
                    cache[key] = cof[a].truncate(target - low)
                elif m == -1:
                    cache[key] = cof[a].inverse().truncate(target - low)
                else:
                    step = 1 if m > 0 else -1
                    cache[key] = power(a, m - step).mul(power(a, step),
                                                        order=target - low)
            return cache[key]

        out: dict = {}
        for e, c in self._terms.items():
            budget = target - self.grade(e)
            if budget < 0:
                continue
            acc = None
            for a in cof:
                if e[a]:
                    p = power(a, e[a])
                    acc = p.truncate(budget) if acc is None else acc.mul(p, order=budget)
            if acc is None:
                out[e] = out.get(e, 0) + c
                continue
            for k, v in acc._terms.items():
                kk = tuple(x + y for x, y in zip(k, e))
                out[kk] = out.get(kk, 0) + c * v
        return TruncatedSeries._raw(
            self.grading, target,
            {e: c for e, c in out.items() if c and self.grade(e) <= target})


class LogSeries:
    """Polynomial in the symbols ``log q_a`` with truncated-series coefficients.

    Keys are tuples ``m`` of non-negative integers (one per variable), standing
    for ``prod_a (log q_a)**m_a``.
    """

    __slots__ = ("grading", "order", "max_log_degree", "_terms")

    def __init__(self, grading, order, terms: Mapping = (), max_log_degree: int = 2):
        self.grading = _check_grading(grading)
        self.order = int(order)
        self.max_log_degree = int(max_log_degree)
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, s in items:
            m = tuple(int(x) for x in m)
            if len(m) != len(self.grading) or any(x < 0 for x in m):
                raise SeriesError(f"bad log exponent {m}")
            if sum(m) > self.max_log_degree:
                raise SeriesError(f"log degree of {m} exceeds {self.max_log_degree}")
            if s.grading != self.grading:
                raise GradingMismatch("coefficient grading differs")
            s = s.truncate(self.order)
            if m in clean:
                s = s + clean[m]
            if not s.is_zero():
                clean[m] = s
            else:
                clean.pop(m, None)
        self._terms = clean

    @classmethod
    def from_series(cls, s: TruncatedSeries, max_log_degree=2):
        return cls(s.grading, s.order, {(0,) * s.nvars: s}, max_log_degree)

    @classmethod
    def log(cls, grading, order, a, max_log_degree=2):
        n = len(grading)
        return cls(grading, order,
                   {unit_vector(n, a): TruncatedSeries.one(grading, order)},
                   max_log_degree)

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def is_zero(self):
        return not self._terms

    def coefficient(self, m) -> TruncatedSeries:
        return self._terms.get(tuple(m), TruncatedSeries.zero(self.grading, self.order))

    def _combine(self, other, sign):
        if self.grading != other.grading:
            raise GradingMismatch("grading differs")
        order = min(self.order, other.order)
        terms = {m: s.truncate(order) for m, s in self._terms.items()}
        for m, s in other._terms.items():
            s = s.truncate(order)
            s = s if sign > 0 else -s
            terms[m] = terms[m] + s if m in terms else s
        return LogSeries(self.grading, order, terms,
                         max(self.max_log_degree, other.max_log_degree))

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            other = LogSeries.from_series(other, self.max_log_degree)
        return self._combine(other, 1)

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            other = LogSeries.from_series(other, self.max_log_degree)
        return self._combine(other, -1)

    def scale(self, c):
        return LogSeries(self.grading, self.order,
                         {m: s.scale(c) for m, s in self._terms.items()},
                         self.max_log_degree)

    def shift(self, e):
        """Multiply every coefficient by ``q^e``; the order moves with the grade."""
        g = sum(a * b for a, b in zip(self.grading, e))
        return LogSeries(self.grading, self.order + g,
                         {m: s.shift(e) for m, s in self._terms.items()},
                         self.max_log_degree)

    def truncate(self, order):
        return LogSeries(self.grading, min(order, self.order),
                         {m: s.truncate(order) for m, s in self._terms.items()},
                         self.max_log_degree)

    def theta(self, a: int) -> LogSeries:
        """``q_a d/dq_a`` with ``theta_a log q_b = delta_ab``."""
        out = {}
        for m, s in self._terms.items():
            ds = s.theta(a)
            if not ds.is_zero():
                out[m] = out[m] + ds if m in out else ds
            if m[a]:
                mm = tuple(x - (1 if i == a else 0) for i, x in enumerate(m))
                t = s.scale(m[a])
                out[mm] = out[mm] + t if mm in out else t
        return LogSeries(self.grading, self.order, out, self.max_log_degree)

    def __eq__(self, other):
        if not isinstance(other, LogSeries):
            return NotImplemented
        return (self.grading == other.grading and self.order == other.order
                and self._terms == other._terms)

    __hash__ = None

    def __repr__(self):
        return f"LogSeries({dict(self._terms)!r}; order={self.order})"


def theta(a: int, s):
    """Theta derivative of a :class:`LogSeries` or a plain series."""
    return s.theta(a)


def invert_diagonal_map(S, order: int) -> list:
    """Invert ``Q_a = q_a * exp(S_a(q))``.

    ``S`` holds one series per variable ``q_0..q_k``; none of them may involve
    ``q_0`` or carry a grade-0 term.  Returns the series ``q_a(Q)``.  Each is
    known to ``order + g_a`` since it is ``Q_a`` times a unit known to
    ``order``.
    """
    S = [s.truncate(order) for s in S]
    if not S:
        return []
    grading = S[0].grading
    n = len(grading)
    if len(S) != n:
        raise SeriesError(f"need {n} correction series, got {len(S)}")
    for a, s in enumerate(S):
        if s.grading != grading:
            raise GradingMismatch("correction series gradings differ")
        s._require_positive(f"correction series S{a}")
        if any(e[0] for e in s._terms):
            raise DomainError(f"correction series S{a} depends on q0")
    units = [unit_vector(n, a) for a in range(n)]

    def step(qs, p):
        images = {a: qs[a] for a in range(1, n)}
        return [(-S[a].truncate(p).substitute(images)).exp().shift(units[a]) for a in range(n)]

    # an answer correct to relative grade p - 1 becomes correct to p after one
    # step, so the precision is raised one grade per step
    qs = [TruncatedSeries.monomial(grading, grading[a], units[a]) for a in range(n)]
    for p in range(1, order + 1):
        qs = step([q._with_order(p + grading[a]) for a, q in enumerate(qs)], p)
    if step(qs, order) != qs:
        raise ConvergenceError("mirror map inversion did not stabilise; check the grading")
    return qs
