"""Built-in geometries, brane phases and closed-form coefficient tables.

The closed forms below are written out term by term, deliberately without
reusing the lattice machinery of :mod:`toricdisk.bmodel`, so that comparing
the two is a meaningful check.  A few printed forms needed repair before they
matched the general formula; the affected entries carry a short comment.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from .toric import INNER, OUTER, BraneSpec, ToricCY3


# --- geometries ----------------------------------------------------------------

def _g(name, charge, cones, rays):
    return ToricCY3(name, tuple(charge), tuple(frozenset(c) for c in cones),
                    tuple(v + (1,) for v in rays))


def _out(label, i1, i2, i3):
    return BraneSpec(OUTER, i1, i2, i3, None, 0, label)


def _inn(label, i1, i2, i3, i4):
    return BraneSpec(INNER, i1, i2, i3, i4, 0, label)


CONIFOLD = _g("conifold", [(-1, -1, 1, 1)], [(1, 2, 3), (1, 2, 4)],
              [(0, 0), (1, 1), (1, 0), (0, 1)])
KP2 = _g("KP2", [(-3, 1, 1, 1)], [(1, 2, 3), (1, 3, 4), (1, 2, 4)],
         [(0, 0), (1, 0), (0, 1), (-1, -1)])
KF0 = _g("KF0", [(-2, 1, 1, 0, 0), (-2, 0, 0, 1, 1)],
         [(1, 2, 4), (1, 4, 3), (1, 3, 5), (1, 5, 2)],
         [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)])
KDP1 = _g("KdP1", [(-2, 1, 1, 0, 0), (-1, 0, -1, 1, 1)],
          [(1, 2, 4), (1, 4, 3), (1, 3, 5), (1, 5, 2)],
          [(0, 0), (0, 1), (0, -1), (1, 0), (-1, -1)])
KDP2 = _g("KdP2", [(-2, 1, 1, 0, 0, 0), (-2, 0, 0, 1, 1, 0), (-3, 1, 0, 1, 0, 1)],
          [(1, 2, 4), (1, 4, 3), (1, 3, 6), (1, 6, 5), (1, 5, 2)],
          [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (-1, -1)])
KDP3 = _g("KdP3", [(-2, 1, 1, 0, 0, 0, 0), (-2, 0, 0, 1, 1, 0, 0),
                   (-3, 1, 0, 1, 0, 1, 0), (-3, 0, 1, 0, 1, 0, 1)],
          [(1, 2, 7), (1, 7, 4), (1, 4, 3), (1, 3, 6), (1, 6, 5), (1, 5, 2)],
          [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (-1, -1), (1, 1)])

BRANES = {
    "conifold": (_inn("I", 4, 1, 2, 3), _out("II", 1, 2, 4)),
    "KP2": (_inn("I", 2, 3, 1, 4), _inn("II", 3, 1, 2, 4), _out("III", 1, 2, 3)),
    "KF0": (_inn("I", 3, 1, 4, 2), _inn("II", 4, 3, 1, 5), _out("III", 1, 4, 3)),
    "KdP1": (_inn("I", 4, 1, 2, 5), _inn("II", 2, 4, 1, 3), _inn("III", 4, 3, 1, 5),
             _out("IV", 1, 2, 4), _out("V", 1, 4, 3)),
    "KdP2": (_inn("I", 5, 1, 2, 4), _inn("II", 2, 5, 1, 6), _inn("III", 5, 6, 1, 3),
             _out("IV", 1, 4, 2), _out("V", 1, 2, 5), _out("VI", 1, 5, 6)),
    "KdP3": (_inn("I", 5, 2, 1, 7), _out("II", 1, 5, 2)),
}

_FIXED = {g.name: g for g in (CONIFOLD, KP2, KF0, KDP1, KDP2, KDP3)}


def y_m(m: int) -> ToricCY3:
    """Crepant resolution of the Z_m quotient of the resolved conifold (m >= 2)."""
    if m < 2:
        raise ValueError("Y_m needs m >= 2")
    r = m + 3
    charge = [[0] * r for _ in range(m)]
    charge[0][0] = charge[0][1] = 1
    charge[0][3] = -2
    for a in range(2, m + 1):
        charge[a - 1][a] += 1
        charge[a - 1][a + 1] -= 2
        charge[a - 1][a + 2] += 1
    rays = [(0, 1), (0, -1)] + [(j - 4, 0) for j in range(3, r + 1)]
    cones = [(1, j, j + 1) for j in range(3, r)] + [(2, j, j + 1) for j in range(3, r)]
    return _g(f"Ym{m}", [tuple(row) for row in charge], cones, rays)


def y_m_branes(m: int) -> tuple:
    out = [_out("I0", 4, 3, 1)]
    for b in range(1, m):
        out.append(_inn(f"I{b}", b + 2, 1, b + 3, b + 4))
    out.append(_out(f"I{m}", m + 2, 1, m + 3))
    for b in range(1, m + 1):
        out.append(_inn(f"II{b}", 1, b + 3, b + 2, 2))
    return tuple(out)


CATALOG_NAMES = ("conifold", "KP2", "KF0", "KdP1", "KdP2", "KdP3", "Ym")


def geometry(name: str, m: int = 5) -> ToricCY3:
    if name in ("Ym", "Y_m") or name.startswith("Ym"):
        if name[2:].isdigit():
            m = int(name[2:])
        return y_m(m)
    try:
        return _FIXED[name]
    except KeyError:
        raise KeyError(f"unknown catalog geometry {name!r}; known: {', '.join(CATALOG_NAMES)}")


def branes(g: ToricCY3) -> tuple:
    if g.name.startswith("Ym"):
        return y_m_branes(int(g.name[2:]))
    return BRANES.get(g.name, ())


def brane(g: ToricCY3, label: str, f: int = 0) -> BraneSpec:
    for b in branes(g):
        if b.label == label:
            return b.framed(f)
    raise KeyError(f"{g.name} has no phase {label!r}")


# --- closed forms --------------------------------------------------------------

def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _fact(n: int):
    return factorial(n) if n >= 0 else None


def _rprod(a: int, lo: int, hi: int) -> Fraction:
    """``prod_{m=lo}^{hi} (a+m)``, continued to ``hi < lo - 1`` as a Gamma ratio."""
    if hi >= lo - 1:
        v = 1
        for m in range(lo, hi + 1):
            v *= a + m
        return Fraction(v)
    v = 1
    for m in range(hi + 1, lo):
        if a + m == 0:
            return Fraction(0)
        v *= a + m
    return Fraction(1, v)


def _ratio(sign_exp, a, lo, hi, dens) -> Fraction:
    den = 1
    for x in dens:
        fx = _fact(x)
        if fx is None:
            return Fraction(0)
        den *= fx
    return _sign(sign_exp) * _rprod(a, lo, hi) / den


@dataclass(frozen=True)
class PhaseFixture:
    geometry: str
    phase: str
    indices: tuple
    formula: Callable      # (w, d, f) -> Fraction
    constraint: Callable   # (w, d) -> bool


def catalog_n(fix: PhaseFixture, f: int, bt) -> Fraction:
    w, d = bt[0], tuple(bt[1:])
    if w == 0 or not fix.constraint(w, d):
        return Fraction(0)
    return fix.formula(w, d, f)


def _nonneg(*xs):
    return all(x >= 0 for x in xs)


def _conifold():
    def I(w, d, f):
        (d1,) = d
        return _ratio(f * w + d1, f * w, -d1 + 1, d1 + w - 1, [w + d1, d1]) / w

    def II(w, d, f):
        (d1,) = d
        return _ratio(f * w + d1, f * w, -d1 + 1, -d1 + w - 1, [w - d1, d1]) / w

    return [
        PhaseFixture("conifold", "I", (4, 1, 2, 3), I, lambda w, d: _nonneg(d[0], w + d[0])),
        PhaseFixture("conifold", "II", (1, 2, 4), II, lambda w, d: w >= d[0] >= 0),
    ]


def _kp2():
    def I(w, d, f):
        (d1,) = d
        return _ratio(f * w + d1, f * w, d1 + 1, 3 * d1 + w - 1, [w + d1, d1]) / w

    def II(w, d, f):
        (d1,) = d
        return _ratio(f * w + d1, f * w, -3 * d1 + 1, -d1 + w - 1, [w + d1, d1]) / w

    def III(w, d, f):
        (d1,) = d
        return _ratio(f * w + d1, f * w, d1 + 1, -d1 + w - 1, [w - 3 * d1, d1]) / w

    inner = lambda w, d: _nonneg(d[0], w + d[0])
    return [
        PhaseFixture("KP2", "I", (2, 3, 1, 4), I, inner),
        PhaseFixture("KP2", "II", (3, 1, 2, 4), II, inner),
        PhaseFixture("KP2", "III", (1, 2, 3), III, lambda w, d: d[0] >= 0 and w >= 3 * d[0]),
    ]


def _kf0():
    def I(w, d, f):
        d1, d2 = d
        return _ratio(f * w + d2, f * w, -2 * d1 - 2 * d2 + 1, -d2 + w - 1,
                      [w + d1, d1, d2]) / w

    def II(w, d, f):
        d1, d2 = d
        return _ratio(f * w, f * w, d1 + 1, 2 * d1 + 2 * d2 + w - 1, [w + d2, d1, d2]) / w

    def III(w, d, f):
        d1, d2 = d
        return _ratio(f * w + d1, f * w, d2 + 1, -d1 + w - 1,
                      [w - 2 * d1 - 2 * d2, d1, d2]) / w

    return [
        PhaseFixture("KF0", "I", (3, 1, 4, 2), I, lambda w, d: _nonneg(d[0], d[1], w + d[0])),
        PhaseFixture("KF0", "II", (4, 3, 1, 5), II, lambda w, d: _nonneg(d[0], d[1], w + d[1])),
        PhaseFixture("KF0", "III", (1, 4, 3), III,
                     lambda w, d: _nonneg(d[0], d[1]) and w >= 2 * d[0] + 2 * d[1]),
    ]


def _kdp1():
    def I(w, d, f):
        d1, d2 = d
        return _ratio(f * w + d1, f * w, -2 * d1 - d2 + 1, -d1 + w - 1,
                      [w + d2, d1 - d2, d2]) / w

    def II(w, d, f):
        d1, d2 = d
        return _ratio(f * w + d2, f * w, d2 + 1, 2 * d1 + d2 + w - 1,
                      [w + d1, d1 - d2, d2]) / w

    def III(w, d, f):
        d1, d2 = d
        return _ratio(f * w + d2, f * w, d1 - d2 + 1, 2 * d1 + d2 + w - 1,
                      [w + d2, d1, d2]) / w

    def IV(w, d, f):
        d1, d2 = d
        return _ratio(f * w + d2, f * w, d1 + 1, -d2 + w - 1,
                      [w - 2 * d1 - d2, d1 - d2, d2]) / w

    def V(w, d, f):
        d1, d2 = d
        return _ratio(f * w + d1 + d2, f * w, d2 + 1, -d1 + d2 + w - 1,
                      [w - 2 * d1 - d2, d1, d2]) / w

    return [
        PhaseFixture("KdP1", "I", (4, 1, 2, 5), I, lambda w, d: w + d[1] >= 0 and d[0] >= d[1] >= 0),
        PhaseFixture("KdP1", "II", (2, 4, 1, 3), II, lambda w, d: w + d[0] >= 0 and d[0] >= d[1] >= 0),
        PhaseFixture("KdP1", "III", (4, 3, 1, 5), III, lambda w, d: _nonneg(d[0], d[1], w + d[1])),
        # bound on w reads 2*d1 + d2 (the pairing with ray 1)
        PhaseFixture("KdP1", "IV", (1, 2, 4), IV,
                     lambda w, d: d[0] >= d[1] >= 0 and w >= 2 * d[0] + d[1]),
        PhaseFixture("KdP1", "V", (1, 4, 3), V,
                     lambda w, d: _nonneg(d[0], d[1]) and w >= 2 * d[0] + d[1]),
    ]


def _kdp2():
    def top(d):
        d1, d2, d3 = d
        return 2 * d1 + 2 * d2 + 3 * d3

    def I(w, d, f):
        d1, d2, d3 = d
        return _ratio(f * w + d1 + d3, f * w, -top(d) + 1, -d1 - d3 + w - 1,
                      [w + d2, d1, d3, d2 + d3]) / w

    def II(w, d, f):
        d1, d2, d3 = d
        return _ratio(f * w + d3, f * w, d2 + 1, top(d) + w - 1,
                      [w + d1 + d3, d1, d3, d2 + d3]) / w

    def III(w, d, f):
        d1, d2, d3 = d
        return _ratio(f * w + d3, f * w, d3 + 1, top(d) + w - 1,
                      [w + d2, d1, d1 + d3, d2 + d3]) / w

    def IV(w, d, f):
        d1, d2, d3 = d
        return _ratio(f * w + d1 + d3, f * w, d2 + d3 + 1, -d1 - d3 + w - 1,
                      [w - top(d), d1, d2, d3]) / w

    def V(w, d, f):
        d1, d2, d3 = d
        return _ratio(f * w + d2, f * w, d1 + d3 + 1, -d2 + w - 1,
                      [w - top(d), d1, d2 + d3, d3]) / w

    def VI(w, d, f):
        d1, d2, d3 = d
        # lower limit is the pairing with ray 5 (d2), plus one
        return _ratio(f * w + d3, f * w, d2 + 1, -d3 + w - 1,
                      [w - top(d), d1, d1 + d3, d2 + d3]) / w

    return [
        PhaseFixture("KdP2", "I", (5, 1, 2, 4), I,
                     lambda w, d: _nonneg(d[0], d[2], d[1] + d[2], w + d[1])),
        PhaseFixture("KdP2", "II", (2, 5, 1, 6), II,
                     lambda w, d: _nonneg(d[0], d[2], d[1] + d[2], w + d[0] + d[2])),
        PhaseFixture("KdP2", "III", (5, 6, 1, 3), III,
                     lambda w, d: _nonneg(d[0], d[0] + d[2], d[1] + d[2], w + d[1])),
        PhaseFixture("KdP2", "IV", (1, 4, 2), IV,
                     lambda w, d: _nonneg(d[0], d[1], d[2]) and w >= top(d)),
        PhaseFixture("KdP2", "V", (1, 2, 5), V,
                     lambda w, d: _nonneg(d[0], d[2], d[1] + d[2]) and w >= top(d)),
        PhaseFixture("KdP2", "VI", (1, 5, 6), VI,
                     lambda w, d: _nonneg(d[0], d[0] + d[2], d[1] + d[2]) and w >= top(d)),
    ]


def _kdp3():
    def top(d):
        d1, d2, d3, d4 = d
        return 2 * d1 + 2 * d2 + 3 * d3 + 3 * d4

    def I(w, d, f):
        d1, d2, d3, d4 = d
        return _ratio(f * w + d3 + d4, f * w, d1 + d3 + 1, top(d) + w - 1,
                      [w + d2 + d4, d3, d4, d2 + d3, d1 + d4]) / w

    def II(w, d, f):
        d1, d2, d3, d4 = d
        # sign follows the pairing with ray 2 (d1 + d3)
        return _ratio(f * w + d1 + d3, f * w, d2 + d4 + 1, -d1 - d3 + w - 1,
                      [w - top(d), d3, d4, d2 + d3, d1 + d4]) / w

    base = lambda d: _nonneg(d[2], d[3], d[0] + d[3], d[1] + d[2])
    return [
        PhaseFixture("KdP3", "I", (5, 2, 1, 7), I, lambda w, d: base(d) and w + d[1] + d[3] >= 0),
        PhaseFixture("KdP3", "II", (1, 5, 2), II, lambda w, d: base(d) and w >= top(d)),
    ]


def _ym_fixtures(m: int):
    name = f"Ym{m}"

    def D(d, j):
        return d[j - 1] if 1 <= j <= m else 0

    def col(d, j):
        # pairing of the class with ray j
        if j in (1, 2):
            return D(d, 1)
        if j == 3:
            return D(d, 2)
        if j == 4:
            return -2 * D(d, 1) - 2 * D(d, 2) + D(d, 3)
        return D(d, j - 3) - 2 * D(d, j - 2) + D(d, j - 1)

    def mid(d, skip):
        # the chain (d_{j-3} - 2 d_{j-2} + d_{j-1})! for rays 5..m+1, then
        # (d_{m-1} - 2 d_m)! and d_m!
        return [col(d, j) for j in range(5, m + 4) if j not in skip]

    def I0(w, d, f):
        d1, d2, d3 = D(d, 1), D(d, 2), D(d, 3)
        return _ratio(f * w + d1, f * w, d2 + 1, -d1 + w - 1,
                      [w - 2 * d1 - 2 * d2 + d3, d1] + mid(d, ())) / w

    def I0c(w, d):
        d1, d2, d3 = D(d, 1), D(d, 2), D(d, 3)
        return w >= 2 * d1 + 2 * d2 - d3 and d1 >= 0 and _nonneg(*mid(d, ()))

    out = [PhaseFixture(name, "I0", (4, 3, 1), I0, I0c)]

    for b in range(3, m - 1):
        def Ib(w, d, f, b=b):
            e = D(d, b) - 2 * D(d, b + 1) + D(d, b + 2)
            shifted = D(d, b - 1) - 2 * D(d, b) + D(d, b + 1)
            d1, d2, d3 = D(d, 1), D(d, 2), D(d, 3)
            # every chain factor except the two framing rays (b+2 shifted by w, b+3 absent)
            dens = [w + shifted, d1, d2, -2 * d1 - 2 * d2 + d3] + mid(d, (b + 2, b + 3))
            return _ratio(f * w + e, f * w, d1 + 1, -e + w - 1, dens) / w

        def Ibc(w, d, b=b):
            shifted = D(d, b - 1) - 2 * D(d, b) + D(d, b + 1)
            d1, d2, d3 = D(d, 1), D(d, 2), D(d, 3)
            return (w + shifted >= 0 and _nonneg(d1, d2, -2 * d1 - 2 * d2 + d3)
                    and _nonneg(*mid(d, (b + 2, b + 3))))

        def IIb(w, d, f, b=b):
            e = D(d, b - 1) - 2 * D(d, b) + D(d, b + 1)
            lower = D(d, b) - 2 * D(d, b + 1) + D(d, b + 2)  # pairing with ray b+3
            d1, d2, d3 = D(d, 1), D(d, 2), D(d, 3)
            dens = [w + d1, d1, d2, -2 * d1 - 2 * d2 + d3] + mid(d, (b + 2, b + 3))
            return _ratio(f * w + e, f * w, lower + 1, -e + w - 1, dens) / w

        def IIbc(w, d, b=b):
            d1, d2, d3 = D(d, 1), D(d, 2), D(d, 3)
            return (w + d1 >= 0 and _nonneg(d1, d2, -2 * d1 - 2 * d2 + d3)
                    and _nonneg(*mid(d, (b + 2, b + 3))))

        out.append(PhaseFixture(name, f"I{b}", (b + 2, 1, b + 3, b + 4), Ib, Ibc))
        out.append(PhaseFixture(name, f"II{b}", (1, b + 3, b + 2, 2), IIb, IIbc))
    return out


def phase_fixtures(g: ToricCY3) -> list:
    """Closed-form phase tables available for the geometry."""
    if g.name.startswith("Ym"):
        return _ym_fixtures(int(g.name[2:]))
    table = {"conifold": _conifold, "KP2": _kp2, "KF0": _kf0, "KdP1": _kdp1,
             "KdP2": _kdp2, "KdP3": _kdp3}
    return table[g.name]() if g.name in table else []


def phase_fixture(g: ToricCY3, label: str) -> PhaseFixture:
    for fx in phase_fixtures(g):
        if fx.phase == label:
            return fx
    raise KeyError(f"no closed-form table for {g.name} phase {label}")


# --- closed forms for the mirror-map series A_i ---------------------------------

@dataclass(frozen=True)
class MirrorFixture:
    geometry: str
    ray: int
    formula: Callable      # d -> Fraction (0 outside the support)


def _frac_or_zero(sign_exp, top, dens) -> Fraction:
    if top < 0:
        return Fraction(0)
    den = 1
    for x in dens:
        fx = _fact(x)
        if fx is None:
            return Fraction(0)
        den *= fx
    return Fraction(_sign(sign_exp) * factorial(top), den)


def mirror_fixtures(g: ToricCY3) -> list:
    """Closed forms of ``A_i``; rays not listed have ``A_i = 0``."""
    name = g.name
    if name == "conifold":
        return []
    if name == "KP2":
        return [MirrorFixture(name, 1, lambda d: _frac_or_zero(d[0] - 1, 3 * d[0] - 1, [d[0]] * 3)
                              if d[0] > 0 else Fraction(0))]
    if name == "KF0":
        def a1(d):
            d1, d2 = d
            if not (_nonneg(d1, d2) and any(d)):
                return Fraction(0)
            return -_frac_or_zero(0, 2 * d1 + 2 * d2 - 1, [d1, d1, d2, d2])
        return [MirrorFixture(name, 1, a1)]
    if name == "KdP1":
        def a1(d):
            d1, d2 = d
            if not (d1 >= d2 >= 0 and any(d)):
                return Fraction(0)
            return _frac_or_zero(d2 - 1, 2 * d1 + d2 - 1, [d1, d1 - d2, d2, d2])
        return [MirrorFixture(name, 1, a1)]
    if name == "KdP2":
        def a1(d):
            d1, d2, d3 = d
            if not (_nonneg(d1, d2, d3) and any(d)):
                return Fraction(0)
            return _frac_or_zero(d3 - 1, 2 * d1 + 2 * d2 + 3 * d3 - 1,
                                 [d1, d2, d3, d1 + d3, d2 + d3])
        return [MirrorFixture(name, 1, a1)]
    if name == "KdP3":
        def a1(d):
            d1, d2, d3, d4 = d
            if not (_nonneg(d1 + d3, d1 + d4, d2 + d3, d2 + d4, d3, d4) and any(d)):
                return Fraction(0)
            return _frac_or_zero(d3 + d4 - 1, 2 * d1 + 2 * d2 + 3 * d3 + 3 * d4 - 1,
                                 [d1 + d3, d1 + d4, d2 + d3, d2 + d4, d3, d4])
        return [MirrorFixture(name, 1, a1)]
    if name.startswith("Ym"):
        return _ym_mirror(int(name[2:]))
    return []


def _ym_mirror(m: int) -> list:
    name = f"Ym{m}"

    def D(d, j):
        return d[j - 1] if 1 <= j <= m else 0

    def chain(d, skip=None):
        # (d_{b-1} - 2 d_b + d_{b+1})! for b = 3..m-1
        return [D(d, b - 1) - 2 * D(d, b) + D(d, b + 1) for b in range(3, m) if b != skip]

    def a4(d):
        if not any(d):
            return Fraction(0)
        d1, d2, d3 = D(d, 1), D(d, 2), D(d, 3)
        t = 2 * d1 + 2 * d2 - d3
        return _frac_or_zero(t - 1, t - 1,
                             [d1, d1, d2, D(d, m - 1) - 2 * D(d, m), D(d, m)] + chain(d))

    def ai(i):
        def a(d):
            if not any(d):
                return Fraction(0)
            d1, d2, d3 = D(d, 1), D(d, 2), D(d, 3)
            c = D(d, i - 3) - 2 * D(d, i - 2) + D(d, i - 1)
            return _frac_or_zero(c - 1, -c - 1,
                                 [d1, d1, d2, -2 * d1 - 2 * d2 + d3,
                                  D(d, m - 1) - 2 * D(d, m), D(d, m)] + chain(d, skip=i - 2))
        return a

    def a_r1(d):
        if not any(d):
            return Fraction(0)
        d1, d2, d3 = D(d, 1), D(d, 2), D(d, 3)
        t = 2 * D(d, m) - D(d, m - 1)
        return _frac_or_zero(t - 1, t - 1,
                             [d1, d1, d2, -2 * d1 - 2 * d2 + d3, D(d, m)] + chain(d))

    def a_r(d):
        if not any(d):
            return Fraction(0)
        d1, d2, d3 = D(d, 1), D(d, 2), D(d, 3)
        return _frac_or_zero(D(d, m) - 1, -D(d, m) - 1,
                             [d1, d1, d2, -2 * d1 - 2 * d2 + d3,
                              D(d, m - 1) - 2 * D(d, m)] + chain(d))

    r = m + 3
    fx = [MirrorFixture(name, 4, a4)]
    fx += [MirrorFixture(name, i, ai(i)) for i in range(5, r - 1)]
    fx += [MirrorFixture(name, r - 1, a_r1), MirrorFixture(name, r, a_r)]
    return fx
