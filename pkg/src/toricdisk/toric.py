"""Toric Calabi-Yau threefolds, framed branes and their lattice data.

Ray indices are 1-based everywhere.  A curve class ``beta`` is a length-k
integer vector of coordinates in the basis of charge vectors; an extended
class is ``(w, d_1, ..., d_k)`` with ``w`` the winding number.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cache

import sympy

OUTER = "outer"
INNER = "inner"


class GeometryError(ValueError):
    """Inconsistent geometry or brane data."""


class ConfigurationError(ValueError):
    """A grading or truncation request that cannot be honoured."""


@dataclass(frozen=True)
class ToricCY3:
    name: str
    charge: tuple
    max_cones: tuple
    rays: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "charge", tuple(tuple(int(x) for x in row) for row in self.charge))
        object.__setattr__(self, "max_cones", tuple(frozenset(int(i) for i in c) for c in self.max_cones))
        if self.rays is not None:
            object.__setattr__(self, "rays", tuple(tuple(int(x) for x in v) for v in self.rays))

    @property
    def k(self) -> int:
        return len(self.charge)

    @property
    def r(self) -> int:
        return len(self.charge[0]) if self.charge else 0

    def column(self, i: int) -> tuple:
        if not 1 <= i <= self.r:
            raise IndexError(f"ray index {i} out of range 1..{self.r}")
        return tuple(row[i - 1] for row in self.charge)

    def pairing(self, beta, i: int) -> int:
        """``<D_i*, beta> = sum_a d_a l_i^(a)``."""
        col = self.column(i)
        if len(beta) != self.k:
            raise ValueError(f"class {beta} should have {self.k} entries")
        return sum(d * c for d, c in zip(beta, col))

    def pairings(self, beta) -> tuple:
        return tuple(self.pairing(beta, i) for i in range(1, self.r + 1))

    def is_effective(self, beta) -> bool:
        neg = frozenset(i + 1 for i, p in enumerate(self.pairings(beta)) if p < 0)
        return any(neg <= cone for cone in self.max_cones)

    def has_cone(self, idx) -> bool:
        return frozenset(idx) in self.max_cones


@dataclass(frozen=True)
class BraneSpec:
    kind: str
    i1: int
    i2: int
    i3: int
    i4: int | None = None
    framing: int = 0
    label: str = ""

    @property
    def inner(self) -> bool:
        return self.kind == INNER

    @property
    def I0(self) -> frozenset:
        return frozenset((self.i1, self.i2, self.i3))

    def framed(self, f: int) -> "BraneSpec":
        return replace(self, framing=int(f))


@dataclass
class ValidationReport:
    issues: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    def add(self, kind, message):
        self.issues.append((kind, message))

    def __str__(self):
        if self.ok:
            return "valid"
        return "\n".join(f"[{k}] {m}" for k, m in self.issues)


def validate(g: ToricCY3, b: BraneSpec | None = None) -> ValidationReport:
    """Check every structural invariant; never raises."""
    rep = ValidationReport()
    if not g.charge:
        rep.add("charge", "no charge vectors")
        return rep
    r = g.r
    for a, row in enumerate(g.charge, 1):
        if len(row) != r:
            rep.add("charge", f"row {a} has length {len(row)}, expected {r}")
        elif sum(row) != 0:
            rep.add("charge", f"row {a} = {row} violates the CY condition (sum {sum(row)})")
    if not rep.ok:
        return rep
    if r != g.k + 3:
        rep.add("charge", f"{g.k} charge rows but {r} rays (expected r = k + 3)")
    if sympy.Matrix(g.charge).rank() != g.k:
        rep.add("charge", "charge matrix is rank deficient")
    for c in g.max_cones:
        if len(c) != 3 or any(not 1 <= i <= r for i in c):
            rep.add("cone", f"cone {sorted(c)} must have 3 ray indices in 1..{r}")
    if len(set(g.max_cones)) != len(g.max_cones):
        rep.add("cone", "repeated maximal cone")
    if not rep.ok:
        return rep
    for c in g.max_cones:
        rest = sorted(set(range(1, r + 1)) - c)
        m = sympy.Matrix([[g.charge[a][i - 1] for a in range(g.k)] for i in rest])
        if abs(m.det()) != 1:
            rep.add("cone", f"cone {sorted(c)}: complementary charge minor is not unimodular")
    if g.rays is not None:
        if len(g.rays) != r or any(len(v) != 3 for v in g.rays):
            rep.add("rays", f"need {r} integer 3-vectors")
        else:
            for a, row in enumerate(g.charge, 1):
                s = [sum(row[i] * g.rays[i][j] for i in range(r)) for j in range(3)]
                if any(s):
                    rep.add("rays", f"charge row {a} does not annihilate the rays: {s}")
            for c in g.max_cones:
                det = sympy.Matrix([g.rays[i - 1] for i in sorted(c)]).det()
                if abs(det) != 1:
                    rep.add("rays", f"cone {sorted(c)} has determinant {det}")
            V = sympy.Matrix(g.rays)
            try:
                sol, params = V.gauss_jordan_solve(sympy.ones(r, 1))
                if params.shape[0] or any(not x.is_integer for x in sol):
                    rep.add("rays", "no unique integral covector m with <m, v_i> = 1")
            except ValueError:
                rep.add("rays", "no covector m with <m, v_i> = 1 (not Calabi-Yau)")
    if b is not None:
        _validate_brane(g, b, rep)
    return rep


def _validate_brane(g, b, rep):
    idx = (b.i1, b.i2, b.i3)
    if b.kind not in (OUTER, INNER):
        rep.add("brane", f"kind must be 'outer' or 'inner', got {b.kind!r}")
        return
    if len(set(idx)) != 3 or any(not 1 <= i <= g.r for i in idx):
        rep.add("brane", f"indices {idx} must be distinct rays in 1..{g.r}")
        return
    if not g.has_cone(idx):
        rep.add("brane", f"{{i1,i2,i3}} = {sorted(idx)} is not a maximal cone")
    if b.inner:
        if b.i4 is None or not 1 <= b.i4 <= g.r:
            rep.add("brane", "inner brane needs a ray index i4")
            return
        other = frozenset((b.i2, b.i3, b.i4))
        if other not in g.max_cones or other == frozenset(idx):
            rep.add("brane", f"{{i2,i3,i4}} = {sorted(other)} is not a second maximal cone")
            return
        try:
            curve_class_alpha(g, b)
        except GeometryError as exc:
            rep.add("brane", str(exc))
    elif b.i4 is not None:
        rep.add("brane", "outer brane must not carry i4")


def require_valid(g, b=None):
    rep = validate(g, b)
    if not rep.ok:
        raise GeometryError(str(rep))


# --- brane derived data ----------------------------------------------------

def open_charge(g: ToricCY3, b: BraneSpec) -> tuple:
    """The open charge vector: 1 at i1, f at i2, -f-1 at i3."""
    f = b.framing
    l0 = [0] * g.r
    l0[b.i1 - 1] = 1
    l0[b.i2 - 1] = f
    l0[b.i3 - 1] = -f - 1
    return tuple(l0)


def extended_pairing(g: ToricCY3, b: BraneSpec, bt, i: int) -> int:
    w, beta = bt[0], tuple(bt[1:])
    if 1 <= i <= g.r:
        return w * open_charge(g, b)[i - 1] + g.pairing(beta, i)
    if i == g.r + 1:
        return w
    if i == g.r + 2:
        return -w
    raise IndexError(f"extended index {i} out of range 1..{g.r + 2}")


@cache
def curve_class_alpha(g: ToricCY3, b: BraneSpec) -> tuple:
    """Class of the compact edge an inner brane sits on."""
    if not b.inner:
        raise GeometryError("curve class alpha is only defined for inner branes")
    rows, rhs = [], []
    for i in range(1, g.r + 1):
        if i in (b.i2, b.i3):
            continue
        rows.append(list(g.column(i)))
        rhs.append(1 if i in (b.i1, b.i4) else 0)
    M, v = sympy.Matrix(rows), sympy.Matrix(rhs)
    try:
        sol, params = M.gauss_jordan_solve(v)
    except ValueError:
        raise GeometryError(f"no class alpha for brane {b.label or (b.i1, b.i2, b.i3, b.i4)}")
    if params.shape[0]:
        raise GeometryError("class alpha is not unique")
    if any(not x.is_integer for x in sol):
        raise GeometryError(f"class alpha is not integral: {list(sol)}")
    alpha = tuple(int(x) for x in sol)
    if not g.is_effective(alpha):
        raise GeometryError(f"class alpha {alpha} is not effective")
    return alpha


def inner_n(g: ToricCY3, b: BraneSpec) -> int:
    return -g.pairing(curve_class_alpha(g, b), b.i2) - 1


# --- lattice enumeration -----------------------------------------------------

_POINT_CAP = 2_000_000


def _unimodular_inverse(rows) -> list:
    M = sympy.Matrix(rows)
    if abs(M.det()) != 1:
        raise GeometryError("expected a unimodular minor")
    inv = M.inv()
    return [[int(inv[i, j]) for j in range(inv.cols)] for i in range(inv.rows)]


def _generators(inv) -> tuple:
    # columns of the inverse matrix
    return tuple(tuple(inv[i][j] for i in range(len(inv))) for j in range(len(inv)))


def _cone_points(gens, grade, bound: int, what: str):
    """All non-negative integer combinations of ``gens`` of grade <= bound."""
    gg = [grade(v) for v in gens]
    for v, gv in zip(gens, gg):
        if gv <= 0:
            raise ConfigurationError(
                f"grading is not positive on the {what} (generator {v} has grade {gv})")
    dim = len(gens[0]) if gens else 0
    out = []

    def rec(j, cur, used):
        if j == len(gens):
            out.append(tuple(cur))
            if len(out) > _POINT_CAP:
                raise ConfigurationError("enumeration exceeds the point cap")
            return
        t = 0
        while used + t * gg[j] <= bound:
            rec(j + 1, [c + t * x for c, x in zip(cur, gens[j])], used + t * gg[j])
            t += 1

    rec(0, [0] * dim, 0)
    return out


@cache
def effective_generators(g: ToricCY3) -> tuple:
    """Generators of the effective cone, one simplicial piece per maximal cone."""
    pieces = []
    for cone in sorted(g.max_cones, key=sorted):
        rest = [i for i in range(1, g.r + 1) if i not in cone]
        inv = _unimodular_inverse([list(g.column(i)) for i in rest])
        pieces.append(_generators(inv))
    return tuple(pieces)


def closed_grade(grading, beta) -> int:
    return sum(x * d for x, d in zip(grading[1:], beta))


def effective_classes(g: ToricCY3, grading, N: int) -> list:
    """Effective classes (including 0) of closed grade <= N, sorted."""
    pts = set()
    for gens in effective_generators(g):
        pts.update(_cone_points(gens, lambda v: closed_grade(grading, v), N,
                                "effective cone"))
    return sorted(pts)


@cache
def extended_generators(g: ToricCY3, b: BraneSpec) -> tuple:
    """Generators of the cone cut out by the pairings on rays other than i2, i3."""
    l0 = open_charge(g, b)
    rows = []
    for i in range(1, g.r + 1):
        if i in (b.i2, b.i3):
            continue
        rows.append([l0[i - 1]] + list(g.column(i)))
    return _generators(_unimodular_inverse(rows))


def ext_grade(grading, bt) -> int:
    return sum(x * e for x, e in zip(grading, bt))


def enumerate_extended(g: ToricCY3, b: BraneSpec, grading, N: int) -> list:
    """Extended classes with w != 0, admissible pairings and grade <= N, sorted."""
    gens = extended_generators(g, b)
    pts = _cone_points(gens, lambda v: ext_grade(grading, v), N, "extended cone")
    return sorted(p for p in pts if p[0] != 0)


# --- grading search ----------------------------------------------------------

def _positivity_targets(g: ToricCY3, b: BraneSpec | None) -> list:
    # full-length (g0, d) vectors that a grading has to make strictly positive
    from .curve import curve_exponents  # local import: curve depends on toric

    out = [(0,) + v for gens in effective_generators(g) for v in gens]
    if b is not None:
        out += list(extended_generators(g, b))
        if b.inner:
            out.append((-1,) + curve_class_alpha(g, b))
        out += [tuple(v) for v in curve_exponents(g, b)]
    return out


def grading_violations(g: ToricCY3, b: BraneSpec | None, grading) -> list:
    """Vectors that the grading fails to make strictly positive."""
    return [v for v in _positivity_targets(g, b) if ext_grade(grading, v) <= 0]


def default_grading(g: ToricCY3, b: BraneSpec | None = None, max_weight: int = 8) -> tuple:
    """Smallest positive weights (g0 = 1) that make every relevant cone positive.

    Candidates are ordered by total weight, then lexicographically, so the
    choice is deterministic.
    """
    k = g.k
    targets = _positivity_targets(g, b)
    for total in range(k, k * max_weight + 1):
        for ws in _compositions(total, k, max_weight):
            grading = (1,) + ws
            if all(ext_grade(grading, v) > 0 for v in targets):
                return grading
    raise ConfigurationError(f"no positive grading with weights <= {max_weight} for {g.name}")


def _compositions(total, parts, cap):
    # ordered tuples of positive integers <= cap summing to total, lexicographic
    if parts == 1:
        if 1 <= total <= cap:
            yield (total,)
        return
    for first in range(1, min(cap, total - parts + 1) + 1):
        for rest in _compositions(total - first, parts - 1, cap):
            yield (first,) + rest


def check_grading(grading, g: ToricCY3):
    grading = tuple(int(x) for x in grading)
    if len(grading) != g.k + 1 or any(x < 1 for x in grading):
        raise ConfigurationError(
            f"grading needs {g.k + 1} positive integers (g0..g{g.k}), got {grading}")
    return grading

