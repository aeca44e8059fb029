from fractions import Fraction as F

import pytest

from toricdisk import catalog
from toricdisk.amodel import (bracket_coefficient, disk_factor_neg,
                              disk_factor_pos, f_q_series, framing_direction,
                              j_bracket, l_minus)
from toricdisk.bmodel import w0_series
from toricdisk.series import DomainError
from toricdisk.toric import (GeometryError, default_grading, inner_n,
                             open_charge)


def test_positive_disk_factor():
    for f in range(-3, 4):
        assert disk_factor_pos(1, f) == (-1) ** f
    assert disk_factor_pos(2, 1) == F(3, 4)
    assert disk_factor_pos(3, 0) == F(1, 9)
    with pytest.raises(DomainError):
        disk_factor_pos(0, 0)


def test_negative_disk_factor():
    for f in range(-3, 4):
        for n in (-2, 0, 1):
            assert disk_factor_neg(-1, f, n) == (-1) ** (f + n)
    assert disk_factor_neg(-2, 0, 0) == F(1, 4)
    assert disk_factor_neg(-1, 0, -2) == 1
    with pytest.raises(DomainError):
        disk_factor_neg(1, 0, 0)


def test_l_minus_examples():
    g = catalog.CONIFOLD
    for f in range(-2, 3):
        assert l_minus(g, catalog.brane(g, "I", f)) == (f + 1, -f, -1, 0)
        b = catalog.brane(catalog.KP2, "I", f)
        assert l_minus(catalog.KP2, b)[b.i2 - 1] == f - 1
    with pytest.raises(GeometryError):
        l_minus(g, catalog.brane(g, "II"))


def test_l_minus_slot_values_everywhere():
    for name in catalog.CATALOG_NAMES:
        g = catalog.geometry(name)
        for b in catalog.branes(g):
            if b.kind != "inner":
                continue
            for f in (-2, 0, 3):
                bf = b.framed(f)
                lm, n = l_minus(g, bf), inner_n(g, bf)
                assert sum(lm) == 0
                assert lm[b.i2 - 1] == f + n + 1
                assert lm[b.i3 - 1] == -(f + n)
                assert lm[b.i4 - 1] == -1


def test_bracket_constant_term_and_support():
    for name in ("KP2", "KF0", "KdP1"):
        g = catalog.geometry(name)
        for b in catalog.branes(g):
            gr = default_grading(g, b)
            bf = b.framed(1)
            brackets = [(open_charge(g, bf), w) for w in (1, 2, 3)]
            if b.kind == "inner":
                brackets += [(l_minus(g, bf), w) for w in (-1, -2)]
            for l, w in brackets:
                J = j_bracket(g, l, w, gr, 6, framing_direction(g, b))
                assert J.constant_term() == 1
                assert all(e[0] == 0 and g.is_effective(e[1:]) for e, _ in J.items())


def test_naive_bracket_loses_cancelling_zero_and_pole():
    # conifold outer phase, f = 0, w = 2, beta = 2: the i2 slot has a zero
    # (w f = 0) and the i3 slot a pole; together they give a finite term
    g = catalog.CONIFOLD
    b = catalog.brane(g, "II", 0)
    l0 = open_charge(g, b)
    assert bracket_coefficient(g, l0, 2, (2,)) == 0
    assert bracket_coefficient(g, l0, 2, (2,), framing_direction(g, b)) == F(-1)
    W = w0_series(g, b, (1, 1), 4)
    naive = f_q_series(g, b, (1, 1), 4, regularize=False)
    assert W.coeff((2, 2)) == F(-1, 4)
    assert naive.coeff((2, 2)) == 0
    assert f_q_series(g, b, (1, 1), 4) == W


def test_conifold_inner_amodel():
    g = catalog.CONIFOLD
    b = catalog.brane(g, "I", 0)
    Fq = f_q_series(g, b, (1, 2), 10)
    expected = {(w, 0): F(1, w * w) for w in range(1, 11)}
    expected.update({(-m, m): F(1, m * m) for m in range(1, 11)})
    assert dict(Fq.items()) == expected


def test_unit_winding_constant():
    g = catalog.KP2
    for b in catalog.branes(g):
        for f in range(-3, 4):
            bf = b.framed(f)
            assert f_q_series(g, bf, default_grading(g, bf), 4).coeff((1, 0)) == (-1) ** f


def _phases():
    out = []
    for name in catalog.CATALOG_NAMES:
        g = catalog.geometry(name)
        out += [(g, b) for b in catalog.branes(g)]
    return out


@pytest.mark.parametrize("g,b", _phases(), ids=lambda x: getattr(x, "label", None) or x.name)
def test_amodel_equals_bmodel_every_phase(g, b):
    N = 6 if g.k <= 2 else 5
    for f in range(-3, 4):
        bf = b.framed(f)
        gr = default_grading(g, bf)
        Fq = f_q_series(g, bf, gr, N)
        assert Fq == w0_series(g, bf, gr, N)
        if b.kind == "outer":
            assert all(e[0] > 0 for e, _ in Fq.items())
