from __future__ import annotations

import math

import pytest

from ratmap.scalars import GaussianRational
from ratmap.sphere import INFINITY, SpherePoint, coincide, parse_point


def test_canonical_form():
    p = SpherePoint(GaussianRational(6), GaussianRational(2))
    assert p.value() == GaussianRational(3)
    assert p.w == GaussianRational(1)
    q = SpherePoint(GaussianRational(5), GaussianRational(0))
    assert q.is_infinity


def test_scaling_invariance():
    a = SpherePoint(GaussianRational(1), GaussianRational(2))
    b = SpherePoint(GaussianRational(3), GaussianRational(6))
    assert a == b


def test_zero_zero_rejected():
    with pytest.raises(ValueError):
        SpherePoint(0, 0)


def test_chordal_metric():
    zero = SpherePoint.finite(0)
    one = SpherePoint.finite(1)
    inf = INFINITY
    assert zero.chordal(inf) == pytest.approx(2.0)
    assert zero.chordal(zero) == 0.0
    assert zero.chordal(one) == pytest.approx(2.0 / math.sqrt(2.0))
    # symmetric
    assert one.chordal(inf) == pytest.approx(inf.chordal(one))


def test_floating_infinity_is_not_exact():
    p = SpherePoint(1e20 + 0j, 1.0 + 0j)
    assert p.is_infinity
    assert not p.is_exact
    assert p == INFINITY  # same sphere point
    assert coincide(p, INFINITY, 1e-9)


def test_coincide_exact_vs_tolerance():
    a = SpherePoint.finite(GaussianRational(1))
    b = SpherePoint.finite(GaussianRational(1))
    assert coincide(a, b, 0.0)
    c = SpherePoint.finite(1.0 + 1e-12j)
    assert coincide(a, c, 1e-9)
    assert not coincide(a, SpherePoint.finite(1.0 + 1e-6j), 1e-9)


def test_parse_point():
    assert parse_point("inf").is_infinity
    assert parse_point("-1/2").value() == GaussianRational(-0.5)
