from __future__ import annotations

import math
from fractions import Fraction

import pytest

from ratmap.algebra import Matrix, render
from ratmap.atlas import build_atlas
from ratmap.dynamics import INFINITE, critical_points, orbit_fate, periodic_cycles
from ratmap.errors import RatmapError
from ratmap.poly import Polynomial
from ratmap.primitive import IsotropyGroup, PointContext, isotropy_of, primitive_catalog
from ratmap.rational import RationalMap
from ratmap.restricted import exposed_orbits
from ratmap.scalars import GaussianRational
from ratmap.synth import ExposureResolver, full_decomposition


def catalog_for(r, max_period=4):
    crit = critical_points(r)
    cycles, _, _ = periodic_cycles(r, max_period)
    fates = {c.point: orbit_fate(r, c.point, cycles) for c in crit}
    scan = exposed_orbits(r, cycles, crit=crit, fates=fates)
    atlas = build_atlas(r, cycles, crit, fates)
    resolver = ExposureResolver(scan.orbits, r.tolerance)
    julia_orbits = [o for o in scan.orbits if o.in_julia]
    dec = full_decomposition(atlas, julia_orbits, resolver, cycles)
    return primitive_catalog(atlas, dec, scan, cycles, resolver, r.tolerance)


def test_isotropy_case_table():
    # critical, periodic (superattracting cycle member)
    g = isotropy_of(PointContext(periodic=True, critical=True, preperiodic=True,
                                 lands_on_critical_cycle=True,
                                 asymptotic_valency=INFINITE))
    assert g.kind == "subgroup_of_Q_mod_Z"
    # critical, not pre-periodic, valency 2
    g = isotropy_of(PointContext(periodic=False, critical=True, preperiodic=False,
                                 lands_on_critical_cycle=False, asymptotic_valency=2))
    assert g == IsotropyGroup("finite_cyclic", 2)
    # non-critical periodic (Julia type-1 exposed, or an attracting cycle)
    g = isotropy_of(PointContext(periodic=True, critical=False, preperiodic=True))
    assert g.kind == "Z"
    # critical pre-periodic landing on a non-critical cycle
    g = isotropy_of(PointContext(periodic=False, critical=True, preperiodic=True,
                                 lands_on_critical_cycle=False, asymptotic_valency=3))
    assert g == IsotropyGroup("Z_plus_finite_cyclic", 3)


def test_isotropy_unresolved_context():
    with pytest.raises(RatmapError):
        isotropy_of(PointContext(periodic=False, critical=True, preperiodic=False,
                                 lands_on_critical_cycle=False,
                                 asymptotic_valency=None))


def test_catalog_zsq():
    r = RationalMap(Polynomial([1, 0, 0]), Polynomial([1]))
    cat = catalog_for(r)
    assert cat.t0_verdict == "not_T0"
    kinds = [e.co_support["kind"] for e in cat.entries]
    assert kinds.count("julia") == 1
    assert kinds.count("exposed_orbit") == 2
    assert kinds.count("orbit_plus_julia") == 0
    assert kinds.count("closure_of_free_orbit") == 2
    julia_entry = next(e for e in cat.entries if e.co_support["kind"] == "julia")
    assert julia_entry.simple  # no exposed points in the Julia set
    for e in cat.entries:
        if e.co_support["kind"] == "exposed_orbit":
            assert e.parametrization["cardinality"] == "cantor"
            assert e.quotient == Matrix(1)
            assert e.simple
    sup = next(e for e in cat.entries if e.co_support["kind"] == "closure_of_free_orbit")
    assert sup.quotient.region_kind == "superattracting"
    assert render(sup.quotient.top) == "BD(2^inf) (x) K"


def test_catalog_chebyshev():
    r = RationalMap(Polynomial([1, 0, -2]), Polynomial([1]))
    cat = catalog_for(r)
    assert cat.t0_verdict == "not_T0"
    julia_entry = next(e for e in cat.entries if e.co_support["kind"] == "julia")
    assert not julia_entry.simple  # {-2, 2} is exposed inside the Julia set
    exposed = {tuple(e.co_support["points"]): e for e in cat.entries
               if e.co_support["kind"] == "exposed_orbit"}
    circle_family = exposed[("-2", "2")]
    assert circle_family.parametrization["group"] == "Z"
    assert circle_family.parametrization["cardinality"] == "circle"
    assert circle_family.quotient == Matrix(2)
    cantor_family = exposed[("inf",)]
    assert cantor_family.parametrization["cardinality"] == "cantor"
    assert sorted(cat.simple_quotients) == ["M_1", "M_2"]


def test_catalog_rees_shape():
    r = RationalMap(Polynomial([1, -4, 4]), Polynomial([1, 0, 0]))
    cat = catalog_for(r)
    # whole-sphere Julia set but exposed points exist: still not T0
    assert cat.t0_verdict == "not_T0"
    exposed = {tuple(e.co_support["points"]): e for e in cat.entries
               if e.co_support["kind"] == "exposed_orbit"}
    assert exposed[("1", "inf")].parametrization["group"] == "Z"
    assert exposed[("0",)].parametrization["group"] == "Z + Z_2"
    assert all(
        q in ("M_1", "M_2") for q in cat.simple_quotients
    )  # only matrix algebras are simple quotients here
    assert not any(e.co_support["kind"] == "closure_of_free_orbit" for e in cat.entries)


def test_catalog_attracting_case_iii():
    r = RationalMap(
        Polynomial([1, 0, GaussianRational(Fraction(-1, 2))]), Polynomial([1])
    )
    cat = catalog_for(r, max_period=2)
    case_iii = [e for e in cat.entries if e.co_support["kind"] == "orbit_plus_julia"]
    groups = sorted(e.parametrization["group"] for e in case_iii)
    assert groups == ["Z", "Z_2"]
    for e in case_iii:
        assert not e.simple
        ext = e.quotient
        assert render(ext.ideal) == "K"
    case_iv = [e for e in cat.entries if e.co_support["kind"] == "closure_of_free_orbit"]
    kinds = sorted(e.quotient.region_kind for e in case_iv)
    assert kinds == ["attracting", "superattracting"]
    att = next(e for e in case_iv if e.quotient.region_kind == "attracting")
    assert render(att.quotient.top) == "K"
    assert any(row.label == "periodic-orbit row" for row in att.quotient.rows)
