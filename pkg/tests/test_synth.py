from __future__ import annotations

import math
from fractions import Fraction

import pytest

from ratmap.algebra import (
    CantorAlg,
    CircleAlg,
    Compacts,
    DirectSum,
    Matrix,
    OpaqueSimple,
    Scalars,
    Tensor,
    Zero,
    collect_labels,
    normalize,
    render,
)
from ratmap.atlas import build_atlas
from ratmap.dynamics import INFINITE, critical_points, orbit_fate, periodic_cycles
from ratmap.poly import Polynomial
from ratmap.rational import RationalMap
from ratmap.restricted import ExposedOrbit, exposed_orbits
from ratmap.scalars import GaussianRational
from ratmap.sphere import SpherePoint
from ratmap.synth import (
    ExposureResolver,
    full_decomposition,
    julia_extension,
    julia_orbit_algebra,
    region_extension,
)


def pipeline(r, max_period=4, declarations=()):
    crit = critical_points(r)
    cycles, _, _ = periodic_cycles(r, max_period)
    fates = {c.point: orbit_fate(r, c.point, cycles) for c in crit}
    scan = exposed_orbits(r, cycles, crit=crit, fates=fates, declarations=declarations)
    atlas = build_atlas(r, cycles, crit, fates, declarations)
    resolver = ExposureResolver(scan.orbits, r.tolerance)
    julia_orbits = [o for o in scan.orbits if o.in_julia]
    dec = full_decomposition(atlas, julia_orbits, resolver, cycles)
    return crit, cycles, scan, atlas, resolver, dec


def mk_orbit(points, orbit_type, in_julia=True, aval=None):
    return ExposedOrbit(
        points=tuple(SpherePoint.finite(p) for p in points),
        orbit_type=orbit_type,
        contains_critical=(orbit_type != 1),
        in_julia=in_julia,
        asymptotic_valency=aval,
    )


def test_julia_orbit_algebra_types():
    t1 = mk_orbit([-2, 2], 1)
    assert normalize(julia_orbit_algebra(t1)) == Tensor([CircleAlg(), Matrix(2)])
    t2 = mk_orbit([0], 2, aval=2)
    assert normalize(julia_orbit_algebra(t2)) == DirectSum([CircleAlg(), CircleAlg()])
    # the dense-critical-orbit configuration: type 3 with valency 2 gives C + C
    t3 = mk_orbit([0], 3, aval=2)
    assert normalize(julia_orbit_algebra(t3)) == DirectSum([Scalars(), Scalars()])


def test_julia_orbit_algebra_guards():
    with pytest.raises(ValueError):
        julia_orbit_algebra(mk_orbit([0], 2, in_julia=False, aval=2))
    with pytest.raises(ValueError):
        julia_orbit_algebra(mk_orbit([0], 2, aval=INFINITE))


def test_julia_extension_collapses_without_orbits():
    ext = julia_extension([])
    assert ext.collapsed
    assert isinstance(ext.total, OpaqueSimple)
    assert "purely_infinite" in ext.total.attributes
    assert "simple" in ext.total.attributes


def test_region_extension_zsq():
    r = RationalMap(Polynomial([1, 0, 0]), Polynomial([1]))
    crit, cycles, scan, atlas, resolver, dec = pipeline(r)
    for rs in dec.fatou_regions:
        ext = rs.extension
        assert render(ext.ideal) == "K (x) MT_2"
        assert normalize(ext.quotient) == CantorAlg()


def test_region_extension_attracting():
    r = RationalMap(
        Polynomial([1, 0, GaussianRational(Fraction(-1, 2))]), Polynomial([1])
    )
    crit, cycles, scan, atlas, resolver, dec = pipeline(r, max_period=2)
    att = next(
        rs for rs in dec.fatou_regions
        if atlas.regions[rs.region_id].core.kind == "attracting"
    )
    ext = att.extension
    assert render(ext.ideal) == "K (x) C(T^2)"
    # (C(T) (x) K) (+) (C^2 (x) K): q and the critical point are not exposed
    want = DirectSum([
        Tensor([CircleAlg(), Compacts()]),
        DirectSum([Tensor([Compacts()]), Tensor([Compacts()])]),
    ])
    assert normalize(ext.quotient) == normalize(
        DirectSum([
            Tensor([CircleAlg(), Compacts()]),
            Compacts(), Compacts(),
        ])
    )


def test_declared_siegel_extension():
    theta = (math.sqrt(5) - 1) / 2
    lam = complex(math.cos(2 * math.pi * theta), math.sin(2 * math.pi * theta))
    r = RationalMap(Polynomial([complex(1.0), lam, complex(0.0)]), Polynomial([1.0]))
    dec_list = [{"kind": "siegel", "anchor_point": SpherePoint.finite(0.0), "theta": theta}]
    crit, cycles, scan, atlas, resolver, dec = pipeline(r, max_period=1, declarations=dec_list)
    siegel = next(
        rs for rs in dec.fatou_regions
        if atlas.regions[rs.region_id].core.kind == "siegel"
    )
    assert render(siegel.extension.ideal) == "K (x) C_0(R) (x) A_theta"
    assert atlas.regions[siegel.region_id].core.theta == pytest.approx(theta)


def test_full_decomposition_zsq_square():
    r = RationalMap(Polynomial([1, 0, 0]), Polynomial([1]))
    *_, dec = pipeline(r)
    corners = dec.square.corners
    assert render(corners["fatou_free"]) == "(K (x) MT_2) (+) (K (x) MT_2)"
    assert corners["iota_p"] == Zero()
    assert normalize(corners["iota_c"]) == DirectSum([CantorAlg(), CantorAlg()])
    assert isinstance(corners["julia"], OpaqueSimple)


def test_full_decomposition_chebyshev():
    r = RationalMap(Polynomial([1, 0, -2]), Polynomial([1]))
    *_, dec = pipeline(r)
    assert len(dec.fatou_regions) == 1
    ext = dec.fatou_regions[0].extension
    assert render(ext.ideal) == "K (x) MT_2"
    assert normalize(ext.quotient) == CantorAlg()
    assert normalize(dec.julia.quotient) == Tensor([CircleAlg(), Matrix(2)])


def test_full_decomposition_whole_sphere_collapses():
    r = RationalMap(Polynomial([1, -4, 4]), Polynomial([1, 0, 0]))
    *_, dec = pipeline(r)
    assert dec.fatou_regions == []
    assert dec.julia_fatou.ideal == Zero()
    assert normalize(dec.julia.quotient) == DirectSum([
        CircleAlg(), CircleAlg(), Tensor([CircleAlg(), Matrix(2)])
    ])


def test_symbols_trace_to_inventory():
    # every compacts-on label in the emitted formulas names an actual
    # critical record or anchor point of the inventory
    for coeffs, den in (
        ([1, 0, 0], [1]),
        ([1, 0, -2], [1]),
        ([1, 0, GaussianRational(Fraction(-1, 2))], [1]),
    ):
        r = RationalMap(Polynomial(coeffs), Polynomial(den))
        crit, cycles, scan, atlas, resolver, dec = pipeline(r)
        known = {str(rec.point) for reg in atlas.regions for rec in reg.critical_records}
        for cyc in cycles:
            known.update(str(p) for p in cyc.points)
        for rs in dec.fatou_regions:
            if rs.extension is None:
                continue
            for label in collect_labels(rs.extension.quotient):
                assert label in known, label
