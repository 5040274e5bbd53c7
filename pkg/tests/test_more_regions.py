"""Region shapes beyond the acceptance maps: pole-heavy cycles, Herman
declarations, parabolic quotient pictures."""

from __future__ import annotations

from fractions import Fraction

import pytest

from ratmap.algebra import render
from ratmap.atlas import build_atlas
from ratmap.dynamics import critical_points, orbit_fate, periodic_cycles
from ratmap.poly import Polynomial
from ratmap.rational import RationalMap
from ratmap.report import AnalysisConfig, parse_map, run_analysis
from ratmap.restricted import exposed_orbits
from ratmap.scalars import GaussianRational
from ratmap.synth import ExposureResolver, case_iv_diagram, full_decomposition


def test_inverse_square_superattracting_two_cycle():
    # R = 1/z^2: the critical points 0 and inf swap, forming a
    # superattracting 2-cycle of local degree 4
    d = run_analysis(
        parse_map({"numerator": ["1"], "denominator": ["1", "0", "0"]}),
        AnalysisConfig(max_period=2),
    ).data
    two = next(c for c in d["cycles"] if c["period"] == 2)
    assert two["classification"] == "superattracting"
    assert two["local_degree"] == 4
    assert sorted(two["points"]) == ["0", "inf"]
    regions = d["atlas"]["regions"]
    assert len(regions) == 1
    ext = d["algebra"]["fatou_regions"][0]["extension"]
    assert ext["text"].startswith("0 -> K (x) MT_4 -> ")
    # two distinct orbit classes on the cycle (their valency ladders differ),
    # hence two Cantor summands
    assert ext["quotient_normal_text"] == "C(K) (+) C(K)"
    # both cycle points are exceptional: exposed, in the Fatou set
    assert sorted(d["exposed"]["union"]) == ["0", "inf"]
    assert all(not o["in_julia"] for o in d["exposed"]["orbits"])


def test_herman_declaration_on_cubic():
    cfg = AnalysisConfig(
        max_period=1,
        declarations=[{"kind": "herman", "theta": 0.30102999566398114, "period": 1}],
    )
    d = run_analysis(
        parse_map({"numerator": ["1", "0", "0", "0"], "denominator": ["1"]}), cfg
    ).data
    kinds = [reg["core_type"]["kind"] for reg in d["atlas"]["regions"]]
    assert kinds == ["superattracting", "superattracting", "herman"]
    herman_ext = d["algebra"]["fatou_regions"][2]["extension"]
    assert herman_ext["text"].startswith("0 -> K (x) C_0(R) (x) A_theta -> ")
    # no critical record could attach to the declared ring within budget
    assert herman_ext["quotient_normal_text"] == "0"
    assert any(w["code"] == "region-missing-critical-record" for w in d["warnings"])
    # the case-iv quotient picture swaps compacts for the stabilized
    # rotation algebra
    case_iv = [
        e for e in d["primitive_ideals"]["entries"]
        if e["co_support"]["kind"] == "closure_of_free_orbit"
    ]
    herman_diag = next(
        e["quotient"]["diagram"] for e in case_iv
        if e["quotient"]["diagram"]["region_kind"] == "herman"
    )
    top_atoms = [f["atom"] for f in herman_diag["top"]["factors"]]
    assert sorted(top_atoms) == ["compacts", "irrational_rotation"]


def test_parabolic_case_iv_diagram():
    r = RationalMap(
        Polynomial([1, 0, GaussianRational(Fraction(1, 4))]), Polynomial([1])
    )
    crit = critical_points(r)
    cycles, _, _ = periodic_cycles(r, 2)
    fates = {c.point: orbit_fate(r, c.point, cycles) for c in crit}
    scan = exposed_orbits(r, cycles, crit=crit, fates=fates)
    atlas = build_atlas(r, cycles, crit, fates)
    res = ExposureResolver(scan.orbits, r.tolerance)
    dec = full_decomposition(atlas, [o for o in scan.orbits if o.in_julia], res, cycles)
    par = next(reg for reg in atlas.regions if reg.core.kind == "parabolic")
    ext = next(
        rs.extension for rs in dec.fatou_regions if rs.region_id == par.region_id
    )
    assert render(ext.ideal) == "K (x) C(T) (x) C_0(R)"
    diag = case_iv_diagram(par, res, cycles, dec.square.corners["julia"])
    assert render(diag.top) == "K"
    labels = [row.label for row in diag.rows]
    assert labels == ["fatou column", "main row", "bookkeeping row"]
    assert render(diag.rows[0].quotient) == "C^2 (x) K_[0]"


def test_bd_k_theory_in_report():
    d = run_analysis(
        parse_map({"numerator": ["1", "0", "0"], "denominator": ["1"]})
    ).data
    case_iv = next(
        e for e in d["primitive_ideals"]["entries"]
        if e["co_support"]["kind"] == "closure_of_free_orbit"
    )
    top = case_iv["quotient"]["diagram"]["top"]
    bd = next(f for f in top["factors"] if f["atom"] == "bunce_deddens")
    assert bd["k_theory"] == {"K0": "Z[1/2] (ordered, unit 1)", "K1": "Z"}
