from fractions import Fraction

import pytest

import conepolar as cp


def test_catalog_ids():
    assert cp.catalog_ids() == sorted(cp.catalog_ids())
    assert {"BlqP2", "P1xP1", "P2"} <= set(cp.catalog_ids())


def test_blowup_of_p2_invariants():
    m = cp.load_catalog_model("BlqP2")
    assert m.dim == 2 and m.rho == 2
    assert "on_curve_F" in m.profiles
    h = [1, 0]
    assert cp.seshadri_S(m, "on_curve_F", h)["hi"] == 0
    assert cp.seshadri_S(m, "generic", h)["lo"] > 0
    assert cp.global_S(m, h) == 0
    lo, hi = cp.M(m, h)
    assert lo > 0


def test_routes_agree():
    m = cp.load_catalog_model("Bl2P2")
    alpha = [sum(c) for c in zip(*cp.dual_rays(m, "eff_div"))]
    a = cp.seshadri_S(m, "generic", alpha, route="exit")
    b = cp.seshadri_S(m, "generic", alpha, route="polar")
    assert a["exact"]
    assert b["lo"] - Fraction(1, 10**9) <= a["lo"] <= b["hi"] + Fraction(1, 10**9)


def test_am_gm_on_p1xp1():
    m = cp.load_catalog_model("P1xP1")
    lo, hi = cp.M(m, [1, 1])
    assert abs(lo - 2) <= Fraction(1, 10**9) and abs(hi - 2) <= Fraction(1, 10**9)


def test_dual_rays_and_errors():
    m = cp.load_catalog_model("P2")
    assert cp.dual_rays(m, "nef") == [[Fraction(1)]]
    with pytest.raises(ValueError):
        cp.dual_rays(m, "ample")
    with pytest.raises(ValueError):
        cp.load_catalog_model("nope")
    with pytest.raises(ValueError):
        cp.nakayama_N(m, "generic", [1], route="sideways")


def test_suite_and_golden_json():
    m = cp.load_catalog_model("P1xP1")
    reports = cp.run_suite(m, samples=10, seed=3)
    assert reports and all(r["status"] in ("PASS", "SKIP") for r in reports)
    assert reports == cp.run_suite(m, samples=10, seed=3)
    assert cp.golden_run(m)["status"] == "PASS"
