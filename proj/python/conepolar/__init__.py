"""Exact local positivity invariants on polyhedral cone models.

Classes are passed as sequences of ints, strings or Fractions. Exact values
come back as Fraction; interval-valued results as (lo, hi) Fraction pairs.
"""

import json
from fractions import Fraction

from . import _conepolar as _core
from ._conepolar import ContractError, Model, ModelError, catalog_ids, load_catalog_model, load_model, load_model_file

__all__ = [
    "ContractError", "Model", "ModelError", "catalog_ids", "load_catalog_model", "load_model", "load_model_file",
    "seshadri_s", "seshadri_s_via_curves", "nakayama_n", "nakayama_N", "seshadri_S", "global_S", "volume",
    "vol_hat", "M", "dual_rays", "run_suite", "golden_run",
]


def _vec(xs):
    return [str(Fraction(x)) for x in xs]


def _polar(d):
    out = dict(d)
    out["lo"], out["hi"] = Fraction(d["lo"]), Fraction(d["hi"])
    if "argmin" in d:
        out["argmin"] = [Fraction(x) for x in d["argmin"]]
    return out


def seshadri_s(model, profile, l):
    return Fraction(_core.seshadri_s(model, profile, _vec(l)))


def seshadri_s_via_curves(model, profile, l):
    return Fraction(_core.seshadri_s_via_curves(model, profile, _vec(l)))


def nakayama_n(model, profile, l):
    return Fraction(_core.nakayama_n(model, profile, _vec(l)))


def nakayama_N(model, profile, alpha, route="exit", tol=Fraction(1, 10**9)):
    return _polar(_core.nakayama_N(model, profile, _vec(alpha), route, str(Fraction(tol))))


def seshadri_S(model, profile, alpha, route="exit", tol=Fraction(1, 10**9)):
    return _polar(_core.seshadri_S(model, profile, _vec(alpha), route, str(Fraction(tol))))


def global_S(model, alpha):
    return Fraction(_core.global_S(model, _vec(alpha)))


def volume(model, l):
    return Fraction(_core.volume(model, _vec(l)))


def vol_hat(model, alpha, tol=Fraction(1, 10**9)):
    lo, hi = _core.vol_hat(model, _vec(alpha), str(Fraction(tol)))
    return Fraction(lo), Fraction(hi)


def M(model, alpha, tol=Fraction(1, 10**9)):
    lo, hi = _core.M(model, _vec(alpha), str(Fraction(tol)))
    return Fraction(lo), Fraction(hi)


def dual_rays(model, cone):
    return [[Fraction(x) for x in r] for r in _core.dual_rays(model, cone)]


def run_suite(model, samples=200, seed=1, tol=Fraction(1, 10**9)):
    return json.loads(_core.run_suite(model, samples, seed, str(Fraction(tol))))


def golden_run(model, tol=Fraction(1, 10**9)):
    return json.loads(_core.golden_run(model, str(Fraction(tol))))[0]
