"""Exact-arithmetic constructions, identity checks and classification of
absolute-valued algebras with left unit.

Rationals cross the boundary as "p/q" strings; algebra specs are the same JSON
documents the CLI consumes. The JSON-returning core functions are wrapped here
to return plain dicts.
"""

import json as _json

from avalg._core import (
    cd_product,
    conjugator,
    im_sphere_point,
    is_absolute_valued,
    left_unit,
    product,
    quat_mul,
    rat_add,
    rat_mul,
    sphere_point,
    suite_catalog,
)
from avalg import _core


def _spec_text(spec):
    return spec if isinstance(spec, str) else _json.dumps(spec)


def associator(spec, x, y, z):
    return _core.associator(_spec_text(spec), x, y, z)


def classify(spec, samples=20, seed=1):
    return _json.loads(_core.classify_json(_spec_text(spec), samples, seed))


def fingerprint(spec, samples=20, seed=1):
    return _json.loads(_core.fingerprint_json(_spec_text(spec), samples, seed))


def identity_reports(spec, exact_sextic=False, samples=20, seed=0):
    return _json.loads(_core.identity_reports_json(_spec_text(spec), exact_sextic, samples, seed))


def run_suite(suite, seed=0, samples=20):
    return _json.loads(_core.run_suite_json(suite, seed, samples))


def run_all_suites(seed=0, samples=20):
    return _json.loads(_core.run_all_suites_json(seed, samples))


def tables(seed=0, samples=20):
    return _json.loads(_core.tables_json(seed, samples))


__all__ = [
    "associator",
    "cd_product",
    "classify",
    "conjugator",
    "fingerprint",
    "identity_reports",
    "im_sphere_point",
    "is_absolute_valued",
    "left_unit",
    "product",
    "quat_mul",
    "rat_add",
    "rat_mul",
    "run_all_suites",
    "run_suite",
    "sphere_point",
    "suite_catalog",
    "tables",
]
