"""Exact arithmetic dynamics over F_q(t).

Reports come back as decoded JSON (schema "ffdyn-report/1").
"""

import json as _json

from ._core import (BerkPoint, FfdynError, Map, cross_ratio_log, diam, hsia,
                    join)
from . import _core

__all__ = ["BerkPoint", "FfdynError", "Map", "cross_ratio_log", "diam", "hsia", "join",
           "parse", "orbit", "postcritical", "preimages", "audit_limit", "audit_fibers",
           "exponent", "run"]


def parse(source, field="p=5"):
    return Map(source, field)


def _map(m, field):
    return m if isinstance(m, Map) else Map(m, field)


def orbit(m, seed="0", max_steps=64, field="p=5"):
    return _json.loads(_core._report_orbit(_map(m, field), str(seed), max_steps))


def postcritical(m, gammas=("inf",), max_steps=64, field="p=5"):
    return _json.loads(_core._report_postcritical(_map(m, field), [str(g) for g in gammas], max_steps))


def preimages(m, gamma, depth=1, field="p=5"):
    return _json.loads(_core._report_preimages(_map(m, field), str(gamma), depth))


def audit_limit(m, seed, gammas=("inf",), n_range=(1, 10), delta="1", field="p=5"):
    return _json.loads(_core._report_limit(_map(m, field), str(seed), [str(g) for g in gammas],
                                           n_range[0], n_range[1], str(delta)))


def audit_fibers(m, gamma, depth=1, prec=24, field="p=5"):
    return _json.loads(_core._report_fibers(_map(m, field), str(gamma), depth, prec))


def exponent(G, budget=64, field="p=5"):
    return _json.loads(_core._report_exponent(G, field, budget))


def run(config):
    """Full experiment. Returns (exit_code, report, csv_tables)."""
    text = config if isinstance(config, str) else _json.dumps(config)
    code, report, csv = _core._run(text)
    return code, _json.loads(report), dict(csv)
