import pytest

import ffdyn


def test_parse_and_print():
    m = ffdyn.parse("(z^2 + t)/(z^2 - 1)", "p=5")
    assert m.degree == 2
    assert m.f == "z^2 + t"
    assert m.g == "z^2 + 4"
    assert ffdyn.parse(str(m)) == m
    assert m("0") == "4*t"


def test_errors():
    with pytest.raises(ffdyn.FfdynError, match="offset 2"):
        ffdyn.parse("z^")
    with pytest.raises(ffdyn.FfdynError, match="DegreeTooLow"):
        ffdyn.parse("z + t")
    with pytest.raises(ValueError):
        ffdyn.parse("z^2", "p=6")


def test_orbit_and_postcritical():
    rep = ffdyn.orbit("z^2 - 2", "0")
    assert rep["schema"] == "ffdyn-report/1"
    assert rep["status"] == "PREPERIODIC"
    assert (rep["preperiod"], rep["period"]) == (2, 1)
    pc = ffdyn.postcritical("z^2 + t", ["inf"])
    assert pc["rows"][0]["status"] == "POSTCRITICAL"


def test_limit_table():
    rep = ffdyn.audit_limit("z^2 + t", "0", ["inf"], (1, 6))
    for row in rep["rows"]:
        assert row["lambda"]["inf"] == {"num": row["h"], "den": 1}
    assert rep["verdict"]["max_tail_ratio"]["inf"] == {"num": 1, "den": 1}


def test_preimages_and_exponent():
    fib = ffdyn.preimages("z^2 + t", "0", depth=2)
    assert fib["total"] == fib["expected_total"] == 4
    ex = ffdyn.exponent("z^5 - z - t^-1", budget=50)
    assert ex["liouville"]["verdict"] == "PASS"
    assert ex["liouville"]["fitted_C"] == {"num": 0, "den": 1}


def test_berkovich():
    a = ffdyn.BerkPoint.disc("0", "-1")
    b = ffdyn.BerkPoint.disc("0", "-3")
    assert ffdyn.join(a, b) == a
    assert ffdyn.hsia(ffdyn.BerkPoint.type1("0"), ffdyn.BerkPoint.type1("t")) == "1"
    assert ffdyn.diam(ffdyn.BerkPoint.infinity()) == "+inf"
    zs = [ffdyn.BerkPoint.type1(x) for x in ("0", "t", "t^2", "t^3")]
    assert ffdyn.cross_ratio_log(*zs) == "0"
    assert '"logdiam":{"den":1,"num":-1}' in a.to_json() or '"num":-1' in a.to_json()


def test_run_is_stable():
    cfg = {"field": "p=5", "map": "z^2 + t", "seed_point": "0", "targets": ["inf"], "n_range": [1, 5]}
    code, rep, csv = ffdyn.run(cfg)
    assert code == 0
    assert rep["status"] == "COMPLETE"
    assert ffdyn.run(cfg)[2] == csv
    code, rep, _ = ffdyn.run(dict(cfg, map="z^2 - 2"))
    assert code == 1 and "NotWandering" in rep["error"]
