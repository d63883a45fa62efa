import json
import math

import pytest

from polyherglotz.cli import (
    format_complex,
    main,
    parse_complex,
    parse_function,
    parse_point,
)

PI = math.pi


def test_parse_complex_forms():
    assert parse_complex("4i") == 4j
    assert parse_complex("-i") == -1j
    assert parse_complex("i") == 1j
    assert parse_complex("1+2i") == 1 + 2j
    assert parse_complex("1.5-0.5i") == 1.5 - 0.5j
    assert parse_complex("-2.25e-1+1e2i") == -0.225 + 100j
    assert parse_complex("3") == 3 + 0j
    with pytest.raises(ValueError):
        parse_complex("")
    with pytest.raises(ValueError):
        parse_complex("banana")


def test_complex_roundtrip():
    for z in (4j, -1j, 1 + 2j, 1.5 - 0.5j, -0.1 - 0.00032j, 3 + 0j):
        assert parse_complex(format_complex(z)) == z


def test_parse_point():
    p = parse_point("4i,4i")
    assert p.coords == (4j, 4j)
    assert parse_point("-i,-i").coords == (-1j, -1j)
    with pytest.raises(ValueError):
        parse_point("")


def test_parse_function_shorthands():
    from polyherglotz import point

    f = parse_function("catalogue:f7")
    assert f(point(1j, 1j)) == 1j
    g = parse_function("cauchy:lebesgue2")
    assert abs(g(point(1j, 1j)) - 1j) < 1e-8
    m = parse_function("cauchy:mu2")
    assert abs(m(point(4j, 4j)) - (-0.1j)) < 1e-8
    h = parse_function("herglotz:{a:1,b:[2],mu:zero}")
    assert h(point(1j)) == 1 + 2j
    with pytest.raises(ValueError):
        parse_function("catalogue")
    with pytest.raises(ValueError):
        parse_function("bogus:f1")


def test_eval_golden(capsys, tmp_path):
    out = tmp_path / "rec.json"
    code = main(["eval", "--fn", "catalogue:f2", "--point", "4i,4i", "--out", str(out)])
    assert code == 0
    printed = capsys.readouterr().out.strip()
    assert abs(parse_complex(printed) - (-0.1j)) < 1e-15
    rec = json.loads(out.read_text())
    assert rec["signature"] == [1, 1]
    assert parse_complex(rec["value"]) == parse_complex(printed)


def test_eval_lower_point(capsys):
    code = main(["eval", "--fn", "catalogue:f7", "--point=-i,-i"])
    assert code == 0
    printed = capsys.readouterr().out.splitlines()[0]
    assert parse_complex(printed) == -1j


def test_eval_herglotz_shorthand(capsys):
    code = main(["eval", "--fn", "herglotz:{a:1,b:[2],mu:zero}", "--point", "i"])
    assert code == 0
    assert parse_complex(capsys.readouterr().out.splitlines()[0]) == 1 + 2j


def test_eval_determinism(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["eval", "--fn", "cauchy:mu2", "--point", "i,2i", "--out", str(a)])
    main(["eval", "--fn", "cauchy:mu2", "--point", "i,2i", "--out", str(b)])
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_check_exit_codes(tmp_path, capsys):
    assert main(["check", "symmetry", "--fn", "catalogue:f7"]) == 0
    assert main(["check", "nondep", "--fn", "catalogue:f4"]) == 1
    assert main(["check", "positivity", "--fn", "catalogue:f6"]) == 1
    out = tmp_path / "char.json"
    assert main(["check", "characterize", "--fn", "catalogue:f7", "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["verdict"] == "pass"
    assert rep["d"] == [0.0, 0.0]
    capsys.readouterr()


def test_check_positivity_witness_in_upper(tmp_path, capsys):
    out = tmp_path / "pos.json"
    assert main(["check", "positivity", "--fn", "catalogue:f6", "--out", str(out)]) == 1
    rep = json.loads(out.read_text())
    pt = rep["witnesses"][0]["point"]
    assert all(im > 0 for _, im in pt)
    capsys.readouterr()


def test_reproduce_tables(tmp_path, capsys):
    out = tmp_path / "tables.json"
    assert main(["reproduce-tables", "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    assert rep["match"] is True
    assert rep["table2_conditions"]["f7"] == ["yes", "yes", "yes"]
    assert rep["table2_conditions"]["f0"] == ["no", "no", "no"]
    assert rep["table2_conditions"] == rep["expected"]
    capsys.readouterr()


def test_reproduce_tables_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["reproduce-tables", "--out", str(a)])
    main(["reproduce-tables", "--out", str(b)])
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_invert_cli_1d(tmp_path, capsys):
    out = tmp_path / "conv.csv"
    code = main([
        "invert", "--fn", "cauchy:lebesgue1", "--phi", "cauchy1d",
        "--mode", "alternating", "--out", str(out),
    ])
    assert code == 0
    est = float(capsys.readouterr().out.strip().splitlines()[-1])
    assert abs(est - PI) < 1e-4
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "y,raw,extrapolant"
    assert len(lines) == 11


def test_usage_errors(capsys):
    assert main(["eval", "--fn", "catalogue:f2", "--point", "1,2"]) == 2  # real coords
    assert main(["eval", "--fn", "catalogue:f9", "--point", "i,i"]) == 2
    assert main(["eval", "--fn", "nope"]) == 2
    assert main(["invert", "--fn", "cauchy:lebesgue1", "--phi", "weird1d",
                 "--mode", "classic"]) == 2
    capsys.readouterr()
