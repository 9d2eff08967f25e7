import io
import json
from fractions import Fraction

import pytest

from cubicgalois.cli import main
from cubicgalois.exactmath import format_rational, parse_rational
from cubicgalois.poly import parse_poly


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_analyze_text():
    code, out, _ = run("analyze", "x^3-3*x+1")
    assert code == 0
    lines = dict(line.split(": ", 1) for line in out.splitlines())
    assert lines["D"] == "81"
    assert {lines["perm_plus"], lines["perm_minus"]} == {"x^2 - 2", "-x^2 - x + 2"}
    assert {lines["coupled_plus"], lines["coupled_minus"]} == {
        "x^3 + x^2 - 2*x - 1", "x^3 + 2*x^2 - 3*x - 5"}
    assert lines["representative"] == "x^3 - 27*x - 27"
    assert lines["k"] == "9"
    assert lines["real_roots"] == "-1.879385241572 0.347296355334 1.532088886238"


def test_analyze_coefficient_list():
    _, a, _ = run("analyze", "--coeffs", "1,0,-3,1")
    _, b, _ = run("analyze", "x^3-3*x+1")
    assert a == b


@pytest.mark.parametrize("argv", [
    ("analyze", "x^3-3*x+1"),
    ("analyze", "x^3+2*x^2-3*x-5"),
    ("couple", "x^3-3*x+1"),
    ("rep", "x^3+x^2-2*x-1"),
    ("char", "10/3"),
    ("phi", "270"),
    ("phi", "27", "--iter", "2"),
    ("psi", "90/7"),
    ("generator", "10/3"),
    ("samefield", "x^3-3*x+1", "x^3+2*x^2-3*x-5"),
    ("family", "0"),
])
def test_json_matches_text(argv):
    code, text, _ = run(*argv)
    jcode, js, _ = run(*argv, "--json")
    assert code == jcode == 0
    data = json.loads(js)
    lines = dict(line.split(": ", 1) for line in text.splitlines())
    assert set(lines) == set(data)
    for key, value in data.items():
        if isinstance(value, bool):
            assert lines[key] == ("true" if value else "false")
        elif isinstance(value, list):
            assert lines[key] == " ".join(value)
        elif isinstance(value, dict):
            assert lines[key] == " ".join(f"{k}={v}" for k, v in value.items())
        elif value is None:
            assert lines[key] == "-"
        else:
            assert lines[key] == str(value)


def test_json_round_trips():
    _, js, _ = run("analyze", "x^3+x^2-2*x-1", "--json")
    data = json.loads(js)
    for key in ("polynomial", "perm_plus", "perm_minus", "coupled_plus",
                "coupled_minus", "representative"):
        p = parse_poly(data[key])
        assert str(p) == data[key]
    for key in ("D", "d", "a", "k"):
        assert format_rational(parse_rational(data[key])) == data[key]
    assert parse_rational(data["k"]) == 27


def test_couple_sign():
    _, out, _ = run("couple", "x^3-3*x+1", "--sign", "-", "--json")
    data = json.loads(out)
    assert data["coupled_minus"] == "x^3 + 2*x^2 - 3*x - 5"
    assert "coupled_plus" not in data


def test_superclass_text_and_json():
    code, out, _ = run("superclass", "27", "--max-nodes", "4")
    assert code == 0
    ks = [line.split("k = ")[1].split()[0] for line in out.splitlines() if "k = " in line]
    assert ks == ["27", "9", "27/5", "27/7"]
    _, js, _ = run("superclass", "27", "--max-nodes", "4", "--json")
    data = json.loads(js)
    assert [n["k"] for n in data["nodes"]] == ks
    assert data["exceptional"] == "k27"
    assert all(parse_rational(n["a"]) == (parse_rational(n["k"]) ** 2 + 27) / 4
               for n in data["nodes"])


def test_superclass_dot():
    code, out, _ = run("superclass", "270", "--max-nodes", "12", "--dot")
    assert code == 0
    assert out.startswith('graph "superclass 270"')
    assert 'style="dashed"' in out


def test_superclass_default_budget():
    _, js, _ = run("superclass", "270", "--json")
    assert len(json.loads(js)["nodes"]) == 16


def test_domain_errors_exit_1():
    code, _, err = run("psi", "27/2")
    assert code == 1 and "UndefinedAtPole" in err
    code, _, err = run("analyze", "x^3-x")
    assert code == 1 and "Reducible" in err
    assert run("char", "-1")[0] == 1
    assert run("phi", "27", "--iter", "-1")[0] == 1


def test_parse_errors_exit_2():
    code, _, err = run("analyze", "x^3-3*x+")
    assert code == 2
    assert "position 8" in err and "expected" in err
    assert run("psi", "1/0")[0] == 2
    assert run("frobnicate")[0] == 2


def test_samefield_status():
    _, js, _ = run("samefield", "x^3-3*x+1", "x^3+x^2-2*x-1", "--json")
    data = json.loads(js)
    assert data["same_field"] is False
    assert data["detail"] == "absent at bound 10^12"
    _, js, _ = run("samefield", "x^3-3*x+1", "8*x^3+12*x^2-1", "--json")
    data = json.loads(js)
    assert data["same_field"] is True and data["status"] == "verified"


def test_family():
    _, js, _ = run("family", "0", "--json")
    data = json.loads(js)
    assert data["t"] == "9" and data["galois"] and data["same_field_as_x3_3x_1"]


def test_module_entry_point():
    import subprocess
    import sys
    res = subprocess.run([sys.executable, "-m", "cubicgalois", "generator", "27/7"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout == "k: 27/7\ngenerator: 27\n"
