import csv
import io
import math
import subprocess
import sys

import pytest

from specfun import cli
from specfun.gamma import gamma


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    args = cli.build_parser().parse_args(list(argv))
    code = args.handler(args, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_eval_examples():
    assert run("eval", "gamma", "0.5")[:2] == (0, "1.77245385090552 converged\n")
    assert run("eval", "besselj", "0", "0")[:2] == (0, "1 converged\n")
    code, out, err = run("eval", "e1", "-1")
    assert code == 2 and out == "" and err == "domain: x must be > 0\n"


def test_eval_nonconvergence_exit():
    assert run("eval", "fresnelC", "5")[0] == 3
    assert run("eval", "2f1", "1", "1", "2", "0.9999", "--max-terms", "50")[0] == 3


def test_eval_round_trip():
    value = gamma(0.5)
    printed = float(run("eval", "gamma", "0.5")[1].split()[0])
    assert abs(printed - value) <= 5e-15 * value  # 15 significant digits
    printed = float(run("eval", "gamma", "0.5", "--digits", "17")[1].split()[0])
    assert printed == value


def test_eval_complex():
    code, out, _ = run("eval", "hankel1", "0.5", "3.141592653589793")
    re, im, flag = out.split()
    assert code == 0 and abs(float(re)) < 1e-14 and float(im) == pytest.approx(math.sqrt(2) / math.pi)


def test_unknown_function_and_bad_arity():
    assert run("eval", "nosuch", "1")[0] == 2
    assert run("eval", "legendre_p", "1")[0] == 2
    assert run("table", "legendre_p", "--from", "0", "--to", "1", "--count", "2")[0] == 2


def test_table_examples():
    code, out, _ = run("table", "legendre_p", "3", "--from", "-1", "--to", "1", "--count", "5")
    r = rows(out)
    assert code == 0 and r[0] == ["x", "value"]
    assert [float(a) for a, _ in r[1:]] == [-1, -0.5, 0, 0.5, 1]
    assert [float(b) for _, b in r[1:]] == [-1, 0.4375, 0, -0.4375, 1]
    vals = [float(b) for _, b in rows(run("table", "erf", "--from", "0", "--to", "2", "--count", "3")[1])[1:]]
    assert vals == pytest.approx([0, 0.842700792949715, 0.995322265018953], rel=1e-14)
    vals = [float(b) for _, b in rows(run("table", "fresnelC", "--from", "0", "--to", "1", "--count", "2")[1])[1:]]
    assert vals == pytest.approx([0, 0.779893400376823], rel=1e-14)


def test_table_values_round_trip():
    from specfun.bessel import bessel_j

    for x, v in rows(run("table", "besselj", "2", "--from", "0.5", "--to", "9", "--count", "7")[1])[1:]:
        assert float(v) == bessel_j(2, float(x))


def test_table_nan_rows():
    code, out, err = run("table", "e1", "--from", "-1", "--to", "1", "--count", "3")
    r = rows(out)
    assert code == 0 and len(r) == 4 and r[1][1] == "nan" and r[2][1] == "nan"
    assert err.count("warning") == 2
    assert run("table", "e1", "--from", "-2", "--to", "-1", "--count", "2")[0] == 2


def test_table_complex_columns():
    r = rows(run("table", "hankel2", "1", "--from", "1", "--to", "2", "--count", "2")[1])
    assert r[0] == ["x", "value", "im"] and len(r[1]) == 3


def test_table_bytes_are_lf_and_stable():
    a = run("table", "si", "--from", "0", "--to", "10", "--count", "11")[1]
    assert a == run("table", "si", "--from", "0", "--to", "10", "--count", "11")[1]
    assert "\r" not in a and all("," in line for line in a.splitlines())


def test_figure_unknown_key(tmp_path):
    code, _, err = run("figure", "nosuch", "--out-dir", str(tmp_path))
    assert code == 2 and "unknown figure" in err


def test_figure_examples(figure_dir):
    r = rows((figure_dir / "bessel_j.csv").read_text())
    assert r[0] == ["x", "J0", "J1", "J2", "J3", "J4"]
    assert float(r[1][0]) == 0.0 and float(r[-1][0]) == 20.0
    r = rows((figure_dir / "gamma.csv").read_text())
    xs = [float(a) for a, _ in r[1:]]
    assert -4.0 <= xs[0] <= -3.9 and xs[-1] == 5.0  # x = -4 is itself a pole
    assert all(x > 0 or abs(x - round(x)) >= 0.05 for x in xs)
    r = rows((figure_dir / "legendre.csv").read_text())
    assert r[0] == ["x", "P0", "P1", "P2", "P3", "P4"]
    r = rows((figure_dir / "spherical_harmonics.csv").read_text())
    assert r[0] == ["l", "m", "theta", "phi", "abs", "arg"]


def test_verify_examples():
    code, out, err = run("verify", "--id", "ch5.y20.table-entry")
    assert code == 0 and "expected-fail" in out
    assert run("verify", "--id", "nosuch")[0] == 2
    code, out, _ = run("verify", "--chapter", "1")
    assert code == 0 and all(line.split("\t")[1] == "true" for line in out.splitlines())


def test_console_entry_point():
    p = subprocess.run([sys.executable, "-m", "specfun", "eval", "gamma", "5"], capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout == "24 converged\n"
    p = subprocess.run([sys.executable, "-m", "specfun", "verify", "--id", "nosuch"], capture_output=True, text=True)
    assert p.returncode == 2
