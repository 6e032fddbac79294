import json
import math

import pytest

from grnorms import cli, report


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_default_rows(capsys):
    code, out, _ = run(capsys, "table")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == ",".join(report.TABLE_COLUMNS)
    assert len(lines) == 14
    assert "2.00,0.5000,0.6224,1.244737,1.0000,0.2531,-0.5000,0.0640" in lines


def test_table_p21(capsys):
    _, out, _ = run(capsys, "table", "--p", "21")
    row = report.parse_table_csv(out)[0]
    assert row["eps_halfline"] == pytest.approx(0.0359, abs=5e-5)
    assert row["c_eps"] == pytest.approx(1.264692, abs=2e-6)


def test_table_empty(capsys):
    code, out, _ = run(capsys, "table", "--p")
    assert code == 0 and out == ""


def test_table_domain_error_row(capsys):
    code, out, err = run(capsys, "table", "--p", "2", "0.5")
    assert code == 2
    assert "error:" in out.splitlines()[2]
    assert "row failed" in err


def test_table_json_and_alpha_driven(capsys):
    code, out, _ = run(capsys, "table", "--alpha-driven", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["meta"]["driven_by"] == "alpha"
    row = data["rows"][4]
    assert row["alpha_plus"] == 1.4993
    assert row["c_eps"] == pytest.approx(1.231116, abs=2e-6)


def test_raw_round_trip(capsys):
    _, out, _ = run(capsys, "table", "--raw")
    for row in report.parse_table_csv(out):
        assert row["eps_realline"] / row["eps_halfline"] == pytest.approx(row["c_eps"], rel=1e-9)
        assert row["alpha_plus"] == pytest.approx(1 / (row["p"] - 1), rel=1e-12)
        assert row["alpha_minus"] == pytest.approx(-1 / row["p"], rel=1e-12)


def test_table_to_file_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    run(capsys, "table", "--out", str(a))
    run(capsys, "table", "--out", str(b))
    ta, tb = (a / "table.csv").read_bytes(), (b / "table.csv").read_bytes()
    assert ta == tb and b"\r" not in ta


def test_figures(tmp_path, capsys):
    code, _, _ = run(capsys, "figures", "--out", str(tmp_path / "f1"))
    assert code == 0
    run(capsys, "figures", "--out", str(tmp_path / "f2"))
    names = sorted(p.name for p in (tmp_path / "f1").iterdir())
    assert names == ["figure1_inverse.csv", "figure1_norms.csv", "figure2_growth.csv", "figure3_psi.csv"]
    for n in names:
        assert (tmp_path / "f1" / n).read_bytes() == (tmp_path / "f2" / n).read_bytes()

    def load(name):
        lines = (tmp_path / "f1" / name).read_text().splitlines()
        assert lines[0] == "series_id,x,y"
        return [(s, float(x), float(y)) for s, x, y in (l.split(",") for l in lines[1:])]

    norms = load("figure1_norms.csv")
    assert any(s == "eps_halfline_vs_p" and x == 2.0 and round(y, 4) == 0.5 for s, x, y in norms)
    assert any(s == "eps_realline_vs_p" and x == 2.0 and round(y, 4) == 0.6224 for s, x, y in norms)
    growth = load("figure2_growth.csv")
    assert any(s == "c_eps_vs_eps" and round(x, 4) == 0.0001 and round(y, 6) == 1.264797 for s, x, y in growth)
    psi = [(x, y) for s, x, y in load("figure3_psi.csv") if s == "psi_alpha_1"]
    assert len(psi) == 1000
    assert psi[0] == (0.0, 1.0)
    assert psi[-1][0] == 1.0 and psi[-1][1] == pytest.approx(1.0, abs=1e-15)
    assert all(math.isfinite(y) for _, y in psi)


def test_figures_unwritable(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code, _, err = run(capsys, "figures", "--out", str(blocker / "sub"))
    assert code == 2 and str(blocker) in err


def test_bmo(capsys):
    code, out, _ = run(capsys, "bmo", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["c0"] == pytest.approx(1.264797, abs=5e-6)
    assert data["norm_halfline"] == pytest.approx(2 / math.e)
    assert data["abs_diff"] <= 1e-5


def test_norm_and_exponent(capsys):
    _, out, _ = run(capsys, "norm", "--alpha", "1", "--format", "json")
    assert json.loads(out)["ratio"] == pytest.approx(1.244737, abs=2e-6)
    _, out, _ = run(capsys, "exponent", "--eps", "0.5", "--format", "json")
    data = json.loads(out)
    assert data["p"] == pytest.approx(2.0) and data["p_minus"] == pytest.approx(-1.0)


def test_domain_errors_exit_2(capsys):
    assert run(capsys, "norm", "--alpha", "0")[0] == 2
    assert run(capsys, "exponent", "--eps", "2.5")[0] == 2


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["nonsense"])
    assert exc.value.code == 2


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--eps", "0.5", "0.0001")
    assert code == 0
    assert len(out.splitlines()) == 3


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--grid", "100")
    assert code == 0
    assert out.count("PASS") == 7


def test_verify_grid_sizes_same_verdict(capsys):
    small = report.run_verification(grid_size=100)
    large = report.run_verification(grid_size=10_000)
    assert [r.passed for r in small] == [r.passed for r in large]
    s = {r.name: r for r in small}["oracle_norm_realline"]
    l = {r.name: r for r in large}["oracle_norm_realline"]
    assert "bound" in s.detail and "bound" in l.detail


def test_verify_unreachable_tolerance(capsys):
    code, out, err = run(capsys, "verify", "--tol", "1e-30", "--grid", "100")
    assert code == 1
    assert "BudgetExceededError" in out
    assert "failed checks" in err
