import json

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from spacetime_lattice.cli import main

EXAMPLE = ["--wavelength-nm", "589", "--intensity-W-cm2", "3.13e12"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_gaps_example(capsys):
    code, out = run(capsys, "gaps", *EXAMPLE)
    doc = json.loads(out)
    assert code == 0
    assert doc["E_minus_eV"] == pytest.approx(0.5, rel=1e-2)
    assert doc["E_plus_eV"] == pytest.approx(1.5, rel=1e-2)


def test_gaps_zero_intensity(capsys):
    _, out = run(capsys, "gaps", "--wavelength-nm", "589", "--intensity-W-cm2", "0")
    doc = json.loads(out)
    assert doc["E_minus_eV"] == doc["E_plus_eV"] == pytest.approx(1.10e-7, rel=1e-2)


def test_gaps_chained_is_twice_as_wide(capsys):
    _, lit = run(capsys, "gaps", *EXAMPLE)
    _, chn = run(capsys, "gaps", *EXAMPLE, "--formula", "chained")
    lit, chn = json.loads(lit), json.loads(chn)
    width = lambda d: d["E_plus_eV"] - d["E_minus_eV"]
    assert width(chn) == pytest.approx(2 * width(lit), rel=1e-9)


def test_output_has_twelve_significant_digits(capsys):
    _, out = run(capsys, "gaps", *EXAMPLE)
    assert '"E_minus_eV": 0.500340432039,' in out


@pytest.mark.parametrize(
    "argv",
    [
        ["gaps"],
        ["gaps", "--wavelength-nm", "0", "--intensity-W-cm2", "1"],
        ["gaps", "--wavelength-nm", "589", "--intensity-W-cm2", "-1"],
        ["gaps", *EXAMPLE, "--convention", "weird"],
        ["zones", "--max-rank", "6"],
        ["zones", "--max-rank", "0"],
        ["verify", "--samples", "0"],
        ["verify", "--points", "7"],
        ["band", *EXAMPLE, "--edge", "X"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2
    assert capsys.readouterr().out == ""


def test_config_file_with_override(tmp_path, capsys):
    cfg = tmp_path / "lattice.json"
    cfg.write_text(json.dumps({"wavelength_nm": 589, "intensity_W_cm2": 1e12, "convention": "reciprocal",
                               "formula_mode": "literal", "species": "electron"}))
    _, a = run(capsys, "gaps", "--config", str(cfg))
    _, b = run(capsys, "gaps", "--config", str(cfg), "--intensity-W-cm2", "3.13e12")
    assert json.loads(a)["gap_term_eV"] == pytest.approx(0.5 / 3.13, rel=1e-2)
    assert json.loads(b)["gap_term_eV"] == pytest.approx(0.5, rel=1e-2)


def test_zones(capsys):
    _, out = run(capsys, "zones", "--max-rank", "1")
    doc = json.loads(out)
    assert len(doc) == 1 and len(doc[0]["transfers"]) == 4
    _, out = run(capsys, "zones")
    assert sum(len(z["transfers"]) for z in json.loads(out)) == 24


def test_zones_svg(tmp_path, capsys):
    svg = tmp_path / "zones.svg"
    code, _ = run(capsys, "zones", "--svg", str(svg))
    assert code == 0 and svg.read_text().startswith("<svg")


def test_band_minimal(tmp_path, capsys):
    out = tmp_path / "band.csv"
    code, _ = run(capsys, "band", *EXAMPLE, "--points", "2", "--truncation", "2", "--out", str(out))
    assert code == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 3
    manifest = json.loads((tmp_path / "band.csv.manifest.json").read_text())
    assert manifest["command"] == "band" and manifest["outputs"] == [str(out)]
    assert "timestamp" in manifest and manifest["tool_version"]


def test_band_zero_intensity(tmp_path, capsys):
    out = tmp_path / "band.csv"
    svg = tmp_path / "band.svg"
    run(capsys, "band", "--wavelength-nm", "589", "--intensity-W-cm2", "0", "--points", "5",
        "--truncation", "2", "--out", str(out), "--svg", str(svg))
    rows = [line.split(",") for line in out.read_text().splitlines()[1:]]
    assert all(r[1] == r[2] for r in rows)
    assert "<polyline" in svg.read_text()


def test_band_weak_lattice_splitting(tmp_path, capsys):
    out = tmp_path / "band.csv"
    run(capsys, "band", "--wavelength-nm", "589", "--intensity-W-cm2", "1e5", "--points", "3",
        "--truncation", "3", "--out", str(out))
    rows = [line.split(",") for line in out.read_text().splitlines()[1:]]
    middle = rows[1]
    assert middle[-1] == "shell"
    split = float(middle[2]) - float(middle[1])
    pt = float(middle[6]) - float(middle[5])
    # 12 significant digits on ~2.5e5 eV leave ~1e-6 eV resolution
    assert split == pytest.approx(pt, abs=2e-6)


def test_verify_small_grid(capsys):
    code, out = run(capsys, "verify", "--points", "8", "--samples", "100")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert {c["channel"] for c in doc["channels"]} == {"linear_A", "quadratic_A2"}


def test_verify_reports_failure(capsys, monkeypatch):
    import spacetime_lattice.quadrature as quad

    monkeypatch.setattr(quad, "quadratic_coupling", lambda t, cfg: 1.0)
    code, out = run(capsys, "verify", "--points", "8", "--samples", "10")
    assert code == 1 and json.loads(out)["passed"] is False


def test_manifest_flag(tmp_path, capsys):
    path = tmp_path / "m.json"
    run(capsys, "gaps", *EXAMPLE, "--manifest", str(path))
    assert json.loads(path.read_text())["config_echo"]["wavelength_nm"] == 589.0


@settings(max_examples=25, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(
    st.floats(1.0, 1e5), st.floats(0.0, 1e16),
    st.sampled_from(["paper", "standard", "reciprocal", "angular"]),
    st.sampled_from(["literal", "chained"]),
)
def test_gaps_ordered_over_flag_space(capsys, lam, intensity, conv, formula):
    code, out = run(capsys, "gaps", "--wavelength-nm", repr(lam), "--intensity-W-cm2", repr(intensity),
                    "--convention", conv, "--formula", formula)
    doc = json.loads(out)
    assert code == 0 and doc["E_plus_eV"] >= doc["E_minus_eV"]
