import json

import jsonschema

from uvcodes.cli import main

try:
    from importlib.resources import files
except ImportError:  # pragma: no cover
    from importlib_resources import files

SCHEMA = json.loads(
    files("uvcodes.schemas").joinpath("report.schema.json").read_text())


def run_json(tmp_path, args, expect_status=0):
    out = tmp_path / "report.json"
    status = main(args + ["--out", str(out)])
    assert status == expect_status
    report = json.loads(out.read_text())
    jsonschema.validate(report, SCHEMA)
    return report


# ----------------------------------------------------------------------
# spectrum
# ----------------------------------------------------------------------

def test_spectrum_3_1_json(tmp_path):
    rep = run_json(tmp_path, ["spectrum", "-p", "3", "-m", "1"])
    assert rep["N"] == "108" and rep["K"] == 4
    assert rep["weights"] == {"0": "1", "72": "78", "108": "2"}
    assert rep["min_distance"] == "72"
    assert rep["mode"] == "exhaustive"


def test_spectrum_3_2_exhaustive_json(tmp_path):
    rep = run_json(tmp_path, ["spectrum", "-p", "3", "-m", "2",
                              "--mode", "exhaustive"])
    assert rep["N"] == "11664" and rep["K"] == 8
    assert rep["weights"] == {"0": "1", "5832": "4", "7776": "6552",
                              "11664": "4"}


def test_spectrum_csv(tmp_path, capsys):
    assert main(["spectrum", "-p", "3", "-m", "1", "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out == "weight,frequency\n0,1\n72,78\n108,2\n"


def test_spectrum_table(capsys):
    assert main(["spectrum", "-p", "3", "-m", "1", "--format", "table"]) == 0
    out = capsys.readouterr().out
    assert "weights" in out and "72" in out


def test_spectrum_modulus_override(tmp_path):
    rep = run_json(tmp_path, ["spectrum", "-p", "3", "-m", "2",
                              "--modulus", "2,2,1"])
    assert rep["modulus"] == [2, 2, 1]
    # weights are realization independent
    assert rep["weights"] == {"0": "1", "5832": "4", "7776": "6552",
                              "11664": "4"}


def test_spectrum_reducible_modulus_rejected(capsys):
    assert main(["spectrum", "-p", "3", "-m", "2", "--modulus", "0,1,1"]) == 2
    assert "ReducibleModulus" in capsys.readouterr().err


def test_spectrum_budget_exceeded(capsys):
    assert main(["spectrum", "-p", "5", "-m", "2", "--mode", "exhaustive"]) == 2
    assert "BudgetExceeded" in capsys.readouterr().err


def test_spectrum_by_class_5_2(tmp_path):
    rep = run_json(tmp_path, ["spectrum", "-p", "5", "-m", "2",
                              "--mode", "by_class", "--samples", "4"])
    assert rep["total"] == str(5**8)
    assert sum(int(f) for f in rep["weights"].values()) == 5**8


def test_composite_p_rejected(capsys):
    assert main(["spectrum", "-p", "9", "-m", "1"]) == 2
    assert "CompositeP" in capsys.readouterr().err


# ----------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------

def test_verify_3_2_all_pass(tmp_path):
    rep = run_json(tmp_path, ["verify", "-p", "3", "-m", "2"])
    assert rep["all_pass"] is True
    assert rep["regime"] == "three-weight"
    verdicts = {c["id"]: c["verdict"] for c in rep["claims"]}
    assert verdicts["spectrum"] == "PASS"
    assert verdicts["griesmer_optimal"] == "N/A"
    assert verdicts["minimal_codewords"] == "N/A"


def test_verify_3_1_reports_minimality_defect(tmp_path):
    # at m=1 the uv-line codewords have full support, so the all-minimal
    # claim genuinely fails; everything else passes
    rep = run_json(tmp_path, ["verify", "-p", "3", "-m", "1"],
                   expect_status=1)
    verdicts = {c["id"]: c["verdict"] for c in rep["claims"]}
    assert verdicts["minimal_codewords"] == "FAIL"
    assert rep["all_pass"] is False
    failing = {cid for cid, v in verdicts.items() if v == "FAIL"}
    assert failing == {"minimal_codewords"}


def test_verify_5_1_unsupported_regime(tmp_path):
    rep = run_json(tmp_path, ["verify", "-p", "5", "-m", "1"],
                   expect_status=1)
    verdicts = {c["id"]: c["verdict"] for c in rep["claims"]}
    assert rep["regime"] == "unsupported"
    assert verdicts["spectrum"] == "N/A"
    assert verdicts["griesmer_optimal"] == "N/A"
    # the m=1 full-support degeneracy is p-independent
    assert verdicts["minimal_codewords"] == "FAIL"
    assert verdicts["gauss_sum"] == "PASS"
    assert verdicts["dual_distance_gray_class"] == "PASS"


def test_verify_workers_byte_identical(tmp_path):
    out1, out8 = tmp_path / "w1.json", tmp_path / "w8.json"
    assert main(["verify", "-p", "3", "-m", "1", "--workers", "1",
                 "--out", str(out1)]) == 1
    assert main(["verify", "-p", "3", "-m", "1", "--workers", "8",
                 "--out", str(out8)]) == 1
    assert out1.read_bytes() == out8.read_bytes()


# ----------------------------------------------------------------------
# bounds / dual / minimal / sss / gauss
# ----------------------------------------------------------------------

def test_bounds_3_1(tmp_path):
    rep = run_json(tmp_path, ["bounds", "-p", "3", "-m", "1"])
    assert rep["griesmer_sum_d"] == "107"
    assert rep["griesmer_sum_d_plus_1"] == "110"
    assert rep["N"] == "108"
    assert rep["optimal"] is True
    assert rep["margin_closed_form"] == "110"


def test_bounds_3_2_optimality_na(tmp_path):
    rep = run_json(tmp_path, ["bounds", "-p", "3", "-m", "2"])
    assert rep["optimal"] is None
    assert rep["d"] == "5832"
    assert rep["sphere_packing_excludes_dual_3"] is True


def test_dual_3_1(tmp_path):
    rep = run_json(tmp_path, ["dual", "-p", "3", "-m", "1"])
    assert rep["gray_class"] == 2
    assert rep["ring_witness_weight"] == 2
    assert rep["ring_witness_verified"] is True
    assert rep["support_one_witness"] is None


def test_minimal_3_1(tmp_path):
    rep = run_json(tmp_path, ["minimal", "-p", "3", "-m", "1"])
    assert rep["criterion_passed"] is False
    assert rep["brute_force_all_minimal"] is False
    assert rep["witness_verified"] is True


def test_minimal_3_2_budget_fallback(tmp_path):
    rep = run_json(tmp_path, ["minimal", "-p", "3", "-m", "2"])
    assert rep["brute_force_all_minimal"] is None
    assert rep["brute_force_skipped"]
    assert rep["w_min"] == "5832" and rep["w_max"] == "11664"


def test_sss_dictatorial(tmp_path):
    for m in ("1", "2"):
        rep = run_json(tmp_path, ["sss", "-p", "3", "-m", m])
        assert rep["classification"] == "dictatorial"
        assert rep["dual_class"] == 2
        assert rep["dictator_witness"] is not None


def test_gauss_3_2(tmp_path):
    rep = run_json(tmp_path, ["gauss", "-p", "3", "-m", "2"])
    assert rep["closed_form"] == "3+0i"
    assert rep["numeric"] == "3+0i"
    assert rep["match"] is True
    assert rep["qbar_closed"] == "1+0i"
    assert rep["nbar_closed"] == "-2+0i"
    assert rep["sum_identity_ok"] is True


def test_gauss_odd_m_no_closed_qbar(tmp_path):
    rep = run_json(tmp_path, ["gauss", "-p", "7", "-m", "1"])
    assert rep["qbar_closed"] is None
    assert rep["sum_identity_ok"] is True


def test_genmatrix(tmp_path):
    out = tmp_path / "G.txt"
    assert main(["genmatrix", "-p", "3", "-m", "1", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 4
    assert all(len(ln) == 108 and set(ln) <= set("012") for ln in lines)


def test_csv_fallback_for_bounds(capsys):
    assert main(["bounds", "-p", "3", "-m", "1", "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert "griesmer_sum_d,107" in out


def test_verify_table_format(capsys):
    assert main(["verify", "-p", "3", "-m", "1", "--format", "table"]) == 1
    out = capsys.readouterr().out
    assert "minimal_codewords" in out and "FAIL" in out and "all_pass" in out
