"""Command-line front end: formats, determinism, exit codes, frozen outputs."""

import json

import pytest

from hilb import __version__, cli


def run(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, argv):
    code, out, err = run(capsys, argv + ["--format", "json"])
    assert err == ""
    return code, json.loads(out)


def test_nakajima_both_frozen(capsys):
    code, record = run_json(capsys, ["nakajima", "--n", "5", "--method", "both"])
    assert code == 0
    assert record["command"] == "nakajima"
    assert record["version"] == __version__
    payload = record["payload"]
    assert payload["columns"] == ["n", "recurrence", "closed", "equal"]
    assert len(payload["rows"]) == 5
    assert payload["rows"][-1] == [5, 5, 5, True]
    assert payload["all_equal"] is True


def test_nakajima_table_renders_booleans(capsys):
    code, out, err = run(capsys, ["nakajima", "--n", "5", "--method", "both"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == f"hilb nakajima (version {__version__})"
    assert lines[-1].split() == ["5", "5", "5", "true"]


def test_lattice_square_frozen(capsys):
    code, record = run_json(
        capsys, ["lattice", "--blowup", "4", "--square-exceptional"]
    )
    assert code == 0
    assert record["payload"]["exceptional_square"] == -4


def test_lattice_gram_table(capsys):
    code, record = run_json(capsys, ["lattice", "--blowup", "2"])
    assert code == 0
    payload = record["payload"]
    assert payload["rank"] == 3
    assert payload["columns"] == ["class", "H", "E1", "E2"]
    assert payload["rows"] == [
        ["H", 1, 0, 0],
        ["E1", 0, -1, 0],
        ["E2", 0, 0, -1],
    ]


def test_betti_punctual_frozen(capsys):
    code, record = run_json(capsys, ["betti", "--space", "punctual", "--n", "3"])
    assert code == 0
    payload = record["payload"]
    assert payload["series"] == "1 + q^2 + q^4"
    assert payload["fixed_points"] == 3
    assert "rho" not in record["parameters"]


def test_betti_rho_echoed(capsys):
    code, record = run_json(capsys, ["betti", "--space", "affine", "--n", "3"])
    assert code == 0
    # default subgroup (1, 2n^2+1) echoed for auditability
    assert record["parameters"]["rho"] == [1, 19]
    code, record = run_json(
        capsys, ["betti", "--space", "affine", "--n", "3", "--rho", "3,1"]
    )
    assert code == 0
    assert record["parameters"]["rho"] == [3, 1]
    assert record["payload"]["series"] == "1 + q^2 + q^4"


def test_betti_p2_matches_library(capsys):
    code, record = run_json(capsys, ["betti", "--space", "p2", "--n", "2"])
    assert code == 0
    assert record["payload"]["series"] == "1 + 2q^2 + 3q^4 + 2q^6 + q^8"
    assert record["payload"]["rows"][0] == [0, 1]


def test_betti_non_generic_rho_rejected(capsys):
    code, out, err = run(
        capsys, ["betti", "--space", "affine", "--n", "2", "--rho", "1,1"]
    )
    assert code == 2
    assert out == ""
    assert err.startswith("error:")
    assert "non-generic" in err


def test_betti_punctual_rejects_rho(capsys):
    code, out, err = run(
        capsys, ["betti", "--space", "punctual", "--n", "3", "--rho", "1,5"]
    )
    assert code == 2
    assert "--rho does not apply" in err


def test_incidence_all(capsys):
    code, record = run_json(capsys, ["incidence", "--n", "6", "--check", "all"])
    assert code == 0
    payload = record["payload"]
    assert payload["passed"] is True
    assert len(payload["rows"]) == 7
    assert all(row[-1] is True for row in payload["rows"])
    euler_row = payload["rows"][3]
    assert euler_row[0] == 3 and euler_row[1] == 7


def test_incidence_specific_checks(capsys):
    for check, columns in (
        ("jumps", ["n", "pairs", "max_jump", "ok"]),
        ("euler", ["n", "pairs", "generator_sum", "socle_sum", "ok"]),
        ("fibers", ["n", "pairs", "phi_fibers", "gamma_fibers", "ok"]),
    ):
        code, record = run_json(capsys, ["incidence", "--n", "4", "--check", check])
        assert code == 0
        assert record["payload"]["columns"] == columns


def test_strata_frozen(capsys):
    code, record = run_json(capsys, ["strata", "--n", "2"])
    assert code == 0
    payload = record["payload"]
    assert payload["ambient_dim"] == 6
    assert payload["passed"] is True
    assert payload["rows"][0] == [1, 6, 6, 0, "-", "pinned"]
    assert payload["rows"][1] == [2, 4, 4, 2, 0, "ok"]
    assert payload["rows"][2] == [3, 2, 2, 4, 0, "ok"]
    assert payload["rows"][3] == [4, None, 0, None, "-", "vacuous"]


def test_strata_table_renders_empty(capsys):
    code, out, err = run(capsys, ["strata", "--n", "2"])
    assert code == 0
    assert "vacuous" in out
    assert "empty" in out  # the absent bound prints as "empty", never 0


def test_goettsche_compare(capsys):
    code, record = run_json(
        capsys,
        [
            "goettsche",
            "--betti",
            "1,0,1,0,1",
            "--torder",
            "3",
            "--compare-fixed-points",
        ],
    )
    assert code == 0
    payload = record["payload"]
    assert payload["passed"] is True
    assert payload["columns"][-1] == "matches_fixed_points"
    assert payload["rows"][2][1] == "1 + 2u^2 + 3u^4 + 2u^6 + u^8"
    assert [row[2] for row in payload["rows"]] == [1, 3, 9, 22]


def test_goettsche_compare_needs_p2(capsys):
    code, out, err = run(
        capsys,
        ["goettsche", "--betti", "1,0,22,0,1", "--torder", "2", "--compare-fixed-points"],
    )
    assert code == 2
    assert "projective-plane" in err


def test_goettsche_rejects_odd_cohomology(capsys):
    code, out, err = run(capsys, ["goettsche", "--betti", "1,1,1,1,1", "--torder", "2"])
    assert code == 2
    assert "odd cohomology unsupported" in err


def test_partitions_command(capsys):
    code, record = run_json(capsys, ["partitions", "--n", "4"])
    assert code == 0
    payload = record["payload"]
    assert payload["count"] == 5
    assert payload["rows"][0] == [0, "(4)"]
    assert payload["rows"][-1] == [4, "(1,1,1,1)"]


def test_verify_small(capsys):
    code, record = run_json(capsys, ["verify", "--all", "--nmax", "4"])
    assert code == 0
    payload = record["payload"]
    assert payload["passed"] is True
    assert payload["failures"] == []
    statuses = {row[0]: row[2] for row in payload["rows"]}
    assert set(statuses.values()) == {"pass"}
    assert statuses.keys() == {
        "partition-counts",
        "conjugate-involution",
        "cover-duality",
        "generator-socle",
        "hilbert-burch",
        "jump-bound",
        "tangent-weights",
        "affine-closed-form",
        "chamber-independence",
        "punctual-cells",
        "euler-incidence",
        "strata-bounds",
        "exceptional-square",
        "nakajima",
        "goettsche-vs-fixed-points",
        "fock-character",
        "commutators",
    }


def test_verify_requires_all_flag(capsys):
    code, out, err = run(capsys, ["verify", "--nmax", "4"])
    assert code == 2
    assert "--all" in err


def test_exit_code_2_on_bad_values(capsys):
    assert run(capsys, ["nakajima", "--n", "0"])[0] == 2
    assert run(capsys, ["partitions", "--n", "-1"])[0] == 2
    assert run(capsys, ["strata", "--n", "0"])[0] == 2
    assert run(capsys, ["betti", "--space", "affine", "--n", "2", "--rho", "zap"])[0] == 2
    assert run(capsys, ["goettsche", "--betti", "1,0,1", "--torder", "2"])[0] == 2
    assert (
        run(capsys, ["lattice", "--blowup", "0", "--square-exceptional"])[0] == 2
    )


def test_unknown_flags_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["nakajima", "--n", "5", "--frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["no-such-command"])
    assert exc.value.code == 2


def test_determinism_all_formats(capsys):
    for fmt in ("table", "json", "csv"):
        argv = ["betti", "--space", "p2", "--n", "3", "--format", fmt]
        code1, out1, _ = run(capsys, argv)
        code2, out2, _ = run(capsys, argv)
        assert code1 == code2 == 0
        assert out1 == out2
        assert out1


def test_csv_payload_only(capsys):
    code, out, err = run(
        capsys, ["nakajima", "--n", "3", "--method", "both", "--format", "csv"]
    )
    assert code == 0
    assert out.splitlines() == [
        "n,recurrence,closed,equal",
        "1,1,1,true",
        "2,-2,-2,true",
        "3,3,3,true",
    ]


def test_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("HILB_THREADS", "8")
    code, record = run_json(capsys, ["partitions", "--n", "2"])
    assert code == 0
    assert record["parameters"]["threads"] == 8
    monkeypatch.setenv("HILB_THREADS", "zero")
    code, out, err = run(capsys, ["partitions", "--n", "2"])
    assert code == 2
    assert "HILB_THREADS" in err
    monkeypatch.setenv("HILB_THREADS", "0")
    assert run(capsys, ["partitions", "--n", "2"])[0] == 2
    monkeypatch.delenv("HILB_THREADS")
    code, record = run_json(capsys, ["partitions", "--n", "2"])
    assert record["parameters"]["threads"] == 1


def test_json_is_sorted_and_typed(capsys):
    code, out, err = run(
        capsys, ["strata", "--n", "1", "--format", "json"]
    )
    assert code == 0
    record = json.loads(out)
    assert list(record) == sorted(record)
    assert out == json.dumps(record, indent=2, sort_keys=True) + "\n"
    # vacuous bounds serialize as JSON null, never 0
    assert record["payload"]["rows"][-1][1] is None
