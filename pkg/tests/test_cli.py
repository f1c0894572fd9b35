import json

import pytest

from augrank.cli import main
from augrank import jsonio
from augrank.action import phi_left
from augrank.braids import BraidWord


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPhiCommand:
    def test_single_letter_text(self, capsys):
        code, out, _ = run(capsys, "phi", "--n", "2", "--word", "1", "--side", "L")
        assert code == 0
        assert "[[-a21, 1], [1, 0]]" in out
        assert "config:" in out

    def test_identity_word(self, capsys):
        code, out, _ = run(capsys, "phi", "--n", "2", "--word", "", "--side", "L")
        assert code == 0
        assert "[[1, 0], [0, 1]]" in out

    def test_right_side_json_matches_transpose_conjugate(self, capsys):
        code, out, _ = run(
            capsys, "phi", "--n", "2", "--word", "1 1 1", "--side", "R", "--format", "json"
        )
        assert code == 0
        obj = json.loads(out)
        expected = phi_left(BraidWord(2, (1, 1, 1))).conj_transpose()
        assert obj["matrix"]["entries"] == expected.render_entries()
        assert obj["config"]["command"] == "phi"

    def test_bad_word_is_error(self, capsys):
        code, _, err = run(capsys, "phi", "--n", "2", "--word", "5")
        assert code == 1
        assert "error" in err


class TestSatelliteCommand:
    def test_satellite_word(self, capsys):
        code, out, _ = run(
            capsys,
            "satellite", "--alpha", "1 1 1", "--k", "2", "--gamma", "1", "--p", "2",
            "--format", "json",
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["braid"]["n"] == 4
        assert len(obj["braid"]["word"]) == 13
        assert obj["components"] == 1
        assert "minimal" in obj["note"]

    def test_empty_pattern_is_cable(self, capsys):
        code, out, _ = run(
            capsys,
            "satellite", "--alpha", "1", "--k", "2", "--p", "2", "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["braid"]["word"] == [2, 1, 3, 2]

    def test_iterated_torus_matches_satellite_form(self, capsys):
        code1, out1, _ = run(
            capsys,
            "satellite", "--alpha", "1 1 1", "--k", "2", "--gamma", "1", "--p", "2",
            "--format", "json",
        )
        code2, out2, _ = run(
            capsys,
            "satellite", "--iterated-torus", "--p", "2,2", "--q", "3,1", "--format", "json",
        )
        assert code1 == code2 == 0
        assert json.loads(out1)["braid"] == json.loads(out2)["braid"]

    def test_missing_arguments(self, capsys):
        code, _, err = run(capsys, "satellite", "--alpha", "1")
        assert code == 1
        assert "error" in err


class TestTorusCommand:
    def test_trefoil_word(self, capsys):
        code, out, _ = run(capsys, "torus", "--p", "2", "--q", "3", "--format", "json")
        assert code == 0
        assert json.loads(out)["braid"]["word"] == [1, 1, 1]


class TestSearchVerifyConstruct:
    def test_search_writes_certificate(self, capsys, tmp_path):
        path = tmp_path / "trefoil.json"
        code, out, _ = run(
            capsys,
            "ar-search", "--n", "2", "--word", "1 1 1", "--output", str(path),
        )
        assert code == 0
        assert "accepted certificate" in out
        obj = jsonio.load_file(str(path))
        assert obj["rank"] == 2
        assert obj["braid"] == {"n": 2, "word": [1, 1, 1]}

    def test_search_is_byte_deterministic(self, capsys, tmp_path):
        p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
        for p in (p1, p2):
            code, _, _ = run(
                capsys,
                "ar-search", "--n", "2", "--word", "1 1 1 1 1", "--output", str(p),
            )
            assert code == 0
        assert p1.read_bytes() == p2.read_bytes()

    def test_search_not_found_exit_code(self, capsys, tmp_path):
        path = tmp_path / "evidence.json"
        code, out, _ = run(
            capsys,
            "ar-search", "--n", "4", "--word", "2 1 3 2 2 1 3 2 2 1 3 2 1",
            "--restarts", "6", "--output", str(path), "--format", "json",
        )
        assert code == 2
        obj = json.loads(out)
        assert obj["found"] is False
        assert obj["best_residual"] > 1e-3
        assert jsonio.load_file(str(path))["found"] is False

    def test_verify_accepts_good_certificate(self, capsys, tmp_path):
        path = tmp_path / "cert.json"
        run(capsys, "ar-search", "--n", "2", "--word", "1 1 1", "--output", str(path))
        code, out, _ = run(capsys, "verify", "--cert", str(path), "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["accepted"] is True
        assert obj["recomputed"]["rank"] == 2

    def test_verify_rejects_corrupted_certificate(self, capsys, tmp_path):
        path = tmp_path / "cert.json"
        run(capsys, "ar-search", "--n", "2", "--word", "1 1 1", "--output", str(path))
        obj = jsonio.load_file(str(path))
        obj["generators"][0]["re"] = 3.25
        jsonio.dump_file(str(path), obj)
        code, out, _ = run(capsys, "verify", "--cert", str(path))
        assert code == 2
        assert "NOT accepted" in out

    def test_construct_from_files(self, capsys, tmp_path):
        a_path, g_path, out_path = (
            tmp_path / "a.json",
            tmp_path / "g.json",
            tmp_path / "sat.json",
        )
        run(capsys, "ar-search", "--n", "2", "--word", "1 1 1", "--output", str(a_path))
        run(capsys, "ar-search", "--n", "2", "--word", "1 1 1 1 1", "--output", str(g_path))
        code, out, _ = run(
            capsys,
            "construct-aug", "--alpha-cert", str(a_path), "--gamma-cert", str(g_path),
            "--output", str(out_path),
        )
        assert code == 0
        obj = jsonio.load_file(str(out_path))
        assert obj["rank"] == 4
        assert obj["restarts"] == 0


class TestCheckCommand:
    @pytest.mark.parametrize(
        "argv",
        [
            ("check", "--suite", "chainrule", "--n", "3", "--count", "15"),
            ("check", "--suite", "transpose", "--n", "3", "--count", "15"),
            ("check", "--suite", "psi", "--k", "2", "--p", "2"),
            ("check", "--suite", "commutes", "--k", "2", "--p", "2"),
            ("check", "--suite", "sigma_n", "--k", "2", "--p", "2"),
            ("check", "--suite", "tau", "--n", "4"),
            ("check", "--suite", "blocks", "--n", "2", "--p", "2"),
        ],
    )
    def test_suites_pass(self, capsys, argv):
        code, out, _ = run(capsys, *argv, "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["status"] == "pass"
        assert all(r["status"] == "pass" for r in obj["reports"])

    def test_psi_suite_echoes_config(self, capsys):
        code, out, _ = run(capsys, "check", "--suite", "psi", "--k", "3", "--p", "2")
        assert code == 0
        assert "config: command=check suite=psi" in out
        assert "all checks passed" in out


class TestTermBudget:
    def test_budget_overflow_exits_one(self, capsys, monkeypatch):
        monkeypatch.setenv("KCH_TERM_BUDGET", "1")
        code, _, err = run(capsys, "phi", "--n", "2", "--word", "1 1 1")
        assert code == 1
        assert "budget" in err
        assert "numeric" in err  # message points at the numeric path
