import json
import subprocess
import sys

import pytest

from nonisog.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSubcommands:
    def test_galois(self, capsys):
        code, out, err = run_cli(capsys, "galois", "x^5+15*x+12")
        assert code == 0 and out.strip() == "F20" and err == ""

    def test_galois_reducible(self, capsys):
        code, out, _ = run_cli(capsys, "galois", "x^3-15*x+22")
        assert code == 0 and out.strip() == "Reducible"

    def test_disc(self, capsys):
        code, out, _ = run_cli(capsys, "disc", "x^5 - x - 1")
        assert code == 0 and out.strip() == "2869"

    def test_factor(self, capsys):
        code, out, _ = run_cli(capsys, "factor", "x^3-15*x+22")
        assert code == 0 and out.strip() == "x^3 - 15*x + 22 = (x - 2) * (x^2 + 2*x - 11)"

    def test_j(self, capsys):
        code, out, _ = run_cli(capsys, "j", "x^3-15*x+22")
        assert code == 0 and out.startswith("54000")

    def test_module_negative_control(self, capsys):
        code, out, _ = run_cli(capsys, "module", "--group", "C7", "--n", "7")
        assert code == 0 and "simple=False" in out

    def test_module_json(self, capsys):
        code, out, _ = run_cli(capsys, "module", "--group", "F20", "--n", "5", "--json")
        doc = json.loads(out)
        assert doc["simple"] is True and doc["endomorphism_dim"] == 1 and doc["absolutely_simple"] is True

    def test_certify_json(self, capsys):
        code, out, _ = run_cli(capsys, "certify", "x^3-5", "x^3-15*x+22", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["version"] == "0.1.0"
        assert doc["verdict"]["tag"] == "Inconclusive"
        detail = next(t["detail"] for t in doc["trace"] if t["name"] == "j-invariants against the CM set")
        assert "j(f) = 0" in detail and "j(h) = 54000" in detail

    def test_certify_text(self, capsys):
        code, out, _ = run_cli(capsys, "certify", "x^5-x-1", "x^5-110*x^3-55*x^2+2310*x+979")
        assert code == 0 and "verdict: HomZero" in out


class TestExitCodes:
    def test_parse_error_is_1(self, capsys):
        code, out, err = run_cli(capsys, "disc", "x^")
        assert code == 1 and out == "" and "offset 2" in err

    def test_usage_error_is_1(self, capsys):
        code, _, err = run_cli(capsys, "galois")
        assert code == 1 and err

    def test_capability_error_is_2(self, capsys):
        code, _, err = run_cli(capsys, "factor", "x^33+1")
        assert code == 2 and "capability" in err

    def test_unsupported_degree_is_2(self, capsys):
        code, _, err = run_cli(capsys, "galois", "x^4-2")
        assert code == 2  # degree 4 identification is a capability limit

    def test_invalid_input_is_1(self, capsys):
        code, _, err = run_cli(capsys, "galois", "x^3")
        assert code == 1 and "squarefree" in err

    def test_inconclusive_is_still_0(self, capsys):
        code, out, _ = run_cli(capsys, "certify", "x^3-1", "x^3-15*x+22")
        assert code == 0 and "Inconclusive" in out


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["certify", "x^3-5", "x^3-15*x+22", "--json"],
            ["factor", "x^5-1", "--json"],
            ["galois", "x^3-5", "--json"],
        ],
    )
    def test_byte_identical_json(self, capsys, argv):
        _, out1, _ = run_cli(capsys, *argv)
        _, out2, _ = run_cli(capsys, *argv)
        assert out1 == out2


class TestCorpus:
    def test_bundled_corpus_passes(self, capsys):
        code, out, err = run_cli(capsys, "corpus")
        assert code == 0
        assert "15/15 corpus cases passed" in out
        assert all(line.startswith("PASS") for line in out.splitlines()[:-1])

    def test_corpus_json(self, capsys):
        code, out, _ = run_cli(capsys, "corpus", "--json")
        doc = json.loads(out)
        assert doc["failed"] == 0 and doc["total"] == doc["passed"] == 15

    def test_tampered_corpus_fails_and_names_case(self, tmp_path, capsys):
        bad = [
            {
                "name": "tampered-case",
                "f": "x^3 - 5",
                "h": "x^3 - 15*x + 22",
                "expected": "HomZero",
                "citation": "rule:cm-j-set",
            }
        ]
        path = tmp_path / "corpus.json"
        path.write_text(json.dumps(bad))
        code, out, _ = run_cli(capsys, "corpus", "--file", str(path))
        assert code == 1
        assert "FAIL tampered-case" in out

    def test_empty_corpus_warns_and_passes(self, tmp_path, capsys):
        path = tmp_path / "empty.json"
        path.write_text("[]")
        code, out, err = run_cli(capsys, "corpus", "--file", str(path))
        assert code == 0
        assert "0/0" in out
        assert "empty" in err

    def test_malformed_corpus_is_1(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text('{"not": "a list"}')
        code, _, err = run_cli(capsys, "corpus", "--file", str(path))
        assert code == 1 and "malformed" in err

    def test_missing_file_is_1(self, capsys):
        code, _, err = run_cli(capsys, "corpus", "--file", "/nonexistent/corpus.json")
        assert code == 1 and err


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "nonisog", "galois", "x^3-5"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "S3"
