import json

import pytest
from mpmath import mp, mpf

from mzv.cli import main, parse_range, parse_word
from mzv.words import Word


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsers:
    def test_parse_word(self):
        assert parse_word("AABB") == Word("AABB")
        assert parse_word("(AB)^3") == Word("ABABAB")
        assert parse_word("A^2B^2") == Word("AABB")
        assert parse_word("(A^2B^2)^2AB") == Word("AABBAABBAB")
        assert parse_word("") == Word("")
        for bad in ("(AB", "AB)", "A^", "AXB", "AB^x"):
            with pytest.raises(ValueError):
                parse_word(bad)

    def test_parse_range(self):
        assert parse_range("1..4") == [1, 2, 3, 4]
        assert parse_range("3") == [3]


class TestEval:
    def test_weight_four(self, capsys):
        code, out, _ = run(capsys, "eval", "3,1", "--digits", "50")
        assert code == 0
        assert out.startswith("0.2705808084277845478790009241352919756936877379796")

    def test_pi_squared_over_six(self, capsys):
        code, out, _ = run(capsys, "eval", "2", "--digits", "30")
        assert code == 0
        assert out.startswith("1.6449340668482264364724151666")

    def test_divergent_rejected(self, capsys):
        code, _, err = run(capsys, "eval", "1,2", "--digits", "30")
        assert code == 2
        assert "diverges" in err

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "eval", "3,x")
        assert code == 2
        assert "error" in err

    def test_default_digits_env(self, capsys, monkeypatch):
        monkeypatch.setenv("MZV_DEFAULT_DIGITS", "25")
        code, out, _ = run(capsys, "eval", "2")
        assert code == 0
        assert out.strip().startswith("1.6449340668482264")
        assert len(out.strip()) <= 27  # 25 significant digits plus "1."


class TestShuffle:
    def test_canonical_output(self, capsys):
        code, out, _ = run(capsys, "shuffle", "AB", "AB")
        assert code == 0
        assert out.strip() == "4*AABB + 2*ABAB"

    def test_empty_operand(self, capsys):
        code, out, _ = run(capsys, "shuffle", "", "AB")
        assert code == 0
        assert out.strip() == "1*AB"

    def test_single_letters(self, capsys):
        code, out, _ = run(capsys, "shuffle", "A", "B")
        assert code == 0
        assert out.strip() == "1*AB + 1*BA"

    def test_power_shorthand_and_zeta(self, capsys):
        code, out, _ = run(capsys, "shuffle", "(AB)^1", "AB", "--as-zeta")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "4*AABB + 2*ABAB"
        assert lines[1] == "4*zeta(3,1) + 2*zeta(2,2)"

    def test_bad_word(self, capsys):
        code, _, err = run(capsys, "shuffle", "AXB", "AB")
        assert code == 2

    def test_json(self, capsys):
        code, out, _ = run(capsys, "shuffle", "AB", "AB", "--json")
        assert code == 0
        blob = json.loads(out)
        assert blob["data"]["polynomial"] == [
            {"word": "AABB", "num": "4", "den": "1"},
            {"word": "ABAB", "num": "2", "den": "1"},
        ]


class TestVerify:
    def test_zagier_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "zagier", "--n", "1..2", "--digits", "60")
        assert code == 0
        assert "pass" in out

    def test_cyclic_vector(self, capsys):
        code, out, _ = run(
            capsys, "verify", "cyclic", "--vector", "0,2,1", "--digits", "60"
        )
        assert code == 0

    def test_cyclic_needs_vector_or_all(self, capsys):
        code, _, err = run(capsys, "verify", "cyclic", "--digits", "40")
        assert code == 2

    def test_cyclic_sweep_streams(self, capsys):
        code, out, _ = run(
            capsys, "verify", "cyclic", "--all", "--max-weight", "6", "--digits", "40"
        )
        assert code == 0
        lines = out.strip().splitlines()
        # instances stream one line each before the summary
        assert lines[0].startswith("0:")
        assert lines[-1].startswith("verify cyclic: pass")

    def test_lemmas(self, capsys):
        code, out, _ = run(capsys, "verify", "lemmas", "--n-max", "10")
        assert code == 0
        assert "pass (3 instance(s)" in out

    def test_powers(self, capsys):
        code, out, _ = run(capsys, "verify", "powers", "--max-blocks", "4")
        assert code == 0

    def test_symbolic(self, capsys):
        code, out, _ = run(capsys, "verify", "symbolic", "--n-max", "2")
        assert code == 0

    def test_euler(self, capsys):
        code, out, _ = run(capsys, "verify", "euler", "--max-weight", "6", "--digits", "40")
        assert code == 0

    def test_dual(self, capsys):
        code, out, _ = run(capsys, "verify", "dual", "--max-weight", "4", "--digits", "40")
        assert code == 0

    def test_swap_requires_five_entries(self, capsys):
        code, _, err = run(capsys, "verify", "swap", "--vector", "1,2", "--digits", "40")
        assert code == 2

    def test_swap(self, capsys):
        code, out, _ = run(
            capsys, "verify", "swap", "--vector", "1,0,0,1,0", "--digits", "50"
        )
        assert code == 0

    def test_json_status_rederivable(self, capsys):
        code, out, _ = run(
            capsys, "verify", "zagier", "--n", "1..2", "--digits", "60", "--json"
        )
        assert code == 0
        report = json.loads(out.strip().splitlines()[-1])
        assert report["status"] == "pass"
        limit = mpf(10) ** (-(report["digits"] - 10))
        rederived = all(mpf(res) < limit for _, res in report["residuals"])
        assert rederived == (report["status"] == "pass")

    def test_unknown_target(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "nonsense"])
        assert exc.value.code == 2

    def test_determinism(self, capsys):
        args = ("verify", "dual", "--max-weight", "3", "--digits", "40", "--json")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        strip = lambda s: [
            {k: v for k, v in json.loads(line).items() if k != "elapsed_ms"}
            for line in s.strip().splitlines()
        ]
        assert strip(out1) == strip(out2)


class TestOrbits:
    @pytest.mark.parametrize(
        "n,m,expected", [(4, 2, 5), (1, 1, 1), (3, 3, 8)]
    )
    def test_grid_values(self, capsys, n, m, expected):
        code, out, _ = run(capsys, "orbits", "--n", str(n), "--M", str(m))
        assert code == 0
        assert out.strip() == str(expected)


class TestRelations:
    def test_cell_1_1_json(self, capsys):
        code, out, _ = run(capsys, "relations", "--n", "1", "--M", "1", "--json")
        assert code == 0
        report = json.loads(out)
        assert report["status"] == "found"
        data = report["data"]
        assert data["n"] == 1 and data["M"] == 1
        assert data["entries"] == ["0,0,1", "0,1,0", "zeta2^3"]
        assert data["relations"] == [[2, 1, -1]]
        assert data["digits"] == 300
        assert data["max_norm"] == 10**6
        assert data["orbit_count"] == 1 and data["delta"] == 0

    def test_cell_1_1_text(self, capsys):
        code, out, _ = run(capsys, "relations", "--n", "1", "--M", "1")
        assert code == 0
        assert "found 1 independent relation(s)" in out
