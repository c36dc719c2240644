import json

import pytest

from h5twistor import cli
from h5twistor.exactalg import CRational, RationalFunction
from h5twistor.heisenberg import CTX5


def rf(name):
    return RationalFunction.var(CTX5, name)


class TestExpressionGrammar:
    def test_basic(self):
        assert cli.parse_expression("y00p + 2*t") == rf("y00p") + 2 * rf("t")

    def test_precedence(self):
        assert cli.parse_expression("1 + 2*y10p^2") == 1 + 2 * rf("y10p") ** 2

    def test_parentheses_and_division(self):
        got = cli.parse_expression("(y00p + t) / (y11p - 3)")
        assert got == (rf("y00p") + rf("t")) / (rf("y11p") - 3)

    def test_imaginary_unit(self):
        got = cli.parse_expression("i*t")
        assert got == RationalFunction.const(CTX5, CRational(0, 1)) * rf("t")

    def test_unary_minus(self):
        assert cli.parse_expression("-t + y00p") == rf("y00p") - rf("t")

    def test_errors(self):
        for bad in ("y00p +", "(t", "q", "t $ 2", "2^t"):
            with pytest.raises(cli.ExprError):
                cli.parse_expression(bad)

    def test_division_by_zero(self):
        with pytest.raises(cli.ExprError):
            cli.parse_expression("t / (y00p - y00p)")


class TestVerify:
    def test_unknown_suite_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["verify", "--suite", "bogus"])
        assert exc.value.code == 2

    def test_fast_suites_pass(self, tmp_path):
        for suite in ("algebra", "heisenberg", "gauge", "ansatz", "twistor", "so6"):
            out = tmp_path / f"{suite}.json"
            assert cli.main(["verify", "--suite", suite, "--out", str(out)]) == 0
            report = json.loads(out.read_text())
            assert report["schema"] == 1
            assert report["suite"] == suite
            assert all(e["status"] != "fail" for e in report["entries"])

    def test_so6_has_seven_exact_entries(self, tmp_path):
        out = tmp_path / "so6.json"
        cli.main(["verify", "--suite", "so6", "--out", str(out)])
        report = json.loads(out.read_text())
        assert len(report["entries"]) == 7
        assert all(e["status"] == "exact-pass" for e in report["entries"])

    def test_entries_sorted_and_stable(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        cli.main(["verify", "--suite", "gauge", "--seed", "7", "--out", str(a)])
        cli.main(["verify", "--suite", "gauge", "--seed", "7", "--out", str(b)])
        assert a.read_bytes() == b.read_bytes()
        ids = [e["id"] for e in json.loads(a.read_text())["entries"]]
        assert ids == sorted(ids)


class TestConstruct:
    def test_harmonic_seed_accepted(self, tmp_path, capsys):
        out = tmp_path / "conn.json"
        assert cli.main(["construct", "--phi", "t", "--out", str(out)]) == 0
        payload = json.loads(out.read_text())
        assert payload["rank"] == 2
        assert payload["asd_residuals_zero"] == [True, True, True]
        assert set(payload["blocks"]) == {"phi00p", "phi10p", "phi01p", "phi11p", "phit"}

    def test_expression_seed(self, tmp_path):
        out = tmp_path / "conn.json"
        code = cli.main(["construct", "--phi", "y00p*y10p", "--out", str(out)])
        assert code == 0

    def test_non_harmonic_rejected(self, capsys):
        assert cli.main(["construct", "--phi", "y00p*y11p"]) == 1
        err = json.loads(capsys.readouterr().out)
        assert "not harmonic" in err["error"]

    def test_bad_expression(self, capsys):
        assert cli.main(["construct", "--phi", "y00p +"]) == 2


class TestEval:
    POINT = json.dumps(
        {"y00p": "1", "y10p": "1/2", "y01p": "-1/3", "y11p": "2", "t": "1/4+1*i"}
    )

    def test_eta_golden(self, tmp_path):
        out = tmp_path / "eta.json"
        code = cli.main(
            ["eval", "--object", "eta", "--point", self.POINT, "--zeta", "1/2", "--out", str(out)]
        )
        assert code == 0
        val = json.loads(out.read_text())["value"]
        assert val["w0"] == "5/6" and val["w1"] == "3/2"

    def test_curvature_vanishes(self, tmp_path):
        out = tmp_path / "curv.json"
        code = cli.main(
            ["eval", "--object", "curvature", "--phi", "inst", "--point", self.POINT, "--out", str(out)]
        )
        assert code == 0
        val = json.loads(out.read_text())["value"]
        flat = [abs(complex(*e)) for r in val for row in r for e in row]
        assert max(flat) == 0.0

    def test_singular_point_rejected(self, capsys):
        assert cli.main(["eval", "--object", "connection", "--phi", "inst"]) == 1
        err = json.loads(capsys.readouterr().out)
        assert "singular" in err["error"]


class TestAliases:
    def test_so6_verify_all(self):
        assert cli.main(["so6", "verify-all"]) == 0

    def test_twistor_roundtrip(self):
        assert cli.main(["twistor", "roundtrip", "--samples", "5"]) == 0
