import json

import pytest

from otype.cli import main
from otype.ordinal import parse as parse_ordinal
from otype.suites import SUITES, SuiteResult


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_counterexample_product(self, capsys):
        code, out, _ = run(capsys, "eval", "ord(w+1) . antichain(2)")
        assert code == 0 and out == "w*2+2\n"

    def test_limit_product(self, capsys):
        code, out, _ = run(capsys, "eval", "ord(w) . ord(w)")
        assert code == 0 and out == "w^2\n"

    def test_union_of_chains(self, capsys):
        code, out, _ = run(capsys, "eval", "chain(2) (+) chain(3)")
        assert code == 0 and out == "5\n"

    def test_json_round_trips(self, capsys):
        code, out, _ = run(capsys, "eval", "--json", "ord(w+1) . antichain(2)")
        assert code == 0
        payload = json.loads(out)
        assert parse_ordinal(payload["value"]) == parse_ordinal("w*2+2")


class TestDecompose:
    def test_sum_example(self, capsys):
        code, out, _ = run(capsys, "decompose", "ord(w) + chain(3)")
        assert code == 0 and out == "delta=w m=3 k=1\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "decompose", "--json", "antichain(2)")
        payload = json.loads(out)
        assert code == 0
        assert (payload["delta"], payload["m"], payload["k"]) == ("0", 2, 2)
        parse_ordinal(payload["delta"])


class TestCompare:
    @pytest.mark.parametrize("a,b,word", [
        ("ord(w)", "ord(w+1)", "less"),
        ("chain(4)", "chain(2) . chain(2)", "equal"),
        ("ord(w+1) . antichain(2)", "ord(w+1) . ord(2)", "greater"),
    ])
    def test_words(self, capsys, a, b, word):
        code, out, _ = run(capsys, "compare", a, b)
        assert code == 0 and out.strip() == word


class TestTrace:
    def test_v_poset(self, capsys):
        code, out, _ = run(capsys, "trace", "ord(w+1) . poset(3; 0<2, 1<2)")
        assert code == 0
        assert "value: w*3+1" in out
        assert "k=2" in out and "k=1" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "trace", "--json", "ord(w) . chain(2)")
        payload = json.loads(out)
        assert code == 0
        assert payload["value"] == "w*2"
        assert payload["trace"]["maximal"] == 1

    def test_needs_a_product(self, capsys):
        code, _, err = run(capsys, "trace", "chain(3)")
        assert code == 1 and "error" in err

    def test_expands_finite_index_terms(self, capsys):
        code, out, _ = run(capsys, "trace", "ord(w) . (chain(1) (+) chain(1))")
        assert code == 0 and "value: w*2" in out


class TestErrors:
    def test_parse_error_exit_2(self, capsys):
        code, _, err = run(capsys, "eval", "ord(w*0)")
        assert code == 2 and "position" in err

    def test_term_parse_error(self, capsys):
        code, _, err = run(capsys, "eval", "chain(2) chain(3)")
        assert code == 2 and "position" in err

    def test_resource_error_exit_3(self, capsys):
        literal = "w"
        for _ in range(70):
            literal = f"w^({literal})"
        code, _, err = run(capsys, "eval", f"ord({literal})")
        assert code == 3 and "resource" in err


class TestCheck:
    def test_single_suite_passes(self, capsys):
        code, out, _ = run(capsys, "check", "absorption", "--cases", "20")
        assert code == 0
        assert "suite absorption: PASS" in out

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "check", "monotonic", "--cases", "10", "--json")
        payload = json.loads(out)
        assert code == 0
        assert payload[0]["suite"] == "monotonic" and payload[0]["passed"]

    def test_deterministic_output(self, capsys):
        first = run(capsys, "check", "cut-recursion", "--cases", "20", "--seed", "3")
        second = run(capsys, "check", "cut-recursion", "--cases", "20", "--seed", "3")
        assert first == second

    def test_failing_suite_exits_1(self, capsys, monkeypatch):
        def failing(seed=0, cases=None, rank_cap=None):
            return SuiteResult("failing", seed, 1, 1, ("broken case",), 0.0)

        monkeypatch.setitem(SUITES, "failing", failing)
        code, out, _ = run(capsys, "check", "failing")
        assert code == 1
        assert "FAIL" in out and "minimized counterexample: broken case" in out

    def test_report_dir(self, capsys, tmp_path):
        code, out, _ = run(capsys, "check", "counterexample",
                           "--report-dir", str(tmp_path / "reports"))
        assert code == 0
        csv_path = tmp_path / "reports" / "check_results.csv"
        png_path = tmp_path / "reports" / "check_summary.png"
        assert csv_path.exists() and png_path.stat().st_size > 0
        lines = csv_path.read_text().strip().splitlines()
        assert lines[0] == "suite,status,seed,cases,failures,example"
        assert lines[1].startswith("counterexample,pass,")


class TestCounterexample:
    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "counterexample")
        assert code == 0
        assert "w*2+2" in out and "w*2+1" in out
        assert "witness validation: PASS" in out

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "counterexample", "--json")
        payload = json.loads(out)
        assert code == 0
        assert payload["product_formula"] == "w*2+2"
        assert payload["naive_product"] == "w*2+1"
        assert payload["strictly_greater"] is True
        assert payload["witness"]["passed"] is True

    def test_report_dir(self, capsys, tmp_path):
        code, _, _ = run(capsys, "counterexample", "--report-dir", str(tmp_path))
        assert code == 0
        assert (tmp_path / "counterexample.csv").exists()
        assert (tmp_path / "counterexample_witness.png").stat().st_size > 0
        rows = (tmp_path / "counterexample.csv").read_text().strip().splitlines()
        assert "product_formula,w*2+2" in rows

    def test_cap_flag(self, capsys):
        code, out, _ = run(capsys, "counterexample", "--cap", "5", "--json")
        payload = json.loads(out)
        assert code == 0
        assert payload["witness"]["element_count"] == 12  # 5 + 1 per copy
