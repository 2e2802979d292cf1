"""Command-line surface: flags, formats, exit codes."""

import json

import pytest

from abelianperiods.cli import ALGOS, main

GOLDEN = "abaababa"


@pytest.fixture
def cli(capsys):
    def run(*argv):
        try:
            code = main(list(argv))
        except SystemExit as exc:
            code = exc.code if isinstance(exc.code, int) else 0
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run


class TestPeriodsCommand:
    def test_golden_text_output(self, cli):
        code, out, _ = cli("periods", "--word", GOLDEN, "--algo", "brute")
        lines = out.splitlines()
        assert code == 0
        assert len(lines) == 16
        assert lines[0] == "1 2" and lines[-1] == "0 8"

    def test_all_algorithms_print_identical_bytes(self, cli):
        outputs = set()
        for algo in ALGOS:
            code, out, _ = cli("periods", "--word", GOLDEN, "--algo", algo)
            assert code == 0
            outputs.add(out)
        assert len(outputs) == 1

    def test_output_is_stable_across_runs(self, cli):
        first = cli("periods", "--word", GOLDEN)
        second = cli("periods", "--word", GOLDEN)
        assert first == second

    def test_nontrivial_count(self, cli):
        code, out, _ = cli(
            "periods", "--word", GOLDEN, "--filter", "nontrivial", "--count"
        )
        assert code == 0 and out.strip() == "3"

    def test_smallest(self, cli):
        code, out, _ = cli("periods", "--word", GOLDEN, "--smallest")
        assert code == 0 and out.strip() == "1 2"

    def test_nondeducible_filter(self, cli):
        code, out, _ = cli("periods", "--word", GOLDEN, "--filter", "nondeducible")
        assert code == 0
        assert out.splitlines() == [
            "1 2", "0 3", "2 3", "2 4", "1 5", "2 5", "3 5", "1 7",
        ]

    def test_json_document_round_trips(self, cli):
        code, out, _ = cli("periods", "--word", GOLDEN, "--json")
        doc = json.loads(out)
        assert code == 0
        assert set(doc) == {"word_length", "algo", "filter", "periods"}
        assert doc["word_length"] == 8
        assert doc["algo"] == "select" and doc["filter"] == "all"
        _, text_out, _ = cli("periods", "--word", GOLDEN)
        text_pairs = [[int(x) for x in line.split()] for line in text_out.splitlines()]
        assert doc["periods"] == text_pairs

    def test_empty_word(self, cli):
        code, out, _ = cli("periods", "--word", "")
        assert code == 0 and out == ""
        code, out, _ = cli("periods", "--word", "", "--count")
        assert code == 0 and out.strip() == "0"
        code, out, _ = cli("periods", "--word", "", "--smallest")
        assert code == 0 and out == ""

    def test_file_input(self, cli, tmp_path):
        path = tmp_path / "word.txt"
        path.write_bytes(GOLDEN.encode() + b"\n")
        code, out, _ = cli("periods", "--file", str(path))
        _, expected, _ = cli("periods", "--word", GOLDEN)
        assert code == 0 and out == expected

    def test_file_trailing_crlf_stripped(self, cli, tmp_path):
        path = tmp_path / "word.txt"
        path.write_bytes(b"aaaa\r\n")
        code, out, _ = cli("periods", "--file", str(path), "--count")
        _, expected, _ = cli("periods", "--word", "aaaa", "--count")
        assert code == 0 and out == expected

    def test_missing_file_is_a_data_error(self, cli, tmp_path):
        code, _, err = cli("periods", "--file", str(tmp_path / "nope"))
        assert code == 1 and "cannot read" in err

    def test_source_is_required(self, cli):
        code, _, _ = cli("periods")
        assert code == 2

    def test_unknown_algo_and_filter(self, cli):
        assert cli("periods", "--word", "ab", "--algo", "quick")[0] == 2
        assert cli("periods", "--word", "ab", "--filter", "other")[0] == 2

    def test_prefixes_blocks(self, cli):
        code, out, _ = cli(
            "periods", "--word", "aba", "--algo", "online-list", "--prefixes"
        )
        assert code == 0
        assert out.splitlines() == [
            "# prefix 1", "0 1",
            "# prefix 2", "0 2",
            "# prefix 3", "0 2", "1 2", "0 3",
        ]

    def test_prefixes_needs_an_online_algorithm(self, cli):
        code, _, _ = cli("periods", "--word", "aba", "--algo", "brute", "--prefixes")
        assert code == 2

    def test_prefixes_rejects_other_output_modes(self, cli):
        code, _, _ = cli(
            "periods", "--word", "aba", "--algo", "online-heap", "--prefixes", "--count"
        )
        assert code == 2


class TestGenerateCommand:
    def test_fibonacci(self, cli):
        code, out, _ = cli("generate", "--kind", "fibonacci", "--length", "13")
        assert code == 0 and out.strip() == "abaababaabaab"

    def test_spike(self, cli):
        code, out, _ = cli("generate", "--kind", "spike", "--length", "5")
        assert code == 0 and out.strip() == "aabaa"

    def test_cyclic(self, cli):
        code, out, _ = cli(
            "generate", "--kind", "cyclic", "--length", "6", "--sigma", "3"
        )
        assert code == 0 and out.strip() == "abcabc"

    def test_random_is_deterministic(self, cli):
        args = ("generate", "--kind", "random", "--length", "40", "--sigma", "4",
                "--seed", "9")
        assert cli(*args) == cli(*args)

    def test_usage_errors(self, cli):
        assert cli("generate", "--kind", "spike", "--length", "4")[0] == 2
        assert cli("generate", "--kind", "cyclic", "--length", "7", "--sigma", "3")[0] == 2
        assert cli("generate", "--kind", "cyclic", "--length", "6")[0] == 2
        assert cli("generate", "--kind", "random", "--length", "5")[0] == 2
        assert cli("generate", "--kind", "fibonacci", "--length", "0")[0] == 2


class TestVerifyCommand:
    def test_exhaustive_smallest_corpus(self, cli):
        code, out, _ = cli("verify", "--max-len", "1", "--sigma", "1")
        assert code == 0 and "verified 1 word" in out

    def test_exhaustive_binary(self, cli):
        code, out, _ = cli("verify", "--max-len", "6", "--sigma", "2")
        assert code == 0 and "verified 126 words" in out

    def test_sampled_mode(self, cli):
        code, out, _ = cli(
            "verify", "--random", "20", "--len", "12", "--sigma", "3", "--seed", "1"
        )
        assert code == 0 and "verified 20 words" in out

    def test_mode_is_required(self, cli):
        assert cli("verify")[0] == 2
        assert cli("verify", "--max-len", "2", "--random", "2", "--len", "3")[0] == 2
        assert cli("verify", "--random", "2")[0] == 2

    def test_detects_an_injected_fault(self, cli, monkeypatch):
        from abelianperiods.offline import select_periods as real

        def broken(table, **kwargs):
            results = iter(real(table, **kwargs))
            next(results, None)  # swallow one period
            yield from results

        monkeypatch.setattr("abelianperiods.cli.select_periods", broken)
        code, out, _ = cli("verify", "--max-len", "3", "--sigma", "2")
        assert code == 1
        assert "select" in out and "disagree" in out


class TestBenchCommand:
    HEADER = "algo,sigma,length,reps,mean_ms,stddev_ms,total_periods"

    def test_header_and_rows(self, cli):
        code, out, _ = cli(
            "bench", "--algos", "brute,select", "--lengths", "20,40",
            "--sigma", "2,3", "--reps", "3", "--seed", "7",
        )
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[0] == self.HEADER
        assert len(lines) == 1 + 2 * 2 * 2

    def test_reps_zero_prints_header_only(self, cli):
        code, out, _ = cli("bench", "--reps", "0")
        assert code == 0 and out.strip() == self.HEADER

    def test_same_words_for_every_algorithm(self, cli):
        code, out, _ = cli(
            "bench", "--algos", "brute,select,online-heap", "--lengths", "25",
            "--sigma", "2", "--reps", "4", "--filter", "nontrivial",
        )
        rows = [line.split(",") for line in out.strip().splitlines()[1:]]
        assert code == 0
        totals = {row[0]: row[6] for row in rows}
        assert len(set(totals.values())) == 1

    def test_csv_file_output(self, cli, tmp_path):
        path = tmp_path / "out.csv"
        code, out, _ = cli(
            "bench", "--lengths", "10", "--sigma", "2", "--reps", "1",
            "--csv", str(path),
        )
        assert code == 0 and out == ""
        lines = path.read_text().strip().splitlines()
        assert lines[0] == self.HEADER and len(lines) == 3

    def test_unknown_algorithm(self, cli):
        assert cli("bench", "--algos", "quick")[0] == 2
