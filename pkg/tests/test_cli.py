import json

from chromaspec.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSpectrumCommand:
    def test_csv_count_at_two(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--n", "5", "--q", "2", "--class", "all",
                           "--format", "csv")
        assert code == 0
        assert out.strip().splitlines()[-1] == "2,5,all,6"

    def test_json_zero_point(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--n", "3", "--q", "0", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["count"] == 1 and payload["values"] == ["0"]

    def test_planar_class_runs(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--n", "6", "--q", "7/3",
                           "--class", "planar", "--format", "json")
        assert code == 0
        assert json.loads(out)["count"] > 1

    def test_planar_connected_class(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--n", "5", "--q", "-1",
                           "--class", "planar-connected", "--format", "json")
        assert code == 0
        planar = run(capsys, "spectrum", "--n", "5", "--q", "-1",
                     "--class", "planar", "--format", "json")
        assert json.loads(out)["count"] <= json.loads(planar[1])["count"]

    def test_guard_exit(self, capsys):
        code, _, err = run(capsys, "spectrum", "--n", "9", "--q", "2")
        assert code == 1

    def test_float_input_rejected(self, capsys):
        code, _, err = run(capsys, "spectrum", "--n", "4", "--q", "1.5")
        assert code == 2

    def test_usage_error(self, capsys):
        assert run(capsys, "spectrum", "--n", "4")[0] == 2  # missing --q

    def test_jobs_deterministic(self, capsys):
        code1, out1, _ = run(capsys, "spectrum", "--n", "5", "--q", "7/3", "--format", "json")
        code2, out2, _ = run(capsys, "spectrum", "--n", "5", "--q", "7/3", "--format", "json",
                             "--jobs", "2")
        assert code1 == code2 == 0 and out1 == out2

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "spec.json"
        code, out, _ = run(capsys, "spectrum", "--n", "4", "--q", "-1",
                           "--format", "json", "--output", str(target))
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["n"] == 4

    def test_census_file_round_trip(self, capsys, tmp_path):
        corpus = tmp_path / "n4.g6"
        code, out1, _ = run(capsys, "spectrum", "--n", "4", "--q", "-1", "--format", "json",
                            "--census-out", str(corpus))
        assert code == 0
        assert len(corpus.read_text().splitlines()) == 11
        code, out2, _ = run(capsys, "spectrum", "--n", "4", "--q", "-1", "--format", "json",
                            "--census-in", str(corpus))
        assert code == 0 and out1 == out2

    def test_census_in_wrong_order_rejected(self, capsys, tmp_path):
        corpus = tmp_path / "n3.g6"
        corpus.write_text("Bw\n")
        assert run(capsys, "spectrum", "--n", "4", "--q", "-1",
                   "--census-in", str(corpus))[0] == 2

    def test_census_in_malformed_file_exit_two(self, capsys, tmp_path):
        corpus = tmp_path / "junk.g6"
        corpus.write_text("not graph6 at all\n")
        assert run(capsys, "spectrum", "--n", "4", "--q", "-1",
                   "--census-in", str(corpus))[0] == 2

    def test_census_in_missing_file_exit_two(self, capsys, tmp_path):
        assert run(capsys, "spectrum", "--n", "4", "--q", "-1",
                   "--census-in", str(tmp_path / "absent.g6"))[0] == 2


class TestCertifyCommand:
    def test_negative_point(self, capsys):
        code, out, _ = run(capsys, "certify", "--q", "-1", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["certified"] and payload["regime"]["name"] == "negative"

    def test_mid_anchor(self, capsys):
        code, out, _ = run(capsys, "certify", "--q", "3/2", "--format", "json")
        assert code == 0
        assert json.loads(out)["regime"]["name"] == "mid-anchor"

    def test_degenerate_exit_two(self, capsys):
        assert run(capsys, "certify", "--q", "2")[0] == 2

    def test_impossible_override_exit_three(self, capsys):
        assert run(capsys, "certify", "--q", "3", "--regime", "negative")[0] == 3

    def test_quadratic_point(self, capsys):
        code, out, _ = run(capsys, "certify", "--q", "3/2+1/2*sqrt(5)", "--format", "json")
        assert code == 0 and json.loads(out)["certified"]


class TestLowerboundCommand:
    def test_negative_twelve(self, capsys):
        code, out, _ = run(capsys, "lowerbound", "--n", "12", "--q", "-1", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["word_count"] == 1024 and payload["value_count"] >= 32

    def test_fibonacci_count_at_ten(self, capsys):
        code, out, _ = run(capsys, "lowerbound", "--n", "10", "--q", "3", "--format", "json")
        assert code == 0
        assert json.loads(out)["word_count"] == 21  # F_8

    def test_audit_mode(self, capsys):
        code, out, _ = run(capsys, "lowerbound", "--n", "14", "--q", "5/4",
                           "--audit", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        inner = payload.get("witness", payload)
        assert inner["audited"] is True

    def test_includes_exhaustive_at_small_n(self, capsys):
        code, out, _ = run(capsys, "lowerbound", "--n", "6", "--q", "-1", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["exhaustive_count"] >= payload["constructive_count"]
        assert payload["passed"]

    def test_word_guard_exit_one(self, capsys):
        assert run(capsys, "lowerbound", "--n", "60", "--q", "-1", "--no-exhaustive")[0] == 1

    def test_degenerate_exit_two(self, capsys):
        assert run(capsys, "lowerbound", "--n", "6", "--q", "1")[0] == 2


class TestWitnessCommand:
    def test_sb_word(self, capsys):
        code, out, _ = run(capsys, "witness", "--word", "SB", "--seed", "K2", "--q", "-1",
                           "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["n"] == 4
        assert payload["feasible"]["vector"] == ["4", "8"]
        assert payload["attainable"]["vector"] == ["-4", "8"]

    def test_empty_word_echoes_seed(self, capsys):
        code, out, _ = run(capsys, "witness", "--word", "", "--seed", "K3", "--q", "3",
                           "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["n"] == 3 and payload["graph6"] == "Bw"

    def test_block_letter_expansion(self, capsys):
        code, out, _ = run(capsys, "witness", "--word", "D", "--seed", "K3", "--q", "3",
                           "--format", "json")
        assert code == 0
        assert json.loads(out)["expanded_word"] == "SS"

    def test_regime_blocks_expand(self, capsys):
        code, out, _ = run(capsys, "witness", "--word", "KL", "--seed", "K4", "--q", "3/2",
                           "--format", "json")
        assert code == 0
        assert json.loads(out)["expanded_word"] == "SSBSSB"

    def test_invalid_letter_exit_two(self, capsys):
        assert run(capsys, "witness", "--word", "SX", "--q", "-1")[0] == 2


class TestVerifyCommand:
    def test_default_suite_passes_quickly(self, capsys):
        code, out, _ = run(capsys, "verify", "--trials", "10", "--n-max", "4", "--k-max", "3")
        assert code == 0
        assert "FAIL" not in out

    def test_single_lemma(self, capsys):
        code, out, _ = run(capsys, "verify", "--lemma", "join-shift", "--trials", "5")
        assert code == 0
        assert out.strip().startswith("join-shift")

    def test_unknown_lemma_exit_two(self, capsys):
        assert run(capsys, "verify", "--lemma", "nonsense")[0] == 2

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "verify", "--lemma", "singular-rewitness",
                           "--trials", "5", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload[0]["passed"] is True


class TestPersistentCache:
    def test_cache_file_created_and_reused(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("CHROMASPEC_CACHE_DIR", str(tmp_path))
        code, out1, _ = run(capsys, "spectrum", "--n", "4", "--q", "-2", "--format", "json")
        assert code == 0
        cache_file = tmp_path / "chromatic.cache"
        assert cache_file.exists()
        first = cache_file.read_text()
        assert first.startswith("# chromaspec-cache 1")
        code, out2, _ = run(capsys, "spectrum", "--n", "4", "--q", "-2", "--format", "json")
        assert code == 0 and out1 == out2
