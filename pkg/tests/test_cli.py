"""CLI: argument handling, output formats, exit codes."""

from __future__ import annotations

import json

import pytest

from adrcoder.cli import build_parser, main

D3 = "Reazione locale estesa, dolore locale; cefalea e febbre per due giorni"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestArguments:
    def test_no_subcommand_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_missing_dict_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["encode", "--text", "x"])
        assert exc.value.code == 2

    def test_text_and_input_exclusive(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["encode", "--dict", "fixture", "--text", "x", "--input", "y"])
        assert exc.value.code == 2

    def test_unreadable_dict_exits_3(self, capsys, tmp_path):
        with pytest.raises(SystemExit) as exc:
            main(["build-dict", "--dict", str(tmp_path / "absent.csv")])
        assert exc.value.code == 3
        assert "cannot load dictionary" in capsys.readouterr().err

    def test_subcommands_wired(self):
        parser = build_parser()
        minimal = {
            "build-dict": ["--dict", "fixture"],
            "encode": ["--dict", "fixture", "--text", "x"],
            "bench": ["--dict", "fixture", "--corpus", "c.csv"],
            "serve": [],
        }
        for sub, extra in minimal.items():
            args = parser.parse_args([sub, *extra])
            assert callable(args.func)


class TestBuildDict:
    def test_fixture_stats(self, capsys, fixture_dict):
        code, out, _ = run(capsys, "build-dict", "--dict", "fixture")
        assert code == 0
        assert f"terms:          {len(fixture_dict)}" in out
        assert f"version:        {fixture_dict.version}" in out

    def test_explicit_csv(self, capsys, tmp_path):
        path = tmp_path / "terms.csv"
        path.write_text("llt_code,llt_text,pt_code,pt_text\n1,Cefalea,1,Cefalea\n")
        code, out, _ = run(capsys, "build-dict", "--dict", str(path))
        assert code == 0
        assert "terms:          1" in out


class TestEncode:
    def test_table_output(self, capsys):
        code, out, _ = run(capsys, "encode", "--dict", "fixture", "--text", D3)
        assert code == 0
        assert "Reazione locale" in out
        assert "c1=-0.500" in out  # duplicate voters push c1 negative
        assert "exact" in out

    def test_empty_text_silent_table(self, capsys):
        code, out, _ = run(capsys, "encode", "--dict", "fixture", "--text", "")
        assert code == 0
        assert out == ""

    def test_json_output_shape(self, capsys):
        code, out, _ = run(capsys, "encode", "--dict", "fixture", "--json", "--text", D3)
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 1
        payload = json.loads(lines[0])
        assert list(payload) == ["selected", "covered_tokens", "truncated"]
        texts = {e["llt_text"].casefold() for e in payload["selected"]}
        assert "reazione locale" in texts

    def test_input_file_json_lines(self, capsys, tmp_path):
        src = tmp_path / "texts.txt"
        src.write_text("cefalea\nfebbre\n", encoding="utf-8")
        code, out, _ = run(capsys, "encode", "--dict", "fixture", "--json", "--input", str(src))
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert len(lines) == 2
        assert lines[0]["selected"][0]["llt_text"].casefold() == "cefalea"
        assert lines[1]["selected"][0]["llt_text"].casefold() == "febbre"

    def test_threshold_flags_reach_encoder(self, capsys):
        d2 = "gonfiore in sede di vaccinazione, vescicole presso la guancia"
        _, strict_out, _ = run(
            capsys, "encode", "--dict", "fixture", "--json", "--text", d2
        )
        _, relaxed_out, _ = run(
            capsys, "encode", "--dict", "fixture", "--json", "--c5-max", "none", "--text", d2
        )
        strict = {e["llt_text"].casefold() for e in json.loads(strict_out)["selected"]}
        relaxed = {e["llt_text"].casefold() for e in json.loads(relaxed_out)["selected"]}
        assert "vescicole in sede di vaccinazione" in relaxed
        assert "vescicole in sede di vaccinazione" not in strict

    def test_cap_flag_truncates_table(self, capsys):
        code, out, _ = run(
            capsys, "encode", "--dict", "fixture", "--cap", "1", "--text", D3
        )
        assert code == 0
        body = [line for line in out.splitlines() if not line.startswith("...")]
        assert len(body) == 1
        assert "more suppressed by display cap" in out


class TestBench:
    def corpus(self, tmp_path):
        path = tmp_path / "corpus.csv"
        path.write_text(
            "report_id,description,gold_llt_codes\n"
            "r1,cefalea,10007772\n"
            "r2,febbre alta,10016558\n",
            encoding="utf-8",
        )
        return path

    def test_bench_table(self, capsys, tmp_path):
        code, out, _ = run(
            capsys, "bench", "--dict", "fixture", "--corpus", str(self.corpus(tmp_path))
        )
        assert code == 0
        assert "bucket" in out
        assert "<=20" in out

    def test_bench_writes_outputs(self, capsys, tmp_path):
        out_dir = tmp_path / "results"
        code, _, _ = run(
            capsys,
            "bench",
            "--dict",
            "fixture",
            "--corpus",
            str(self.corpus(tmp_path)),
            "--out",
            str(out_dir),
        )
        assert code == 0
        detail = (out_dir / "detail.jsonl").read_text().splitlines()
        assert [json.loads(d)["report_id"] for d in detail] == ["r1", "r2"]
        summary = (out_dir / "summary.csv").read_text().splitlines()
        assert summary[0] == "bucket,n_reports,identical_rate,mean_jaccard,n_errors"

    def test_missing_corpus_returns_1(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "bench", "--dict", "fixture", "--corpus", str(tmp_path / "no.csv")
        )
        assert code == 1
        assert "cannot load corpus" in err


class TestConfigFileFlag:
    def test_config_file_feeds_options(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"display_cap": 1}))
        code, out, _ = run(
            capsys, "encode", "--dict", "fixture", "--config", str(cfg), "--text", D3
        )
        assert code == 0
        assert "more suppressed by display cap" in out
