import json

import pytest

from netdyn.cli import build_parser, config_from_args, main
from netdyn.errors import ConfigurationError


def parse_config(argv):
    return config_from_args(build_parser().parse_args(argv))


class TestParseCli:
    def test_compute_flags(self, s1_events_path):
        cfg = parse_config([
            "compute", "--input", str(s1_events_path), "--window", "month",
            "--metrics", "degree,closeness,betweenness", "--top", "5",
        ])
        assert len(cfg.metrics) == 3
        assert cfg.window.scheme == "calendar" and cfg.window.unit == "month"
        assert cfg.top_k == 5

    def test_fixed_window(self, s1_events_path):
        cfg = parse_config([
            "compute", "--input", str(s1_events_path), "--window", "fixed:604800",
        ])
        assert cfg.window.scheme == "fixed"
        assert cfg.window.length == 604800

    def test_missing_input_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            build_parser().parse_args(["compute", "--window", "month"])
        assert excinfo.value.code == 2

    def test_unknown_flag_rejected(self):
        with pytest.raises(SystemExit) as excinfo:
            build_parser().parse_args(["compute", "--input", "x", "--frobnicate"])
        assert excinfo.value.code == 2

    def test_unknown_metric_rejected(self, s1_events_path):
        with pytest.raises(ConfigurationError, match="pagerank"):
            parse_config(["compute", "--input", str(s1_events_path),
                          "--metrics", "pagerank"])

    def test_in_degree_requires_directed(self, s1_events_path):
        with pytest.raises(ConfigurationError, match="--directed"):
            parse_config(["compute", "--input", str(s1_events_path),
                          "--metrics", "in_degree"])

    def test_malformed_window_spec(self, s1_events_path):
        with pytest.raises(ConfigurationError, match="window"):
            parse_config(["compute", "--input", str(s1_events_path),
                          "--window", "fortnight"])

    def test_tz_offset_formats(self, s1_events_path):
        cfg = parse_config(["compute", "--input", str(s1_events_path),
                            "--tz-offset", "+05:30"])
        assert cfg.window.tz_offset == 5 * 3600 + 30 * 60

    def test_help_mentions_defaulted_decisions(self, capsys):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["compute", "--help"])
        text = capsys.readouterr().out
        for needle in ("harmonic", "undirected", "eq6", "UTC", "per-network"):
            assert needle in text


S1_ARGS = ["--input", None, "--window", "fixed:100", "--metrics", "degree"]


def s1_argv(s1_events_path, command="compute", extra=()):
    argv = [command] + S1_ARGS + list(extra)
    argv[argv.index(None)] = str(s1_events_path)
    return argv


class TestMain:
    def test_compute_text_to_stdout(self, s1_events_path, capsys):
        assert main(s1_argv(s1_events_path)) == 0
        out = capsys.readouterr().out
        assert "Top-5 actors by dynamicity" in out
        assert "Network dynamicity" in out

    def test_exit_code_3_on_missing_file(self, capsys):
        argv = ["compute", "--input", "/nonexistent/e.csv"]
        assert main(argv) == 3

    def test_exit_code_3_on_empty_input(self, tmp_path, capsys):
        p = tmp_path / "empty.csv"
        p.write_text("source,target,timestamp\n")
        assert main(["compute", "--input", str(p)]) == 3

    def test_exit_code_3_on_uncovered_bounds(self, s1_events_path, tmp_path, capsys):
        bounds = tmp_path / "bounds.txt"
        bounds.write_text("0 100\n")  # events at 110..230 fall outside
        argv = ["compute", "--input", str(s1_events_path),
                "--window", f"bounds:{bounds}"]
        assert main(argv) == 3

    def test_exit_code_2_on_bad_config(self, s1_events_path, capsys):
        argv = s1_argv(s1_events_path, extra=["--metrics", "in_degree"])
        assert main(argv) == 2

    def test_subcommand_sections(self, s1_events_path, capsys):
        main(s1_argv(s1_events_path, "actors"))
        out = capsys.readouterr().out
        assert "Top-5 actors" in out and "Window dynamicity" not in out

        main(s1_argv(s1_events_path, "windows"))
        out = capsys.readouterr().out
        assert "Window dynamicity" in out and "Top-5" not in out

        main(s1_argv(s1_events_path, "network"))
        out = capsys.readouterr().out
        assert "Network dynamicity" in out and "Window dynamicity" not in out

        main(s1_argv(s1_events_path, "matrix"))
        out = capsys.readouterr().out
        assert "Actor-window dynamicity matrix" in out

    def test_csv_directory_output(self, s1_events_path, tmp_path):
        outdir = tmp_path / "report"
        argv = s1_argv(s1_events_path, extra=[
            "--output-format", "csv", "--out", str(outdir),
        ])
        assert main(argv) == 0
        top = (outdir / "top_actors_degree.csv").read_text().splitlines()
        assert top[0] == "rank,actor_id,dda"
        assert len(top) == 6  # header + top 5
        windows = (outdir / "window_dynamicity.csv").read_text().splitlines()
        assert windows[0].startswith("window,start,end,w,")

    def test_json_output_round_trips(self, s1_events_path, tmp_path, capsys):
        out = tmp_path / "r.json"
        argv = s1_argv(s1_events_path, extra=[
            "--output-format", "json", "--out", str(out),
        ])
        assert main(argv) == 0
        doc = json.loads(out.read_text())
        reserialized = json.dumps(doc, indent=2, sort_keys=True) + "\n"
        assert reserialized == out.read_text()
        assert doc["metadata"]["n"] == 5
        assert "degree" in doc["metrics"]

    def test_metadata_echoes_defaults(self, s1_events_path, tmp_path):
        out = tmp_path / "r.json"
        main(s1_argv(s1_events_path, extra=["--output-format", "json",
                                            "--out", str(out)]))
        md = json.loads(out.read_text())["metadata"]
        for key in ("closeness_variant", "normalization_base", "ddn_mode",
                    "directed", "window_plan", "top_k"):
            assert key in md

    def test_byte_identical_across_runs(self, s1_events_path, tmp_path):
        paths = [tmp_path / "a.json", tmp_path / "b.json"]
        for p in paths:
            main(s1_argv(s1_events_path, extra=[
                "--output-format", "json", "--out", str(p),
                "--metrics", "degree,closeness,betweenness",
            ]))
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_top_table_is_prefix_of_full_dda_order(self, s1_events_path, tmp_path):
        out = tmp_path / "r.json"
        main(s1_argv(s1_events_path, extra=["--output-format", "json",
                                            "--out", str(out), "--top", "3"]))
        doc = json.loads(out.read_text())["metrics"]["degree"]
        full_order = sorted(doc["dda"].items(), key=lambda kv: (-kv[1], kv[0]))
        top_ids = [row["actor_id"] for row in doc["top_actors"]]
        assert top_ids == [a for a, _ in full_order[:3]]
