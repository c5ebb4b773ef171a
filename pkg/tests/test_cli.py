import json

import pytest

from varistar.cli import fmt_complex, parse_complex, run_cli


class TestParseComplex:
    @pytest.mark.parametrize(
        "text,value",
        [
            ("0.5", 0.5),
            ("-0.4+0i", -0.4),
            ("-2", -2.0),
            ("0.4-0.3i", 0.4 - 0.3j),
            ("-0.666666+0.25i", -0.666666 + 0.25j),
            ("i", 1j),
            ("-i", -1j),
            ("2.5i", 2.5j),
            ("1e-3+2e-4i", 0.001 + 0.0002j),
        ],
    )
    def test_good(self, text, value):
        assert parse_complex(text) == value

    @pytest.mark.parametrize("text", ["abc", "1+2j", "1 + 2i", "--3i"])
    def test_bad(self, text):
        with pytest.raises(ValueError, match="malformed"):
            parse_complex(text)

    def test_fmt_roundtrip(self):
        z = -0.4 + 0.25j
        assert parse_complex(fmt_complex(z)) == z


class TestDisc:
    def test_spot_table(self, capsys):
        assert run_cli(["disc", "--p", "0.5", "--w0", "-0.4+0i"]) == 0
        out = capsys.readouterr().out
        assert "miller72: center = 2.1+0i, radius = 0.4" in out
        assert "miller80: center = 2.1+0i, radius = 0.4" in out
        assert "exact: center = 2.1+0i, radius = 0.4" in out
        assert "theorem2: center = 2+0i, radius = 0.5" in out

    def test_json_format(self, capsys):
        assert run_cli(["disc", "--p", "0.5", "--w0=-0.4", "--format", "json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["exact"]["radius"] == pytest.approx(0.4)
        assert data["theorem2"]["center_re"] == pytest.approx(2.0)

    def test_inadmissible_pair_exits_2(self, capsys):
        assert run_cli(["disc", "--p", "0.5", "--w0", "0.4"]) == 2
        assert "inadmissible" in capsys.readouterr().err

    def test_p_guard(self, capsys):
        assert run_cli(["disc", "--p", "1.5", "--w0", "-0.4"]) == 2
        assert "p must lie" in capsys.readouterr().err


class TestA2:
    def test_spec_example(self, capsys):
        assert run_cli(["a2", "--p", "0.5", "--c1", "0.2", "--c2", "0.3"]) == 0
        out = capsys.readouterr().out
        assert "a2 = 1.9+0i" in out and "M = -0.2" in out

    def test_invalid_pair(self, capsys):
        assert run_cli(["a2", "--p", "0.5", "--c1", "0.9", "--c2", "0.5"]) == 2


class TestConstruct:
    def test_from_w0(self, capsys):
        assert run_cli(["construct", "--p", "0.5", "--w0", "-0.4", "--trunc", "4"]) == 0
        out = capsys.readouterr().out
        assert "a_0 = 0+0i" in out and "a_1 = 1+0i" in out and "a_2 = 2.1+0i" in out

    def test_from_pair(self, capsys):
        assert run_cli(["construct", "--p", "0.5", "--c1", "0", "--c2", "1", "--trunc", "4"]) == 0
        out = capsys.readouterr().out
        assert "w0 = -0.4+0i" in out and "a_2 = 1.7+0i" in out

    def test_both_rejected(self, capsys):
        assert run_cli(["construct", "--p", "0.5", "--w0", "-0.4", "--c1", "0.1"]) == 2


class TestSweep:
    def test_csv_schema(self, capsys):
        assert run_cli(["sweep", "--p", "0.5", "--w0", "-0.4", "--k", "8",
                        "--format", "csv"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "k,c_re,c_im,a2_re,a2_im,dist_to_center"
        assert len(lines) == 9
        dist = float(lines[1].split(",")[-1])
        assert dist == pytest.approx(0.4, abs=1e-9)

    def test_deterministic_output(self, capsys):
        argv = ["sweep", "--p", "0.5", "--w0", "-0.4", "--k", "16", "--format", "csv"]
        assert run_cli(argv) == 0
        first = capsys.readouterr().out
        assert run_cli(argv) == 0
        assert capsys.readouterr().out == first

    def test_out_file(self, tmp_path, capsys):
        path = tmp_path / "sweep.csv"
        assert run_cli(["sweep", "--p", "0.5", "--w0", "-0.4", "--k", "4",
                        "--format", "csv", "--out", str(path)]) == 0
        assert path.read_text().startswith("k,c_re,c_im")


class TestVerify:
    def test_region_pass(self, capsys):
        assert run_cli(["verify", "region", "--p", "0.5", "--samples", "20000",
                        "--seed", "7"]) == 0
        out = capsys.readouterr().out
        assert "violations: 0" in out
        assert "seed: 7" in out

    def test_region_csv_schema(self, capsys):
        assert run_cli(["verify", "region", "--p", "0.5", "--samples", "1000",
                        "--seed", "2", "--format", "csv"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "seed,n,violations,max_excess,sup_attained"
        assert lines[1].startswith("2,1000,0,")

    def test_tangency(self, capsys):
        assert run_cli(["verify", "tangency", "--samples", "500", "--seed", "1"]) == 0

    def test_boundary(self, capsys):
        assert run_cli(["verify", "boundary", "--p", "0.5", "--w0", "-0.666666",
                        "--k", "90"]) == 0

    def test_positivity(self, capsys):
        assert run_cli(["verify", "positivity"]) == 0

    def test_all(self, capsys):
        assert run_cli(["verify", "all", "--p", "0.5", "--samples", "2000",
                        "--seed", "3"]) == 0
        out = capsys.readouterr().out
        assert out.count("PASS") == 4


class TestPlot:
    def test_svg_output(self, tmp_path):
        path = tmp_path / "fig.svg"
        assert run_cli(["plot", "--p", "0.5", "--w0", "-0.666666", "--samples", "100",
                        "--seed", "5", "--out", str(path)]) == 0
        svg = path.read_text()
        assert svg.startswith("<?xml")
        assert 'viewBox="0 0 800 800"' in svg
        assert "seed=5" in svg and "numpy-PCG64" in svg
        assert svg.count("<circle") == 104  # 100 samples + 4 discs

    def test_svg_deterministic(self, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        for path in (a, b):
            run_cli(["plot", "--p", "0.5", "--w0", "-0.4", "--samples", "50",
                     "--seed", "9", "--out", str(path)])
        assert a.read_bytes() == b.read_bytes()


class TestUsage:
    def test_unknown_subcommand(self):
        assert run_cli(["frobnicate"]) == 2

    def test_missing_required(self):
        assert run_cli(["disc", "--p", "0.5"]) == 2

    def test_malformed_complex(self):
        assert run_cli(["disc", "--p", "0.5", "--w0", "nope"]) == 2

    def test_help_exits_zero(self):
        assert run_cli(["--help"]) == 0
