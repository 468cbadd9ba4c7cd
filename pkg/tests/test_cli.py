"""End-to-end CLI behavior through main(argv)."""

import json

import pytest

from bchkit.cli import main


@pytest.fixture(autouse=True)
def isolated_cache(monkeypatch, tmp_path):
    monkeypatch.setenv("BCHKIT_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path / "cache"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTerm:
    def test_z4_text(self, capsys):
        code, out, _ = run(capsys, "term", "4")
        assert code == 0
        assert out.splitlines() == [
            "1/24  xxyy",
            "-1/12  xyxy",
            "1/12  yxyx",
            "-1/24  yyxx",
        ]

    def test_three_factors(self, capsys):
        code, out, _ = run(capsys, "term", "2", "--factors", "3", "--letters", "x,y,w")
        assert code == 0
        assert "1/2  xy" in out and "-1/2  wy" in out

    def test_series_per_factor(self, capsys):
        code, out, _ = run(capsys, "term", "2", "--series", "1,1", "--series", "1,1")
        assert code == 0
        assert out.splitlines() == ["-1/2  xx", "1/2  xy", "-1/2  yx", "-1/2  yy"]

    def test_single_series_broadcasts(self, capsys):
        code_once, out_once, _ = run(capsys, "term", "2", "--series", "1,1")
        code_twice, out_twice, _ = run(capsys, "term", "2", "--series", "1,1", "--series", "1,1")
        assert code_once == code_twice == 0
        assert out_once == out_twice

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "term", "3", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["order"] == 3
        assert doc["letters"] == ["x", "y"]
        assert ["xxy", "1", "12"] in doc["terms"]

    def test_dynkin_payload(self, capsys):
        code, out, _ = run(capsys, "term", "2", "--dynkin")
        assert code == 0
        assert "dynkin:" in out
        assert "1/4  [x,y]" in out

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "z2.txt"
        code, out, _ = run(capsys, "term", "2", "--out", str(target))
        assert code == 0
        assert out == ""
        assert target.read_text().splitlines() == ["1/2  xy", "-1/2  yx"]

    def test_unwritable_out_is_io_failure(self, capsys, tmp_path):
        code, _, err = run(capsys, "term", "2", "--out", str(tmp_path / "no" / "f.txt"))
        assert code == 3
        assert "cannot write" in err

    def test_cache_round_trip(self, capsys, isolated_cache):
        code1, out1, _ = run(capsys, "term", "5", "--format", "json")
        assert code1 == 0
        entries = list(isolated_cache.glob("*.json"))
        assert len(entries) == 1
        code2, out2, _ = run(capsys, "term", "5", "--format", "json")
        assert code2 == 0
        assert out2 == out1
        assert list(isolated_cache.glob("*.json")) == entries

    def test_no_cache_leaves_nothing(self, capsys, isolated_cache):
        code, _, _ = run(capsys, "term", "3", "--no-cache")
        assert code == 0
        assert not isolated_cache.exists()

    def test_bad_order(self, capsys):
        code, _, err = run(capsys, "term", "0")
        assert code == 1
        assert "order" in err

    def test_bad_series(self, capsys):
        code, _, err = run(capsys, "term", "2", "--series", "2,1")
        assert code == 1
        assert "f(0) = 1" in err

    def test_series_count_mismatch(self, capsys):
        code, _, err = run(
            capsys, "term", "2", "--factors", "3", "--series", "exp", "--series", "exp"
        )
        assert code == 1
        assert "--series" in err

    def test_letters_count_mismatch(self, capsys):
        code, _, err = run(capsys, "term", "2", "--letters", "x,y,z")
        assert code == 1
        assert "--letters" in err

    def test_duplicate_letters_rejected(self, capsys):
        code, _, err = run(capsys, "term", "2", "--letters", "x,x")
        assert code == 1
        assert "duplicate" in err


class TestVerify:
    def test_all_modes_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "3")
        assert code == 0
        for mode in ("oracle", "multi", "signed", "dynkin"):
            assert f"ok {mode} n=3" in out
        assert "all checks passed" in out

    def test_single_mode(self, capsys):
        code, out, _ = run(capsys, "verify", "4", "--modes", "signed")
        assert code == 0
        assert "oracle" not in out
        assert "ok signed n=4" in out

    def test_explicit_mode_over_cap_is_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "12", "--modes", "oracle")
        assert code == 1
        assert "n <= 10" in err

    def test_default_modes_clamp_with_note(self, capsys):
        code, out, err = run(capsys, "verify", "7")
        assert code == 0
        assert "capped at n=6" in err  # the multi mode's ceiling
        assert "ok oracle n=7" in out

    def test_unknown_mode(self, capsys):
        code, _, err = run(capsys, "verify", "3", "--modes", "fast")
        assert code == 1
        assert "unknown modes" in err


class TestScan:
    def test_small_scan(self, capsys):
        code, out, _ = run(capsys, "scan", "4")
        assert code == 0
        assert "n=3  pruned=4  structural=1  nonzero=3  unexpected=0" in out
        assert "no unexpected vanishings" in out

    def test_order_validation(self, capsys):
        code, _, err = run(capsys, "scan", "0")
        assert code == 1


class TestBench:
    def test_range(self, capsys):
        code, out, _ = run(capsys, "bench", "1..3", "--repeat", "1")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 4  # header + three orders

    def test_bare_integer_means_from_one(self, capsys):
        code, out, _ = run(capsys, "bench", "2", "--repeat", "1")
        assert code == 0
        assert len(out.splitlines()) == 3

    def test_empty_range(self, capsys):
        code, out, _ = run(capsys, "bench", "5..2", "--repeat", "1")
        assert code == 0
        assert len(out.splitlines()) == 1

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "bench", "1..2", "--repeat", "2", "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["repeat"] == 2
        assert [row["n"] for row in data["rows"]] == [1, 2]
        assert data["rows"][0]["symbolic"]["terms"] == 2

    def test_bad_range(self, capsys):
        code, _, err = run(capsys, "bench", "abc")
        assert code == 1
        assert "range" in err


class TestParsing:
    def test_missing_subcommand(self, capsys):
        code, _, err = run(capsys)
        assert code == 1

    def test_unknown_flag(self, capsys):
        code, _, err = run(capsys, "term", "3", "--wat")
        assert code == 1

    def test_version_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
        assert "bchkit" in capsys.readouterr().out
