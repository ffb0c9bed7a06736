import json
import subprocess
import sys

import pytest

from dagconvex import report_from_json, report_to_json
from dagconvex.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_stdout(self, capsys):
        code, out, _ = run(capsys, "gen", "path", "3")
        assert code == 0
        assert out == "# family: path:3\n3 2\n0 1\n1 2\n"

    def test_to_file_and_load(self, capsys, tmp_path):
        target = tmp_path / "d4.txt"
        code, out, _ = run(capsys, "gen", "dt", "4", "-o", str(target))
        assert code == 0 and out == ""
        text = target.read_text()
        assert text.startswith("# family: dt:4\n13 14\n")

    def test_rand_defaults_and_flags(self, capsys, tmp_path):
        a = tmp_path / "a.txt"
        b = tmp_path / "b.txt"
        assert run(capsys, "gen", "rand", "8", "-p", "0.3", "--seed", "42", "-o", str(a))[0] == 0
        assert run(capsys, "gen", "rand", "8", "-p", "0.3", "--seed", "42", "-o", str(b))[0] == 0
        assert a.read_bytes() == b.read_bytes()
        code, out, _ = run(capsys, "gen", "rand", "3")
        assert code == 0 and out.startswith("# family: rand:3:0.5:0\n")

    def test_seed_on_wrong_family(self, capsys):
        code, _, err = run(capsys, "gen", "dt", "3", "--seed", "5")
        assert code == 2
        assert "rand" in err

    def test_bad_param(self, capsys):
        code, _, err = run(capsys, "gen", "dt", "0")
        assert code == 2 and "error:" in err


class TestStats:
    def test_human_both(self, capsys):
        code, out, _ = run(capsys, "stats", "--family", "gi:2")
        assert code == 0
        assert "class: convex" in out and "class: connected-convex" in out
        assert "count: 34" in out and "count: 25" in out
        assert "average: 46/17 (2.705882)" in out

    def test_json_single_round_trips(self, capsys):
        code, out, _ = run(capsys, "stats", "--family", "path:3", "--class", "cc", "--json")
        assert code == 0
        line = out.strip()
        rep = report_from_json(line)
        assert report_to_json(rep) == line
        assert rep.count == 6

    def test_json_both_is_array(self, capsys):
        code, out, _ = run(capsys, "stats", "--family", "path:3", "--json")
        assert code == 0
        objs = json.loads(out)
        assert [o["class"] for o in objs] == ["convex", "connected-convex"]

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "stats", "--family", "path:5", "--class", "cc", "--csv")
        assert code == 0
        assert out.splitlines()[0] == "k,count,bound,pass"
        assert out.splitlines()[1] == "1,5,5,true"

    def test_file_input(self, capsys, tmp_path):
        target = tmp_path / "p4.txt"
        run(capsys, "gen", "path", "4", "-o", str(target))
        code, out, _ = run(capsys, "stats", str(target), "--class", "cc")
        assert code == 0 and "count: 10" in out

    def test_input_xor_family(self, capsys, tmp_path):
        target = tmp_path / "x.txt"
        run(capsys, "gen", "path", "3", "-o", str(target))
        code, _, err = run(capsys, "stats", str(target), "--family", "path:3")
        assert code == 2 and "exactly one input" in err
        code, _, err = run(capsys, "stats")
        assert code == 2 and "exactly one input" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "stats", "/nonexistent/g.txt")
        assert code == 2 and "error:" in err

    def test_cap_refusal_and_override(self, capsys):
        code, _, err = run(capsys, "stats", "--family", "dt:20", "--class", "co")
        assert code == 2 and "capped" in err
        # connected class routes through the extension enumerator
        code, out, err = run(capsys, "stats", "--family", "dt:20", "--class", "cc", "--max-n", "60")
        assert code == 0
        assert "warning" in err
        assert "count: 4374" in out

    def test_env_cap(self, capsys, monkeypatch):
        monkeypatch.setenv("DAGCONVEX_MAX_N", "60")
        code, out, _ = run(capsys, "stats", "--family", "dt:20", "--class", "cc")
        assert code == 0 and "count: 4374" in out
        monkeypatch.setenv("DAGCONVEX_MAX_N", "banana")
        code, _, err = run(capsys, "stats", "--family", "dt:20", "--class", "cc")
        assert code == 2 and "DAGCONVEX_MAX_N" in err

    def test_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("DAGCONVEX_MAX_N", "3")
        code, _, err = run(capsys, "stats", "--family", "path:5", "--class", "cc", "--max-n", "10")
        assert code == 0

    def test_disconnected_file_still_counts(self, capsys, tmp_path):
        target = tmp_path / "split.txt"
        target.write_text("2 0\n")
        code, out, _ = run(capsys, "stats", str(target), "--class", "cc")
        assert code == 0 and "count: 2" in out


class TestVerify:
    def test_dt4_all_checks(self, capsys):
        code, out, _ = run(capsys, "verify", "--family", "dt:4")
        assert code == 0
        assert "check size-lower-bound: pass" in out
        assert "check non-cut-endpoints: pass (0 12)" in out
        assert "check dt-inner-count: pass (16 vs 2^4 = 16)" in out
        assert out.rstrip().endswith("result: pass")

    def test_path10(self, capsys):
        code, out, _ = run(capsys, "verify", "--family", "path:10")
        assert code == 0 and "result: pass" in out

    def test_random(self, capsys):
        code, out, _ = run(capsys, "verify", "--family", "rand:10:0.3:7")
        assert code == 0 and "result: pass" in out

    def test_single_vertex_skips_endpoints(self, capsys):
        code, out, _ = run(capsys, "verify", "--family", "path:1")
        assert code == 0 and "skipped" in out

    def test_disconnected_rejected(self, capsys, tmp_path):
        target = tmp_path / "split.txt"
        target.write_text("4 2\n0 1\n2 3\n")
        code, _, err = run(capsys, "verify", str(target))
        assert code == 2 and "error:" in err


class TestSetCommands:
    @pytest.fixture()
    def p3_file(self, tmp_path, capsys):
        target = tmp_path / "p3.txt"
        main(["gen", "path", "3", "-o", str(target)])
        capsys.readouterr()
        return str(target)

    def test_check_convex_false(self, capsys, p3_file):
        code, out, _ = run(capsys, "check-convex", p3_file, "--set", "0,2")
        assert code == 1
        assert out == "convex: false\nwitness: 0 -> 1 -> 2\n"

    def test_check_convex_true(self, capsys, p3_file):
        code, out, _ = run(capsys, "check-convex", p3_file, "--set", "0,1")
        assert code == 0 and out == "convex: true\n"

    def test_check_convex_bad_set(self, capsys, p3_file):
        assert run(capsys, "check-convex", p3_file, "--set", "0,9")[0] == 2
        assert run(capsys, "check-convex", p3_file, "--set", "a,b")[0] == 2

    def test_hull(self, capsys, p3_file):
        code, out, _ = run(capsys, "hull", p3_file, "--set", "0,2")
        assert code == 0
        assert out == "hull: 0 1 2\nadded: 1\n"

    def test_hull_already_convex(self, capsys, p3_file):
        code, out, _ = run(capsys, "hull", p3_file, "--set", "1,2")
        assert code == 0 and out == "hull: 1 2\nadded: -\n"


class TestTrend:
    def test_gi_table(self, capsys):
        code, out, _ = run(capsys, "trend", "gi", "--params", "1,2,3,4,5")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split() == ["param", "n", "co", "cc", "cc/co"]
        ratios = [line.split()[-1] for line in lines[1:]]
        assert ratios[0] == "1.000000" and ratios[1] == "0.735294"
        assert ratios == sorted(ratios, reverse=True)

    def test_dt_csv(self, capsys):
        code, out, _ = run(capsys, "trend", "dt", "--params", "1,4", "--csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "param,n,class,count,sum,average,average_per_sqrt_n"
        assert lines[1].startswith("1,5,convex,15,35,2.333333,")
        assert len(lines) == 5

    def test_dt_json(self, capsys):
        code, out, _ = run(capsys, "trend", "dt", "--params", "4", "--json")
        assert code == 0
        rows = json.loads(out)
        cc_row = [r for r in rows if r["class"] == "connected-convex"][0]
        assert cc_row["count"] == 112
        assert cc_row["average_num"] == 69  # 552/112 reduced
        assert cc_row["average"] == "4.928571"

    def test_dt_beyond_brute_cap_skips_co(self, capsys):
        code, out, err = run(capsys, "trend", "dt", "--params", "16", "--max-n", "60")
        assert code == 0
        assert "skipping convex" in err
        lines = [line for line in out.splitlines()[1:] if line]
        assert len(lines) == 1 and "connected-convex" in lines[0]

    def test_bad_params(self, capsys):
        assert run(capsys, "trend", "gi", "--params", "1,x")[0] == 2
        assert run(capsys, "trend", "gi", "--params", "0")[0] == 2

    def test_usage_error_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["trend", "gi"])  # --params required
        assert exc.value.code == 2


class TestDeterminism:
    def test_repeated_stats_identical(self, capsys):
        outs = set()
        for _ in range(2):
            _, out, _ = run(capsys, "stats", "--family", "rand:9:0.4:11", "--json")
            outs.add(out)
        assert len(outs) == 1

    def test_console_script_runs(self):
        proc = subprocess.run(
            [sys.executable, "-m", "dagconvex", "trend", "gi", "--params", "1,2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "0.735294" in proc.stdout
