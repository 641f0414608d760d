import json
import subprocess
import sys

import pytest

from mutants import r1_drop_segment
from tricross import tcd
from tricross.cli import EXIT_BUDGET, EXIT_NONE, EXIT_OK, EXIT_REJECT, EXIT_USAGE, main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_exit_code_values():
    assert (EXIT_OK, EXIT_REJECT, EXIT_USAGE, EXIT_NONE, EXIT_BUDGET) == (0, 1, 2, 3, 4)


@pytest.mark.parametrize("parts,line", [(["6", "4"], "tcr = 4"), (["1"] * 5, "tcr = infinity"), (["2", "2", "2"], "tcr = 0"),
                                        (["petersen"], "tcr = 1")])
def test_oracle(capsys, parts, line):
    code, out, _ = run(capsys, "oracle", *parts)
    assert code == 0 and line in out.splitlines()


def test_oracle_json(capsys):
    code, out, _ = run(capsys, "--json", "oracle", "6", "3")
    rec = json.loads(out)
    assert code == 0 and rec["tcr"] == "2" and rec["known_cr"] == 6
    assert rec["justification"] == "certificate+lower-bound" and rec["citations"]


@pytest.mark.parametrize("argv", [["oracle", "0", "3"], ["oracle", "heawood"], ["search", "dodecahedron"],
                                  ["search", "3", "0"], ["search", "3", "3", "--min-k", "2", "--max-k", "1"]])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_validate_bundled(capsys, data_dir):
    code, out, _ = run(capsys, "validate", data_dir / "petersen.tcd")
    assert code == 0
    assert "k: 1" in out.splitlines() and "verdict: accept" in out.splitlines()
    assert all(f"R{i} pass" in out for i in range(1, 8))


def test_validate_degree5_crossing(capsys, tmp_path, bundled):
    bad = tmp_path / "bad.tcd"
    tcd.dump(r1_drop_segment(bundled["k33"]), bad)
    code, out, _ = run(capsys, "validate", bad)
    assert code == EXIT_REJECT
    assert "R2 FAIL" in out and "degree 5" in out


def test_validate_json(capsys, data_dir):
    code, out, _ = run(capsys, "validate", data_dir / "k321.tcd", "--json")
    rec = json.loads(out)
    assert rec["verdict"] == "accept" and rec["d"] == 1 and rec["faces"] == {"3": 8, "4": 1}


def test_validate_truncated(capsys, tmp_path, data_dir):
    text = (data_dir / "k33.tcd").read_text().splitlines()
    bad = tmp_path / "cut.tcd"
    bad.write_text("\n".join(text[: len(text) // 2]) + "\n")
    assert run(capsys, "validate", bad)[0] == EXIT_USAGE


def test_validate_dangling(capsys, tmp_path, data_dir):
    text = (data_dir / "k33.tcd").read_text().replace("rot v0 0.x0", "rot v0 0.x7")
    bad = tmp_path / "dangling.tcd"
    bad.write_text(text)
    code, _, err = run(capsys, "validate", bad)
    assert code == EXIT_USAGE and "structural" in err


def test_validate_missing_file(capsys, tmp_path):
    assert run(capsys, "validate", tmp_path / "nope.tcd")[0] == EXIT_USAGE


def test_search_found_and_emit(capsys, tmp_path):
    cert = tmp_path / "c.tcd"
    code, out, _ = run(capsys, "search", "3", "3", "--max-k", "1", "--emit", cert)
    assert code == EXIT_OK and "outcome: Found(k=1)" in out
    assert run(capsys, "validate", cert)[0] == EXIT_OK


def test_search_none_within(capsys):
    code, out, _ = run(capsys, "search", "5", "3", "--max-k", "2")
    assert code == EXIT_NONE and "outcome: NoneWithin(2)" in out
    code, out, _ = run(capsys, "search", "4", "4", "--max-k", "0")
    assert code == EXIT_NONE and "outcome: NoneWithin(0)" in out


def test_search_budget(capsys):
    code, out, _ = run(capsys, "--budget-nodes", "2", "search", "5", "3", "--max-k", "2")
    assert code == EXIT_BUDGET and "BudgetExceeded" in out
    code, _, _ = run(capsys, "search", "4", "4", "--max-k", "2", "--budget", "0")
    assert code == EXIT_BUDGET


def test_search_flags_after_subcommand_and_json(capsys):
    code, out, _ = run(capsys, "search", "petersen", "--max-k", "1", "--workers", "1", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["status"] == "found" and rec["k"] == 1


def test_search_screened(capsys):
    code, out, _ = run(capsys, "search", "5", "5", "--max-k", "3")
    assert code == EXIT_NONE and "screened: excess" in out


@pytest.mark.parametrize("d,expected", [(0, ["all-triangles"]), (1, ["4"]), (2, ["5", "4 4"]), (3, ["6", "5 4", "4 4 4"])])
def test_faces(capsys, d, expected):
    code, out, _ = run(capsys, "faces", "--d", d)
    assert code == 0 and out.splitlines()[1:] == expected


def test_faces_out_of_range(capsys):
    code, _, err = run(capsys, "faces", "--d", "4")
    assert code == EXIT_USAGE and "d <= 3" in err
    assert run(capsys, "faces", "--d", "-1")[0] == EXIT_USAGE


@pytest.mark.parametrize("name,doubles", [("petersen", 3), ("k22", 0), ("k63", 6), ("k64", 12)])
def test_perturb(capsys, tmp_path, data_dir, name, doubles):
    out_file = tmp_path / "reg.tcd"
    code, out, _ = run(capsys, "perturb", data_dir / f"{name}.tcd", "-o", out_file)
    assert code == 0 and f"double crossings: {doubles}" in out
    assert run(capsys, "validate", out_file)[0] == 0
    reg = tcd.load(out_file)
    assert reg.k == doubles
    if doubles == 0:
        assert reg.rotations == tcd.load(data_dir / f"{name}.tcd").rotations


def test_perturb_invalid(capsys, tmp_path, bundled):
    bad = tmp_path / "bad.tcd"
    tcd.dump(r1_drop_segment(bundled["k33"]), bad)
    assert run(capsys, "perturb", bad, "-o", tmp_path / "o.tcd")[0] == EXIT_REJECT
    assert not (tmp_path / "o.tcd").exists()


def test_render(capsys, tmp_path, data_dir):
    svg = tmp_path / "k33.svg"
    code, out, _ = run(capsys, "render", data_dir / "k33.tcd", "-o", svg)
    assert code == 0 and "crossing points: 1" in out and svg.read_text().startswith("<svg")


def test_render_invalid(capsys, tmp_path, bundled):
    bad = tmp_path / "bad.tcd"
    tcd.dump(r1_drop_segment(bundled["k33"]), bad)
    svg = tmp_path / "bad.svg"
    assert run(capsys, "render", bad, "-o", svg)[0] == EXIT_REJECT
    assert not svg.exists()


def test_module_entry_point(data_dir):
    proc = subprocess.run([sys.executable, "-m", "tricross", "validate", str(data_dir / "k43.tcd")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "verdict: accept" in proc.stdout
