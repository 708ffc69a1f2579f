"""Sweep runners and the command line front end."""

import json

import pytest

from hermrange.cli import main
from hermrange.verify import (COLLECT_FAILS, SCOPE_SCALAR_FIBERS,
                              run_direct_sums, run_exhaustive_2x2,
                              run_random_nxn, run_scalar_fibers, run_scope)


def _clean(report):
    assert report["summary"]["fail"] == 0
    s = report["summary"]
    assert s["total"] == s["pass"] + s["inapplicable"] + s["fail"]
    return report


def test_exhaustive_sweep_over_the_smallest_field(f2):
    report = _clean(run_exhaustive_2x2(f2))
    assert report["summary"]["total"] == 840
    assert len(report["checks"]) == 840
    assert report["affine_law"] == {"form": "tie", "decidable": False}
    seen = set(report["summary"]["by_citation"])
    assert {"zero-in-num0", "remark4", "cor1", "prop1d", "prop2", "prop3",
            "prop4.i", "prop5.ii", "prop6.a", "prop6.b", "prop6.c",
            "prop7"} <= seen
    row = report["checks"][0]
    assert set(row) == {"matrix", "k", "citation", "claim", "observed",
                        "verdict"}


def test_collect_policy_can_drop_passing_rows(f2):
    report = _clean(run_exhaustive_2x2(f2, collect=COLLECT_FAILS))
    assert report["summary"]["total"] == 840
    assert report["checks"] == []


def test_level_shift_law_is_decidable_above_two(f3):
    report = _clean(run_exhaustive_2x2(f3, space="subfield"))
    assert report["affine_law"] == {"form": "ck", "decidable": True}


def test_random_sweep_is_deterministic(f3):
    a = run_random_nxn(f3, n=3, count=10, seed=5)
    b = run_random_nxn(f3, n=3, count=10, seed=5)
    assert _clean(a) == b
    _clean(run_random_nxn(f3, n=2, count=5, seed=1, space="full"))
    with pytest.raises(ValueError):
        run_random_nxn(f3, n=1)
    with pytest.raises(ValueError):
        run_random_nxn(f3, space="sideways")
    with pytest.raises(ValueError):
        run_random_nxn(f3, n=3, space="full")


def test_scalar_fiber_sweep(f3):
    report = _clean(run_scalar_fibers(f3, n_values=(2, 3)))
    assert any(c["citation"] == "prop7" and c["claim"] == "exact_card"
               for c in report["checks"])
    assert report["config"]["n_values"] == [2, 3]


def test_direct_sum_sweep(f2):
    report = _clean(run_direct_sums(f2, count=12, seed=3))
    assert report["summary"]["total"] == 24
    assert set(report["summary"]["by_citation"]) == {"lemma2"}


def test_scope_dispatch(f2):
    report = run_scope(f2, SCOPE_SCALAR_FIBERS, n_values=(2,))
    assert report["config"]["scope"] == SCOPE_SCALAR_FIBERS
    with pytest.raises(ValueError):
        run_scope(f2, "everything")


# command line


def test_cli_range_json(capsys):
    rc = main(["range", "--p", "2", "--matrix", "0,1;0,0",
               "--kind", "num0_prime"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["values"] == [1, 2, 3]
    assert doc["kind"] == "num0_prime"
    assert doc["mode"] == "exhaustive"
    assert doc["matrix"] == [[0, 1], [0, 0]]
    assert (doc["field"]["p"], doc["field"]["m"]) == (2, 1)


def test_cli_range_csv(capsys):
    rc = main(["range", "--p", "2", "--matrix", "0,1;0,0",
               "--kind", "num0_prime", "--format", "csv"])
    assert rc == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "kind,k,value,value_poly"
    assert len(lines) == 4
    assert lines[1].startswith("num0_prime,0,1,")


def test_cli_range_sampled_is_deterministic(capsys):
    argv = ["range", "--p", "3", "--capacity", "1000", "--sample-budget",
            "100", "--matrix", "0,1,2,3;4,5,6,7;8,0,1,2;3,4,5,6"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first
    assert json.loads(first)["mode"] == "sampled"


def test_cli_matrix_file(tmp_path, capsys, f2):
    doc = {"field": f2.spec.to_json_dict(), "n": 2,
           "entries": [[0, 0], [0, 1]]}
    path = tmp_path / "m.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    rc = main(["range", "--matrix", str(path), "--kind", "num0_prime"])
    assert rc == 0
    assert json.loads(capsys.readouterr().out)["values"] == [1]
    # flags must agree with the file's field block
    rc = main(["range", "--p", "3", "--matrix", str(path)])
    assert rc == 2
    assert "disagree" in capsys.readouterr().err


def test_cli_fibers(capsys):
    rc = main(["fibers", "--p", "5", "--matrix", "1,0;0,1",
               "--format", "csv"])
    assert rc == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "value,value_poly,count"
    assert lines[1] == "0,0,9"
    assert len(lines) == 6
    rc = main(["fibers", "--p", "5", "--matrix", "1,0;0,1"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["total"] == 9
    assert doc["fibers"][0] == {"value": 0, "count": 9}


def test_cli_verify(capsys):
    rc = main(["verify", "--p", "2", "--scope", "exhaustive-2x2"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["summary"]["total"] == 840
    assert doc["affine_law"]["decidable"] is False
    rc = main(["verify", "--p", "2", "--scope", "direct-sums", "--count",
               "6", "--format", "csv"])
    assert rc == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "citation,claim,k,matrix,verdict,observed"
    assert len(lines) == 13


def test_cli_output_file(tmp_path, capsys):
    dest = tmp_path / "out.json"
    rc = main(["range", "--p", "2", "--matrix", "0,1;0,0",
               "--out", str(dest)])
    assert rc == 0
    assert capsys.readouterr().out == ""
    # default kind is the plain level-0 range, which picks up 0 itself
    assert json.loads(dest.read_text(encoding="utf-8"))["values"] == [0, 1, 2, 3]


def test_cli_error_codes(capsys, tmp_path):
    # no field anywhere
    assert main(["range", "--matrix", "0,1;0,0"]) == 2
    assert capsys.readouterr().err.startswith("hermrange:")
    # ragged inline matrix
    assert main(["range", "--p", "2", "--matrix", "0,1;2"]) == 2
    # over capacity without a sample budget
    assert main(["range", "--p", "3", "--capacity", "100",
                 "--matrix", "0,1,2;3,4,5;6,7,8"]) == 3
    # argparse rejections come back as exit code 2
    assert main(["range", "--p", "2", "--matrix", "0,1;0,0",
                 "--kind", "nope"]) == 2
    assert main([]) == 2
    # missing matrix file
    assert main(["range", "--p", "2",
                 "--matrix", str(tmp_path / "absent.json")]) == 2
    capsys.readouterr()


def test_cli_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()
