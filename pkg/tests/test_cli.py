import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from fusscat.cli import main
from fusscat.dissections import alternating_labeling, snake_dissection
from fusscat.partitions import StaircasePartition
from fusscat.render import partition_svg, polygon_svg, tableau_svg
from fusscat.shi import ShiTableau


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["count", "--family", "partitions", "-n", "2", "-m", "3"], "22"),
        (["count", "--family", "positive", "-n", "2", "-m", "1"], "2"),
        (["count", "--family", "refined", "-n", "2", "-m", "1", "--J", "1"], "1"),
        (["count", "--family", "regions", "-n", "3", "-m", "2"], "55"),
        (["count", "--family", "dissections", "-n", "4", "-m", "3"], "969"),
    ],
)
def test_count(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


def test_count_large_is_exact(capsys):
    from fractions import Fraction
    from math import comb
    code, out, _ = run(capsys, "count", "--family", "partitions", "-n", "30", "-m", "5")
    assert code == 0 and Fraction(out.strip()) == Fraction(comb(6 * 31, 31), 5 * 31 + 1)


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "--family", "partitions", "-n", "5", "-m", "3", "--json")
    assert json.loads(out) == {"family": "partitions", "n": 5, "m": 3, "count": "7084"}


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--family", "partitions", "-n", "2"])
    assert exc.value.code == 2
    code, _, _ = run(capsys, "count", "--family", "partitions", "-n", "2", "-m", "1", "--J", "1")
    assert code == 2


def test_guard_rail(capsys):
    code, _, err = run(capsys, "enumerate", "--family", "regions", "-n", "12", "-m", "3")
    assert code == 3 and "--force" in err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "partitions", "-n", "2", "-m", "1")
    assert code == 0
    assert [json.loads(l)["parts"] for l in out.splitlines()] == [[2, 1], [2, 0], [1, 1], [1, 0], [0, 0]]
    code, out, _ = run(capsys, "enumerate", "--family", "dissections", "-n", "2", "-m", "3")
    assert len(out.splitlines()) == 22


def test_map_examples(capsys):
    code, out, _ = run(capsys, "map", "--from", "partition", "--to", "tableau",
                       '{"n": 2, "m": 3, "parts": [4, 2]}')
    assert code == 0 and json.loads(out)["rows"] == [[1, 3], [2]]
    allm = json.dumps(ShiTableau.constant(4, 3, 3).to_json())
    code, out, _ = run(capsys, "map", "--from", "tableau", "--to", "dissection", allm)
    assert json.loads(out) == snake_dissection(alternating_labeling(4, 3)).to_json()
    code, out, _ = run(capsys, "map", "--from", "partition", "--to", "dissection",
                       '{"n": 2, "m": 1, "parts": [0, 0]}')
    assert json.loads(out)["diagonals"] == [[0, 3], [0, 4]]


@pytest.mark.parametrize("a, b", [("partition", "tableau"), ("partition", "dissection"),
                                  ("tableau", "dissection")])
def test_map_round_trip(capsys, a, b):
    start = {"partition": {"n": 3, "m": 2, "parts": [5, 2, 1]}}
    code, mid, _ = run(capsys, "map", "--from", "partition", "--to", a, json.dumps(start["partition"]))
    code, there, _ = run(capsys, "map", "--from", a, "--to", b, mid)
    code, back, _ = run(capsys, "map", "--from", b, "--to", a, there)
    assert code == 0 and json.loads(back) == json.loads(mid)


def test_map_errors(capsys):
    code, _, _ = run(capsys, "map", "--from", "tableau", "--to", "partition",
                     '{"n": 2, "m": 1, "rows": [[1, 0], [0]]}')
    assert code == 5
    code, _, _ = run(capsys, "map", "--from", "tableau", "--to", "partition", '{"n": 2, "m": 1}')
    assert code == 4
    code, _, _ = run(capsys, "map", "--from", "partition", "--to", "tableau", '{"n": 2, "m": 1, "parts": ')
    assert code == 4
    code, _, _ = run(capsys, "map", "--from", "partition", "--to", "tableau",
                     '{"n": 2, "m": 1, "parts": [4, 3]}')
    assert code == 5


def test_map_stdin(monkeypatch, capsys):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO('{"n": 2, "m": 2, "parts": [3, 1]}'))
    code, out, _ = run(capsys, "map", "--from", "partition", "--to", "tableau")
    assert json.loads(out)["rows"] == [[1, 2], [1]]


@pytest.mark.parametrize("suite, n_max, m_max", [
    ("counts", 5, 3), ("walls", 4, 3), ("oracle", 3, 2), ("refined", 3, 3), ("roundtrip", 3, 2),
])
def test_verify(capsys, suite, n_max, m_max):
    code, out, _ = run(capsys, "verify", "--suite", suite, "--n-max", str(n_max), "--m-max", str(m_max))
    lines = [json.loads(l) for l in out.splitlines()]
    assert code == 0
    assert lines[-1]["summary"]["failed"] == 0
    assert all(v["status"] == "ok" for v in lines[:-1])
    assert {"check", "n", "m", "status", "details"} <= set(lines[0])


def test_verify_failure_exit_code(monkeypatch, capsys):
    import fusscat.cli as cli
    monkeypatch.setattr(cli, "run_suite", lambda *a: [{"check": "x", "n": 1, "m": 1,
                                                      "status": "mismatch", "details": None}])
    code, _, _ = run(capsys, "verify", "--suite", "counts")
    assert code == 1


def test_render_outputs(tmp_path, capsys):
    out = tmp_path / "fig.svg"
    code, _, _ = run(capsys, "render", '{"n": 4, "m": 3, "labeling": "alternating"}', "--out", str(out))
    assert code == 0
    root = ET.parse(out).getroot()
    labels = [t.text for t in root.iter("{http://www.w3.org/2000/svg}text")]
    assert labels == [str(x) for x in alternating_labeling(4, 3).ccw_labels]
    code, _, _ = run(capsys, "render", '{"n": 2, "m": 3, "parts": [4, 2]}', "--out", "/nonexistent/dir/x.svg")
    assert code == 6
    code, _, _ = run(capsys, "render", '{"n": 2}')
    assert code == 4


def test_render_deterministic_and_well_formed():
    d = snake_dissection(alternating_labeling(4, 3))
    svgs = [polygon_svg(d.polygon, d), tableau_svg(ShiTableau.constant(4, 3, 0)),
            partition_svg(StaircasePartition(2, 3, (4, 2)))]
    for s in svgs:
        ET.fromstring(s)
    assert polygon_svg(d.polygon, d) == polygon_svg(d.polygon, d)
    # snake lines drawn in the highlight colour
    assert polygon_svg(d.polygon, d).count('stroke="#c0392b"') == 4
    # 4+3+2+1 boxes with zero entries
    assert tableau_svg(ShiTableau.constant(4, 3, 0)).count(">0</text>") == 10
    # (4, 2) fills 6 of the 9 staircase boxes
    assert partition_svg(StaircasePartition(2, 3, (4, 2))).count('fill="#9ecae1"') == 6


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "fusscat", "count", "--family", "partitions",
                          "-n", "4", "-m", "3"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "969"
