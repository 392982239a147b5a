import json
from pathlib import Path

import pytest

from grassgw import cli, oracle
from grassgw.cli import RenderedDiagram, main, render_diagram
from grassgw.young import Frame, Partition

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_golden_decompose_json(capsys):
    code, out, _ = run_cli(capsys, "decompose", "--d", "2", "--e", "2", "--json")
    assert code == 0
    assert out.encode() == (GOLDEN / "decompose_d2_e2.json").read_bytes()


def test_golden_dual(capsys):
    code, out, _ = run_cli(capsys, "dual", "--d", "4", "--e", "4", "--partition", "4,3,3,1")
    assert code == 0
    assert out.encode() == (GOLDEN / "dual_d4_e4_4331.txt").read_bytes()


def test_json_outputs_are_stable(capsys):
    first = run_cli(capsys, "decompose", "--d", "4", "--e", "4", "--shift", "2", "--json")
    second = run_cli(capsys, "decompose", "--d", "4", "--e", "4", "--shift", "2", "--json")
    assert first == second
    payload = json.loads(first[1])
    assert payload["gw"] == [{"shift": 2, "count": 6}]
    assert payload["k"] == {"count": 32}
    assert len(payload["provenance"]) == 38


def test_enumerate_output(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--d", "2", "--e", "2")
    assert code == 0
    assert out.splitlines() == ["(2,2)", "(2,1)", "(2,0)", "(1,1)", "(1,0)", "(0,0)"]

    code, out, _ = run_cli(capsys, "enumerate", "--d", "1", "--e", "2", "--degree", "1")
    assert (code, out) == (0, "(1)\n")


def test_enumerate_json_and_symmetric(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--d", "2", "--e", "2", "--json")
    assert code == 0
    assert json.loads(out) == [[2, 2], [2, 1], [2, 0], [1, 1], [1, 0], [0, 0]]

    code, out, _ = run_cli(
        capsys, "enumerate", "--d", "4", "--e", "4", "--degree", "8", "--symmetric-only"
    )
    assert code == 0
    assert len(out.splitlines()) == 6


def test_dual_examples(capsys):
    code, out, _ = run_cli(capsys, "dual", "--d", "4", "--e", "4", "--partition", "4,2,1,1")
    assert (code, out) == (0, "3,3,2,0\n")
    code, out, _ = run_cli(capsys, "dual", "--d", "3", "--e", "2", "--partition", "0")
    assert (code, out) == (0, "2,2,2\n")


def test_dual_render(capsys):
    code, out, _ = run_cli(
        capsys, "dual", "--d", "4", "--e", "4", "--partition", "4,3,3,1", "--render", "--ascii"
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6  # 4 rows plus two label lines
    assert lines[0] == "####   ###."
    assert lines[-2] == "alpha = 4,3,3,1"
    assert lines[-1] == "dual  = 3,1,1,0"


def test_render_diagram_shape():
    diagram = render_diagram(Partition((2, 1)), Frame(3, 4), "#", ".")
    assert isinstance(diagram, RenderedDiagram)
    assert diagram.lines == ("##..", "#...", "....")


def test_decompose_human(capsys):
    code, out, _ = run_cli(capsys, "decompose", "--d", "2", "--e", "2")
    assert code == 0
    assert out.splitlines()[0] == "GW^[0](Gr(2,4)) = 2*GW^[0](k) + 2*K(k)"
    assert "  GW^[0] <- (2,0)" in out.splitlines()


def test_decompose_verify(capsys):
    code, out, _ = run_cli(capsys, "decompose", "--d", "2", "--e", "4", "--verify")
    assert code == 0
    assert "verified against brute-force oracle" in out


def test_decompose_verify_mismatch(monkeypatch, capsys):
    monkeypatch.setattr(oracle, "brute_symmetric_count", lambda d, e: 99)
    code, _, err = run_cli(capsys, "decompose", "--d", "2", "--e", "2", "--verify")
    assert code == 5
    assert "oracle" in err


def test_classify_output(capsys):
    code, out, _ = run_cli(capsys, "classify", "--rank", "2", "--bound", "1")
    assert code == 0
    assert "symmetric (2):" in out
    assert "anti-symmetric (0):" in out
    assert out.splitlines()[-1] == "decomposition: 2*GW^[0](k) + 2*K(k)"

    code, out, _ = run_cli(capsys, "classify", "--rank", "1", "--bound", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["symmetric"] == [[0]]
    assert payload["pairs"] == [[[2], [-2]], [[1], [-1]]]
    assert payload["gw"] == [{"shift": 0, "count": 1}]
    assert payload["k"] == {"count": 2}


def test_count_output(capsys):
    code, out, _ = run_cli(capsys, "count", "--d", "2", "--e", "2", "--method", "closed-symmetric")
    assert (code, out) == (0, "2\n")

    code, out, _ = run_cli(capsys, "count", "--d", "4", "--e", "4")
    assert code == 0
    assert "total (enumerate): 8" in out
    assert "symmetric (closed form): 6" in out
    assert "agreement: ok" in out

    code, out, _ = run_cli(capsys, "count", "--d", "1", "--e", "2")
    assert code == 0
    assert "note: total half-partition count is odd for this frame" in out


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["decompose", "--d", "2", "--e", "2"], 0),
        ([], 2),
        (["decompose", "--d", "2"], 2),
        (["decompose", "--d", "2", "--e", "2", "--bogus"], 2),
        (["dual", "--d", "2", "--e", "2", "--partition", "1,2"], 2),
        (["dual", "--d", "2", "--e", "2", "--partition", "a"], 2),
        (["enumerate", "--d", "0", "--e", "2"], 2),
        (["dual", "--d", "2", "--e", "2", "--partition", "3,0"], 3),
        (["enumerate", "--d", "2", "--e", "3", "--symmetric-only"], 3),
        (["count", "--d", "2", "--e", "3"], 3),
        (["decompose", "--d", "1", "--e", "1"], 4),
        (["decompose", "--d", "3", "--e", "3"], 4),
    ],
)
def test_exit_codes(capsys, argv, expected):
    assert main(argv) == expected
    capsys.readouterr()  # drain argparse noise


def test_entry_point_raises_system_exit():
    with pytest.raises(SystemExit):
        cli.run()
