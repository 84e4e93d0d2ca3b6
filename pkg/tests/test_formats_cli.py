import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from tfcolor.cli import main
from tfcolor.errors import BadOuterDart, BoundaryNotOuterCycle, MultiEdge, NotSphere, ParseError
from tfcolor.formats import format_coloring, parse, parse_coloring, serialize
from tfcolor.generators import GenSpec, cycle, dodecahedron, generate
from tfcolor.validity import is_valid_pair

C6 = """pg 1
n 6
r 0 2 1 5
r 1 2 2 0
r 2 2 3 1
r 3 2 4 2
r 4 2 5 3
r 5 2 0 4
outer 0 1
"""


def colored(cols):
    return C6 + "".join(f"color {v} {c}\n" for v, c in enumerate(cols))


def test_parse_c6_with_colours():
    gf = parse(colored((1, 2, 1, 2, 1, 3)))
    assert gf.graph == cycle(6)
    assert is_valid_pair(gf.graph, gf.boundary) == (True, None)


def test_multi_edge_has_line():
    text = "pg 1\nn 2\nr 0 2 1 1\nr 1 1 0\nouter 0 1\n"
    with pytest.raises(MultiEdge) as info:
        parse(text)
    assert info.value.line == 3 and "line 3" in str(info.value)


def test_bad_outer_dart():
    with pytest.raises(BadOuterDart) as info:
        parse(C6.replace("outer 0 1", "outer 0 3"))
    assert info.value.line == 9


def test_not_sphere_and_syntax_errors():
    k5 = "pg 1\nn 5\n" + "".join(
        f"r {v} 4 " + " ".join(str(u) for u in range(5) if u != v) + "\n" for v in range(5)) + "outer 0 1\n"
    with pytest.raises(NotSphere):
        parse(k5)
    for bad, line in [("pg 2\n", 1), (C6.replace("r 3 2 4 2", "r 3 3 4 2"), 6),
                      (C6.replace("r 3 2 4 2", "r 3 2 4 x"), 6), (C6 + "bogus 1\n", 10),
                      (C6 + "color 0 4\n", 10)]:
        with pytest.raises(ParseError) as info:
            parse(bad)
        assert info.value.line == line


def test_colour_lines_must_match_outer_cycle():
    with pytest.raises(BoundaryNotOuterCycle):
        parse(C6 + "color 0 1\ncolor 1 2\n")
    with pytest.raises(ParseError):
        parse(colored((1, 1, 2, 1, 2, 3)))


def test_comments_and_blank_lines():
    text = "# header\n\n" + C6.replace("n 6", "n 6   # six vertices")
    assert parse(text).graph == cycle(6)


def test_canonical_round_trip_bytes():
    text = colored((1, 2, 1, 2, 1, 3))
    gf = parse(text)
    assert serialize(gf.graph, gf.boundary) == text


@given(st.sampled_from(["random_insertion", "random_chorded", "random_core"]),
       st.integers(5, 20), st.integers(0, 10 ** 6))
def test_round_trip_generated(family, n, seed):
    g = generate(GenSpec(family, (n,), seed))
    text = serialize(g)
    gf = parse(text)
    assert gf.graph == g and serialize(gf.graph) == text


def test_coloring_file():
    assert parse_coloring(format_coloring([1, 2, 3]), 3) == [1, 2, 3]
    with pytest.raises(ParseError):
        parse_coloring("c 0 1\n", 2)


# -- command line -------------------------------------------------------------


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_cli_end_to_end(tmp_path, capsys):
    d, col = tmp_path / "d.pg", tmp_path / "out.col"
    assert run(["gen", "--family", "dodecahedron", "-o", str(d)], capsys)[0] == 0
    code, out, err = run(["color", str(d), "--trace", str(tmp_path / "t.txt")], capsys)
    assert code == 0 and err == ""
    col.write_text(out)
    assert len(out.splitlines()) == 20 and all(l.startswith("c ") for l in out.splitlines())
    assert run(["verify", str(d), str(col)], capsys)[0] == 0
    trace = (tmp_path / "t.txt").read_text().splitlines()
    assert trace and trace[0].startswith("step 0 depth 0 kind R")


def test_cli_no_base_shortcut(tmp_path, capsys):
    d = tmp_path / "d.pg"
    d.write_text(serialize(dodecahedron()))
    code, out, _ = run(["color", str(d), "--no-base-shortcut", "--trace", str(tmp_path / "t")], capsys)
    assert code == 0
    kinds = {line.split()[5] for line in (tmp_path / "t").read_text().splitlines()}
    assert "R6" in kinds


def test_cli_extend_invalid_pair(tmp_path, capsys):
    f = tmp_path / "c6.pg"
    f.write_text(colored((1, 2, 3, 1, 2, 3)))
    code, out, err = run(["extend", str(f)], capsys)
    assert code == 3 and out == "" and "boundary coloring not valid" in err
    f.write_text(colored((1, 2, 1, 2, 1, 3)))
    code, out, _ = run(["extend", str(f)], capsys)
    assert code == 0 and out == format_coloring([1, 2, 1, 2, 1, 3])


def test_cli_verify_reports_edge(tmp_path, capsys):
    f, c = tmp_path / "c6.pg", tmp_path / "c.col"
    f.write_text(C6)
    c.write_text(format_coloring([1, 2, 1, 2, 2, 3]))
    code, out, _ = run(["verify", str(f), str(c)], capsys)
    assert code == 1 and out.strip() == "VIOLATION edge 3 4 color 2"


def test_cli_error_codes(tmp_path, capsys):
    k4 = tmp_path / "k4.pg"
    k4.write_text("pg 1\nn 4\nr 0 3 1 2 3\nr 1 3 0 3 2\nr 2 3 0 1 3\nr 3 3 0 2 1\nouter 0 1\n")
    code, out, err = run(["color", str(k4)], capsys)
    assert code == 2 and out == "" and "TriangleFound" in err
    k5 = tmp_path / "k5.pg"
    k5.write_text("pg 1\nn 5\n" + "".join(
        f"r {v} 4 " + " ".join(str(u) for u in range(5) if u != v) + "\n" for v in range(5)) + "outer 0 1\n")
    assert run(["color", str(k5)], capsys)[0] == 2
    assert run(["color", str(tmp_path / "missing.pg")], capsys)[0] == 1
    bad = tmp_path / "bad.pg"
    bad.write_text("pg 1\nn 2\nr 0 2 1 1\nr 1 1 0\nouter 0 1\n")
    code, out, err = run(["color", str(bad)], capsys)
    assert code == 1 and "line 3" in err


def test_cli_audit_and_oracle(tmp_path, capsys):
    f = tmp_path / "g.pg"
    assert run(["gen", "--family", "random_insertion", "--n", "12", "--seed", "1", "-o", str(f)], capsys)[0] == 0
    code, out, _ = run(["audit", str(f)], capsys)
    assert code == 0 and out.splitlines()[-1] == "TOTAL -24/3"
    assert out.splitlines()[0].startswith("V 0 init ")
    code, out, _ = run(["oracle", str(f)], capsys)
    assert code == 0 and len(out.splitlines()) == 12
    k4 = tmp_path / "k4.pg"
    k4.write_text("pg 1\nn 4\nr 0 3 1 2 3\nr 1 3 0 3 2\nr 2 3 0 1 3\nr 3 3 0 2 1\nouter 0 1\n")
    assert run(["oracle", str(k4)], capsys)[1] == "UNCOLORABLE\n"


def test_cli_gen_params(tmp_path, capsys):
    f = tmp_path / "g.pg"
    assert run(["gen", "--family", "grid", "--params", "2,3", "-o", str(f)], capsys)[0] == 0
    assert parse(f.read_text()).graph.n == 6
    assert run(["gen", "--family", "cycle", "--n", "3", "-o", str(f)], capsys)[0] == 1


def test_console_script_entry_point(tmp_path):
    f = tmp_path / "c.pg"
    f.write_text(C6)
    out = subprocess.run([sys.executable, "-m", "tfcolor.cli", "color", str(f)],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.count("\n") == 6
