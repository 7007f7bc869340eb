import pytest

from helpers import graph
from kohomologi.io.graph_files import GraphParseError, parse_graph, read_graph_file, serialize_graph
from kohomologi.logic.presets import preset_graph


def test_implicit_vertices_in_first_seen_order():
    g = parse_graph("e b a\ne b c\n")
    assert g.vertices == ("b", "a", "c")
    assert g.sorted_edges() == [("b", "a"), ("b", "c")]


def test_declared_vertices_keep_isolated_ones():
    g = parse_graph("v x\nv y\nv z\ne x y\n")
    assert g.vertices == ("x", "y", "z")
    assert g.edges == frozenset({("x", "y")})


def test_comments_blank_lines_and_aliases():
    text = """
    # en stig
    hörn a   # första
    NODE b
    vertex c

    kant a b
    Edge b c
    """
    assert parse_graph(text) == graph("abc", ["ab", "bc"])


def test_empty_file_is_empty_graph():
    g = parse_graph("# inget\n\n")
    assert g.vertices == ()
    assert not g.edges


@pytest.mark.parametrize("text, line_no, fragment", [
    ("v a\nv b\ne a c\n", 3, "odeklarerat"),
    ("e a b\ne b a\n", 2, "finns redan"),
    ("e a a\n", 1, "ögla"),
    ("v a\nv a\n", 2, "redan deklarerat"),
    ("e a\n", 1, "tar 2 namn"),
    ("v a b\n", 1, "tar 1 namn"),
    ("x a b\n", 1, "okänt nyckelord"),
    ("v a#1\n", 1, "innehåller '#'"),
    ("v a\nv b\ne a b#kant\n", 3, "innehåller '#'"),
])
def test_parse_errors_carry_line_numbers(text, line_no, fragment):
    with pytest.raises(GraphParseError) as info:
        parse_graph(text)
    assert info.value.line_no == line_no
    assert fragment in str(info.value)
    assert str(info.value).startswith(f"rad {line_no}:")


def test_serialize_then_parse_preserves_graph(p4):
    text = serialize_graph(p4)
    assert text.splitlines() == ["v a", "v b", "v c", "v d", "e a b", "e b c", "e c d"]
    assert parse_graph(text) == p4


def test_serialize_keeps_isolated_vertices():
    g = preset_graph("discrete", 2)
    assert parse_graph(serialize_graph(g)) == g


def test_read_graph_file_strips_bom(tmp_path):
    path = tmp_path / "p3.txt"
    path.write_text("\ufeffe a b\ne b c\n", encoding="utf-8")
    assert read_graph_file(str(path)) == graph("abc", ["ab", "bc"])


def test_missing_file_raises_oserror(tmp_path):
    with pytest.raises(OSError):
        read_graph_file(str(tmp_path / "finns-inte.txt"))


def test_comment_starts_only_at_token_boundary():
    g = parse_graph("e a b #kant a-b\n#e b c\ne b c\t# sista\n")
    assert g.sorted_edges() == [("a", "b"), ("b", "c")]
