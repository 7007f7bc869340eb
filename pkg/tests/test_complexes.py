import pytest

from helpers import graph
from kohomologi.logic.complexes import (
    Graph,
    GraphError,
    SimplexError,
    SimplicialComplex,
    barycentric_subdivision,
    deleted_complex,
    double_graph,
    empty_complex,
    flag_complex,
    format_simplex,
    format_vertex,
    full_subcomplex,
    is_flag,
    is_single_simplex,
    link,
    mirror_union,
    one_skeleton,
    simplices,
    star,
)
from kohomologi.logic.presets import preset_graph


def faces_of(k):
    return {frozenset(s) for s in k.simplices()}


def as_faces(*simplices_):
    return {frozenset(s) for s in simplices_}


# -------- Graph --------

def test_graph_rejects_loops_and_duplicates():
    with pytest.raises(GraphError):
        Graph.build("ab", [("a", "a")])
    with pytest.raises(GraphError):
        Graph.build(["a", "a"], [])
    with pytest.raises(GraphError):
        Graph.build("ab", [("a", "z")])


def test_graph_normalizes_edges_by_declaration_order():
    g = Graph.build("ab", [("b", "a")])
    assert g.edges == frozenset({("a", "b")})
    assert g.has_edge("b", "a")


# -------- flag_complex / simplices --------

def test_flag_complex_of_triangle_is_full_simplex(k3):
    k = flag_complex(k3)
    assert len(simplices(k)) == 8
    assert k.dimension == 2
    assert k.facets() == [("a", "b", "c")]
    assert is_single_simplex(k)


def test_flag_complex_of_path(p4_complex):
    assert len(p4_complex.simplices()) == 8
    assert p4_complex.simplices()[0] == ()
    assert p4_complex.facets() == [("a", "b"), ("b", "c"), ("c", "d")]
    assert p4_complex.f_vector() == (4, 3)
    assert not is_single_simplex(p4_complex)


def test_flag_complex_of_four_cycle_has_no_triangles():
    k = flag_complex(preset_graph("cycle", 4))
    assert k.dimension == 1
    assert k.f_vector() == (4, 4)


def test_empty_graph_gives_empty_complex():
    k = flag_complex(Graph.build([], []))
    assert k.simplices() == [()]
    assert k.dimension == -1
    assert k.is_empty
    assert is_single_simplex(k)


def test_simplices_order_is_by_dimension_then_vertex_order(p4_complex):
    assert p4_complex.simplices() == [
        (), ("a",), ("b",), ("c",), ("d",), ("a", "b"), ("b", "c"), ("c", "d"),
    ]
    assert flag_complex(graph("abcd", ["ab", "bc", "cd"])).simplices() == p4_complex.simplices()


def test_face_closure_is_enforced():
    with pytest.raises(SimplexError):
        SimplicialComplex(("a", "b"), frozenset({frozenset(), frozenset({"a", "b"}), frozenset({"a"})}))


def test_one_skeleton_recovers_graph(p4):
    assert one_skeleton(flag_complex(p4)) == p4


# -------- link / star --------

def test_link_of_middle_vertex_is_two_points(p4_complex):
    lk = link(p4_complex, ("b",))
    assert lk.vertex_order == ("a", "c")
    assert faces_of(lk) == as_faces((), ("a",), ("c",))


def test_link_of_edge_is_empty(p4_complex):
    assert link(p4_complex, ("b", "c")).is_empty


def test_link_of_empty_simplex_is_whole_complex(p4_complex, k3):
    assert link(p4_complex, ()) == p4_complex
    k = flag_complex(k3)
    assert link(k, ()) == k


def test_link_requires_a_simplex(p4_complex):
    with pytest.raises(SimplexError):
        link(p4_complex, ("a", "c"))
    with pytest.raises(SimplexError):
        link(p4_complex, ("z",))


def test_star_of_vertex(p4_complex, k3):
    assert faces_of(star(p4_complex, ("b",))) == as_faces(
        (), ("a",), ("b",), ("c",), ("a", "b"), ("b", "c"))
    assert star(p4_complex, ()) == p4_complex
    k = flag_complex(k3)
    assert star(k, ("a",)) == k


def test_star_is_generated_by_simplices_containing_s(p4_complex):
    for s in p4_complex.simplices():
        st = star(p4_complex, s)
        lk = link(p4_complex, s)
        assert faces_of(st) >= {frozenset(s) | f for f in faces_of(lk)}
        for f in faces_of(st):
            assert f | frozenset(s) in p4_complex.faces


# -------- full subcomplexes / mirrors --------

def test_full_subcomplex_and_deleted_complex(p4_complex):
    sub = full_subcomplex(p4_complex, {"a", "c", "d"})
    assert faces_of(sub) == as_faces((), ("a",), ("c",), ("d",), ("c", "d"))
    assert sub == deleted_complex(p4_complex, "b")
    assert full_subcomplex(p4_complex, p4_complex.vertex_order) == p4_complex
    assert full_subcomplex(p4_complex, []).is_empty
    with pytest.raises(SimplexError):
        full_subcomplex(p4_complex, ["z"])


def test_mirror_union_examples(p4_complex):
    assert faces_of(mirror_union(p4_complex, {"a"})) == as_faces(
        (), ("b",), ("c",), ("d",), ("b", "c"), ("c", "d"))
    assert mirror_union(p4_complex, set()).is_empty
    assert mirror_union(p4_complex, {"a", "c"}) == p4_complex


@pytest.mark.parametrize("vs", [{"a", "c"}, {"a", "d"}, {"b", "d"}, {"a", "b", "c"}])
def test_mirror_union_of_non_simplex_is_everything(p4_complex, vs):
    assert mirror_union(p4_complex, vs) == p4_complex


def test_mirror_union_of_simplex_removes_its_open_star(small_graph):
    k = flag_complex(small_graph)
    for tau in k.simplices():
        if not tau:
            continue
        expected = {f for f in k.faces if not frozenset(tau) <= f}
        assert mirror_union(k, tau).faces == expected


# -------- double graph --------

def test_double_graph_of_single_vertex():
    d = double_graph(graph("a"))
    assert d.vertices == (("a", 1), ("a", -1))
    assert not d.edges


def test_double_graph_of_edge_is_four_cycle():
    d = double_graph(graph("ab", ["ab"]))
    k = flag_complex(d)
    assert k.f_vector() == (4, 4)
    assert not d.has_edge(("a", 1), ("a", -1))
    assert not d.has_edge(("b", 1), ("b", -1))


def test_double_graph_cross_rules_differ_off_the_edges():
    g = graph("ab")
    assert not double_graph(g).edges
    distinct = double_graph(g, cross="distinct")
    assert distinct.edges == frozenset({(("a", 1), ("b", -1)), (("b", 1), ("a", -1))})
    with pytest.raises(GraphError):
        double_graph(g, cross="other")


def test_cross_rules_agree_on_complete_graphs():
    g = preset_graph("complete", 3)
    assert double_graph(g) == double_graph(g, cross="distinct")


def test_doubled_flag_complex_is_flag(small_graph):
    k = flag_complex(double_graph(small_graph))
    assert len(k.vertex_order) == 2 * len(small_graph.vertices)
    assert is_flag(k)


# -------- barycentric subdivision / flagness --------

def test_subdivision_of_edge_is_path():
    sd = barycentric_subdivision(SimplicialComplex.from_simplices([("a", "b")]))
    assert sd.f_vector() == (3, 2)
    assert faces_of(link(sd, (("a", "b"),))) == as_faces((), (("a",),), (("b",),))


def test_subdivision_of_triangle(k3):
    sd = barycentric_subdivision(flag_complex(k3))
    assert sd.f_vector() == (7, 12, 6)
    assert is_flag(sd)


def test_subdivision_of_empty_complex():
    assert barycentric_subdivision(empty_complex()).is_empty


def test_is_flag():
    hollow = SimplicialComplex.from_simplices([("a", "b"), ("b", "c"), ("a", "c")])
    assert not is_flag(hollow)
    assert not is_single_simplex(hollow)
    assert is_flag(flag_complex(preset_graph("cycle", 5)))


# -------- formatering --------

def test_format_vertex_and_simplex():
    assert format_vertex(("a", 1)) == "a+"
    assert format_vertex(("a", -1)) == "a-"
    assert format_vertex(("a", "b")) == "(a,b)"
    assert format_simplex(()) == "∅"
    assert format_simplex(("a", ("b", -1))) == "{a,b-}"


def test_euler_characteristic(p4_complex, k3):
    assert p4_complex.euler_characteristic() == 1
    assert flag_complex(preset_graph("cycle", 5)).euler_characteristic() == 0
    assert flag_complex(k3).euler_characteristic() == 1
