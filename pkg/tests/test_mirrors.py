import pytest

from helpers import graph
from kohomologi.logic.complexes import double_graph, flag_complex, format_simplex, is_flag
from kohomologi.logic.homology import TRIVIAL, Z, FinitelyGeneratedAbelianGroup, nonzero, reduced_cohomology, same_groups
from kohomologi.logic.mirrors import (
    CoxeterElement,
    OracleTooLargeError,
    all_minus,
    coxeter_elements,
    davis_formula_groups,
    double_link_bijection,
    lemma_formula_groups,
    mirror_complex,
    opposite_simplex,
    punctured_double_model,
    stabilizer,
    underlying_simplex,
)
from kohomologi.logic.validation import graph_label, labeled_graphs


# -------- W = (ℤ_2)^V --------

def test_coxeter_group_operations():
    a = CoxeterElement(frozenset({"a"}))
    ab = CoxeterElement(frozenset({"a", "b"}))
    assert a * ab == CoxeterElement(frozenset({"b"}))
    assert a * a == CoxeterElement.identity()
    assert ab.inverse() == ab
    assert ab.reduce({"b", "c"}) == a
    assert str(CoxeterElement.identity()) == "1"
    assert str(ab) == "a·b"


def test_coxeter_elements_order():
    elems = list(coxeter_elements(["a", "b"]))
    assert [e.generators for e in elems] == [frozenset(), {"a"}, {"b"}, {"a", "b"}]


def test_stabilizer_of_vertex(p4_complex):
    assert stabilizer(p4_complex, ("b",), ()) == frozenset({"a", "c", "d"})
    assert stabilizer(p4_complex, ("b",), ("c",)) == frozenset({"a", "d"})
    assert stabilizer(p4_complex, ("b", "c"), ()) == frozenset({"a", "d"})


# -------- spegelkomplex --------

def test_mirror_complex_of_path(p4_complex):
    m = mirror_complex(p4_complex)
    assert m.group_order == 16
    assert m.realized.f_vector() == (8, 12)
    assert m.realized.euler_characteristic() == -4
    assert nonzero(reduced_cohomology(m.realized)) == {1: FinitelyGeneratedAbelianGroup(5)}


def test_mirror_complex_of_simplex_is_octahedral_sphere(k3):
    m = mirror_complex(flag_complex(k3))
    assert m.realized.f_vector() == (6, 12, 8)
    assert nonzero(reduced_cohomology(m.realized)) == {2: Z}


def test_mirror_complex_with_sigma_fixes_its_vertices(p4_complex):
    m = mirror_complex(p4_complex, ("b", "c"))
    assert m.group_order == 4
    assert m.realized.f_vector() == (6, 5)
    assert nonzero(reduced_cohomology(m.realized)) == {}


def test_mirror_complex_is_flag(small_graph):
    m = mirror_complex(flag_complex(small_graph))
    assert is_flag(m.realized)


def test_exponent_bound_guards_enumeration(p4_complex):
    with pytest.raises(OracleTooLargeError):
        mirror_complex(p4_complex, exponent_bound=3)
    with pytest.raises(OracleTooLargeError):
        davis_formula_groups(p4_complex, exponent_bound=2)
    # σ krymper W_σ
    assert mirror_complex(p4_complex, ("b",), exponent_bound=3).group_order == 8


def test_exponent_bound_from_environment(monkeypatch, p4_complex):
    monkeypatch.setenv("RAAG_EXPONENT_BOUND", "3")
    with pytest.raises(OracleTooLargeError):
        mirror_complex(p4_complex)
    monkeypatch.setenv("RAAG_EXPONENT_BOUND", "nope")
    with pytest.raises(ValueError):
        mirror_complex(p4_complex)


# -------- tre beräkningar av H̄^*(L_σ) --------

def test_lemma_formula_examples(p4_complex, k3):
    assert nonzero(lemma_formula_groups(p4_complex)) == {1: FinitelyGeneratedAbelianGroup(5)}
    assert nonzero(lemma_formula_groups(p4_complex, ("b", "c"))) == {}
    assert nonzero(lemma_formula_groups(flag_complex(k3))) == {2: Z}


def test_lemma_formula_pads_degrees(p4_complex):
    groups = lemma_formula_groups(p4_complex, ("b", "c"))
    assert groups == {-1: TRIVIAL, 0: TRIVIAL, 1: TRIVIAL}


def test_davis_formula_on_discrete_pair():
    k = flag_complex(graph("ab"))
    # S(w) = ∅, {a}, {b} ger ℤ var i grad 0; S(w) = {a, b} täcker hela komplexet
    assert nonzero(davis_formula_groups(k)) == {0: FinitelyGeneratedAbelianGroup(3)}


def test_three_computations_agree(small_graph):
    k = flag_complex(small_graph)
    for sigma in k.simplices():
        snf = reduced_cohomology(mirror_complex(k, sigma).realized, k.dimension)
        davis = davis_formula_groups(k, sigma)
        lemma = lemma_formula_groups(k, sigma)
        assert same_groups(snf, lemma) == [], format_simplex(sigma)
        assert same_groups(davis, lemma) == [], format_simplex(sigma)


def test_lemma_formula_keeps_torsion(rp2):
    lemma = lemma_formula_groups(flag_complex(rp2), ())
    assert lemma[2].torsion == (2,)
    assert lemma[2].free_rank == 31 + 90 + 60


# -------- Γ̂′ och borttagningsmodellen --------

def test_double_link_bijection(small_graph):
    witness = double_link_bijection(small_graph)
    assert witness.verified
    assert witness.mirror_vertices == witness.double_vertices == 2 * len(small_graph.vertices)
    assert witness.mirror_simplices == witness.double_simplices


def test_literal_cross_rule_differs_from_mirror_complex():
    g = graph("ab")
    assert mirror_complex(flag_complex(g)).realized.f_vector() == (4,)
    assert flag_complex(double_graph(g, cross="distinct")).f_vector() == (4, 2)
    assert double_link_bijection(g).verified


def test_sign_helpers(p4_complex):
    assert opposite_simplex(("a", "b")) == (("a", -1), ("b", -1))
    assert all_minus((("a", 1), ("b", -1))) == (("a", -1), ("b", -1))
    assert underlying_simplex(p4_complex, (("b", -1), ("a", 1))) == ("a", "b")


@pytest.mark.parametrize("sigma", [(), ("a",), ("a", "b")])
def test_punctured_double_model_matches_lemma(sigma):
    g = graph("abc", ["ab", "bc"])
    k = flag_complex(g)
    model = punctured_double_model(g, opposite_simplex(sigma))
    assert same_groups(reduced_cohomology(model, k.dimension), lemma_formula_groups(k, sigma)) == []


def test_punctured_double_model_of_empty_sigma_is_whole_double(p4):
    model = punctured_double_model(p4, ())
    assert len(model.vertex_order) == sum(flag_complex(double_graph(p4)).f_vector())


SMALL_LABELED = [g for n in (1, 2, 3) for g in labeled_graphs(n)]


@pytest.mark.parametrize("g", SMALL_LABELED, ids=graph_label)
def test_mixed_signs_reduce_to_all_minus(g):
    doubled = flag_complex(double_graph(g))
    top = doubled.dimension
    for sigma_prime in doubled.simplices():
        mixed = reduced_cohomology(punctured_double_model(g, sigma_prime), top)
        minus = reduced_cohomology(punctured_double_model(g, all_minus(sigma_prime)), top)
        assert same_groups(mixed, minus) == [], format_simplex(sigma_prime)
