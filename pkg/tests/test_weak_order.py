import pytest

from korbits.class_engine import compute_classes
from korbits.closed_orbits import closed_orbit_classes
from korbits.combinatorics import Family, Permutation, SymmetricPairConfig, longest_element
from korbits.polyring import PolyRing
from korbits.weak_order import (AmbiguityError, OrbitParameter, component_representative,
                                expected_nodes, generate_graph, resolve_split_edge,
                                top_parameter, weak_order_step)


def param(text, N, sign=None):
    return OrbitParameter(Permutation.parse(text, N), sign)


O1 = SymmetricPairConfig(Family.O_ODD, 1)
SP2 = SymmetricPairConfig(Family.SP, 2)
SO2 = SymmetricPairConfig(Family.SO_EVEN, 2)


def test_step_examples():
    step = weak_order_step(param("(1,4)(2,3)", 4), 1, SP2)
    assert step.target == param("(1,3)(2,4)", 4) and step.degree == 1
    step = weak_order_step(param("(2,3)", 3), 2, O1)
    assert step.target == param("id", 3) and step.degree == 2
    assert weak_order_step(param("(2,3)", 3), 1, O1) is None


def test_step_rejects_bad_parameters():
    with pytest.raises(ValueError):
        weak_order_step(param("(1,2)", 4), 1, SP2)
    with pytest.raises(ValueError):
        weak_order_step(param("(1,4)(2,3)", 4), 1, SO2)  # missing sign
    with pytest.raises(ValueError):
        weak_order_step(param("(2,3)", 3), 3, O1)
    with pytest.raises(ValueError):
        OrbitParameter(Permutation.parse("231"))


def test_split_step_requires_class():
    with pytest.raises(ValueError):
        weak_order_step(param("(1,4)(2,3)", 4, "+"), 1, SO2)


def test_component_representative_examples():
    w0 = longest_element(4)
    assert component_representative(w0, "+", SO2).one_line() == "1234"
    assert component_representative(w0, "-", SO2).one_line() == "1324"
    b = Permutation.parse("(1,3)(2,4)", 4)
    assert component_representative(b, "+", SO2).one_line() == "1243"
    b = Permutation.parse("(1,2)(3,4)", 4)
    assert component_representative(b, "-", SO2).one_line() == "1432"
    with pytest.raises(ValueError):
        component_representative(Permutation.parse("(1,4)", 4), "+", SO2)


def test_resolve_split_edge_examples():
    plus, minus = closed_orbit_classes(SO2)
    assert resolve_split_edge(plus.parameter, 1, SO2, plus.polynomial) == "+"
    assert resolve_split_edge(plus.parameter, 3, SO2, plus.polynomial) == "+"
    assert resolve_split_edge(minus.parameter, 1, SO2, minus.polynomial) == "-"
    assert resolve_split_edge(minus.parameter, 3, SO2, minus.polynomial) == "-"


def test_resolve_split_edge_ambiguity_is_an_error():
    plus, minus = closed_orbit_classes(SO2)
    # the O(4) class restricts nonzero at both target components
    with pytest.raises(AmbiguityError):
        resolve_split_edge(plus.parameter, 1, SO2, plus.polynomial + minus.polynomial)
    with pytest.raises(AmbiguityError):
        resolve_split_edge(plus.parameter, 1, SO2, PolyRing(4, 2).zero)


@pytest.mark.parametrize("fam,n,count", [
    (Family.O_ODD, 1, 4), (Family.O_ODD, 2, 26), (Family.O_ODD, 3, 232),
    (Family.O_EVEN, 2, 10), (Family.O_EVEN, 3, 76),
    (Family.SO_EVEN, 2, 13), (Family.SO_EVEN, 3, 91),
    (Family.SP, 2, 3), (Family.SP, 3, 15),
])
def test_node_counts_and_sets(fam, n, count):
    cfg = SymmetricPairConfig(fam, n)
    g = generate_graph(cfg)
    assert len(g.nodes) == count
    assert set(g.nodes) == set(expected_nodes(cfg))


@pytest.mark.parametrize("fam", list(Family))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_graph_structure(fam, n):
    cfg = SymmetricPairConfig(fam, n)
    g = generate_graph(cfg)
    assert g.is_acyclic()
    assert g.tops() == [top_parameter(cfg)]
    closed = {d.parameter for d in closed_orbit_classes(cfg)}
    assert set(g.bottoms()) == closed
    for e in g.edges:
        drop = e.source.involution.length() - e.target.involution.length()
        if e.target.involution == e.source.involution.conjugate_simple(e.root):
            assert drop == 2
        else:
            assert drop == 1 and e.target.involution == e.source.involution.left_simple(e.root)
        if fam is Family.SP or fam is Family.SO_EVEN and e.source.component:
            assert e.degree == 1
        if fam is Family.SO_EVEN and e.target.component:
            assert e.source.component is not None


def test_sp2_graph_exact():
    g = generate_graph(SP2)
    got = {(e.source.label(), e.target.label(), e.root) for e in g.edges}
    assert got == {("(1,4)(2,3)", "(1,3)(2,4)", 1), ("(1,4)(2,3)", "(1,3)(2,4)", 3),
                   ("(1,3)(2,4)", "(1,2)(3,4)", 2)}


def test_generate_graph_without_classes_matches_engine():
    for cfg in (O1, SP2, SymmetricPairConfig(Family.O_EVEN, 3)):
        g, _ = compute_classes(cfg)
        assert generate_graph(cfg, class_of=lambda b: None).edges == g.edges


def test_dot_export():
    dot = generate_graph(O1).to_dot()
    assert dot.startswith('digraph "o-odd_n1" {')
    assert dot.count("->") == 4
    assert dot.count('-> "id"') == 2
    assert sum("color=blue" in line for line in dot.splitlines() if '-> "id"' in line) == 2
    assert dot == generate_graph(O1).to_dot()
