import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gqla import parse
from gqla.complexity import (
    ComplexityClass,
    analyze,
    build_type_graph,
    class_for_k,
    response_bound,
    strongly_connected_components,
)
from gqla.errors import DomainError
from gqla.synthetic import generate_schema

from .conftest import FRIENDS, REPOS


def test_company_edges(company):
    g = build_type_graph(company)
    expected = [
        ("Query", "Company", "company", 0),
        ("Company", "OfficeConnection", "offices", 0),
        ("OfficeConnection", "Office", "nodes", 1),
        ("OfficeConnection", "OfficeEdge", "edges", 1),
        ("OfficeEdge", "Office", "node", 0),
    ]
    for src, dst, label, weight in expected:
        (edge,) = g.find(src, dst, label)
        assert edge.weight == weight


def test_self_edge_and_nested_lists():
    (edge,) = build_type_graph(parse(FRIENDS)).find("User", "User")
    assert edge.weight == 1
    (edge,) = build_type_graph(parse("type Query { m: [[M]] } type M { x: Int }")).find("Query", "M")
    assert edge.weight == 2


def test_expansion_edges_have_zero_weight():
    g = build_type_graph(parse("type Query { n: [N] } union N = A | B type A { x: Int } type B { y: Int }"))
    assert {(e.target, e.weight, e.expansion) for e in g.edges if e.source == "N"} == {("A", 0, True), ("B", 0, True)}


def test_unreachable_types_are_ignored():
    g = build_type_graph(parse("type Query { a: Int } type Lonely { me: [Lonely] }"))
    assert "Lonely" not in g.nodes
    assert analyze(parse("type Query { a: Int } type Lonely { me: [Lonely] }")).cls is ComplexityClass.LINEAR_IN_N


def test_friends_is_exponential():
    r = analyze(parse(FRIENDS))
    assert r.cls is ComplexityClass.EXPONENTIAL
    assert [e.step for e in r.witness] == ["User.friends"]
    assert [e.step for e in r.approach] == ["Query.me"]
    assert r.formula == "O(D^(n-1))"


def test_repos_members_is_quadratic():
    r = analyze(parse(REPOS))
    assert (r.cls, r.K) == (ComplexityClass.QUADRATIC, 2)
    assert [e.step for e in r.witness] == ["Query.repos", "Repo.members"]


def test_company_is_linear_in_nd(company):
    r = analyze(company)
    assert (r.cls, r.K) == (ComplexityClass.LINEAR_IN_ND, 1)
    assert sum(e.weight for e in r.witness) == 1
    assert r.to_dict()["class"] == "linear-nd"


def test_polynomial_and_linear():
    r = analyze(parse("type Query { a: [A] } type A { b: [[B]] } type B { x: Int }"))
    assert (r.cls, r.K, r.formula) == (ComplexityClass.POLYNOMIAL, 3, "O(n*D^3)")
    r = analyze(parse("type Query { a: A } type A { b: B } type B { x: [Int] }"))
    assert (r.cls, r.K) == (ComplexityClass.LINEAR_IN_N, 0)


def test_list_free_cycle_is_not_exponential():
    r = analyze(parse("type Query { a: A } type A { b: B } type B { a: A items: [C] } type C { x: Int }"))
    assert (r.cls, r.K) == (ComplexityClass.LINEAR_IN_ND, 1)


def test_cycle_through_interface_expansion():
    doc = parse("type Query { n: Node } interface Node { id: ID } type Folder implements Node { id: ID kids: [Node] }")
    r = analyze(doc)
    assert r.cls is ComplexityClass.EXPONENTIAL
    # Witness is a closed walk.
    assert r.witness[0].source == r.witness[-1].target


def test_query_only_ignores_mutation_root():
    doc = parse("type Query { a: Int } type Mutation { u: U } type U { us: [U] }")
    assert analyze(doc).cls is ComplexityClass.EXPONENTIAL
    assert analyze(doc, query_only=True).cls is ComplexityClass.LINEAR_IN_N


def test_class_for_k():
    assert [class_for_k(k) for k in range(4)] == [
        ComplexityClass.LINEAR_IN_N,
        ComplexityClass.LINEAR_IN_ND,
        ComplexityClass.QUADRATIC,
        ComplexityClass.POLYNOMIAL,
    ]


@pytest.mark.parametrize(
    "n, k, d, expected",
    [(4, 3, 10, 1111), (5, 2, 3, 31), (4, 1, 10, 31), (7, 0, 5, 7), (5, 2, 1, 5), (2, 1, 2, 3)],
)
def test_response_bound(n, k, d, expected):
    assert response_bound(n, k, d) == expected


@pytest.mark.parametrize("n, k, d", [(3, 3, 2), (2, 5, 2), (4, 1, 0)])
def test_response_bound_domain(n, k, d):
    with pytest.raises(DomainError):
        response_bound(n, k, d)


def test_response_bound_is_exact_for_large_values():
    assert response_bound(100, 40, 10) == 60 * 10**40 + (10**40 - 1) // 9


def _networkx_view(graph):
    g = nx.MultiDiGraph()
    g.add_nodes_from(graph.nodes)
    for e in graph.edges:
        g.add_edge(e.source, e.target, weight=e.weight)
    return g


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**6), size=st.integers(2, 9))
def test_scc_and_k_match_networkx(seed, size):
    doc = generate_schema(random.Random(seed), object_types=size)
    graph = build_type_graph(doc)
    ours = {frozenset(c) for c in strongly_connected_components(graph.nodes, graph.out_edges())}
    g = _networkx_view(graph)
    assert ours == {frozenset(c) for c in nx.strongly_connected_components(g)}

    comp = {v: i for i, c in enumerate(nx.strongly_connected_components(g)) for v in c}
    list_in_cycle = any(d["weight"] >= 1 and comp[u] == comp[v] for u, v, d in g.edges(data=True))
    report = analyze(doc)
    assert (report.cls is ComplexityClass.EXPONENTIAL) == list_in_cycle
    if list_in_cycle:
        assert all(comp[e.source] == comp[e.target] for e in report.witness)
        assert any(e.weight >= 1 for e in report.witness)
        return
    cond = nx.condensation(nx.DiGraph(g))
    dag = nx.DiGraph()
    dag.add_nodes_from(cond.nodes)
    for u, v, d in g.edges(data=True):
        cu, cv = cond.graph["mapping"][u], cond.graph["mapping"][v]
        if cu != cv:
            w = max(d["weight"], dag.edges[cu, cv]["weight"] if dag.has_edge(cu, cv) else 0)
            dag.add_edge(cu, cv, weight=w)
    assert report.K == nx.dag_longest_path_length(dag, weight="weight", default_weight=0)
    assert sum(e.weight for e in report.witness) == report.K
