import pytest

from gqla import parse
from gqla.complexity import oracle_search, oracle_worst_case, response_bound
from gqla.complexity.oracle import FieldSelection, InlineFragment, count_fields, count_response, render
from gqla.errors import GuardExceeded

from .conftest import FRIENDS


def test_count_response():
    assert count_response({"a": 1, "b": [{"c": 1}, {"c": 2}]}) == 4
    assert count_response({"tags": ["x", "y", "z"]}) == 1


def test_count_and_render():
    q = (FieldSelection("a", (InlineFragment("B", (FieldSelection("x"),)),)),)
    assert count_fields(q) == 2
    assert render(q) == "{ a { ... on B { x } } }"


def test_no_lists_gives_n():
    doc = parse("type Query { a: Int b: Int c: A } type A { x: Int y: Int }")
    for n in range(1, 5):
        assert oracle_worst_case(doc, n, 3) == n


def test_friends_doubles():
    # me is a single object, so only the friends levels multiply.
    sizes = [oracle_worst_case(parse(FRIENDS), n, 2) for n in range(2, 7)]
    assert sizes == [2, 4, 8, 16, 32]


def test_list_rooted_friends_meets_bound():
    doc = parse("type Query { users: [User] } type User { name: String friends: [User] }")
    for n in range(2, 7):
        assert oracle_worst_case(doc, n, 2) == response_bound(n, n - 1, 2) == 2**n - 1


def test_company_within_bound(company):
    for d in (2, 3):
        for n in range(1, 6):
            assert oracle_worst_case(company, n, d) <= response_bound(n, min(1, n - 1), d)


def test_bound_attained_when_witness_is_realizable():
    # Every field on the path is a list and Office has n - K = 3 scalars.
    doc = parse("type Query { offices: [Office] } type Office { id: ID name: String city: String }")
    assert oracle_worst_case(doc, 4, 3) == response_bound(4, 1, 3) == 10


def test_single_object_hop_costs_a_field():
    doc = parse("type Query { c: C } type C { offices: [Office] } type Office { id: ID name: String }")
    assert oracle_worst_case(doc, 4, 3) == 1 + 1 + 3 * 2 < response_bound(4, 1, 3)


def test_nested_list_wrapper_exceeds_closed_form():
    # One [[T]] field yields D^2 objects; the oracle counts D^2 entries.
    doc = parse("type Query { m: [[M]] } type M { x: Int }")
    assert oracle_worst_case(doc, 2, 3) == 1 + 9
    assert response_bound(2, 1, 3) == 4


def test_abstract_types_resolve_adversarially():
    doc = parse("type Query { u: [U] } union U = A | B type A { x: Int } type B { y: Int z: Int }")
    best = oracle_search(doc, 3, 2)
    assert best.size == 1 + 2 * 2
    assert "... on B" in best.query


def test_guards():
    with pytest.raises(GuardExceeded):
        oracle_worst_case(parse(FRIENDS), 9, 2)
    with pytest.raises(GuardExceeded):
        oracle_worst_case(parse(FRIENDS), 3, 5)
    big = parse(" ".join(["type Query { a: Int }"] + [f"type T{i} {{ a: Int }}" for i in range(10)]))
    with pytest.raises(GuardExceeded):
        oracle_worst_case(big, 2, 2)
