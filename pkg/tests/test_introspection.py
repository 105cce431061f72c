import httpx
import pytest
from graphql import build_schema, get_introspection_query, graphql_sync

from gqla import ast_equivalent, parse, print_document, validate
from gqla.corpus import INTROSPECTION_QUERY, from_introspection, introspect
from gqla.errors import HttpError, IntrospectionDisabled, MalformedResponse, NetworkError


def test_introspect_round_trip(graphql_server, company):
    doc = introspect(graphql_server.url)
    assert validate(doc).ok
    assert ast_equivalent(doc, company, canonical=True)
    assert graphql_server.requests[0]["body"]["query"] == INTROSPECTION_QUERY


def test_headers_are_sent(graphql_server):
    introspect(graphql_server.url, headers={"Authorization": "Bearer abc"})
    assert graphql_server.requests[0]["headers"]["Authorization"] == "Bearer abc"


def test_unauthorized(graphql_server):
    graphql_server.mode = "unauthorized"
    with pytest.raises(HttpError) as err:
        introspect(graphql_server.url)
    assert err.value.status == 401


def test_introspection_disabled(graphql_server):
    graphql_server.mode = "disabled"
    with pytest.raises(IntrospectionDisabled):
        introspect(graphql_server.url)


def test_malformed(graphql_server):
    graphql_server.mode = "garbage"
    with pytest.raises(MalformedResponse):
        introspect(graphql_server.url)


def test_network_error():
    def refuse(request):
        raise httpx.ConnectError("refused", request=request)

    with pytest.raises(NetworkError):
        introspect("http://x/graphql", client=httpx.Client(transport=httpx.MockTransport(refuse)))


RICH = '''
"""Root"""
type Query {
  node(id: ID!): Node
  search(term: String = "x", kinds: [Kind!]): [Result!]!
  old: Int @deprecated(reason: "gone")
}
interface Node { id: ID! }
type Post implements Node { id: ID! at: Date tags: [String] }
union Result = Post
enum Kind { A B @deprecated }
scalar Date
input Range { lo: Int = 0 hi: Int }
type Mutation { set(r: Range): Boolean }
directive @cost(value: Int!) on FIELD_DEFINITION
'''


def test_converter_on_reference_introspection():
    # graphql-core's own introspection result is an independent oracle.
    schema = build_schema(RICH)
    data = graphql_sync(schema, get_introspection_query(descriptions=True)).data
    doc = from_introspection(data)
    assert validate(doc).ok
    expected = parse("schema { query: Query mutation: Mutation }\n" + RICH)
    assert ast_equivalent(doc, expected, canonical=True), print_document(doc)
