"""Fetch a live schema through the introspection query and rebuild its SDL."""

from __future__ import annotations

import json
import logging
from typing import Mapping

import httpx
from graphql import GraphQLError
from graphql.language import parse_value, print_ast

from ..errors import HttpError, IntrospectionDisabled, MalformedResponse, NetworkError
from ..sdl import (
    BUILTIN_DIRECTIVES,
    BUILTIN_SCALARS,
    AppliedDirective,
    DirectiveDefinition,
    EnumType,
    EnumValueDefinition,
    FieldDefinition,
    InputObjectType,
    InputValueDefinition,
    InterfaceType,
    ObjectType,
    ScalarType,
    SchemaDefinition,
    SchemaDocument,
    TypeReference,
    UnionType,
    Wrapper,
)

log = logging.getLogger(__name__)

INTROSPECTION_QUERY = """
query IntrospectionQuery {
  __schema {
    queryType { name }
    mutationType { name }
    subscriptionType { name }
    types { ...FullType }
    directives {
      name
      description
      locations
      args { ...InputValue }
    }
  }
}

fragment FullType on __Type {
  kind
  name
  description
  fields(includeDeprecated: true) {
    name
    description
    args { ...InputValue }
    type { ...TypeRef }
    isDeprecated
    deprecationReason
  }
  inputFields { ...InputValue }
  interfaces { ...TypeRef }
  enumValues(includeDeprecated: true) {
    name
    description
    isDeprecated
    deprecationReason
  }
  possibleTypes { ...TypeRef }
}

fragment InputValue on __InputValue {
  name
  description
  type { ...TypeRef }
  defaultValue
}

fragment TypeRef on __Type {
  kind
  name
  ofType {
    kind
    name
    ofType {
      kind
      name
      ofType {
        kind
        name
        ofType {
          kind
          name
          ofType {
            kind
            name
            ofType {
              kind
              name
              ofType { kind name }
            }
          }
        }
      }
    }
  }
}
"""

# Directives that introspection reports but SDL authors never declare.
_IMPLICIT_DIRECTIVES = BUILTIN_DIRECTIVES | {"specifiedBy", "oneOf", "defer", "stream"}


def introspect(endpoint: str, headers: Mapping[str, str] | None = None, timeout: float = 30.0, client=None) -> SchemaDocument:
    """POST the introspection query to ``endpoint`` and convert the answer."""
    body = {"query": INTROSPECTION_QUERY, "operationName": "IntrospectionQuery"}
    request_headers = {"Content-Type": "application/json", "Accept": "application/json"}
    request_headers.update(headers or {})
    owns_client = client is None
    client = client or httpx.Client(timeout=timeout)
    try:
        response = client.post(endpoint, json=body, headers=request_headers)
    except httpx.HTTPError as exc:
        raise NetworkError(f"{endpoint}: {exc}") from exc
    finally:
        if owns_client:
            client.close()

    try:
        payload = response.json()
    except ValueError:
        payload = None
    if response.status_code >= 400:
        if isinstance(payload, dict) and payload.get("errors") and not payload.get("data"):
            log.debug("HTTP %s with GraphQL errors: %s", response.status_code, payload["errors"])
        raise HttpError(response.status_code, response.text[:500])
    if not isinstance(payload, dict):
        raise MalformedResponse(f"{endpoint}: response is not a JSON object")
    data = payload.get("data")
    if payload.get("errors") and not (isinstance(data, dict) and data.get("__schema")):
        raise IntrospectionDisabled(payload["errors"])
    if not isinstance(data, dict) or not isinstance(data.get("__schema"), dict):
        raise MalformedResponse(f"{endpoint}: no data.__schema in response")
    return from_introspection(data, source_name=endpoint)


def _type_ref(ref: dict) -> TypeReference:
    wrappers = []
    while ref["kind"] in ("NON_NULL", "LIST"):
        wrappers.append(Wrapper.NON_NULL if ref["kind"] == "NON_NULL" else Wrapper.LIST)
        ref = ref["ofType"]
        if ref is None:
            raise MalformedResponse("truncated type reference")
    return TypeReference(ref["name"], tuple(wrappers))


DEFAULT_DEPRECATION_REASON = "No longer supported"


def _normalize_value(text: str | None) -> str | None:
    if text is None:
        return None
    try:
        return print_ast(parse_value(text))
    except GraphQLError as exc:
        raise MalformedResponse(f"unparsable default value {text!r}") from exc


def _deprecation(item: dict) -> tuple[AppliedDirective, ...]:
    if not item.get("isDeprecated"):
        return ()
    reason = item.get("deprecationReason")
    # Servers fill in the default reason for a bare @deprecated.
    if reason is None or reason == DEFAULT_DEPRECATION_REASON:
        return (AppliedDirective("deprecated"),)
    return (AppliedDirective("deprecated", (("reason", print_ast(parse_value(json.dumps(reason)))),)),)


def _input_values(items) -> tuple[InputValueDefinition, ...]:
    return tuple(
        InputValueDefinition(
            a["name"],
            _type_ref(a["type"]),
            default=_normalize_value(a.get("defaultValue")),
            description=a.get("description"),
        )
        for a in items or ()
    )


def from_introspection(data: dict, source_name: str | None = None) -> SchemaDocument:
    """Convert an introspection result (the ``data`` object) into a document."""
    try:
        schema = data["__schema"]
        definitions = []
        ops = []
        for op in ("query", "mutation", "subscription"):
            root = schema.get(f"{op}Type")
            if root:
                ops.append((op, root["name"]))
        definitions.append(SchemaDefinition(tuple(ops)))

        for t in schema["types"]:
            name = t["name"]
            if name.startswith("__") or (t["kind"] == "SCALAR" and name in BUILTIN_SCALARS):
                continue
            definitions.append(_type_definition(t))

        for d in schema.get("directives") or ():
            if d["name"] in _IMPLICIT_DIRECTIVES:
                continue
            definitions.append(
                DirectiveDefinition(
                    d["name"],
                    tuple(d.get("locations") or ()),
                    _input_values(d.get("args")),
                    bool(d.get("isRepeatable", False)),
                    description=d.get("description"),
                )
            )
    except (KeyError, TypeError) as exc:
        raise MalformedResponse(f"malformed introspection result: {exc!r}") from exc
    return SchemaDocument(tuple(definitions), source_name=source_name)


def _type_definition(t: dict):
    kind, name, desc = t["kind"], t["name"], t.get("description")
    if kind in ("OBJECT", "INTERFACE"):
        fields = tuple(
            FieldDefinition(
                f["name"],
                _type_ref(f["type"]),
                _input_values(f.get("args")),
                _deprecation(f),
                description=f.get("description"),
            )
            for f in t.get("fields") or ()
        )
        interfaces = tuple(i["name"] for i in t.get("interfaces") or ())
        cls = ObjectType if kind == "OBJECT" else InterfaceType
        return cls(name, fields, interfaces, description=desc)
    if kind == "UNION":
        return UnionType(name, tuple(p["name"] for p in t.get("possibleTypes") or ()), description=desc)
    if kind == "ENUM":
        values = tuple(
            EnumValueDefinition(v["name"], _deprecation(v), description=v.get("description"))
            for v in t.get("enumValues") or ()
        )
        return EnumType(name, values, description=desc)
    if kind == "INPUT_OBJECT":
        return InputObjectType(name, _input_values(t.get("inputFields")), description=desc)
    if kind == "SCALAR":
        return ScalarType(name, description=desc)
    raise MalformedResponse(f"unknown type kind {kind!r} for {name}")
