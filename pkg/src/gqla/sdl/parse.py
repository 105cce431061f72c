"""SDL text -> :class:`SchemaDocument`.

Lexing and grammar are delegated to graphql-core; this module converts its
mutable AST into the immutable node set and folds type extensions into their
base definitions.
"""

from __future__ import annotations

from dataclasses import replace

from graphql import GraphQLError
from graphql.language import ast as gql
from graphql.language import parse as _gql_parse
from graphql.language import print_ast

from ..errors import SchemaParseError
from . import nodes as n

_EXECUTABLE = (gql.OperationDefinitionNode, gql.FragmentDefinitionNode)


def _parse_raw(text: str) -> gql.DocumentNode:
    try:
        return _gql_parse(text)
    except GraphQLError as exc:
        loc = exc.locations[0] if exc.locations else None
        raise SchemaParseError(
            exc.message,
            line=loc.line if loc else None,
            column=loc.column if loc else None,
        ) from None


def is_pure_schema(text: str) -> bool:
    """True iff ``text`` parses and holds no operations or fragments."""
    raw = _parse_raw(text)
    return not any(isinstance(d, _EXECUTABLE) for d in raw.definitions)


def parse(text: str, source_name: str | None = None) -> n.SchemaDocument:
    """Parse SDL into a document.

    Executable definitions are rejected; use :func:`is_pure_schema` first when
    the input may be a query file.
    """
    raw = _parse_raw(text)
    definitions: list[n.Definition] = []
    extensions: list[gql.Node] = []
    for node in raw.definitions:
        if isinstance(node, _EXECUTABLE):
            raise SchemaParseError(
                "executable definitions are not allowed in a schema document", *_pos(node)
            )
        if isinstance(node, (gql.TypeExtensionNode, gql.SchemaExtensionNode)):
            extensions.append(node)
        else:
            definitions.append(_convert(node))
    for ext in extensions:
        _merge_extension(definitions, ext)
    return n.SchemaDocument(tuple(definitions), source_name=source_name)


def _pos(node) -> tuple[int | None, int | None]:
    loc = node.loc
    if loc is None:
        return None, None
    return loc.start_token.line, loc.start_token.column


def _loc(node) -> n.Location | None:
    line, column = _pos(node)
    return None if line is None else n.Location(line, column)


def _desc(node) -> str | None:
    d = getattr(node, "description", None)
    return d.value if d is not None else None


def _type_ref(node: gql.TypeNode) -> n.TypeReference:
    wrappers = []
    while not isinstance(node, gql.NamedTypeNode):
        wrappers.append(n.Wrapper.LIST if isinstance(node, gql.ListTypeNode) else n.Wrapper.NON_NULL)
        node = node.type
    return n.TypeReference(node.name.value, tuple(wrappers))


def _directives(nodes) -> tuple[n.AppliedDirective, ...]:
    return tuple(
        n.AppliedDirective(
            d.name.value,
            tuple((a.name.value, print_ast(a.value)) for a in d.arguments or ()),
            loc=_loc(d),
        )
        for d in nodes or ()
    )


def _input_values(nodes) -> tuple[n.InputValueDefinition, ...]:
    return tuple(
        n.InputValueDefinition(
            a.name.value,
            _type_ref(a.type),
            default=print_ast(a.default_value) if a.default_value is not None else None,
            directives=_directives(a.directives),
            description=_desc(a),
            loc=_loc(a),
        )
        for a in nodes or ()
    )


def _fields(nodes) -> tuple[n.FieldDefinition, ...]:
    return tuple(
        n.FieldDefinition(
            f.name.value,
            _type_ref(f.type),
            arguments=_input_values(f.arguments),
            directives=_directives(f.directives),
            description=_desc(f),
            loc=_loc(f),
        )
        for f in nodes or ()
    )


def _names(nodes) -> tuple[str, ...]:
    return tuple(t.name.value for t in nodes or ())


def _enum_values(nodes) -> tuple[n.EnumValueDefinition, ...]:
    return tuple(
        n.EnumValueDefinition(v.name.value, _directives(v.directives), _desc(v), _loc(v))
        for v in nodes or ()
    )


def _convert(node) -> n.Definition:
    common = dict(description=_desc(node), loc=_loc(node))
    if isinstance(node, gql.SchemaDefinitionNode):
        ops = tuple((op.operation.value, op.type.name.value) for op in node.operation_types)
        return n.SchemaDefinition(ops, _directives(node.directives), **common)
    if isinstance(node, gql.ObjectTypeDefinitionNode):
        return n.ObjectType(
            node.name.value, _fields(node.fields), _names(node.interfaces), _directives(node.directives), **common
        )
    if isinstance(node, gql.InterfaceTypeDefinitionNode):
        return n.InterfaceType(
            node.name.value, _fields(node.fields), _names(node.interfaces), _directives(node.directives), **common
        )
    if isinstance(node, gql.UnionTypeDefinitionNode):
        return n.UnionType(node.name.value, _names(node.types), _directives(node.directives), **common)
    if isinstance(node, gql.EnumTypeDefinitionNode):
        return n.EnumType(node.name.value, _enum_values(node.values), _directives(node.directives), **common)
    if isinstance(node, gql.InputObjectTypeDefinitionNode):
        return n.InputObjectType(
            node.name.value, _input_values(node.fields), _directives(node.directives), **common
        )
    if isinstance(node, gql.ScalarTypeDefinitionNode):
        return n.ScalarType(node.name.value, _directives(node.directives), **common)
    if isinstance(node, gql.DirectiveDefinitionNode):
        return n.DirectiveDefinition(
            node.name.value,
            tuple(loc.value for loc in node.locations),
            _input_values(node.arguments),
            bool(node.repeatable),
            **common,
        )
    raise SchemaParseError(f"unsupported definition {type(node).__name__}", *_pos(node))


_EXTENSION_TARGET = {
    gql.ObjectTypeExtensionNode: n.ObjectType,
    gql.InterfaceTypeExtensionNode: n.InterfaceType,
    gql.UnionTypeExtensionNode: n.UnionType,
    gql.EnumTypeExtensionNode: n.EnumType,
    gql.InputObjectTypeExtensionNode: n.InputObjectType,
    gql.ScalarTypeExtensionNode: n.ScalarType,
}


def _merge_extension(definitions: list, ext) -> None:
    """Fold ``ext`` into its base definition, in place.

    An extension whose base is absent from the document is promoted to a
    base definition of the same kind.
    """
    if isinstance(ext, gql.SchemaExtensionNode):
        ops = tuple((op.operation.value, op.type.name.value) for op in ext.operation_types or ())
        for i, d in enumerate(definitions):
            if isinstance(d, n.SchemaDefinition):
                definitions[i] = replace(
                    d,
                    operation_types=d.operation_types + ops,
                    directives=d.directives + _directives(ext.directives),
                )
                return
        definitions.append(n.SchemaDefinition(ops, _directives(ext.directives), loc=_loc(ext)))
        return

    target = _EXTENSION_TARGET[type(ext)]
    name = ext.name.value
    for i, d in enumerate(definitions):
        if isinstance(d, target) and d.name == name:
            break
    else:
        definitions.append(_promote(ext, target))
        return

    extra_directives = _directives(ext.directives)
    if target in (n.ObjectType, n.InterfaceType):
        definitions[i] = replace(
            d,
            fields=d.fields + _fields(ext.fields),
            interfaces=d.interfaces + _names(ext.interfaces),
            directives=d.directives + extra_directives,
        )
    elif target is n.UnionType:
        definitions[i] = replace(d, members=d.members + _names(ext.types), directives=d.directives + extra_directives)
    elif target is n.EnumType:
        definitions[i] = replace(d, values=d.values + _enum_values(ext.values), directives=d.directives + extra_directives)
    elif target is n.InputObjectType:
        definitions[i] = replace(d, fields=d.fields + _input_values(ext.fields), directives=d.directives + extra_directives)
    else:
        definitions[i] = replace(d, directives=d.directives + extra_directives)


def _promote(ext, target):
    name = ext.name.value
    directives = _directives(ext.directives)
    loc = _loc(ext)
    if target in (n.ObjectType, n.InterfaceType):
        return target(name, _fields(ext.fields), _names(ext.interfaces), directives, loc=loc)
    if target is n.UnionType:
        return target(name, _names(ext.types), directives, loc=loc)
    if target is n.EnumType:
        return target(name, _enum_values(ext.values), directives, loc=loc)
    if target is n.InputObjectType:
        return target(name, _input_values(ext.fields), directives, loc=loc)
    return target(name, directives, loc=loc)
