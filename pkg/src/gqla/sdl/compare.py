"""Structural equivalence between documents."""

from __future__ import annotations

from dataclasses import replace

from . import nodes as n

_KIND_ORDER = {"schema": 0, "directive": 1, "scalar": 2, "enum": 3, "input": 4, "interface": 5, "union": 6, "object": 7}


def _sorted_values(values):
    return tuple(sorted((replace(v, directives=_sorted_directives(v.directives)) for v in values), key=lambda v: v.name))


def _sorted_directives(directives):
    return tuple(
        sorted((replace(d, arguments=tuple(sorted(d.arguments))) for d in directives), key=lambda d: (d.name, d.arguments))
    )


def _canonical_field(f: n.FieldDefinition) -> n.FieldDefinition:
    return replace(f, arguments=_sorted_values(f.arguments), directives=_sorted_directives(f.directives))


def _canonical_definition(d: n.Definition) -> n.Definition:
    if isinstance(d, n.SchemaDefinition):
        return replace(d, operation_types=tuple(sorted(d.operation_types)), directives=_sorted_directives(d.directives))
    if isinstance(d, (n.ObjectType, n.InterfaceType)):
        return replace(
            d,
            fields=tuple(sorted((_canonical_field(f) for f in d.fields), key=lambda f: f.name)),
            interfaces=tuple(sorted(d.interfaces)),
            directives=_sorted_directives(d.directives),
        )
    if isinstance(d, n.UnionType):
        return replace(d, members=tuple(sorted(d.members)), directives=_sorted_directives(d.directives))
    if isinstance(d, n.EnumType):
        return replace(d, values=_sorted_values(d.values), directives=_sorted_directives(d.directives))
    if isinstance(d, n.InputObjectType):
        return replace(d, fields=_sorted_values(d.fields), directives=_sorted_directives(d.directives))
    if isinstance(d, n.ScalarType):
        return replace(d, directives=_sorted_directives(d.directives))
    if isinstance(d, n.DirectiveDefinition):
        return replace(d, arguments=_sorted_values(d.arguments), locations=tuple(sorted(d.locations)))
    raise TypeError(type(d).__name__)


def canonicalize(doc: n.SchemaDocument) -> n.SchemaDocument:
    """Sort definitions, fields, arguments, members and values by name."""
    defs = sorted(
        (_canonical_definition(d) for d in doc.definitions),
        key=lambda d: (_KIND_ORDER[d.kind], d.name or ""),
    )
    return doc.with_definitions(defs)


def ast_equivalent(a: n.SchemaDocument, b: n.SchemaDocument, canonical: bool = False) -> bool:
    """Order-sensitive structural equality; ``canonical`` compares sorted forms instead."""
    if canonical:
        a, b = canonicalize(a), canonicalize(b)
    return a.definitions == b.definitions
