"""Completeness and validity checks used by the corpus funnel.

Only the rules the funnel needs are enforced: presence of a query operation,
resolution of every type/directive reference, unique names, and input/output
position checks.  This is deliberately not a full GraphQL validator.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import nodes as n


class Status(str, enum.Enum):
    VALID = "valid"
    INCOMPLETE = "incomplete"
    INVALID = "invalid"


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    message: str
    location: n.Location | None = None
    subject: str | None = None


@dataclass(frozen=True)
class ValidationResult:
    status: Status
    missing_references: frozenset[str] = frozenset()
    diagnostics: tuple[Diagnostic, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.status is Status.VALID

    def error_subjects(self) -> set[str]:
        return {d.subject for d in self.diagnostics if d.severity == "error" and d.subject}


def _references(doc: n.SchemaDocument):
    """Yield (kind, name, location) for every type or directive reference."""

    def applied(directives):
        for d in directives:
            yield "directive", d.name, d.loc

    def input_values(values):
        for v in values:
            yield "type", v.type.named_type, v.loc
            yield from applied(v.directives)

    for d in doc.definitions:
        if isinstance(d, n.SchemaDefinition):
            for _, type_name in d.operation_types:
                yield "type", type_name, d.loc
            yield from applied(d.directives)
        elif isinstance(d, (n.ObjectType, n.InterfaceType)):
            for iface in d.interfaces:
                yield "type", iface, d.loc
            yield from applied(d.directives)
            for f in d.fields:
                yield "type", f.return_type.named_type, f.loc
                yield from applied(f.directives)
                yield from input_values(f.arguments)
        elif isinstance(d, n.UnionType):
            for m in d.members:
                yield "type", m, d.loc
            yield from applied(d.directives)
        elif isinstance(d, n.EnumType):
            yield from applied(d.directives)
            for v in d.values:
                yield from applied(v.directives)
        elif isinstance(d, n.InputObjectType):
            yield from applied(d.directives)
            yield from input_values(d.fields)
        elif isinstance(d, n.ScalarType):
            yield from applied(d.directives)
        elif isinstance(d, n.DirectiveDefinition):
            yield from input_values(d.arguments)


def _first_missing(doc: n.SchemaDocument) -> dict[str, n.Location | None]:
    """Each unresolved name with the location of its first reference."""
    types, directives = doc.defined_names()
    missing: dict[str, n.Location | None] = {}
    for kind, name, loc in _references(doc):
        if kind == "type" and name not in types and name not in n.BUILTIN_SCALARS:
            missing.setdefault(name, loc)
        elif kind == "directive" and name not in directives and name not in n.BUILTIN_DIRECTIVES:
            missing.setdefault(name, loc)
    return missing


def missing_references(doc: n.SchemaDocument) -> frozenset[str]:
    return frozenset(_first_missing(doc))


def _duplicates(names) -> list[str]:
    seen, dups = set(), []
    for name in names:
        if name in seen and name not in dups:
            dups.append(name)
        seen.add(name)
    return dups


def validate(doc: n.SchemaDocument) -> ValidationResult:
    diags: list[Diagnostic] = []

    def error(message, loc=None, subject=None):
        diags.append(Diagnostic("error", message, loc, subject))

    has_query = doc.has_query_operation()
    if not has_query:
        error("no query operation (schema definition or Query type)", subject="Query")

    missing = _first_missing(doc)
    for name in sorted(missing):
        diags.append(Diagnostic("error", f"unresolved reference: {name}", missing[name], name))

    schemas = doc.of_kind(n.SchemaDefinition)
    if len(schemas) > 1:
        error("multiple schema definitions", schemas[1].loc, subject="schema")
    for name in _duplicates(d.name for d in doc.type_definitions):
        error(f"duplicate type definition: {name}", subject=name)
    for name in _duplicates(d.name for d in doc.directive_definitions):
        error(f"duplicate directive definition: @{name}", subject=name)

    kinds = {d.name: d for d in doc.type_definitions}
    _check_types(doc, kinds, error)

    if has_query and missing:
        status = Status.INCOMPLETE
    elif any(d.severity == "error" for d in diags):
        status = Status.INVALID
    else:
        status = Status.VALID
    return ValidationResult(status, frozenset(missing), tuple(diags))


def _is_input(kinds, name: str) -> bool:
    if name in n.BUILTIN_SCALARS:
        return True
    d = kinds.get(name)
    return d is None or isinstance(d, (n.InputObjectType, n.EnumType, n.ScalarType))


def _is_output(kinds, name: str) -> bool:
    if name in n.BUILTIN_SCALARS:
        return True
    d = kinds.get(name)
    return d is None or not isinstance(d, n.InputObjectType)


def _check_types(doc: n.SchemaDocument, kinds, error) -> None:
    schema = doc.schema_definition
    if schema is not None:
        for op in _duplicates(op for op, _ in schema.operation_types):
            error(f"root operation {op} declared twice", schema.loc, subject="schema")
        for op, type_name in schema.operation_types:
            target = kinds.get(type_name)
            if target is not None and not isinstance(target, n.ObjectType):
                error(f"{op} root {type_name} must be an object type", schema.loc, subject=type_name)

    for d in doc.definitions:
        if isinstance(d, (n.ObjectType, n.InterfaceType)):
            if not d.fields:
                error(f"{d.name} must define one or more fields", d.loc, subject=d.name)
            for name in _duplicates(f.name for f in d.fields):
                error(f"duplicate field {d.name}.{name}", d.loc, subject=d.name)
            for iface in d.interfaces:
                target = kinds.get(iface)
                if iface in n.BUILTIN_SCALARS or (target is not None and not isinstance(target, n.InterfaceType)):
                    error(f"{d.name} implements non-interface {iface}", d.loc, subject=d.name)
            for f in d.fields:
                if not _is_output(kinds, f.return_type.named_type):
                    error(
                        f"{d.name}.{f.name} returns input type {f.return_type.named_type}",
                        f.loc,
                        subject=d.name,
                    )
                for name in _duplicates(a.name for a in f.arguments):
                    error(f"duplicate argument {d.name}.{f.name}({name})", f.loc, subject=d.name)
                for a in f.arguments:
                    if not _is_input(kinds, a.type.named_type):
                        error(
                            f"argument {d.name}.{f.name}({a.name}) has output type {a.type.named_type}",
                            a.loc,
                            subject=d.name,
                        )
        elif isinstance(d, n.UnionType):
            if not d.members:
                error(f"union {d.name} has no members", d.loc, subject=d.name)
            for m in d.members:
                target = kinds.get(m)
                if m in n.BUILTIN_SCALARS or (target is not None and not isinstance(target, n.ObjectType)):
                    error(f"union {d.name} member {m} is not an object type", d.loc, subject=d.name)
        elif isinstance(d, n.EnumType):
            if not d.values:
                error(f"enum {d.name} has no values", d.loc, subject=d.name)
            for name in _duplicates(v.name for v in d.values):
                error(f"duplicate enum value {d.name}.{name}", d.loc, subject=d.name)
        elif isinstance(d, n.InputObjectType):
            if not d.fields:
                error(f"input {d.name} must define one or more fields", d.loc, subject=d.name)
            for name in _duplicates(f.name for f in d.fields):
                error(f"duplicate input field {d.name}.{name}", d.loc, subject=d.name)
            for f in d.fields:
                if not _is_input(kinds, f.type.named_type):
                    error(
                        f"input field {d.name}.{f.name} has output type {f.type.named_type}",
                        f.loc,
                        subject=d.name,
                    )
        elif isinstance(d, n.DirectiveDefinition):
            for a in d.arguments:
                if not _is_input(kinds, a.type.named_type):
                    error(f"argument @{d.name}({a.name}) has output type", a.loc, subject=d.name)
