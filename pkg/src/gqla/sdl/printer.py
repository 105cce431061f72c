"""Render a :class:`SchemaDocument` back to SDL text (2-space indent)."""

from __future__ import annotations

from graphql.language.block_string import print_block_string

from . import nodes as n

INDENT = "  "


def print_document(doc: n.SchemaDocument) -> str:
    blocks = [_definition(d) for d in doc.definitions]
    if not blocks:
        return ""
    return "\n\n".join(blocks) + "\n"


def _description(text: str | None, indent: str) -> str:
    if text is None:
        return ""
    block = print_block_string(text)
    return "".join(indent + line + "\n" if line else "\n" for line in block.split("\n"))


def _directives(directives) -> str:
    out = []
    for d in directives:
        if d.arguments:
            args = ", ".join(f"{k}: {v}" for k, v in d.arguments)
            out.append(f" @{d.name}({args})")
        else:
            out.append(f" @{d.name}")
    return "".join(out)


def _input_value(v: n.InputValueDefinition) -> str:
    text = f"{v.name}: {v.type}"
    if v.default is not None:
        text += f" = {v.default}"
    return text + _directives(v.directives)


def _arguments(args, indent: str) -> str:
    if not args:
        return ""
    if not any(a.description for a in args):
        return "(" + ", ".join(_input_value(a) for a in args) + ")"
    inner = indent + INDENT
    lines = [_description(a.description, inner) + inner + _input_value(a) for a in args]
    return "(\n" + "\n".join(lines) + "\n" + indent + ")"


def _field(f: n.FieldDefinition) -> str:
    return (
        _description(f.description, INDENT)
        + INDENT
        + f.name
        + _arguments(f.arguments, INDENT)
        + f": {f.return_type}"
        + _directives(f.directives)
    )


def _body(lines: list[str]) -> str:
    if not lines:
        return ""
    return " {\n" + "\n".join(lines) + "\n}"


def _implements(interfaces) -> str:
    return " implements " + " & ".join(interfaces) if interfaces else ""


def _definition(d: n.Definition) -> str:
    head = _description(d.description, "")
    if isinstance(d, n.SchemaDefinition):
        ops = [f"{INDENT}{op}: {name}" for op, name in d.operation_types]
        return head + "schema" + _directives(d.directives) + " {\n" + "\n".join(ops) + "\n}"
    if isinstance(d, n.ObjectType):
        return head + f"type {d.name}" + _implements(d.interfaces) + _directives(d.directives) + _body(
            [_field(f) for f in d.fields]
        )
    if isinstance(d, n.InterfaceType):
        return head + f"interface {d.name}" + _implements(d.interfaces) + _directives(d.directives) + _body(
            [_field(f) for f in d.fields]
        )
    if isinstance(d, n.UnionType):
        members = " = " + " | ".join(d.members) if d.members else ""
        return head + f"union {d.name}" + _directives(d.directives) + members
    if isinstance(d, n.EnumType):
        values = [_description(v.description, INDENT) + INDENT + v.name + _directives(v.directives) for v in d.values]
        return head + f"enum {d.name}" + _directives(d.directives) + _body(values)
    if isinstance(d, n.InputObjectType):
        fields = [_description(f.description, INDENT) + INDENT + _input_value(f) for f in d.fields]
        return head + f"input {d.name}" + _directives(d.directives) + _body(fields)
    if isinstance(d, n.ScalarType):
        return head + f"scalar {d.name}" + _directives(d.directives)
    if isinstance(d, n.DirectiveDefinition):
        repeatable = " repeatable" if d.repeatable else ""
        return (
            head
            + f"directive @{d.name}"
            + _arguments(d.arguments, "")
            + repeatable
            + " on "
            + " | ".join(d.locations)
        )
    raise TypeError(f"cannot print {type(d).__name__}")
