"""Immutable AST for GraphQL type-system documents.

Equality on these nodes is structural: source locations and descriptions are
declared with ``compare=False`` so ``==`` ignores them.  Values (argument
defaults, applied directive arguments) are kept in their normalized printed
form, which makes them hashable and order-preserving.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Iterator, Union

BUILTIN_SCALARS = frozenset({"Int", "Float", "String", "Boolean", "ID"})
BUILTIN_DIRECTIVES = frozenset({"skip", "include", "deprecated"})


class Wrapper(enum.Enum):
    LIST = "LIST"
    NON_NULL = "NON_NULL"


@dataclass(frozen=True)
class Location:
    line: int
    column: int


@dataclass(frozen=True)
class TypeReference:
    """A named type plus its wrappers, outermost first."""

    named_type: str
    wrappers: tuple[Wrapper, ...] = ()

    def __post_init__(self):
        for outer, inner in zip(self.wrappers, self.wrappers[1:]):
            if outer is Wrapper.NON_NULL and inner is Wrapper.NON_NULL:
                raise ValueError("adjacent NON_NULL wrappers")

    @property
    def list_depth(self) -> int:
        return sum(1 for w in self.wrappers if w is Wrapper.LIST)

    @property
    def non_null(self) -> bool:
        return bool(self.wrappers) and self.wrappers[0] is Wrapper.NON_NULL

    def __str__(self) -> str:
        text = self.named_type
        for w in reversed(self.wrappers):
            text = f"[{text}]" if w is Wrapper.LIST else f"{text}!"
        return text

    @classmethod
    def of(cls, text: str) -> "TypeReference":
        """Build a reference from type syntax such as ``[Office!]!``."""
        text = text.strip()
        wrappers = []
        while True:
            if text.endswith("!"):
                wrappers.append(Wrapper.NON_NULL)
                text = text[:-1].strip()
            elif text.startswith("[") and text.endswith("]"):
                wrappers.append(Wrapper.LIST)
                text = text[1:-1].strip()
            else:
                break
        if not text.isidentifier():
            raise ValueError(f"not a type reference: {text!r}")
        return cls(text, tuple(wrappers))


@dataclass(frozen=True)
class AppliedDirective:
    name: str
    arguments: tuple[tuple[str, str], ...] = ()
    loc: Location | None = field(default=None, compare=False)

    def argument(self, name: str) -> str | None:
        for key, value in self.arguments:
            if key == name:
                return value
        return None


@dataclass(frozen=True)
class InputValueDefinition:
    """An argument of a field/directive, or a field of an input object type."""

    name: str
    type: TypeReference
    default: str | None = None
    directives: tuple[AppliedDirective, ...] = ()
    description: str | None = field(default=None, compare=False)
    loc: Location | None = field(default=None, compare=False)


ArgumentDefinition = InputValueDefinition


@dataclass(frozen=True)
class FieldDefinition:
    name: str
    return_type: TypeReference
    arguments: tuple[InputValueDefinition, ...] = ()
    directives: tuple[AppliedDirective, ...] = ()
    description: str | None = field(default=None, compare=False)
    loc: Location | None = field(default=None, compare=False)

    def argument(self, name: str) -> InputValueDefinition | None:
        for arg in self.arguments:
            if arg.name == name:
                return arg
        return None


@dataclass(frozen=True)
class EnumValueDefinition:
    name: str
    directives: tuple[AppliedDirective, ...] = ()
    description: str | None = field(default=None, compare=False)
    loc: Location | None = field(default=None, compare=False)


@dataclass(frozen=True)
class SchemaDefinition:
    operation_types: tuple[tuple[str, str], ...]
    directives: tuple[AppliedDirective, ...] = ()
    description: str | None = field(default=None, compare=False)
    loc: Location | None = field(default=None, compare=False)

    kind = "schema"
    name = None

    def root(self, operation: str) -> str | None:
        for op, type_name in self.operation_types:
            if op == operation:
                return type_name
        return None


@dataclass(frozen=True)
class ObjectType:
    name: str
    fields: tuple[FieldDefinition, ...] = ()
    interfaces: tuple[str, ...] = ()
    directives: tuple[AppliedDirective, ...] = ()
    description: str | None = field(default=None, compare=False)
    loc: Location | None = field(default=None, compare=False)

    kind = "object"


@dataclass(frozen=True)
class InterfaceType:
    name: str
    fields: tuple[FieldDefinition, ...] = ()
    interfaces: tuple[str, ...] = ()
    directives: tuple[AppliedDirective, ...] = ()
    description: str | None = field(default=None, compare=False)
    loc: Location | None = field(default=None, compare=False)

    kind = "interface"


@dataclass(frozen=True)
class UnionType:
    name: str
    members: tuple[str, ...] = ()
    directives: tuple[AppliedDirective, ...] = ()
    description: str | None = field(default=None, compare=False)
    loc: Location | None = field(default=None, compare=False)

    kind = "union"


@dataclass(frozen=True)
class EnumType:
    name: str
    values: tuple[EnumValueDefinition, ...] = ()
    directives: tuple[AppliedDirective, ...] = ()
    description: str | None = field(default=None, compare=False)
    loc: Location | None = field(default=None, compare=False)

    kind = "enum"


@dataclass(frozen=True)
class InputObjectType:
    name: str
    fields: tuple[InputValueDefinition, ...] = ()
    directives: tuple[AppliedDirective, ...] = ()
    description: str | None = field(default=None, compare=False)
    loc: Location | None = field(default=None, compare=False)

    kind = "input"


@dataclass(frozen=True)
class ScalarType:
    name: str
    directives: tuple[AppliedDirective, ...] = ()
    description: str | None = field(default=None, compare=False)
    loc: Location | None = field(default=None, compare=False)

    kind = "scalar"


@dataclass(frozen=True)
class DirectiveDefinition:
    name: str
    locations: tuple[str, ...]
    arguments: tuple[InputValueDefinition, ...] = ()
    repeatable: bool = False
    description: str | None = field(default=None, compare=False)
    loc: Location | None = field(default=None, compare=False)

    kind = "directive"


TypeDefinition = Union[ObjectType, InterfaceType, UnionType, EnumType, InputObjectType, ScalarType]
Definition = Union[SchemaDefinition, TypeDefinition, DirectiveDefinition]

TYPE_DEFINITION_CLASSES = (ObjectType, InterfaceType, UnionType, EnumType, InputObjectType, ScalarType)
OUTPUT_COMPOSITE_CLASSES = (ObjectType, InterfaceType, UnionType)


@dataclass(frozen=True)
class SchemaDocument:
    definitions: tuple[Definition, ...] = ()
    source_name: str | None = field(default=None, compare=False)

    def __iter__(self) -> Iterator[Definition]:
        return iter(self.definitions)

    def __len__(self) -> int:
        return len(self.definitions)

    @property
    def schema_definition(self) -> SchemaDefinition | None:
        for d in self.definitions:
            if isinstance(d, SchemaDefinition):
                return d
        return None

    @property
    def type_definitions(self) -> list[TypeDefinition]:
        return [d for d in self.definitions if isinstance(d, TYPE_DEFINITION_CLASSES)]

    @property
    def directive_definitions(self) -> list[DirectiveDefinition]:
        return [d for d in self.definitions if isinstance(d, DirectiveDefinition)]

    def types_by_name(self) -> dict[str, TypeDefinition]:
        """Type definitions keyed by name; the first wins on duplicates."""
        out: dict[str, TypeDefinition] = {}
        for d in self.type_definitions:
            out.setdefault(d.name, d)
        return out

    def of_kind(self, cls) -> list:
        return [d for d in self.definitions if isinstance(d, cls)]

    def root_type(self, operation: str = "query") -> str | None:
        """Name of the root type for ``operation``.

        An explicit schema definition is authoritative; without one, an
        object type literally named Query/Mutation/Subscription is the root.
        """
        schema = self.schema_definition
        if schema is not None:
            return schema.root(operation)
        conventional = operation.capitalize()
        for d in self.definitions:
            if isinstance(d, ObjectType) and d.name == conventional:
                return conventional
        return None

    def has_query_operation(self) -> bool:
        return self.root_type("query") is not None

    def defined_names(self) -> tuple[set[str], set[str]]:
        """Return (type names, directive names) defined by this document."""
        types = {d.name for d in self.type_definitions}
        directives = {d.name for d in self.directive_definitions}
        return types, directives

    def with_definitions(self, definitions) -> "SchemaDocument":
        return replace(self, definitions=tuple(definitions))


def implementers(doc: SchemaDocument) -> dict[str, list[str]]:
    """Map interface name to the object/interface types declaring it, in document order."""
    out: dict[str, list[str]] = {}
    for d in doc.definitions:
        if isinstance(d, (ObjectType, InterfaceType)):
            for iface in d.interfaces:
                out.setdefault(iface, []).append(d.name)
    return out


def iter_fields(doc: SchemaDocument) -> Iterator[tuple[ObjectType | InterfaceType, FieldDefinition]]:
    for d in doc.definitions:
        if isinstance(d, (ObjectType, InterfaceType)):
            for f in d.fields:
                yield d, f
