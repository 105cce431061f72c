"""Random schema generation, renaming and partitioning for property tests.

Every generated schema validates and every type is referenced, directly or
transitively, from the query root, so splitting it across files and
recovering it must give back the full definition set.
"""

from __future__ import annotations

import random
from dataclasses import replace

from .sdl import (
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
    print_document,
)

_WORDS = (
    "account alpha beta branch card cart city comment delta entry event file flag group item label "
    "layer media member node order owner page place post price record repo review scope seat shelf "
    "shop story tag task team ticket topic track user value venue wallet zone"
).split()

_SCALARS = ("Int", "Float", "String", "Boolean", "ID")


def _camel(rng: random.Random, parts: int = 2) -> str:
    words = rng.sample(_WORDS, parts)
    return words[0] + "".join(w.capitalize() for w in words[1:])


def _wrap(rng: random.Random, list_prob: float, nested: bool) -> tuple[Wrapper, ...]:
    wrappers: list[Wrapper] = []
    if rng.random() < 0.3:
        wrappers.append(Wrapper.NON_NULL)
    if rng.random() < list_prob:
        wrappers.append(Wrapper.LIST)
        if nested and rng.random() < 0.3:
            wrappers.append(Wrapper.LIST)
        if rng.random() < 0.3:
            wrappers.append(Wrapper.NON_NULL)
    return tuple(wrappers)


def generate_schema(
    rng: random.Random,
    object_types: int = 5,
    max_fields: int = 4,
    list_prob: float = 0.35,
    cycle_prob: float = 0.3,
    nested_lists: bool = True,
    extras: bool = True,
    mutation: bool | None = None,
) -> SchemaDocument:
    """A valid random schema with ``object_types`` objects besides Query."""
    names: list[str] = []
    while len(names) < object_types:
        name = _camel(rng, 1).capitalize() + rng.choice(_WORDS).capitalize()
        if name not in names and name not in ("Query", "Mutation"):
            names.append(name)

    use_interface = extras and object_types >= 3 and rng.random() < 0.5
    use_union = extras and object_types >= 2 and rng.random() < 0.4
    use_enum = extras and rng.random() < 0.5
    use_scalar = extras and rng.random() < 0.3
    use_directive = extras and rng.random() < 0.3
    if mutation is None:
        mutation = extras and rng.random() < 0.5

    leaf_types = list(_SCALARS)
    definitions = []
    enum_name = scalar_name = None
    if use_enum:
        enum_name = "Kind" + rng.choice(_WORDS).capitalize()
        values = rng.sample(["OPEN", "CLOSED", "PENDING", "DONE", "ACTIVE", "ARCHIVED"], rng.randint(1, 4))
        definitions.append(EnumType(enum_name, tuple(EnumValueDefinition(v) for v in values)))
    if use_scalar:
        scalar_name = rng.choice(["DateTime", "JSON", "Url", "Money"])
        definitions.append(ScalarType(scalar_name))
    if use_directive:
        definitions.append(
            DirectiveDefinition(
                "cost", ("FIELD_DEFINITION",), (InputValueDefinition("value", TypeReference("Int", (Wrapper.NON_NULL,))),)
            )
        )

    iface_name = "Node" + rng.choice(_WORDS).capitalize() if use_interface else None
    iface_fields = (FieldDefinition("id", TypeReference("ID", (Wrapper.NON_NULL,))),) if use_interface else ()
    implementers = set(rng.sample(names, rng.randint(1, min(3, len(names))))) if use_interface else set()
    union_name = "Result" + rng.choice(_WORDS).capitalize() if use_union else None
    union_members = tuple(rng.sample(names, rng.randint(1, min(3, len(names))))) if use_union else ()

    composite_order = ["Query"] + names
    # Referrer for each non-root type: an earlier type, guaranteeing reachability.
    targets: dict[str, list[str]] = {t: [] for t in composite_order}
    for j, name in enumerate(names, start=1):
        targets[rng.choice(composite_order[:j])].append(name)
    if use_interface:
        targets[rng.choice(composite_order)].append(iface_name)
    if use_union:
        targets[rng.choice(composite_order)].append(union_name)
    for j, name in enumerate(composite_order):
        if j > 0 and rng.random() < cycle_prob:
            targets[name].append(rng.choice(composite_order[1 : j + 1]))

    leaves = leaf_types + [t for t in (enum_name, scalar_name) if t]
    forced_leaves = [t for t in (enum_name, scalar_name) if t]

    def make_fields(owner: str) -> tuple[FieldDefinition, ...]:
        used = set()
        fields: list[FieldDefinition] = []

        def fresh() -> str:
            while True:
                nm = _camel(rng, rng.choice((1, 2)))
                if nm not in used and nm != "id":
                    used.add(nm)
                    return nm

        for t in targets[owner]:
            args = ()
            if rng.random() < 0.4:
                args = (InputValueDefinition(rng.choice(["first", "limit", "after", "filter"]), TypeReference("Int")),)
            fields.append(FieldDefinition(fresh(), TypeReference(t, _wrap(rng, list_prob, nested_lists)), args))
        if owner in implementers:
            fields = list(iface_fields) + fields
            used.add("id")
        for _ in range(rng.randint(1, max_fields)):
            directives = ()
            if use_directive and rng.random() < 0.2:
                directives = (AppliedDirective("cost", (("value", str(rng.randint(1, 9))),)),)
            fields.append(
                FieldDefinition(fresh(), TypeReference(rng.choice(leaves), _wrap(rng, 0.15, False)), (), directives)
            )
        return tuple(fields)

    # Guarantee the enum/scalar are referenced.
    query_fields = list(make_fields("Query"))
    for leaf in forced_leaves:
        query_fields.append(FieldDefinition("leaf" + leaf, TypeReference(leaf)))

    composites = [ObjectType("Query", tuple(query_fields))]
    for name in names:
        composites.append(ObjectType(name, make_fields(name), (iface_name,) if name in implementers else ()))
    if use_interface:
        composites.append(InterfaceType(iface_name, iface_fields))
    if use_union:
        composites.append(UnionType(union_name, union_members))

    if mutation:
        target = rng.choice(names)
        input_name = target + "Input"
        definitions.append(
            InputObjectType(
                input_name,
                tuple(
                    InputValueDefinition(nm, TypeReference(rng.choice(_SCALARS)))
                    for nm in rng.sample(["name", "title", "size", "note"], rng.randint(1, 3))
                ),
            )
        )
        composites.append(
            ObjectType(
                "Mutation",
                (
                    FieldDefinition(
                        "create" + target,
                        TypeReference(target),
                        (InputValueDefinition("input", TypeReference(input_name, (Wrapper.NON_NULL,))),),
                    ),
                ),
            )
        )

    all_defs = composites + definitions
    rng.shuffle(all_defs)
    # Keep Query first so the entry file of a partition is natural.
    all_defs.sort(key=lambda d: d.name != "Query")
    if mutation and rng.random() < 0.5:
        all_defs.insert(0, SchemaDefinition((("query", "Query"), ("mutation", "Mutation"))))
    return SchemaDocument(tuple(all_defs))


def rename(doc: SchemaDocument, type_map, field_map) -> SchemaDocument:
    """Rename types via ``type_map(name)`` and fields via ``field_map(type, name)``."""

    def ref(r: TypeReference) -> TypeReference:
        if r.named_type in _SCALARS:
            return r
        return replace(r, named_type=type_map(r.named_type))

    def input_values(values):
        return tuple(replace(v, type=ref(v.type)) for v in values)

    out = []
    for d in doc.definitions:
        if isinstance(d, SchemaDefinition):
            out.append(replace(d, operation_types=tuple((op, type_map(t)) for op, t in d.operation_types)))
        elif isinstance(d, (ObjectType, InterfaceType)):
            out.append(
                replace(
                    d,
                    name=type_map(d.name),
                    interfaces=tuple(type_map(i) for i in d.interfaces),
                    fields=tuple(
                        replace(f, name=field_map(d.name, f.name), return_type=ref(f.return_type), arguments=input_values(f.arguments))
                        for f in d.fields
                    ),
                )
            )
        elif isinstance(d, UnionType):
            out.append(replace(d, name=type_map(d.name), members=tuple(type_map(m) for m in d.members)))
        elif isinstance(d, InputObjectType):
            out.append(replace(d, name=type_map(d.name), fields=input_values(d.fields)))
        elif isinstance(d, (EnumType, ScalarType)):
            out.append(replace(d, name=type_map(d.name)))
        else:
            out.append(replace(d, arguments=input_values(d.arguments)))
    return doc.with_definitions(out)


def partition(doc: SchemaDocument, parts: int, rng: random.Random) -> list[tuple[str, str]]:
    """Split ``doc`` into ``parts`` SDL files; the first holds the query root.

    Returns ``(path, text)`` pairs with paths under a few random directories.
    """
    roots = {doc.root_type(op) for op in ("query", "mutation", "subscription")} - {None}
    buckets: list[list] = [[] for _ in range(parts)]
    rest = []
    for d in doc.definitions:
        if isinstance(d, SchemaDefinition) or getattr(d, "name", None) in roots:
            buckets[0].append(d)
        else:
            rest.append(d)
    rng.shuffle(rest)
    for i, d in enumerate(rest):
        # Fill every bucket at least once before scattering randomly.
        target = i + 1 if i + 1 < parts else rng.randrange(parts)
        buckets[target].append(d)
    dirs = ["", "schema/", "schema/types/", "graphql/", "src/api/"]
    files = []
    for i, bucket in enumerate(buckets):
        if not bucket:
            continue
        path = ("schema/" if i == 0 else rng.choice(dirs)) + (f"main.graphql" if i == 0 else f"part{i}.graphql")
        files.append((path, print_document(doc.with_definitions(bucket))))
    return files
