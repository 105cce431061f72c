"""Name-based detection of slicing arguments and the connections pattern."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .sdl import InterfaceType, ObjectType, SchemaDocument, UnionType, Wrapper

SLICING_ARGUMENTS = frozenset({"first", "last", "limit", "size"})
CONNECTION_SUFFIXES = ("Connection", "Edge")


def pagination_status(applicable: int, sliced: int) -> str:
    if applicable == 0:
        return "not_applicable"
    if sliced == 0:
        return "none"
    if sliced == applicable:
        return "throughout"
    return "some"


@dataclass(frozen=True)
class PaginationReport:
    list_field_count: int
    sliced_list_fields: int
    connection_type_count: int
    connection_returning_fields: int
    sliced_connection_fields: int
    connection_types: tuple[str, ...] = ()
    unsliced_list_fields: tuple[str, ...] = ()

    @property
    def slicing_status(self) -> str:
        return pagination_status(self.list_field_count, self.sliced_list_fields)

    @property
    def connections_status(self) -> str:
        return pagination_status(self.connection_returning_fields, self.sliced_connection_fields)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["connection_types"] = list(self.connection_types)
        d["unsliced_list_fields"] = list(self.unsliced_list_fields)
        d["slicing_status"] = self.slicing_status
        d["connections_status"] = self.connections_status
        return d


def has_slicing_argument(field, names=SLICING_ARGUMENTS) -> bool:
    """An argument named like a slice bound whose type is ``Int`` or ``Int!``."""
    for arg in field.arguments:
        if arg.name in names and arg.type.named_type == "Int" and Wrapper.LIST not in arg.type.wrappers:
            return True
    return False


def detect_pagination(doc: SchemaDocument, slicing_names=SLICING_ARGUMENTS) -> PaginationReport:
    composites = {d.name for d in doc.type_definitions if isinstance(d, (ObjectType, InterfaceType, UnionType))}
    connection_types = sorted(
        {d.name for d in doc.type_definitions if d.name.endswith(CONNECTION_SUFFIXES)}
    )

    list_fields = sliced_lists = conn_fields = sliced_conn = 0
    unsliced = []
    for d in doc.definitions:
        if not isinstance(d, (ObjectType, InterfaceType)):
            continue
        for f in d.fields:
            sliced = has_slicing_argument(f, slicing_names)
            named = f.return_type.named_type
            if f.return_type.list_depth >= 1 and named in composites:
                list_fields += 1
                sliced_lists += sliced
                if not sliced:
                    unsliced.append(f"{d.name}.{f.name}")
            if named.endswith("Connection"):
                conn_fields += 1
                sliced_conn += sliced
    return PaginationReport(
        list_field_count=list_fields,
        sliced_list_fields=sliced_lists,
        connection_type_count=len(connection_types),
        connection_returning_fields=conn_fields,
        sliced_connection_fields=sliced_conn,
        connection_types=tuple(connection_types),
        unsliced_list_fields=tuple(unsliced),
    )
