"""Schema characteristics, feature use, and the definition-count size measure."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Sequence

from .errors import EmptyCorpus
from .sdl import (
    BUILTIN_DIRECTIVES,
    DirectiveDefinition,
    InputObjectType,
    InterfaceType,
    ObjectType,
    SchemaDefinition,
    SchemaDocument,
    UnionType,
)

LARGE_THRESHOLD = 36

FEATURES = ("has_interfaces", "has_unions", "has_custom_directives", "supports_subscription", "supports_mutation")


@dataclass(frozen=True)
class SchemaStats:
    definition_count: int
    object_type_count: int
    input_object_type_count: int
    fields_per_object_type: tuple[int, ...]
    fields_per_input_type: tuple[int, ...]
    has_interfaces: bool
    has_unions: bool
    has_custom_directives: bool
    supports_mutation: bool
    supports_subscription: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["fields_per_object_type"] = list(self.fields_per_object_type)
        d["fields_per_input_type"] = list(self.fields_per_input_type)
        d["median_fields_per_object_type"] = lower_median(self.fields_per_object_type)
        d["median_fields_per_input_type"] = lower_median(self.fields_per_input_type)
        return d


def characteristics(doc: SchemaDocument, include_schema_definition: bool = True) -> SchemaStats:
    defs = doc.definitions
    if not include_schema_definition:
        defs = tuple(d for d in defs if not isinstance(d, SchemaDefinition))
    objects = doc.of_kind(ObjectType)
    inputs = doc.of_kind(InputObjectType)
    return SchemaStats(
        definition_count=len(defs),
        object_type_count=len(objects),
        input_object_type_count=len(inputs),
        fields_per_object_type=tuple(len(o.fields) for o in objects),
        fields_per_input_type=tuple(len(i.fields) for i in inputs),
        has_interfaces=bool(doc.of_kind(InterfaceType)),
        has_unions=bool(doc.of_kind(UnionType)),
        has_custom_directives=any(d.name not in BUILTIN_DIRECTIVES for d in doc.of_kind(DirectiveDefinition)),
        supports_mutation=doc.root_type("mutation") is not None,
        supports_subscription=doc.root_type("subscription") is not None,
    )


def is_large(stats: SchemaStats, threshold: int = LARGE_THRESHOLD) -> bool:
    return stats.definition_count > threshold


def lower_median(values: Sequence[int]) -> int | None:
    """Median that picks the lower middle element of an even-length list."""
    if not values:
        return None
    ordered = sorted(values)
    return ordered[(len(ordered) - 1) // 2]


@dataclass(frozen=True)
class CorpusStats:
    schema_count: int
    median_object_types: int
    median_input_object_types: int
    median_fields_in_object_types: int | None
    median_fields_in_input_object_types: int | None
    feature_counts: dict[str, int]
    feature_proportions: dict[str, float]

    def to_dict(self) -> dict:
        return asdict(self)


def corpus_aggregate(all_stats: Sequence[SchemaStats]) -> CorpusStats:
    all_stats = list(all_stats)
    if not all_stats:
        raise EmptyCorpus("corpus_aggregate needs at least one schema")
    total = len(all_stats)
    counts = {f: sum(1 for s in all_stats if getattr(s, f)) for f in FEATURES}
    return CorpusStats(
        schema_count=total,
        median_object_types=lower_median([s.object_type_count for s in all_stats]),
        median_input_object_types=lower_median([s.input_object_type_count for s in all_stats]),
        median_fields_in_object_types=lower_median([k for s in all_stats for k in s.fields_per_object_type]),
        median_fields_in_input_object_types=lower_median([k for s in all_stats for k in s.fields_per_input_type]),
        feature_counts=counts,
        feature_proportions={f: c / total for f, c in counts.items()},
    )
