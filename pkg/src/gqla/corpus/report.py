"""Per-schema analyses and corpus-level tables."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from ..complexity import ComplexityClass, ComplexityReport, analyze
from ..errors import EmptyCorpus
from ..lint import LintReport, corpus_convention_summary, lint
from ..metrics import LARGE_THRESHOLD, SchemaStats, characteristics, corpus_aggregate, is_large
from ..pagination import PaginationReport, detect_pagination
from ..sdl import SchemaDocument

FEATURE_ROWS = ("has_interfaces", "has_unions", "has_custom_directives", "supports_subscription", "supports_mutation")


@dataclass(frozen=True)
class SchemaAnalysis:
    name: str | None
    stats: SchemaStats
    lint: LintReport
    complexity: ComplexityReport
    pagination: PaginationReport
    large: bool

    def to_dict(self) -> dict:
        return {
            "source": self.name,
            "stats": self.stats.to_dict(),
            "large": self.large,
            "lint": self.lint.to_dict(),
            "complexity": self.complexity.to_dict(),
            "pagination": self.pagination.to_dict(),
        }


def analyze_schema(doc: SchemaDocument, threshold: int = LARGE_THRESHOLD, query_only: bool = False) -> SchemaAnalysis:
    stats = characteristics(doc)
    return SchemaAnalysis(
        doc.source_name,
        stats,
        lint(doc),
        analyze(doc, query_only=query_only),
        detect_pagination(doc),
        is_large(stats, threshold),
    )


def _share(count: int, total: int) -> dict:
    return {"count": count, "proportion": count / total if total else 0.0}


def _characteristics(analyses: Sequence[SchemaAnalysis]) -> dict:
    agg = corpus_aggregate([a.stats for a in analyses])
    rows = {
        "median_object_types": agg.median_object_types,
        "median_input_object_types": agg.median_input_object_types,
        "median_fields_in_object_types": agg.median_fields_in_object_types,
        "median_fields_in_input_object_types": agg.median_fields_in_input_object_types,
    }
    for feature in FEATURE_ROWS:
        rows[feature] = _share(agg.feature_counts.get(feature, 0), agg.schema_count)
    return rows


def _worst_case(analyses: Sequence[SchemaAnalysis]) -> dict:
    total = len(analyses)
    tally = Counter(a.complexity.cls for a in analyses)
    rows = {cls.value: _share(tally.get(cls, 0), total) for cls in ComplexityClass}
    rows["polynomial_degrees"] = dict(
        sorted(Counter(a.complexity.K for a in analyses if a.complexity.cls is ComplexityClass.POLYNOMIAL).items())
    )
    return rows


def _pagination(analyses: Sequence[SchemaAnalysis]) -> dict:
    total = len(analyses)
    with_lists = [a for a in analyses if a.pagination.list_field_count > 0]
    with_conn = [a for a in analyses if a.pagination.connection_type_count > 0]

    def by_status(group, attr):
        counts = Counter(getattr(a.pagination, attr) for a in group)
        return {s: _share(counts.get(s, 0), total) for s in ("none", "some", "throughout")}

    return {
        "has_object_list_fields": _share(len(with_lists), total),
        "object_list_slicing": by_status(with_lists, "slicing_status"),
        "has_connection_types": _share(len(with_conn), total),
        "connection_slicing": by_status(with_conn, "connections_status"),
    }


def corpus_tables(analyses: Sequence[SchemaAnalysis]) -> dict:
    return {
        "schemas": len(analyses),
        "characteristics": _characteristics(analyses),
        "conventions": corpus_convention_summary([a.lint for a in analyses]),
        "worst_case": _worst_case(analyses),
        "pagination": _pagination(analyses),
    }


def corpus_report(
    docs: Sequence[SchemaDocument],
    threshold: int = LARGE_THRESHOLD,
    query_only: bool = False,
    include_schemas: bool = False,
) -> dict:
    """Aggregates for the whole corpus and for its large segment."""
    docs = list(docs)
    if not docs:
        raise EmptyCorpus("corpus_report needs at least one schema")
    analyses = [analyze_schema(d, threshold, query_only) for d in docs]
    large = [a for a in analyses if a.large]
    report = {
        "threshold": threshold,
        "all": corpus_tables(analyses),
        "large": corpus_tables(large) if large else None,
    }
    if include_schemas:
        report["per_schema"] = [a.to_dict() for a in analyses]
    return report
