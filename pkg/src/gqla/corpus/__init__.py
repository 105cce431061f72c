from .funnel import STAGES, CorpusFile, CorpusFunnel, Disposition, FunnelResult, run_funnel
from .introspection import INTROSPECTION_QUERY, from_introspection, introspect
from .report import analyze_schema, corpus_report
from .search import (
    GitHubCodeSearch,
    RangeExhaustedWarning,
    ReplayProvider,
    SearchHit,
    SearchProvider,
    SizeRangeQuery,
    partition_search_queries,
)

__all__ = [
    "INTROSPECTION_QUERY",
    "STAGES",
    "CorpusFile",
    "CorpusFunnel",
    "Disposition",
    "FunnelResult",
    "GitHubCodeSearch",
    "RangeExhaustedWarning",
    "ReplayProvider",
    "SearchHit",
    "SearchProvider",
    "SizeRangeQuery",
    "analyze_schema",
    "corpus_report",
    "from_introspection",
    "introspect",
    "partition_search_queries",
    "run_funnel",
]
