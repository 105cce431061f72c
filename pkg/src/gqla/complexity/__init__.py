from .bound import response_bound
from .classify import ComplexityClass, ComplexityReport, class_for_k, classify, strongly_connected_components
from .graph import Edge, TypeGraph, build_type_graph
from .oracle import OracleResult, oracle_search, oracle_worst_case


def analyze(doc, query_only: bool = False) -> ComplexityReport:
    return classify(build_type_graph(doc, query_only=query_only))


__all__ = [
    "ComplexityClass",
    "ComplexityReport",
    "Edge",
    "OracleResult",
    "TypeGraph",
    "analyze",
    "build_type_graph",
    "class_for_k",
    "classify",
    "oracle_search",
    "oracle_worst_case",
    "response_bound",
    "strongly_connected_components",
]
