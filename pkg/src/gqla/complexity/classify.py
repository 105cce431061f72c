"""Worst-case response-size classification of a type graph.

A cycle through a list-typed field lets a query nest lists as deeply as its
size allows, so the response grows exponentially.  Without such a cycle the
graph of strongly connected components is a DAG whose longest weighted path
from a root gives K, the maximal number of nested object lists.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field

from .graph import Edge, TypeGraph


class ComplexityClass(str, enum.Enum):
    LINEAR_IN_N = "linear-n"
    LINEAR_IN_ND = "linear-nd"
    QUADRATIC = "quadratic"
    POLYNOMIAL = "polynomial"
    EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class ComplexityReport:
    cls: ComplexityClass
    K: int | None
    witness: tuple[Edge, ...]
    approach: tuple[Edge, ...] = field(default=())

    @property
    def rank(self) -> float:
        """Total order LINEAR_IN_N < ... < POLYNOMIAL(K) < EXPONENTIAL."""
        return float("inf") if self.cls is ComplexityClass.EXPONENTIAL else float(self.K)

    @property
    def formula(self) -> str:
        if self.cls is ComplexityClass.EXPONENTIAL:
            return "O(D^(n-1))"
        if self.K == 0:
            return "O(n)"
        if self.K == 1:
            return "O(n*D)"
        return f"O(n*D^{self.K})"

    def to_dict(self) -> dict:
        return {
            "class": self.cls.value,
            "K": self.K,
            "formula": self.formula,
            "witness": [e.step for e in self.witness],
            "path_to_cycle": [e.step for e in self.approach],
        }


def class_for_k(k: int) -> ComplexityClass:
    if k == 0:
        return ComplexityClass.LINEAR_IN_N
    if k == 1:
        return ComplexityClass.LINEAR_IN_ND
    if k == 2:
        return ComplexityClass.QUADRATIC
    return ComplexityClass.POLYNOMIAL


def strongly_connected_components(nodes, adjacency: dict[str, list[Edge]]) -> list[list[str]]:
    """Tarjan's algorithm, iterative.  Components come out in reverse topological order."""
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    components: list[list[str]] = []
    counter = 0

    for start in sorted(nodes):
        if start in index:
            continue
        work = [(start, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            out = adjacency.get(v, [])
            descended = False
            while i < len(out):
                w = out[i].target
                i += 1
                if w not in index:
                    work.append((v, i))
                    work.append((w, 0))
                    descended = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                components.append(comp)
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return components


def _bfs_path(adjacency, source: str, target: str, allowed: set[str]) -> list[Edge]:
    """Shortest edge path from source to target staying inside ``allowed``."""
    if source == target:
        return []
    prev: dict[str, Edge] = {}
    queue = deque([source])
    seen = {source}
    while queue:
        v = queue.popleft()
        for e in adjacency.get(v, []):
            if e.target in allowed and e.target not in seen:
                seen.add(e.target)
                prev[e.target] = e
                if e.target == target:
                    path = []
                    node = target
                    while node != source:
                        step = prev[node]
                        path.append(step)
                        node = step.source
                    return path[::-1]
                queue.append(e.target)
    raise ValueError(f"no path {source} -> {target}")


def classify(graph: TypeGraph) -> ComplexityReport:
    adjacency = graph.out_edges()
    components = strongly_connected_components(graph.nodes, adjacency)
    comp_of = {v: i for i, comp in enumerate(components) for v in comp}

    # Exponential: some list-bearing edge inside a component.
    for e in sorted(graph.edges, key=lambda e: (e.source, e.label, e.target)):
        if e.weight >= 1 and comp_of[e.source] == comp_of[e.target]:
            members = set(components[comp_of[e.source]])
            cycle = [e] + _bfs_path(adjacency, e.target, e.source, members)
            approach = _path_from_roots(graph, adjacency, e.source)
            return ComplexityReport(ComplexityClass.EXPONENTIAL, None, tuple(cycle), tuple(approach))

    # Longest path over the condensation; Tarjan emits sinks first.
    best: dict[int, int] = {}
    via: dict[int, Edge] = {}
    for r in graph.roots:
        best[comp_of[r]] = 0
    for ci in reversed(range(len(components))):
        if ci not in best:
            continue
        for v in components[ci]:
            for e in adjacency[v]:
                cj = comp_of[e.target]
                if cj == ci:
                    continue
                cand = best[ci] + e.weight
                if cj not in best or cand > best[cj]:
                    best[cj] = cand
                    via[cj] = e
    if not best:
        return ComplexityReport(ComplexityClass.LINEAR_IN_N, 0, ())
    k = max(best.values())
    end = min(ci for ci, b in best.items() if b == k)
    witness = _expand_component_path(graph, adjacency, components, comp_of, via, end)
    return ComplexityReport(class_for_k(k), k, tuple(witness))


def _expand_component_path(graph, adjacency, components, comp_of, via, end: int) -> list[Edge]:
    """Turn the chain of inter-component edges into a node-level path."""
    chain: list[Edge] = []
    ci = end
    while ci in via:
        e = via[ci]
        chain.append(e)
        ci = comp_of[e.source]
    chain.reverse()
    start = next(r for r in graph.roots if comp_of[r] == ci)
    path: list[Edge] = []
    here = start
    for e in chain:
        members = set(components[comp_of[e.source]])
        path.extend(_bfs_path(adjacency, here, e.source, members))
        path.append(e)
        here = e.target
    return path


def _path_from_roots(graph: TypeGraph, adjacency, target: str) -> list[Edge]:
    for r in graph.roots:
        try:
            return _bfs_path(adjacency, r, target, set(graph.nodes))
        except ValueError:
            continue
    return []
