"""Type graph over the output composite types of a schema."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..sdl import InterfaceType, ObjectType, SchemaDocument, UnionType
from ..sdl.nodes import implementers


@dataclass(frozen=True)
class Edge:
    source: str
    target: str
    label: str
    weight: int
    expansion: bool = False

    @property
    def step(self) -> str:
        """Human-readable step, ``Type.field`` or ``Iface... on Impl``."""
        return f"{self.source}... on {self.target}" if self.expansion else f"{self.source}.{self.label}"


@dataclass(frozen=True)
class TypeGraph:
    nodes: frozenset[str]
    edges: tuple[Edge, ...]
    roots: tuple[str, ...]
    kinds: dict[str, str] = field(default_factory=dict, compare=False, hash=False)

    def out_edges(self) -> dict[str, list[Edge]]:
        adj: dict[str, list[Edge]] = {v: [] for v in self.nodes}
        for e in self.edges:
            adj[e.source].append(e)
        return adj

    def find(self, source: str, target: str, label: str | None = None) -> list[Edge]:
        return [
            e for e in self.edges if e.source == source and e.target == target and (label is None or e.label == label)
        ]


def build_type_graph(doc: SchemaDocument, query_only: bool = False) -> TypeGraph:
    """Build the graph reachable from the root operation types.

    Field edges carry the list depth of the field's return type; interface
    and union expansions carry weight 0.
    """
    composites = {
        d.name: d for d in reversed(doc.type_definitions) if isinstance(d, (ObjectType, InterfaceType, UnionType))
    }
    impls = implementers(doc)

    def edges_from(name: str) -> list[Edge]:
        d = composites[name]
        out = []
        if isinstance(d, (ObjectType, InterfaceType)):
            for f in d.fields:
                target = f.return_type.named_type
                if target in composites:
                    out.append(Edge(name, target, f.name, f.return_type.list_depth))
        if isinstance(d, InterfaceType):
            for impl in impls.get(name, ()):
                if impl in composites:
                    out.append(Edge(name, impl, impl, 0, expansion=True))
        elif isinstance(d, UnionType):
            for member in d.members:
                if member in composites:
                    out.append(Edge(name, member, member, 0, expansion=True))
        return out

    operations = ("query",) if query_only else ("query", "mutation", "subscription")
    roots = []
    for op in operations:
        r = doc.root_type(op)
        if r is not None and r in composites and r not in roots:
            roots.append(r)

    seen = set(roots)
    queue = deque(roots)
    edges: list[Edge] = []
    while queue:
        v = queue.popleft()
        for e in edges_from(v):
            edges.append(e)
            if e.target not in seen:
                seen.add(e.target)
                queue.append(e.target)
    return TypeGraph(frozenset(seen), tuple(edges), tuple(roots), {k: composites[k].kind for k in seen})
