"""Brute-force worst-case response size for tiny schemas.

Every query with exactly ``n`` fields is enumerated and executed against
synthetic data in which each list holds exactly ``D`` elements.  Abstract
types resolve adversarially to whichever concrete type yields the largest
response.  Used only to check the closed-form bound; exponential in every
parameter, hence the guard.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

from ..errors import GuardExceeded
from ..sdl import InterfaceType, ObjectType, SchemaDocument, UnionType, Wrapper

MAX_TYPES = 10
MAX_FIELDS = 8
MAX_LIST_LENGTH = 4


@dataclass(frozen=True)
class FieldSelection:
    name: str
    selection: tuple | None = None


@dataclass(frozen=True)
class InlineFragment:
    type_condition: str
    selection: tuple


Selection = tuple[Union[FieldSelection, InlineFragment], ...]


def render(selection: Selection) -> str:
    parts = []
    for item in selection:
        if isinstance(item, InlineFragment):
            parts.append(f"... on {item.type_condition} {render(item.selection)}")
        elif item.selection:
            parts.append(f"{item.name} {render(item.selection)}")
        else:
            parts.append(item.name)
    return "{ " + " ".join(parts) + " }"


def count_fields(selection: Selection) -> int:
    total = 0
    for item in selection:
        if isinstance(item, FieldSelection):
            total += 1
        if item.selection:
            total += count_fields(item.selection)
    return total


def count_response(value) -> int:
    """Number of field entries in a response value, at any depth."""
    if isinstance(value, dict):
        return len(value) + sum(count_response(v) for v in value.values())
    if isinstance(value, list):
        return sum(count_response(v) for v in value)
    return 0


@dataclass(frozen=True)
class OracleResult:
    size: int
    query: str | None
    queries: int


class _Oracle:
    def __init__(self, doc: SchemaDocument, list_length: int):
        self.doc = doc
        self.d = list_length
        self.composites = {
            t.name: t for t in reversed(doc.type_definitions) if isinstance(t, (ObjectType, InterfaceType, UnionType))
        }
        self.possible: dict[str, tuple[str, ...]] = {}
        for name, t in self.composites.items():
            if isinstance(t, ObjectType):
                self.possible[name] = (name,)
            elif isinstance(t, UnionType):
                self.possible[name] = tuple(m for m in t.members if isinstance(self.composites.get(m), ObjectType))
            else:
                self.possible[name] = tuple(
                    o.name for o in doc.of_kind(ObjectType) if name in o.interfaces and self.composites.get(o.name) is o
                )
        self._enumerate = lru_cache(maxsize=None)(self._enumerate_uncached)
        self._execute = lru_cache(maxsize=None)(self._execute_uncached)

    # -- enumeration -------------------------------------------------------

    def _options(self, type_name: str) -> list[tuple[str, str | None]]:
        """Selectable items on a type: ("field", name) or ("fragment", object)."""
        t = self.composites[type_name]
        opts: list[tuple[str, str | None]] = []
        if isinstance(t, (ObjectType, InterfaceType)):
            seen = set()
            for f in t.fields:
                if f.name not in seen:
                    seen.add(f.name)
                    opts.append(("field", f.name))
        if not isinstance(t, ObjectType):
            opts.extend(("fragment", o) for o in self.possible[type_name])
        return opts

    def _field_def(self, type_name: str, field_name: str):
        for f in self.composites[type_name].fields:
            if f.name == field_name:
                return f
        return None

    def _enumerate_uncached(self, type_name: str, budget: int) -> tuple[Selection, ...]:
        """All selections on ``type_name`` with exactly ``budget`` fields."""
        opts = self._options(type_name)
        out: list[Selection] = []

        def item_variants(opt, cost: int) -> Iterator:
            kind, name = opt
            if kind == "fragment":
                for sub in self._enumerate(name, cost):
                    yield InlineFragment(name, sub)
                return
            f = self._field_def(type_name, name)
            target = f.return_type.named_type
            if target in self.composites:
                if cost >= 2:
                    for sub in self._enumerate(target, cost - 1):
                        yield FieldSelection(name, sub)
            elif cost == 1:
                yield FieldSelection(name)

        def walk(i: int, remaining: int, acc: list) -> None:
            if remaining == 0:
                if acc:
                    out.append(tuple(acc))
                return
            if i == len(opts):
                return
            walk(i + 1, remaining, acc)
            for cost in range(1, remaining + 1):
                for variant in item_variants(opts[i], cost):
                    acc.append(variant)
                    walk(i + 1, remaining - cost, acc)
                    acc.pop()

        walk(0, budget, [])
        return tuple(out)

    # -- execution ---------------------------------------------------------

    def _collect(self, selection: Selection, runtime: str) -> dict[str, list[Selection | None]]:
        grouped: dict[str, list] = {}
        for item in selection:
            if isinstance(item, FieldSelection):
                grouped.setdefault(item.name, []).append(item.selection)
            elif item.type_condition == runtime:
                for name, subs in self._collect(item.selection, runtime).items():
                    grouped.setdefault(name, []).extend(subs)
        return grouped

    def _execute_uncached(self, selection: Selection, type_name: str):
        """Materialize the response for ``selection`` on a value of ``type_name``."""
        candidates = self.possible.get(type_name, ())
        best, best_size = None, -1
        for runtime in candidates:
            obj = {}
            for name, subs in self._collect(selection, runtime).items():
                f = self._field_def(runtime, name) or self._field_def(type_name, name)
                obj[name] = self._resolve(f, subs)
            size = count_response(obj)
            if size > best_size:
                best, best_size = obj, size
        return best

    def _resolve(self, f, subs):
        target = f.return_type.named_type
        if target in self.composites:
            merged = tuple(item for sub in subs if sub for item in sub)
            leaf = self._execute(merged, target)
        else:
            leaf = "x"
        for w in reversed(f.return_type.wrappers):
            if w is Wrapper.LIST:
                leaf = [leaf] * self.d
        return leaf

    def search(self, root: str, n: int) -> OracleResult:
        best, best_query, total = 0, None, 0
        for query in self._enumerate(root, n):
            total += 1
            size = count_response(self._execute(query, root))
            if size > best:
                best, best_query = size, render(query)
        return OracleResult(best, best_query, total)


def _guard(doc: SchemaDocument, n: int, d: int) -> None:
    composites = [t for t in doc.type_definitions if isinstance(t, (ObjectType, InterfaceType, UnionType))]
    if len(composites) > MAX_TYPES or n > MAX_FIELDS or d > MAX_LIST_LENGTH or n < 1 or d < 1:
        raise GuardExceeded(
            f"oracle limited to <= {MAX_TYPES} composite types, 1 <= n <= {MAX_FIELDS}, "
            f"1 <= D <= {MAX_LIST_LENGTH} (got {len(composites)}, n={n}, D={d})"
        )


def oracle_search(doc: SchemaDocument, n: int, d: int) -> OracleResult:
    """Maximum response size over all queries of exactly ``n`` fields, with the maximizer."""
    _guard(doc, n, d)
    root = doc.root_type("query")
    oracle = _Oracle(doc, d)
    if root is None or root not in oracle.composites:
        return OracleResult(0, None, 0)
    return oracle.search(root, n)


def oracle_worst_case(doc: SchemaDocument, n: int, d: int) -> int:
    return oracle_search(doc, n, d).size
