"""Reassemble schemas whose definitions are spread over several files.

Starting from an entry file that declares a query operation, missing type and
directive definitions are looked up in the other files of the same
repository and whole files are appended until the document validates, or
until some reference cannot be resolved.
"""

from __future__ import annotations

import enum
import posixpath
from dataclasses import dataclass, field
from typing import Iterable

from .errors import PreconditionViolation
from .sdl import SchemaDocument, Status, validate


class RecoveryStatus(str, enum.Enum):
    ALREADY_COMPLETE = "already_complete"
    RECOVERED = "recovered"
    UNRESOLVABLE = "unresolvable"


@dataclass(frozen=True)
class CandidateFile:
    path: str
    document: SchemaDocument


@dataclass(frozen=True)
class RecoveryOutcome:
    status: RecoveryStatus
    merged: SchemaDocument | None = None
    appended_paths: tuple[str, ...] = ()
    unresolved: frozenset[str] = frozenset()
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "appended_paths": list(self.appended_paths),
            "unresolved": sorted(self.unresolved),
            "reason": self.reason,
        }


def _directory_parts(path: str) -> list[str]:
    directory = posixpath.dirname(posixpath.normpath(path))
    return [p for p in directory.split("/") if p and p != "."]


def directory_distance(p: str, q: str) -> int:
    """Tree distance between the directories holding ``p`` and ``q``."""
    a, b = _directory_parts(p), _directory_parts(q)
    common = 0
    for x, y in zip(a, b):
        if x != y:
            break
        common += 1
    return len(a) + len(b) - 2 * common


def _names(doc: SchemaDocument) -> set[str]:
    types, directives = doc.defined_names()
    return types | {"@" + d for d in directives}


def _defines(doc: SchemaDocument, name: str) -> bool:
    types, directives = doc.defined_names()
    return name in types or name in directives


def _conflicts(current: SchemaDocument, addition: SchemaDocument) -> set[str]:
    clash = {name.lstrip("@") for name in _names(current) & _names(addition)}
    if current.schema_definition is not None and addition.schema_definition is not None:
        clash.add("schema")
    return clash


def recover(entry: CandidateFile, pool: Iterable[CandidateFile]) -> RecoveryOutcome:
    """Append pool files defining missing references until the entry validates.

    Ties between several defining files are broken by directory distance to
    the entry, then by path.  A file is appended at most once.
    """
    if not entry.document.has_query_operation():
        raise PreconditionViolation(f"{entry.path}: entry has no query operation")
    pool = sorted((c for c in pool if c.path != entry.path), key=lambda c: c.path)

    working = entry.document
    appended: list[str] = []
    used: set[str] = set()

    while True:
        result = validate(working)
        if result.status is Status.VALID:
            status = RecoveryStatus.RECOVERED if appended else RecoveryStatus.ALREADY_COMPLETE
            return RecoveryOutcome(status, working, tuple(appended))
        missing = result.missing_references
        if not missing:
            if not appended:
                # Complete on its own; validity is judged downstream.
                return RecoveryOutcome(
                    RecoveryStatus.ALREADY_COMPLETE, working, (), reason="complete but invalid"
                )
            return RecoveryOutcome(
                RecoveryStatus.UNRESOLVABLE,
                working,
                tuple(appended),
                frozenset(result.error_subjects()),
                reason="merged schema is invalid",
            )

        candidates = {
            name: [c for c in pool if c.path not in used and _defines(c.document, name)] for name in missing
        }
        orphans = {name for name, found in candidates.items() if not found}
        if orphans:
            return RecoveryOutcome(
                RecoveryStatus.UNRESOLVABLE, working, tuple(appended), frozenset(orphans), reason="no defining file"
            )

        progressed = False
        for name in sorted(missing):
            if _defines(working, name):
                continue
            options = [c for c in candidates[name] if c.path not in used]
            if not options:
                continue
            choice = min(options, key=lambda c: (directory_distance(entry.path, c.path), c.path))
            clash = _conflicts(working, choice.document)
            if clash:
                return RecoveryOutcome(
                    RecoveryStatus.UNRESOLVABLE,
                    working,
                    tuple(appended),
                    frozenset(clash),
                    reason=f"conflicting definitions in {choice.path}",
                )
            working = working.with_definitions(working.definitions + choice.document.definitions)
            appended.append(choice.path)
            used.add(choice.path)
            progressed = True

        if not progressed:
            return RecoveryOutcome(
                RecoveryStatus.UNRESOLVABLE,
                working,
                tuple(appended),
                frozenset(missing),
                reason="no progress",
            )
