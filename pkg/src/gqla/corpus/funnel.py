"""The filter funnel from raw search hits to valid, unique schemas."""

from __future__ import annotations

import json
import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

from ..errors import SchemaParseError
from ..recovery import CandidateFile, RecoveryStatus, recover
from ..sdl import SchemaDocument, Status, ast_equivalent, canonicalize, parse, print_document, validate
from ..sdl.parse import is_pure_schema
from .search import SearchHit

log = logging.getLogger(__name__)

STAGES = (
    "search_result_files",
    "unique_files",
    "sdl_files",
    "pure_schemas",
    "complete_or_recovered",
    "valid_schemas",
    "valid_unique_schemas",
)


@dataclass(frozen=True)
class CorpusFile:
    url: str
    path: str
    repository: str
    content: str

    @classmethod
    def from_hit(cls, hit: SearchHit) -> "CorpusFile":
        return cls(hit.url, hit.path, hit.repository, hit.content)


@dataclass
class Disposition:
    url: str
    repository: str
    path: str
    survived: bool
    stage: str
    reason: str = ""
    appended_paths: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class CorpusFunnel:
    counts: dict[str, int]
    dispositions: list[Disposition]

    def to_dict(self) -> dict:
        return {
            "counts": {stage: self.counts[stage] for stage in STAGES},
            "recovered": sum(1 for d in self.dispositions if d.survived and d.appended_paths),
        }

    def write_dispositions(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for d in self.dispositions:
                fh.write(json.dumps(d.to_dict(), sort_keys=True) + "\n")


@dataclass
class FunnelResult:
    funnel: CorpusFunnel
    documents: list[SchemaDocument]

    def survivors_as_files(self) -> list[CorpusFile]:
        """Surviving schemas re-serialized as files, e.g. to re-run the funnel."""
        by_url = {d.url: d for d in self.funnel.dispositions}
        out = []
        for doc in self.documents:
            disp = by_url[doc.source_name]
            out.append(CorpusFile(disp.url, disp.path, disp.repository, print_document(doc)))
        return out


def _parse_stage(content: str) -> tuple[str, object]:
    """("ok", document) | ("unparsable", msg) | ("executable", msg)."""
    try:
        if not is_pure_schema(content):
            return "executable", "contains executable definitions"
        return "ok", parse(content)
    except SchemaParseError as exc:
        return "unparsable", str(exc)


def run_funnel(
    files: Iterable[CorpusFile | SearchHit],
    canonical_dedup: bool = False,
    jobs: int = 1,
) -> FunnelResult:
    files = [f if isinstance(f, CorpusFile) else CorpusFile.from_hit(f) for f in files]
    counts = dict.fromkeys(STAGES, 0)
    counts["search_result_files"] = len(files)
    dispositions: dict[int, Disposition] = {}

    def drop(i: int, stage: str, reason: str, **extra) -> None:
        f = files[i]
        dispositions[i] = Disposition(f.url, f.repository, f.path, False, stage, reason, **extra)

    seen_urls: set[str] = set()
    unique: list[int] = []
    for i, f in enumerate(files):
        if f.url in seen_urls:
            drop(i, "unique_files", "duplicate URL")
        else:
            seen_urls.add(f.url)
            unique.append(i)
    counts["unique_files"] = len(unique)

    contents = [files[i].content for i in unique]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parsed = list(pool.map(_parse_stage, contents, chunksize=16))
    else:
        parsed = [_parse_stage(c) for c in contents]

    docs: dict[int, SchemaDocument] = {}
    for i, (kind, payload) in zip(unique, parsed):
        if kind == "unparsable":
            drop(i, "sdl_files", f"parse error: {payload}")
        elif kind == "executable":
            drop(i, "pure_schemas", payload)
        else:
            docs[i] = SchemaDocument(payload.definitions, source_name=files[i].url)
    counts["sdl_files"] = len(unique) - sum(1 for k, _ in parsed if k == "unparsable")
    counts["pure_schemas"] = len(docs)

    pools: dict[str, list[CandidateFile]] = defaultdict(list)
    for i, doc in docs.items():
        pools[files[i].repository].append(CandidateFile(files[i].path, doc))

    complete: dict[int, tuple[SchemaDocument, list[str]]] = {}
    for i, doc in docs.items():
        result = validate(doc)
        if not doc.has_query_operation():
            drop(i, "complete_or_recovered", "incomplete: no query operation")
        elif not result.missing_references:
            complete[i] = (doc, [])
        else:
            entry = CandidateFile(files[i].path, doc)
            outcome = recover(entry, [c for c in pools[files[i].repository] if c.path != entry.path])
            if outcome.status is RecoveryStatus.RECOVERED:
                complete[i] = (SchemaDocument(outcome.merged.definitions, source_name=files[i].url), list(outcome.appended_paths))
            else:
                drop(
                    i,
                    "complete_or_recovered",
                    f"unresolvable ({outcome.reason}): {', '.join(sorted(outcome.unresolved))}",
                    appended_paths=list(outcome.appended_paths),
                )
    counts["complete_or_recovered"] = len(complete)

    valid: list[int] = []
    for i, (doc, appended) in complete.items():
        result = validate(doc)
        if result.status is Status.VALID:
            valid.append(i)
        else:
            first = next(d.message for d in result.diagnostics if d.severity == "error")
            drop(i, "valid_schemas", f"invalid: {first}", appended_paths=appended)
    counts["valid_schemas"] = len(valid)

    kept: list[int] = []
    kept_keys: dict = {}
    for i in sorted(valid, key=lambda i: files[i].url):
        doc, appended = complete[i]
        key = canonicalize(doc).definitions if canonical_dedup else doc.definitions
        if key in kept_keys:
            drop(i, "valid_unique_schemas", f"AST duplicate of {files[kept_keys[key]].url}", appended_paths=appended)
            continue
        kept_keys[key] = i
        kept.append(i)
        f = files[i]
        dispositions[i] = Disposition(f.url, f.repository, f.path, True, "valid_unique_schemas", "", appended)
    counts["valid_unique_schemas"] = len(kept)

    funnel = CorpusFunnel(counts, [dispositions[i] for i in range(len(files))])
    documents = [complete[i][0] for i in sorted(kept)]
    return FunnelResult(funnel, documents)


def find_duplicates(docs: Sequence[SchemaDocument], canonical: bool = False) -> list[tuple[int, int]]:
    """Pairs (later, earlier) of AST-equivalent documents, by brute-force comparison."""
    pairs = []
    for j in range(len(docs)):
        for i in range(j):
            if ast_equivalent(docs[i], docs[j], canonical=canonical):
                pairs.append((j, i))
                break
    return pairs
