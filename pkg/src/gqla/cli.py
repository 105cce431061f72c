"""Command-line entry point.

Exit status: 0 success, 1 when the analysis itself reports a negative finding
(unparsable or invalid schema, unresolvable recovery), 2 on usage or I/O
errors.  JSON goes to stdout as one document; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Sequence

from . import __version__
from .complexity import ComplexityClass, analyze, response_bound
from .corpus import ReplayProvider, corpus_report, introspect, run_funnel
from .corpus.funnel import CorpusFile
from .errors import DomainError, GqlaError, IntrospectionDisabled, IntrospectionError, SchemaParseError
from .lint import DEFAULT_OFFENDER_CAP, lint
from .metrics import LARGE_THRESHOLD, characteristics, is_large
from .pagination import SLICING_ARGUMENTS, detect_pagination
from .recovery import CandidateFile, RecoveryStatus, recover
from .sdl import ast_equivalent, is_pure_schema, parse, print_document, validate

log = logging.getLogger("gqla")

EXIT_OK, EXIT_FINDING, EXIT_USAGE = 0, 1, 2
SDL_SUFFIXES = (".graphql", ".gql")


class UsageError(Exception):
    pass


# -- output -----------------------------------------------------------------


def _normalize(value):
    if isinstance(value, float):
        return round(value, 6)
    if isinstance(value, dict):
        return {str(k): _normalize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_normalize(v) for v in value]
    return value


def dumps(value) -> str:
    return json.dumps(_normalize(value), sort_keys=True, indent=2, ensure_ascii=False)


def _flatten(value, prefix: str = "") -> list[tuple[str, str]]:
    if isinstance(value, dict):
        rows = []
        for k in sorted(value):
            rows.extend(_flatten(value[k], f"{prefix}.{k}" if prefix else str(k)))
        return rows
    if isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        rows = []
        for i, v in enumerate(value):
            rows.extend(_flatten(v, f"{prefix}[{i}]"))
        return rows
    if isinstance(value, list):
        return [(prefix, ", ".join(str(v) for v in value))]
    return [(prefix, json.dumps(value) if value is None or isinstance(value, bool) else str(value))]


def render_table(value) -> str:
    rows = _flatten(_normalize(value))
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def emit(value, fmt: str) -> None:
    sys.stdout.write((render_table(value) if fmt == "table" else dumps(value)) + "\n")


# -- input ------------------------------------------------------------------


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except UnicodeDecodeError as exc:
        raise UsageError(f"{path} is not UTF-8") from exc


def expand_paths(paths: Sequence[str]) -> list[str]:
    out = []
    for p in paths:
        path = Path(p)
        if p != "-" and path.is_dir():
            out.extend(str(f) for f in sorted(path.rglob("*")) if f.is_file() and f.suffix in SDL_SUFFIXES)
        else:
            out.append(p)
    return out


def _per_file(fn: Callable[[str, argparse.Namespace], tuple[dict, bool]], args) -> int:
    """Run ``fn`` on every input; single input -> object, several -> array."""
    paths = expand_paths(args.files)
    if not paths:
        raise UsageError("no input files")
    texts = [read_text(p) for p in paths]
    jobs = getattr(args, "jobs", 1)
    if jobs > 1 and len(paths) > 1:
        # The handler closure is not picklable; workers only need the options.
        options = argparse.Namespace(**{k: v for k, v in vars(args).items() if k != "handler"})
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(fn, paths, texts, [options] * len(paths)))
    else:
        results = [fn(p, t, args) for p, t in zip(paths, texts)]
    reports = [r for r, _ in results]
    emit(reports[0] if len(reports) == 1 else reports, args.format)
    return EXIT_FINDING if any(not ok for _, ok in results) else EXIT_OK


def _load(path: str, text: str):
    """Parse or return an error report."""
    try:
        return parse(text, source_name=path), None
    except SchemaParseError as exc:
        log.error("%s: %s", path, exc)
        return None, {"source": path, "error": "parse_error", "message": exc.message, "line": exc.line, "column": exc.column}


# -- subcommands ------------------------------------------------------------


def _parse_one(path, text, args):
    doc, err = _load(path, text)
    if err:
        return err, False
    report = {
        "source": path,
        "pure_schema": is_pure_schema(text),
        "definition_count": len(doc),
        "definitions": [{"kind": d.kind, "name": d.name} for d in doc.definitions],
    }
    if args.sdl:
        report["sdl"] = print_document(doc)
    if args.compare:
        other = parse(read_text(args.compare), source_name=args.compare)
        report["equivalent"] = ast_equivalent(doc, other, canonical=args.canonical)
        report["canonical"] = args.canonical
    return report, True


def _validate_one(path, text, args):
    doc, err = _load(path, text)
    if err:
        return err, False
    result = validate(doc)
    report = {
        "source": path,
        "status": result.status.value,
        "missing_references": sorted(result.missing_references),
        "diagnostics": [
            {
                "severity": d.severity,
                "message": d.message,
                "line": d.location.line if d.location else None,
                "column": d.location.column if d.location else None,
            }
            for d in result.diagnostics
        ],
    }
    return report, result.ok


def _stats_one(path, text, args):
    doc, err = _load(path, text)
    if err:
        return err, False
    stats = characteristics(doc, include_schema_definition=not args.exclude_schema_definition)
    report = {"source": path, **stats.to_dict(), "large": is_large(stats, args.threshold), "threshold": args.threshold}
    return report, True


def _lint_one(path, text, args):
    doc, err = _load(path, text)
    if err:
        return err, False
    return {"source": path, "rules": lint(doc, infix_mutations=args.infix_mutations).to_dict(args.cap)}, True


def _complexity_one(path, text, args):
    doc, err = _load(path, text)
    if err:
        return err, False
    result = analyze(doc, query_only=args.query_only)
    report = {"source": path, **result.to_dict()}
    if args.n is not None or args.d is not None:
        if args.n is None or args.d is None:
            raise UsageError("--n and --d must be given together")
        exponential = result.cls is ComplexityClass.EXPONENTIAL
        k = args.n - 1 if exponential else result.K
        try:
            report["bound"] = {"n": args.n, "D": args.d, "K": k, "value": response_bound(args.n, k, args.d)}
        except DomainError as exc:
            raise UsageError(str(exc)) from exc
    return report, True


def _pagination_one(path, text, args):
    doc, err = _load(path, text)
    if err:
        return err, False
    names = frozenset(n.strip() for n in args.slicing_names.split(",") if n.strip())
    return {"source": path, **detect_pagination(doc, names).to_dict()}, True


def cmd_recover(args) -> int:
    root = Path(args.root)
    if not root.is_dir():
        raise UsageError(f"--root {args.root} is not a directory")
    pool: list[CandidateFile] = []
    for f in sorted(root.rglob("*")):
        if not f.is_file() or f.suffix not in SDL_SUFFIXES:
            continue
        rel = f.relative_to(root).as_posix()
        text = read_text(str(f))
        try:
            if is_pure_schema(text):
                pool.append(CandidateFile(rel, parse(text, source_name=rel)))
        except SchemaParseError as exc:
            log.warning("skipping unparsable %s: %s", rel, exc)

    by_path = {c.path: c for c in pool}
    if args.entries:
        entries = []
        for e in args.entries:
            p = Path(e)
            rel = (p.resolve().relative_to(root.resolve()) if p.is_absolute() or p.exists() else p).as_posix()
            if rel not in by_path:
                raise UsageError(f"{e} is not a parsable pure-schema file under {args.root}")
            entries.append(by_path[rel])
    else:
        entries = [c for c in pool if c.document.has_query_operation()]
    if not entries:
        raise UsageError("no entry files with a query operation")

    reports, ok = [], True
    for entry in entries:
        if not entry.document.has_query_operation():
            reports.append({"entry": entry.path, "status": "precondition_violation", "reason": "no query operation"})
            ok = False
            continue
        outcome = recover(entry, [c for c in pool if c.path != entry.path])
        report = {"entry": entry.path, **outcome.to_dict()}
        if args.sdl and outcome.merged is not None:
            report["sdl"] = print_document(outcome.merged)
        reports.append(report)
        ok &= outcome.status is not RecoveryStatus.UNRESOLVABLE
    emit(reports[0] if len(reports) == 1 else reports, args.format)
    return EXIT_OK if ok else EXIT_FINDING


def _load_corpus(paths: Sequence[str]):
    docs, skipped = [], []
    for p in expand_paths(paths):
        text = read_text(p)
        try:
            if not is_pure_schema(text):
                skipped.append({"source": p, "reason": "contains executable definitions"})
                continue
            doc = parse(text, source_name=p)
        except SchemaParseError as exc:
            skipped.append({"source": p, "reason": f"parse error: {exc}"})
            continue
        result = validate(doc)
        if not result.ok:
            skipped.append({"source": p, "reason": f"{result.status.value} schema"})
            continue
        docs.append(doc)
    return docs, skipped


def cmd_report(args) -> int:
    docs, skipped = _load_corpus(args.files)
    for s in skipped:
        log.warning("skipped %s: %s", s["source"], s["reason"])
    if not docs:
        log.error("no valid schemas in input")
        return EXIT_FINDING
    report = corpus_report(docs, threshold=args.threshold, query_only=args.query_only, include_schemas=args.per_schema)
    report["skipped"] = skipped
    emit(report, args.format)
    return EXIT_OK


def cmd_funnel(args) -> int:
    root = Path(args.fixtures)
    if not root.is_dir():
        raise UsageError(f"{args.fixtures} is not a directory")
    hits = ReplayProvider(root, repo_depth=args.repo_depth).everything()
    result = run_funnel([CorpusFile.from_hit(h) for h in hits], canonical_dedup=args.canonical, jobs=args.jobs)
    out = result.funnel.to_dict()
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "funnel.json").write_text(dumps(out) + "\n", encoding="utf-8")
        result.funnel.write_dispositions(outdir / "dispositions.ndjson")
        if result.documents:
            report = corpus_report(result.documents, threshold=args.threshold, query_only=args.query_only)
            (outdir / "corpus_report.json").write_text(dumps(report) + "\n", encoding="utf-8")
    emit(out, args.format)
    return EXIT_OK


def _header(text: str) -> tuple[str, str]:
    name, sep, value = text.partition(":")
    if not sep or not name.strip():
        raise argparse.ArgumentTypeError(f"header must look like 'Name: value', got {text!r}")
    return name.strip(), value.strip()


def cmd_introspect(args) -> int:
    headers = dict(args.header or [])
    try:
        doc = introspect(args.url, headers=headers, timeout=args.timeout)
    except IntrospectionDisabled as exc:
        log.error("%s", exc)
        emit({"source": args.url, "error": "introspection_disabled", "message": str(exc)}, args.format)
        return EXIT_FINDING
    except IntrospectionError as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    result = validate(doc)
    emit(
        {"source": args.url, "status": result.status.value, "definition_count": len(doc), "sdl": print_document(doc)},
        args.format,
    )
    return EXIT_OK if result.ok else EXIT_FINDING


# -- argument parsing -------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for multi-file input")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="gqla", description="Static analysis of GraphQL schemas.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def files_cmd(name, help_text, fn):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("files", nargs="+", help="SDL files or directories ('-' for stdin)")
        p.set_defaults(handler=lambda a: _per_file(fn, a))
        return p

    p = files_cmd("parse", "parse SDL and list definitions", _parse_one)
    p.add_argument("--sdl", action="store_true", help="include the re-printed SDL")
    p.add_argument("--compare", metavar="OTHER", help="test AST equivalence against another file")
    p.add_argument("--canonical", action="store_true", help="compare sorted definitions/fields")

    files_cmd("validate", "check completeness and validity", _validate_one)

    p = files_cmd("stats", "schema characteristics", _stats_one)
    p.add_argument("--threshold", type=int, default=LARGE_THRESHOLD, help="definitions above which a schema is large")
    p.add_argument("--exclude-schema-definition", action="store_true")

    p = files_cmd("lint", "naming conventions", _lint_one)
    p.add_argument("--infix-mutations", action="store_true", help="accept mutation verbs anywhere in the name")
    p.add_argument("--cap", type=int, default=DEFAULT_OFFENDER_CAP, help="max offending names listed per rule")

    p = files_cmd("complexity", "worst-case response size class", _complexity_one)
    p.add_argument("--n", type=int, help="query size for the instantiated bound")
    p.add_argument("--d", type=int, help="list length for the instantiated bound")
    p.add_argument("--query-only", action="store_true", help="ignore mutation/subscription roots")

    p = files_cmd("pagination", "slicing arguments and connections", _pagination_one)
    p.add_argument("--slicing-names", default=",".join(sorted(SLICING_ARGUMENTS)))

    p = sub.add_parser("recover", parents=[common], help="reassemble partitioned schemas")
    p.add_argument("--root", required=True, help="repository root holding the file pool")
    p.add_argument("entries", nargs="*", help="entry files (default: every file with a query operation)")
    p.add_argument("--sdl", action="store_true", help="include the merged SDL")
    p.set_defaults(handler=cmd_recover)

    p = sub.add_parser("report", parents=[common], help="corpus tables over valid schemas")
    p.add_argument("files", nargs="+")
    p.add_argument("--threshold", type=int, default=LARGE_THRESHOLD)
    p.add_argument("--query-only", action="store_true")
    p.add_argument("--per-schema", action="store_true", help="include every per-schema analysis")
    p.set_defaults(handler=cmd_report)

    p = sub.add_parser("funnel", parents=[common], help="run the corpus filter funnel over a replay fixture")
    p.add_argument("fixtures", help="fixture directory <owner>/<repo>/<path>")
    p.add_argument("--out", help="directory for funnel.json, dispositions.ndjson, corpus_report.json")
    p.add_argument("--repo-depth", type=int, default=2)
    p.add_argument("--canonical", action="store_true", help="deduplicate on canonicalized ASTs")
    p.add_argument("--threshold", type=int, default=LARGE_THRESHOLD)
    p.add_argument("--query-only", action="store_true")
    p.set_defaults(handler=cmd_funnel)

    p = sub.add_parser("introspect", parents=[common], help="fetch a live schema by introspection")
    p.add_argument("url")
    p.add_argument("--header", type=_header, action="append", help="extra request header 'Name: value'")
    p.add_argument("--timeout", type=float, default=30.0)
    p.set_defaults(handler=cmd_introspect)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s", stream=sys.stderr
    )
    try:
        return args.handler(args)
    except UsageError as exc:
        sys.stderr.write(f"gqla {args.command}: {exc}\n")
        return EXIT_USAGE
    except GqlaError as exc:
        sys.stderr.write(f"gqla {args.command}: {exc}\n")
        return EXIT_FINDING


if __name__ == "__main__":
    sys.exit(main())
