import json
import random
import warnings

import httpx
import pytest

from gqla import parse
from gqla.corpus import (
    STAGES,
    CorpusFile,
    GitHubCodeSearch,
    RangeExhaustedWarning,
    ReplayProvider,
    SizeRangeQuery,
    corpus_report,
    partition_search_queries,
    run_funnel,
)
from gqla.errors import EmptyCorpus
from gqla.synthetic import generate_schema, partition

from .conftest import FIXTURES, FRIENDS

CORPUS = FIXTURES / "corpus"


def f(url, content, repo="o/r", path=None):
    return CorpusFile(url, path or url.rsplit("/", 1)[-1], repo, content)


# -- funnel -----------------------------------------------------------------


def test_duplicate_urls():
    out = run_funnel([f("u/a.graphql", "type Query { a: Int }"), f("u/a.graphql", "type Query { a: Int }")])
    assert out.funnel.counts["unique_files"] == 1


def test_partitioned_fragments_are_recovered():
    rng = random.Random(7)
    doc = generate_schema(rng, object_types=6)
    pieces = partition(doc, 3, rng)
    files = [f(f"x/{p}", t, repo="o/split", path=p) for p, t in pieces]
    files += [f(f"solo{i}/s.graphql", f"type Query {{ v{i}: Int }}", repo=f"o/solo{i}") for i in range(7)]
    assert len(files) == 10
    out = run_funnel(files)
    c = out.funnel.counts
    assert c["pure_schemas"] == 10
    assert c["complete_or_recovered"] == 8
    assert out.funnel.to_dict()["recovered"] == 1
    dropped = [d for d in out.funnel.dispositions if not d.survived]
    assert {d.reason for d in dropped} == {"incomplete: no query operation"}


def test_ast_identical_schemas_dedup():
    out = run_funnel([f("u/b.graphql", "type Query {\n  a: Int\n}"), f("u/a.graphql", "type Query { a: Int } # same")])
    assert out.funnel.counts["valid_unique_schemas"] == 1
    (kept,) = [d for d in out.funnel.dispositions if d.survived]
    assert kept.url == "u/a.graphql"


def test_canonical_dedup_is_optional():
    files = [
        f("u/a.graphql", "type Query { a: A } type A { x: Int } type B { y: Int }"),
        f("u/b.graphql", "type Query { a: A } type B { y: Int } type A { x: Int }"),
    ]
    assert run_funnel(files).funnel.counts["valid_unique_schemas"] == 2
    assert run_funnel(files, canonical_dedup=True).funnel.counts["valid_unique_schemas"] == 1


def test_recovery_never_crosses_repositories():
    files = [
        f("a/main.graphql", "type Query { w: Widget }", repo="o/a"),
        f("b/widget.graphql", "type Widget { x: Int }", repo="o/b"),
    ]
    assert run_funnel(files).funnel.counts["complete_or_recovered"] == 0


def fixture_funnel(**kw):
    return run_funnel(ReplayProvider(CORPUS).everything(), **kw)


def test_fixture_counts_and_dispositions(tmp_path):
    out = fixture_funnel()
    assert [out.funnel.counts[s] for s in STAGES] == [40, 37, 33, 29, 18, 15, 12]
    assert len(out.funnel.dispositions) == 40
    assert sum(d.survived for d in out.funnel.dispositions) == 12
    out.funnel.write_dispositions(tmp_path / "d.ndjson")
    lines = (tmp_path / "d.ndjson").read_text().splitlines()
    assert len(lines) == 40
    assert all(json.loads(line)["stage"] in STAGES for line in lines)


def test_funnel_is_idempotent():
    first = fixture_funnel()
    again = run_funnel(first.survivors_as_files())
    assert set(again.funnel.counts.values()) == {12}
    assert [d.source_name for d in again.documents] == [d.source_name for d in first.documents]


def test_parallel_parse_matches_serial():
    serial, parallel = fixture_funnel(), fixture_funnel(jobs=2)
    assert serial.funnel.counts == parallel.funnel.counts
    assert serial.funnel.dispositions == parallel.funnel.dispositions


# -- search -----------------------------------------------------------------


def test_partition_fits_single_query():
    assert partition_search_queries(0, 100, 1000, {(0, 100): 10}) == [SizeRangeQuery(0, 100)]


def test_partition_bisects():
    counts = {(0, 100): 2000, (0, 50): 1000, (51, 100): 1000}
    assert partition_search_queries(0, 100, 1000, counts) == [SizeRangeQuery(0, 50), SizeRangeQuery(51, 100)]


def test_partition_degenerate_range_warns():
    with pytest.warns(RangeExhaustedWarning):
        assert partition_search_queries(7, 7, 1000, {(7, 7): 5000}) == [SizeRangeQuery(7, 7)]


def test_partition_covers_range_without_overlap():
    sizes = random.Random(3).choices(range(0, 5000), k=20000)

    def count(a, b):
        return sum(a <= s <= b for s in sizes)

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RangeExhaustedWarning)
        ranges = partition_search_queries(0, 4999, 500, count)
    covered = [x for r in ranges for x in range(r.min_size, r.max_size + 1)]
    assert covered == list(range(5000))
    assert all(count(r.min_size, r.max_size) <= 500 for r in ranges)


def test_size_query_text():
    assert SizeRangeQuery(1, 9).query == "type extension:graphql extension:gql size:1..9 fork:false"


def test_replay_without_manifest(tmp_path):
    (tmp_path / "o" / "r" / "s").mkdir(parents=True)
    (tmp_path / "o" / "r" / "s" / "a.graphql").write_text("type Query { a: Int }")
    (tmp_path / "o" / "r" / "notes.md").write_text("type")
    (tmp_path / "o" / "r" / "b.gql").write_text("scalar X")  # no search term
    (hit,) = ReplayProvider(tmp_path).everything()
    assert (hit.repository, hit.path, hit.url) == ("o/r", "s/a.graphql", "replay://o/r/s/a.graphql")


def test_replay_collect_partitions(tmp_path):
    for i in range(6):
        p = tmp_path / "o" / f"r{i}" / "a.graphql"
        p.parent.mkdir(parents=True)
        p.write_text("type Query { a: Int }" + " " * (i * 100))
    hits = ReplayProvider(tmp_path).collect(0, 1000, cap=2)
    assert len(hits) == 6


def test_github_client_pages_and_rate_limit(monkeypatch):
    monkeypatch.setattr("gqla.corpus.search.time.sleep", lambda s: None)
    calls = {"search": 0}

    def handler(request: httpx.Request):
        assert request.headers["Authorization"] == "Bearer t0k"
        if request.url.path == "/search/code":
            calls["search"] += 1
            if calls["search"] == 1:
                return httpx.Response(403, headers={"x-ratelimit-remaining": "0", "x-ratelimit-reset": "0"})
            if request.url.params["per_page"] == "1":
                return httpx.Response(200, json={"total_count": 2, "items": []})
            items = [
                {
                    "url": f"https://api.github.com/repos/o/r/contents/s{i}.graphql",
                    "html_url": f"https://github.com/o/r/blob/main/s{i}.graphql",
                    "path": f"s{i}.graphql",
                    "repository": {"full_name": "o/r"},
                }
                for i in range(2)
            ]
            return httpx.Response(200, json={"total_count": 2, "items": items})
        return httpx.Response(200, text="type Query { a: Int }")

    client = GitHubCodeSearch(token="t0k", min_interval=0, client=httpx.Client(transport=httpx.MockTransport(handler)))
    hits = client.collect(0, 100)
    assert [h.path for h in hits] == ["s0.graphql", "s1.graphql"]
    assert hits[0].content == "type Query { a: Int }"
    assert calls["search"] == 3


def test_github_client_requires_token(monkeypatch):
    monkeypatch.delenv("GQLA_SEARCH_TOKEN", raising=False)
    with pytest.raises(RuntimeError):
        GitHubCodeSearch()


# -- report -----------------------------------------------------------------

REPORT_SCHEMAS = [
    # object types, input types, fields per object type, features
    "type Query { a: Int }",
    "type Query { u: [U] } union U = A | B type A { x: Int } type B { y: Int z: Int }",
    "type Query { me: User } type User { name: String friends: [User] }",
    "type Query { a(f: F): A } input F { q: String r: Int } type A { x: Int } type Mutation { createA: A }",
    "type Query { a(first: Int): [A] } type A { x: Int } type Subscription { tick: Int }",
]


def test_report_hand_computed():
    rep = corpus_report([parse(s) for s in REPORT_SCHEMAS])
    t = rep["all"]
    assert t["schemas"] == 5
    # object type counts 1, 3, 2, 3, 3 -> lower median 3
    assert t["characteristics"]["median_object_types"] == 3
    # input type counts 0, 0, 0, 1, 0 -> 0
    assert t["characteristics"]["median_input_object_types"] == 0
    # per-schema lower median of fields per object type: 1, 1, 1, 1, 1
    assert t["characteristics"]["median_fields_in_object_types"] == 1
    assert t["characteristics"]["has_unions"] == {"count": 1, "proportion": 0.2}
    assert t["characteristics"]["supports_mutation"]["count"] == 1
    assert t["characteristics"]["supports_subscription"]["count"] == 1
    assert t["worst_case"]["exponential"]["count"] == 1
    assert t["worst_case"]["linear-nd"]["count"] == 2
    assert t["worst_case"]["linear-n"]["count"] == 2
    assert t["pagination"]["has_object_list_fields"]["count"] == 3
    assert t["pagination"]["object_list_slicing"]["throughout"]["count"] == 1
    assert t["pagination"]["object_list_slicing"]["none"]["count"] == 2
    assert t["conventions"]["R3"]["proportion"] == "not_applicable"
    assert t["conventions"]["R6"]["proportion"] == 1.0
    assert rep["large"] is None


def test_report_single_exponential():
    rep = corpus_report([parse(FRIENDS)])
    assert rep["all"]["worst_case"]["exponential"] == {"count": 1, "proportion": 1.0}


def test_report_large_segment():
    big = parse("type Query { a: Int } " + " ".join(f"type T{i} {{ a: Int }}" for i in range(40)))
    rep = corpus_report([big, parse(FRIENDS)], include_schemas=True)
    assert rep["large"]["schemas"] == 1
    assert [s["large"] for s in rep["per_schema"]] == [True, False]


def test_report_order_independent():
    docs = [parse(s) for s in REPORT_SCHEMAS]
    assert corpus_report(docs) == corpus_report(list(reversed(docs)))


def test_report_empty():
    with pytest.raises(EmptyCorpus):
        corpus_report([])
