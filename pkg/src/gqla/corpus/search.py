"""Code-search clients and file-size partitioning of search queries.

Code search caps the number of results per query, so the byte-size range is
bisected until every range's hit count fits under the cap.
"""

from __future__ import annotations

import abc
import json
import logging
import os
import time
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Mapping

import httpx

log = logging.getLogger(__name__)

SEARCH_TERM = "type"
EXTENSIONS = (".graphql", ".gql")
TOKEN_ENV = "GQLA_SEARCH_TOKEN"
DEFAULT_CAP = 1000


class RangeExhaustedWarning(UserWarning):
    """A single-byte size range still has more hits than the cap allows."""


@dataclass(frozen=True)
class SearchHit:
    url: str
    path: str
    repository: str
    content: str


@dataclass(frozen=True)
class SizeRangeQuery:
    min_size: int
    max_size: int

    @property
    def query(self) -> str:
        return f"{SEARCH_TERM} extension:graphql extension:gql size:{self.min_size}..{self.max_size} fork:false"


def partition_search_queries(
    min_size: int,
    max_size: int,
    max_results_per_query: int = DEFAULT_CAP,
    observed_counts: Mapping[tuple[int, int], int] | Callable[[int, int], int] | None = None,
) -> list[SizeRangeQuery]:
    """Bisect ``[min_size, max_size]`` until each range's hit count is within the cap.

    ``observed_counts`` maps an inclusive ``(a, b)`` range to its hit count,
    or is a callable doing the same (e.g. a live provider's ``count``).
    """
    if min_size > max_size:
        raise ValueError(f"empty size range {min_size}..{max_size}")
    if observed_counts is None:
        raise ValueError("observed_counts is required")
    count = observed_counts if callable(observed_counts) else (lambda a, b: observed_counts[(a, b)])

    out: list[SizeRangeQuery] = []
    stack = [(min_size, max_size)]
    while stack:
        a, b = stack.pop()
        hits = count(a, b)
        if hits <= max_results_per_query:
            out.append(SizeRangeQuery(a, b))
        elif a == b:
            warnings.warn(
                f"size range {a}..{b} has {hits} hits, above the cap of {max_results_per_query}",
                RangeExhaustedWarning,
                stacklevel=2,
            )
            out.append(SizeRangeQuery(a, b))
        else:
            mid = (a + b) // 2
            stack.append((mid + 1, b))
            stack.append((a, mid))
    return out


class SearchProvider(abc.ABC):
    @abc.abstractmethod
    def search(self, query: str, size_range: tuple[int, int]) -> list[SearchHit]:
        ...

    @abc.abstractmethod
    def count(self, size_range: tuple[int, int]) -> int:
        ...

    def collect(self, min_size: int, max_size: int, cap: int = DEFAULT_CAP) -> list[SearchHit]:
        """Run the partitioned search and concatenate all hits (duplicates kept)."""
        ranges = partition_search_queries(min_size, max_size, cap, lambda a, b: self.count((a, b)))
        hits: list[SearchHit] = []
        for r in ranges:
            hits.extend(self.search(r.query, (r.min_size, r.max_size)))
        return hits


class ReplayProvider(SearchProvider):
    """Serves hits from a fixture directory laid out as ``<root>/<owner>/<repo>/<path>``.

    A ``search_results.json`` file at the root, if present, lists the hits in
    order as ``{"repository": ..., "path": ...}`` objects and may repeat
    entries (as overlapping live searches do).
    """

    MANIFEST = "search_results.json"

    def __init__(self, root: str | os.PathLike, repo_depth: int = 2):
        self.root = Path(root)
        self.repo_depth = repo_depth

    def _all(self) -> list[tuple[str, str, Path]]:
        manifest = self.root / self.MANIFEST
        if manifest.exists():
            entries = json.loads(manifest.read_text(encoding="utf-8"))
            return [(e["repository"], e["path"], self.root / e["repository"] / e["path"]) for e in entries]
        out = []
        for p in sorted(self.root.rglob("*")):
            if p.is_file() and p.suffix in EXTENSIONS:
                rel = p.relative_to(self.root).parts
                if len(rel) <= self.repo_depth:
                    continue
                repo = "/".join(rel[: self.repo_depth])
                out.append((repo, "/".join(rel[self.repo_depth :]), p))
        return out

    def _hits(self, size_range: tuple[int, int]) -> Iterable[SearchHit]:
        lo, hi = size_range
        for repo, path, file in self._all():
            raw = file.read_bytes()
            if not (lo <= len(raw) <= hi) or Path(path).suffix not in EXTENSIONS:
                continue
            content = raw.decode("utf-8", errors="replace")
            if SEARCH_TERM not in content.lower():
                continue
            yield SearchHit(f"replay://{repo}/{path}", path, repo, content)

    def search(self, query: str, size_range: tuple[int, int]) -> list[SearchHit]:
        return list(self._hits(size_range))

    def count(self, size_range: tuple[int, int]) -> int:
        return sum(1 for _ in self._hits(size_range))

    def everything(self) -> list[SearchHit]:
        return self.search("", (0, 1 << 62))


class GitHubCodeSearch(SearchProvider):
    """Live code-search client; token read from ``GQLA_SEARCH_TOKEN``.

    Requests are spaced at least ``min_interval`` seconds apart, and a
    rate-limit response sleeps until the advertised reset time.
    """

    API = "https://api.github.com"

    def __init__(self, token: str | None = None, min_interval: float = 2.0, client: httpx.Client | None = None):
        self.token = token or os.environ.get(TOKEN_ENV)
        if not self.token:
            raise RuntimeError(f"set {TOKEN_ENV} to use live code search")
        self.min_interval = min_interval
        self.client = client or httpx.Client(timeout=30.0)
        self._last = 0.0

    def _get(self, url: str, params=None, accept="application/vnd.github+json") -> httpx.Response:
        while True:
            wait = self._last + self.min_interval - time.monotonic()
            if wait > 0:
                time.sleep(wait)
            self._last = time.monotonic()
            resp = self.client.get(
                url, params=params, headers={"Authorization": f"Bearer {self.token}", "Accept": accept}
            )
            if resp.status_code in (403, 429) and resp.headers.get("x-ratelimit-remaining") == "0":
                reset = float(resp.headers.get("x-ratelimit-reset", time.time() + 60))
                pause = max(1.0, reset - time.time())
                log.warning("rate limited; sleeping %.0fs", pause)
                time.sleep(pause)
                continue
            resp.raise_for_status()
            return resp

    def _query(self, size_range: tuple[int, int]) -> str:
        return SizeRangeQuery(*size_range).query

    def count(self, size_range: tuple[int, int]) -> int:
        resp = self._get(f"{self.API}/search/code", {"q": self._query(size_range), "per_page": 1})
        return int(resp.json()["total_count"])

    def search(self, query: str, size_range: tuple[int, int]) -> list[SearchHit]:
        hits = []
        page = 1
        while True:
            resp = self._get(f"{self.API}/search/code", {"q": query, "per_page": 100, "page": page})
            items = resp.json().get("items", [])
            for item in items:
                raw = self._get(item["url"], accept="application/vnd.github.raw")
                hits.append(
                    SearchHit(item["html_url"], item["path"], item["repository"]["full_name"], raw.text)
                )
            if len(items) < 100 or page * 100 >= DEFAULT_CAP:
                return hits
            page += 1
