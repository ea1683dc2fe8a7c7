"""Data-gathering queries: papers of a knowledge area, their authors and
keywords, and the top concepts behind keywords."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional

from kosnet.errors import UnknownPaper
from kosnet.ingest import Catalog
from kosnet.kos import KosIndex, narrower_closure, top_concepts_of
from kosnet.resolver import resolve_keyword


@dataclass(frozen=True)
class AreaQueryResult:
    concept: str
    expanded: tuple[str, ...]
    papers: tuple[str, ...]


def papers_by_area(cat: Catalog, k: KosIndex, area: str) -> AreaQueryResult:
    expanded = narrower_closure(k, area)
    wanted = set(expanded)
    papers = []
    for iri, paper in cat.papers.items():
        for kw in paper.keywords:
            res = resolve_keyword(k, kw)
            if res.resolved and res.concept in wanted:
                papers.append(iri)
                break
    return AreaQueryResult(area, expanded, tuple(sorted(papers)))


def authors_and_keywords_of(cat: Catalog, papers: Iterable[str]) -> list[tuple[str, list[str]]]:
    """One row per author over ``papers`` with the order-preserving union of
    their keywords within the set; rows sorted by author IRI."""
    papers = list(papers)
    for p in papers:
        if p not in cat.papers:
            raise UnknownPaper(p)
    rows: dict[str, list[str]] = {}
    for p in papers:
        record = cat.papers[p]
        for a in record.author_iris:
            kws = rows.setdefault(a, [])
            for kw in record.keywords:
                if kw not in kws:
                    kws.append(kw)
    return [(a, rows[a]) for a in sorted(rows)]


def tops_of_keywords(
    k: KosIndex, keywords: Iterable[str], warnings: Optional[Counter] = None
) -> list[tuple[str, tuple[str, ...]]]:
    out = []
    for kw in keywords:
        res = resolve_keyword(k, kw)
        tops = top_concepts_of(k, res.concept, warnings) if res.resolved else ()
        out.append((kw, tops))
    return out


def area_report(cat: Catalog, k: KosIndex, area: str) -> dict:
    """Compose the three queries for one area into a JSON-ready table."""
    result = papers_by_area(cat, k, area)
    rows = []
    for author, kws in authors_and_keywords_of(cat, result.papers):
        rows.append({
            "author": author,
            "keywords": [{"keyword": kw, "tops": list(tops)} for kw, tops in tops_of_keywords(k, kws)],
        })
    return {
        "area": area,
        "expanded": list(result.expanded),
        "papers": list(result.papers),
        "authors": rows,
    }
