"""Materialize a validated scholarly catalog from a parsed triple snapshot."""
from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Optional

from kosnet.errors import IntegrityError
from kosnet.triples import NS, Triple, TripleSet

logger = logging.getLogger(__name__)

TYPE = NS + "type"
PAPER = NS + "Paper"
AUTHOR = NS + "Author"
ORG = NS + "Org"

TITLE = NS + "title"
HAS_AUTHOR = NS + "hasAuthor"
KEYWORD = NS + "keyword"
YEAR = NS + "year"
NAME = NS + "name"
AFFILIATED_WITH = NS + "affiliatedWith"
ORG_NAME = NS + "orgName"
COUNTRY = NS + "country"

# predicate -> (owning entity type, object is literal)
_PREDICATES = {
    TITLE: (PAPER, True),
    HAS_AUTHOR: (PAPER, False),
    KEYWORD: (PAPER, True),
    YEAR: (PAPER, True),
    NAME: (AUTHOR, True),
    AFFILIATED_WITH: (AUTHOR, False),
    ORG_NAME: (ORG, True),
    COUNTRY: (ORG, True),
}
_ENTITY_TYPES = (PAPER, AUTHOR, ORG)


@dataclass(frozen=True)
class PaperRecord:
    title: str
    year: Optional[int]
    author_iris: tuple[str, ...]
    keywords: tuple[str, ...]


@dataclass(frozen=True)
class AuthorRecord:
    name: str
    org_iri: Optional[str] = None


@dataclass(frozen=True)
class OrgRecord:
    name: str
    country: Optional[str] = None


@dataclass(frozen=True)
class Catalog:
    """Papers, authors and organizations keyed by IRI, each in IRI order.

    ``warnings`` counts tolerated irregularities (unknown predicates and the
    like) and does not take part in equality.
    """

    papers: dict[str, PaperRecord] = field(default_factory=dict)
    authors: dict[str, AuthorRecord] = field(default_factory=dict)
    orgs: dict[str, OrgRecord] = field(default_factory=dict)
    warnings: dict[str, int] = field(default_factory=dict, compare=False)

    def papers_by_author(self) -> dict[str, tuple[str, ...]]:
        """Author IRI -> IRIs of the papers they authored (every author present)."""
        out: dict[str, list[str]] = {a: [] for a in self.authors}
        for piri, paper in self.papers.items():
            for a in paper.author_iris:
                out[a].append(piri)
        return {a: tuple(ps) for a, ps in out.items()}

    def stats(self) -> dict[str, int]:
        return {
            "papers": len(self.papers),
            "authors": len(self.authors),
            "orgs": len(self.orgs),
            "keywords": sum(len(p.keywords) for p in self.papers.values()),
            "distinct_keywords": len({k for p in self.papers.values() for k in p.keywords}),
        }


def _single(iri: str, pred: str, values: set, warnings: Counter):
    if not values:
        return None
    if len(values) > 1:
        warnings["conflicting_value"] += 1
        logger.warning("<%s> has %d values for <%s>; keeping the smallest", iri, len(values), pred)
    return min(values)


def build_catalog(ts: TripleSet | Iterable[Triple]) -> Catalog:
    """Type entities by the snapshot vocabulary and check cross-references.

    Duplicate triples collapse. Keywords are kept verbatim, deduplicated and
    sorted, so the result does not depend on triple order.
    """
    warnings: Counter = Counter()
    types: dict[str, set[str]] = defaultdict(set)
    props: dict[str, dict[str, set[str]]] = defaultdict(lambda: defaultdict(set))

    for t in sorted(set(ts)):
        if t.predicate == TYPE:
            if not t.literal and t.object in _ENTITY_TYPES:
                types[t.subject].add(t.object)
            else:
                warnings["ignored_type"] += 1
            continue
        spec = _PREDICATES.get(t.predicate)
        if spec is None:
            warnings["unknown_predicate"] += 1
            continue
        if t.literal != spec[1]:
            kind = "a literal" if spec[1] else "an IRI"
            raise IntegrityError(t.subject, f"<{t.predicate}> expects {kind} object")
        props[t.subject][t.predicate].add(t.object)

    for iri, ts_ in types.items():
        if len(ts_) > 1:
            raise IntegrityError(iri, "declared with conflicting types " + ", ".join(sorted(ts_)))
    kind_of = {iri: next(iter(ts_)) for iri, ts_ in types.items()}

    for subj in sorted(props):
        owner = kind_of.get(subj)
        if owner is None:
            warnings["untyped_subject"] += 1
            continue
        for pred in props[subj]:
            if _PREDICATES[pred][0] != owner:
                warnings["predicate_type_mismatch"] += 1

    def prop(iri, pred):
        return props[iri][pred] if iri in props else set()

    orgs = {}
    for iri in sorted(i for i, k in kind_of.items() if k == ORG):
        country = _single(iri, COUNTRY, prop(iri, COUNTRY), warnings)
        if country is not None:
            if len(country) != 2 or not country.isascii() or not country.isalpha():
                raise IntegrityError(iri, f"country {country!r} is not a 2-letter code")
            country = country.upper()
        orgs[iri] = OrgRecord(_single(iri, ORG_NAME, prop(iri, ORG_NAME), warnings) or "", country)

    authors = {}
    for iri in sorted(i for i, k in kind_of.items() if k == AUTHOR):
        org = _single(iri, AFFILIATED_WITH, prop(iri, AFFILIATED_WITH), warnings)
        if org is not None and kind_of.get(org) != ORG:
            raise IntegrityError(org, "affiliation target is not declared as an Org")
        authors[iri] = AuthorRecord(_single(iri, NAME, prop(iri, NAME), warnings) or "", org)

    papers = {}
    for iri in sorted(i for i, k in kind_of.items() if k == PAPER):
        author_iris = tuple(sorted(prop(iri, HAS_AUTHOR)))
        if not author_iris:
            raise IntegrityError(iri, "paper has no authors")
        for a in author_iris:
            if kind_of.get(a) != AUTHOR:
                raise IntegrityError(a, f"author of <{iri}> is not declared as an Author")
        year = _single(iri, YEAR, prop(iri, YEAR), warnings)
        if year is not None:
            try:
                year = int(year)
            except ValueError:
                raise IntegrityError(iri, f"year {year!r} is not an integer") from None
        papers[iri] = PaperRecord(
            title=_single(iri, TITLE, prop(iri, TITLE), warnings) or "",
            year=year,
            author_iris=author_iris,
            keywords=tuple(sorted(prop(iri, KEYWORD))),
        )

    if warnings:
        logger.info("catalog built with warnings: %s", dict(sorted(warnings.items())))
    return Catalog(papers, authors, orgs, dict(sorted(warnings.items())))


def catalog_to_triples(cat: Catalog) -> list[Triple]:
    """Inverse of :func:`build_catalog` up to warnings."""
    out = []
    for iri, org in cat.orgs.items():
        out.append(Triple(iri, TYPE, ORG))
        out.append(Triple(iri, ORG_NAME, org.name, True))
        if org.country is not None:
            out.append(Triple(iri, COUNTRY, org.country, True))
    for iri, author in cat.authors.items():
        out.append(Triple(iri, TYPE, AUTHOR))
        out.append(Triple(iri, NAME, author.name, True))
        if author.org_iri is not None:
            out.append(Triple(iri, AFFILIATED_WITH, author.org_iri))
    for iri, paper in cat.papers.items():
        out.append(Triple(iri, TYPE, PAPER))
        out.append(Triple(iri, TITLE, paper.title, True))
        if paper.year is not None:
            out.append(Triple(iri, YEAR, str(paper.year), True))
        out.extend(Triple(iri, HAS_AUTHOR, a) for a in paper.author_iris)
        out.extend(Triple(iri, KEYWORD, k, True) for k in paper.keywords)
    return out
