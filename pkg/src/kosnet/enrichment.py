"""Weighted concept signatures per keyword and per-author interest profiles."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional

from kosnet.errors import UnknownAuthor
from kosnet.ingest import Catalog
from kosnet.kos import KosIndex, broader_closure, related_of
from kosnet.resolver import Resolution, resolve_keyword


@dataclass(frozen=True)
class EnrichConfig:
    w_direct: float = 1.0
    w_related: float = 0.5
    w_broader: float = 0.25
    enrichment_enabled: bool = True

    def __post_init__(self):
        ws = (self.w_direct, self.w_related, self.w_broader)
        if not all(math.isfinite(w) for w in ws):
            raise ValueError("enrichment weights must be finite")
        if not (self.w_direct >= self.w_related >= self.w_broader >= 0):
            raise ValueError(
                "enrichment weights must satisfy w_direct >= w_related >= w_broader >= 0, "
                f"got {ws}"
            )
        if self.w_direct <= 0:
            raise ValueError("w_direct must be positive")


@dataclass(frozen=True)
class ConceptSignature:
    weights: dict[str, float]


@dataclass(frozen=True)
class ConceptProfile:
    """An author's interest mass per concept; absent keys weigh zero."""

    author: str
    weights: dict[str, float] = field(default_factory=dict)

    def __getitem__(self, concept: str) -> float:
        return self.weights.get(concept, 0.0)

    def __iter__(self) -> Iterator[str]:
        return iter(self.weights)

    def __len__(self):
        return len(self.weights)


def signature_of(k: KosIndex, cfg: EnrichConfig, res: Resolution) -> ConceptSignature:
    """Expand an already-resolved keyword."""
    direct = res.concept
    if not res.resolved or not cfg.enrichment_enabled:
        return ConceptSignature({direct: cfg.w_direct})
    weights: dict[str, float] = {}

    def put(concept, w):
        if w > weights.get(concept, -1.0):
            weights[concept] = w

    put(direct, cfg.w_direct)
    for r in related_of(k, direct):
        put(r, cfg.w_related)
    for b in broader_closure(k, direct):
        if b != direct:
            put(b, cfg.w_broader)
    return ConceptSignature(dict(sorted(weights.items())))


def enrich_keyword(k: KosIndex, cfg: EnrichConfig, keyword: str) -> ConceptSignature:
    """Resolve ``keyword`` and add its related neighbours and broader ancestors.

    A concept reached through several routes keeps the largest weight. Raises
    :class:`~kosnet.errors.EmptyKey` for keywords without alphanumerics.
    """
    return signature_of(k, cfg, resolve_keyword(k, keyword))


def _accumulate(total: dict[str, float], sig: ConceptSignature):
    for c, w in sig.weights.items():
        total[c] = total.get(c, 0.0) + w


def author_profile(cat: Catalog, k: KosIndex, cfg: EnrichConfig, author: str) -> ConceptProfile:
    if author not in cat.authors:
        raise UnknownAuthor(author)
    total: dict[str, float] = {}
    for paper in cat.papers.values():
        if author in paper.author_iris:
            for kw in paper.keywords:
                _accumulate(total, enrich_keyword(k, cfg, kw))
    return ConceptProfile(author, dict(sorted(total.items())))


def author_profiles(
    cat: Catalog,
    k: KosIndex,
    cfg: EnrichConfig,
    cache: Optional[dict[str, ConceptSignature]] = None,
) -> dict[str, ConceptProfile]:
    """Profiles for every author, sharing one signature per distinct keyword.

    Equal to calling :func:`author_profile` per author.
    """
    sigs = {} if cache is None else cache
    totals: dict[str, dict[str, float]] = {a: {} for a in cat.authors}
    for paper in cat.papers.values():
        for kw in paper.keywords:
            sig = sigs.get(kw)
            if sig is None:
                sig = sigs[kw] = enrich_keyword(k, cfg, kw)
            for a in paper.author_iris:
                _accumulate(totals[a], sig)
    return {a: ConceptProfile(a, dict(sorted(t.items()))) for a, t in totals.items()}


def as_weights(p: ConceptProfile | Mapping[str, float]) -> Mapping[str, float]:
    return p.weights if isinstance(p, ConceptProfile) else p
