"""Rank not-yet-collaborating author pairs by weighted Jaccard overlap of their
enriched interest profiles."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from kosnet.enrichment import ConceptProfile, as_weights
from kosnet.graphs import WeightedGraph
from kosnet.ingest import Catalog

DEFAULT_TOP_K = 20
DEFAULT_MIN_SCORE = 0.05


@dataclass(frozen=True)
class Recommendation:
    author_a: str
    author_b: str
    score: float
    shared_concepts: tuple[tuple[str, float], ...]


def profile_similarity(p, q) -> float:
    """Weighted Jaccard: sum of termwise minima over sum of termwise maxima.

    Two empty profiles score 0.

    >>> profile_similarity({"x": 1, "y": 1}, {"y": 1, "z": 1})
    0.3333333333333333
    """
    p, q = as_weights(p), as_weights(q)
    num = 0.0
    den = 0.0
    for c in sorted(set(p) | set(q)):
        a, b = p.get(c, 0.0), q.get(c, 0.0)
        num += min(a, b)
        den += max(a, b)
    return num / den if den > 0 else 0.0


def shared_concepts(p, q) -> tuple[tuple[str, float], ...]:
    p, q = as_weights(p), as_weights(q)
    shared = [(c, min(p[c], q[c])) for c in set(p) & set(q) if min(p[c], q[c]) > 0]
    return tuple(sorted(shared, key=lambda cw: (-cw[1], cw[0])))


def recommend_pairs(
    cat: Catalog,
    g: WeightedGraph,
    profiles: Mapping[str, ConceptProfile],
    top_k: int = DEFAULT_TOP_K,
    min_score: float = DEFAULT_MIN_SCORE,
) -> list[Recommendation]:
    """Score every author pair without a co-authorship edge.

    Pairs scoring at least ``min_score`` are sorted by score (descending)
    then by the pair itself, and the first ``top_k`` are returned.
    """
    if top_k < 0:
        raise ValueError("top_k must be >= 0")
    if not 0 <= min_score <= 1:
        raise ValueError("min_score must lie in [0, 1]")
    empty = ConceptProfile("")
    recs = []
    for a, b in combinations(sorted(cat.authors), 2):
        if g.weight(a, b) > 0:
            continue
        pa, pb = profiles.get(a, empty), profiles.get(b, empty)
        score = profile_similarity(pa, pb)
        if score >= min_score:
            recs.append(Recommendation(a, b, score, shared_concepts(pa, pb)))
    recs.sort(key=lambda r: (-r.score, r.author_a, r.author_b))
    return recs[:top_k]
