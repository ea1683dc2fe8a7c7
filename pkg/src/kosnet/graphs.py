"""Undirected weighted collaboration graphs at author, institution and country level."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Optional

from kosnet.ingest import Catalog

logger = logging.getLogger(__name__)


def edge_key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class WeightedGraph:
    """Sorted node tuple plus edges keyed by ``(a, b)`` with ``a < b``."""

    nodes: tuple[str, ...] = ()
    edges: dict[tuple[str, str], int] = field(default_factory=dict)

    def __post_init__(self):
        node_set = set(self.nodes)
        for (a, b), w in self.edges.items():
            if not a < b:
                raise ValueError(f"edge ({a!r}, {b!r}) is a self-loop or not canonical")
            if a not in node_set or b not in node_set:
                raise ValueError(f"edge ({a!r}, {b!r}) has an endpoint outside the node set")
            if w < 1:
                raise ValueError(f"edge ({a!r}, {b!r}) has weight {w} < 1")

    def weight(self, a: str, b: str) -> int:
        if a == b:
            return 0
        return self.edges.get(edge_key(a, b), 0)

    def adjacency(self) -> dict[str, dict[str, int]]:
        adj: dict[str, dict[str, int]] = {n: {} for n in self.nodes}
        for (a, b), w in self.edges.items():
            adj[a][b] = w
            adj[b][a] = w
        return adj

    def subgraph(self, keep: Iterable[str]) -> "WeightedGraph":
        keep = set(keep) & set(self.nodes)
        return WeightedGraph(
            tuple(n for n in self.nodes if n in keep),
            {e: w for e, w in self.edges.items() if e[0] in keep and e[1] in keep},
        )

    def iter_edges(self) -> Iterator[tuple[str, str, int]]:
        for (a, b), w in self.edges.items():
            yield a, b, w


def make_graph(nodes: Iterable[str], edges: Mapping[tuple[str, str], int]) -> WeightedGraph:
    """Canonicalize arbitrary node/edge input into a :class:`WeightedGraph`."""
    merged: Counter = Counter()
    for (a, b), w in edges.items():
        merged[edge_key(a, b)] += w
    node_set = set(nodes) | {x for e in merged for x in e}
    return WeightedGraph(tuple(sorted(node_set)), dict(sorted(merged.items())))


def coauthorship_graph(cat: Catalog) -> WeightedGraph:
    """Authors as nodes; each paper adds 1 to every pair of its authors."""
    weights: Counter = Counter()
    for paper in cat.papers.values():
        for a, b in combinations(paper.author_iris, 2):
            weights[edge_key(a, b)] += 1
    return WeightedGraph(tuple(cat.authors), dict(sorted(weights.items())))


def _units_of_paper(cat: Catalog, author_iris, level: str, warnings: Counter) -> set[str]:
    units = set()
    for a in author_iris:
        org = cat.authors[a].org_iri
        if org is None:
            warnings["author_without_org"] += 1
            continue
        if level == "institution":
            units.add(org)
            continue
        country = cat.orgs[org].country
        if country is None:
            warnings["org_without_country"] += 1
            continue
        units.add(country)
    return units


def aggregate_graph(cat: Catalog, level: str, warnings: Optional[Counter] = None) -> WeightedGraph:
    """Institution- or country-level graph.

    The weight of ``(X, Y)`` counts distinct papers having at least one author
    in X and one in Y. Authors without an affiliation (or whose organization
    has no country, at country level) are skipped and counted in ``warnings``.
    """
    if level == "org":
        level = "institution"
    if level not in ("institution", "country"):
        raise ValueError(f"unknown aggregation level {level!r}")
    local: Counter = Counter()
    nodes: set[str] = set()
    weights: Counter = Counter()
    for paper in cat.papers.values():
        units = _units_of_paper(cat, paper.author_iris, level, local)
        nodes |= units
        for x, y in combinations(sorted(units), 2):
            weights[(x, y)] += 1
    if local:
        logger.warning("%s graph skipped authors: %s", level, dict(local))
        if warnings is not None:
            warnings.update(local)
    return WeightedGraph(tuple(sorted(nodes)), dict(sorted(weights.items())))


def build_graph(cat: Catalog, level: str, warnings: Optional[Counter] = None) -> WeightedGraph:
    if level == "author":
        return coauthorship_graph(cat)
    return aggregate_graph(cat, level, warnings)
