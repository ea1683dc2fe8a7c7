"""Community detection: connected components, deterministic label propagation,
and topic-focused communities selected through the KOS hierarchy."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from kosnet.enrichment import ConceptProfile, as_weights
from kosnet.graphs import WeightedGraph
from kosnet.ingest import Catalog
from kosnet.kos import KosIndex, narrower_closure


@dataclass(frozen=True)
class Partition:
    """Node -> community label, where a label is the smallest member id."""

    assignment: dict[str, str] = field(default_factory=dict)
    converged: bool = True

    def communities(self) -> list[tuple[str, ...]]:
        groups: dict[str, list[str]] = {}
        for node, label in self.assignment.items():
            groups.setdefault(label, []).append(node)
        return [tuple(sorted(groups[label])) for label in sorted(groups)]

    def __len__(self):
        return len(set(self.assignment.values()))


def _canonical(labels: Mapping[str, str], converged: bool = True) -> Partition:
    smallest: dict[str, str] = {}
    for node, label in labels.items():
        if label not in smallest or node < smallest[label]:
            smallest[label] = node
    return Partition({n: smallest[labels[n]] for n in sorted(labels)}, converged)


def connected_components(g: WeightedGraph) -> Partition:
    parent = {n: n for n in g.nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in g.edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            parent[rb] = ra
    return _canonical({n: find(n) for n in g.nodes})


def label_propagation(g: WeightedGraph, max_iters: int = 100) -> Partition:
    """Asynchronous weighted label propagation with a fixed schedule.

    Nodes are visited in ascending id order; each adopts the neighbour label
    with the largest summed edge weight, ties going to the smallest label.
    Isolated nodes keep their own label. ``converged`` is False when
    ``max_iters`` sweeps pass without reaching a fixpoint.
    """
    if max_iters < 1:
        raise ValueError("max_iters must be >= 1")
    adj = g.adjacency()
    labels = {n: n for n in g.nodes}
    converged = False
    for _ in range(max_iters):
        changed = False
        for node in g.nodes:
            if not adj[node]:
                continue
            score: dict[str, int] = {}
            for nb, w in adj[node].items():
                score[labels[nb]] = score.get(labels[nb], 0) + w
            best = min(score, key=lambda lab: (-score[lab], lab))
            if best != labels[node]:
                labels[node] = best
                changed = True
        if not changed:
            converged = True
            break
    return _canonical(labels, converged)


@dataclass(frozen=True)
class TopicCommunity:
    topic: str
    members: tuple[str, ...]
    partition: Partition


def interested_authors(
    k: KosIndex, profiles: Mapping[str, ConceptProfile], topic: str
) -> tuple[str, ...]:
    subtree = narrower_closure(k, topic)
    out = []
    for author, profile in profiles.items():
        weights = as_weights(profile)
        if any(weights.get(c, 0.0) > 0 for c in subtree):
            out.append(author)
    return tuple(sorted(out))


def topic_community(
    cat: Catalog,
    k: KosIndex,
    profiles: Mapping[str, ConceptProfile],
    g: WeightedGraph,
    topic: str,
) -> TopicCommunity:
    """Authors with positive interest anywhere in the topic's narrower closure,
    partitioned into connected components of the induced subgraph."""
    members = tuple(a for a in interested_authors(k, profiles, topic) if a in cat.authors)
    return TopicCommunity(topic, members, connected_components(g.subgraph(members)))
