"""SKOS-style concept scheme index and hierarchy queries.

All set-valued results are tuples sorted by IRI.
"""
from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from kosnet.errors import IntegrityError, UnknownConcept
from kosnet.resolver import normalize_label
from kosnet.triples import NS, Triple, TripleSet

logger = logging.getLogger(__name__)

CONCEPT = NS + "Concept"
PREF_LABEL = NS + "prefLabel"
ALT_LABEL = NS + "altLabel"
BROADER = NS + "broader"
RELATED = NS + "related"
TOP_CONCEPT_OF = NS + "topConceptOf"
_TYPE = NS + "type"

_LITERAL_PREDS = {PREF_LABEL, ALT_LABEL}
_IRI_PREDS = {BROADER, RELATED, TOP_CONCEPT_OF}


@dataclass(frozen=True)
class Concept:
    iri: str
    pref_label: str
    alt_labels: tuple[str, ...] = ()
    broader: tuple[str, ...] = ()
    related: tuple[str, ...] = ()
    is_top: bool = False


@dataclass(frozen=True)
class KosIndex:
    concepts: dict[str, Concept] = field(default_factory=dict)
    label_index: dict[str, tuple[str, ...]] = field(default_factory=dict)
    narrower: dict[str, tuple[str, ...]] = field(default_factory=dict)
    warnings: dict[str, int] = field(default_factory=dict, compare=False)

    def __contains__(self, iri):
        return iri in self.concepts

    def concept(self, iri: str) -> Concept:
        try:
            return self.concepts[iri]
        except KeyError:
            raise UnknownConcept(iri) from None


def _index_concepts(concepts: Mapping[str, Concept], warnings: Counter) -> KosIndex:
    labels: dict[str, set[str]] = defaultdict(set)
    narrower: dict[str, set[str]] = {iri: set() for iri in concepts}
    for iri, c in concepts.items():
        for label in (c.pref_label, *c.alt_labels):
            key = normalize_label(label)
            if key:
                labels[key].add(iri)
            else:
                warnings["empty_label_key"] += 1
        for b in c.broader:
            narrower[b].add(iri)
    return KosIndex(
        concepts=dict(sorted(concepts.items())),
        label_index={k: tuple(sorted(v)) for k, v in sorted(labels.items())},
        narrower={k: tuple(sorted(v)) for k, v in sorted(narrower.items())},
        warnings=dict(sorted(warnings.items())),
    )


def build_kos(ts: TripleSet | Iterable[Triple]) -> KosIndex:
    """Assemble concepts, symmetrize ``related`` and build the label index."""
    warnings: Counter = Counter()
    declared: set[str] = set()
    props: dict[str, dict[str, set[str]]] = defaultdict(lambda: defaultdict(set))

    for t in set(ts):
        if t.predicate == _TYPE:
            if t.object == CONCEPT and not t.literal:
                declared.add(t.subject)
            else:
                warnings["ignored_type"] += 1
            continue
        if t.predicate in _LITERAL_PREDS or t.predicate in _IRI_PREDS:
            if t.literal != (t.predicate in _LITERAL_PREDS):
                raise IntegrityError(t.subject, f"<{t.predicate}> has the wrong object kind")
            props[t.subject][t.predicate].add(t.object)
        else:
            warnings["unknown_predicate"] += 1

    for subj in props:
        if subj not in declared:
            raise IntegrityError(subj, "described but not declared as a Concept")

    related: dict[str, set[str]] = defaultdict(set)
    for iri in sorted(declared):
        p = props.get(iri, {})
        for target in sorted(p.get(BROADER, ())) + sorted(p.get(RELATED, ())):
            if target not in declared:
                raise IntegrityError(target, f"referenced by <{iri}> but not declared as a Concept")
        for other in p.get(RELATED, ()):
            if other == iri:
                warnings["self_related"] += 1
                continue
            related[iri].add(other)
            related[other].add(iri)

    concepts = {}
    for iri in sorted(declared):
        p = props.get(iri, {})
        prefs = sorted(p.get(PREF_LABEL, ()))
        if not prefs or not prefs[0]:
            raise IntegrityError(iri, "concept has no non-empty prefLabel")
        if len(prefs) > 1:
            warnings["conflicting_value"] += 1
        concepts[iri] = Concept(
            iri=iri,
            pref_label=prefs[0],
            alt_labels=tuple(sorted(set(p.get(ALT_LABEL, ())) - {prefs[0]})),
            broader=tuple(sorted(p.get(BROADER, ()))),
            related=tuple(sorted(related.get(iri, ()))),
            is_top=bool(p.get(TOP_CONCEPT_OF)),
        )
    return _index_concepts(concepts, warnings)


def kos_from_concepts(concepts: Iterable[Concept]) -> KosIndex:
    """Index concepts built in code (tests, experiments); related is symmetrized."""
    concepts = list(concepts)
    declared = {c.iri for c in concepts}
    related: dict[str, set[str]] = defaultdict(set)
    for c in concepts:
        for target in (*c.broader, *c.related):
            if target not in declared:
                raise IntegrityError(target, f"referenced by <{c.iri}> but not declared as a Concept")
        for r in c.related:
            if r != c.iri:
                related[c.iri].add(r)
                related[r].add(c.iri)
    fixed = {
        c.iri: Concept(c.iri, c.pref_label, tuple(sorted(set(c.alt_labels))),
                       tuple(sorted(set(c.broader))), tuple(sorted(related[c.iri])), c.is_top)
        for c in concepts
    }
    return _index_concepts(fixed, Counter())


def _closure(k: KosIndex, start: str, step) -> tuple[str, ...]:
    k.concept(start)
    seen = {start}
    stack = [start]
    while stack:
        for nxt in step(stack.pop()):
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return tuple(sorted(seen))


def broader_closure(k: KosIndex, c: str) -> tuple[str, ...]:
    """Reflexive-transitive closure over broader edges; safe on cycles."""
    return _closure(k, c, lambda x: k.concepts[x].broader)


def narrower_closure(k: KosIndex, c: str) -> tuple[str, ...]:
    return _closure(k, c, lambda x: k.narrower.get(x, ()))


def is_top(concept: Concept) -> bool:
    return concept.is_top or not concept.broader


def top_concepts_of(k: KosIndex, c: str, warnings: Optional[Counter] = None) -> tuple[str, ...]:
    """Top concepts above ``c``: flagged tops or concepts without broader edges.

    A concept whose ancestry is a pure cycle has no top; the empty result is
    counted under ``no_top_concept`` in ``warnings`` when one is passed.
    """
    tops = tuple(x for x in broader_closure(k, c) if is_top(k.concepts[x]))
    if not tops:
        logger.warning("no top concept reachable from <%s>", c)
        if warnings is not None:
            warnings["no_top_concept"] += 1
    return tops


def related_of(k: KosIndex, c: str) -> tuple[str, ...]:
    return k.concept(c).related
