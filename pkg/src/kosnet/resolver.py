"""Lexical normalization and keyword -> concept resolution.

Spelling variants ("e-learning" / "elearning") collapse through
:func:`normalize_label`; synonyms and acronyms collapse because the KOS
carries them as alternative labels of one concept.
"""
from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from typing import TYPE_CHECKING

from kosnet.errors import EmptyKey

if TYPE_CHECKING:
    from kosnet.kos import KosIndex

PSEUDO_PREFIX = "urn:kw:"


def _fold(s: str) -> str:
    s = unicodedata.normalize("NFKD", s.casefold())
    return "".join(ch for ch in s if not unicodedata.combining(ch))


def normalize_label(label: str) -> str:
    """Case-fold, decompose, drop combining marks, keep only alphanumerics.

    >>> normalize_label("e-Learning")
    'elearning'
    >>> normalize_label("  Open  Educational   Resources ")
    'openeducationalresources'
    """
    s = _fold(label)
    # compatibility decomposition can surface new cased or decomposable
    # characters (e.g. U+210C), so fold until stable
    while True:
        nxt = _fold(s)
        if nxt == s:
            break
        s = nxt
    return "".join(ch for ch in s if ch.isalnum())


def pseudo_concept(key: str) -> str:
    return PSEUDO_PREFIX + key


def is_pseudo(iri: str) -> bool:
    return iri.startswith(PSEUDO_PREFIX)


@dataclass(frozen=True)
class Resolution:
    keyword: str
    key: str
    concept: str
    resolved: bool
    ambiguous: bool = False


def resolve_keyword(k: KosIndex, keyword: str) -> Resolution:
    key = normalize_label(keyword)
    if not key:
        raise EmptyKey(keyword)
    hits = k.label_index.get(key, ())
    if not hits:
        return Resolution(keyword, key, pseudo_concept(key), resolved=False)
    # label_index entries are sorted, so hits[0] is the smallest IRI
    return Resolution(keyword, key, hits[0], resolved=True, ambiguous=len(hits) > 1)
