"""Collaboration-network discovery over scholarly triples and a SKOS-style KOS."""

from kosnet.errors import (
    EmptyKey,
    IntegrityError,
    KosnetError,
    ParseError,
    UnknownAuthor,
    UnknownConcept,
    UnknownPaper,
)

__version__ = "0.1.0"

__all__ = [
    "EmptyKey",
    "IntegrityError",
    "KosnetError",
    "ParseError",
    "UnknownAuthor",
    "UnknownConcept",
    "UnknownPaper",
]
