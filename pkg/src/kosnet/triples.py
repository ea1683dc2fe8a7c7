"""Line-oriented triple snapshots: parsing and canonical serialization.

The grammar is a small subset of N-Triples::

    <subject> <predicate> <object> .
    <subject> <predicate> "literal" .

Literals support two escapes only, ``\\"`` and ``\\\\``. Blank lines and lines
whose first non-blank character is ``#`` are skipped.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from kosnet.errors import ParseError

NS = "http://kosnet.dev/s#"

_IRI_RE = re.compile(r"[A-Za-z][A-Za-z0-9+.\-]*:[^\s<>\"{}|^`\\]+\Z")


def is_iri(value: str) -> bool:
    """True for a non-empty absolute IRI (scheme followed by a non-empty body)."""
    return bool(_IRI_RE.match(value))


@dataclass(frozen=True, order=True)
class Triple:
    subject: str
    predicate: str
    object: str
    literal: bool = False

    def __post_init__(self):
        if not is_iri(self.subject):
            raise ValueError(f"subject is not an absolute IRI: {self.subject!r}")
        if not is_iri(self.predicate):
            raise ValueError(f"predicate is not an absolute IRI: {self.predicate!r}")
        if not self.literal and not is_iri(self.object):
            raise ValueError(f"object is not an absolute IRI: {self.object!r}")
        if self.literal and ("\n" in self.object or "\r" in self.object):
            raise ValueError("literal objects cannot contain line breaks")


@dataclass(frozen=True)
class TripleSet:
    """Parsed triples in file order; ``lines[i]`` is the source line of ``triples[i]``."""

    triples: tuple[Triple, ...] = ()
    lines: tuple[int, ...] = ()

    def __len__(self):
        return len(self.triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self.triples)


class _LineScanner:
    def __init__(self, text: str, lineno: int):
        self.text = text
        self.pos = 0
        self.lineno = lineno

    def fail(self, reason: str):
        raise ParseError(self.lineno, reason)

    def skip_ws(self) -> bool:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1
        return self.pos > start

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def iri(self, what: str) -> str:
        if self.peek() != "<":
            self.fail(f"expected '<' to open {what} IRI")
        end = self.text.find(">", self.pos + 1)
        if end < 0:
            self.fail(f"unterminated {what} IRI (missing '>')")
        value = self.text[self.pos + 1:end]
        if not is_iri(value):
            self.fail(f"{what} is not an absolute IRI: <{value}>")
        self.pos = end + 1
        return value

    def literal(self) -> str:
        # caller guarantees the opening quote
        self.pos += 1
        out = []
        while True:
            if self.pos >= len(self.text):
                self.fail("unterminated literal")
            ch = self.text[self.pos]
            if ch == '"':
                self.pos += 1
                return "".join(out)
            if ch == "\\":
                nxt = self.text[self.pos + 1:self.pos + 2]
                if nxt not in ('"', "\\"):
                    self.fail(f"unsupported escape sequence '\\{nxt}'")
                out.append(nxt)
                self.pos += 2
                continue
            out.append(ch)
            self.pos += 1


def _parse_line(line: str, lineno: int) -> Triple:
    sc = _LineScanner(line, lineno)
    sc.skip_ws()
    subject = sc.iri("subject")
    if not sc.skip_ws():
        sc.fail("expected whitespace after subject")
    predicate = sc.iri("predicate")
    if not sc.skip_ws():
        sc.fail("expected whitespace after predicate")
    if sc.peek() == '"':
        obj, is_lit = sc.literal(), True
    elif sc.peek() == "<":
        obj, is_lit = sc.iri("object"), False
    else:
        sc.fail("object must be an IRI or a quoted literal")
    sc.skip_ws()
    if sc.peek() != ".":
        sc.fail("missing terminal ' .'")
    sc.pos += 1
    sc.skip_ws()
    if sc.pos != len(line):
        sc.fail(f"unexpected trailing content {line[sc.pos:]!r}")
    return Triple(subject, predicate, obj, is_lit)


def parse_triples(text: str) -> TripleSet:
    """Parse snapshot text; the first malformed line raises :class:`ParseError`."""
    triples = []
    lines = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        triples.append(_parse_line(raw.rstrip("\r"), lineno))
        lines.append(lineno)
    return TripleSet(tuple(triples), tuple(lines))


def read_triples(path) -> TripleSet:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_triples(text)
    except ParseError as exc:
        raise ParseError(exc.line, exc.reason, str(path)) from None


def _escape(value: str) -> str:
    return value.replace("\\", "\\\\").replace('"', '\\"')


def format_triple(t: Triple) -> str:
    obj = f'"{_escape(t.object)}"' if t.literal else f"<{t.object}>"
    return f"<{t.subject}> <{t.predicate}> {obj} ."


def serialize_triples(triples: Iterable[Triple]) -> str:
    """Canonical text: distinct triples, sorted, one per line."""
    return "".join(format_triple(t) + "\n" for t in sorted(set(triples)))
