"""Exception types shared across the package."""


class KosnetError(Exception):
    pass


class ParseError(KosnetError):
    def __init__(self, line, reason, path=None):
        self.line = line
        self.reason = reason
        self.path = path
        where = f"{path}: line {line}" if path else f"line {line}"
        super().__init__(f"{where}: {reason}")


class IntegrityError(KosnetError):
    def __init__(self, iri, reason):
        self.iri = iri
        self.reason = reason
        super().__init__(f"<{iri}>: {reason}")


class UnknownConcept(KosnetError, LookupError):
    def __init__(self, iri):
        self.iri = iri
        super().__init__(f"unknown concept <{iri}>")


class UnknownAuthor(KosnetError, LookupError):
    def __init__(self, iri):
        self.iri = iri
        super().__init__(f"unknown author <{iri}>")


class UnknownPaper(KosnetError, LookupError):
    def __init__(self, iri):
        self.iri = iri
        super().__init__(f"unknown paper <{iri}>")


class EmptyKey(KosnetError, ValueError):
    """Raised when a keyword normalizes to the empty string."""

    def __init__(self, keyword):
        self.keyword = keyword
        super().__init__(f"keyword {keyword!r} has an empty normalized key")
