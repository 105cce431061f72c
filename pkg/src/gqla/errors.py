"""Exception hierarchy shared by all analysis modules."""

from __future__ import annotations


class GqlaError(Exception):
    """Base class for every error raised by this package."""


class SchemaParseError(GqlaError):
    """Raised when SDL text is syntactically malformed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f" at {line}:{column}" if line is not None else ""
        super().__init__(f"{message}{where}")
        self.message = message


class PreconditionViolation(GqlaError, ValueError):
    pass


class DomainError(GqlaError, ValueError):
    pass


class GuardExceeded(GqlaError, ValueError):
    """The oracle executor refuses instances larger than its guard."""


class EmptyCorpus(GqlaError, ValueError):
    pass


class IntrospectionError(GqlaError):
    pass


class NetworkError(IntrospectionError):
    pass


class HttpError(IntrospectionError):
    def __init__(self, status: int, body: str = ""):
        self.status = status
        self.body = body
        super().__init__(f"HTTP {status}")


class IntrospectionDisabled(IntrospectionError):
    def __init__(self, errors: list):
        self.errors = errors
        msgs = "; ".join(str(e.get("message", e)) if isinstance(e, dict) else str(e) for e in errors)
        super().__init__(f"introspection rejected by endpoint: {msgs}")


class MalformedResponse(IntrospectionError):
    pass
