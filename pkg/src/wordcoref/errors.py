"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for all errors raised by wordcoref."""


class ParseError(ToolkitError):
    """Malformed input text (CoNLL, jsonlines, or wire formats).

    Carries optional source context so CLI users can locate the offending
    line.
    """

    def __init__(self, message: str, *, source: str | None = None,
                 line: int | None = None):
        self.source = source
        self.line = line
        prefix = ""
        if source is not None:
            prefix = source
        if line is not None:
            prefix = f"{prefix}:{line}" if prefix else f"line {line}"
        super().__init__(f"{prefix}: {message}" if prefix else message)


class ValidationError(ToolkitError):
    """Structurally well-formed input that violates a data invariant."""


class SingletonClusterWarning(UserWarning):
    """A parsed document contains a cluster with a single mention."""
