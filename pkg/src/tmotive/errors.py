"""Exception hierarchy shared by the library and the CLI."""


class TmotiveError(Exception):
    pass


class ValidationError(TmotiveError):
    """Input is well formed but violates a semantic constraint (exit code 1)."""


class GradeMismatch(ValidationError):
    pass


class InvalidBlowupCoordinate(ValidationError):
    pass


class OverlappingPieces(ValidationError):
    def __init__(self, first, second, detail=""):
        self.indices = (first, second)
        msg = f"union terms {first} and {second} overlap"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class EmptyInterval(ValidationError):
    pass


class NonDefinableEndpoint(ValidationError):
    pass


class ParseError(TmotiveError):
    """Malformed DSL text (exit code 2)."""

    def __init__(self, message, span=None):
        self.span = span
        if span is not None:
            message = f"{span.line}:{span.column}: {message}"
        super().__init__(message)
