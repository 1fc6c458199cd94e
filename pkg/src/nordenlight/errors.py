"""Error taxonomy shared across the engine.

Exit codes follow the CLI contract: parse errors exit 2, validation failures
exit 3, hypothesis failures exit 4, internal inconsistencies exit 5.
"""


class EngineError(Exception):
    exit_code = 1


class ParseError(EngineError):
    exit_code = 2

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class ValidationFailure(EngineError):
    """The input is not a valid Kaehler-Norden setup; nothing downstream runs."""

    exit_code = 3


class HypothesisFailure(EngineError):
    """A hypersurface block does not meet the hypotheses the requested
    analysis needs (not lightlike, not radical transversal, not totally
    umbilical where required, or a malformed span)."""

    exit_code = 4


class InternalInconsistency(EngineError):
    """A proved identity failed on validated input: an engine bug or a
    convention drift, never a property of the input."""

    exit_code = 5
