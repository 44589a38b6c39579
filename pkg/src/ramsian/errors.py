"""Exception hierarchy shared by every module in the package."""


class RamsianError(Exception):
    """Base class for all errors raised by ramsian."""


class StructuralError(RamsianError, ValueError):
    """A value refers to something outside its own universe (unknown outcome, missing issue, ...)."""


class InvalidDecompositionError(RamsianError, ValueError):
    """Joint probabilities that cannot come from a single distribution."""


class NullEvidenceError(RamsianError, ValueError):
    """Conditioning on an event of probability zero."""


class UnrepresentableCertaintyError(RamsianError, ValueError):
    """Probabilities 0 and 1 have no finite odds."""


class CapacityError(RamsianError, ValueError):
    """Input exceeds a documented size limit."""


class DegenerateCorpusError(RamsianError, ValueError):
    """A case corpus too thin to define the stage table."""


class ParseError(RamsianError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
