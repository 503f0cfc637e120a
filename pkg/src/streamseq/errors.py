"""Exception hierarchy for streamseq.

Everything raised on purpose by this package derives from StreamSeqError,
so callers can catch one base class at an API boundary.  ValueError is a
second base on the input-validation subclasses because most of them signal
a bad argument in the ordinary Python sense.
"""

from __future__ import annotations


class StreamSeqError(Exception):
    """Base class for all errors raised by streamseq."""


class ParameterError(StreamSeqError, ValueError):
    """A parameter is out of its documented domain (bad span, thresholds
    out of order, nonsensical generator settings, ...)."""


class BoundsError(StreamSeqError, IndexError):
    """A window or extension does not fit inside its queue."""


class ContractError(StreamSeqError):
    """An internal consistency rule was violated: mixed candidate lengths,
    pattern-set invariants broken, sweep input too short to interpolate."""


class UndefinedSupportError(StreamSeqError, ZeroDivisionError):
    """Support was requested over an empty window."""


class IncompatiblePatternSetsError(StreamSeqError):
    """Two pattern sets were combined but were mined under different
    parameters, so their counts are not comparable."""


class EventLogParseError(StreamSeqError, ValueError):
    """An event-log text could not be parsed; carries the 1-based line."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class PatternFileError(StreamSeqError, ValueError):
    """A pattern file is malformed (bad header, bad entry, bad count)."""
