"""Exception hierarchy shared by every module.

Each class maps to one CLI exit status, see ``properconn.cli``.
"""


class ProperConnError(Exception):
    """Base class for all library errors."""


class GraphFormatError(ProperConnError, ValueError):
    """Malformed graph6, edge-list or coloring text."""


class PreconditionError(ProperConnError, ValueError):
    """Input does not satisfy an operation's stated hypotheses."""


class BudgetExceeded(ProperConnError):
    """A search hit its node / enumeration cap before reaching a verdict.

    Never a synonym for "no solution exists".
    """


class ConstructionDefect(ProperConnError):
    """A construction produced output that failed its own verification,
    or a structure that the underlying proof guarantees was not found."""
