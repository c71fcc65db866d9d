"""Exception types shared across the package.

The CLI maps these onto exit codes: ``UsageError`` and ``PreconditionError``
exit with 2, ``BudgetExceeded`` exits with 3.
"""


class UsageError(ValueError):
    """Bad arguments: malformed word, unknown label, out-of-range parameter."""


class PreconditionError(UsageError):
    """An operation's stated precondition does not hold for the inputs."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search would exceed its declared budget."""
