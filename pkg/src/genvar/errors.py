"""Error taxonomy shared by the library and the CLI exit-code map."""


class InputError(ValueError):
    """Malformed or inconsistent user input (CLI exit code 2)."""


class BudgetError(RuntimeError):
    """An enumeration, sampling or prime-pool budget was exceeded (exit code 3)."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed: inexact division, non-integral
    interpolation, certificate mismatch (exit code 4)."""
