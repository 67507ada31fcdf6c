class InputError(ValueError):
    """Invalid input: malformed data, violated invariants, or exceeded caps."""


class IntegrityError(RuntimeError):
    """An internal consistency check failed (a theorem-level guarantee broke)."""
