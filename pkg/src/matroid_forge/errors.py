"""Error types shared by every module.

Two failure modes are distinguished so the command line tool can map them
to distinct exit codes: bad input values (exit 2) versus requests that
exceed a configured enumeration bound (exit 3).
"""

import os


class DomainError(ValueError):
    """An argument is outside the operation's domain."""


class ResourceLimitError(RuntimeError):
    """A request exceeds a configured enumeration bound."""


def half_length_bound(default: int = 14) -> int:
    """Maximum path half-length for full Dyck enumerations.

    The MATROID_FORGE_MAX_N environment variable overrides the default.
    """
    raw = os.environ.get("MATROID_FORGE_MAX_N")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"MATROID_FORGE_MAX_N must be an integer, got {raw!r}")


def check_bound(value: int, bound: int, what: str) -> None:
    if value > bound:
        raise ResourceLimitError(f"{what} = {value} exceeds the bound {bound}")
