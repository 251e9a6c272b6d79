"""Desk-scale ceiling for operations that sweep all of S_n.

12! is about 4.8e8, the largest factorial worth attempting on one machine.
The ceiling can be raised (or lowered) with the PSS_BRUTE_GUARD environment
variable, and individual calls can bypass it with force=True.
"""

from __future__ import annotations

import os

DEFAULT_GUARD = 12


class GuardExceeded(ValueError):
    """An exhaustive sweep was requested above the brute-force ceiling."""


def brute_guard() -> int:
    raw = os.environ.get("PSS_BRUTE_GUARD")
    if raw is None:
        return DEFAULT_GUARD
    try:
        return int(raw)
    except ValueError:
        raise GuardExceeded(f"PSS_BRUTE_GUARD must be an integer, got {raw!r}")


def check_guard(n: int, force: bool = False) -> None:
    limit = brute_guard()
    if n > limit and not force:
        raise GuardExceeded(
            f"exhaustive sweep over S_{n} exceeds the guard (n <= {limit}); "
            "set PSS_BRUTE_GUARD or pass force to override"
        )
