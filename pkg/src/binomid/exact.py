"""Big-integer combinatorics: factorials, binomials and multinomials.

Lower indices out of range give 0 (the sums built on top rely on that);
a negative *total* is refused because it is never meaningful here.
"""

from __future__ import annotations

import math
import threading
from typing import Iterable

__all__ = ["DomainError", "factorial", "multinomial", "binomial"]


class DomainError(ValueError):
    """Raised when an argument falls outside the domain of an operation."""


_fact_table = [1]
_fact_lock = threading.Lock()


def factorial(n: int) -> int:
    """Return ``n!`` from a grow-on-demand table."""
    if n < 0:
        raise DomainError(f"factorial of negative integer {n}")
    if n < len(_fact_table):
        return _fact_table[n]
    with _fact_lock:
        k = len(_fact_table)
        acc = _fact_table[-1]
        while k <= n:
            acc *= k
            _fact_table.append(acc)
            k += 1
        return _fact_table[n]


def binomial(n: int, r: int) -> int:
    """``binomial(n, r)`` for ``n >= 0``; zero when ``r < 0`` or ``r > n``."""
    if n < 0:
        raise DomainError(f"binomial with negative upper index {n}")
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


def multinomial(parts: Iterable[int]) -> int:
    """Multinomial coefficient of ``parts``; zero if any part is negative.

    Evaluated as the telescoped product of binomials
    ``prod_i binomial(r_1 + ... + r_i, r_i)``.
    """
    parts = tuple(parts)
    total = sum(parts)
    if total < 0:
        raise DomainError(f"multinomial with negative total {total} (parts {parts})")
    result = 1
    running = 0
    for r in parts:
        if r < 0:
            return 0
        running += r
        result *= math.comb(running, r)
    return result
