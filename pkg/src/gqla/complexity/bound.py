"""Closed-form worst-case response size for bounded nesting of lists."""

from __future__ import annotations

from ..errors import DomainError


def response_bound(n: int, k: int, d: int) -> int:
    """Largest response of a size-``n`` query with ``k`` nested lists of length ``d``.

    Unrolls ``s_j = d * s_{j-1} + 1`` from ``s_0 = n - k``:
    ``(n - k) * d**k + (d**k - 1) / (d - 1)``, computed exactly.
    """
    if d < 1:
        raise DomainError(f"list length D must be >= 1, got {d}")
    if k < 0 or n <= k:
        raise DomainError(f"need n > K >= 0, got n={n}, K={k}")
    if d == 1:
        return n
    dk = d**k
    return (n - k) * dk + (dk - 1) // (d - 1)
