"""Longest-common-subsequence kernel with compiled and pure-Python backends.

The compiled backend is built from ``_speedups.pyx`` at install time.  When
the extension is unavailable (no compiler, plain source checkout) the
pure-Python two-row dynamic program is selected at import time instead; both
compute identical results.  ``benchmarks/lcs_backends.py`` compares the two.

Tokens may be any hashable values: they are interned to dense integer ids
before the DP runs, so word and character sequences are handled alike.
"""

from __future__ import annotations

from array import array
from typing import Hashable, Sequence

try:
    from ._speedups import lcs_length_ids as _lcs_length_ids_compiled
except ImportError:
    _lcs_length_ids_compiled = None

LCS_BACKEND = "compiled" if _lcs_length_ids_compiled is not None else "pure-python"


def lcs_length_ids_py(xs: Sequence[int], ys: Sequence[int]) -> int:
    """Pure-Python LCS length over integer id sequences (two-row DP)."""
    m, n = len(xs), len(ys)
    if m == 0 or n == 0:
        return 0
    prev = [0] * (n + 1)
    for xi in xs:
        curr = [0] * (n + 1)
        for j, yj in enumerate(ys):
            if yj == xi:
                curr[j + 1] = prev[j] + 1
            else:
                left = curr[j]
                up = prev[j + 1]
                curr[j + 1] = left if left > up else up
        prev = curr
    return prev[n]


def encode_pair(
    xs: Sequence[Hashable], ys: Sequence[Hashable]
) -> tuple[array, array]:
    """Map two token sequences onto shared dense int ids."""
    ids: dict[Hashable, int] = {}
    encoded = []
    for seq in (xs, ys):
        out = array("i")
        for token in seq:
            code = ids.get(token)
            if code is None:
                code = len(ids)
                ids[token] = code
            out.append(code)
        encoded.append(out)
    return encoded[0], encoded[1]


def lcs_length(xs: Sequence[Hashable], ys: Sequence[Hashable]) -> int:
    """Length of the longest common subsequence of two token sequences."""
    a, b = encode_pair(xs, ys)
    if _lcs_length_ids_compiled is not None:
        return _lcs_length_ids_compiled(a, b)
    return lcs_length_ids_py(a, b)
