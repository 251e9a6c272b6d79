"""Permutations of {1, ..., n} and their structural statistics.

A permutation is a plain tuple of ints holding each value 1..n exactly once.
All positions in the public API are 1-based; the canonical text form is
comma-separated values ("2,4,3,1,5"), with a compact digit form ("24315")
accepted on input when every value is a single digit.

Peaks and valleys here are left-to-right maxima and minima (position 1 is
always both), and peak/valley runs are the maximal blocks starting at them.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

Perm = tuple[int, ...]
Word = tuple[int, ...]


class PermutationError(ValueError):
    """Raised for malformed permutation input."""


def perm(values: Sequence[int]) -> Perm:
    """Validate ``values`` as a permutation of 1..n and return it as a tuple."""
    p = tuple(int(v) for v in values)
    n = len(p)
    if n == 0:
        raise PermutationError("empty permutation (length must be >= 1)")
    seen = [False] * (n + 1)
    for v in p:
        if not 1 <= v <= n:
            raise PermutationError(f"value {v} out of range 1..{n}")
        if seen[v]:
            raise PermutationError(f"duplicate value {v}")
        seen[v] = True
    return p


def parse(text: str) -> Perm:
    """Parse the canonical comma form, or compact digits when all values <= 9.

    >>> parse("2,4,3,1,5")
    (2, 4, 3, 1, 5)
    >>> parse("24315")
    (2, 4, 3, 1, 5)
    """
    text = text.strip()
    if not text:
        raise PermutationError("empty input")
    if "," in text:
        try:
            values = [int(tok) for tok in text.split(",")]
        except ValueError as exc:
            raise PermutationError(f"malformed token in {text!r}") from exc
    else:
        if not text.isdigit():
            raise PermutationError(f"malformed input {text!r}")
        values = [int(ch) for ch in text]
        if 0 in values:
            raise PermutationError("compact digit form admits values 1..9 only")
    return perm(values)


def format_perm(p: Sequence[int]) -> str:
    """Canonical comma-separated form."""
    return ",".join(str(v) for v in p)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def reverse_identity(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def rev(p: Perm) -> Perm:
    """Reverse the order of the entries."""
    return p[::-1]


def inc(p: Perm) -> Word:
    """Increment every entry by 1. The result is a word on 2..n+1, not a
    permutation."""
    return tuple(v + 1 for v in p)


def ins(p: Perm, i: int) -> Perm:
    """Increment every entry of ``p`` and insert a 1 before position ``i``.

    ``i`` may be n+1, which appends the 1.

    >>> ins((2, 1, 4, 5, 3), 3)
    (3, 2, 1, 5, 6, 4)
    """
    n = len(p)
    if not 1 <= i <= n + 1:
        raise PermutationError(f"insertion position {i} out of range 1..{n + 1}")
    w = inc(p)
    return w[: i - 1] + (1,) + w[i - 1 :]


def delete_one(p: Perm) -> Perm:
    """Remove the entry 1 and decrement the rest; inverse of every ins(p, i)."""
    if len(p) < 2:
        raise PermutationError("cannot delete from a singleton permutation")
    return tuple(v - 1 for v in p if v != 1)


def peaks(p: Perm) -> tuple[int, ...]:
    """Positions of the left-to-right maxima (1-based, position 1 included)."""
    out = []
    cur = 0
    for i, v in enumerate(p, start=1):
        if v > cur:
            out.append(i)
            cur = v
    return tuple(out)


def valleys(p: Perm) -> tuple[int, ...]:
    """Positions of the left-to-right minima (1-based, position 1 included)."""
    out = []
    cur = len(p) + 1
    for i, v in enumerate(p, start=1):
        if v < cur:
            out.append(i)
            cur = v
    return tuple(out)


@dataclass(frozen=True)
class RunDecomposition:
    """Partition of positions 1..n into the maximal blocks starting at peaks
    (kind="peak") or valleys (kind="valley")."""

    kind: str
    runs: tuple[tuple[int, int], ...]  # inclusive 1-based [start, end] intervals

    def segments(self, p: Perm) -> list[tuple[int, ...]]:
        """The entry blocks of ``p`` corresponding to each run."""
        return [p[a - 1 : b] for a, b in self.runs]


def _runs_from_starts(starts: Sequence[int], n: int, kind: str) -> RunDecomposition:
    ends = [s - 1 for s in starts[1:]] + [n]
    return RunDecomposition(kind, tuple(zip(starts, ends)))


def peak_runs(p: Perm) -> RunDecomposition:
    """>>> peak_runs((2, 4, 3, 1, 5)).runs
    ((1, 1), (2, 4), (5, 5))
    """
    return _runs_from_starts(peaks(p), len(p), "peak")


def valley_runs(p: Perm) -> RunDecomposition:
    """>>> valley_runs((2, 4, 3, 1, 5)).runs
    ((1, 3), (4, 5))
    """
    return _runs_from_starts(valleys(p), len(p), "valley")


def standardize(w: Sequence[int]) -> Perm:
    """Replace each entry of a word of distinct values by its rank (smallest
    entry becomes 1), yielding the order-isomorphic permutation."""
    if len(w) == 0:
        raise PermutationError("cannot standardize an empty word")
    order = {v: i for i, v in enumerate(sorted(w), start=1)}
    if len(order) != len(w):
        raise PermutationError("word entries must be pairwise distinct")
    return tuple(order[v] for v in w)


def contains_pattern(p: Perm, q: Perm) -> bool:
    """True iff some subsequence of ``p`` is order-isomorphic to ``q``.

    Only patterns of length <= 3 are supported.
    """
    k = len(q)
    if k > 3:
        raise ValueError("patterns longer than 3 are not supported")
    if k > len(p):
        return False
    std_q = standardize(q)
    for sub in itertools.combinations(p, k):
        if standardize(sub) == std_q:
            return True
    return False


# -- lexicographic rank / unrank / successor ---------------------------------


def rank(p: Perm) -> int:
    """Lexicographic position of ``p`` within S_n, counting from 0."""
    n = len(p)
    r = 0
    remaining = sorted(p)
    for i, v in enumerate(p):
        j = remaining.index(v)
        r += j * math.factorial(n - 1 - i)
        remaining.pop(j)
    return r


def unrank(n: int, r: int) -> Perm:
    """Permutation at lexicographic position ``r`` (0-based) in S_n."""
    if n < 1:
        raise PermutationError("length must be >= 1")
    if not 0 <= r < math.factorial(n):
        raise ValueError(f"rank {r} out of range for S_{n}")
    remaining = list(range(1, n + 1))
    out = []
    for i in range(n, 0, -1):
        f = math.factorial(i - 1)
        j, r = divmod(r, f)
        out.append(remaining.pop(j))
    return tuple(out)


def successor(p: Perm) -> Optional[Perm]:
    """Next permutation in lexicographic order, or None at the last."""
    a = list(p)
    n = len(a)
    i = n - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return None
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1 :] = reversed(a[i + 1 :])
    return tuple(a)


def all_perms(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order."""
    p: Optional[Perm] = identity(n)
    while p is not None:
        yield p
        p = successor(p)
