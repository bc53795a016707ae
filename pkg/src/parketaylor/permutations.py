"""Permutations fixing 1 and 2, their adjacencies, inversions and weak order.

Permutations are plain tuples of 1-based letters.  The index set of every
Parke-Taylor coordinate is ``enumerate_sigma(n)``, sorted lexicographically;
that ordering is the column order used throughout the package.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import permutations as _itperms
from typing import Iterable, Sequence

Perm = tuple[int, ...]
Pair = tuple[int, int]


def _pair(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


@lru_cache(maxsize=None)
def enumerate_sigma(n: int) -> tuple[Perm, ...]:
    """All permutations of ``1..n`` starting with ``1, 2``, in lex order."""
    if n < 3:
        raise ValueError(f"enumerate_sigma needs n >= 3, got {n}")
    return tuple((1, 2) + tail for tail in _itperms(range(3, n + 1)))


@lru_cache(maxsize=None)
def sigma_index(n: int) -> dict[Perm, int]:
    return {s: k for k, s in enumerate(enumerate_sigma(n))}


def is_sigma(w: Sequence[int]) -> bool:
    n = len(w)
    return n >= 3 and w[0] == 1 and w[1] == 2 and sorted(w) == list(range(1, n + 1))


def check_perm(w: Sequence[int]) -> Perm:
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w!r} is not a permutation of 1..{len(w)}")
    return w


def cyclic_adjacencies(sigma: Sequence[int]) -> Counter:
    """Multiset of unordered neighbouring pairs, read cyclically."""
    n = len(sigma)
    if n < 3:
        raise ValueError("cyclic adjacencies need a word of length >= 3")
    return Counter(_pair(sigma[i], sigma[(i + 1) % n]) for i in range(n))


def acyclic_adjacencies(w: Sequence[int]) -> Counter:
    return Counter(_pair(w[i], w[i + 1]) for i in range(len(w) - 1))


def value_inversions(sigma: Sequence[int], reduce: bool = False) -> frozenset[Pair]:
    """Pairs ``(a, b)`` with ``a > b`` and ``a`` placed before ``b``.

    With ``reduce`` the pairs are read off ``sigma[2:]`` with every letter
    shifted down by two, i.e. on the ``S_{n-2}`` copy of the word.
    """
    w = [x - 2 for x in sigma[2:]] if reduce else list(sigma)
    return frozenset(
        (w[i], w[j]) for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j]
    )


def weak_order_leq(sigma: Sequence[int], tau: Sequence[int]) -> bool:
    """Right weak order: containment of value-wise inversion sets."""
    if len(sigma) != len(tau):
        raise ValueError("weak order comparison needs permutations of the same size")
    return value_inversions(sigma) <= value_inversions(tau)


def insert_after_letter(
    sigma: Sequence[int], letter: int, delta: Sequence[int], slot: int
) -> Perm:
    """Splice ``delta`` into the gap following 1-based position ``slot``.

    ``slot`` must be at or after the position of ``letter``; ``slot == n``
    appends at the end.
    """
    sigma = tuple(sigma)
    n = len(sigma)
    if letter not in sigma:
        raise ValueError(f"letter {letter} does not occur in {sigma}")
    pos = sigma.index(letter) + 1
    if not pos <= slot <= n:
        raise ValueError(f"slot {slot} is not a gap after letter {letter} (position {pos})")
    out = sigma[:slot] + tuple(delta) + sigma[slot:]
    check_perm(out)
    return out


def splice_at(sigma: Sequence[int], position: int, delta: Sequence[int]) -> Perm:
    """Insert ``delta`` between positions ``position`` and ``position + 1``."""
    sigma = tuple(sigma)
    return sigma[:position] + tuple(delta) + sigma[position:]


def format_perm(w: Iterable[int]) -> str:
    w = tuple(w)
    if len(w) <= 9:
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def parse_perm(text: str) -> Perm:
    text = text.strip()
    if "," in text:
        return check_perm(int(x) for x in text.split(","))
    return check_perm(int(c) for c in text)
