"""Sequences over a totally ordered alphabet, and one-step deletions.

Everything in this package works on any sliceable sequence whose slices
concatenate (str, tuple, list) and whose elements support ``<``.  Strings
are the common case: characters compare by Unicode scalar value, so digit
strings order the way equal-width numbers do.
"""

from __future__ import annotations

from typing import Iterable, Sequence, TypeVar

S = TypeVar("S", str, tuple, list)


def lex_le(a: Sequence, b: Sequence) -> bool:
    """True iff ``a`` is lexicographically no larger than ``b``.

    The empty sequence is below everything, a strictly smaller head
    decides, and equal heads defer to the tails.  Consequently a proper
    prefix sits below its extensions ("87" is below "875") and never the
    other way around.  Only ``<`` is used on elements, so any total
    element order works.
    """
    for x, y in zip(a, b):
        if x < y:
            return True
        if y < x:
            return False
    return len(a) <= len(b)


def max_lex(candidates: Iterable[S]) -> S:
    """The largest candidate under :func:`lex_le`.

    Ties between equal candidates resolve to the first occurrence, which
    keeps traces deterministic.  Raises ``ValueError`` on an empty
    collection.
    """
    best = None
    seen = False
    for c in candidates:
        if not seen:
            best, seen = c, True
        elif not lex_le(c, best):
            best = c
    if not seen:
        raise ValueError("empty candidate set")
    return best


def drops(xs: S) -> list[S]:
    """Every way to delete exactly one element, in position order.

    Entry ``i`` is ``xs`` with position ``i`` removed; there are exactly
    ``len(xs)`` entries, each one element shorter.  Raises ``ValueError``
    on the empty sequence.
    """
    if len(xs) == 0:
        raise ValueError("drops undefined on empty sequence")
    return [xs[:i] + xs[i + 1 :] for i in range(len(xs))]


def check_deletion_count(k: int, xs: Sequence) -> None:
    """Shared guard for every solver entry point: 0 <= k <= len(xs)."""
    if k < 0:
        raise ValueError("deletion count must be >= 0")
    if k > len(xs):
        raise ValueError("cannot drop more elements than present")
