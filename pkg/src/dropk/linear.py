"""Single-pass engine: a monotonic stack over one left-to-right scan.

The traversed prefix lives on a stack that stays weakly descending from
bottom to top.  Each incoming element pops strictly smaller stack tops
while deletions remain (every pop spends one deletion), then is pushed.
When the deletion budget hits zero the rest of the input is kept
verbatim; when input runs out first, the remaining deletions fall on the
stack top.  Every step either consumes an input element or a deletion,
so a full run takes at most n + k + 1 steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator, TypeVar

from .core import check_deletion_count

S = TypeVar("S", str, tuple, list)


def _assemble(like: S, kept: list, tail: S) -> S:
    if isinstance(like, str):
        return "".join(kept) + tail
    if isinstance(like, tuple):
        return tuple(kept) + tail
    return list(kept) + tail


def _require_nondecreasing(acc) -> None:
    for j in range(len(acc) - 1):
        if acc[j + 1] < acc[j]:
            raise ValueError("accumulator must be weakly nondecreasing front to back")


def _scan(k: int, stack: list, rest: S, checked: bool) -> tuple[S, int]:
    # stack holds the traversed prefix oldest-first (weakly descending);
    # one loop iteration mirrors one step of the recursion being counted.
    steps = 0
    i, n = 0, len(rest)
    push = stack.append
    pop = stack.pop
    while True:
        steps += 1
        if checked:
            for j in range(len(stack) - 1):
                if stack[j] < stack[j + 1]:
                    raise ValueError("scan invariant broken: prefix not weakly descending")
        if k == 0:
            return _assemble(rest, stack, rest[i:]), steps
        if i == n:
            return _assemble(rest, stack[: len(stack) - k], rest[n:]), steps
        y = rest[i]
        if stack and stack[-1] < y:
            pop()
            k -= 1
        else:
            push(y)
            i += 1


def gsolve(k: int, acc: S, rest: S, *, checked: bool = False) -> S:
    """Solve ``reverse(acc) + rest`` with ``k`` deletions, resuming a scan
    whose traversed prefix is ``acc``.

    ``acc`` is stored newest-first, so read front to back it must be
    weakly nondecreasing (its reverse, the logical prefix, is weakly
    descending).  That ordering is only validated with ``checked=True``;
    ``k`` is always validated against the combined length.  ``acc`` and
    ``rest`` should be the same kind of sequence.
    """
    if k < 0:
        raise ValueError("deletion count must be >= 0")
    if k > len(acc) + len(rest):
        raise ValueError("cannot drop more elements than present")
    if checked:
        _require_nondecreasing(acc)
    stack = [acc[j] for j in range(len(acc) - 1, -1, -1)]
    result, _ = _scan(k, stack, rest, checked)
    return result


def solve_linear(k: int, xs: S, *, checked: bool = False) -> S:
    """Largest remainder after ``k`` deletions, in one O(n + k) scan."""
    check_deletion_count(k, xs)
    result, _ = _scan(k, [], xs, checked)
    return result


def count_steps(k: int, xs: S) -> int:
    """Number of scan steps :func:`solve_linear` takes on this input.

    Bounded by ``len(xs) + k + 1``: each step consumes an element or a
    deletion, plus one terminal step.
    """
    check_deletion_count(k, xs)
    _, steps = _scan(k, [], xs, False)
    return steps


@dataclass(frozen=True)
class ScanEvent:
    """State right before one scan step and the action it took.

    ``prefix`` is the traversed prefix in logical (descending) order and
    ``suffix`` the not-yet-consumed input, both the same kind of sequence
    as the input.  ``element`` is the element pushed or popped, None for
    the terminal FINISH step.
    """

    action: str  # "PUSH", "POP" or "FINISH"
    element: Any
    k: int
    prefix: Any
    suffix: Any


def scan_events(k: int, xs: S) -> Iterator[ScanEvent]:
    """Replay of the :func:`solve_linear` scan, one event per step.

    Every event snapshots the prefix and suffix, so this is for traces
    and tests, not the hot path.  The number of events equals
    :func:`count_steps`.
    """
    check_deletion_count(k, xs)
    stack: list = []
    i, n = 0, len(xs)
    while True:
        prefix = _assemble(xs, stack, xs[:0])
        suffix = xs[i:]
        if k == 0 or i == n:
            yield ScanEvent("FINISH", None, k, prefix, suffix)
            return
        y = xs[i]
        if stack and stack[-1] < y:
            yield ScanEvent("POP", stack[-1], k, prefix, suffix)
            stack.pop()
            k -= 1
        else:
            yield ScanEvent("PUSH", y, k, prefix, suffix)
            stack.append(y)
            i += 1
