"""Deletion plans and the exchange game behind the greedy step.

``solve_greedy`` rests on one combinatorial fact: however an opponent
deletes d >= 1 elements of a sequence, the plan can be rewritten so that
it deletes the hill foot while producing a result at least as large.
This module makes that argument executable.  Plans are per-position
keep/delete instructions, ``alter`` is the rewriting strategy, and
``verify_greedy_condition`` plays every round of the game up to a given
length, reporting any violation instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Any, Iterable, Sequence

from .core import lex_le
from .greedy import hill_foot

KEEP = False
DEL = True


@dataclass(frozen=True)
class DelPlan:
    """Per-position deletion instructions for sequences of one length.

    ``actions[i]`` is :data:`DEL` when position ``i`` is to be removed.
    Plans render and parse as a string of ``k``/``d`` letters: "kdkdk"
    deletes positions 1 and 3 of a 5-element sequence.
    """

    actions: tuple[bool, ...]

    @classmethod
    def from_string(cls, text: str) -> DelPlan:
        if set(text) - {"k", "d"}:
            raise ValueError("plan letters must be 'k' or 'd'")
        return cls(tuple(c == "d" for c in text))

    @classmethod
    def deleting(cls, length: int, positions: Iterable[int]) -> DelPlan:
        marks = set(positions)
        if not all(0 <= p < length for p in marks):
            raise ValueError("deletion position out of range")
        return cls(tuple(i in marks for i in range(length)))

    @property
    def base_length(self) -> int:
        return len(self.actions)

    @property
    def deletions(self) -> int:
        return sum(self.actions)

    def __str__(self) -> str:
        return "".join("d" if a else "k" for a in self.actions)


@dataclass(frozen=True)
class FootWitness:
    """Checked claim that position ``index`` is the hill foot of a
    sequence of length ``target_length``."""

    index: int
    target_length: int

    def valid_for(self, xs: Sequence) -> bool:
        """Clause check against a concrete sequence: weakly descending up
        to the index, then either the end or a strict rise."""
        if self.target_length != len(xs) or not 0 <= self.index < len(xs):
            return False
        for j in range(self.index):
            if xs[j] < xs[j + 1]:
                return False
        return self.index == len(xs) - 1 or xs[self.index] < xs[self.index + 1]


@dataclass(frozen=True)
class GameOutcome:
    """One round of the exchange game: the opponent's result, ours, and
    whether domination and foot deletion held."""

    adversary_result: Any
    our_result: Any
    mono_ok: bool
    unfoot_ok: bool


def foot_witness(xs: Sequence) -> FootWitness:
    """The canonical (always valid) witness for a nonempty sequence."""
    return FootWitness(hill_foot(xs), len(xs))


def apply_plan(xs, plan: DelPlan):
    """Carry out the instructions: drop the DEL positions, keep the rest."""
    if plan.base_length != len(xs):
        raise ValueError("plan targets a different length")
    out = xs[:0]
    for i, deleted in enumerate(plan.actions):
        if not deleted:
            out = out + xs[i : i + 1]
    return out


def is_del(i: int, plan: DelPlan) -> bool:
    """Whether the plan deletes position ``i``."""
    if not 0 <= i < plan.base_length:
        raise ValueError("position out of range")
    return plan.actions[i]


def delfoot(witness: FootWitness) -> DelPlan:
    """The single-deletion plan that removes exactly the witnessed foot."""
    return DelPlan.deleting(witness.target_length, [witness.index])


def delete_any(plan: DelPlan) -> DelPlan:
    """One deletion fewer over a one-shorter target.

    Any placement satisfies the callers, so the deletions land on the
    leftmost positions.
    """
    if plan.deletions == 0:
        raise ValueError("plan must delete at least one element")
    return DelPlan(_front_dels(plan.deletions - 1, plan.base_length - 1))


def _front_dels(k: int, n: int) -> tuple[bool, ...]:
    if k > n:
        raise ValueError("more deletions than positions")
    return tuple(i < k for i in range(n))


def alter(plan: DelPlan, witness: FootWitness) -> DelPlan:
    """Rewrite the opponent's plan so it deletes the hill foot without
    ever producing a smaller result.

    Walking positions left to right: keeps before the foot are imitated;
    a keep AT the foot turns into a delete, with the freed deletion's
    neighbour kept and the remaining deletions placed anywhere; a delete
    at the foot means the plan already qualifies and is returned as is; a
    delete before the foot is imitated while further deletions remain,
    otherwise the last deletion must be saved for the foot, so this
    position is kept instead.  The deletion count is always preserved.
    """
    if plan.base_length != witness.target_length:
        raise ValueError("plan and witness target different lengths")
    if plan.deletions == 0:
        raise ValueError("plan must delete at least one element")
    return DelPlan(_alter(plan.actions, witness.index))


def _alter(actions: tuple[bool, ...], foot: int) -> tuple[bool, ...]:
    if actions[0] == KEEP:
        if foot == 0:
            rest = delete_any(DelPlan(actions[1:]))
            return (DEL, KEEP) + rest.actions
        return (KEEP,) + _alter(actions[1:], foot - 1)
    if len(actions) == 1:
        return (DEL,)
    if foot == 0:
        return actions
    if sum(actions[1:]) == 0:
        return (KEEP,) + tuple(j == foot - 1 for j in range(len(actions) - 1))
    return (DEL,) + _alter(actions[1:], foot - 1)


def _require_witness(xs, witness: FootWitness) -> None:
    if not witness.valid_for(xs):
        raise ValueError("witness does not match the sequence")


def check_mono(xs, plan: DelPlan, witness: FootWitness) -> bool:
    """Does the rewritten plan produce a result no smaller than the
    opponent's?"""
    _require_witness(xs, witness)
    return lex_le(apply_plan(xs, plan), apply_plan(xs, alter(plan, witness)))


def check_unfoot(xs, plan: DelPlan, witness: FootWitness) -> bool:
    """Does the rewritten plan delete the hill foot?"""
    _require_witness(xs, witness)
    return is_del(witness.index, alter(plan, witness))


def check_mono_aux(x, tail, witness: FootWitness) -> bool:
    """With ``x`` at least the head of ``tail``: does prefixing ``x`` to
    the foot-deleted tail weakly dominate the tail itself?"""
    if len(tail) == 0:
        raise ValueError("tail must be nonempty")
    if x < tail[0]:
        raise ValueError("x must be >= the head of tail")
    _require_witness(tail, witness)
    return lex_le(tail, _cons(x, apply_plan(tail, delfoot(witness))))


def _cons(x, xs):
    if isinstance(xs, str):
        return x + xs
    if isinstance(xs, tuple):
        return (x,) + xs
    return [x] + xs


def game_outcome(xs, plan: DelPlan, witness: FootWitness) -> GameOutcome:
    """Play one round: rewrite the opponent's plan and compare results."""
    _require_witness(xs, witness)
    altered = alter(plan, witness)
    adversary = apply_plan(xs, plan)
    ours = apply_plan(xs, altered)
    return GameOutcome(
        adversary, ours, lex_le(adversary, ours), is_del(witness.index, altered)
    )


def enumerate_plans(k: int, n: int) -> list[DelPlan]:
    """All C(n, k) plans with ``k`` deletions over length ``n``."""
    if k < 0 or n < 0:
        raise ValueError("counts must be >= 0")
    if k > n:
        raise ValueError("cannot delete more positions than exist")
    return [DelPlan.deleting(n, marks) for marks in combinations(range(n), k)]


@dataclass(frozen=True)
class VerifyReport:
    """Tally of an exhaustive exchange-game sweep."""

    max_len: int
    alphabet: tuple
    cases: int
    maxima_checks: int
    violations: int
    first_counterexample: str | None

    def summary(self) -> str:
        lines = [f"cases: {self.cases}", f"violations: {self.violations}"]
        if self.first_counterexample is not None:
            lines.append(f"first counterexample: {self.first_counterexample}")
        return "\n".join(lines)


def verify_greedy_condition(max_len: int, alphabet) -> VerifyReport:
    """Play every round of the exchange game up to ``max_len``.

    For every sequence over ``alphabet``, every deletion count d >= 1
    and every d-deletion plan, the rewritten plan must weakly dominate
    the opponent's and delete the hill foot.  Independently of the
    rewriting, the best foot-deleting plan must dominate the best
    unrestricted plan; those maxima are compared per sequence and count,
    straight from the enumerated results, so a wrong rewrite cannot hide
    a broken claim.  Violations are collected as data, never raised.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    tokens = tuple(sorted(set(alphabet)))
    if not tokens:
        raise ValueError("alphabet must be nonempty")
    as_str = isinstance(alphabet, str)

    cases = maxima_checks = violations = 0
    first: str | None = None

    for n in range(1, max_len + 1):
        plans_by_count = [enumerate_plans(d, n) for d in range(n + 1)]
        for raw in product(tokens, repeat=n):
            xs = "".join(raw) if as_str else raw
            witness = foot_witness(xs)
            foot = witness.index
            for d in range(1, n + 1):
                best_any = None
                best_foot = None
                for plan in plans_by_count[d]:
                    adversary = apply_plan(xs, plan)
                    altered = alter(plan, witness)
                    ours = apply_plan(xs, altered)
                    cases += 1
                    if not (lex_le(adversary, ours) and altered.actions[foot]):
                        violations += 1
                        if first is None:
                            first = f"xs={xs!r} plan={plan} altered={altered}"
                    if best_any is None or not lex_le(adversary, best_any):
                        best_any = adversary
                    if plan.actions[foot] and (
                        best_foot is None or not lex_le(adversary, best_foot)
                    ):
                        best_foot = adversary
                maxima_checks += 1
                if not lex_le(best_any, best_foot):
                    violations += 1
                    if first is None:
                        first = (
                            f"xs={xs!r} d={d} best={best_any!r} "
                            f"foot-deleting best={best_foot!r}"
                        )

    return VerifyReport(max_len, tokens, cases, maxima_checks, violations, first)
