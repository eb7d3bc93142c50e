"""Command line front end: solve, verify, bench and trace.

Exit codes: 0 on success, 1 when a verification sweep finds a violation,
2 on usage or precondition errors.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass
from itertools import product
from pathlib import Path

from . import greedy, greedy_condition, linear, oracle
from .core import drops, max_lex

# The exhaustive engine enumerates n*(n-1)*...*(n-k+1) candidates; these
# bounds keep that under ~1e8.  It is a test instrument, not a fast path.
NAIVE_MAX_LEN = 20
NAIVE_MAX_K = 6

# The greedy engine is quadratic (k scans over n elements); above this the
# bench skips it rather than stall, same as it skips naive.
GREEDY_BENCH_MAX_N = 10_000

EQUIV_MAX_LEN = 9
GAME_MAX_LEN = 7
AUX_MAX_LEN = 6

ENGINES = {
    "naive": oracle.solve_naive,
    "greedy": greedy.solve_greedy,
    "linear": linear.solve_linear,
}


class _UsageError(Exception):
    pass


@dataclass
class BenchRecord:
    """One timing row: engine, input size, deletion count, wall time and
    the engine's own step counter where it has one."""

    algo: str
    n: int
    k: int
    wall_nanos: int
    steps: int | None

    def csv(self) -> str:
        steps = "" if self.steps is None else str(self.steps)
        return f"{self.algo},{self.n},{self.k},{self.wall_nanos},{steps}"


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _size_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")
    if not values or any(v <= 0 for v in values):
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return values


def _add_input_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", nargs="?", default=None, help="the sequence itself")
    parser.add_argument("--file", default=None, metavar="PATH",
                        help="read the sequence from a UTF-8 file (trailing newline stripped)")


def _load_input(args) -> str:
    if (args.input is None) == (args.file is None):
        raise _UsageError("provide exactly one input: positional text or --file")
    if args.file is None:
        return args.input
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(str(exc))
    if text.endswith("\n"):
        text = text[:-1]
    if text.endswith("\r"):
        text = text[:-1]
    return text


def cmd_solve(args) -> int:
    text = _load_input(args)
    if args.k > len(text):
        raise _UsageError("cannot drop more elements than present")
    if args.algo == "naive" and (len(text) > NAIVE_MAX_LEN or args.k > NAIVE_MAX_K):
        raise _UsageError(
            f"naive engine is limited to length <= {NAIVE_MAX_LEN} and k <= {NAIVE_MAX_K}"
        )
    print(ENGINES[args.algo](args.k, text))
    return 0


def _equivalence_sweep(max_len: int, alphabet: str) -> tuple[int, int, str | None]:
    """Compare all three engines on every sequence up to max_len, every k."""
    cases = 0
    mismatches = 0
    first: str | None = None
    for n in range(max_len + 1):
        for raw in product(sorted(alphabet), repeat=n):
            xs = "".join(raw)
            expected = oracle.solve_naive_all_k(xs, dedupe=True)
            for k in range(n + 1):
                cases += 1
                got_greedy = greedy.solve_greedy(k, xs)
                got_linear = linear.solve_linear(k, xs)
                if not (expected[k] == got_greedy == got_linear):
                    mismatches += 1
                    if first is None:
                        first = (
                            f"xs={xs!r} k={k}: naive={expected[k]!r} "
                            f"greedy={got_greedy!r} linear={got_linear!r}"
                        )
    return cases, mismatches, first


def _mono_aux_sweep(max_len: int, alphabet: str) -> tuple[int, int]:
    """Exhaust the prefix-dominance helper over all tails up to max_len."""
    tokens = sorted(alphabet)
    cases = 0
    violations = 0
    for n in range(1, max_len + 1):
        for raw in product(tokens, repeat=n):
            tail = "".join(raw)
            witness = greedy_condition.foot_witness(tail)
            for x in tokens:
                if x < tail[0]:
                    continue
                cases += 1
                if not greedy_condition.check_mono_aux(x, tail, witness):
                    violations += 1
    return cases, violations


def cmd_verify(args) -> int:
    alphabet = args.alphabet
    if not alphabet or len(set(alphabet)) != len(alphabet):
        raise _UsageError("alphabet must be a nonempty string of distinct characters")
    if args.max_len < 1:
        raise _UsageError("--max-len must be >= 1")
    if args.max_len > EQUIV_MAX_LEN:
        raise _UsageError(f"--max-len is capped at {EQUIV_MAX_LEN}")

    bad = 0

    cases, mismatches, first = _equivalence_sweep(args.max_len, alphabet)
    print(f"engine equivalence up to length {args.max_len}: "
          f"{cases} cases, {mismatches} mismatches")
    if first is not None:
        print(f"  first mismatch: {first}")
    bad += mismatches

    game_len = min(args.max_len, GAME_MAX_LEN)
    report = greedy_condition.verify_greedy_condition(game_len, alphabet)
    print(f"exchange game up to length {game_len}:")
    print(report.summary())
    bad += report.violations

    counterexample = greedy.better_global_counterexample("1934", "4234")
    best = max_lex(drops("4234"))
    if counterexample is not None:
        print(
            "better-global principle: counterexample confirmed "
            f"({counterexample!r} from '1934' beats best single drop {best!r} of '4234')"
        )
    else:
        print("better-global principle: counterexample NOT found (one was expected)")
        bad += 1

    aux_len = min(args.max_len, AUX_MAX_LEN)
    aux_cases, aux_violations = _mono_aux_sweep(aux_len, alphabet)
    print(f"prefix-dominance sweep up to tail length {aux_len}: "
          f"{aux_cases} cases, {aux_violations} violations")
    bad += aux_violations

    print("result: " + ("all checks passed" if bad == 0 else f"{bad} problems found"))
    return 0 if bad == 0 else 1


def cmd_bench(args) -> int:
    rng = random.Random(args.seed)
    print("algo,n,k,wall_nanos,steps")
    for n in args.sizes:
        text = "".join(rng.choices("0123456789", k=n))
        k = n // 2
        for algo in ("naive", "greedy", "linear"):
            if algo == "naive" and (n > NAIVE_MAX_LEN or k > NAIVE_MAX_K):
                continue
            if algo == "greedy" and n > GREEDY_BENCH_MAX_N:
                continue
            start = time.perf_counter_ns()
            ENGINES[algo](k, text)
            wall = time.perf_counter_ns() - start
            steps = linear.count_steps(k, text) if algo == "linear" else None
            print(BenchRecord(algo, n, k, wall, steps).csv())
    return 0


def cmd_trace(args) -> int:
    text = _load_input(args)
    if args.k > len(text):
        raise _UsageError("cannot drop more elements than present")
    for ev in linear.scan_events(args.k, text):
        line = f"k={ev.k} acc={ev.prefix!r} rest={ev.suffix!r} {ev.action}"
        if ev.action != "FINISH":
            line += f" {ev.element!r}"
        print(line)
    print(linear.solve_linear(args.k, text))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dropk",
        description="Delete k elements from a sequence so the remainder is "
                    "lexicographically largest.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="print the largest remainder after k deletions")
    solve.add_argument("--k", type=_nonneg_int, required=True, help="number of deletions")
    solve.add_argument("--algo", choices=sorted(ENGINES), default="linear",
                       help="engine to use (default: linear)")
    _add_input_args(solve)
    solve.set_defaults(func=cmd_solve)

    verify = sub.add_parser(
        "verify",
        help="exhaustively check the engines and the greedy exchange argument",
        description="Runs four sweeps: engine equivalence for every sequence over "
                    "the alphabet up to --max-len, the exchange game (capped at "
                    f"length {GAME_MAX_LEN}), the fixed better-global counterexample, "
                    f"and the prefix-dominance helper (capped at length {AUX_MAX_LEN}).",
    )
    verify.add_argument("--max-len", type=_nonneg_int, required=True,
                        help=f"sequence length bound, at most {EQUIV_MAX_LEN}")
    verify.add_argument("--alphabet", required=True,
                        help="distinct characters the sequences are built from")
    verify.set_defaults(func=cmd_verify)

    bench = sub.add_parser("bench", help="time the engines on random digit inputs, CSV output")
    bench.add_argument("--sizes", type=_size_list, required=True,
                       help="comma-separated input lengths; k is n/2")
    bench.add_argument("--seed", type=int, required=True, help="RNG seed for the inputs")
    bench.set_defaults(func=cmd_bench)

    trace = sub.add_parser("trace", help="show every step of the linear scan")
    trace.add_argument("--k", type=_nonneg_int, required=True, help="number of deletions")
    _add_input_args(trace)
    trace.set_defaults(func=cmd_trace)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
