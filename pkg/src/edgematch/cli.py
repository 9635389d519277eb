"""``edgematch`` command line: solve, verify, gen, render, bench.

Exit codes: 0 solvable/valid, 1 unsolvable/invalid, 2 usage or internal error.
Each command prints a one-line verdict on standard output.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
import time
from pathlib import Path
from typing import Callable

from .core import (
    Border,
    BudgetExceeded,
    EdgeMatchError,
    Instance,
    InvalidSolution,
    Moves,
    Solution,
    verify_solution,
)
from .formats import emit_instance, emit_solution, parse_instance, parse_solution
from .generate import parse_clauses, parse_values, random_instance, solvable_row
from .grid import solve_grid_inplace
from .oracle import SatInstance, ThreePartitionInstance, brute_solve, sat_brute, threepart_brute
from .reductions import encode_3part, encode_sat, solution_from_assignment, solution_from_partition
from .rowsolvers import (
    DEFAULT_BUDGET,
    solve_rotations_only,
    solve_swap_flip,
    solve_swap_only,
    solve_swap_rotate,
)

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2
VARIANTS = ("auto", "swap-flip", "swap", "rotations", "swap-rotate", "grid", "brute")


class CliError(EdgeMatchError):
    pass


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    raw = os.environ.get("EDGEMATCH_BUDGET")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise CliError(f"EDGEMATCH_BUDGET must be an integer, got {raw!r}") from None
    if value < 1:
        raise CliError("EDGEMATCH_BUDGET must be positive")
    return value


def select_variant(inst: Instance, fallback_brute: bool = False) -> str:
    """Dispatch on (rows, moves, border) to the specialized solver."""
    kind, moves = inst.border.kind, inst.moves
    if moves == Moves():
        return "identity"
    if inst.rows == 1:
        if moves == Moves(swap=True, flip=True) and kind in ("free", "cyclic-h"):
            return "swap-flip"
        if moves == Moves(swap=True) and kind in ("free", "cyclic-h"):
            return "swap"
        if moves == Moves(rotate=True) and kind == "free":
            return "rotations"
        if moves == Moves(swap=True, rotate=True) and kind in ("free", "cyclic-h"):
            return "swap-rotate"
    if moves == Moves(rotate=True) and kind == "free":
        return "grid"
    if fallback_brute:
        return "brute"
    raise CliError(
        f"no specialized solver for {inst.rows}x{inst.cols}, moves {{{moves}}}, border {inst.border}; "
        "pass --fallback-brute to search exhaustively"
    )


def solve_identity(inst: Instance) -> Solution | None:
    """Without moves the only candidate layout is the given one."""
    m = inst.cols
    sol = Solution([[(r * m + c, 0) for c in range(m)] for r in range(inst.rows)])
    return sol if verify_solution(inst, sol) else None


def run_variant(inst: Instance, variant: str, method: str = "states", cap: int = 30) -> Solution | None:
    solvers: dict[str, Callable[[Instance], Solution | None]] = {
        "swap-flip": solve_swap_flip,
        "swap": solve_swap_only,
        "rotations": solve_rotations_only,
        "swap-rotate": lambda i: solve_swap_rotate(i, method=method, budget=budget_from_env()),
        "grid": solve_grid_inplace,
        "brute": lambda i: brute_solve(i, cap=cap),
        "identity": solve_identity,
    }
    return solvers[variant](inst)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def cmd_solve(args) -> int:
    inst = parse_instance(_read(args.instance))
    variant = args.variant
    if variant == "auto":
        variant = select_variant(inst, args.fallback_brute)
    sol = run_variant(inst, variant, args.method, args.cap)
    if sol is None:
        print(f"unsolvable variant={variant}")
        return EXIT_NO
    if not verify_solution(inst, sol):  # pragma: no cover - solver bug guard
        raise CliError(f"{variant} produced an invalid solution")
    if args.output:
        _write(args.output, emit_solution(sol))
    print(f"solvable variant={variant}")
    return EXIT_YES


def cmd_verify(args) -> int:
    inst = parse_instance(_read(args.instance))
    sol = parse_solution(_read(args.solution))
    try:
        ok = verify_solution(inst, sol)
    except InvalidSolution as e:
        print(f"invalid {e}")
        return EXIT_NO
    print("valid" if ok else "invalid edges do not match")
    return EXIT_YES if ok else EXIT_NO


def cmd_gen(args) -> int:
    sol = None
    if args.kind == "sat1in3":
        clauses = parse_clauses(args.clauses)
        if not clauses:
            raise CliError("--clauses is empty")
        n = args.vars or max(max(c) for c in clauses)
        sat = SatInstance(n, tuple(clauses), allow_repeats=args.allow_repeats)
        inst, gmap = encode_sat(sat, literal_singletons=args.literal_singletons)
        if args.solution_out:
            assignment = sat_brute(sat)
            if assignment is not None:
                sol = solution_from_assignment(sat, gmap, assignment)
    elif args.kind == "3part":
        values = parse_values(args.values)
        if not values or len(values) % 3:
            raise CliError("--values needs 3m integers")
        target = args.target if args.target is not None else sum(values) // (len(values) // 3)
        tp = ThreePartitionInstance(tuple(values), target, check_range=not args.any_range)
        inst, gmap = encode_3part(tp, args.border)
        if args.solution_out:
            partition = threepart_brute(tp)
            if partition is not None:
                sol = solution_from_partition(tp, gmap, partition)
    else:
        rng = random.Random(args.seed)
        moves = Moves.of(*[x for x in args.moves.split(",") if x])
        border = _border(args.border)
        if args.solvable:
            if args.rows != 1:
                raise CliError("--solvable only builds single rows")
            inst = solvable_row(args.cols, args.colors, moves, border, rng)
        else:
            inst = random_instance(args.rows, args.cols, args.colors, moves, border, rng)
    _write(args.output, emit_instance(inst))
    if args.solution_out:
        if sol is None:
            print("unsolvable no constructed solution", file=sys.stderr)
            return EXIT_NO
        _write(args.solution_out, emit_solution(sol))
    return EXIT_YES


def _border(text: str) -> Border:
    if text.startswith("mono:"):
        return Border.mono(int(text[5:]))
    return Border(text)


def render(inst: Instance, sol: Solution | None = None) -> str:
    """Each piece as a 3x5 block: top centered, left and right on the middle
    line, bottom centered. Wider blocks are used once ids reach 100."""
    board = sol.placed(inst) if sol is not None else [
        list(inst.pieces[r * inst.cols:(r + 1) * inst.cols]) for r in range(inst.rows)
    ]
    w = max(2, len(str(inst.num_colors - 1)))
    width = 2 * w + 1
    out = []
    for row in board:
        top, mid, bot = [], [], []
        for p in row:
            top.append(str(p.top).center(width))
            mid.append(str(p.left).ljust(w) + " " + str(p.right).rjust(w))
            bot.append(str(p.bottom).center(width))
        out += ["|".join(top), "|".join(mid), "|".join(bot)]
        out.append("+".join("-" * width for _ in row))
    return "\n".join(out[:-1]) + "\n"


def cmd_render(args) -> int:
    inst = parse_instance(_read(args.instance))
    sol = parse_solution(_read(args.solution)) if args.solution else None
    if sol is not None:
        verify_solution(inst, sol)  # structural errors surface before drawing
    sys.stdout.write(render(inst, sol))
    return EXIT_YES


def cmd_bench(args) -> int:
    rng = random.Random(args.seed)
    moves = {
        "swap-flip": Moves(swap=True, flip=True),
        "swap": Moves(swap=True),
        "rotations": Moves(rotate=True),
        "swap-rotate": Moves(swap=True, rotate=True),
    }[args.variant]
    times = []
    solved = None
    for _ in range(args.repeat):
        inst = solvable_row(args.pieces, args.colors, moves, rng=rng) if args.solvable else \
            random_instance(1, args.pieces, args.colors, moves, rng=rng)
        t0 = time.perf_counter()
        solved = run_variant(inst, args.variant) is not None
        times.append(time.perf_counter() - t0)
    print(
        f"variant={args.variant} M={args.pieces} K={args.colors} repeat={args.repeat} "
        f"best={min(times):.4f}s mean={sum(times) / len(times):.4f}s last={'solvable' if solved else 'unsolvable'}"
    )
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="edgematch", description="Edge-matching puzzle solvers and generators.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="decide an instance file and optionally write a solution")
    s.add_argument("instance", help="instance file, or - for stdin")
    s.add_argument("--variant", choices=VARIANTS, default="auto")
    s.add_argument("--fallback-brute", action="store_true", help="use brute force when no solver applies")
    s.add_argument("--method", choices=("states", "enumerate"), default="states",
                   help="swap-rotate decision procedure")
    s.add_argument("--cap", type=int, default=30, help="cell cap for brute force")
    s.add_argument("-o", "--output", help="write the solution file here")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a solution file against an instance file")
    v.add_argument("instance")
    v.add_argument("solution")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="emit an instance file")
    g.add_argument("kind", choices=("sat1in3", "3part", "random"))
    g.add_argument("--clauses", default="", help='e.g. "1 2 3; 2 3 4"')
    g.add_argument("--vars", type=int, help="number of variables (default: largest index used)")
    g.add_argument("--allow-repeats", action="store_true")
    g.add_argument("--literal-singletons", action="store_true",
                   help="all-blank accordance piece for single-occurrence variables")
    g.add_argument("--values", default="", help="3m integers for 3part")
    g.add_argument("--target", type=int)
    g.add_argument("--any-range", action="store_true", help="skip the S/4 < v < S/2 check")
    g.add_argument("--rows", type=int, default=1)
    g.add_argument("--cols", type=int, default=6)
    g.add_argument("--colors", type=int, default=3)
    g.add_argument("--moves", default="swap,rotate")
    g.add_argument("--border", default="free", help="free, mono:<c>, cyclic or cyclic-h (3part: free or mono)")
    g.add_argument("--solvable", action="store_true", help="random: build a solvable row")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output", help="instance file (default stdout)")
    g.add_argument("--solution-out", help="also write the constructed solution (sat1in3, 3part)")
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("render", help="ASCII drawing of an instance or solved board")
    r.add_argument("instance")
    r.add_argument("--solution")
    r.set_defaults(func=cmd_render)

    b = sub.add_parser("bench", help="time a single-row solver on random instances")
    b.add_argument("--variant", choices=("swap-flip", "swap", "rotations", "swap-rotate"), default="swap-rotate")
    b.add_argument("--pieces", type=int, default=10**5)
    b.add_argument("--colors", type=int, default=2)
    b.add_argument("--repeat", type=int, default=3)
    b.add_argument("--solvable", action="store_true")
    b.add_argument("--seed", type=int, default=0)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code else EXIT_YES
    if args.command == "gen" and args.kind == "3part" and args.border not in ("free", "mono"):
        print("error --border must be free or mono for 3part")
        return EXIT_ERROR
    try:
        return args.func(args)
    except (EdgeMatchError, BudgetExceeded, ValueError, OSError) as e:
        print(f"error {e}")
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
