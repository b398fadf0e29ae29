"""Record solver-time growth curves through the command-line interface.

The exact solvers are meant to stay fast as instances grow along the axes
that make brute force blow up: coalition size for manipulation, pool size
for ballot addition, candidate count for candidate deletion.  This script
times `attack` (the shipped solver) and `oracle` (exhaustive search) on
seeded instances of growing size and emits one CSV row per run, so the
contrast between the two is recorded as data rather than asserted.

Oracle runs that would clearly not terminate at desk scale are capped by
--oracle-coalition-cap; an oracle that trips its node budget is recorded
with answer "budget" and exit code 3 instead of crashing the sweep.

Usage:
    python3 scripts/growth_curves.py
    python3 scripts/growth_curves.py --reps 5 --out curves.csv
"""

import argparse
import contextlib
import csv
import io
import statistics
import sys
import tempfile
import time
from pathlib import Path

from skatevote.cli import main as cli_main
from skatevote.control import ControlInstance, serialize_control_instance
from skatevote.election import Ballot, Election
from skatevote.manipulation import ManipulationInstance, serialize_manipulation_instance
from skatevote.sampling import SplitMix64, candidate_names, random_ballot


def timed_run(argv, reps):
    times = []
    code = 0
    out = ""
    for _ in range(reps):
        buf = io.StringIO()
        start = time.perf_counter()
        with contextlib.redirect_stdout(buf):
            code = cli_main(list(argv))
        times.append(time.perf_counter() - start)
        out = buf.getvalue()
    answer = "budget" if code == 3 else ""
    for line in out.splitlines():
        if line.startswith("answer:"):
            answer = line.split(":", 1)[1].strip().lower()
    return statistics.median(times), code, answer


def coalition_instance(size, weighted):
    # Pinned NO instance: d holds a stage-1 majority (weight 9) that no
    # coalition below weight 11 can match, so the oracle must exhaust all
    # orders^size profiles instead of short-circuiting on a witness.
    names = candidate_names(4)
    if weighted:
        sincere = (Ballot(("d", "b", "c", "a"), 3),) * 3
        weights = tuple(2 - (i % 2) for i in range(size))
    else:
        sincere = (Ballot(("d", "b", "c", "a")),) * 9
        weights = (1,) * size
    return ManipulationInstance(names, sincere, weights, "a", "constructive")


def addition_instance(seed, kind, size):
    rng = SplitMix64(seed)
    names = candidate_names(3)
    ballots = tuple(random_ballot(rng, names, 2) for _ in range(4))
    pool = tuple(random_ballot(rng, names, 2) for _ in range(size))
    return ControlInstance(kind, Election(names, ballots), "a", size // 2, pool)


def deletion_instance(seed, kind, m):
    rng = SplitMix64(seed)
    names = candidate_names(m)
    ballots = tuple(random_ballot(rng, names, 2) for _ in range(6))
    return ControlInstance(kind, Election(names, ballots), "a", 2)


def sweep(args):
    rows = []
    case_index = 0

    def record(problem, axis, size, text, commands):
        nonlocal case_index
        case_index += 1
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "instance.txt"
            path.write_text(text)
            for command in commands:
                seconds, code, answer = timed_run(
                    [command, "--problem", problem, str(path)], args.reps
                )
                rows.append(
                    {
                        "problem": problem,
                        "command": command,
                        "axis": axis,
                        "size": size,
                        "median_seconds": f"{seconds:.6f}",
                        "reps": args.reps,
                        "exit_code": code,
                        "answer": answer,
                    }
                )

    for size in range(1, args.max_coalition + 1):
        for problem, weighted in (("ccwm", True), ("ccm", False)):
            inst = coalition_instance(size, weighted)
            commands = ["attack"]
            if size <= args.oracle_coalition_cap:
                commands.append("oracle")
            record(problem, "coalition", size, serialize_manipulation_instance(inst), commands)

    for size in range(2, args.max_pool + 1, 2):
        for problem in ("ccav", "dcav"):
            inst = addition_instance(args.seed + case_index, problem, size)
            record(problem, "pool", size, serialize_control_instance(inst), ["attack", "oracle"])

    for m in range(3, args.max_candidates + 1):
        for problem in ("ccdc", "dcdc"):
            inst = deletion_instance(args.seed + case_index, problem, m)
            record(problem, "candidates", m, serialize_control_instance(inst), ["attack", "oracle"])

    return rows


def emit(rows, out):
    fields = ["problem", "command", "axis", "size", "median_seconds", "reps", "exit_code", "answer"]
    writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--reps", type=int, default=3)
    parser.add_argument("--max-coalition", type=int, default=6)
    parser.add_argument("--max-pool", type=int, default=10)
    parser.add_argument("--max-candidates", type=int, default=8)
    parser.add_argument(
        "--oracle-coalition-cap",
        type=int,
        default=4,
        help="largest coalition to hand to the exhaustive manipulation oracle",
    )
    parser.add_argument("--out", default="-", help="CSV destination, - for stdout")
    args = parser.parse_args(argv)

    rows = sweep(args)
    if args.out == "-":
        emit(rows, sys.stdout)
    else:
        with open(args.out, "w") as fh:
            emit(rows, fh)
        print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
