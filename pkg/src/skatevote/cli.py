"""Command-line front end.

Subcommands: winners, trace, axioms-check, axioms-search, axioms-replay,
attack, gen, oracle.  Files are the plain-text election/instance formats;
``-`` reads standard input, so commands compose through pipes.

Exit status: 0 = computed (YES and NO are both answers), 2 = input error,
3 = search budget exceeded (including an axiom search that found nothing
within its budget).  Output is deterministic: same inputs, flags, and seed
give byte-identical bytes.  ``--format records`` switches to line-delimited
``key=value`` records under a one-line schema header for tooling.

SKATEVOTE_THREADS (integer >= 0, 0 = auto) caps the worker count.  Every
solver in this package runs sequentially, so any cap is honored trivially;
the variable is validated here so misconfiguration fails loudly.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import control as ctl
from . import manipulation as mnp
from .axioms import (
    AxiomId,
    SearchBounds,
    check_election,
    check_witness,
    parse_witness,
    search_counterexample,
    serialize_witness,
)
from .election import majority_threshold
from .errors import BudgetExceeded, SkatevoteError
from .fileformat import parse_election, serialize_ballot, serialize_election
from .fixtures import clone_pair_base, clone_pair_cloned
from .rules import bucklin_winners, gen_cyclic, gen_sumpos_gap, sks_winners
from .sampling import SplitMix64, random_election

RECORDS_HEADER = "#schema skatevote.records/1"
SKETCH_NOTE = "sketch-procedure"
SKETCH_NOTE_TEXT = (
    "note: answer from the sketch-based procedure; this size sits beyond "
    "the exhaustively cross-checked envelope"
)

MANIPULATION_PROBLEMS = ("ccwm", "dcwm", "ccm", "cm", "dcm", "dm")
CONTROL_PROBLEMS = ("ccdc", "dcdc", "ccav", "dcav")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _names(items) -> str:
    return ",".join(items)


def _table(mapping) -> str:
    return ",".join(f"{c}:{mapping[c]}" for c in sorted(mapping))


def _emit(lines) -> None:
    sys.stdout.write("\n".join(lines) + "\n")


# --- tabulation ------------------------------------------------------------


def _trace_text_lines(trace, election):
    maj = majority_threshold(election)
    lines = [
        f"rule: {trace.rule}",
        f"winners: {' '.join(trace.winners)}",
        f"decisive stage: {trace.decisive_stage}",
        f"threshold stage: {trace.threshold_stage}",
        f"majority: {maj} (total weight {election.total_weight})",
    ]
    for rec in trace.stages:
        lines.append(
            f"stage {rec.stage}: eligible={_names(rec.eligible)}"
            f" scores[{_table(rec.scores)}]"
            f" sumpos[{_table(rec.sumpos)}]"
            f" majority={_names(rec.majority_reached)}"
        )
    for stage, survivors in trace.reduction_history:
        lines.append(f"reduction at stage {stage}: survivors={_names(survivors)}")
    return lines


def _trace_record_lines(trace):
    lines = []
    for rec in trace.stages:
        lines.append(
            f"record=stage stage={rec.stage}"
            f" eligible={_names(rec.eligible)}"
            f" scores={_table(rec.scores)}"
            f" sumpos={_table(rec.sumpos)}"
            f" majority_reached={_names(rec.majority_reached)}"
        )
    for stage, survivors in trace.reduction_history:
        lines.append(f"record=reduction stage={stage} survivors={_names(survivors)}")
    return lines


def _run_tabulation(args, command: str, with_trace: bool) -> int:
    election = parse_election(_read_text(args.election))
    trace = sks_winners(election) if args.rule == "sks" else bucklin_winners(election)
    if args.format == "records":
        lines = [RECORDS_HEADER]
        if with_trace:
            lines.extend(_trace_record_lines(trace))
        lines.append(
            f"record=result command={command} rule={trace.rule}"
            f" winners={_names(trace.winners)}"
            f" decisive_stage={trace.decisive_stage}"
            f" threshold_stage={trace.threshold_stage}"
            f" majority={majority_threshold(election)}"
            f" total_weight={election.total_weight}"
        )
        _emit(lines)
    elif with_trace:
        _emit(_trace_text_lines(trace, election))
    else:
        _emit([" ".join(trace.winners)])
    return 0


def cmd_winners(args) -> int:
    return _run_tabulation(args, "winners", with_trace=args.trace)


def cmd_trace(args) -> int:
    return _run_tabulation(args, "trace", with_trace=True)


# --- axioms ----------------------------------------------------------------


def _bounds(args) -> SearchBounds:
    defaults = SearchBounds()
    return SearchBounds(
        budget=defaults.budget if args.budget is None else args.budget,
        seed=args.seed,
    )


def cmd_axioms_check(args) -> int:
    axiom = AxiomId.from_string(args.axiom)
    election = parse_election(_read_text(args.election))
    bounds = _bounds(args)
    witness = check_election(axiom, election, bounds)
    if args.format == "records":
        status = "satisfied" if witness is None else "violated"
        _emit([
            RECORDS_HEADER,
            f"record=result command=axioms-check axiom={axiom.value}"
            f" status={status} budget={bounds.budget} seed={bounds.seed}",
        ])
    elif witness is None:
        _emit([
            f"SATISFIED {axiom.value}"
            f" (no violation within budget {bounds.budget}, seed {bounds.seed})"
        ])
    else:
        sys.stdout.write(serialize_witness(witness))
    return 0


def cmd_axioms_search(args) -> int:
    axiom = AxiomId.from_string(args.axiom)
    bounds = _bounds(args)
    witness = search_counterexample(axiom, bounds)
    if args.format == "records":
        status = "no-witness" if witness is None else "violated"
        _emit([
            RECORDS_HEADER,
            f"record=result command=axioms-search axiom={axiom.value}"
            f" status={status} budget={bounds.budget} seed={bounds.seed}",
        ])
    elif witness is None:
        _emit([
            f"NO-WITNESS {axiom.value}"
            f" (budget {bounds.budget}, seed {bounds.seed} exhausted)"
        ])
    else:
        sys.stdout.write(serialize_witness(witness))
    return 0 if witness is not None else 3


def cmd_axioms_replay(args) -> int:
    witness = parse_witness(_read_text(args.witness))
    valid = check_witness(witness)
    if args.format == "records":
        status = "valid" if valid else "invalid"
        _emit([
            RECORDS_HEADER,
            f"record=result command=axioms-replay"
            f" axiom={AxiomId(witness.axiom).value} status={status}",
        ])
        return 0
    lines = [
        f"axiom: {AxiomId(witness.axiom).value}",
        f"replay: {'VALID' if valid else 'INVALID'}",
    ]
    if witness.explanation:
        lines.append(f"explanation: {witness.explanation}")
    _emit(lines)
    return 0


# --- attacks ---------------------------------------------------------------


def _compact_ballot(ballot) -> str:
    return serialize_ballot(ballot).replace(" ", "")


def _solve_attack(problem: str, instance, budget):
    if problem == "ccwm":
        limit = mnp.DEFAULT_NODE_LIMIT if budget is None else budget
        return mnp.solve_ccwm_exact(instance, node_limit=limit)
    if problem == "dcwm":
        return mnp.solve_dcwm(instance)
    if problem in ("ccm", "cm"):
        limit = mnp.DEFAULT_NODE_LIMIT if budget is None else budget
        solver = mnp.solve_ccm if problem == "ccm" else mnp.solve_cm
        return solver(instance, node_limit=limit)
    if problem == "dcm":
        return mnp.solve_dcm(instance)
    if problem == "dm":
        return mnp.solve_dm(instance)
    limit = ctl.ORACLE_NODE_LIMIT if budget is None else budget
    if problem == "ccdc":
        return ctl.solve_ccdc_exact(instance, node_limit=limit)
    if problem == "dcdc":
        return ctl.solve_dcdc_exact(instance, node_limit=limit)
    if problem == "ccav":
        return ctl.solve_ccav_exact(instance, node_limit=limit)
    return ctl.solve_dcav(instance)


def _solve_oracle(problem: str, instance, budget):
    if problem in MANIPULATION_PROBLEMS:
        limit = mnp.ORACLE_NODE_LIMIT if budget is None else budget
        return mnp.oracle_manipulation(instance, node_limit=limit)
    limit = ctl.ORACLE_NODE_LIMIT if budget is None else budget
    return ctl.oracle_control(instance, node_limit=limit)


def _sketch_provenance(command: str, problem: str, instance) -> bool:
    """Solver answers from a heuristic family get flagged; oracles never."""
    if command != "attack":
        return False
    if problem == "dcwm":
        return not mnp.dcwm_within_enumerated_envelope(instance)
    if problem == "dcav":
        return not ctl.dcav_within_swept_envelope(instance)
    return False


def _witness_parts(problem: str, instance, witness):
    """(records encoding, text block lines) for a YES answer."""
    if problem in MANIPULATION_PROBLEMS:
        if not witness.ballots:
            return "empty", ["witness: empty coalition"]
        compact = "|".join(_compact_ballot(b) for b in witness.ballots)
        lines = ["witness:"] + [serialize_ballot(b) for b in witness.ballots]
        return f"profile:{compact}", lines
    if witness.deleted:
        return f"delete:{_names(witness.deleted)}", [
            f"witness: delete {_names(witness.deleted)}"
        ]
    if witness.added:
        ids = ",".join(str(i) for i in witness.added)
        lines = [f"witness: add {ids}"]
        lines.extend(
            f"pool[{i}]: {serialize_ballot(instance.pool[i])}" for i in witness.added
        )
        return f"add:{ids}", lines
    return "empty", ["witness: no action needed"]


def _run_attack(args, command: str) -> int:
    problem = args.problem
    text = _read_text(args.instance)
    if problem in MANIPULATION_PROBLEMS:
        instance = mnp.parse_manipulation_instance(text)
        if problem in ("ccm", "cm", "dcm", "dm"):
            mnp.ensure_unit_weights(instance, problem.upper())
        verify = mnp.verify_witness
    else:
        instance = ctl.parse_control_instance(text)
        if instance.kind != problem:
            raise SkatevoteError(
                f"instance file declares control kind {instance.kind!r},"
                f" but --problem is {problem!r}"
            )
        verify = ctl.verify_witness
    solver = _solve_attack if command == "attack" else _solve_oracle
    witness = solver(problem, instance, args.budget)
    noted = _sketch_provenance(command, problem, instance)
    if witness is not None:
        assert verify(instance, witness)
    if args.format == "records":
        fields = [
            f"record=result command={command} problem={problem}",
            "answer=yes" if witness is not None else "answer=no",
        ]
        if witness is not None:
            fields.append(f"witness={_witness_parts(problem, instance, witness)[0]}")
        if noted:
            fields.append(f"note={SKETCH_NOTE}")
        _emit([RECORDS_HEADER, " ".join(fields)])
        return 0
    lines = [f"problem: {problem}", f"answer: {'YES' if witness is not None else 'NO'}"]
    if witness is not None:
        lines.extend(_witness_parts(problem, instance, witness)[1])
    if noted:
        lines.append(SKETCH_NOTE_TEXT)
    _emit(lines)
    return 0


def cmd_attack(args) -> int:
    return _run_attack(args, "attack")


def cmd_oracle(args) -> int:
    return _run_attack(args, "oracle")


# --- generation ------------------------------------------------------------


def _require_param(value, flag: str, family: str):
    if value is None:
        raise SkatevoteError(f"gen --family {family} requires {flag}")
    return value


def cmd_gen(args) -> int:
    family = args.family
    if family == "cyclic":
        election = gen_cyclic(_require_param(args.k, "--k", family))
    elif family == "sumpos-gap":
        election = gen_sumpos_gap(
            _require_param(args.i, "--i", family),
            _require_param(args.n, "--n", family),
        )
    elif family == "random":
        m = _require_param(args.m, "--m", family)
        n = _require_param(args.n, "--n", family)
        rng = SplitMix64(args.seed)
        election = random_election(
            rng, max_m=m, max_n=n, max_weight=args.max_weight, min_m=m, min_n=n
        )
    else:
        variant = _require_param(args.variant, "--variant", family)
        election = clone_pair_base() if variant == "base" else clone_pair_cloned()
    sys.stdout.write(serialize_election(election))
    return 0


# --- wiring ----------------------------------------------------------------


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit int")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("budget must be a positive integer")
    return value


def _add_format(sub):
    sub.add_argument(
        "--format", choices=("text", "records"), default="text",
        help="human-readable text or line-delimited records",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skatevote",
        description="Skating System Single and Bucklin elections: winners, "
        "axiom hunting, manipulation and control attacks.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    winners = subs.add_parser("winners", help="print the winner set")
    winners.add_argument("election", nargs="?", default="-")
    winners.add_argument("--rule", choices=("sks", "bucklin"), default="sks")
    winners.add_argument("--trace", action="store_true", help="attach the stage trace")
    _add_format(winners)
    winners.set_defaults(handler=cmd_winners)

    trace = subs.add_parser("trace", help="print the full tabulation trace")
    trace.add_argument("election", nargs="?", default="-")
    trace.add_argument("--rule", choices=("sks", "bucklin"), default="sks")
    _add_format(trace)
    trace.set_defaults(handler=cmd_trace)

    check = subs.add_parser(
        "axioms-check", help="hunt for a violation anchored at one election"
    )
    check.add_argument("election", nargs="?", default="-")
    check.add_argument("--axiom", required=True)
    check.add_argument("--seed", type=_u64, default=0)
    check.add_argument("--budget", type=_positive_int, default=None)
    _add_format(check)
    check.set_defaults(handler=cmd_axioms_check)

    search = subs.add_parser(
        "axioms-search", help="seeded bounded search for a violation witness"
    )
    search.add_argument("--axiom", required=True)
    search.add_argument("--seed", type=_u64, default=0)
    search.add_argument("--budget", type=_positive_int, default=None)
    _add_format(search)
    search.set_defaults(handler=cmd_axioms_search)

    replay = subs.add_parser("axioms-replay", help="re-check a stored witness file")
    replay.add_argument("witness", nargs="?", default="-")
    _add_format(replay)
    replay.set_defaults(handler=cmd_axioms_replay)

    attack = subs.add_parser("attack", help="run the solver for one attack problem")
    attack.add_argument("instance", nargs="?", default="-")
    attack.add_argument(
        "--problem", required=True, choices=MANIPULATION_PROBLEMS + CONTROL_PROBLEMS
    )
    attack.add_argument("--budget", type=_positive_int, default=None)
    _add_format(attack)
    attack.set_defaults(handler=cmd_attack)

    oracle = subs.add_parser("oracle", help="run the brute-force oracle instead")
    oracle.add_argument("instance", nargs="?", default="-")
    oracle.add_argument(
        "--problem", required=True, choices=MANIPULATION_PROBLEMS + CONTROL_PROBLEMS
    )
    oracle.add_argument("--budget", type=_positive_int, default=None)
    _add_format(oracle)
    oracle.set_defaults(handler=cmd_oracle)

    gen = subs.add_parser("gen", help="emit a generated election")
    gen.add_argument(
        "--family", required=True, choices=("cyclic", "sumpos-gap", "random", "table2")
    )
    gen.add_argument("--k", type=int, help="cyclic: number of candidates")
    gen.add_argument("--i", type=int, help="sumpos-gap: majority threshold")
    gen.add_argument("--n", type=int, help="sumpos-gap: gap parameter / random: ballots")
    gen.add_argument("--m", type=int, help="random: number of candidates")
    gen.add_argument("--max-weight", type=int, default=1, help="random: weight cap")
    gen.add_argument("--seed", type=_u64, default=0)
    gen.add_argument("--variant", choices=("base", "cloned"), help="table2 selection")
    gen.set_defaults(handler=cmd_gen)

    return parser


def _validate_threads(raw: str | None) -> None:
    if raw is None or raw == "":
        return
    try:
        value = int(raw)
    except ValueError:
        value = -1
    if value < 0:
        raise SkatevoteError(
            f"SKATEVOTE_THREADS must be an integer >= 0 (0 = auto), got {raw!r}"
        )


def main(argv=None) -> int:
    try:
        _validate_threads(os.environ.get("SKATEVOTE_THREADS"))
    except SkatevoteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (SkatevoteError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
