"""Coalitional manipulation of SkS elections.

An instance is a weighted sincere profile, a list of manipulator weights
whose ballots are free, a target candidate, and a goal: constructive (make
the target the unique winner) or destructive (deny it unique victory).

``solve_ccwm_exact`` decides the constructive problem exactly: every
manipulator may rank the target first without loss (lifting the target on
any successful profile keeps it the unique winner by monotonicity and
positive responsiveness), so only the suborders below the target are
enumerated, and identical-weight manipulators are deduplicated up to
multisets of suborders.

``solve_dcwm`` searches the canonical destructive family: all manipulators
cast the same ballot, some rival first and the target last (safe by the
same monotonicity arguments), sweeping every rival and every middle order
when m <= 6.  The family is provably complete for m <= 4; for m > 6 only a
polynomial slate of middle orders (sincere stage-threat ascending and
descending per stage cut) is tried, and callers surface that provenance.

``oracle_manipulation`` is the plain ground truth: exhaustive search over
all (m!)^|S| profiles with no canonicalization, feasible only at desk scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

from .election import Ballot, CandidateId, Election, valid_candidate_name
from .errors import BudgetExceeded, InvalidInstance, ParseError
from .fileformat import (
    iter_significant,
    parse_ballot_line,
    parse_candidates_line,
    serialize_ballot,
)
from .rules import sks_core, sks_winner_set

GOALS = ("constructive", "destructive")

DEFAULT_NODE_LIMIT = 1_000_000
ORACLE_NODE_LIMIT = 10_000_000


@dataclass(frozen=True)
class ManipulationInstance:
    candidates: tuple[CandidateId, ...]
    sincere: tuple[Ballot, ...]
    manipulator_weights: tuple[int, ...]
    target: CandidateId
    goal: str

    def check(self) -> "ManipulationInstance":
        if not self.candidates or len(set(self.candidates)) != len(self.candidates):
            raise InvalidInstance("candidates must be distinct and nonempty")
        for c in self.candidates:
            if not valid_candidate_name(c):
                raise InvalidInstance(f"bad candidate name: {c!r}")
        cset = set(self.candidates)
        for b in self.sincere:
            if set(b.ranking) != cset or len(b.ranking) != len(self.candidates):
                raise InvalidInstance(f"sincere ballot is not a permutation: {b.ranking}")
            if not isinstance(b.weight, int) or b.weight < 0:
                raise InvalidInstance(f"bad ballot weight: {b.weight!r}")
        for w in self.manipulator_weights:
            if not isinstance(w, int) or w < 0:
                raise InvalidInstance(f"manipulator weights must be ints >= 0: {w!r}")
        if self.target not in cset:
            raise InvalidInstance(f"target {self.target!r} is not a candidate")
        if self.goal not in GOALS:
            raise InvalidInstance(f"goal must be one of {GOALS}: {self.goal!r}")
        total = sum(b.weight for b in self.sincere) + sum(self.manipulator_weights)
        if total < 1:
            raise InvalidInstance("combined weight of voters and manipulators must be >= 1")
        return self

    @property
    def m(self) -> int:
        return len(self.candidates)


@dataclass(frozen=True)
class ManipulationWitness:
    """The manipulators' cast ballots, one per weight in instance order."""

    ballots: tuple[Ballot, ...]


def profile_with(instance: ManipulationInstance, rankings) -> Election:
    """The full election once each manipulator casts the given ranking."""
    cast = tuple(
        Ballot(tuple(r), w) for r, w in zip(rankings, instance.manipulator_weights)
    )
    return Election(instance.candidates, instance.sincere + cast)


def _target_unique(instance, rankings) -> bool:
    return sks_winner_set(profile_with(instance, rankings)) == (instance.target,)


def verify_witness(instance: ManipulationInstance, witness: ManipulationWitness) -> bool:
    """Re-tabulate the full profile and test the instance's goal."""
    instance.check()
    if len(witness.ballots) != len(instance.manipulator_weights):
        raise InvalidInstance("witness must carry one ballot per manipulator")
    for b, w in zip(witness.ballots, instance.manipulator_weights):
        if b.weight != w:
            raise InvalidInstance("witness ballot weights must match the instance")
    unique = _target_unique(instance, [b.ranking for b in witness.ballots])
    return unique if instance.goal == "constructive" else not unique


def solve_ccwm_exact(
    instance: ManipulationInstance, node_limit: int = DEFAULT_NODE_LIMIT
) -> ManipulationWitness | None:
    """Exact constructive decision; the witness is the lexicographically
    least successful canonical profile (target atop every manipulator
    ballot, identical weights deduplicated as multisets)."""
    instance.check()
    if instance.goal != "constructive":
        raise InvalidInstance("solve_ccwm_exact expects a constructive instance")
    rest = tuple(c for c in sorted(instance.candidates) if c != instance.target)
    suborders = sorted(itertools.permutations(rest))
    weights = instance.manipulator_weights
    classes: dict[int, list[int]] = {}
    for i, w in enumerate(weights):
        classes.setdefault(w, []).append(i)
    class_weights = sorted(classes)
    pools = [
        itertools.combinations_with_replacement(suborders, len(classes[w]))
        for w in class_weights
    ]
    nodes = 0
    for assignment in itertools.product(*pools):
        nodes += 1
        if nodes > node_limit:
            raise BudgetExceeded(node_limit)
        rankings: list = [None] * len(weights)
        for w, chosen in zip(class_weights, assignment):
            for i, sub in zip(classes[w], chosen):
                rankings[i] = (instance.target,) + sub
        if _target_unique(instance, rankings):
            return ManipulationWitness(
                tuple(Ballot(r, w) for r, w in zip(rankings, weights))
            )
    return None


def _middle_orders(instance: ManipulationInstance, rival: CandidateId):
    """All (m-2)! middle orders when m <= 6, else a polynomial slate ordered
    by sincere stage-threat (ascending and descending per stage cut)."""
    middles = tuple(
        c for c in sorted(instance.candidates) if c not in (rival, instance.target)
    )
    if len(middles) <= 4:
        yield from sorted(itertools.permutations(middles))
        return
    sincere = Election(instance.candidates, instance.sincere)
    score, sumpos = sincere._tables if instance.sincere else ({}, {})
    seen = set()
    for cut in range(1, len(instance.candidates) + 1):
        def threat(c):
            if not instance.sincere:
                return (0, 0, c)
            return (score[c][cut], -sumpos[c][cut], c)

        for order in (
            tuple(sorted(middles, key=threat)),
            tuple(sorted(middles, key=threat, reverse=True)),
        ):
            if order not in seen:
                seen.add(order)
                yield order


def solve_dcwm(instance: ManipulationInstance) -> ManipulationWitness | None:
    """Destructive decision over the canonical uniform family: every
    manipulator votes rival first, target last."""
    instance.check()
    if instance.goal != "destructive":
        raise InvalidInstance("solve_dcwm expects a destructive instance")
    weights = instance.manipulator_weights
    if not weights or sum(weights) == 0:
        # nothing to cast (weight-0 ballots are inert but must still be emitted)
        filler = tuple(sorted(instance.candidates))
        rankings = [filler] * len(weights)
        if not _target_unique(instance, rankings):
            return ManipulationWitness(
                tuple(Ballot(r, w) for r, w in zip(rankings, weights))
            )
        return None
    rivals = [c for c in sorted(instance.candidates) if c != instance.target]
    for rival in rivals:
        for middles in _middle_orders(instance, rival):
            ranking = (rival,) + middles + (instance.target,)
            rankings = [ranking] * len(weights)
            if not _target_unique(instance, rankings):
                return ManipulationWitness(
                    tuple(Ballot(ranking, w) for w in weights)
                )
    return None


def dcwm_within_enumerated_envelope(instance: ManipulationInstance) -> bool:
    """True when solve_dcwm enumerates every middle order outright instead
    of falling back to the polynomial threat-sorted slate."""
    return len(instance.candidates) <= 6


def _staged_deltas(order, weight, m):
    """Cumulative (score, sumpos) contribution tables of one cast ballot;
    rows indexed by candidate index, columns by stage."""
    dsc = [[0] * (m + 1) for _ in range(m)]
    dsp = [[0] * (m + 1) for _ in range(m)]
    for pos0, c in enumerate(order):
        p = pos0 + 1
        row_sc, row_sp = dsc[c], dsp[c]
        for i in range(p, m + 1):
            row_sc[i] = weight
            row_sp[i] = weight * p
    return dsc, dsp


def oracle_manipulation(
    instance: ManipulationInstance, node_limit: int = ORACLE_NODE_LIMIT
) -> ManipulationWitness | None:
    """Ground truth by brute force: every profile of full rankings, no
    canonicalization, first success in lexicographic profile order."""
    instance.check()
    cands = tuple(sorted(instance.candidates))
    m = len(cands)
    k = len(instance.manipulator_weights)
    if factorial(m) ** k > node_limit:
        raise BudgetExceeded(node_limit)
    index = {c: i for i, c in enumerate(cands)}
    base_sc = [[0] * (m + 1) for _ in range(m)]
    base_sp = [[0] * (m + 1) for _ in range(m)]
    for b in instance.sincere:
        if b.weight == 0:
            continue
        for pos0, name in enumerate(b.ranking):
            p, c = pos0 + 1, index[name]
            row_sc, row_sp = base_sc[c], base_sp[c]
            for i in range(p, m + 1):
                row_sc[i] += b.weight
                row_sp[i] += b.weight * p
    total = sum(b.weight for b in instance.sincere) + sum(instance.manipulator_weights)
    maj = total // 2 + 1
    orders = sorted(itertools.permutations(range(m)))
    deltas = [
        [_staged_deltas(order, w, m) for order in orders]
        for w in instance.manipulator_weights
    ]
    target_idx = (index[instance.target],)
    constructive = instance.goal == "constructive"
    sc = [row[:] for row in base_sc]
    sp = [row[:] for row in base_sp]
    choice = [0] * k

    def success() -> bool:
        winners, _, _, _ = sks_core(sc, sp, maj, m)
        return winners == target_idx if constructive else winners != target_idx

    def walk(s: int) -> bool:
        if s == k:
            return success()
        for ri in range(len(orders)):
            dsc, dsp = deltas[s][ri]
            for c in range(m):
                row_sc, row_sp, d_sc, d_sp = sc[c], sp[c], dsc[c], dsp[c]
                for i in range(1, m + 1):
                    row_sc[i] += d_sc[i]
                    row_sp[i] += d_sp[i]
            choice[s] = ri
            if walk(s + 1):
                return True
            for c in range(m):
                row_sc, row_sp, d_sc, d_sp = sc[c], sp[c], dsc[c], dsp[c]
                for i in range(1, m + 1):
                    row_sc[i] -= d_sc[i]
                    row_sp[i] -= d_sp[i]
        return False

    if walk(0):
        ballots = tuple(
            Ballot(tuple(cands[i] for i in orders[choice[s]]), w)
            for s, w in enumerate(instance.manipulator_weights)
        )
        return ManipulationWitness(ballots)
    return None


def ensure_unit_weights(instance: ManipulationInstance, name: str):
    if any(b.weight != 1 for b in instance.sincere) or any(
        w != 1 for w in instance.manipulator_weights
    ):
        raise InvalidInstance(f"{name} instances are unweighted")


def solve_ccm(instance, node_limit: int = DEFAULT_NODE_LIMIT):
    instance.check()
    ensure_unit_weights(instance, "CCM")
    return solve_ccwm_exact(instance, node_limit)


def solve_cm(instance, node_limit: int = DEFAULT_NODE_LIMIT):
    instance.check()
    ensure_unit_weights(instance, "CM")
    if len(instance.manipulator_weights) != 1:
        raise InvalidInstance("CM instances have exactly one manipulator")
    return solve_ccwm_exact(instance, node_limit)


def solve_dcm(instance):
    instance.check()
    ensure_unit_weights(instance, "DCM")
    return solve_dcwm(instance)


def solve_dm(instance):
    instance.check()
    ensure_unit_weights(instance, "DM")
    if len(instance.manipulator_weights) != 1:
        raise InvalidInstance("DM instances have exactly one manipulator")
    return solve_dcwm(instance)


# --- instance files --------------------------------------------------------


def parse_manipulation_instance(text: str) -> ManipulationInstance:
    """Election lines followed by a trailer::

        manipulators: 2,2
        target: c
        goal: constructive
    """
    candidates = None
    sincere = []
    trailer: dict[str, str] = {}
    trailer_keys = ("manipulators", "target", "goal")
    for no, line in iter_significant(text):
        head = line.partition(":")[0].strip()
        if candidates is None:
            candidates = parse_candidates_line(no, line)
        elif head in trailer_keys:
            if head in trailer:
                raise ParseError(no, f"duplicate {head!r} line")
            trailer[head] = line.partition(":")[2].strip()
        elif trailer:
            raise ParseError(no, "ballots must precede the trailer")
        else:
            sincere.append(parse_ballot_line(no, line, candidates))
    if candidates is None:
        raise ParseError(0, "no 'candidates:' line found")
    for key in ("manipulators", "target", "goal"):
        if key not in trailer:
            raise ParseError(0, f"missing {key!r} line")
    raw = trailer["manipulators"]
    try:
        weights = tuple(int(tok) for tok in raw.split(",")) if raw else ()
    except ValueError:
        raise ParseError(0, f"bad manipulator weights: {raw!r}") from None
    return ManipulationInstance(
        candidates=candidates,
        sincere=tuple(sincere),
        manipulator_weights=weights,
        target=trailer["target"],
        goal=trailer["goal"],
    ).check()


def serialize_manipulation_instance(instance: ManipulationInstance) -> str:
    instance.check()
    lines = ["candidates: " + ",".join(instance.candidates)]
    lines.extend(serialize_ballot(b) for b in instance.sincere)
    lines.append("manipulators: " + ",".join(str(w) for w in instance.manipulator_weights))
    lines.append(f"target: {instance.target}")
    lines.append(f"goal: {instance.goal}")
    return "\n".join(lines) + "\n"
