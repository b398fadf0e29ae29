"""Electoral control of SkS elections by deleting candidates or adding votes.

Four decision kinds over a registered election, a target candidate, and an
action budget k:

- ``ccdc``: delete up to k non-target candidates so the target wins alone;
- ``dcdc``: delete up to k non-target candidates (never the target) so the
  target is not the unique winner;
- ``ccav``: register up to k ballots from a spare pool so the target wins
  alone;
- ``dcav``: register up to k pool ballots so the target is denied unique
  victory.

The first three are decided exactly by exhaustive search over action
subsets, smallest subsets first and lexicographically least within a size.
``solve_dcav`` runs a polynomial procedure built around the staged structure
of the rule: Bucklin winners bound SkS winners, so any addition set that
pushes a rival past the target at some stage settles the instance; the
procedure sweeps a greedy family per (rival, stage cut, prefix lengths) with
pool ballots ranked by how much they boost the rival at the cut, how late
they park the target, and the sumpos edge they hand the rival.  Answers on
instances wider than the exhaustively cross-checked envelope should be
surfaced with that provenance (the CLI does).

``oracle_control`` is an independently written exhaustive enumeration used
as ground truth for all four kinds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .election import Ballot, CandidateId, Election, remove_candidates
from .errors import BudgetExceeded, InvalidInstance, ParseError
from .fileformat import (
    iter_significant,
    parse_ballot_line,
    parse_candidates_line,
    serialize_ballot,
)
from .rules import bucklin_winner_set, sks_winner_set

KINDS = ("ccdc", "dcdc", "ccav", "dcav")

ORACLE_NODE_LIMIT = 10_000_000

# When the greedy family answers NO, sweeps up to this many addition subsets
# to confirm.  Keeps solve_dcav exact whenever the subset space fits (pools
# of a dozen ballots or so); beyond it the answer is greedy-only and callers
# should surface that provenance.
DCAV_SWEEP_LIMIT = 4096


@dataclass(frozen=True)
class ControlInstance:
    kind: str
    election: Election
    target: CandidateId
    limit: int
    pool: tuple[Ballot, ...] = ()

    def check(self) -> "ControlInstance":
        if self.kind not in KINDS:
            raise InvalidInstance(f"kind must be one of {KINDS}: {self.kind!r}")
        self.election.check()
        if self.target not in set(self.election.candidates):
            raise InvalidInstance(f"target {self.target!r} is not a candidate")
        if not isinstance(self.limit, int) or self.limit < 0:
            raise InvalidInstance(f"limit must be an int >= 0: {self.limit!r}")
        cset = set(self.election.candidates)
        m = len(self.election.candidates)
        for b in self.pool:
            if set(b.ranking) != cset or len(b.ranking) != m:
                raise InvalidInstance(f"pool ballot is not a permutation: {b.ranking}")
            if not isinstance(b.weight, int) or b.weight < 0:
                raise InvalidInstance(f"bad pool ballot weight: {b.weight!r}")
        if self.kind in ("ccdc", "dcdc") and self.pool:
            raise InvalidInstance("deletion instances take no pool")
        return self


@dataclass(frozen=True)
class ControlWitness:
    """Deleted candidate names, or indices into the pool, action-sorted."""

    deleted: tuple[CandidateId, ...] = ()
    added: tuple[int, ...] = ()


def added_ballots(instance: ControlInstance, witness: ControlWitness):
    return tuple(instance.pool[i] for i in witness.added)


def apply_witness(instance: ControlInstance, witness: ControlWitness) -> Election:
    """The election after performing the witnessed action."""
    if witness.deleted:
        return remove_candidates(instance.election, witness.deleted)
    if witness.added:
        return Election(
            instance.election.candidates,
            instance.election.ballots + added_ballots(instance, witness),
        )
    return instance.election


def verify_witness(instance: ControlInstance, witness: ControlWitness) -> bool:
    instance.check()
    if witness.deleted and witness.added:
        raise InvalidInstance("a control witness deletes or adds, not both")
    if len(witness.deleted) > instance.limit or len(witness.added) > instance.limit:
        raise InvalidInstance("witness exceeds the action budget")
    if instance.kind in ("ccav", "dcav"):
        if witness.deleted:
            raise InvalidInstance("vote-addition witnesses add ballots")
        if any(not 0 <= i < len(instance.pool) for i in witness.added):
            raise InvalidInstance("pool index out of range")
        if len(set(witness.added)) != len(witness.added):
            raise InvalidInstance("pool indices must be distinct")
    else:
        if witness.added:
            raise InvalidInstance("candidate-deletion witnesses delete candidates")
        if instance.target in witness.deleted:
            raise InvalidInstance("the target is never deleted")
    outcome = sks_winner_set(apply_witness(instance, witness))
    unique = outcome == (instance.target,)
    return unique if instance.kind.startswith("cc") else not unique


def _deletion_subsets(instance: ControlInstance):
    others = [c for c in sorted(instance.election.candidates) if c != instance.target]
    for size in range(0, min(instance.limit, len(others)) + 1):
        yield from itertools.combinations(others, size)


def _addition_subsets(instance: ControlInstance):
    for size in range(0, min(instance.limit, len(instance.pool)) + 1):
        yield from itertools.combinations(range(len(instance.pool)), size)


def solve_ccdc_exact(
    instance: ControlInstance, node_limit: int = ORACLE_NODE_LIMIT
) -> ControlWitness | None:
    """Exhaustive, exact; witness is the smallest (then lex-least) deletion."""
    instance.check()
    if instance.kind != "ccdc":
        raise InvalidInstance("solve_ccdc_exact expects kind 'ccdc'")
    nodes = 0
    for subset in _deletion_subsets(instance):
        nodes += 1
        if nodes > node_limit:
            raise BudgetExceeded(node_limit)
        shrunk = remove_candidates(instance.election, subset)
        if sks_winner_set(shrunk) == (instance.target,):
            return ControlWitness(deleted=subset)
    return None


def solve_dcdc_exact(
    instance: ControlInstance, node_limit: int = ORACLE_NODE_LIMIT
) -> ControlWitness | None:
    instance.check()
    if instance.kind != "dcdc":
        raise InvalidInstance("solve_dcdc_exact expects kind 'dcdc'")
    nodes = 0
    for subset in _deletion_subsets(instance):
        nodes += 1
        if nodes > node_limit:
            raise BudgetExceeded(node_limit)
        shrunk = remove_candidates(instance.election, subset)
        if sks_winner_set(shrunk) != (instance.target,):
            return ControlWitness(deleted=subset)
    return None


def solve_ccav_exact(
    instance: ControlInstance, node_limit: int = ORACLE_NODE_LIMIT
) -> ControlWitness | None:
    instance.check()
    if instance.kind != "ccav":
        raise InvalidInstance("solve_ccav_exact expects kind 'ccav'")
    nodes = 0
    base = instance.election
    for subset in _addition_subsets(instance):
        nodes += 1
        if nodes > node_limit:
            raise BudgetExceeded(node_limit)
        grown = Election(base.candidates, base.ballots + tuple(instance.pool[i] for i in subset))
        if sks_winner_set(grown) == (instance.target,):
            return ControlWitness(added=subset)
    return None


def _dcav_family(instance: ControlInstance):
    """Greedy addition sets: per rival and stage cut, split the pool into
    rival boosters and fillers and sweep both prefix lengths, smallest sets
    first.  Each sub-pool is tried under three orderings: the headline key
    (rival score gain desc, target lateness desc, rival sumpos edge desc),
    a score-difference key (rival gain minus target gain, so ballots that
    also feed the target sink), and a light-first key (smallest weight, to
    dodge majority-threshold overshoot).  All booster/filler ordering
    combinations are swept; duplicates are emitted once."""
    target = instance.target
    cands = sorted(instance.election.candidates)
    m = len(cands)
    pool = instance.pool
    k = min(instance.limit, len(pool))
    seen = set()

    def emit(indices):
        key = tuple(sorted(indices))
        if key not in seen:
            seen.add(key)
            return key
        return None

    first = emit(())
    if first is not None:
        yield first
    for rival in cands:
        if rival == target:
            continue
        for cut in range(1, m + 1):
            def headline(i):
                b = pool[i]
                gain = b.weight if b.positions[rival] <= cut else 0
                late = b.positions[target]
                adv = (b.positions[target] * b.weight if b.positions[target] <= cut else 0) - (
                    b.positions[rival] * b.weight if b.positions[rival] <= cut else 0
                )
                return (-gain, -late, -adv, i)

            def difference(i):
                b = pool[i]
                gain = b.weight if b.positions[rival] <= cut else 0
                tgain = b.weight if b.positions[target] <= cut else 0
                return (tgain - gain, -b.positions[target], i)

            def light(i):
                b = pool[i]
                return (b.weight, -b.positions[target], i)

            boosters = [i for i in range(len(pool)) if pool[i].positions[rival] <= cut]
            fillers = [i for i in range(len(pool)) if pool[i].positions[rival] > cut]
            booster_orders = _distinct(
                [sorted(boosters, key=key) for key in (headline, difference, light)]
            )
            filler_orders = _distinct(
                [sorted(fillers, key=key) for key in (headline, difference, light)]
            )
            for total in range(1, k + 1):
                for b_order in booster_orders:
                    for f_order in filler_orders:
                        for take_boost in range(min(total, len(b_order)), -1, -1):
                            take_fill = total - take_boost
                            if take_fill > len(f_order):
                                continue
                            got = emit(b_order[:take_boost] + f_order[:take_fill])
                            if got is not None:
                                yield got


def _distinct(orderings):
    out = []
    for order in orderings:
        if order not in out:
            out.append(order)
    return out


def dcav_within_swept_envelope(instance: ControlInstance) -> bool:
    """True when a NO answer from solve_dcav was confirmed by a full sweep
    of the addition subsets rather than resting on the greedy family."""
    depth = min(instance.limit, len(instance.pool))
    return sum(comb(len(instance.pool), s) for s in range(depth + 1)) <= DCAV_SWEEP_LIMIT


def solve_dcav(instance: ControlInstance) -> ControlWitness | None:
    """Polynomial procedure: try every greedy addition set; a set counts as
    a win when the target either drops out of the Bucklin winner set (which
    contains every SkS winner) or fails to be the unique SkS winner.

    Greedy prefixes cannot express every success (adding ballots raises the
    majority threshold, so a win can require a total added weight in a
    narrow window, a subset-sum flavor of choice), so a NO from the family
    is confirmed by brute force whenever the subset space is within
    DCAV_SWEEP_LIMIT.  Pools too large for the sweep get the greedy answer;
    check dcav_within_swept_envelope to tell the regimes apart."""
    instance.check()
    if instance.kind != "dcav":
        raise InvalidInstance("solve_dcav expects kind 'dcav'")
    base = instance.election

    def dethroned(indices):
        grown = Election(
            base.candidates, base.ballots + tuple(instance.pool[i] for i in indices)
        )
        if instance.target not in bucklin_winner_set(grown):
            return True
        return sks_winner_set(grown) != (instance.target,)

    for indices in _dcav_family(instance):
        if dethroned(indices):
            return ControlWitness(added=indices)
    if dcav_within_swept_envelope(instance):
        for subset in _addition_subsets(instance):
            if dethroned(subset):
                return ControlWitness(added=subset)
    return None


def oracle_control(
    instance: ControlInstance, node_limit: int = ORACLE_NODE_LIMIT
) -> ControlWitness | None:
    """Ground truth for every kind by plain exhaustive enumeration."""
    instance.check()
    want_unique = instance.kind.startswith("cc")
    if instance.kind in ("ccdc", "dcdc"):
        others = [c for c in sorted(instance.election.candidates) if c != instance.target]
        depth = min(instance.limit, len(others))
        space = sum(comb(len(others), s) for s in range(depth + 1))
        if space > node_limit:
            raise BudgetExceeded(node_limit)
        for size in range(depth + 1):
            for gone in itertools.combinations(others, size):
                left = remove_candidates(instance.election, gone)
                unique = sks_winner_set(left) == (instance.target,)
                if unique == want_unique:
                    return ControlWitness(deleted=gone)
        return None
    pool = instance.pool
    depth = min(instance.limit, len(pool))
    space = sum(comb(len(pool), s) for s in range(depth + 1))
    if space > node_limit:
        raise BudgetExceeded(node_limit)
    for size in range(depth + 1):
        for chosen in itertools.combinations(range(len(pool)), size):
            grown = Election(
                instance.election.candidates,
                instance.election.ballots + tuple(pool[i] for i in chosen),
            )
            unique = sks_winner_set(grown) == (instance.target,)
            if unique == want_unique:
                return ControlWitness(added=chosen)
    return None


# --- instance files --------------------------------------------------------


def parse_control_instance(text: str) -> ControlInstance:
    """Election lines, then a trailer::

        control: ccav
        target: a
        k: 2
        pool:
        b > c > a
    """
    candidates = None
    ballots = []
    pool = []
    trailer: dict[str, str] = {}
    in_pool = False
    for no, line in iter_significant(text):
        head = line.partition(":")[0].strip()
        if candidates is None:
            candidates = parse_candidates_line(no, line)
        elif in_pool:
            pool.append(parse_ballot_line(no, line, candidates))
        elif head == "pool":
            if line.partition(":")[2].strip():
                raise ParseError(no, "pool ballots start on the following lines")
            in_pool = True
        elif head in ("control", "target", "k"):
            if head in trailer:
                raise ParseError(no, f"duplicate {head!r} line")
            trailer[head] = line.partition(":")[2].strip()
        elif trailer:
            raise ParseError(no, "ballots must precede the trailer")
        else:
            ballots.append(parse_ballot_line(no, line, candidates))
    if candidates is None:
        raise ParseError(0, "no 'candidates:' line found")
    for key in ("control", "target", "k"):
        if key not in trailer:
            raise ParseError(0, f"missing {key!r} line")
    try:
        limit = int(trailer["k"])
    except ValueError:
        raise ParseError(0, f"bad k: {trailer['k']!r}") from None
    return ControlInstance(
        kind=trailer["control"],
        election=Election(candidates, tuple(ballots)),
        target=trailer["target"],
        limit=limit,
        pool=tuple(pool),
    ).check()


def serialize_control_instance(instance: ControlInstance) -> str:
    instance.check()
    lines = ["candidates: " + ",".join(instance.election.candidates)]
    lines.extend(serialize_ballot(b) for b in instance.election.ballots)
    lines.append(f"control: {instance.kind}")
    lines.append(f"target: {instance.target}")
    lines.append(f"k: {instance.limit}")
    if instance.pool:
        lines.append("pool:")
        lines.extend(serialize_ballot(b) for b in instance.pool)
    return "\n".join(lines) + "\n"
