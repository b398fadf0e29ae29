"""Axiom checking for SkS: operational definitions, witness verification,
and bounded seeded counterexample search.

Every axiom is pinned to a checkable operational form over concrete
elections; ``check_witness`` re-derives everything from the witness payload
and reports whether the recorded modification really violates the axiom,
raising MalformedWitness when the payload cannot possibly witness it.

Profile-valued outcomes are compared with the best-of-set extension: a voter
strictly prefers winner set B to winner set A when their favorite member of
B is ranked above their favorite member of A on their sincere ballot.

Nondictatorship has no finite single-witness form (dictatorship quantifies
over all profiles), so searching for it always returns None; the evidence
that SkS is nondictatorial lives in the sampled property tests.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from .election import (
    Ballot,
    CandidateId,
    Election,
    condorcet_winner,
    majority_threshold,
    valid_candidate_name,
)
from .errors import MalformedWitness, PositionNotAnImprovement, UnknownCandidate
from .fixtures import (
    abstention_benefit,
    clone_pair_base,
    clone_pair_cloned,
    consistency_pair,
    misreport_benefit,
    strong_monotonicity_pair,
)
from .rules import bucklin_winner_set, gen_cyclic, sks_winner_set
from .sampling import SplitMix64, candidate_names, random_election


class AxiomId(str, Enum):
    CONDORCET = "Condorcet"
    MAJORITY = "Majority"
    MONOTONICITY = "Monotonicity"
    POSITIVE_RESPONSIVENESS = "PositiveResponsiveness"
    STRONG_MONOTONICITY = "StrongMonotonicity"
    IIA = "IIA"
    INDEPENDENCE_OF_CLONES = "IndependenceOfClones"
    CONSISTENCY = "Consistency"
    PARTICIPATION = "Participation"
    NONDICTATORSHIP = "Nondictatorship"
    CITIZENS_SOVEREIGNTY = "CitizensSovereignty"
    RESOLUTENESS = "Resoluteness"
    STRATEGY_PROOFNESS = "StrategyProofness"

    @classmethod
    def from_string(cls, text: str) -> "AxiomId":
        for member in cls:
            if member.value.lower() == text.lower():
                return member
        valid = ", ".join(m.value for m in cls)
        raise ValueError(f"unknown axiom {text!r}; expected one of: {valid}")


#: Axioms SkS satisfies; searching these should come up empty.
SATISFIED = frozenset(
    {
        AxiomId.MAJORITY,
        AxiomId.MONOTONICITY,
        AxiomId.POSITIVE_RESPONSIVENESS,
        AxiomId.NONDICTATORSHIP,
        AxiomId.CITIZENS_SOVEREIGNTY,
    }
)


@dataclass(frozen=True)
class SearchBounds:
    max_m: int = 5
    max_n: int = 8
    max_weight: int = 3
    budget: int = 10_000
    seed: int = 0


@dataclass(frozen=True)
class ViolationWitness:
    """Base election plus the modification relevant to the axiom.

    Payload fields by axiom: Condorcet/Resoluteness use the base alone;
    Majority and CitizensSovereignty name a candidate; Monotonicity and
    PositiveResponsiveness carry (voter, candidate, to_position) for a lift;
    StrongMonotonicity carries the reshuffled election plus the winner;
    IIA and Consistency carry the second election; IndependenceOfClones
    carries (candidate, clone); Participation carries the abstaining voter;
    StrategyProofness carries (voter, ranking) for the misreport.
    """

    axiom: AxiomId
    base: Election
    modified: Election | None = None
    voter: int | None = None
    candidate: CandidateId | None = None
    to_position: int | None = None
    clone: CandidateId | None = None
    ranking: tuple[CandidateId, ...] | None = None
    explanation: str = ""


def lift_candidate(
    election: Election, ballot_index: int, candidate: CandidateId, new_position: int
) -> Election:
    """Move a candidate strictly up one ballot, everything else unchanged."""
    election.check()
    if not 0 <= ballot_index < len(election.ballots):
        raise IndexError(f"ballot index {ballot_index} out of range")
    ballot = election.ballots[ballot_index]
    if candidate not in ballot.positions:
        raise UnknownCandidate(candidate)
    current = ballot.positions[candidate]
    if not 1 <= new_position < current:
        raise PositionNotAnImprovement(
            f"{candidate} sits at position {current}; new position must be in [1, {current - 1}]"
        )
    rest = [c for c in ballot.ranking if c != candidate]
    rest.insert(new_position - 1, candidate)
    ballots = list(election.ballots)
    ballots[ballot_index] = Ballot(tuple(rest), ballot.weight)
    return Election(election.candidates, tuple(ballots))


def insert_clone(
    election: Election, original: CandidateId, clone: CandidateId
) -> Election:
    """Add a clone ranked directly behind its original on every ballot."""
    election.check()
    if original not in set(election.candidates):
        raise UnknownCandidate(original)
    if not valid_candidate_name(clone) or clone in set(election.candidates):
        raise MalformedWitness(f"bad clone name: {clone!r}")
    pos = election.candidates.index(original)
    cands = election.candidates[: pos + 1] + (clone,) + election.candidates[pos + 1 :]
    ballots = []
    for b in election.ballots:
        r = list(b.ranking)
        r.insert(r.index(original) + 1, clone)
        ballots.append(Ballot(tuple(r), b.weight))
    return Election(cands, tuple(ballots))


def replace_ballot(election: Election, voter: int, ranking) -> Election:
    ballots = list(election.ballots)
    ballots[voter] = Ballot(tuple(ranking), ballots[voter].weight)
    return Election(election.candidates, tuple(ballots))


def drop_ballot(election: Election, voter: int) -> Election:
    ballots = election.ballots[:voter] + election.ballots[voter + 1 :]
    return Election(election.candidates, ballots)


def best_of(winners, ranking) -> CandidateId:
    """The winner this ballot likes most (set extension anchor)."""
    return min(winners, key=ranking.index)


def _fmt(ws) -> str:
    return "{" + ",".join(ws) + "}"


def _majority_topped(election: Election) -> CandidateId | None:
    maj = majority_threshold(election)
    top = {c: 0 for c in election.candidates}
    for b in election.ballots:
        top[b.ranking[0]] += b.weight
    for c in election.sorted_candidates:
        if top[c] >= maj:
            return c
    return None


def _require(cond, message):
    if not cond:
        raise MalformedWitness(message)


def _same_profile_shape(a: Election, b: Election):
    _require(set(a.candidates) == set(b.candidates), "candidate sets differ")
    _require(len(a.ballots) == len(b.ballots), "ballot counts differ")
    _require(
        all(x.weight == y.weight for x, y in zip(a.ballots, b.ballots)),
        "ballot weights differ",
    )


def _check_condorcet(w: ViolationWitness) -> bool:
    cw = condorcet_winner(w.base)
    return cw is not None and cw not in sks_winner_set(w.base)


def _check_majority(w: ViolationWitness) -> bool:
    c = _majority_topped(w.base)
    return c is not None and sks_winner_set(w.base) != (c,)


def _lifted(w: ViolationWitness) -> Election:
    _require(
        w.voter is not None and w.candidate is not None and w.to_position is not None,
        "lift witnesses need voter, candidate, and to_position",
    )
    _require(w.candidate in sks_winner_set(w.base), "lifted candidate must be a winner")
    try:
        return lift_candidate(w.base, w.voter, w.candidate, w.to_position)
    except (IndexError, UnknownCandidate, PositionNotAnImprovement) as exc:
        raise MalformedWitness(str(exc)) from exc


def _check_monotonicity(w: ViolationWitness) -> bool:
    return w.candidate not in sks_winner_set(_lifted(w))


def _check_positive_responsiveness(w: ViolationWitness) -> bool:
    _require(
        w.voter is not None
        and 0 <= w.voter < len(w.base.ballots)
        and w.base.ballots[w.voter].weight >= 1,
        "a positive-responsiveness lift needs a positive-weight ballot",
    )
    return sks_winner_set(_lifted(w)) != (w.candidate,)


def _dominated(ballot: Ballot, c: CandidateId) -> frozenset:
    p = ballot.positions[c]
    return frozenset(d for d, q in ballot.positions.items() if q > p)


def _check_strong_monotonicity(w: ViolationWitness) -> bool:
    _require(w.modified is not None and w.candidate is not None,
             "strong monotonicity needs the modified election and the winner")
    w.modified.check()
    _same_profile_shape(w.base, w.modified)
    _require(w.candidate in sks_winner_set(w.base), "candidate must win the base")
    for before, after in zip(w.base.ballots, w.modified.ballots):
        _require(
            _dominated(before, w.candidate) <= _dominated(after, w.candidate),
            "modification must weakly improve the winner on every ballot",
        )
    return w.candidate not in sks_winner_set(w.modified)


def _check_iia(w: ViolationWitness) -> bool:
    _require(w.modified is not None, "IIA needs the enlarged election")
    w.modified.check()
    added = set(w.modified.candidates) - set(w.base.candidates)
    _require(len(added) == 1, "exactly one candidate must be added")
    _require(len(w.base.ballots) == len(w.modified.ballots), "ballot counts differ")
    (z,) = added
    for before, after in zip(w.base.ballots, w.modified.ballots):
        _require(after.weight == before.weight, "ballot weights differ")
        _require(
            tuple(c for c in after.ranking if c != z) == before.ranking,
            "relative order of the original candidates changed",
        )
    inner = set(sks_winner_set(w.modified)) & set(w.base.candidates)
    return bool(inner) and inner != set(sks_winner_set(w.base))


def _check_clones(w: ViolationWitness) -> bool:
    _require(w.candidate is not None and w.clone is not None,
             "clone witnesses need the original and the clone name")
    cloned = insert_clone(w.base, w.candidate, w.clone)
    collapsed = {w.candidate if c == w.clone else c for c in sks_winner_set(cloned)}
    return collapsed != set(sks_winner_set(w.base))


def _check_consistency(w: ViolationWitness) -> bool:
    _require(w.modified is not None, "consistency needs the second vote list")
    w.modified.check()
    _require(
        set(w.base.candidates) == set(w.modified.candidates),
        "both vote lists must share the candidate set",
    )
    common = set(sks_winner_set(w.base)) & set(sks_winner_set(w.modified))
    if not common:
        return False
    union = Election(w.base.candidates, w.base.ballots + w.modified.ballots)
    return set(sks_winner_set(union)) != common


def _check_participation(w: ViolationWitness) -> bool:
    _require(w.voter is not None, "participation needs the abstaining voter")
    _require(0 <= w.voter < len(w.base.ballots), "voter index out of range")
    stay_home = drop_ballot(w.base, w.voter)
    _require(stay_home.total_weight >= 1, "removal may not empty the election")
    ranking = w.base.ballots[w.voter].ranking
    with_vote = best_of(sks_winner_set(w.base), ranking)
    without = best_of(sks_winner_set(stay_home), ranking)
    return ranking.index(without) < ranking.index(with_vote)


def _check_nondictatorship(w: ViolationWitness) -> bool:
    raise MalformedWitness(
        "dictatorship quantifies over all profiles; no single witness exists"
    )


def _check_citizens_sovereignty(w: ViolationWitness) -> bool:
    _require(w.candidate is not None, "sovereignty witnesses name a candidate")
    _require(w.candidate in set(w.base.candidates), "candidate must stand")
    _require(
        all(b.ranking[0] == w.candidate for b in w.base.ballots if b.weight > 0),
        "base must be unanimous on the candidate",
    )
    return sks_winner_set(w.base) != (w.candidate,)


def _check_resoluteness(w: ViolationWitness) -> bool:
    return len(sks_winner_set(w.base)) > 1


def _check_strategy_proofness(w: ViolationWitness) -> bool:
    _require(w.voter is not None and w.ranking is not None,
             "strategy-proofness needs the voter and the misreport")
    _require(0 <= w.voter < len(w.base.ballots), "voter index out of range")
    truth = w.base.ballots[w.voter].ranking
    _require(set(w.ranking) == set(truth) and len(w.ranking) == len(truth),
             "misreport must be a permutation of the candidates")
    misreported = replace_ballot(w.base, w.voter, w.ranking)
    sincere = best_of(sks_winner_set(w.base), truth)
    strategic = best_of(sks_winner_set(misreported), truth)
    return truth.index(strategic) < truth.index(sincere)


_CHECKERS = {
    AxiomId.CONDORCET: _check_condorcet,
    AxiomId.MAJORITY: _check_majority,
    AxiomId.MONOTONICITY: _check_monotonicity,
    AxiomId.POSITIVE_RESPONSIVENESS: _check_positive_responsiveness,
    AxiomId.STRONG_MONOTONICITY: _check_strong_monotonicity,
    AxiomId.IIA: _check_iia,
    AxiomId.INDEPENDENCE_OF_CLONES: _check_clones,
    AxiomId.CONSISTENCY: _check_consistency,
    AxiomId.PARTICIPATION: _check_participation,
    AxiomId.NONDICTATORSHIP: _check_nondictatorship,
    AxiomId.CITIZENS_SOVEREIGNTY: _check_citizens_sovereignty,
    AxiomId.RESOLUTENESS: _check_resoluteness,
    AxiomId.STRATEGY_PROOFNESS: _check_strategy_proofness,
}


def check_witness(witness: ViolationWitness) -> bool:
    """True iff the recorded modification actually violates the axiom."""
    witness.base.check()
    return _CHECKERS[AxiomId(witness.axiom)](witness)


# --- bounded search -------------------------------------------------------


def _within(e: Election, bounds: SearchBounds) -> bool:
    return (
        e.m <= bounds.max_m
        and len(e.ballots) <= bounds.max_n
        and all(b.weight <= bounds.max_weight for b in e.ballots)
    )


def _seeds(axiom: AxiomId):
    if axiom is AxiomId.CONDORCET:
        yield ViolationWitness(axiom, clone_pair_cloned())
    elif axiom is AxiomId.STRONG_MONOTONICITY:
        before, after = strong_monotonicity_pair()
        yield ViolationWitness(axiom, before, modified=after, candidate="Y")
    elif axiom is AxiomId.IIA:
        yield ViolationWitness(axiom, clone_pair_base(), modified=clone_pair_cloned())
    elif axiom is AxiomId.INDEPENDENCE_OF_CLONES:
        yield ViolationWitness(axiom, clone_pair_base(), candidate="Z", clone="Z2")
    elif axiom is AxiomId.CONSISTENCY:
        part1, part2 = consistency_pair()
        yield ViolationWitness(axiom, part1, modified=part2)
    elif axiom is AxiomId.PARTICIPATION:
        e, voter = abstention_benefit()
        yield ViolationWitness(axiom, e, voter=voter)
    elif axiom is AxiomId.RESOLUTENESS:
        yield ViolationWitness(axiom, gen_cyclic(3))
    elif axiom is AxiomId.STRATEGY_PROOFNESS:
        e, voter, misreport = misreport_benefit()
        yield ViolationWitness(axiom, e, voter=voter, ranking=misreport)


def _attempts(axiom: AxiomId, e: Election, rng: SplitMix64, bounds: SearchBounds):
    """Candidate witnesses derived from one sampled base election."""
    winners = sks_winner_set(e)
    if axiom in (AxiomId.CONDORCET, AxiomId.RESOLUTENESS):
        yield ViolationWitness(axiom, e)
    elif axiom is AxiomId.MAJORITY:
        if _majority_topped(e) is not None:
            yield ViolationWitness(axiom, e)
    elif axiom in (AxiomId.MONOTONICITY, AxiomId.POSITIVE_RESPONSIVENESS):
        c = winners[rng.randrange(len(winners))]
        liftable = [
            i for i, b in enumerate(e.ballots) if b.weight >= 1 and b.positions[c] > 1
        ]
        if liftable:
            voter = liftable[rng.randrange(len(liftable))]
            to = rng.randint(1, e.ballots[voter].positions[c] - 1)
            yield ViolationWitness(axiom, e, voter=voter, candidate=c, to_position=to)
    elif axiom is AxiomId.STRONG_MONOTONICITY:
        c = winners[rng.randrange(len(winners))]
        ballots = []
        for b in e.ballots:
            p = b.positions[c]
            above = [d for d in b.ranking if b.positions[d] < p]
            below = [d for d in b.ranking if b.positions[d] > p]
            rng.shuffle(above)
            rng.shuffle(below)
            new_p = rng.randint(1, p)
            ballots.append(
                Ballot(tuple(above[: new_p - 1] + [c] + above[new_p - 1 :] + below), b.weight)
            )
        yield ViolationWitness(
            axiom, e, modified=Election(e.candidates, tuple(ballots)), candidate=c
        )
    elif axiom is AxiomId.IIA:
        if e.m < bounds.max_m:
            z = candidate_names(e.m + 1)[-1]
            ballots = []
            for b in e.ballots:
                r = list(b.ranking)
                r.insert(rng.randrange(len(r) + 1), z)
                ballots.append(Ballot(tuple(r), b.weight))
            yield ViolationWitness(
                axiom, e, modified=Election(e.candidates + (z,), tuple(ballots))
            )
    elif axiom is AxiomId.INDEPENDENCE_OF_CLONES:
        if e.m < bounds.max_m:
            original = e.sorted_candidates[rng.randrange(e.m)]
            clone = original + "2"
            while clone in set(e.candidates):
                clone += "2"
            yield ViolationWitness(axiom, e, candidate=original, clone=clone)
    elif axiom is AxiomId.CONSISTENCY:
        other = Election(
            e.candidates,
            tuple(
                Ballot(rng.permutation(e.candidates), rng.randint(1, bounds.max_weight))
                for _ in range(rng.randint(1, bounds.max_n))
            ),
        )
        yield ViolationWitness(axiom, e, modified=other)
    elif axiom is AxiomId.PARTICIPATION:
        if len(e.ballots) >= 2:
            yield ViolationWitness(axiom, e, voter=rng.randrange(len(e.ballots)))
    elif axiom is AxiomId.CITIZENS_SOVEREIGNTY:
        c = e.sorted_candidates[rng.randrange(e.m)]
        ballots = tuple(
            Ballot((c,) + rng.permutation([d for d in e.candidates if d != c]), b.weight)
            for b in e.ballots
        )
        yield ViolationWitness(
            axiom, Election(e.candidates, ballots), candidate=c
        )
    elif axiom is AxiomId.STRATEGY_PROOFNESS:
        voter = rng.randrange(len(e.ballots))
        misreport = rng.permutation(e.candidates)
        if misreport != e.ballots[voter].ranking:
            yield ViolationWitness(axiom, e, voter=voter, ranking=misreport)


def _explain(w: ViolationWitness) -> str:
    base_w = sks_winner_set(w.base)
    a = AxiomId(w.axiom)
    if a is AxiomId.CONDORCET:
        return f"Condorcet winner {condorcet_winner(w.base)} loses to {_fmt(base_w)}"
    if a is AxiomId.RESOLUTENESS:
        return f"co-winners {_fmt(base_w)}"
    if a is AxiomId.MAJORITY:
        return f"majority-topped {_majority_topped(w.base)} vs winners {_fmt(base_w)}"
    if a in (AxiomId.MONOTONICITY, AxiomId.POSITIVE_RESPONSIVENESS):
        after = sks_winner_set(_lifted(w))
        return (
            f"lifting winner {w.candidate} to position {w.to_position} in ballot "
            f"{w.voter} turns {_fmt(base_w)} into {_fmt(after)}"
        )
    if a is AxiomId.STRONG_MONOTONICITY:
        after = sks_winner_set(w.modified)
        return f"weakly improving winner {w.candidate} turns {_fmt(base_w)} into {_fmt(after)}"
    if a is AxiomId.IIA:
        z = (set(w.modified.candidates) - set(w.base.candidates)).pop()
        after = sks_winner_set(w.modified)
        return f"adding {z} turns {_fmt(base_w)} into {_fmt(after)}"
    if a is AxiomId.INDEPENDENCE_OF_CLONES:
        after = sks_winner_set(insert_clone(w.base, w.candidate, w.clone))
        return f"cloning {w.candidate} as {w.clone} turns {_fmt(base_w)} into {_fmt(after)}"
    if a is AxiomId.CONSISTENCY:
        other = sks_winner_set(w.modified)
        union = sks_winner_set(Election(w.base.candidates, w.base.ballots + w.modified.ballots))
        return f"parts elect {_fmt(base_w)} and {_fmt(other)} but the union elects {_fmt(union)}"
    if a is AxiomId.PARTICIPATION:
        without = sks_winner_set(drop_ballot(w.base, w.voter))
        return (
            f"voter {w.voter} gets {_fmt(without)} by abstaining instead of "
            f"{_fmt(base_w)} (best-of-set comparison on their ballot)"
        )
    if a is AxiomId.CITIZENS_SOVEREIGNTY:
        return f"unanimous profile on {w.candidate} elects {_fmt(base_w)}"
    if a is AxiomId.STRATEGY_PROOFNESS:
        after = sks_winner_set(replace_ballot(w.base, w.voter, w.ranking))
        return (
            f"voter {w.voter} misreporting {' > '.join(w.ranking)} turns "
            f"{_fmt(base_w)} into {_fmt(after)}, better on their sincere ballot"
        )
    return ""


def search_counterexample(
    axiom: AxiomId, bounds: SearchBounds = SearchBounds()
) -> ViolationWitness | None:
    """Seeded bounded search for a violation witness.

    Curated seed elections are tried first (skipped when outside the
    bounds), then ``bounds.budget`` sampled base elections.  Every returned
    witness passes ``check_witness``; None means nothing was found, which
    for the satisfied axioms is the expected outcome.
    """
    axiom = AxiomId(axiom)
    if axiom is AxiomId.NONDICTATORSHIP:
        return None
    for seed in _seeds(axiom):
        if _within(seed.base, bounds) and check_witness(seed):
            return replace(seed, explanation=_explain(seed))
    rng = SplitMix64(bounds.seed)
    min_n = 2 if axiom is AxiomId.PARTICIPATION else 1
    for _ in range(bounds.budget):
        e = random_election(
            rng, bounds.max_m, bounds.max_n, bounds.max_weight, min_n=min_n
        )
        for attempt in _attempts(axiom, e, rng, bounds):
            try:
                ok = check_witness(attempt)
            except MalformedWitness:
                continue
            if ok:
                return replace(attempt, explanation=_explain(attempt))
    return None


def check_election(
    axiom: AxiomId, election: Election, bounds: SearchBounds = SearchBounds()
) -> ViolationWitness | None:
    """Violation hunt anchored at one election.

    Single-profile axioms (Condorcet, Majority, Resoluteness, citizens'
    sovereignty) are evaluated directly on the election; a witness shape
    that does not apply (no majority-topped candidate, no unanimous top)
    counts as no violation.  Modification axioms keep the base fixed and
    sample modifications from ``bounds.budget`` seeded attempts, so None
    means satisfied within the searched space, not a proof.
    """
    axiom = AxiomId(axiom)
    election.check()
    if axiom is AxiomId.NONDICTATORSHIP:
        return None

    def confirmed(attempt):
        try:
            ok = check_witness(attempt)
        except MalformedWitness:
            return None
        return replace(attempt, explanation=_explain(attempt)) if ok else None

    if axiom in (AxiomId.CONDORCET, AxiomId.MAJORITY, AxiomId.RESOLUTENESS):
        return confirmed(ViolationWitness(axiom, election))
    if axiom is AxiomId.CITIZENS_SOVEREIGNTY:
        tops = {b.ranking[0] for b in election.ballots if b.weight > 0}
        if len(tops) != 1:
            return None
        return confirmed(ViolationWitness(axiom, election, candidate=tops.pop()))
    rng = SplitMix64(bounds.seed)
    for _ in range(bounds.budget):
        for attempt in _attempts(axiom, election, rng, bounds):
            got = confirmed(attempt)
            if got is not None:
                return got
    return None


# --- witness files --------------------------------------------------------

_WITNESS_HEADER = "# skatevote witness v1"


def serialize_witness(w: ViolationWitness) -> str:
    from .fileformat import serialize_election

    lines = [_WITNESS_HEADER, f"axiom: {AxiomId(w.axiom).value}"]
    if w.explanation:
        lines.append(f"explanation: {' '.join(w.explanation.split())}")
    lines.append("[base]")
    lines.append(serialize_election(w.base).rstrip("\n"))
    if w.modified is not None:
        lines.append("[modified]")
        lines.append(serialize_election(w.modified).rstrip("\n"))
    aux = []
    if w.voter is not None:
        aux.append(f"voter: {w.voter}")
    if w.candidate is not None:
        aux.append(f"candidate: {w.candidate}")
    if w.to_position is not None:
        aux.append(f"to_position: {w.to_position}")
    if w.clone is not None:
        aux.append(f"clone: {w.clone}")
    if w.ranking is not None:
        aux.append("ranking: " + " > ".join(w.ranking))
    if aux:
        lines.append("[aux]")
        lines.extend(aux)
    return "\n".join(lines) + "\n"


def parse_witness(text: str) -> ViolationWitness:
    from .errors import ParseError
    from .fileformat import parse_election

    axiom = None
    explanation = ""
    sections: dict[str, list[str]] = {}
    current = None
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or (line.startswith("#")):
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1]
            if current not in ("base", "modified", "aux"):
                raise ParseError(no, f"unknown section {line!r}")
            sections[current] = []
            continue
        if current is None:
            key, _, value = line.partition(":")
            key, value = key.strip(), value.strip()
            if key == "axiom":
                try:
                    axiom = AxiomId.from_string(value)
                except ValueError as exc:
                    raise ParseError(no, str(exc)) from None
            elif key == "explanation":
                explanation = value
            else:
                raise ParseError(no, f"unexpected header line: {line!r}")
        else:
            sections[current].append(line)
    if axiom is None:
        raise ParseError(0, "witness is missing its 'axiom:' line")
    if "base" not in sections:
        raise ParseError(0, "witness is missing its [base] election")
    base = parse_election("\n".join(sections["base"]))
    modified = (
        parse_election("\n".join(sections["modified"]))
        if "modified" in sections
        else None
    )
    fields = {}
    for line in sections.get("aux", ()):
        key, _, value = line.partition(":")
        key, value = key.strip(), value.strip()
        if key in ("voter", "to_position"):
            try:
                fields[key] = int(value)
            except ValueError:
                raise ParseError(0, f"aux {key} must be an integer: {value!r}") from None
        elif key in ("candidate", "clone"):
            fields[key] = value
        elif key == "ranking":
            fields[key] = tuple(tok.strip() for tok in value.split(">"))
        else:
            raise ParseError(0, f"unknown aux key: {key!r}")
    return ViolationWitness(
        axiom=axiom, base=base, modified=modified, explanation=explanation, **fields
    )


@dataclass(frozen=True)
class BucklinLiftReport:
    """Fixed demonstration that Bucklin fails positive responsiveness on a
    four-candidate election where SkS does not."""

    before: Election
    after: Election
    bucklin_before: tuple[CandidateId, ...]
    bucklin_after: tuple[CandidateId, ...]
    sks_before: tuple[CandidateId, ...]
    sks_after: tuple[CandidateId, ...]

    @property
    def confirmed(self) -> bool:
        return (
            self.bucklin_before == ("a", "b")
            and self.bucklin_after == ("a", "b")
            and self.sks_before == ("a",)
            and self.sks_after == ("b",)
        )


def check_bucklin_positive_responsiveness_example() -> BucklinLiftReport:
    """Lift co-winner b in the third vote: Bucklin stays tied on {a, b}
    (its positive-responsiveness failure) while SkS hands b the win."""
    from .fixtures import bucklin_pr_after, bucklin_pr_before

    before, after = bucklin_pr_before(), bucklin_pr_after()
    return BucklinLiftReport(
        before=before,
        after=after,
        bucklin_before=bucklin_winner_set(before),
        bucklin_after=bucklin_winner_set(after),
        sks_before=sks_winner_set(before),
        sks_after=sks_winner_set(after),
    )
