"""Election data model and basic weighted-profile operations.

Conventions used throughout the package:

- positions are 1-based: a ballot ``A > B > C`` gives A position 1;
- every ballot ranks every candidate (strict total order, no truncation);
- ballots carry an integer weight >= 0, the election's total weight is >= 1;
- candidate iteration is in lexicographic order wherever order matters, so
  tabulation is deterministic regardless of input order.

``score_at(e, c, i)`` is the total weight of ballots ranking c at position
<= i; ``sumpos_at(e, c, i)`` is the weight-multiplied sum of those positions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import InvalidInstance, StageOutOfRange, UnknownCandidate

CandidateId = str

_FORBIDDEN_CHARS = set(">,:")


def valid_candidate_name(name) -> bool:
    """Names are nonempty, contain no whitespace or ``> , :``, and do not
    start with ``#`` (which would collide with comment lines on re-parse)."""
    if not isinstance(name, str) or not name:
        return False
    if name.startswith("#"):
        return False
    return not any(ch.isspace() or ch in _FORBIDDEN_CHARS for ch in name)


@dataclass(frozen=True)
class Ballot:
    ranking: tuple[CandidateId, ...]
    weight: int = 1

    def __post_init__(self):
        object.__setattr__(self, "ranking", tuple(self.ranking))

    def position_of(self, candidate: CandidateId) -> int:
        """1-based position of candidate on this ballot."""
        try:
            return self.ranking.index(candidate) + 1
        except ValueError:
            raise UnknownCandidate(candidate) from None

    @cached_property
    def positions(self) -> dict[CandidateId, int]:
        return {c: i for i, c in enumerate(self.ranking, start=1)}


@dataclass(frozen=True)
class Election:
    """A weighted profile of strict rankings over a fixed candidate set.

    ``candidates`` keeps input order (serialization round-trips it); all
    tabulation sorts candidates lexicographically first.
    """

    candidates: tuple[CandidateId, ...]
    ballots: tuple[Ballot, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "candidates", tuple(self.candidates))
        object.__setattr__(self, "ballots", tuple(self.ballots))

    @property
    def m(self) -> int:
        return len(self.candidates)

    @cached_property
    def sorted_candidates(self) -> tuple[CandidateId, ...]:
        return tuple(sorted(self.candidates))

    @cached_property
    def total_weight(self) -> int:
        return sum(b.weight for b in self.ballots)

    @cached_property
    def _validated(self) -> bool:
        if self.m == 0:
            raise InvalidInstance("no candidates")
        if len(set(self.candidates)) != self.m:
            raise InvalidInstance("duplicate candidate ids")
        for c in self.candidates:
            if not valid_candidate_name(c):
                raise InvalidInstance(f"bad candidate name: {c!r}")
        cset = frozenset(self.candidates)
        for b in self.ballots:
            if not isinstance(b.weight, int) or b.weight < 0:
                raise InvalidInstance(f"ballot weight must be an int >= 0: {b.weight!r}")
            if len(b.ranking) != self.m or set(b.ranking) != cset:
                raise InvalidInstance(
                    f"ballot is not a permutation of the candidates: {b.ranking}"
                )
        if self.total_weight < 1:
            raise InvalidInstance("total ballot weight must be >= 1")
        return True

    def check(self) -> "Election":
        """Validate all invariants once (cached); returns self."""
        self._validated
        return self

    @cached_property
    def _tables(self):
        """Cumulative (score, sumpos) per candidate: entry [c][i] covers
        positions 1..i, index 0 unused and zero."""
        m = self.m
        score = {c: [0] * (m + 1) for c in self.candidates}
        sumpos = {c: [0] * (m + 1) for c in self.candidates}
        for b in self.ballots:
            w = b.weight
            if w == 0:
                continue
            for p, c in enumerate(b.ranking, start=1):
                score[c][p] += w
                sumpos[c][p] += w * p
        for c in self.candidates:
            sc, sp = score[c], sumpos[c]
            for i in range(2, m + 1):
                sc[i] += sc[i - 1]
                sp[i] += sp[i - 1]
        return score, sumpos


def validate(election: Election) -> Election:
    """Single validation entry point; raises InvalidInstance on any breach."""
    return election.check()


def majority_threshold(election: Election) -> int:
    """maj(V) = floor(W/2) + 1 where W is the total ballot weight."""
    election.check()
    return election.total_weight // 2 + 1


def _check_stage(election: Election, stage: int):
    if not isinstance(stage, int) or not 1 <= stage <= election.m:
        raise StageOutOfRange(stage, election.m)


def score_at(election: Election, candidate: CandidateId, stage: int) -> int:
    """Total weight of ballots ranking the candidate at position <= stage."""
    election.check()
    _check_stage(election, stage)
    if candidate not in election._tables[0]:
        raise UnknownCandidate(candidate)
    return election._tables[0][candidate][stage]


def sumpos_at(election: Election, candidate: CandidateId, stage: int) -> int:
    """Weighted sum of the candidate's positions over ballots where that
    position is <= stage (lower is better; used as the SkS tie-break)."""
    election.check()
    _check_stage(election, stage)
    if candidate not in election._tables[1]:
        raise UnknownCandidate(candidate)
    return election._tables[1][candidate][stage]


def condorcet_winner(election: Election) -> CandidateId | None:
    """Candidate beating every other head-to-head by strict weight majority,
    or None."""
    election.check()
    cands = election.sorted_candidates
    for c in cands:
        beats_all = True
        for d in cands:
            if d == c:
                continue
            pref_c = sum(
                b.weight for b in election.ballots if b.positions[c] < b.positions[d]
            )
            if 2 * pref_c <= election.total_weight:
                beats_all = False
                break
        if beats_all:
            return c
    return None


def expand_weights(election: Election) -> Election:
    """Replace each weight-w ballot with w unit ballots (dropping weight 0)."""
    election.check()
    out = []
    for b in election.ballots:
        out.extend(Ballot(b.ranking, 1) for _ in range(b.weight))
    return Election(election.candidates, tuple(out)).check()


def remove_candidates(election: Election, gone) -> Election:
    """Restriction of the profile to the remaining candidates, order kept."""
    election.check()
    gone = frozenset(gone)
    for c in gone:
        if c not in election._tables[0]:
            raise UnknownCandidate(c)
    kept = tuple(c for c in election.candidates if c not in gone)
    if not kept:
        raise InvalidInstance("cannot remove every candidate")
    ballots = tuple(
        Ballot(tuple(c for c in b.ranking if c not in gone), b.weight)
        for b in election.ballots
    )
    return Election(kept, ballots)
