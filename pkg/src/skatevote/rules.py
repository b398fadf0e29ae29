"""Bucklin and Skating System Single (SkS) winner determination.

Both rules scan stages i = 1..m over cumulative approval-style scores.
maj = floor(W/2) + 1.  Bucklin stops at the first stage i* where some
candidate's score reaches maj and elects the argmax there.  SkS starts at
i* and per stage takes the argmax of score among the surviving candidates;
a singleton wins outright, otherwise the tie is broken by the smaller
sumpos (weighted sum of counted positions), and if that is still tied the
survivor set shrinks to the sumpos minimizers and the next stage is tried;
at stage m the remaining tie is reported as co-winners.

Survivors always sit at or above maj from i* on, so taking the argmax over
the surviving set never elects a below-threshold candidate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .election import Ballot, CandidateId, Election, majority_threshold


@dataclass(frozen=True)
class StageRecord:
    """Per-stage snapshot: full-set score and sumpos columns, the candidate
    set still eligible when the stage was evaluated, and every candidate at
    or above the majority threshold this stage."""

    stage: int
    eligible: tuple[CandidateId, ...]
    scores: dict[CandidateId, int]
    sumpos: dict[CandidateId, int]
    majority_reached: tuple[CandidateId, ...]


@dataclass(frozen=True)
class TabulationTrace:
    rule: str
    winners: tuple[CandidateId, ...]
    decisive_stage: int
    threshold_stage: int
    stages: tuple[StageRecord, ...]
    reduction_history: tuple[tuple[int, tuple[CandidateId, ...]], ...] = ()


def bucklin_core(score, maj: int, m: int):
    """(winner indices, i*) from cumulative score rows, one row per candidate."""
    for i in range(1, m + 1):
        best = max(row[i] for row in score)
        if best >= maj:
            return tuple(c for c, row in enumerate(score) if row[i] == best), i
    raise AssertionError("unreachable: every candidate reaches W at stage m")


def sks_core(score, sumpos, maj: int, m: int):
    """(winner indices, decisive stage, i*, reductions) from cumulative rows.

    Reductions record only strict shrinks of the surviving set, as
    (stage, surviving indices).
    """
    istar = None
    for i in range(1, m + 1):
        if max(row[i] for row in score) >= maj:
            istar = i
            break
    eligible = list(range(len(score)))
    reductions = []
    for j in range(istar, m + 1):
        best = max(score[c][j] for c in eligible)
        tied = [c for c in eligible if score[c][j] == best]
        if len(tied) == 1:
            return tuple(tied), j, istar, tuple(reductions)
        low = min(sumpos[c][j] for c in tied)
        tied = [c for c in tied if sumpos[c][j] == low]
        if len(tied) == 1 or j == m:
            return tuple(tied), j, istar, tuple(reductions)
        if len(tied) < len(eligible):
            reductions.append((j, tuple(tied)))
        eligible = tied
    raise AssertionError("unreachable: stage m always returns")


def _index_tables(election: Election):
    score_by_name, sumpos_by_name = election._tables
    cands = election.sorted_candidates
    score = [score_by_name[c] for c in cands]
    sumpos = [sumpos_by_name[c] for c in cands]
    return cands, score, sumpos


def bucklin_winner_set(election: Election) -> tuple[CandidateId, ...]:
    """Sorted Bucklin winners, no trace construction."""
    maj = majority_threshold(election)
    cands, score, _ = _index_tables(election)
    idx, _ = bucklin_core(score, maj, election.m)
    return tuple(cands[c] for c in idx)


def sks_winner_set(election: Election) -> tuple[CandidateId, ...]:
    """Sorted SkS winners, no trace construction."""
    maj = majority_threshold(election)
    cands, score, sumpos = _index_tables(election)
    idx, _, _, _ = sks_core(score, sumpos, maj, election.m)
    return tuple(cands[c] for c in idx)


def _stage_records(cands, score, sumpos, maj, last, eligible_by_stage):
    records = []
    all_c = tuple(cands)
    for i in range(1, last + 1):
        records.append(
            StageRecord(
                stage=i,
                eligible=eligible_by_stage.get(i, all_c),
                scores={c: score[k][i] for k, c in enumerate(cands)},
                sumpos={c: sumpos[k][i] for k, c in enumerate(cands)},
                majority_reached=tuple(
                    c for k, c in enumerate(cands) if score[k][i] >= maj
                ),
            )
        )
    return tuple(records)


def bucklin_winners(election: Election) -> TabulationTrace:
    """Full Bucklin trace: stages 1..i*, winners = score argmax at i*."""
    maj = majority_threshold(election)
    cands, score, sumpos = _index_tables(election)
    idx, istar = bucklin_core(score, maj, election.m)
    return TabulationTrace(
        rule="bucklin",
        winners=tuple(cands[c] for c in idx),
        decisive_stage=istar,
        threshold_stage=istar,
        stages=_stage_records(cands, score, sumpos, maj, istar, {}),
    )


def sks_winners(election: Election) -> TabulationTrace:
    """Full SkS trace: stages 1..decisive, with the shrink history."""
    maj = majority_threshold(election)
    cands, score, sumpos = _index_tables(election)
    idx, decisive, istar, reductions = sks_core(score, sumpos, maj, election.m)
    named_reductions = tuple(
        (stage, tuple(cands[c] for c in surv)) for stage, surv in reductions
    )
    # survivors computed at a stage are who enters the next one
    shrink_at = {stage + 1: surv for stage, surv in named_reductions}
    filled = {}
    live = tuple(cands)
    for i in range(1, decisive + 1):
        live = shrink_at.get(i, live)
        filled[i] = live
    return TabulationTrace(
        rule="sks",
        winners=tuple(cands[c] for c in idx),
        decisive_stage=decisive,
        threshold_stage=istar,
        stages=_stage_records(cands, score, sumpos, maj, decisive, filled),
        reduction_history=named_reductions,
    )


def gen_cyclic(k: int) -> Election:
    """k rotations of k candidates: every stage ties everything, so Bucklin
    picks all candidates at stage floor(k/2)+1 and SkS reports all k as
    co-winners at stage k."""
    if not isinstance(k, int) or k < 2:
        raise ValueError("gen_cyclic needs an int k >= 2")
    cands = tuple(f"c{t}" for t in range(1, k + 1))
    ballots = tuple(Ballot(cands[t:] + cands[:t]) for t in range(k))
    return Election(cands, ballots).check()


def gen_sumpos_gap(i: int, n: int) -> Election:
    """Bucklin ties {a, b} at stage n+2 with maj = i, but SkS elects a alone:
    sumpos(a) = i-1 + n+2 beats sumpos(b) = 1 + (i-1)(n+2).

    2(i-1) ballots: i-1 copies of the a-vote, one b-vote, i-2 filler votes
    headed by the d-block.  Candidates: a, b, c1..c2n, d1..d(n+2).
    """
    if not isinstance(i, int) or i < 3:
        raise ValueError("gen_sumpos_gap needs an int i >= 3")
    if not isinstance(n, int) or n < 0:
        raise ValueError("gen_sumpos_gap needs an int n >= 0")
    cs = tuple(f"c{t}" for t in range(1, 2 * n + 1))
    ds = tuple(f"d{t}" for t in range(1, n + 3))
    cands = ("a", "b") + cs + ds
    def rest(prefix):
        return tuple(c for c in cands if c not in prefix)
    a_vote = ("a",) + cs[:n] + ("b",)
    b_vote = ("b",) + cs[n:] + ("a",)
    d_vote = ds
    ballots = (
        [Ballot(a_vote + rest(a_vote)) for _ in range(i - 1)]
        + [Ballot(b_vote + rest(b_vote))]
        + [Ballot(d_vote + rest(d_vote)) for _ in range(i - 2)]
    )
    return Election(cands, tuple(ballots)).check()
