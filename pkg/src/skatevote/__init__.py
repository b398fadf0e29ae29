"""Skating System Single (SkS) and Bucklin voting: winner determination with
stage traces, axiom checking with bounded counterexample search, and exact or
polynomial solvers for manipulation and electoral control, each paired with a
brute-force oracle."""

from .election import (
    Ballot,
    CandidateId,
    Election,
    condorcet_winner,
    expand_weights,
    majority_threshold,
    score_at,
    sumpos_at,
    validate,
)
from .errors import (
    BudgetExceeded,
    InvalidInstance,
    MalformedWitness,
    ParseError,
    PositionNotAnImprovement,
    SkatevoteError,
    StageOutOfRange,
    UnknownCandidate,
)
from .fileformat import parse_election, serialize_election
from .rules import (
    StageRecord,
    TabulationTrace,
    bucklin_winner_set,
    bucklin_winners,
    gen_cyclic,
    gen_sumpos_gap,
    sks_winner_set,
    sks_winners,
)

__all__ = [
    "Ballot",
    "BudgetExceeded",
    "CandidateId",
    "Election",
    "InvalidInstance",
    "MalformedWitness",
    "ParseError",
    "PositionNotAnImprovement",
    "SkatevoteError",
    "StageOutOfRange",
    "StageRecord",
    "TabulationTrace",
    "UnknownCandidate",
    "bucklin_winner_set",
    "bucklin_winners",
    "condorcet_winner",
    "expand_weights",
    "gen_cyclic",
    "gen_sumpos_gap",
    "majority_threshold",
    "parse_election",
    "score_at",
    "serialize_election",
    "sks_winner_set",
    "sks_winners",
    "validate",
]
