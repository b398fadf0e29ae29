import pytest
from hypothesis import given

from skatevote import (
    Ballot,
    Election,
    InvalidInstance,
    StageOutOfRange,
    UnknownCandidate,
    condorcet_winner,
    expand_weights,
    majority_threshold,
    score_at,
    sumpos_at,
)
from skatevote.election import remove_candidates, valid_candidate_name
from skatevote.fixtures import (
    bucklin_tie_election,
    clone_pair_base,
    dance_final,
    stage_two_tiebreak_election,
)

from strategies import elections


def test_majority_threshold_small_cases():
    one = Election(("a",), (Ballot(("a",)),))
    assert majority_threshold(one) == 1
    four = stage_two_tiebreak_election()
    assert majority_threshold(four) == 3
    five = bucklin_tie_election()
    assert majority_threshold(five) == 3


def test_majority_threshold_counts_weight_not_ballots():
    e = Election(("a", "b"), (Ballot(("a", "b"), 5), Ballot(("b", "a"), 2)))
    assert majority_threshold(e) == 4


def test_stage_tables_on_four_voter_election():
    e = stage_two_tiebreak_election()
    assert [score_at(e, c, 1) for c in "XYZ"] == [1, 2, 1]
    assert [sumpos_at(e, c, 1) for c in "XYZ"] == [1, 2, 1]
    assert [score_at(e, c, 2) for c in "XYZ"] == [3, 3, 2]
    assert [sumpos_at(e, c, 2) for c in "XYZ"] == [5, 4, 3]


def test_scores_respect_weights():
    e = Election(("a", "b"), (Ballot(("a", "b"), 3), Ballot(("b", "a"), 1)))
    assert score_at(e, "a", 1) == 3
    assert score_at(e, "b", 1) == 1
    assert sumpos_at(e, "a", 2) == 3 * 1 + 1 * 2
    assert sumpos_at(e, "b", 2) == 3 * 2 + 1 * 1


def test_zero_weight_ballots_are_inert():
    e = Election(("a", "b"), (Ballot(("a", "b"), 1), Ballot(("b", "a"), 0)))
    assert majority_threshold(e) == 1
    assert score_at(e, "b", 1) == 0


def test_condorcet_winner_cases():
    assert condorcet_winner(clone_pair_base()) == "Y"
    assert condorcet_winner(stage_two_tiebreak_election()) is None
    # the pairwise champion and the staged winner genuinely disagree here
    assert condorcet_winner(dance_final()) == "34"


def test_score_errors():
    e = stage_two_tiebreak_election()
    with pytest.raises(UnknownCandidate):
        score_at(e, "Q", 1)
    with pytest.raises(StageOutOfRange):
        score_at(e, "X", 0)
    with pytest.raises(StageOutOfRange):
        sumpos_at(e, "X", 4)


@pytest.mark.parametrize(
    "bad",
    [
        Election((), ()),
        Election(("a", "a"), (Ballot(("a", "a")),)),
        Election(("a", "b"), (Ballot(("a",)),)),
        Election(("a", "b"), (Ballot(("a", "b"), 0),)),
        Election(("a", "b"), ()),
        Election(("a", "b c"), (Ballot(("a", "b c")),)),
        Election(("a", "b"), (Ballot(("a", "b"), -1),)),
    ],
)
def test_validate_rejects(bad):
    with pytest.raises(InvalidInstance):
        bad.check()


def test_candidate_name_rules():
    assert valid_candidate_name("X")
    assert valid_candidate_name("couple-31")
    for bad in ("", "a b", "a>b", "a,b", "a:b", "#a", "a\tb"):
        assert not valid_candidate_name(bad)


@given(elections())
def test_expand_weights_preserves_totals(e):
    flat = expand_weights(e)
    assert all(b.weight == 1 for b in flat.ballots)
    assert flat.total_weight == e.total_weight
    assert majority_threshold(flat) == majority_threshold(e)
    for c in e.candidates:
        for i in range(1, e.m + 1):
            assert score_at(flat, c, i) == score_at(e, c, i)
            assert sumpos_at(flat, c, i) == sumpos_at(e, c, i)


def test_remove_candidates_reranks():
    e = stage_two_tiebreak_election()
    r = remove_candidates(e, {"Y"})
    assert r.candidates == ("X", "Z")
    assert r.ballots[2].ranking == ("Z", "X")
    with pytest.raises(InvalidInstance):
        remove_candidates(e, {"X", "Y", "Z"})
    with pytest.raises(UnknownCandidate):
        remove_candidates(e, {"Q"})
