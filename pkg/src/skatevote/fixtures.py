"""Small hand-checked elections used by tests, axiom-search seeding, and the
generator CLI.

Each function documents the outcome it was checked to produce; the test suite
re-derives all of them, so nothing here is load-bearing without verification.
"""

from __future__ import annotations

from .election import Ballot, Election


def _election(cands, rows):
    return Election(tuple(cands), tuple(Ballot(tuple(r.split())) for r in rows)).check()


def dance_final() -> Election:
    """Six couples, five adjudicators; couple 33 wins at stage 2 with score 3
    against 31's sumpos-heavier 3."""
    return _election(
        ("31", "32", "33", "34", "35", "36"),
        [
            "31 33 34 32 36 35",
            "31 32 34 35 36 33",
            "34 33 32 36 35 31",
            "36 34 32 33 35 31",
            "32 33 36 35 34 31",
        ],
    )


def bucklin_tie_election() -> Election:
    """Five voters over U,X,Y,Z: Bucklin ties {U, X} at stage 2; the sumpos
    tie-break gives U alone under SkS (4 against 5)."""
    return _election(
        ("U", "X", "Y", "Z"),
        ["U X Y Z", "U X Y Z", "X U Y Z", "Y Z U X", "Z Y U X"],
    )


def stage_two_tiebreak_election() -> Election:
    """Four voters over X,Y,Z: stage-2 scores (3,3,2), sumpos (5,4,3); Y is
    the unique SkS winner while Bucklin reports {X, Y}."""
    return _election(
        ("X", "Y", "Z"),
        ["X Y Z", "Y X Z", "Y Z X", "Z X Y"],
    )


def clone_pair_base() -> Election:
    """Seven voters over X,Y,Z; Y wins alone at stage 2 (score 7) and is the
    Condorcet winner."""
    return _election(
        ("X", "Y", "Z"),
        [
            "X Y Z",
            "X Y Z",
            "Y X Z",
            "Y Z X",
            "Z Y X",
            "Z Y X",
            "Z Y X",
        ],
    )


def clone_pair_cloned() -> Election:
    """clone_pair_base with Z2 inserted right behind Z on every ballot: the
    stage-2 tie Y=Z=4 now breaks on sumpos (Z 5 < Y 6), so Z wins although Y
    is still the Condorcet winner."""
    return _election(
        ("X", "Y", "Z", "Z2"),
        [
            "X Y Z Z2",
            "X Y Z Z2",
            "Y X Z Z2",
            "Y Z Z2 X",
            "Z Z2 Y X",
            "Z Z2 Y X",
            "Z Z2 Y X",
        ],
    )


def bucklin_pr_before() -> Election:
    """Three voters over a,b,c,d: Bucklin ties {a, b} at stage 2; SkS breaks
    to a alone at stage 3."""
    return _election(("a", "b", "c", "d"), ["a b c d", "b a c d", "c d a b"])


def bucklin_pr_after() -> Election:
    """bucklin_pr_before with b lifted in the third vote: Bucklin still ties
    {a, b}, which is its positive-responsiveness failure; SkS flips to b."""
    return _election(("a", "b", "c", "d"), ["a b c d", "b a c d", "c d b a"])


def strong_monotonicity_pair() -> tuple[Election, Election]:
    """Y wins the base; reshuffling the third voter from Y>Z>X to Y>X>Z only
    weakly improves Y yet hands the win to X."""
    before = stage_two_tiebreak_election()
    after = _election(("X", "Y", "Z"), ["X Y Z", "Y X Z", "Y X Z", "Z X Y"])
    return before, after


def consistency_pair() -> tuple[Election, Election]:
    """Two vote lists over a..e that both elect a alone, while their union
    elects b (stage-2 score tie 5-5 breaks on sumpos 7 < 8)."""
    cands = ("a", "b", "c", "d", "e")
    part1 = _election(cands, ["a b c d e", "a b c d e", "b a c d e"])
    part2 = _election(
        cands,
        ["b a c d e", "b a d e c", "c d a e b", "d e a b c", "e c a b d"],
    )
    return part1, part2


def abstention_benefit() -> tuple[Election, int]:
    """(election, voter index): with everyone voting, a wins at stage 2; if
    the third voter (b>c>d>a) stays home, d wins at stage 1, and that voter
    ranks d above a."""
    e = _election(
        ("a", "b", "c", "d"),
        ["d a b c", "a b d c", "b c d a", "d a b c"],
    )
    return e, 2


def misreport_benefit() -> tuple[Election, int, tuple[str, ...]]:
    """(election, voter index, insincere ranking): the fourth voter of the
    stage-two tie-break election turns unique winner Y into co-winners {X, Y}
    by reporting X>Z>Y, and prefers X to Y."""
    return stage_two_tiebreak_election(), 3, ("X", "Z", "Y")
