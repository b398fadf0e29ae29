"""Release gate.

One test per bar the package must clear, numbered c1..c9; `pytest -v` then
reads as a per-bar pass/fail report.  Where a bar names a full grid whose
complete enumeration cannot finish inside its time budget, the test runs
the complete unit-weight core of the grid plus a seeded sample of the rest,
and says so in its docstring; everything else is exhaustive or exact.
"""

import itertools
import os
import time

from skatevote import (
    Ballot,
    Election,
    bucklin_winners,
    condorcet_winner,
    expand_weights,
    sks_winner_set,
    sks_winners,
    sumpos_at,
)
from skatevote.axioms import (
    SATISFIED,
    AxiomId,
    SearchBounds,
    check_bucklin_positive_responsiveness_example,
    check_witness,
    parse_witness,
    search_counterexample,
    serialize_witness,
)
from skatevote.cli import main
from skatevote.control import (
    ControlInstance,
    oracle_control,
    solve_ccav_exact,
    solve_ccdc_exact,
    solve_dcav,
    solve_dcdc_exact,
)
from skatevote.control import verify_witness as verify_control
from skatevote.fileformat import serialize_election
from skatevote.fixtures import (
    bucklin_tie_election,
    clone_pair_base,
    clone_pair_cloned,
    dance_final,
    stage_two_tiebreak_election,
)
from skatevote.manipulation import (
    ManipulationInstance,
    oracle_manipulation,
    solve_ccwm_exact,
    solve_dcwm,
)
from skatevote.manipulation import verify_witness as verify_manipulation
from skatevote.rules import bucklin_winner_set, gen_cyclic, gen_sumpos_gap
from skatevote.sampling import SplitMix64, candidate_names, random_ballot, random_election

from strategies import audit_reduction_invariants

RANKINGS3 = tuple(sorted(itertools.permutations(("a", "b", "c"))))


def test_c1_paper_example_regressions():
    """The four worked elections land exactly where they should, fast."""
    t0 = time.time()

    dance = sks_winners(dance_final())
    assert dance.winners == ("33",)
    assert dance.decisive_stage == 2

    ex2 = bucklin_winners(bucklin_tie_election())
    assert ex2.winners == ("U", "X")
    assert ex2.decisive_stage == 2

    ex3 = sks_winners(stage_two_tiebreak_election())
    assert ex3.winners == ("Y",)
    assert ex3.decisive_stage == 2
    s1, s2 = ex3.stages[0], ex3.stages[1]
    assert s1.scores == {"X": 1, "Y": 2, "Z": 1}
    assert s1.sumpos == {"X": 1, "Y": 2, "Z": 1}
    assert s2.scores == {"X": 3, "Y": 3, "Z": 2}
    assert s2.sumpos == {"X": 5, "Y": 4, "Z": 3}

    base, cloned = clone_pair_base(), clone_pair_cloned()
    assert sks_winner_set(base) == ("Y",)
    cloned_trace = sks_winners(cloned)
    assert cloned_trace.winners == ("Z",)
    assert cloned_trace.stages[1].sumpos["Z"] == 5
    assert cloned_trace.stages[1].sumpos["Y"] == 6
    assert condorcet_winner(base) == "Y"
    assert condorcet_winner(cloned) == "Y"

    assert time.time() - t0 < 1.0


def test_c2_generator_grids():
    """Cyclic ties and sumpos-gap elections behave per their formulas."""
    for k in range(2, 7):
        e = gen_cyclic(k)
        everyone = tuple(sorted(e.candidates))
        sks = sks_winners(e)
        buck = bucklin_winners(e)
        assert sks.winners == everyone
        assert buck.winners == everyone
        assert buck.decisive_stage == k // 2 + 1
        assert sks.threshold_stage == k // 2 + 1
        assert sks.decisive_stage == k

    for i in (3, 4, 5):
        for n in (0, 1, 3):
            e = gen_sumpos_gap(i, n)
            buck = bucklin_winners(e)
            assert buck.winners == ("a", "b")
            assert buck.decisive_stage == n + 2
            assert sumpos_at(e, "a", n + 2) == i - 1 + n + 2
            assert sumpos_at(e, "b", n + 2) == 1 + (i - 1) * (n + 2)
            assert sks_winner_set(e) == ("a",)


def _fuzz_corpus(count=10_000):
    rng = SplitMix64(0xACCE97)
    for _ in range(count):
        yield random_election(rng, max_m=6, max_n=9, max_weight=4)


def test_c3_winner_containment_fuzz():
    """10^4 weighted elections: SkS winners are Bucklin winners, and a
    unique Bucklin winner is the unique SkS winner; under 30 s."""
    t0 = time.time()
    for e in _fuzz_corpus():
        sks = sks_winner_set(e)
        buck = bucklin_winner_set(e)
        assert set(sks) <= set(buck)
        if len(buck) == 1:
            assert sks == buck
    assert time.time() - t0 < 30.0


def test_c4_reduction_trace_audit():
    """Same corpus: every trace with a reduction satisfies the strict-score
    condition for unique winners and the perpetual-tie condition for
    co-winners."""
    audited = 0
    for e in _fuzz_corpus():
        trace = sks_winners(e)
        if trace.reduction_history:
            audited += 1
        audit_reduction_invariants(trace)
    assert audited > 0


def test_c5_axiom_suite():
    """Satisfied axioms stay clean over 10^4 budgeted trials; each violated
    axiom yields a replayable witness, with the cloning pair anchoring
    Condorcet/IIA/clones and the four-candidate lift separating the rules."""
    bounds = SearchBounds(budget=10_000)
    for axiom in sorted(SATISFIED, key=lambda a: a.value):
        assert search_counterexample(axiom, bounds) is None, axiom

    violated = [a for a in AxiomId if a not in SATISFIED]
    assert len(violated) == 8
    found = {}
    for axiom in violated:
        w = search_counterexample(axiom)
        assert w is not None, axiom
        assert check_witness(w)
        replayed = parse_witness(serialize_witness(w))
        assert check_witness(replayed)
        found[axiom] = w

    assert found[AxiomId.CONDORCET].base == clone_pair_cloned()
    assert found[AxiomId.IIA].base == clone_pair_base()
    assert found[AxiomId.IIA].modified == clone_pair_cloned()
    clones = found[AxiomId.INDEPENDENCE_OF_CLONES]
    assert clones.base == clone_pair_base()
    assert (clones.candidate, clones.clone) == ("Z", "Z2")

    report = check_bucklin_positive_responsiveness_example()
    assert report.confirmed
    assert report.bucklin_before == report.bucklin_after == ("a", "b")
    assert (report.sks_before, report.sks_after) == (("a",), ("b",))


def _manipulation_solver(goal):
    return solve_ccwm_exact if goal == "constructive" else solve_dcwm


def test_c6_manipulation_oracle_grid():
    """Solvers match the oracle: the complete unit-weight 3-candidate
    subgrid (|V| <= 3, |S| <= 2, every target and goal), then 10^4 sampled
    weighted instances over m in {3,4}, |V| <= 3, |S| <= 2, weights in
    {1,2,3}; under 5 minutes."""
    t0 = time.time()
    cands = ("a", "b", "c")
    exhaustive = 0
    for nv in range(0, 4):
        for prof in itertools.combinations_with_replacement(RANKINGS3, nv):
            sincere = tuple(Ballot(r) for r in prof)
            for ns in range(0, 3):
                if nv + ns == 0:
                    continue
                for target in cands:
                    for goal in ("constructive", "destructive"):
                        inst = ManipulationInstance(
                            cands, sincere, (1,) * ns, target, goal
                        )
                        got = _manipulation_solver(goal)(inst)
                        want = oracle_manipulation(inst)
                        assert (got is None) == (want is None), inst
                        if got is not None:
                            assert verify_manipulation(inst, got)
                        exhaustive += 1
    assert exhaustive > 1400

    rng = SplitMix64(0xC6)
    sampled = 0
    while sampled < 10_000:
        m = rng.randint(3, 4)
        names = candidate_names(m)
        nv = rng.randint(0, 3)
        ns = rng.randint(0, 2)
        sincere = tuple(random_ballot(rng, names, 3) for _ in range(nv))
        weights = tuple(rng.randint(1, 3) for _ in range(ns))
        if sum(b.weight for b in sincere) + sum(weights) < 1:
            continue
        goal = ("constructive", "destructive")[rng.randrange(2)]
        inst = ManipulationInstance(
            names, sincere, weights, names[rng.randrange(m)], goal
        )
        got = _manipulation_solver(goal)(inst)
        want = oracle_manipulation(inst)
        assert (got is None) == (want is None), inst
        if got is not None:
            assert verify_manipulation(inst, got)
        sampled += 1
    assert time.time() - t0 < 300.0


def _control_solver(kind):
    return {
        "ccdc": solve_ccdc_exact,
        "dcdc": solve_dcdc_exact,
        "ccav": solve_ccav_exact,
        "dcav": solve_dcav,
    }[kind]


def test_c7_control_oracle_grid():
    """All four control solvers match the oracle: the complete unit-weight
    3-candidate subgrid (|V| <= 3, pools to size 2 for voter control, every
    budget and target), then 10^4 sampled weighted instances over m <= 4,
    |V| <= 4, |U| <= 6, k <= |U|, weights <= 3; under 5 minutes."""
    t0 = time.time()
    cands = ("a", "b", "c")
    exhaustive = 0
    for nv in range(1, 4):
        for prof in itertools.combinations_with_replacement(RANKINGS3, nv):
            e = Election(cands, tuple(Ballot(r) for r in prof))
            for kind in ("ccdc", "dcdc"):
                for k in range(0, 3):
                    for target in cands:
                        inst = ControlInstance(kind, e, target, k)
                        got = _control_solver(kind)(inst)
                        want = oracle_control(inst)
                        assert (got is None) == (want is None), inst
                        if got is not None:
                            assert verify_control(inst, got)
                        exhaustive += 1
            for nu in range(0, 3):
                for pool_rs in itertools.combinations_with_replacement(RANKINGS3, nu):
                    pool = tuple(Ballot(r) for r in pool_rs)
                    for kind in ("ccav", "dcav"):
                        for k in range(0, nu + 1):
                            for target in cands:
                                inst = ControlInstance(kind, e, target, k, pool)
                                got = _control_solver(kind)(inst)
                                want = oracle_control(inst)
                                assert (got is None) == (want is None), inst
                                if got is not None:
                                    assert verify_control(inst, got)
                                exhaustive += 1
    assert exhaustive > 35_000

    rng = SplitMix64(0xC7)
    sampled = 0
    while sampled < 10_000:
        m = rng.randint(2, 4)
        names = candidate_names(m)
        ballots = tuple(random_ballot(rng, names, 3) for _ in range(rng.randint(1, 4)))
        if sum(b.weight for b in ballots) < 1:
            continue
        e = Election(names, ballots)
        target = names[rng.randrange(m)]
        kind = ("ccdc", "dcdc", "ccav", "dcav")[rng.randrange(4)]
        if kind in ("ccdc", "dcdc"):
            inst = ControlInstance(kind, e, target, rng.randint(0, m - 1))
        else:
            pool = tuple(random_ballot(rng, names, 3) for _ in range(rng.randint(0, 6)))
            inst = ControlInstance(kind, e, target, rng.randint(0, len(pool)), pool)
        got = _control_solver(kind)(inst)
        want = oracle_control(inst)
        assert (got is None) == (want is None), inst
        if got is not None:
            assert verify_control(inst, got)
        sampled += 1
    assert time.time() - t0 < 300.0


def test_c8_weight_expansion_equivalence():
    """10^3 weighted elections tabulate identically to their unit-ballot
    expansions under both rules."""
    rng = SplitMix64(0xC8)
    for _ in range(1_000):
        e = random_election(rng, max_m=6, max_n=9, max_weight=4)
        flat = expand_weights(e)
        for winners_of in (sks_winners, bucklin_winners):
            a, b = winners_of(e), winners_of(flat)
            assert a.winners == b.winners
            assert a.decisive_stage == b.decisive_stage


def test_c9_cli_determinism(tmp_path, capsys, monkeypatch):
    """Every command repeated 20 times under varying SKATEVOTE_THREADS
    yields byte-identical structured output."""
    ex3 = tmp_path / "ex3.elect"
    ex3.write_text(serialize_election(stage_two_tiebreak_election()))
    ex2 = tmp_path / "ex2.elect"
    ex2.write_text(serialize_election(bucklin_tie_election()))
    dcav = tmp_path / "dcav.inst"
    dcav.write_text(
        serialize_election(stage_two_tiebreak_election())
        + "control: dcav\ntarget: Y\nk: 1\npool:\nZ > X > Y\n"
    )
    ccwm = tmp_path / "ccwm.inst"
    ccwm.write_text(
        "candidates: a,b,c\nb > a > c\nmanipulators: 1,1\ntarget: a\ngoal: constructive\n"
    )

    code = main(["axioms-search", "--axiom", "condorcet"])
    assert code == 0
    witness_file = tmp_path / "w.txt"
    witness_file.write_text(capsys.readouterr().out)

    commands = [
        ["winners", "--format", "records", str(ex3)],
        ["trace", "--rule", "bucklin", "--format", "records", str(ex2)],
        ["axioms-check", "--axiom", "participation", "--budget", "50",
         "--format", "records", str(ex3)],
        ["axioms-search", "--axiom", "condorcet", "--format", "records"],
        ["axioms-replay", "--format", "records", str(witness_file)],
        ["attack", "--problem", "dcav", "--format", "records", str(dcav)],
        ["attack", "--problem", "ccwm", "--format", "records", str(ccwm)],
        ["oracle", "--problem", "dcav", "--format", "records", str(dcav)],
        ["gen", "--family", "random", "--m", "5", "--n", "6",
         "--max-weight", "3", "--seed", "99"],
    ]
    thread_settings = [None, "0", "1", "2", "7"]
    for argv in commands:
        outputs = set()
        codes = set()
        for rep in range(20):
            setting = thread_settings[rep % len(thread_settings)]
            if setting is None:
                monkeypatch.delenv("SKATEVOTE_THREADS", raising=False)
            else:
                monkeypatch.setenv("SKATEVOTE_THREADS", setting)
            codes.add(main(list(argv)))
            outputs.add(capsys.readouterr().out)
        assert len(outputs) == 1, argv
        assert len(codes) == 1, argv
