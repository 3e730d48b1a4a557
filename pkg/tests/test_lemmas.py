from conftest import m
from stablecontracts.choice import Table
from stablecontracts.instance import TwoAgentProblem, reduce_to_two_agents
from stablecontracts.lemmas import LAWS, run_lemma_suite
from stablecontracts.oracle import random_corpus


def test_all_laws_pass_on_fixture_and_random_problems(p1, p3, poset):
    problems = [("i1", p1), ("i3", p3), ("poset", reduce_to_two_agents(poset))]
    for i, inst in enumerate(random_corpus(15, master_seed=149, max_contracts=8)):
        problems.append((f"rnd-{i}", reduce_to_two_agents(inst)))
    results = run_lemma_suite(problems)
    assert len(results) == len(LAWS)
    failures = [r for r in results if not r.passed]
    assert not failures, failures


def test_suite_detects_laws_broken_by_invalid_input():
    """Feeding a non-substitutable table produces concrete witnesses.

    TwoAgentProblem does not re-validate its choice functions, so the suite
    can be pointed at an invalid problem to prove it actually checks things.
    """
    complements = Table(m(0, 1), {0: 0, m(0): 0, m(1): 0, m(0, 1): m(0, 1)})
    problem = TwoAgentProblem(complements, complements)
    results = {r.key: r for r in run_lemma_suite([("bad", problem)])}
    assert not results["L2A"].passed
    assert "bad" in results["L2A"].detail


def test_law_keys_are_stable():
    assert [key for key, _, _ in LAWS] == [
        "L1",
        "L1C",
        "L2A",
        "L2B",
        "LOB",
        "L3",
        "L4",
        "L5",
        "L6",
        "L6D",
        "DAM",
        "DMA",
    ]
