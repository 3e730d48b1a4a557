import pytest

from stablecontracts import reduce_to_two_agents
from stablecontracts.contractsets import mask_of, submasks
from stablecontracts.fixtures import (
    marriage_2x2,
    poset_table_instance,
    two_parallel_contracts,
)


def m(*ids: int) -> int:
    """Shorthand: mask of the given contract ids."""
    return mask_of(ids)


@pytest.fixture(scope="session")
def i1():
    return two_parallel_contracts()


@pytest.fixture(scope="session")
def i3():
    return marriage_2x2()


@pytest.fixture(scope="session")
def poset():
    return poset_table_instance()


@pytest.fixture(scope="session")
def p1(i1):
    return reduce_to_two_agents(i1)


@pytest.fixture(scope="session")
def p3(i3):
    return reduce_to_two_agents(i3)


def naive_axiom_verdicts(cf) -> dict[str, bool]:
    """Straight-from-the-definition axiom check, independent of the
    vectorized validator.  Slow and only for small grounds."""
    ground = cf.ground
    consistency = True
    substitutability = True
    path_independence = True
    for a in submasks(ground):
        ca = cf.evaluate(a)
        for b in submasks(ground):
            if ca & ~b == 0 and b & ~a == 0 and cf.evaluate(b) != ca:
                consistency = False
            if a & ~b == 0 and cf.evaluate(b) & a & ~ca:
                substitutability = False
            if cf.evaluate(a | b) != cf.evaluate(ca | b):
                path_independence = False
    return {
        "consistency": consistency,
        "substitutability": substitutability,
        "path-independence": path_independence,
    }
