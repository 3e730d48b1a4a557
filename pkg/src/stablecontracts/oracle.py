"""Ground truth and test material: power-set brute force plus a seeded
instance generator.

``brute_force_stable`` applies the two-part stability definition (both
sides keep the system, no outside contract wanted by both) to every subset
of the ground set.  It deliberately avoids the desirability machinery and
the fixed-point routes so it can arbitrate between them.
"""

from __future__ import annotations

import random
from typing import Mapping, Sequence

import numpy as np

from .choice import ChoiceFunction, LinearOrder, Quota, dense_table
from .contractsets import Mask, canonical_sorted
from .errors import CapExceededError, DomainError
from .instance import Agent, Contract, Instance, Side, TwoAgentProblem

BRUTE_FORCE_CAP = 20

_FAMILIES = ("linear", "quota")


def brute_force_stable(
    problem: TwoAgentProblem, cap: int = BRUTE_FORCE_CAP
) -> list[Mask]:
    """Every stable system, by scanning the full power set.

    Output order is canonical (cardinality, then lexicographic ids) and is
    part of the interface.
    """
    n = problem.size
    if n > cap:
        raise CapExceededError(
            f"ground has {n} contracts; the brute-force scan is capped at {cap}"
        )
    tf = np.asarray(dense_table(problem.firm), dtype=np.int64)
    tw = np.asarray(dense_table(problem.worker), dtype=np.int64)
    masks = np.arange(1 << n, dtype=np.int64)
    acceptable = (tf == masks) & (tw == masks)
    blocked = np.zeros(len(masks), dtype=bool)
    for e in range(n):
        be = np.int64(1 << e)
        outside = (masks & be) == 0
        firm_wants = (tf[masks | be] >> e) & 1
        worker_wants = (tw[masks | be] >> e) & 1
        blocked |= outside & ((firm_wants & worker_wants) == 1)
    stable = np.nonzero(acceptable & ~blocked)[0]
    return canonical_sorted(int(s) for s in stable)


def random_instance(
    seed: int,
    firms: int,
    workers: int,
    density: float = 1.0,
    family_mix: Mapping[str, float] | None = None,
) -> Instance:
    """Deterministic random bipartite market.

    One potential contract per (firm, worker) pair, kept with probability
    ``density``.  Each agent draws a choice family from ``family_mix``
    (weights over "linear" and "quota"), a shuffled strict order, and for
    quotas a size between 1 and its degree.  The result always passes
    instance validation.
    """
    if firms < 0 or workers < 0:
        raise DomainError("agent counts must be non-negative")
    if not 0.0 <= density <= 1.0:
        raise DomainError("density must lie in [0, 1]")
    mix = dict(family_mix) if family_mix else {"linear": 1.0}
    for fam in mix:
        if fam not in _FAMILIES:
            raise DomainError(f"unknown choice family {fam!r} in family_mix")

    rng = random.Random(seed)
    firm_ids = [f"f{i + 1}" for i in range(firms)]
    worker_ids = [f"w{j + 1}" for j in range(workers)]
    agents = [Agent(f, Side.FIRM) for f in firm_ids] + [
        Agent(w, Side.WORKER) for w in worker_ids
    ]

    contracts = []
    for f in firm_ids:
        for w in worker_ids:
            if rng.random() < density:
                contracts.append(Contract(len(contracts), f"{f}-{w}", f, w))

    adjacency: dict[str, list[int]] = {a.id: [] for a in agents}
    for c in contracts:
        adjacency[c.firm].append(c.id)
        adjacency[c.worker].append(c.id)

    families = sorted(mix)
    weights = [mix[fam] for fam in families]
    choices: dict[str, ChoiceFunction] = {}
    for agent in agents:
        adjacent = adjacency[agent.id]
        order = list(adjacent)
        rng.shuffle(order)
        if not adjacent:
            choices[agent.id] = LinearOrder(())
            continue
        family = rng.choices(families, weights=weights)[0]
        if family == "linear":
            choices[agent.id] = LinearOrder(tuple(order))
        else:
            choices[agent.id] = Quota(rng.randint(1, len(adjacent)), tuple(order))
    return Instance(tuple(agents), tuple(contracts), choices)


def random_corpus(
    count: int,
    master_seed: int = 0,
    max_contracts: int = 8,
    families: Sequence[str] = _FAMILIES,
) -> list[Instance]:
    """A deterministic corpus of small random instances for sweeps.

    Shapes, densities and family mixes vary per entry but every instance
    has at most ``max_contracts`` contracts.
    """
    master = random.Random(master_seed)
    shapes = [
        (f, w)
        for f in range(1, max_contracts + 1)
        for w in range(1, max_contracts + 1)
        if f * w <= max_contracts
    ]
    mix = {fam: 1.0 for fam in families}
    out = []
    for _ in range(count):
        f, w = master.choice(shapes)
        density = master.choice((0.5, 0.75, 1.0))
        out.append(
            random_instance(
                master.randrange(2**32), f, w, density=density, family_mix=mix
            )
        )
    return out
