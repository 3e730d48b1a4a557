"""Small worked markets used across the test suite and as CLI demo input."""

from __future__ import annotations

from .choice import LinearOrder, Table
from .instance import Agent, Contract, Instance, Side


def two_parallel_contracts() -> Instance:
    """One firm, one worker, two parallel contracts between them.

    The firm prefers e1, the worker prefers e2; both {e1} and {e2} are
    stable.  The smallest market where the two sides disagree.
    """
    agents = (Agent("f1", Side.FIRM), Agent("w1", Side.WORKER))
    contracts = (
        Contract(0, "e1", "f1", "w1"),
        Contract(1, "e2", "f1", "w1"),
    )
    choices = {
        "f1": LinearOrder((0, 1)),
        "w1": LinearOrder((1, 0)),
    }
    return Instance(agents, contracts, choices)


def marriage_2x2() -> Instance:
    """The classical 2x2 marriage market with crossed preferences.

    Contracts e11, e12, e21, e22 (eij joins firm i with worker j).  Firms
    prefer their own-index worker, workers prefer the other firm, so the
    firm-optimal stable matching is {e11, e22} and the worker-optimal one
    is {e21, e12}.
    """
    agents = (
        Agent("f1", Side.FIRM),
        Agent("f2", Side.FIRM),
        Agent("w1", Side.WORKER),
        Agent("w2", Side.WORKER),
    )
    contracts = (
        Contract(0, "e11", "f1", "w1"),
        Contract(1, "e12", "f1", "w2"),
        Contract(2, "e21", "f2", "w1"),
        Contract(3, "e22", "f2", "w2"),
    )
    choices = {
        "f1": LinearOrder((0, 1)),
        "f2": LinearOrder((3, 2)),
        "w1": LinearOrder((2, 0)),
        "w2": LinearOrder((1, 3)),
    }
    return Instance(agents, contracts, choices)


def poset_table_instance() -> Instance:
    """A firm choosing maximal elements of a partial order, as a table.

    Contracts x1 and x2 are incomparable and both dominate x3, so the firm
    keeps {x1, x2} from the full menu.  Not expressible as a linear order
    or a quota; exercises the table family with a genuinely multi-valued
    Plott function.
    """
    agents = (
        Agent("f1", Side.FIRM),
        Agent("w1", Side.WORKER),
        Agent("w2", Side.WORKER),
        Agent("w3", Side.WORKER),
    )
    contracts = (
        Contract(0, "x1", "f1", "w1"),
        Contract(1, "x2", "f1", "w2"),
        Contract(2, "x3", "f1", "w3"),
    )
    table = {
        0b000: 0b000,
        0b001: 0b001,
        0b010: 0b010,
        0b100: 0b100,
        0b011: 0b011,
        0b101: 0b001,
        0b110: 0b010,
        0b111: 0b011,
    }
    choices = {
        "f1": Table(0b111, table),
        "w1": LinearOrder((0,)),
        "w2": LinearOrder((1,)),
        "w3": LinearOrder((2,)),
    }
    return Instance(agents, contracts, choices)


def bad_table_documents() -> dict[str, dict]:
    """Instance documents whose table payloads violate exactly the axioms
    their name says.  They must fail to load, with a minimal witness."""

    def doc(workers: int, entries: list[dict]) -> dict:
        agents = [{"id": "f1", "side": "firm"}]
        contracts = []
        choices: dict = {"f1": {"family": "table", "payload": entries}}
        for j in range(workers):
            w = f"w{j + 1}"
            agents.append({"id": w, "side": "worker"})
            contracts.append({"id": f"x{j + 1}", "firm": "f1", "worker": w})
            choices[w] = {"family": "linear", "payload": [f"x{j + 1}"]}
        return {"agents": agents, "contracts": contracts, "choices": choices}

    breaks_consistency = doc(
        3,
        [
            {"menu": [], "choice": []},
            {"menu": ["x1"], "choice": ["x1"]},
            {"menu": ["x2"], "choice": ["x2"]},
            {"menu": ["x3"], "choice": ["x3"]},
            {"menu": ["x1", "x2"], "choice": ["x1", "x2"]},
            {"menu": ["x1", "x3"], "choice": ["x1"]},
            {"menu": ["x2", "x3"], "choice": ["x2"]},
            {"menu": ["x1", "x2", "x3"], "choice": ["x1"]},
        ],
    )
    breaks_substitutability = doc(
        2,
        [
            {"menu": [], "choice": []},
            {"menu": ["x1"], "choice": []},
            {"menu": ["x2"], "choice": []},
            {"menu": ["x1", "x2"], "choice": ["x1", "x2"]},
        ],
    )
    breaks_both = doc(
        2,
        [
            {"menu": [], "choice": []},
            {"menu": ["x1"], "choice": []},
            {"menu": ["x2"], "choice": ["x2"]},
            {"menu": ["x1", "x2"], "choice": ["x1"]},
        ],
    )
    return {
        "consistency": breaks_consistency,
        "substitutability": breaks_substitutability,
        "both": breaks_both,
    }
