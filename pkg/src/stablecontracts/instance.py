"""Bipartite contract markets and their reduction to two aggregate agents.

A market instance is a bipartite multigraph: agents on two sides (firms and
workers), contracts as edges between them, and one validated choice function
per agent over exactly its adjacent contracts E(v).  Contract ids are dense
indices 0..|E|-1 assigned in declaration order; a human-readable label rides
along for file round trips and display.

Validation is mandatory and happens at construction: algorithms downstream
assume every per-agent choice function passed the exhaustive axiom check.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping

from .choice import Aggregate, ChoiceFunction, validate_plott
from .contractsets import Mask, full_mask, ids_of
from .errors import ChoiceValidationError, DomainError


class Side(str, enum.Enum):
    FIRM = "firm"
    WORKER = "worker"


@dataclass(frozen=True)
class Agent:
    id: str
    side: Side


@dataclass(frozen=True)
class Contract:
    """An edge between one firm and one worker.

    ``id`` is the dense ground-set index; parallel contracts between the
    same pair are legal and distinguished only by id.
    """

    id: int
    label: str
    firm: str
    worker: str


@dataclass(frozen=True)
class Instance:
    agents: tuple[Agent, ...]
    contracts: tuple[Contract, ...]
    choices: Mapping[str, ChoiceFunction]

    def __post_init__(self):
        object.__setattr__(self, "agents", tuple(self.agents))
        object.__setattr__(self, "contracts", tuple(self.contracts))
        object.__setattr__(self, "choices", dict(self.choices))
        _validate(self)
        adjacency: dict[str, Mask] = {a.id: 0 for a in self.agents}
        by_label: dict[str, Contract] = {}
        for c in self.contracts:
            adjacency[c.firm] |= 1 << c.id
            adjacency[c.worker] |= 1 << c.id
            by_label[c.label] = c
        object.__setattr__(self, "_adjacency", adjacency)
        object.__setattr__(self, "_by_label", by_label)
        object.__setattr__(self, "_by_id", {a.id: a for a in self.agents})
        _validate_choices(self)

    @property
    def size(self) -> int:
        return len(self.contracts)

    @property
    def ground(self) -> Mask:
        return full_mask(len(self.contracts))

    def agent(self, agent_id: str) -> Agent:
        try:
            return self._by_id[agent_id]
        except KeyError:
            raise DomainError(f"unknown agent {agent_id!r}") from None

    def firms(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.agents if a.side is Side.FIRM)

    def workers(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.agents if a.side is Side.WORKER)

    def contract_by_label(self, label: str) -> Contract:
        try:
            return self._by_label[label]
        except KeyError:
            raise DomainError(f"unknown contract label {label!r}") from None

    def labels_of(self, mask: Mask) -> list[str]:
        return [self.contracts[i].label for i in ids_of(mask)]


def _validate(inst: Instance) -> None:
    seen_agents = set()
    for a in inst.agents:
        if a.id in seen_agents:
            raise DomainError(f"duplicate agent id {a.id!r}")
        seen_agents.add(a.id)
        if not isinstance(a.side, Side):
            raise DomainError(f"agent {a.id!r} has no declared side")
    sides = {a.id: a.side for a in inst.agents}
    seen_labels = set()
    for pos, c in enumerate(inst.contracts):
        if c.id != pos:
            raise DomainError(
                f"contract ids must be dense declaration indices; "
                f"contract at position {pos} has id {c.id}"
            )
        if c.label in seen_labels:
            raise DomainError(f"duplicate contract label {c.label!r}")
        seen_labels.add(c.label)
        if c.firm not in sides or sides[c.firm] is not Side.FIRM:
            raise DomainError(
                f"contract {c.label!r} names {c.firm!r} which is not a declared firm"
            )
        if c.worker not in sides or sides[c.worker] is not Side.WORKER:
            raise DomainError(
                f"contract {c.label!r} names {c.worker!r} which is not a declared worker"
            )


def _validate_choices(inst: Instance) -> None:
    declared = set(inst.choices)
    expected = {a.id for a in inst.agents}
    if declared != expected:
        missing = expected - declared
        extra = declared - expected
        if missing:
            raise DomainError(f"no choice function for agent(s) {sorted(missing)}")
        raise DomainError(f"choice function for undeclared agent(s) {sorted(extra)}")
    for a in inst.agents:
        cf = inst.choices[a.id]
        adjacent = inst._adjacency[a.id]
        if cf.ground != adjacent:
            raise DomainError(
                f"choice function of agent {a.id!r} is declared over "
                f"{ids_of(cf.ground)} but its adjacent contracts are "
                f"{ids_of(adjacent)}"
            )
        report = validate_plott(cf)
        if not report.passed:
            failing = report.first_failure()
            raise ChoiceValidationError(
                f"choice function of agent {a.id!r} violates {failing.axiom}",
                report,
                agent_id=a.id,
            )


@dataclass(frozen=True)
class TwoAgentProblem:
    """One aggregate Firm and one aggregate Worker over a dense ground set."""

    firm: ChoiceFunction
    worker: ChoiceFunction

    def __post_init__(self):
        if self.firm.ground != self.worker.ground:
            raise DomainError(
                "firm and worker choice functions must share one ground set"
            )
        n = self.firm.ground.bit_count()
        if self.firm.ground != full_mask(n):
            raise DomainError("the shared ground set must be dense 0..n-1")

    @property
    def ground(self) -> Mask:
        return self.firm.ground

    @property
    def size(self) -> int:
        return self.firm.ground.bit_count()


def contracts_of(inst: Instance, agent_id: str) -> Mask:
    """E(v): the contracts naming this agent."""
    inst.agent(agent_id)
    return inst._adjacency[agent_id]


def restrict(s: Mask, agent_id: str, inst: Instance) -> Mask:
    """S(v) = S ∩ E(v)."""
    if s & ~inst.ground:
        raise DomainError("contract set is not a subset of the ground set")
    return s & contracts_of(inst, agent_id)


def reduce_to_two_agents(inst: Instance) -> TwoAgentProblem:
    """Collapse each side into one aggregate choice function.

    The aggregate firm choice evaluates each firm on its slice of the menu
    and joins the results; likewise for workers.  Because adjacency masks
    partition the ground on each side, both aggregates inherit the
    rationality axioms from their parts.
    """
    firm_parts = tuple(inst.choices[f] for f in inst.firms())
    worker_parts = tuple(inst.choices[w] for w in inst.workers())
    return TwoAgentProblem(Aggregate(firm_parts), Aggregate(worker_parts))
