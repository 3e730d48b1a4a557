"""Instance documents: a single JSON object describing a market.

Schema::

    {
      "agents":    [{"id": "f1", "side": "firm"}, ...],
      "contracts": [{"id": "e11", "firm": "f1", "worker": "w1"}, ...],
      "choices": {
        "f1": {"family": "linear", "payload": ["e11", "e12"]},
        "w1": {"family": "quota",  "payload": {"q": 1, "priority": ["e11"]}},
        "a":  {"family": "table",  "payload": [{"menu": [...], "choice": [...]}, ...]}
      }
    }

Contract ids in the file are arbitrary unique labels; internally they map
to dense indices in declaration order, so parse → serialize → parse is an
exact round trip.  Linear payloads list contracts best-first, quota
priorities likewise, and table payloads must cover every subset of the
agent's contracts.

Loading validates everything, including the exhaustive axiom check on each
agent's choice function; failures raise ParseError with a distinct code
(io, malformed, unknown-family, dangling-reference, axiom-violation).
"""

from __future__ import annotations

import json
from typing import Any

from .choice import ChoiceFunction, LinearOrder, Quota, Table
from .contractsets import Mask, canonical_key, ids_of, mask_of
from .errors import ChoiceValidationError, DomainError, ParseError
from .instance import Agent, Contract, Instance, Side

_KNOWN_FAMILIES = ("linear", "quota", "table")


def parse_instance(path: str) -> Instance:
    """Load and fully validate an instance document from a file."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError("io", f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("malformed", f"{path} is not valid JSON: {exc}") from exc
    return instance_from_document(doc)


def instance_from_document(doc: Any) -> Instance:
    """Build a validated Instance from a parsed document."""
    agents, contracts, choices = parse_components(doc)
    try:
        return Instance(tuple(agents), tuple(contracts), choices)
    except ChoiceValidationError as exc:
        raise ParseError("axiom-violation", str(exc)) from exc
    except DomainError as exc:
        raise ParseError("malformed", str(exc)) from exc


def parse_components(
    doc: Any,
) -> tuple[list[Agent], list[Contract], dict[str, ChoiceFunction]]:
    """Structural parse only: shapes, references and payload wellformedness.

    Returns the pieces an Instance is built from without running the axiom
    validation, so callers (the ``validate`` subcommand) can report
    per-agent results themselves.
    """
    if not isinstance(doc, dict):
        raise ParseError("malformed", "document root must be an object")
    for key in ("agents", "contracts", "choices"):
        if key not in doc:
            raise ParseError("malformed", f"document lacks the {key!r} section")

    agents = []
    seen_agents: dict[str, Side] = {}
    if not isinstance(doc["agents"], list):
        raise ParseError("malformed", "'agents' must be a list")
    for raw in doc["agents"]:
        if not isinstance(raw, dict) or "id" not in raw or "side" not in raw:
            raise ParseError("malformed", f"bad agent entry: {raw!r}")
        agent_id = raw["id"]
        if not isinstance(agent_id, str) or not agent_id:
            raise ParseError("malformed", f"agent id must be a non-empty string: {raw!r}")
        if agent_id in seen_agents:
            raise ParseError("malformed", f"duplicate agent id {agent_id!r}")
        try:
            side = Side(raw["side"])
        except ValueError:
            raise ParseError(
                "malformed",
                f"agent {agent_id!r} has side {raw['side']!r}, expected 'firm' or 'worker'",
            ) from None
        seen_agents[agent_id] = side
        agents.append(Agent(agent_id, side))

    contracts = []
    index_by_label: dict[str, int] = {}
    if not isinstance(doc["contracts"], list):
        raise ParseError("malformed", "'contracts' must be a list")
    for raw in doc["contracts"]:
        if not isinstance(raw, dict) or not {"id", "firm", "worker"} <= set(raw):
            raise ParseError("malformed", f"bad contract entry: {raw!r}")
        label = str(raw["id"])
        if label in index_by_label:
            raise ParseError("malformed", f"duplicate contract id {label!r}")
        firm, worker = raw["firm"], raw["worker"]
        if firm not in seen_agents or seen_agents[firm] is not Side.FIRM:
            raise ParseError(
                "dangling-reference",
                f"contract {label!r} names {firm!r}, which is not a declared firm",
            )
        if worker not in seen_agents or seen_agents[worker] is not Side.WORKER:
            raise ParseError(
                "dangling-reference",
                f"contract {label!r} names {worker!r}, which is not a declared worker",
            )
        index_by_label[label] = len(contracts)
        contracts.append(Contract(len(contracts), label, firm, worker))

    if not isinstance(doc["choices"], dict):
        raise ParseError("malformed", "'choices' must be an object keyed by agent id")
    choices: dict[str, ChoiceFunction] = {}
    for agent_id, raw in doc["choices"].items():
        if agent_id not in seen_agents:
            raise ParseError(
                "dangling-reference",
                f"choice function declared for unknown agent {agent_id!r}",
            )
        choices[agent_id] = _parse_choice(agent_id, raw, index_by_label)
    missing = [a.id for a in agents if a.id not in choices]
    if missing:
        raise ParseError(
            "malformed", f"no choice function for agent(s) {missing}"
        )
    return agents, contracts, choices


def _resolve_labels(
    agent_id: str, labels: Any, index_by_label: dict[str, int]
) -> list[int]:
    if not isinstance(labels, list):
        raise ParseError(
            "malformed", f"agent {agent_id!r}: expected a list of contract ids"
        )
    out = []
    for label in labels:
        key = str(label)
        if key not in index_by_label:
            raise ParseError(
                "dangling-reference",
                f"agent {agent_id!r} references unknown contract {key!r}",
            )
        out.append(index_by_label[key])
    return out


def _parse_choice(
    agent_id: str, raw: Any, index_by_label: dict[str, int]
) -> ChoiceFunction:
    if not isinstance(raw, dict) or "family" not in raw or "payload" not in raw:
        raise ParseError(
            "malformed",
            f"choice of agent {agent_id!r} must be an object with family and payload",
        )
    family = raw["family"]
    payload = raw["payload"]
    if family not in _KNOWN_FAMILIES:
        raise ParseError(
            "unknown-family",
            f"agent {agent_id!r} uses unknown choice family {family!r}",
        )
    try:
        if family == "linear":
            return LinearOrder(tuple(_resolve_labels(agent_id, payload, index_by_label)))
        if family == "quota":
            if not isinstance(payload, dict) or "q" not in payload or "priority" not in payload:
                raise ParseError(
                    "malformed",
                    f"agent {agent_id!r}: quota payload needs 'q' and 'priority'",
                )
            q = payload["q"]
            if not isinstance(q, int):
                raise ParseError(
                    "malformed", f"agent {agent_id!r}: quota 'q' must be an integer"
                )
            return Quota(q, tuple(_resolve_labels(agent_id, payload["priority"], index_by_label)))
        # table
        if not isinstance(payload, list):
            raise ParseError(
                "malformed", f"agent {agent_id!r}: table payload must be a list"
            )
        entries: dict[Mask, Mask] = {}
        ground = 0
        for entry in payload:
            if not isinstance(entry, dict) or "menu" not in entry or "choice" not in entry:
                raise ParseError(
                    "malformed",
                    f"agent {agent_id!r}: table rows need 'menu' and 'choice'",
                )
            menu = mask_of(_resolve_labels(agent_id, entry["menu"], index_by_label))
            chosen = mask_of(_resolve_labels(agent_id, entry["choice"], index_by_label))
            if menu in entries:
                raise ParseError(
                    "malformed",
                    f"agent {agent_id!r}: duplicate table row for one menu",
                )
            entries[menu] = chosen
            ground |= menu
        return Table(ground, entries)
    except DomainError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError("malformed", f"agent {agent_id!r}: {exc}") from exc


def document_from_instance(inst: Instance) -> dict:
    """Serialize an instance back to its document form (exact round trip)."""
    labels = [c.label for c in inst.contracts]

    def name(ids: list[int]) -> list[str]:
        return [labels[i] for i in ids]

    choices: dict[str, Any] = {}
    for agent in inst.agents:
        cf = inst.choices[agent.id]
        if isinstance(cf, LinearOrder):
            choices[agent.id] = {"family": "linear", "payload": name(list(cf.order))}
        elif isinstance(cf, Quota):
            choices[agent.id] = {
                "family": "quota",
                "payload": {"q": cf.quota, "priority": name(list(cf.priority))},
            }
        elif isinstance(cf, Table):
            rows = []
            for menu in sorted(cf.entries, key=canonical_key):
                rows.append(
                    {"menu": name(ids_of(menu)), "choice": name(ids_of(cf.entries[menu]))}
                )
            choices[agent.id] = {"family": "table", "payload": rows}
        else:
            raise DomainError(
                f"choice family {type(cf).__name__} has no document form"
            )
    return {
        "agents": [{"id": a.id, "side": a.side.value} for a in inst.agents],
        "contracts": [
            {"id": c.label, "firm": c.firm, "worker": c.worker} for c in inst.contracts
        ],
        "choices": choices,
    }


def format_set(inst: Instance, mask: Mask) -> str:
    """Canonical printing: members by dense id, wrapped in braces."""
    return "{" + ", ".join(inst.labels_of(mask)) + "}"


def parse_set(inst: Instance, labels: list[str]) -> Mask:
    """Contract labels to a mask; unknown labels are a domain error."""
    return mask_of(inst.contract_by_label(label).id for label in labels)
