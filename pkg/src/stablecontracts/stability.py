"""Stability of contract systems: three equivalent two-agent forms plus the
multi-agent definition.

For a two-agent problem with firm choice F and worker choice W, a system S
is stable when both sides keep it as-is and no outside contract is wanted by
both.  Equivalently S = D_F(S) ∩ D_W(S), and equivalently S = W(D_F(S)).
All three are implemented independently so they can be cross-checked.
"""

from __future__ import annotations

from .contractsets import Mask, ids_of
from .desirability import desirable_set
from .errors import DomainError
from .instance import Instance, TwoAgentProblem, contracts_of, restrict


def _check_subset(s: Mask, ground: Mask) -> None:
    if s & ~ground:
        raise DomainError(
            f"contract set {ids_of(s)} is not a subset of the ground set"
        )


def is_acceptable(problem: TwoAgentProblem, s: Mask) -> bool:
    """Both sides keep S whole: F(S) = S and W(S) = S."""
    _check_subset(s, problem.ground)
    return problem.firm.evaluate(s) == s and problem.worker.evaluate(s) == s


def blocking_contracts(problem: TwoAgentProblem, s: Mask) -> Mask:
    """Outside contracts both sides would accept on top of S.

    Returns the full blocking set (D_F(S) ∩ D_W(S)) \\ S rather than a bare
    flag, so callers can report which contracts break a candidate system.
    """
    _check_subset(s, problem.ground)
    out = 0
    rest = problem.ground & ~s
    while rest:
        low = rest & -rest
        if (
            problem.firm.evaluate(s | low) & low
            and problem.worker.evaluate(s | low) & low
        ):
            out |= low
        rest ^= low
    return out


def is_stable(problem: TwoAgentProblem, s: Mask) -> bool:
    """Fixed-point form: S = D_F(S) ∩ D_W(S)."""
    _check_subset(s, problem.ground)
    return s == desirable_set(problem.firm, s) & desirable_set(problem.worker, s)


def is_stable_prop1(problem: TwoAgentProblem, s: Mask) -> bool:
    """Asymmetric form: S = W(D_F(S))."""
    _check_subset(s, problem.ground)
    return s == problem.worker.evaluate(desirable_set(problem.firm, s))


def is_stable_multi(inst: Instance, s: Mask) -> bool:
    """Multi-agent definition: per-agent acceptability plus no blocking
    contract accepted by both of its endpoints."""
    _check_subset(s, inst.ground)
    for agent in inst.agents:
        slice_ = restrict(s, agent.id, inst)
        if inst.choices[agent.id].evaluate(slice_) != slice_:
            return False
    rest = inst.ground & ~s
    while rest:
        low = rest & -rest
        contract = inst.contracts[low.bit_length() - 1]
        firm_cf = inst.choices[contract.firm]
        worker_cf = inst.choices[contract.worker]
        firm_slice = s & contracts_of(inst, contract.firm)
        worker_slice = s & contracts_of(inst, contract.worker)
        if (
            firm_cf.evaluate(firm_slice | low) & low
            and worker_cf.evaluate(worker_slice | low) & low
        ):
            return False
        rest ^= low
    return True
