"""The descending route to stable systems via ample sets.

A set B is ample when D_F(W(B)) ⊆ B: everything the firm side wants after
the worker side has chosen from B is already inside B.  The whole ground
set is trivially ample, the descent step B ↦ (B \\ W(B)) ∪ F(W(B)) keeps
ampleness and shrinks B, and at the fixpoint W(B) = F(W(B)) the system
W(B) is stable.  Scanning every ample B whose worker choice is such a
fixpoint recovers every stable system, which is what the power-set
enumerator does.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .choice import dense_table
from .contractsets import Mask, canonical_sorted, ids_of
from .desirability import desirable_set
from .errors import (
    CapExceededError,
    DomainError,
    InternalInconsistencyError,
    PreconditionError,
)
from .instance import TwoAgentProblem
from .stability import is_stable

ENUMERATION_CAP = 20


@dataclass(frozen=True)
class SolveResult:
    """A stable system plus the iterates that led to it.

    ``trace[0]`` is the start set; ``steps`` counts actual transitions.
    """

    system: Mask
    trace: tuple[Mask, ...]

    @property
    def steps(self) -> int:
        return len(self.trace) - 1


def is_ample(problem: TwoAgentProblem, b: Mask) -> bool:
    """D_F(W(B)) ⊆ B."""
    if b & ~problem.ground:
        raise DomainError(
            f"contract set {ids_of(b)} is not a subset of the ground set"
        )
    wb = problem.worker.evaluate(b)
    return desirable_set(problem.firm, wb) & ~b == 0


def ag_step(problem: TwoAgentProblem, b: Mask) -> Mask:
    """One descent step: drop worker-chosen contracts the firm rejects.

    B' = (B \\ W(B)) ∪ F(W(B)).  Always a subset of B; maps ample sets to
    ample sets.
    """
    if b & ~problem.ground:
        raise DomainError(
            f"contract set {ids_of(b)} is not a subset of the ground set"
        )
    wb = problem.worker.evaluate(b)
    return (b & ~wb) | problem.firm.evaluate(wb)


def ag_solve(problem: TwoAgentProblem, start: Mask | None = None) -> SolveResult:
    """Iterate the descent step from an ample start until it stops.

    The default start is the whole ground set, which yields the
    worker-optimal stable system.  Custom ample starts are first-class and
    reach other stable systems; a non-ample start is a precondition error.
    The fixpoint satisfies W(B) = F(W(B)) and the returned system W(B) is
    re-verified for stability, raising InternalInconsistencyError if that
    ever fails (it would mean a bug, not bad input).
    """
    b = problem.ground if start is None else start
    if not is_ample(problem, b):
        raise PreconditionError(
            f"start set {ids_of(b)} is not ample; the descent invariant "
            f"would not hold"
        )
    trace = [b]
    for _ in range(problem.size + 1):
        nxt = ag_step(problem, b)
        if nxt == b:
            break
        b = nxt
        trace.append(b)
    else:
        raise InternalInconsistencyError(
            "descending iteration did not reach a fixpoint within the "
            "ground-set bound"
        )
    system = problem.worker.evaluate(b)
    if not is_stable(problem, system):
        raise InternalInconsistencyError(
            f"descent fixpoint produced an unstable system {ids_of(system)}"
        )
    return SolveResult(system, tuple(trace))


def ample_from_stable(problem: TwoAgentProblem, s: Mask) -> Mask:
    """The ample set D_F(S) behind a stable system S; W of it returns S."""
    if not is_stable(problem, s):
        raise PreconditionError(f"{ids_of(s)} is not a stable system")
    return desirable_set(problem.firm, s)


def enumerate_stable_via_ample(
    problem: TwoAgentProblem, cap: int = ENUMERATION_CAP
) -> list[Mask]:
    """All stable systems, found as worker choices of ample fixpoint sets.

    Scans the full power set: S is collected whenever some B is ample with
    W(B) = F(W(B)) = S.  Matches the brute-force oracle exactly; output is
    canonically sorted (cardinality, then ids).
    """
    n = problem.size
    if n > cap:
        raise CapExceededError(
            f"ground has {n} contracts; power-set enumeration is capped at {cap}"
        )
    tf = np.asarray(dense_table(problem.firm), dtype=np.int64)
    tw = np.asarray(dense_table(problem.worker), dtype=np.int64)
    masks = np.arange(1 << n, dtype=np.int64)
    # desirability table of the firm side: bit x of df[s] says x ∈ F(s ∪ x)
    df = np.zeros_like(masks)
    for x in range(n):
        bx = np.int64(1 << x)
        df |= ((tf[masks | bx] >> x) & 1) << x
    wb = tw[masks]
    ample = (df[wb] & ~masks) == 0
    fixed = wb == tf[wb]
    found = np.unique(wb[ample & fixed])
    return canonical_sorted(int(s) for s in found)
