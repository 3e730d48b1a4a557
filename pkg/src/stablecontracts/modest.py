"""The ascending route to stable systems via modest sets, plus the duality
with the ample route.

A set Q is modest when Q ⊆ W(D_F(Q)); replacing ⊆ by equality is exactly
stability, so modesty weakens it.  The empty set is always modest.  The
ascent step Q ↦ F(W(D_F(Q))) keeps modesty and never widens D_F, so the
firm-desirability sets descend until they stabilize; at that point the
iterate is a stable system.

The two routes convert into each other: F(W(B)) of an ample B is modest,
and D_F(Q) of a modest Q is ample.
"""

from __future__ import annotations

from .ample import SolveResult, is_ample
from .contractsets import Mask, ids_of
from .desirability import desirable_set
from .errors import DomainError, InternalInconsistencyError, PreconditionError
from .instance import TwoAgentProblem
from .stability import is_stable


def is_modest(problem: TwoAgentProblem, q: Mask) -> bool:
    """Q ⊆ W(D_F(Q))."""
    if q & ~problem.ground:
        raise DomainError(
            f"contract set {ids_of(q)} is not a subset of the ground set"
        )
    return q & ~problem.worker.evaluate(desirable_set(problem.firm, q)) == 0


def yang_step(problem: TwoAgentProblem, q: Mask) -> Mask:
    """One ascent step on a modest set: Q' = F(W(D_F(Q)))."""
    if not is_modest(problem, q):
        raise PreconditionError(f"{ids_of(q)} is not modest")
    return problem.firm.evaluate(
        problem.worker.evaluate(desirable_set(problem.firm, q))
    )


def yang_solve(problem: TwoAgentProblem, start: Mask = 0) -> SolveResult:
    """Iterate the ascent step until the firm-desirability set stabilizes.

    The default start is the empty set, which is always modest.  Each step
    shrinks (weakly) D_F of the iterate; once D_F(Q') = D_F(Q) the next
    iterate would repeat, and that iterate is a stable system.  Stability
    of the output is re-verified defensively.
    """
    q = start
    if not is_modest(problem, q):
        raise PreconditionError(f"start set {ids_of(q)} is not modest")
    d = desirable_set(problem.firm, q)
    trace = [q]
    for _ in range(problem.size + 2):
        nxt = problem.firm.evaluate(problem.worker.evaluate(d))
        nxt_d = desirable_set(problem.firm, nxt)
        if nxt_d == d:
            if nxt != q:
                trace.append(nxt)
            system = nxt
            break
        trace.append(nxt)
        q, d = nxt, nxt_d
    else:
        raise InternalInconsistencyError(
            "ascending iteration did not stabilize within the ground-set bound"
        )
    if not is_stable(problem, system):
        raise InternalInconsistencyError(
            f"ascent fixpoint produced an unstable system {ids_of(system)}"
        )
    return SolveResult(system, tuple(trace))


def modest_from_stable(problem: TwoAgentProblem, s: Mask) -> Mask:
    """A stable system is itself modest (with equality in the definition)."""
    if not is_stable(problem, s):
        raise PreconditionError(f"{ids_of(s)} is not a stable system")
    if not is_modest(problem, s):
        raise InternalInconsistencyError(
            f"stable system {ids_of(s)} failed the modesty check"
        )
    return s


def ample_to_modest(problem: TwoAgentProblem, b: Mask) -> Mask:
    """F(W(B)) of an ample B is modest."""
    if not is_ample(problem, b):
        raise PreconditionError(f"{ids_of(b)} is not ample")
    return problem.firm.evaluate(problem.worker.evaluate(b))


def modest_to_ample(problem: TwoAgentProblem, q: Mask) -> Mask:
    """D_F(Q) of a modest Q is ample."""
    if not is_modest(problem, q):
        raise PreconditionError(f"{ids_of(q)} is not modest")
    return desirable_set(problem.firm, q)
