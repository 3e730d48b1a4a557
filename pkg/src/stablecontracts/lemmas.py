"""The lemma suite: every structural law the solvers rely on, checked
exhaustively over the power set of each supplied problem.

Each law has a short key (L1, L2A, ..., DMA) used by the CLI table and the
acceptance tests.  A law fails only with a concrete witness, which is
reported; on valid input every law is a theorem, so failures indicate a
bug in the library (or a deliberately invalid problem fed to the suite).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .ample import ag_step, is_ample
from .contractsets import Mask, ids_of, submasks
from .desirability import desirable_set
from .errors import CapExceededError
from .instance import TwoAgentProblem
from .modest import ample_to_modest, is_modest, modest_to_ample, yang_step
from .stability import is_stable

LEMMA_SUITE_CAP = 12


@dataclass(frozen=True)
class LawResult:
    key: str
    description: str
    passed: bool
    detail: str = ""


def _fmt(mask: Mask) -> str:
    return "{" + ", ".join(str(i) for i in ids_of(mask)) + "}"


def _for_both_sides(check) -> Callable[[TwoAgentProblem], str | None]:
    def run(problem: TwoAgentProblem) -> str | None:
        for name, cf in (("firm", problem.firm), ("worker", problem.worker)):
            result = check(cf, problem)
            if result is not None:
                return f"{name} side: {result}"
        return None

    return run


def _law_choice_vs_desirability(cf, problem) -> str | None:
    # D(A) ∩ A = C(A) for every menu A
    for a in submasks(cf.ground):
        if desirable_set(cf, a) & a != cf.evaluate(a):
            return f"A={_fmt(a)}"
    return None


def _law_self_chosen_iff_desired(cf, problem) -> str | None:
    # A = C(A)  ⟺  A ⊆ D(A)
    for a in submasks(cf.ground):
        left = cf.evaluate(a) == a
        right = a & ~desirable_set(cf, a) == 0
        if left != right:
            return f"A={_fmt(a)}"
    return None


def _law_antimonotone(cf, problem) -> str | None:
    # A ⊆ B implies D(B) ⊆ D(A)
    d = {a: desirable_set(cf, a) for a in submasks(cf.ground)}
    for b in submasks(cf.ground):
        for a in submasks(b):
            if d[b] & ~d[a]:
                return f"A={_fmt(a)}, B={_fmt(b)}"
    return None


def _law_desirability_of_choice(cf, problem) -> str | None:
    # D(A) = D(C(A))
    for a in submasks(cf.ground):
        if desirable_set(cf, a) != desirable_set(cf, cf.evaluate(a)):
            return f"A={_fmt(a)}"
    return None


def _law_lob(cf, problem) -> str | None:
    # D(A) = D(A ∩ D(A))
    for a in submasks(cf.ground):
        d = desirable_set(cf, a)
        if d != desirable_set(cf, a & d):
            return f"A={_fmt(a)}"
    return None


def _law_ample_fixpoint_stable(problem: TwoAgentProblem) -> str | None:
    for b in submasks(problem.ground):
        if not is_ample(problem, b):
            continue
        wb = problem.worker.evaluate(b)
        if problem.firm.evaluate(wb) == wb and not is_stable(problem, wb):
            return f"B={_fmt(b)}"
    return None


def _law_descent_preserves_ample(problem: TwoAgentProblem) -> str | None:
    for b in submasks(problem.ground):
        if not is_ample(problem, b):
            continue
        nxt = ag_step(problem, b)
        if nxt & ~b:
            return f"B={_fmt(b)} grew to {_fmt(nxt)}"
        if not is_ample(problem, nxt):
            return f"B={_fmt(b)}"
    return None


def _law_modest_acceptable(problem: TwoAgentProblem) -> str | None:
    for q in submasks(problem.ground):
        if not is_modest(problem, q):
            continue
        if problem.firm.evaluate(q) != q or problem.worker.evaluate(q) != q:
            return f"Q={_fmt(q)}"
    return None


def _law_ascent_preserves_modest(problem: TwoAgentProblem) -> str | None:
    for q in submasks(problem.ground):
        if not is_modest(problem, q):
            continue
        if not is_modest(problem, yang_step(problem, q)):
            return f"Q={_fmt(q)}"
    return None


def _law_ascent_shrinks_desirability(problem: TwoAgentProblem) -> str | None:
    for q in submasks(problem.ground):
        if not is_modest(problem, q):
            continue
        nxt = yang_step(problem, q)
        if desirable_set(problem.firm, nxt) & ~desirable_set(problem.firm, q):
            return f"Q={_fmt(q)}"
    return None


def _law_ample_to_modest(problem: TwoAgentProblem) -> str | None:
    for b in submasks(problem.ground):
        if not is_ample(problem, b):
            continue
        if not is_modest(problem, ample_to_modest(problem, b)):
            return f"B={_fmt(b)}"
    return None


def _law_modest_to_ample(problem: TwoAgentProblem) -> str | None:
    for q in submasks(problem.ground):
        if not is_modest(problem, q):
            continue
        if not is_ample(problem, modest_to_ample(problem, q)):
            return f"Q={_fmt(q)}"
    return None


LAWS: tuple[tuple[str, str, Callable[[TwoAgentProblem], str | None]], ...] = (
    ("L1", "choice equals desirables within the menu", _for_both_sides(_law_choice_vs_desirability)),
    ("L1C", "menu self-chosen iff menu within desirables", _for_both_sides(_law_self_chosen_iff_desired)),
    ("L2A", "desirability antimonotone in the menu", _for_both_sides(_law_antimonotone)),
    ("L2B", "desirability unchanged after choosing", _for_both_sides(_law_desirability_of_choice)),
    ("LOB", "desirability fixed on its desirable core", _for_both_sides(_law_lob)),
    ("L3", "ample fixpoints yield stable systems", _law_ample_fixpoint_stable),
    ("L4", "descent step preserves ampleness", _law_descent_preserves_ample),
    ("L5", "modest systems are self-chosen on both sides", _law_modest_acceptable),
    ("L6", "ascent step preserves modesty", _law_ascent_preserves_modest),
    ("L6D", "ascent step never widens firm desirability", _law_ascent_shrinks_desirability),
    ("DAM", "ample systems map to modest systems", _law_ample_to_modest),
    ("DMA", "modest systems map to ample systems", _law_modest_to_ample),
)


def run_lemma_suite(
    problems: Sequence[tuple[str, TwoAgentProblem]],
    cap: int = LEMMA_SUITE_CAP,
) -> list[LawResult]:
    """Check every law on every problem; first witness wins per law."""
    for label, problem in problems:
        if problem.size > cap:
            raise CapExceededError(
                f"problem {label!r} has {problem.size} contracts; the lemma "
                f"suite is capped at {cap}"
            )
    results = []
    for key, description, law in LAWS:
        passed = True
        detail = ""
        for label, problem in problems:
            witness = law(problem)
            if witness is not None:
                passed = False
                detail = f"{label}: {witness}"
                break
        results.append(LawResult(key, description, passed, detail))
    return results
