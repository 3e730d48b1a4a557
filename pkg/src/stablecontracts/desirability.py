"""Desirability operators: what an agent would accept on top of a state.

For a choice function C, contract x is desirable in state A when
x ∈ C(A ∪ {x}).  The resulting operator D(A) determines C through
C(A) = A ∩ D(A) and obeys two laws that are checked exhaustively here:

  antimonotonicity    A ⊆ B implies D(B) ⊆ D(A)
  Löb identity        D(A) = D(A ∩ D(A))

Conversely, any total map with these two properties induces a choice
function that passes the rationality axioms; ``choice_from_desirability``
implements that reconstruction.

``desirable_set`` recomputes from the choice function on every call (one
evaluation per ground element).  Callers that iterate over many states are
expected to memoize per run; the fixed-point solvers do exactly that.
"""

from __future__ import annotations

from typing import Callable, Mapping

import numpy as np

from .choice import (
    AxiomCheck,
    ChoiceFunction,
    EXHAUSTIVE_CAP,
    Table,
    ValidationReport,
)
from .contractsets import Mask, canonical_key, ids_of, submasks
from .errors import CapExceededError, DomainError, InternalInconsistencyError

ANTIMONOTONICITY = "antimonotonicity"
LOB_IDENTITY = "lob-identity"


def desirable_set(cf: ChoiceFunction, state: Mask) -> Mask:
    """D(state): every ground contract x with x ∈ C(state ∪ {x}).

    Always a superset of C(state); membership of x in the state itself is
    handled uniformly since state ∪ {x} = state then.
    """
    if state & ~cf.ground:
        raise DomainError(
            f"state {ids_of(state)} is not a subset of the ground set"
        )
    out = 0
    g = cf.ground
    while g:
        low = g & -g
        if cf.evaluate(state | low) & low:
            out |= low
        g ^= low
    return out


class DesirabilityOperator:
    """A total map from subsets of the ground set to subsets of it.

    Arbitrary maps are accepted so the validator can be exercised on
    negative cases; only validated operators may be turned back into
    choice functions.
    """

    def __init__(self, ground: Mask, table: Mapping[Mask, Mask]):
        table = dict(table)
        count = 0
        for state in submasks(ground):
            if state not in table:
                raise DomainError(
                    f"operator is not total: state {ids_of(state)} is missing"
                )
            if table[state] & ~ground:
                raise DomainError(
                    f"operator maps state {ids_of(state)} outside the ground set"
                )
            count += 1
        if len(table) != count:
            raise DomainError("operator lists states outside the ground set")
        self.ground = ground
        self._table = table
        self._report: ValidationReport | None = None

    @classmethod
    def from_choice(cls, cf: ChoiceFunction) -> "DesirabilityOperator":
        """Materialize the desirability operator of a choice function."""
        return cls(
            cf.ground,
            {state: desirable_set(cf, state) for state in submasks(cf.ground)},
        )

    @classmethod
    def from_callable(
        cls, ground: Mask, fn: Callable[[Mask], Mask]
    ) -> "DesirabilityOperator":
        return cls(ground, {state: fn(state) for state in submasks(ground)})

    def map(self, state: Mask) -> Mask:
        if state & ~self.ground:
            raise DomainError(
                f"state {ids_of(state)} is not a subset of the ground set"
            )
        return self._table[state]

    def __eq__(self, other):
        if not isinstance(other, DesirabilityOperator):
            return NotImplemented
        return self.ground == other.ground and self._table == other._table


def validate_desirability_operator(
    op: DesirabilityOperator, cap: int = EXHAUSTIVE_CAP
) -> ValidationReport:
    """Exhaustively check antimonotonicity and the Löb identity.

    Witnesses follow the same canonical scan order as the choice-function
    validator.  The report is cached on the operator.
    """
    bits = ids_of(op.ground)
    k = len(bits)
    if k > cap:
        raise CapExceededError(
            f"ground has {k} contracts; exhaustive operator check is capped at {cap}"
        )
    if op._report is not None:
        return op._report

    tab = _local_operator_table(op, bits)
    n = 1 << k
    arr = np.asarray(tab, dtype=np.int64)
    cols = np.arange(n, dtype=np.int64)

    checks = []

    anti_hit = False
    block = max(1, (1 << 22) // n)
    for lo in range(0, n, block):
        rows = cols[lo:lo + block, None]
        drow = arr[lo:lo + block, None]
        # rows are A, cols supersets B; offending when D(B) ⊄ D(A)
        bad = ((rows & ~cols) == 0) & ((arr & ~drow) != 0)
        if bad.any():
            anti_hit = True
            break
    witness = None
    if anti_hit:
        witness = _locate_antimonotonicity_witness(tab, k)
        witness = tuple(_expand(w, bits) for w in witness)
    checks.append(AxiomCheck(ANTIMONOTONICITY, not anti_hit, witness))

    lob_bad = arr != arr[cols & arr]
    witness = None
    if lob_bad.any():
        state = min(np.nonzero(lob_bad)[0].tolist(), key=canonical_key)
        witness = (_expand(int(state), bits),)
    checks.append(AxiomCheck(LOB_IDENTITY, not lob_bad.any(), witness))

    report = ValidationReport(all(c.passed for c in checks), tuple(checks))
    op._report = report
    return report


def choice_from_desirability(op: DesirabilityOperator, menu: Mask) -> Mask:
    """C(menu) = menu ∩ D(menu) for a validated operator."""
    _require_valid(op)
    return menu & op.map(menu)


def induced_choice(op: DesirabilityOperator) -> Table:
    """Materialize the choice function induced by a validated operator."""
    _require_valid(op)
    return Table(
        op.ground,
        {menu: menu & op.map(menu) for menu in submasks(op.ground)},
    )


def _require_valid(op: DesirabilityOperator) -> None:
    report = validate_desirability_operator(op)
    if not report.passed:
        failing = report.first_failure()
        raise DomainError(
            f"desirability operator violates {failing.axiom}; no choice "
            f"function can induce it"
        )


def _local_operator_table(op: DesirabilityOperator, bits: list[int]) -> list[Mask]:
    k = len(bits)
    single = [1 << b for b in bits]
    tab = []
    for local in range(1 << k):
        state = 0
        t = local
        while t:
            low = t & -t
            state |= single[low.bit_length() - 1]
            t ^= low
        mapped = op.map(state)
        loc = 0
        for i, b in enumerate(bits):
            if mapped >> b & 1:
                loc |= 1 << i
        tab.append(loc)
    return tab


def _locate_antimonotonicity_witness(tab: list[Mask], k: int) -> tuple[Mask, Mask]:
    full = (1 << k) - 1
    order = sorted(range(1 << k), key=canonical_key)
    for a in order:
        da = tab[a]
        for b in sorted((a | t for t in submasks(full & ~a)), key=canonical_key):
            if tab[b] & ~da:
                return a, b
    raise InternalInconsistencyError(
        "antimonotonicity violation was detected but no witness found"
    )


def _expand(local: Mask, bits: list[int]) -> Mask:
    m = 0
    t = local
    while t:
        low = t & -t
        m |= 1 << bits[low.bit_length() - 1]
        t ^= low
    return m
