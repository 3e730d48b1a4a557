"""Choice-function families and exhaustive verification of their axioms.

A choice function C maps every menu A inside its ground set to a sub-menu
C(A) ⊆ A.  All correctness results downstream assume two rationality axioms,
which together are equivalent to path independence:

  consistency         if C(A) ⊆ B ⊆ A then C(B) = C(A)
  substitutability    if A ⊆ B then C(B) ∩ A ⊆ C(A)
  path independence   C(A ∪ B) = C(C(A) ∪ B)

``validate_plott`` checks all three exhaustively over the power set of the
ground (never by sampling) and reports the first failing pair in a fixed
scan order: menus by cardinality, then lexicographically by contract ids.
The equivalence between the axioms doubles as a self-check: a report where
the first two pass and path independence fails raises, because it can only
mean the scanner itself is broken.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .contractsets import Mask, canonical_key, ids_of, mask_of, submasks
from .errors import (
    CapExceededError,
    DomainError,
    InternalInconsistencyError,
)

EXHAUSTIVE_CAP = 12

CONSISTENCY = "consistency"
SUBSTITUTABILITY = "substitutability"
PATH_INDEPENDENCE = "path-independence"


class ChoiceFunction(abc.ABC):
    """Base class for all families.  Subclasses set ``ground`` and choose."""

    ground: Mask

    def evaluate(self, menu: Mask) -> Mask:
        """C(menu).  The menu must lie inside the ground set."""
        if menu & ~self.ground:
            raise DomainError(
                f"menu {ids_of(menu)} is not a subset of the ground set "
                f"{ids_of(self.ground)}"
            )
        return self._choose(menu)

    @abc.abstractmethod
    def _choose(self, menu: Mask) -> Mask:
        raise NotImplementedError


@dataclass(frozen=True)
class LinearOrder(ChoiceFunction):
    """Pick the single best element of the menu under a strict total order.

    ``order`` lists contract ids best-first and must cover the ground set
    exactly.  The empty menu chooses nothing.
    """

    order: tuple[int, ...]
    ground: Mask = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        g = mask_of(self.order)
        if g.bit_count() != len(self.order):
            raise DomainError("linear order repeats a contract id")
        object.__setattr__(self, "ground", g)

    def _choose(self, menu: Mask) -> Mask:
        for e in self.order:
            if menu >> e & 1:
                return 1 << e
        return 0


@dataclass(frozen=True)
class Quota(ChoiceFunction):
    """Keep the top ``quota`` elements of the menu by a strict priority.

    ``priority`` lists contract ids best-first over the whole ground set;
    menus smaller than the quota are kept whole.
    """

    quota: int
    priority: tuple[int, ...]
    ground: Mask = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "priority", tuple(self.priority))
        if self.quota < 1:
            raise DomainError(f"quota must be at least 1, got {self.quota}")
        g = mask_of(self.priority)
        if g.bit_count() != len(self.priority):
            raise DomainError("quota priority repeats a contract id")
        object.__setattr__(self, "ground", g)

    def _choose(self, menu: Mask) -> Mask:
        out = 0
        left = self.quota
        for e in self.priority:
            if left == 0:
                break
            if menu >> e & 1:
                out |= 1 << e
                left -= 1
        return out


@dataclass(frozen=True)
class Table(ChoiceFunction):
    """Explicit choice listed for every subset of the ground set.

    The table must be total over the power set and each entry must satisfy
    C(A) ⊆ A.  Whether it satisfies the rationality axioms is a separate
    question answered by ``validate_plott``; instances reject non-Plott
    tables at load time, but free-standing tables may be built invalid on
    purpose to exercise the validator.
    """

    ground: Mask
    entries: Mapping[Mask, Mask]

    def __post_init__(self):
        k = self.ground.bit_count()
        if k > 20:
            raise DomainError(f"table over {k} contracts is too large")
        entries = dict(self.entries)
        seen = 0
        for menu in submasks(self.ground):
            if menu not in entries:
                raise DomainError(
                    f"table is not total: menu {ids_of(menu)} is missing"
                )
            if entries[menu] & ~menu:
                raise DomainError(
                    f"table entry for menu {ids_of(menu)} chooses outside it"
                )
            seen += 1
        if len(entries) != seen:
            raise DomainError("table lists menus outside the ground set")
        object.__setattr__(self, "entries", entries)

    def _choose(self, menu: Mask) -> Mask:
        return self.entries[menu]


@dataclass(frozen=True)
class Aggregate(ChoiceFunction):
    """Evaluate disjoint part functions on their slice of the menu and join.

    Realizes one market side as a single choice function: parts are the
    per-agent functions, their grounds partition the aggregate ground.
    """

    parts: tuple[ChoiceFunction, ...]
    ground: Mask = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        g = 0
        for part in self.parts:
            if g & part.ground:
                raise DomainError("aggregate parts must have disjoint grounds")
            g |= part.ground
        object.__setattr__(self, "ground", g)

    def _choose(self, menu: Mask) -> Mask:
        out = 0
        for part in self.parts:
            out |= part.evaluate(menu & part.ground)
        return out


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome of one exhaustive axiom scan.

    ``witness`` holds the first offending sets in the canonical scan order
    (a pair of masks for binary axioms, a single mask otherwise), or None
    when the axiom holds.
    """

    axiom: str
    passed: bool
    witness: tuple[Mask, ...] | None = None


@dataclass(frozen=True)
class ValidationReport:
    passed: bool
    checks: tuple[AxiomCheck, ...]

    def check(self, axiom: str) -> AxiomCheck:
        for c in self.checks:
            if c.axiom == axiom:
                return c
        raise KeyError(axiom)

    def first_failure(self) -> AxiomCheck | None:
        for c in self.checks:
            if not c.passed:
                return c
        return None


def dense_table(cf: ChoiceFunction) -> list[Mask]:
    """C(A) for every subset A of a dense ground, indexed by the mask A.

    Used by the power-set oracles to turn repeated evaluation into array
    lookups; requires the ground to be {0, ..., n-1}.
    """
    n = cf.ground.bit_count()
    if cf.ground != (1 << n) - 1:
        raise DomainError("dense_table requires a dense ground set")
    return [cf.evaluate(menu) for menu in range(1 << n)]


def validate_plott(cf: ChoiceFunction, cap: int = EXHAUSTIVE_CAP) -> ValidationReport:
    """Exhaustively check consistency, substitutability and path independence.

    Raises CapExceededError when the ground exceeds ``cap`` contracts
    (default 12); there is deliberately no sampling fallback.
    """
    bits = ids_of(cf.ground)
    k = len(bits)
    if k > cap:
        raise CapExceededError(
            f"ground has {k} contracts; exhaustive axiom check is capped at {cap}"
        )
    tab = _local_table(cf, bits)
    checks = []
    for axiom in (CONSISTENCY, SUBSTITUTABILITY, PATH_INDEPENDENCE):
        passed, witness = _check_axiom(tab, k, axiom)
        if witness is not None:
            witness = tuple(_expand_mask(w, bits) for w in witness)
        checks.append(AxiomCheck(axiom, passed, witness))
    cons, subst, pathind = checks
    if cons.passed and subst.passed and not pathind.passed:
        raise InternalInconsistencyError(
            "consistency and substitutability passed but path independence "
            "failed; the axiom scanner itself is inconsistent"
        )
    return ValidationReport(all(c.passed for c in checks), tuple(checks))


def _local_table(cf: ChoiceFunction, bits: list[int]) -> list[Mask]:
    """Tabulate cf over its ground, re-indexed to dense local bits."""
    k = len(bits)
    single = [1 << b for b in bits]
    tab = []
    for local in range(1 << k):
        menu = 0
        t = local
        while t:
            low = t & -t
            menu |= single[low.bit_length() - 1]
            t ^= low
        chosen = cf.evaluate(menu)
        loc = 0
        for i, b in enumerate(bits):
            if chosen >> b & 1:
                loc |= 1 << i
        tab.append(loc)
    return tab


def _expand_mask(local: Mask, bits: list[int]) -> Mask:
    m = 0
    t = local
    while t:
        low = t & -t
        m |= 1 << bits[low.bit_length() - 1]
        t ^= low
    return m


def _check_axiom(tab: list[Mask], k: int, axiom: str):
    """Vectorized violation detection; on a hit, locate the canonical witness."""
    n = 1 << k
    arr = np.asarray(tab, dtype=np.int64)
    cols = np.arange(n, dtype=np.int64)
    block = max(1, (1 << 22) // n)
    hit = False
    for lo in range(0, n, block):
        rows = cols[lo:lo + block, None]
        crow = arr[lo:lo + block, None]
        if axiom == CONSISTENCY:
            # rows are menus A, cols candidate B with C(A) ⊆ B ⊆ A
            bad = ((crow & ~cols) == 0) & ((cols & ~rows) == 0) & (arr != crow)
        elif axiom == SUBSTITUTABILITY:
            # rows are A, cols supersets B; offending when C(B) ∩ A ⊄ C(A)
            bad = ((rows & ~cols) == 0) & ((arr & rows & ~crow) != 0)
        else:
            bad = arr[rows | cols] != arr[crow | cols]
        if bad.any():
            hit = True
            break
    if not hit:
        return True, None
    return False, _locate_witness(tab, k, axiom)


def _locate_witness(tab: list[Mask], k: int, axiom: str) -> tuple[Mask, Mask]:
    full = (1 << k) - 1
    order = sorted(range(1 << k), key=canonical_key)
    if axiom == CONSISTENCY:
        for a in order:
            ca = tab[a]
            for b in sorted((ca | t for t in submasks(a & ~ca)), key=canonical_key):
                if tab[b] != ca:
                    return a, b
    elif axiom == SUBSTITUTABILITY:
        for a in order:
            ca = tab[a]
            for b in sorted((a | t for t in submasks(full & ~a)), key=canonical_key):
                if tab[b] & a & ~ca:
                    return a, b
    else:
        for a in order:
            ca = tab[a]
            for b in order:
                if tab[a | b] != tab[ca | b]:
                    return a, b
    raise InternalInconsistencyError(
        f"{axiom} violation was detected but the ordered scan found no witness"
    )
