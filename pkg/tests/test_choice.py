import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import m, naive_axiom_verdicts
from stablecontracts.choice import (
    Aggregate,
    LinearOrder,
    Quota,
    Table,
    validate_plott,
)
from stablecontracts.contractsets import submasks
from stablecontracts.errors import CapExceededError, DomainError


class TestLinearOrder:
    def test_chooses_max_of_menu(self):
        cf = LinearOrder((1, 0))  # e2 > e1
        assert cf.evaluate(m(0, 1)) == m(1)
        assert cf.evaluate(m(0)) == m(0)
        assert cf.evaluate(0) == 0

    def test_duplicate_ids_rejected(self):
        with pytest.raises(DomainError):
            LinearOrder((0, 0))

    def test_menu_outside_ground_rejected(self):
        with pytest.raises(DomainError):
            LinearOrder((0, 1)).evaluate(m(2))


class TestQuota:
    def test_small_menu_kept_whole(self):
        cf = Quota(2, (0, 1, 2))  # priority e1 > e2 > e3
        assert cf.evaluate(m(1, 2)) == m(1, 2)

    def test_large_menu_truncated_by_priority(self):
        cf = Quota(2, (0, 1, 2))
        assert cf.evaluate(m(0, 1, 2)) == m(0, 1)

    def test_quota_must_be_positive(self):
        with pytest.raises(DomainError):
            Quota(0, (0,))


class TestTable:
    def test_partial_table_rejected(self):
        with pytest.raises(DomainError, match="not total"):
            Table(m(0, 1), {0: 0, m(0): m(0)})

    def test_choice_outside_menu_rejected(self):
        with pytest.raises(DomainError, match="outside"):
            Table(m(0), {0: 0, m(0): m(1)})

    def test_extra_menus_rejected(self):
        with pytest.raises(DomainError):
            Table(m(0), {0: 0, m(0): m(0), m(1): 0})


class TestAggregate:
    def test_overlapping_parts_rejected(self):
        with pytest.raises(DomainError, match="disjoint"):
            Aggregate((LinearOrder((0, 1)), LinearOrder((1, 2))))

    def test_joins_part_choices(self):
        agg = Aggregate((LinearOrder((0, 1)), Quota(1, (3, 2))))
        assert agg.ground == m(0, 1, 2, 3)
        assert agg.evaluate(m(0, 1, 2, 3)) == m(0, 3)
        assert agg.evaluate(m(1, 2)) == m(1, 2)

    def test_empty_aggregate(self):
        agg = Aggregate(())
        assert agg.ground == 0
        assert agg.evaluate(0) == 0


class TestValidatePlott:
    def test_linear_order_three_contracts_passes_all_axioms(self):
        report = validate_plott(LinearOrder((2, 0, 1)))
        assert report.passed
        assert [c.passed for c in report.checks] == [True, True, True]

    def test_identity_table_passes(self):
        cf = Table(m(0, 1), {menu: menu for menu in submasks(m(0, 1))})
        assert validate_plott(cf).passed

    def test_best_acceptable_table_is_plott(self):
        # max by e1 > e2 where e2 alone is unacceptable: C({e1,e2})={e1},
        # C({e1})={e1}, C({e2})=∅.  Passes all three axioms.
        cf = Table(m(0, 1), {0: 0, m(0): m(0), m(1): 0, m(0, 1): m(0)})
        report = validate_plott(cf)
        assert report.passed
        assert naive_axiom_verdicts(cf) == {
            "consistency": True,
            "substitutability": True,
            "path-independence": True,
        }

    def test_consistency_only_failure_with_minimal_witness(self):
        cf = Table(
            m(0, 1, 2),
            {
                0: 0,
                m(0): m(0),
                m(1): m(1),
                m(2): m(2),
                m(0, 1): m(0, 1),
                m(0, 2): m(0),
                m(1, 2): m(1),
                m(0, 1, 2): m(0),
            },
        )
        report = validate_plott(cf)
        assert not report.passed
        assert not report.check("consistency").passed
        assert report.check("consistency").witness == (m(0, 1, 2), m(0, 1))
        assert report.check("substitutability").passed
        assert not report.check("path-independence").passed
        assert report.check("path-independence").witness == (m(0, 2), m(1))
        assert naive_axiom_verdicts(cf) == {
            "consistency": False,
            "substitutability": True,
            "path-independence": False,
        }

    def test_substitutability_only_failure_with_minimal_witness(self):
        # complements: nothing alone, everything together
        cf = Table(m(0, 1), {0: 0, m(0): 0, m(1): 0, m(0, 1): m(0, 1)})
        report = validate_plott(cf)
        assert not report.passed
        assert report.check("consistency").passed
        assert not report.check("substitutability").passed
        assert report.check("substitutability").witness == (m(0), m(0, 1))
        assert report.check("path-independence").witness == (m(0), m(1))
        assert naive_axiom_verdicts(cf) == {
            "consistency": True,
            "substitutability": False,
            "path-independence": False,
        }

    def test_double_failure_with_minimal_witnesses(self):
        cf = Table(m(0, 1), {0: 0, m(0): 0, m(1): m(1), m(0, 1): m(0)})
        report = validate_plott(cf)
        assert report.check("consistency").witness == (m(0, 1), m(0))
        assert report.check("substitutability").witness == (m(0), m(0, 1))

    def test_cap_exceeded_is_explicit(self):
        with pytest.raises(CapExceededError):
            validate_plott(LinearOrder(tuple(range(13))))

    def test_exhaustive_at_ten_contracts(self):
        # the largest ground the invariants pin for routine exhaustive runs
        assert validate_plott(LinearOrder(tuple(range(10)))).passed
        assert validate_plott(Quota(4, tuple(reversed(range(10))))).passed

    def test_non_dense_ground_is_supported(self):
        report = validate_plott(LinearOrder((5, 2)))
        assert report.passed


@st.composite
def ordered_family(draw):
    size = draw(st.integers(min_value=0, max_value=8))
    order = draw(st.permutations(range(size)))
    kind = draw(st.sampled_from(["linear", "quota", "aggregate"]))
    if kind == "linear" or size == 0:
        return LinearOrder(tuple(order))
    if kind == "quota":
        quota = draw(st.integers(min_value=1, max_value=size))
        return Quota(quota, tuple(order))
    cut = draw(st.integers(min_value=0, max_value=size))
    left, right = tuple(order[:cut]), tuple(order[cut:])
    parts = []
    if left:
        parts.append(LinearOrder(left))
    if right:
        parts.append(Quota(draw(st.integers(min_value=1, max_value=len(right))), right))
    return Aggregate(tuple(parts))


@settings(max_examples=500, deadline=None)
@given(ordered_family())
def test_ordered_families_always_pass(cf):
    assert validate_plott(cf).passed


@settings(max_examples=100, deadline=None)
@given(ordered_family())
def test_empty_menu_chooses_nothing(cf):
    assert cf.evaluate(0) == 0


@st.composite
def random_table(draw):
    size = draw(st.integers(min_value=1, max_value=4))
    ground = (1 << size) - 1
    entries = {}
    for menu in range(1 << size):
        # pick an arbitrary subset of the menu
        entries[menu] = menu & draw(st.integers(min_value=0, max_value=ground))
    return Table(ground, entries)


@settings(max_examples=200, deadline=None)
@given(random_table())
def test_validator_agrees_with_naive_oracle(cf):
    report = validate_plott(cf)
    verdicts = naive_axiom_verdicts(cf)
    assert {c.axiom: c.passed for c in report.checks} == verdicts
    # the equivalence both ways: PI holds exactly when the two axioms do
    assert verdicts["path-independence"] == (
        verdicts["consistency"] and verdicts["substitutability"]
    )
