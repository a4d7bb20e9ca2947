import pytest

from hypercist import (
    CistFamily,
    CostGuardError,
    DomainError,
    Status,
    ViolationKind,
    checked,
    family_stats,
    from_edges,
    lift_once,
    lift_to,
    recheck,
    verify_criterion,
    verify_definition,
)
from oracles import mutated_families


def test_q7_family_accepted_by_both(q7):
    assert verify_criterion(q7) is None
    assert verify_definition(q7) is None
    assert q7.status is Status.ACCEPTED


def test_edge_replaced_by_edge_of_t1(q7):
    t1, t2, t3 = q7.trees
    # drop T2's edge <0,4>; vertex 0 then reconnects through <0,2>, which is in T1
    edges = [e for e in t2.edges if e != (0, 4)] + [(0, 2)]
    family = CistFamily(7, (t1, from_edges(7, edges), t3))
    v = verify_criterion(family)
    assert v.kind is ViolationKind.SHARED_EDGE
    assert v.trees == (0, 1) and v.witness == (0, 2)
    assert recheck(family, v)


def test_two_copies_of_one_tree(q7):
    family = CistFamily(7, (q7.trees[0], q7.trees[0]))
    v = verify_criterion(family)
    assert v.kind is ViolationKind.SHARED_EDGE
    assert v.witness == q7.trees[0].edges[0]
    assert verify_definition(family) is not None


def test_q2_cannot_hold_two_trees():
    a = from_edges(2, [(0, 1), (1, 3), (3, 2)])
    b = from_edges(2, [(0, 2), (2, 3), (3, 1)])
    family = CistFamily(2, (a, b))
    crit = verify_criterion(family)
    defn = verify_definition(family)
    assert crit.kind is ViolationKind.SHARED_EDGE
    assert defn.kind is ViolationKind.SHARED_PATH_VERTEX
    assert recheck(family, crit) and recheck(family, defn)


def test_mixed_dimensions_not_spanning(q7):
    small = from_edges(1, [(0, 1)])
    family = CistFamily(7, (q7.trees[0], small))
    for verify in (verify_criterion, verify_definition):
        assert verify(family).kind is ViolationKind.NOT_SPANNING


def test_family_needs_two_trees(q7):
    with pytest.raises(DomainError):
        CistFamily(7, (q7.trees[0],))


def test_cost_guard(q7):
    q11 = lift_to(q7, 11)
    with pytest.raises(CostGuardError):
        verify_definition(q11)


def test_reordering_does_not_change_verdict(q7):
    t1, t2, t3 = q7.trees
    for order in [(t3, t1, t2), (t2, t3, t1), (t1, t3)]:
        assert verify_criterion(CistFamily(7, order)) is None
    bad = CistFamily(7, (t2, t1, t1))
    assert verify_criterion(bad) is not None


def test_verifiers_agree_on_mutations(q7):
    rejected = 0
    for family in mutated_families(q7, 80, seed=1):
        crit = verify_criterion(family)
        defn = verify_definition(family)
        assert (crit is None) == (defn is None)
        if crit is not None:
            rejected += 1
            assert recheck(family, crit)
            assert recheck(family, defn)
    assert rejected >= 50


def test_verifiers_agree_on_lifted_q8(q7):
    q8 = lift_once(q7)
    assert verify_criterion(q8) is None
    assert verify_definition(q8) is None


def test_family_stats(q7):
    stats = family_stats(q7)
    assert [s.diameter for s in stats] == [15, 18, 17]
    assert [s.internal_count for s in stats] == [44, 41, 42]
    assert 21 in stats[0].center


def test_checked_records_witness(q7):
    family = checked(CistFamily(7, (q7.trees[1], q7.trees[1])))
    assert family.status is Status.REJECTED
    assert family.witness.kind is ViolationKind.SHARED_EDGE
