"""Core/quotient decomposition and its inverse."""

import pytest
from hypothesis import given, settings, strategies as st

from maclab import EMPTY, LittlewoodData, Partition, compose, decompose
from maclab.littlewood import NotACore, family_structure
from maclab.partitions import NotInFamily

partition_lists = st.lists(st.integers(1, 9), max_size=7).map(
    lambda xs: sorted(xs, reverse=True)
)


def test_worked_example():
    data = decompose(Partition([4, 4, 3, 2]), 3)
    assert data.core == Partition([1])
    assert data.quotient == (Partition([1, 1]), EMPTY, Partition([2]))
    assert compose(data) == Partition([4, 4, 3, 2])


def test_empty_partition():
    data = decompose(EMPTY, 4)
    assert data.core == EMPTY
    assert data.quotient == (EMPTY,) * 4
    assert compose(data) == EMPTY


def test_rejects_small_modulus():
    with pytest.raises(ValueError):
        decompose(Partition([2, 1]), 1)


@settings(max_examples=80, deadline=None)
@given(partition_lists, st.integers(2, 5))
def test_decompose_invariants(parts, t):
    lam = Partition(parts)
    data = decompose(lam, t)
    assert data.core.is_core(t)
    assert len(data.quotient) == t
    assert lam.weight == data.core.weight + t * sum(
        q.weight for q in data.quotient
    )
    # hooks divisible by t, divided by t, are exactly the quotient hooks
    assert sorted(h // t for h in lam.hooks_mod(t)) == sorted(
        h for q in data.quotient for h in q.hooks()
    )
    assert compose(data) == lam


def test_compose_from_arbitrary_data():
    core = Partition([3, 1])  # a 3-core
    quotient = (Partition([2]), Partition([1, 1]), EMPTY)
    data = LittlewoodData(3, core, quotient)
    lam = compose(data)
    assert decompose(lam, 3) == data
    assert lam.weight == core.weight + 3 * 4


def test_compose_validates():
    with pytest.raises(NotACore):
        compose(LittlewoodData(2, Partition([2]), (EMPTY, EMPTY)))
    with pytest.raises(ValueError):
        compose(LittlewoodData(3, Partition([1]), (EMPTY, EMPTY)))


def test_family_structure_report():
    rep = family_structure(Partition([3, 1, 1]), 2)
    assert rep["families"] == ["SC"]
    assert rep["ok"]
    rep = family_structure(Partition([4, 3, 1]), 3)
    assert "DD" in rep["families"]
    assert rep["ok"]
    with pytest.raises(NotInFamily):
        family_structure(Partition([3]), 2)


@settings(max_examples=60, deadline=None)
@given(partition_lists, st.integers(2, 4))
def test_family_structure_on_conjugate_closures(parts, t):
    lam = Partition(parts)
    for mem in (lam, lam.conjugate()):
        sym = mem if mem.is_self_conjugate() else None
        if sym is None and not (
            mem.is_doubled_distinct() or mem.is_conj_doubled_distinct()
        ):
            continue
        assert family_structure(mem, t)["ok"]
