"""Partitions, Ferrers statistics and the boundary-word bijection."""

import pytest
from hypothesis import given, settings, strategies as st

from maclab import (
    EMPTY,
    BoundaryWord,
    BoxOutOfShape,
    InvalidParts,
    Partition,
    UnbalancedWord,
    decode_word,
    encode_word,
    family_membership,
    partitions_upto,
)
from maclab.partitions import (
    NotAHookPair,
    box_indices,
    index_box,
    partitions_of,
)

partition_lists = st.lists(st.integers(1, 9), max_size=7).map(
    lambda xs: sorted(xs, reverse=True)
)


# ---------------------------------------------------------------------------
# construction and basic statistics
# ---------------------------------------------------------------------------

def test_rejects_bad_parts():
    for bad in ([2, 3], [0], [-1], [1, 0], ["x"]):
        with pytest.raises(InvalidParts):
            Partition(bad)


def test_basic_statistics():
    lam = Partition([4, 3, 3, 2])
    assert lam.weight == 12
    assert lam.length == 4
    assert lam.part(1) == 4
    assert lam.part(3) == 3
    assert lam.part(5) == 0
    assert lam.durfee == 3
    assert lam.conjugate() == Partition([4, 4, 3, 1])
    assert lam.conjugate().conjugate() == lam
    assert lam.diagonal_boxes() == [(1, 1), (2, 2), (3, 3)]
    assert EMPTY.weight == 0 and EMPTY.durfee == 0
    assert EMPTY.conjugate() == EMPTY


def test_hooks_oracle():
    # hand-computed from the Ferrers diagram of (4,3,3,2)
    lam = Partition([4, 3, 3, 2])
    assert sorted(lam.hooks()) == [1, 1, 1, 2, 2, 3, 4, 4, 4, 5, 6, 7]
    assert sorted(lam.hooks_mod(3)) == [3, 6]
    assert lam.hook(1, 1) == 7
    assert lam.hook(4, 2) == 1
    assert lam.arm_leg(2, 1) == (2, 2)
    assert lam.epsilon(1, 3) == 1
    assert lam.epsilon(2, 2) == 1
    assert lam.epsilon(3, 1) == -1
    with pytest.raises(BoxOutOfShape):
        lam.hook(5, 1)
    with pytest.raises(BoxOutOfShape):
        lam.epsilon(1, 5)


@settings(max_examples=60, deadline=None)
@given(partition_lists)
def test_hook_is_arm_plus_leg(parts):
    lam = Partition(parts)
    hooks = []
    for r, c in lam.boxes():
        a, l = lam.arm_leg(r, c)
        assert lam.hook(r, c) == a + l + 1
        hooks.append(a + l + 1)
    assert sorted(hooks) == sorted(lam.hooks())
    assert len(hooks) == lam.weight
    # conjugation preserves the hook multiset
    assert sorted(lam.conjugate().hooks()) == sorted(hooks)


@settings(max_examples=60, deadline=None)
@given(partition_lists, st.integers(2, 5))
def test_core_iff_no_divisible_hooks(parts, t):
    lam = Partition(parts)
    assert lam.is_core(t) == (lam.hooks_mod(t) == [])


def test_core_examples():
    assert Partition([3, 2, 1]).is_core(2)  # staircase
    assert not Partition([2]).is_core(2)
    assert Partition([3, 1]).is_core(3)
    assert EMPTY.is_core(2) and EMPTY.is_core(7)


# ---------------------------------------------------------------------------
# family predicates
# ---------------------------------------------------------------------------

def test_family_predicates():
    assert Partition([3, 1, 1]).is_self_conjugate()
    assert not Partition([3, 1]).is_self_conjugate()
    assert Partition([2]).is_doubled_distinct()
    assert Partition([3, 1]).is_doubled_distinct()
    assert Partition([4, 3, 1]).is_doubled_distinct()
    assert not Partition([3]).is_doubled_distinct()
    assert Partition([1, 1]).is_conj_doubled_distinct()
    assert family_membership(EMPTY) == {"SC", "DD", "DDp"}
    assert family_membership(Partition([3])) == set()
    assert family_membership(Partition([2, 1])) == {"SC"}


@settings(max_examples=60, deadline=None)
@given(partition_lists)
def test_membership_matches_predicates(parts):
    lam = Partition(parts)
    tags = family_membership(lam)  # raises if word/shape tests disagree
    assert ("SC" in tags) == lam.is_self_conjugate()
    assert ("DD" in tags) == lam.is_doubled_distinct()
    assert ("DDp" in tags) == lam.conjugate().is_doubled_distinct()


# ---------------------------------------------------------------------------
# boundary words
# ---------------------------------------------------------------------------

def test_word_canonical_form():
    word = encode_word(Partition([2, 2]))
    assert word.offset == -2
    assert word.bits == (1, 1, 0, 0)
    assert word.letter(-5) == 0
    assert word.letter(7) == 1
    assert word.zeros() == [0, 1]
    assert encode_word(EMPTY).bits == ()


def test_word_validation():
    with pytest.raises(UnbalancedWord):
        BoundaryWord(0, (0, 1))  # must start with 1
    with pytest.raises(UnbalancedWord):
        BoundaryWord(0, (1, 1))  # must end with 0
    with pytest.raises(UnbalancedWord):
        BoundaryWord(0, (1, 0, 0))  # balance rule violated
    with pytest.raises(UnbalancedWord):
        BoundaryWord(0, (1, 2, 0))  # non-binary letter
    with pytest.raises(UnbalancedWord):
        BoundaryWord(1, ())  # empty window must sit at the origin


@settings(max_examples=80, deadline=None)
@given(partition_lists)
def test_word_roundtrip(parts):
    lam = Partition(parts)
    word = encode_word(lam)
    assert decode_word(word) == lam
    zero_set = {lam.part(i) - i for i in range(1, lam.length + 1)}
    for k in range(-lam.length - 3, lam.part(1) + 3):
        expect = 0 if (k in zero_set or k < -lam.length) else 1
        assert word.letter(k) == expect


def test_hook_index_pairs():
    lam = Partition([4, 3, 3, 2])
    for r, c in lam.boxes():
        i, j = box_indices(lam, r, c)
        word = encode_word(lam)
        assert word.letter(i) == 1 and word.letter(j) == 0
        assert j - i == lam.hook(r, c)
        assert index_box(lam, i, j) == (r, c)
    with pytest.raises(NotAHookPair):
        index_box(lam, 3, 3)
    with pytest.raises(BoxOutOfShape):
        box_indices(lam, 1, 5)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def test_enumeration_counts():
    assert len(list(partitions_of(6))) == 11
    corpus = list(partitions_upto(5))
    assert len(corpus) == 1 + 1 + 2 + 3 + 5 + 7
    weights = [p.weight for p in corpus]
    assert weights == sorted(weights)
    assert len(set(p.parts for p in corpus)) == len(corpus)
