"""Charge vectors, family vectors, quadratic weight forms and codings."""

import pytest
from hypothesis import given, settings, strategies as st

from maclab import (
    EMPTY,
    FamilyTag,
    Partition,
    check_weight_identity,
    core_weight,
    enumerate_family,
    family_weight,
    from_family_vector,
    in_family,
    phi,
    phi_inverse,
    to_family_vector,
    vcoding,
)
from maclab.vcoding import (
    InvalidFamilyVector,
    NotACore,
    UnbalancedVector,
    r_vector,
)

from conftest import affine_tags


# ---------------------------------------------------------------------------
# tags
# ---------------------------------------------------------------------------

def test_tag_validation():
    with pytest.raises(ValueError):
        FamilyTag("X", 3)
    with pytest.raises(ValueError):
        FamilyTag("DDp2", 7)  # modulus must be even
    with pytest.raises(ValueError):
        FamilyTag("SC", 5)  # core modulus must be even
    with pytest.raises(ValueError):
        FamilyTag("DDp1")  # needs a modulus


def test_tag_ranks():
    assert FamilyTag("P", 5).rank == 5
    assert FamilyTag("DD", 8).rank == 3
    assert FamilyTag("DD", 7).rank == 3
    assert FamilyTag("SC", 8).rank == 4
    assert FamilyTag("DDp1", 7).rank == 4
    assert FamilyTag("DDp1", 8).rank == 4
    assert FamilyTag("DDp2", 8).rank == 5


def test_unconstrained_membership():
    assert in_family(Partition([3, 1]), FamilyTag("DD"))
    assert in_family(Partition([5, 2, 1]), FamilyTag("P"))
    assert not in_family(Partition([3, 1]), FamilyTag("DD", 4))


# ---------------------------------------------------------------------------
# phi: cores <-> charge vectors
# ---------------------------------------------------------------------------

def test_phi_worked_example():
    # hand-computed charges of the 3-core (3,1)
    core = Partition([3, 1])
    assert phi(core, 3) == (0, -1, 1)
    assert phi_inverse((0, -1, 1)) == core
    assert core_weight((0, -1, 1)) == 4
    assert phi(EMPTY, 4) == (0, 0, 0, 0)
    assert phi_inverse((0, 0)) == EMPTY


def test_phi_validates():
    with pytest.raises(NotACore):
        phi(Partition([2]), 2)
    with pytest.raises(UnbalancedVector):
        phi_inverse((1,))
    with pytest.raises(UnbalancedVector):
        core_weight((1, 0))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5), st.lists(st.integers(-3, 3), min_size=1, max_size=4))
def test_phi_roundtrip_from_vectors(t, head):
    n = tuple(head[: t - 1]) + (0,) * (t - 1 - len(head[: t - 1]))
    n = n + (-sum(n),)
    core = phi_inverse(n)
    assert core.is_core(t)
    assert phi(core, t) == n
    assert core.weight == core_weight(n)


def test_two_core_family_is_staircases():
    members = enumerate_family(FamilyTag("P", 2), 10)
    assert list(members) == [
        EMPTY,
        Partition([1]),
        Partition([2, 1]),
        Partition([3, 2, 1]),
        Partition([4, 3, 2, 1]),
    ]


# ---------------------------------------------------------------------------
# family vectors and weight forms
# ---------------------------------------------------------------------------

def test_family_vector_validation():
    with pytest.raises(InvalidFamilyVector):
        from_family_vector(FamilyTag("P", 3), (1, 1, 1))  # not zero-sum
    with pytest.raises(InvalidFamilyVector):
        from_family_vector(FamilyTag("DD", 6), (1,))  # wrong length
    with pytest.raises(InvalidFamilyVector):
        from_family_vector(FamilyTag("DDp1", 5), (0, 0, 0))  # m_1 >= 1


@pytest.mark.parametrize("tag", affine_tags(tmax=4))
def test_family_vector_roundtrip_small(tag):
    for lam in enumerate_family(tag, 16):
        vec = to_family_vector(lam, tag)
        assert from_family_vector(tag, vec) == lam
        assert family_weight(tag, vec) == lam.weight


# ---------------------------------------------------------------------------
# codings
# ---------------------------------------------------------------------------

def test_vcoding_worked_example():
    lam = Partition([11, 6, 4, 2, 2, 1, 1, 1, 1, 1])
    vc = vcoding(lam, 6, 2)
    assert vc.v == (16, 7)
    assert vc.sigma == tuple(x % 6 for x in vc.v)


def test_vcoding_structure():
    lam = Partition([4, 3, 1])
    g = 5
    vc = vcoding(lam, g, 3)
    assert len(vc.v) == 3
    assert all(a > b for a, b in zip(vc.v, vc.v[1:]))
    assert sorted(vc.order) == list(range(g))
    assert vc.sigma == vc.order[:3]
    assert vc.parity in (0, 1)


@pytest.mark.parametrize("tag", affine_tags(tmax=4))
def test_weight_identity_small(tag):
    for lam in enumerate_family(tag, 16):
        assert check_weight_identity(lam, tag)
        r = r_vector(vcoding(lam, tag.g, tag.rank), tag)
        assert all(a > b for a, b in zip(r, r[1:]))
