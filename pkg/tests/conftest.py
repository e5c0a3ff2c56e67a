"""Shared fixtures: exhaustive partition corpora and family member tables."""

import pytest

from maclab import FamilyTag, enumerate_family, partitions_upto


def affine_tags(tmax: int = 6) -> list[FamilyTag]:
    """The (family, modulus) pairs attached to affine ranks t = 2..tmax.

    One tag per infinite family, with the modulus g expressed through the
    rank t; the two families whose smallest sensible rank exceeds 2 start
    at t = 3 (rectangle quotient) and t = 4 (rectangle + square quotient).
    """
    tags: list[FamilyTag] = []
    for t in range(2, tmax + 1):
        tags.append(FamilyTag("P", t))
        tags.append(FamilyTag("DD", 2 * t + 2))
        tags.append(FamilyTag("DD", 2 * t + 1))
        tags.append(FamilyTag("SC", 2 * t))
    for t in range(3, tmax + 1):
        tags.append(FamilyTag("DDp1", 2 * t - 1))
        tags.append(FamilyTag("DDp1", 2 * t))
    for t in range(4, tmax + 1):
        tags.append(FamilyTag("DDp2", 2 * t - 2))
    return tags


def character_tags() -> list[FamilyTag]:
    """Small-modulus representatives of all six character specializations."""
    return [
        FamilyTag("DD", 6),
        FamilyTag("DD", 5),
        FamilyTag("SC", 4),
        FamilyTag("SC", 6),
        FamilyTag("DDp1", 3),
        FamilyTag("DDp1", 5),
        FamilyTag("DDp1", 4),
        FamilyTag("DDp1", 6),
        FamilyTag("DDp2", 4),
        FamilyTag("DDp2", 6),
    ]


@pytest.fixture(scope="session")
def corpus40():
    return tuple(partitions_upto(40))


@pytest.fixture(scope="session")
def members40():
    """Every family member of weight <= 40 for each affine tag."""
    return {tag: enumerate_family(tag, 40) for tag in affine_tags()}
