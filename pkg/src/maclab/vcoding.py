"""Charge vectors of t-cores, family vectors, and V_{g,t}-codings.

phi sends a t-core to the vector of residue charges (n_0, ..., n_{t-1}) with
zero sum; its weight is the quadratic form (t/2)*sum n_i^2 + sum i*n_i.  The
seven families used by the affine identities are parametrized by reduced
vectors (with symmetry constraints on the full charge vector, plus rectangle
and square quotient sizes m_1, m_t for the DD'^1 / DD'^2 sets), and each
carries its own quadratic weight form.

The V_{g,t}-coding of a member lambda records, for each residue class i mod
g, the shifted position beta_i = (last 0-letter of the class) + g; sorting
all g values decreasingly and keeping the top t gives v; sigma records which
residue landed in which slot.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import count
from typing import Iterator, Optional

from .littlewood import LittlewoodData, compose, decompose
from .partitions import (
    EMPTY,
    NotInFamily,
    Partition,
    encode_word,
    partition_from_zero_streams,
    partitions_upto,
)


class NotACore(ValueError):
    pass


class UnbalancedVector(ValueError):
    pass


class InvalidFamilyVector(ValueError):
    pass


class TagMismatch(ValueError):
    pass


@dataclass(frozen=True)
class FamilyTag:
    """A partition family: P / SC / DD / DDp (optionally g-cores), DDp1, DDp2.

    ``g`` is the core modulus; ``g=None`` means the unconstrained family
    (used by the q-Nekrasov-Okounkov sums).  For P, g is the core modulus t.
    """

    kind: str
    g: Optional[int] = None

    _KINDS = ("P", "SC", "DD", "DDp", "DDp1", "DDp2")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError("unknown family kind %r" % (self.kind,))
        if self.kind in ("DDp1", "DDp2") and self.g is None:
            raise ValueError("%s requires a modulus g" % (self.kind,))
        if self.kind == "DDp2" and self.g % 2 != 0:
            raise ValueError("DDp2 modulus must be even")
        if self.kind == "SC" and self.g is not None and self.g % 2 != 0:
            raise ValueError("SC core modulus must be even")

    @property
    def rank(self) -> int:
        """The rank t of the affine family attached to this (kind, g)."""
        g = self.g
        if g is None:
            raise ValueError("unconstrained family has no rank")
        if self.kind == "P":
            return g
        if self.kind == "DD":
            return (g - 2) // 2 if g % 2 == 0 else (g - 1) // 2
        if self.kind == "SC":
            return g // 2
        if self.kind == "DDp":
            return g // 2 if g % 2 == 0 else (g + 1) // 2
        if self.kind == "DDp1":
            return (g + 1) // 2 if g % 2 == 1 else g // 2
        return g // 2 + 1  # DDp2, g = 2t-2


# ---------------------------------------------------------------------------
# phi: t-cores <-> zero-sum charge vectors
# ---------------------------------------------------------------------------

def phi(core: Partition, t: int) -> tuple[int, ...]:
    """Residue charges n_i = min{k : c_{i+kt} = 1} of a t-core."""
    if not core.is_core(t):
        raise NotACore("%r is not a %d-core" % (core.parts, t))
    word = encode_word(core)
    n = [0] * t
    for i in range(t):
        # the subword of a core is sorted: charge = index of its first 1
        charge = 0
        for a, b in word.items():
            if a % t == i:
                if a >= 0 and b == 0:
                    charge += 1
                elif a < 0 and b == 1:
                    charge -= 1
        n[i] = charge
    return tuple(n)


def phi_inverse(n: tuple[int, ...]) -> Partition:
    """The t-core whose residue charges are n (sum must vanish)."""
    t = len(n)
    if sum(n) != 0:
        raise UnbalancedVector("charges must sum to 0: %r" % (n,))

    def stream(i: int) -> Iterator[int]:
        for j in count(1):
            yield t * (n[i] - j) + i

    return partition_from_zero_streams([stream(i) for i in range(t)])


def core_weight(n: tuple[int, ...]) -> int:
    """|omega| = (t/2) sum n_i^2 + sum i n_i for the t-core with charges n."""
    t = len(n)
    if sum(n) != 0:
        raise UnbalancedVector("charges must sum to 0: %r" % (n,))
    twice = t * sum(v * v for v in n) + 2 * sum(i * v for i, v in enumerate(n))
    assert twice % 2 == 0
    return twice // 2


# ---------------------------------------------------------------------------
# family membership and reduced vectors
# ---------------------------------------------------------------------------

def _rectangle(m1: int) -> Partition:
    """The rectangle with m1 rows of size m1 - 1 (empty for m1 = 1)."""
    return Partition([m1 - 1] * m1 if m1 > 1 else [])


def _square(mt: int) -> Partition:
    return Partition([mt] * mt)


def in_family(lam: Partition, tag: FamilyTag) -> bool:
    kind, g = tag.kind, tag.g
    if kind == "P":
        return g is None or lam.is_core(g)
    if kind == "SC":
        return lam.is_self_conjugate() and (g is None or lam.is_core(g))
    if kind == "DD":
        return lam.is_doubled_distinct() and (g is None or lam.is_core(g))
    if kind == "DDp":
        return lam.is_conj_doubled_distinct() and (g is None or lam.is_core(g))
    if not lam.is_conj_doubled_distinct():
        return False
    data = decompose(lam, g)
    t = tag.rank
    for k, nu in enumerate(data.quotient):
        if k == g - 1:
            if nu.parts and nu != _rectangle(nu.length):
                return False
        elif kind == "DDp2" and k == t - 2:
            if nu.parts and nu != _square(nu.parts[0]):
                return False
        elif nu.parts:
            return False
    return True


def _ddp_full_vector(g: int, reduced: tuple[int, ...]) -> list[int]:
    """Full charge vector of a DD' g-core from its free entries."""
    n = [0] * g
    npairs = (g - 1) // 2 if g % 2 == 1 else g // 2 - 1
    if len(reduced) != npairs:
        raise InvalidFamilyVector(
            "DDp reduced vector for g=%d needs %d entries" % (g, npairs)
        )
    for i, v in enumerate(reduced):
        n[i] = v
        n[g - 2 - i] = -v
    return n


def _full_vector(tag: FamilyTag, data: tuple[int, ...]) -> list[int]:
    """The full zero-sum charge vector encoded by a reduced family vector."""
    kind, g = tag.kind, tag.g
    t = tag.rank
    if kind == "P":
        if len(data) != t or sum(data) != 0:
            raise InvalidFamilyVector("type A vector must be zero-sum of length t")
        return list(data)
    if kind == "DD":
        if len(data) != t:
            raise InvalidFamilyVector("DD reduced vector must have length t")
        n = [0] * g
        for i, v in enumerate(data, start=1):
            n[i] = v
            n[g - i] = -v
        return n
    if kind == "SC":
        if len(data) != t:
            raise InvalidFamilyVector("SC reduced vector must have length t")
        n = [0] * g
        for i, v in enumerate(data):
            n[i] = v
            n[g - 1 - i] = -v
        return n
    if kind == "DDp":
        return _ddp_full_vector(g, data)
    raise TagMismatch("no plain charge vector for %s" % (kind,))


def to_family_vector(lam: Partition, tag: FamilyTag) -> tuple[int, ...]:
    """The reduced vector (plus m_1 / m_t sizes for DDp1/DDp2) of a member."""
    if not in_family(lam, tag):
        raise NotInFamily("%r is not in %r" % (lam.parts, tag))
    kind, g = tag.kind, tag.g
    t = tag.rank
    if kind == "P":
        return phi(lam, g)
    if kind in ("SC", "DD", "DDp"):
        n = phi(lam, g)
        if kind == "DD":
            return tuple(n[1 : t + 1])
        if kind == "SC":
            return tuple(n[:t])
        npairs = (g - 1) // 2 if g % 2 == 1 else g // 2 - 1
        return tuple(n[:npairs])
    data = decompose(lam, g)
    n = phi(data.core, g)
    rect = data.quotient[g - 1]
    m1 = rect.length if rect.parts else 1
    if kind == "DDp1":
        free = t - 1
        return tuple(n[:free]) + (m1,)
    sq = data.quotient[t - 2]
    mt = sq.parts[0] if sq.parts else 0
    free = t - 2
    return tuple(n[:free]) + (m1, mt)


def from_family_vector(tag: FamilyTag, data: tuple[int, ...]) -> Partition:
    """Inverse of :func:`to_family_vector`."""
    kind, g = tag.kind, tag.g
    t = tag.rank
    if kind in ("P", "SC", "DD", "DDp"):
        return phi_inverse(tuple(_full_vector(tag, data)))
    if kind == "DDp1":
        free, m1 = data[:-1], data[-1]
        if m1 < 1:
            raise InvalidFamilyVector("m_1 must be >= 1")
        core = phi_inverse(tuple(_ddp_full_vector(g, tuple(free))))
        quotient = [EMPTY] * g
        quotient[g - 1] = _rectangle(m1)
        return compose(LittlewoodData(g, core, tuple(quotient)))
    free, m1, mt = data[:-2], data[-2], data[-1]
    if m1 < 1 or mt < 0:
        raise InvalidFamilyVector("need m_1 >= 1 and m_t >= 0")
    core = phi_inverse(tuple(_ddp_full_vector(g, tuple(free))))
    quotient = [EMPTY] * g
    quotient[g - 1] = _rectangle(m1)
    quotient[t - 2] = _square(mt)
    return compose(LittlewoodData(g, core, tuple(quotient)))


def _ddp_core_weight(g: int, reduced: tuple[int, ...]) -> int:
    """Quadratic form for DD' g-cores (both parities of g)."""
    if g % 2 == 0:
        tt = g // 2
        return 2 * sum(
            tt * v * v + (i - tt + 1) * v for i, v in enumerate(reduced)
        )
    # g = 2t-1: |omega| = g*sum v^2 + sum (2i - 2t + 3) v
    tt = (g + 1) // 2
    return g * sum(v * v for v in reduced) + sum(
        (2 * i - 2 * tt + 3) * v for i, v in enumerate(reduced)
    )


def family_weight(tag: FamilyTag, data: tuple[int, ...]) -> int:
    """The weight of from_family_vector(tag, data), via the quadratic forms."""
    kind, g = tag.kind, tag.g
    t = tag.rank
    if kind == "P":
        if sum(data) != 0:
            raise InvalidFamilyVector("type A vector must be zero-sum")
        return core_weight(tuple(data))
    if kind == "DD":
        if g % 2 == 0:
            return 2 * sum(
                (t + 1) * v * v + (i - t - 1) * v for i, v in enumerate(data, 1)
            )
        return (2 * t + 1) * sum(v * v for v in data) + sum(
            (2 * i - 2 * t - 1) * v for i, v in enumerate(data, 1)
        )
    if kind == "SC":
        return 2 * t * sum(v * v for v in data) + sum(
            (2 * i - 2 * t + 1) * v for i, v in enumerate(data)
        )
    if kind == "DDp":
        return _ddp_core_weight(g, data)
    if kind == "DDp1":
        free, m1 = data[:-1], data[-1]
        return _ddp_core_weight(g, tuple(free)) + g * m1 * (m1 - 1)
    free, m1, mt = data[:-2], data[-2], data[-1]
    return _ddp_core_weight(g, tuple(free)) + g * (m1 * (m1 - 1) + mt * mt)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------



def _reduced_shape(tag: FamilyTag) -> tuple[str, ...]:
    """Names of the reduced-vector slots (n entries, then m_1 / m_t)."""
    kind, g = tag.kind, tag.g
    t = tag.rank
    if kind == "P":
        return tuple("n%d" % i for i in range(t))
    if kind in ("SC", "DD"):
        return tuple("n%d" % i for i in range(t))
    if kind == "DDp":
        npairs = (g - 1) // 2 if g % 2 == 1 else g // 2 - 1
        return tuple("n%d" % i for i in range(npairs))
    if kind == "DDp1":
        return tuple("n%d" % i for i in range(t - 1)) + ("m1",)
    return tuple("n%d" % i for i in range(t - 2)) + ("m1", "mt")


@lru_cache(maxsize=None)
def _all_partitions(max_weight: int) -> tuple[Partition, ...]:
    return tuple(partitions_upto(max_weight))


@lru_cache(maxsize=None)
def enumerate_family(tag: FamilyTag, max_weight: int) -> tuple[Partition, ...]:
    """Every member of the family with weight <= max_weight, weight-ascending.

    Filtered from all partitions of bounded weight; membership tests are
    cheap and the partition count grows far slower than the naive lattice
    boxes around the family's reduced vectors.  Memoized: the exhaustive
    verification suites revisit the same ranges repeatedly.
    """
    members = [p for p in _all_partitions(max_weight) if in_family(p, tag)]
    return tuple(sorted(members, key=lambda p: (p.weight, p.parts)))


# ---------------------------------------------------------------------------
# V_{g,t}-codings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VCoding:
    g: int
    t: int
    v: tuple[int, ...]
    sigma: tuple[int, ...]  # residues of v_1..v_t
    parity: int  # Z/2
    order: tuple[int, ...]  # full residue sequence sorting all g betas

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "t": self.t,
            "v": list(self.v),
            "sigma": list(self.sigma),
            "parity": self.parity,
        }


def vcoding(lam: Partition, g: int, t: int) -> VCoding:
    """The V_{g,t}-coding: beta_i = (last 0 of residue i) + g, sorted."""
    word = encode_word(lam)
    beta = []
    for i in range(g):
        last = None
        for a, b in word.items():
            if b == 0 and a % g == i:
                last = a
        if last is None:
            # all zeros of the class lie below the window
            last = word.offset - 1
            while last % g != i:
                last -= 1
        beta.append(last + g)
    order = tuple(sorted(range(g), key=lambda i: -beta[i]))
    if len(set(beta)) != g:
        raise AssertionError("beta values must be pairwise distinct")
    parity = (
        sum(
            1
            for i in range(g)
            for j in range(i + 1, g)
            if order[i] < order[j]
        )
        % 2
    )
    v = tuple(beta[order[i]] for i in range(t))
    if any(v[i] <= v[i + 1] for i in range(t - 1)):
        raise AssertionError("v must be strictly decreasing")
    return VCoding(g, t, v, order[:t], parity, order)


def r_shift(tag: FamilyTag) -> Fraction:
    """The constant c with r_i = v_i + c for the tag's theorem."""
    kind, g = tag.kind, tag.g
    if kind == "P":
        return Fraction(0)
    if kind == "DD":
        return Fraction(-g, 2)
    if kind == "SC":
        return Fraction(-g, 2) + Fraction(1, 2)
    if kind in ("DDp1", "DDp2"):
        return Fraction(-g, 2) + 1
    raise TagMismatch("no r-vector for %s" % (kind,))


def weight_constant(tag: FamilyTag) -> Fraction:
    """The subtracted constant in |lambda| = (1/g) sum r_i^2 - const."""
    kind, g = tag.kind, tag.g
    if kind == "P":
        # (1/2t) sum_{i=0}^{t-1} i^2: the constant forced by the charge form
        return Fraction((g - 1) * (2 * g - 1), 12)
    if kind == "DD" and g % 2 == 0:
        return Fraction((g // 2 - 1) * (g - 1), 12)
    if kind == "DD":
        return Fraction((g - 2) * (g // 2), 12)
    if kind == "SC":
        return Fraction(g * g - 1, 24)
    if kind == "DDp1" and g % 2 == 1:
        return Fraction((g + 2) * (g // 2 + 1), 12)
    if kind == "DDp1":
        return Fraction((g + 1) * (g // 2 + 1), 12)
    if kind == "DDp2":
        return Fraction((g // 2 + 1) * (g + 1), 12)
    raise TagMismatch("no weight identity for %r" % (tag,))


def r_vector(vc: VCoding, tag: FamilyTag) -> tuple[Fraction, ...]:
    """The shifted vector r of the tag's hook-product theorem."""
    if tag.g != vc.g or tag.rank != vc.t:
        raise TagMismatch("coding (g=%d,t=%d) vs %r" % (vc.g, vc.t, tag))
    shift = r_shift(tag)
    return tuple(Fraction(x) + shift for x in vc.v)


def check_weight_identity(lam: Partition, tag: FamilyTag) -> bool:
    """|lambda| = (1/g or 1/2t) sum r_i^2 - const, exactly."""
    g = tag.g
    vc = vcoding(lam, g, tag.rank)
    r = r_vector(vc, tag)
    denom = 2 * g if tag.kind == "P" else g
    return Fraction(sum(x * x for x in r), denom) - weight_constant(tag) == lam.weight
