"""Integer partitions, Ferrers statistics and the boundary-word bijection.

A partition is stored as a non-increasing tuple of positive parts.  The
boundary word of a partition is the bi-infinite 0/1 word obtained by walking
the border of the Ferrers diagram from the south-west to the north-east,
writing 0 for a vertical step and 1 for a horizontal step.  Only a finite
window is stored: every letter before the window is 0 and every letter after
it is 1.  The origin (index 0) is fixed by the balance rule

    #{k <= -1 : c_k = 1} = #{k >= 0 : c_k = 0}.

With this normalization the letter c_k is 0 exactly for k in
{lambda_i - i : i >= 1} (parts of index beyond the length count as 0), which
is the usual beta-set / Maya-diagram picture.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional


class InvalidParts(ValueError):
    """Raised when a part list is not a valid partition."""


class BoxOutOfShape(ValueError):
    """Raised when a box does not lie in the Ferrers diagram."""


class UnbalancedWord(ValueError):
    """Raised when a 0/1 window violates the boundary-word invariants."""


class NotInFamily(ValueError):
    """Raised when a partition is not in the requested family."""


class Partition:
    """An integer partition with cached Ferrers statistics."""

    __slots__ = ("parts", "_conj")

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        prev = None
        for p in parts:
            if not isinstance(p, int) or p <= 0:
                raise InvalidParts("parts must be positive integers: %r" % (parts,))
            if prev is not None and p > prev:
                raise InvalidParts("parts must be non-increasing: %r" % (parts,))
            prev = p
        self.parts = parts
        self._conj: Optional[Partition] = None

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        return cls(parts)

    @classmethod
    def _unchecked(cls, parts: tuple[int, ...]) -> "Partition":
        """Internal fast path for parts already known to be valid."""
        self = object.__new__(cls)
        self.parts = parts
        self._conj = None
        return self

    # -- basic statistics ---------------------------------------------------

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (1-based); 0 when i exceeds the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def durfee(self) -> int:
        d = 0
        for i, p in enumerate(self.parts, start=1):
            if p >= i:
                d = i
            else:
                break
        return d

    def conjugate(self) -> "Partition":
        if self._conj is None:
            cols = []
            if self.parts:
                cols = [0] * self.parts[0]
                for p in self.parts:
                    for j in range(p):
                        cols[j] += 1
            conj = Partition(cols)
            conj._conj = self
            self._conj = conj
        return self._conj

    # -- boxes and hooks ----------------------------------------------------

    def contains(self, row: int, col: int) -> bool:
        return 1 <= row <= len(self.parts) and 1 <= col <= self.parts[row - 1]

    def boxes(self) -> Iterator[tuple[int, int]]:
        for r, p in enumerate(self.parts, start=1):
            for c in range(1, p + 1):
                yield (r, c)

    def arm_leg(self, row: int, col: int) -> tuple[int, int]:
        if not self.contains(row, col):
            raise BoxOutOfShape("box (%d,%d) not in %r" % (row, col, self.parts))
        arm = self.parts[row - 1] - col
        leg = self.conjugate().parts[col - 1] - row
        return arm, leg

    def hook(self, row: int, col: int) -> int:
        a, l = self.arm_leg(row, col)
        return a + l + 1

    def epsilon(self, row: int, col: int) -> int:
        """-1 for boxes strictly below the main diagonal, +1 otherwise."""
        if not self.contains(row, col):
            raise BoxOutOfShape("box (%d,%d) not in %r" % (row, col, self.parts))
        return -1 if row > col else 1

    def hooks(self) -> list[int]:
        """The multiset H(lambda) of all hook lengths, as a list."""
        conj = self.conjugate().parts
        out = []
        for r, p in enumerate(self.parts, start=1):
            for c in range(1, p + 1):
                out.append(p - c + conj[c - 1] - r + 1)
        return out

    def hooks_mod(self, t: int) -> list[int]:
        """The sub-multiset H_t(lambda) of hooks divisible by t."""
        return [h for h in self.hooks() if h % t == 0]

    def is_core(self, t: int) -> bool:
        # beta-set form: no hook is divisible by t iff every zero of the
        # boundary word still has a zero t steps below it
        lo = -len(self.parts)
        zeros = {p - i for i, p in enumerate(self.parts, start=1)}
        for z in zeros:
            w = z - t
            if w >= lo and w not in zeros:
                return False
        return True

    def diagonal_boxes(self) -> list[tuple[int, int]]:
        return [(i, i) for i in range(1, self.durfee + 1)]

    # -- family predicates (Ferrers-side definitions) -----------------------

    def is_self_conjugate(self) -> bool:
        return self.parts == self.conjugate().parts

    def is_doubled_distinct(self) -> bool:
        """lambda_i = lambda'_i + 1 for all i up to the Durfee size."""
        conj = self.conjugate().parts
        return all(self.parts[i] == conj[i] + 1 for i in range(self.durfee))

    def is_conj_doubled_distinct(self) -> bool:
        return self.conjugate().is_doubled_distinct()

    # -- plumbing -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return "Partition%r" % (list(self.parts),)

    def to_json(self) -> list[int]:
        return list(self.parts)


EMPTY = Partition()


@dataclass(frozen=True)
class BoundaryWord:
    """Canonical finite window of the boundary word of a partition.

    ``bits[k - offset]`` is the letter c_k for offset <= k < offset+len(bits);
    letters below the window are 0, letters above are 1.  Canonical form:
    the first stored letter is 1 and the last is 0 (empty window for the
    empty partition).
    """

    offset: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if self.bits:
            if self.bits[0] != 1 or self.bits[-1] != 0:
                raise UnbalancedWord("window must start with 1 and end with 0")
            balance = 0
            k = self.offset
            for b in self.bits:
                if b == 0:
                    if k >= 0:
                        balance += 1
                elif b == 1:
                    if k < 0:
                        balance -= 1
                else:
                    raise UnbalancedWord("letters must be 0/1")
                k += 1
            if balance != 0:
                raise UnbalancedWord("median balance rule violated")
        elif self.offset != 0:
            raise UnbalancedWord("empty window must have offset 0")

    def items(self) -> Iterator[tuple[int, int]]:
        for i, b in enumerate(self.bits):
            yield self.offset + i, b

    def letter(self, k: int) -> int:
        """The letter c_k of the bi-infinite word."""
        if k < self.offset:
            return 0
        if k >= self.offset + len(self.bits):
            return 1
        return self.bits[k - self.offset]

    def zeros(self) -> list[int]:
        """Indices of the 0 letters inside the window, ascending."""
        return [k for k, b in self.items() if b == 0]

    def to_json(self) -> dict:
        return {"offset": self.offset, "bits": "".join(map(str, self.bits))}


def encode_word(lam: Partition) -> BoundaryWord:
    """The boundary word psi(lambda), balanced at its median."""
    if not lam.parts:
        return BoundaryWord(0, ())
    ell = lam.length
    # zeros at lambda_i - i (i = 1..ell); below -ell everything is 0 and the
    # letter at lambda_1 - 1 is the last stored letter only if it is 0, so we
    # build the window [-ell, lambda_1 - 1] and trim.
    lo, hi = -ell, lam.parts[0] - 1
    zero_at = set(lam.parts[i] - (i + 1) for i in range(ell))
    bits = [0 if (k in zero_at or k < -ell) else 1 for k in range(lo, hi + 1)]
    # trim leading 0s and trailing 1s
    a, b = 0, len(bits)
    while a < b and bits[a] == 0:
        a += 1
    while b > a and bits[b - 1] == 1:
        b -= 1
    return BoundaryWord(lo + a, tuple(bits[a:b]))


def decode_word(word: BoundaryWord) -> Partition:
    """Inverse of :func:`encode_word`."""
    zero_list = sorted(word.zeros(), reverse=True)
    parts = []
    i = 1
    for z in zero_list:
        p = z + i
        if p <= 0:
            break
        parts.append(p)
        i += 1
    # zeros below the window: indices offset-1, offset-2, ...
    z = word.offset - 1
    while z + i > 0:
        parts.append(z + i)
        z -= 1
        i += 1
    return Partition(parts)


def partition_from_zero_streams(streams: list[Iterator[int]]) -> Partition:
    """Decode a partition from per-residue descending streams of 0-positions.

    Each stream yields the indices of the 0 letters of one residue class in
    strictly decreasing order (and must be infinite downward).  The word is
    assumed balanced, so the j-th largest zero z_j gives the part z_j + j.
    """
    heap = []
    for s in streams:
        z = next(s)
        heap.append((-z, id(s), z, s))
    heapq.heapify(heap)
    parts = []
    j = 1
    while heap:
        _, sid, z, s = heapq.heappop(heap)
        p = z + j
        if p <= 0:
            break
        parts.append(p)
        j += 1
        z2 = next(s)
        heapq.heappush(heap, (-z2, sid, z2, s))
    return Partition(parts)


def box_indices(lam: Partition, row: int, col: int) -> tuple[int, int]:
    """The pair (i_s, j_s) of word indices attached to a box.

    c_{i_s} = 1, c_{j_s} = 0 and j_s - i_s = h_s; the box is the intersection
    of the column of the 1-letter and the row of the 0-letter.
    """
    if not lam.contains(row, col):
        raise BoxOutOfShape("box (%d,%d) not in %r" % (row, col, lam.parts))
    conj = lam.conjugate().parts
    i_s = col - conj[col - 1] - 1
    j_s = lam.parts[row - 1] - row
    return i_s, j_s


class NotAHookPair(ValueError):
    pass


def index_box(lam: Partition, i: int, j: int) -> tuple[int, int]:
    """Inverse of :func:`box_indices`: the box with 1-letter i and 0-letter j."""
    word = encode_word(lam)
    if not (i < j and word.letter(i) == 1 and word.letter(j) == 0):
        raise NotAHookPair("(%d,%d) is not a hook index pair" % (i, j))
    conj = lam.conjugate().parts
    col = None
    for c in range(1, lam.parts[0] + 1):
        if c - conj[c - 1] - 1 == i:
            col = c
            break
    row = None
    for r in range(1, lam.length + 1):
        if lam.parts[r - 1] - r == j:
            row = r
            break
    if row is None or col is None:
        raise NotAHookPair("(%d,%d) does not index a box" % (i, j))
    return row, col


# -- word-side family characterizations -------------------------------------

def _word_is_dd(word: BoundaryWord) -> bool:
    span = max(1, len(word.bits) + abs(word.offset) + 1)
    if word.letter(0) != 1:
        return False
    return all(word.letter(-k) == 1 - word.letter(k) for k in range(1, span + 1))


def _word_is_sc(word: BoundaryWord) -> bool:
    span = max(1, len(word.bits) + abs(word.offset) + 1)
    return all(word.letter(-k - 1) == 1 - word.letter(k) for k in range(span + 1))


def _word_is_ddp(word: BoundaryWord) -> bool:
    span = max(1, len(word.bits) + abs(word.offset) + 2)
    if word.letter(-1) != 0:
        return False
    return all(word.letter(-k - 2) == 1 - word.letter(k) for k in range(span + 1))


def family_membership(lam: Partition) -> set[str]:
    """Which of SC / DD / DDp the partition belongs to (word test).

    The word characterizations are cross-checked against the direct
    Ferrers-symmetry definitions; a disagreement is a bug.
    """
    word = encode_word(lam)
    out = set()
    checks = {
        "SC": (_word_is_sc(word), lam.is_self_conjugate()),
        "DD": (_word_is_dd(word), lam.is_doubled_distinct()),
        "DDp": (_word_is_ddp(word), lam.is_conj_doubled_distinct()),
    }
    for tag, (by_word, by_shape) in checks.items():
        if by_word != by_shape:
            raise AssertionError(
                "word/shape membership disagree for %r (%s)" % (lam.parts, tag)
            )
        if by_word:
            out.add(tag)
    return out


# -- enumeration -------------------------------------------------------------

def partitions_of(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n, lexicographically ascending on part tuples."""

    def gen(n: int, maxp: int) -> Iterator[tuple[int, ...]]:
        if n == 0:
            yield ()
            return
        for p in range(1, min(n, maxp) + 1):
            for rest in gen(n - p, p):
                yield (p,) + rest

    yield from gen(n, n)


def partitions_upto(max_weight: int) -> Iterator[Partition]:
    """All partitions of weight <= max_weight, weight-ascending then lex."""
    for n in range(max_weight + 1):
        for parts in partitions_of(n):
            yield Partition(parts)
