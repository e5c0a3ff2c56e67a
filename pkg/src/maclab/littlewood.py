"""The Littlewood decomposition: t-core and t-quotient via residue subwords.

Splitting the boundary word of lambda into its t residue subwords
(c_{ti+k})_{i in Z} for k = 0..t-1, each subword is itself a boundary word
(with its own median).  Decoding subword k gives the quotient component
nu^(k); sorting each subword to its minimal form (all 0s then all 1s, with
the same charge) and re-interleaving gives the word of the t-core.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import EMPTY, NotInFamily, Partition, encode_word


class NotACore(ValueError):
    pass


@dataclass(frozen=True)
class LittlewoodData:
    t: int
    core: Partition
    quotient: tuple[Partition, ...]

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "core": self.core.to_json(),
            "quotient": [q.to_json() for q in self.quotient],
        }


def _subword_data(lam: Partition, t: int) -> list[tuple[list[int], int]]:
    """Per residue k: (subword bits inside the window, charge n_k).

    The charge of a subword is #{i >= 0 : letter 0} - #{i < 0 : letter 1},
    which for residue classes coincides with counting at absolute indices
    a >= 0 / a < 0.
    """
    word = encode_word(lam)
    bits_by: list[list[int]] = [[] for _ in range(t)]
    charges = [0] * t
    a = word.offset
    for b in word.bits:
        k = a % t
        bits_by[k].append(b)
        if a >= 0:
            if b == 0:
                charges[k] += 1
        elif b == 1:
            charges[k] -= 1
        a += 1
    return [(bits_by[k], charges[k]) for k in range(t)]


def _decode_subword_bits(bits: list[int]) -> Partition:
    """Decode a 0/1 window (0-tail before, 1-tail after) origin-free.

    Reading the walk SW -> NE, each 0 is a row whose part is the number of
    1s strictly before it; the last 0 is the largest part.
    """
    parts = []
    ones = 0
    cuts = []
    for b in bits:
        if b == 1:
            ones += 1
        else:
            cuts.append(ones)
    for c in reversed(cuts):
        if c == 0:
            break
        parts.append(c)
    return Partition(parts)


def _charges(lam: Partition, t: int) -> list[int]:
    """Per-residue charges of the boundary word, via the zero set alone.

    The window [-ell, -1] holds (ell + k) // t positions of residue k, so
    the charge of class k is the number of zeros lambda_i - i in the class
    minus that count.
    """
    ell = lam.length
    charges = [0] * t
    for i, p in enumerate(lam.parts, start=1):
        charges[(p - i) % t] += 1
    for k in range(t):
        charges[k] -= (ell + k) // t
    return charges


def decompose(lam: Partition, t: int) -> LittlewoodData:
    """The Littlewood decomposition Phi_t(lambda) = (core, quotient).

    Works directly on the zero set {lambda_i - i} of the boundary word:
    the zeros of residue class k, read at their per-class positions x
    (word index t*x + k) in decreasing order, give the quotient parts
    nu_j = x_j + j - n_k, where n_k is the class charge.
    """
    if t < 2:
        raise ValueError("modulus t must be >= 2")
    ell = lam.length
    per_k: list[list[int]] = [[] for _ in range(t)]
    for i, p in enumerate(lam.parts, start=1):
        z = p - i
        per_k[z % t].append(z // t)
    # class k of the window [-ell, -1] holds (ell + k) // t positions
    charges = [len(per_k[k]) - (ell + k) // t for k in range(t)]
    quotient = []
    for k in range(t):
        n_k = charges[k]
        parts = []
        j = 1
        exhausted = True
        for x in per_k[k]:
            p = x + j - n_k
            if p <= 0:
                exhausted = False
                break
            parts.append(p)
            j += 1
        if exhausted:
            # zeros below the window: every index a <= -ell-1 is a zero
            a = -ell - 1
            a -= (a - k) % t
            x = (a - k) // t
            while x + j - n_k > 0:
                parts.append(x + j - n_k)
                j += 1
                x -= 1
        quotient.append(Partition._unchecked(tuple(parts)))
    quotient = tuple(quotient)
    # core subword k is sorted with its first 1 at index n_k, so its 0s sit
    # at absolute indices t*(n_k - j) + k for j = 1, 2, ...
    key = (t, tuple(charges))
    core = _core_cache.get(key)
    if core is None:
        core = _from_class_zeros(t, ((),) * t, charges)
        _core_cache[key] = core
    return LittlewoodData(t, core, quotient)


_core_cache: dict[tuple[int, tuple[int, ...]], Partition] = {}


def _from_class_zeros(t: int, nus, charges) -> Partition:
    """Decode the partition whose class-k zeros are t*(nu_j - j + n_k) + k.

    Shifting every class by a common depth m turns the zero sets into a
    beta-set of size L = t*m (the charges sum to zero); sorting it and
    unshifting gives the parts directly.
    """
    m = 0
    for nu, n in zip(nus, charges):
        d = len(nu) - n
        if d > m:
            m = d
        if -n > m:
            m = -n
    betas: list[int] = []
    for k in range(t):
        nu = nus[k]
        base = (m + charges[k]) * t + k
        for j, p in enumerate(nu, start=1):
            betas.append(base + t * (p - j))
        # beyond the stored parts nu_j = 0: the tail t*x + k, x >= 0
        betas.extend(range(base - t * (len(nu) + 1), k - 1, -t))
    betas.sort(reverse=True)
    length = t * m
    parts = []
    for j, b in enumerate(betas, start=1):
        p = b - length + j
        if p <= 0:
            break
        parts.append(p)
    return Partition._unchecked(tuple(parts))


def compose(data: LittlewoodData) -> Partition:
    """Inverse of :func:`decompose`."""
    t = data.t
    if not data.core.is_core(t):
        raise NotACore("%r is not a %d-core" % (data.core.parts, t))
    if len(data.quotient) != t:
        raise ValueError("quotient must have exactly t components")
    # subword k of lambda is psi(nu^(k)) shifted by the core charge n_k;
    # psi(nu) has 0s at nu_j - j for all j >= 1 (parts beyond the length
    # being 0), hence absolute zeros t*(nu_j - j + n_k) + k
    return _from_class_zeros(
        t, tuple(q.parts for q in data.quotient), _charges(data.core, t)
    )


def family_structure(lam: Partition, t: int) -> dict:
    """Check the decomposition symmetries for SC / DD / DD' members.

    Returns a report dict with the individual relation checks; raises
    NotInFamily when lambda is in none of the three families.
    """
    from .partitions import family_membership

    tags = family_membership(lam)
    if not tags:
        raise NotInFamily("%r is not SC, DD or DD'" % (lam.parts,))
    data = decompose(lam, t)
    nu = data.quotient
    checks: dict[str, bool] = {}
    w = lam.weight

    def conj_pair(i: int, j: int) -> bool:
        return nu[i] == nu[j].conjugate()

    if "SC" in tags:
        for j in range(t // 2):
            checks["SC2 nu^(%d)=(nu^(%d))'" % (j, t - 1 - j)] = conj_pair(j, t - 1 - j)
        checks["SC core self-conjugate"] = data.core.is_self_conjugate()
        if t % 2 == 1:
            mid = (t - 1) // 2
            checks["SC'2 middle self-conjugate"] = nu[mid].is_self_conjugate()
            checks["SC'3 weight"] = w == data.core.weight + t * sum(
                q.weight for q in nu
            )
        else:
            checks["SC3 weight"] = w == data.core.weight + 2 * t * sum(
                nu[j].weight for j in range(t // 2)
            )
    if "DD" in tags:
        checks["DD core doubled distinct"] = data.core.is_doubled_distinct()
        for j in range(1, t // 2 + 1):
            if t - j != j:
                checks["DD2 nu^(%d)=(nu^(%d))'" % (j, t - j)] = conj_pair(j, t - j)
        checks["DD2 nu^(0) doubled distinct"] = nu[0].is_doubled_distinct()
        if t % 2 == 0:
            checks["DD2 middle self-conjugate"] = nu[t // 2].is_self_conjugate()
        checks["DD3 weight"] = w == data.core.weight + t * sum(q.weight for q in nu)
    if "DDp" in tags:
        checks["DDp core conj doubled distinct"] = data.core.is_conj_doubled_distinct()
        for j in range(t - 1):
            if t - 2 - j > j:
                checks["DDp2 nu^(%d)=(nu^(%d))'" % (j, t - 2 - j)] = conj_pair(
                    j, t - 2 - j
                )
        checks["DDp2 nu^(%d) conj doubled distinct" % (t - 1,)] = nu[
            t - 1
        ].is_conj_doubled_distinct()
        if t % 2 == 0:
            checks["DDp2 middle self-conjugate"] = nu[t // 2 - 1].is_self_conjugate()
        checks["DDp3 weight"] = w == data.core.weight + t * sum(q.weight for q in nu)
    return {
        "partition": list(lam.parts),
        "t": t,
        "families": sorted(tags),
        "core": list(data.core.parts),
        "quotient": [list(q.parts) for q in nu],
        "checks": checks,
        "ok": all(checks.values()),
    }
