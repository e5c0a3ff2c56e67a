"""Hook-length products over the seven partition families.

The product over hook lengths prod tau(h_s -+ eps_s*g)/tau(h_s) of a family
member collapses, for any function tau on the integers, to a closed form in
the shifted coding vector r.  Both sides are represented here as formal
products -- Counters mapping tau-arguments to exponents -- which makes the
identities checkable for *arbitrary* tau (multiset equality) and cheap to
evaluate for a concrete tau.

Also here: g-intervals and their telescoping products, the decomposition of
the largest hook into g-intervals, closed forms for the diagonal hook
lengths, the alpha statistics, and the sign congruences relating hook
counts to the coding permutation's parity.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .partitions import NotInFamily, Partition
from .series import LaurentPoly, PolyFraction, PolyRing
from .vcoding import (
    FamilyTag,
    VCoding,
    from_family_vector,
    in_family,
    phi_inverse,
    r_vector,
    vcoding,
)


class TauZeroArgument(ArithmeticError):
    """A tau-argument 0 survived cancellation (tau would vanish there)."""


class EmptyPartition(ValueError):
    pass


# ---------------------------------------------------------------------------
# g-intervals and telescoping
# ---------------------------------------------------------------------------

def g_interval(m: int, M: int, g: int, direction: str = "+") -> list[int]:
    """I^{g,+}_{m,M} = {k : m <= k < M, k = m mod g};
    I^{g,-}_{m,M} = {l : m < l <= M, l = M mod g}.  Possibly empty."""
    if g < 1:
        raise ValueError("modulus must be positive")
    if direction == "+":
        return list(range(m, M, g))
    if direction == "-":
        out = list(range(M, m, -g))
        out.reverse()
        return out
    raise ValueError("direction must be '+' or '-'")


def telescoped(tau: "TauFn", m: int, M: int, g: int, direction: str = "+",
               variant: str = "minus"):
    """Closed form of the telescoping interval product.

    direction '+', variant 'minus':  prod_{k in I+} tau(M-k-g)/tau(M-k)
                                     = tau(M-max(I+)-g)/tau(M-m)
    direction '+', variant 'plus':   prod_{k in I+} tau(M-k+g)/tau(M-k)
                                     = tau(M-m+g)/tau(M-max(I+))
    direction '-' (shift by +g):     prod_{l in I-} tau(l-m+g)/tau(l-m)
                                     = tau(M-m+g)/tau(min(I-)-m)
    Empty intervals give 1.
    """
    interval = g_interval(m, M, g, direction)
    c: Counter = Counter()
    if interval:
        if direction == "+":
            if variant == "minus":
                c[M - max(interval) - g] += 1
                c[M - m] -= 1
            else:
                c[M - m + g] += 1
                c[M - max(interval)] -= 1
        else:
            c[M - m + g] += 1
            c[min(interval) - m] -= 1
    return tau.product(c)


# ---------------------------------------------------------------------------
# tau functions
# ---------------------------------------------------------------------------

class TauFn:
    """An evaluation rule on the integers, applied to formal products.

    ``fn`` maps an int to a Fraction or a LaurentPoly.  ``product`` turns a
    Counter {argument: exponent} into an exact value -- a Fraction, or a
    PolyFraction for polynomial-valued tau.
    """

    __slots__ = ("name", "fn", "symbolic", "ring")

    def __init__(self, name: str, fn: Callable[[int], object],
                 symbolic: bool = False, ring: Optional[PolyRing] = None):
        self.name = name
        self.fn = fn
        self.symbolic = symbolic
        self.ring = ring

    def __call__(self, x: int):
        return self.fn(x)

    def __repr__(self):
        return "TauFn(%s)" % (self.name,)

    @classmethod
    def identity(cls) -> "TauFn":
        return cls("x", lambda x: Fraction(x))

    @classmethod
    def geometric(cls, base) -> "TauFn":
        """tau(x) = 1 - base^x for a rational base with |base| != 1."""
        b = Fraction(base)

        def fn(x: int):
            return 1 - (b ** x)

        return cls("1-(%s)^x" % (b,), fn)

    @classmethod
    def qbracket(cls, step: int = 1, ring: Optional[PolyRing] = None) -> "TauFn":
        """Symbolic tau(x) = 1 - q^(step*x) in the Laurent ring in q."""
        ring = ring or PolyRing(("q",))

        def fn(x: int):
            return 1 - ring.var("q", step * x)

        return cls("1-q^%dx" % (step,), fn, symbolic=True, ring=ring)

    def product(self, args: Counter):
        """Evaluate prod tau(a)^e over a formal argument counter."""
        if args.get(0):
            raise TauZeroArgument("tau(0) with net exponent %d" % (args[0],))
        if self.symbolic:
            num = self.ring.one()
            den = self.ring.one()
            for a, e in args.items():
                if not e:
                    continue
                val = self.fn(a)
                if e > 0:
                    num = num * val ** e
                else:
                    den = den * val ** (-e)
            return PolyFraction(num, den)
        out = Fraction(1)
        for a, e in args.items():
            if e:
                out *= Fraction(self.fn(a)) ** e
        return out


# ---------------------------------------------------------------------------
# hook statistics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HookStats:
    """Counts entering the sign lemmas and alpha exponents, for one member.

    ``below_plus`` counts boxes with h_s < bound and eps_s = 1 (for the
    t-core family the bound is t and eps is ignored); ``below_delta``
    counts those on the main diagonal; ``alpha[i-1]`` is the exponent
    alpha_i; ``diagonal`` lists the diagonal hook lengths.
    """

    g: int
    durfee: int
    below_plus: int
    below_delta: int
    alpha: tuple[int, ...]
    diagonal: tuple[int, ...]


def hook_stats(lam: Partition, tag: FamilyTag) -> HookStats:
    if not in_family(lam, tag):
        raise NotInFamily("%r is not in %r" % (lam.parts, tag))
    g = tag.g
    type_a = tag.kind == "P"
    bound = g
    alpha = [0] * (g - 1)
    below = 0
    below_delta = 0
    for r, c in lam.boxes():
        h = lam.hook(r, c)
        plus = r <= c
        if type_a:
            if h < bound:
                below += 1
                if r == c:
                    below_delta += 1
            if 1 <= bound - h <= g - 1:
                alpha[bound - h - 1] += 1
        else:
            if h < bound and plus:
                below += 1
                if r == c:
                    below_delta += 1
            if plus and 1 <= g - h <= g - 1:
                alpha[g - h - 1] += 1
    diag = tuple(lam.hook(i, i) for i in range(1, lam.durfee + 1))
    return HookStats(g, lam.durfee, below, below_delta, tuple(alpha), diag)


# ---------------------------------------------------------------------------
# largest hook and diagonal hook decompositions
# ---------------------------------------------------------------------------

def largest_hook(lam: Partition, tag: FamilyTag) -> tuple[tuple[int, ...],
                                                          tuple[int, ...]]:
    """Indices of the first-hook boxes, split by the sign eps.

    The first entry lists the i-indices of the boxes with eps = 1 (the
    first row, all sharing j = v_1 - g = lambda_1 - 1); the second the
    j-indices of those with eps = -1 (first column below the diagonal,
    sharing i = -lambda'_1).
    """
    if not lam.parts:
        raise EmptyPartition("no boxes")
    if not in_family(lam, tag):
        raise NotInFamily("%r is not in %r" % (lam.parts, tag))
    conj = lam.conjugate().parts
    hplus = tuple(c - conj[c - 1] - 1 for c in range(1, lam.parts[0] + 1))
    hminus = tuple(lam.parts[r - 1] - r for r in range(2, conj[0] + 1))
    return tuple(sorted(hplus)), tuple(sorted(hminus))


def diagonal_hooks(lam: Partition, tag: FamilyTag) -> list[int]:
    """Hook lengths on the main diagonal, via the residue closed form.

    For the DD / SC / DD'-based families the set is the union over coding
    slots of arithmetic progressions 2kg + offset(residue); the closed form
    is cross-checked against the Ferrers diagram before returning.
    """
    if not in_family(lam, tag):
        raise NotInFamily("%r is not in %r" % (lam.parts, tag))
    direct = sorted(lam.hook(i, i) for i in range(1, lam.durfee + 1))
    if tag.kind == "P":
        return direct
    g, t = tag.g, tag.rank
    vc = vcoding(lam, g, t)
    closed: list[int] = []
    for vi in vc.v:
        rho = vi % g
        n = (vi - rho) // g
        if tag.kind == "DD":
            offset = 2 * rho
        elif tag.kind == "SC":
            offset = 2 * rho + 1
        else:
            offset = 2 * (rho + 1)
        closed.extend(2 * k * g + offset for k in range(n))
    closed.sort()
    if closed != direct:
        raise AssertionError(
            "closed form %r != diagonal hooks %r for %r"
            % (closed, direct, lam.parts)
        )
    return closed


# ---------------------------------------------------------------------------
# reconstruction of a member from its coding
# ---------------------------------------------------------------------------

def member_from_vcoding(vc: VCoding, tag: FamilyTag) -> Partition:
    """The unique family member whose V_{g,t}-coding is ``vc``."""
    g, t = vc.g, vc.t
    if tag.g != g or tag.rank != t:
        raise ValueError("coding (g=%d,t=%d) vs %r" % (g, t, tag))
    kind = tag.kind
    if kind == "P":
        n: list[Optional[int]] = [None] * t
        for val in vc.v:
            rho = val % g
            n[rho] = (val - rho) // g
        if None in n:
            raise ValueError("coding misses a residue class")
        return phi_inverse(tuple(n))
    if kind == "DD":
        red = [0] * t
        for val in vc.v:
            rho = val % g
            if 1 <= rho <= t:
                red[rho - 1] = (val - rho) // g
            else:
                red[g - rho - 1] = (rho - val) // g
        return from_family_vector(tag, tuple(red))
    if kind == "SC":
        red = [0] * t
        for val in vc.v:
            rho = val % g
            if rho <= t - 1:
                red[rho] = (val - rho) // g
            else:
                red[g - 1 - rho] = (rho - val) // g
        return from_family_vector(tag, tuple(red))
    if kind in ("DDp1", "DDp2"):
        npairs = (g - 1) // 2 if g % 2 == 1 else g // 2 - 1
        free = [0] * npairs
        m1 = None
        mt = 0
        for val in vc.v:
            rho = val % g
            if rho == g - 1:
                m1 = (val + 1) // g
            elif kind == "DDp2" and rho == t - 2:
                mt = (val - rho) // g
            elif rho < npairs:
                free[rho] = (val - rho) // g
            else:
                free[g - 2 - rho] = (rho - val) // g
        if m1 is None:
            raise ValueError("coding misses the residue class g-1")
        tail = (m1,) if kind == "DDp1" else (m1, mt)
        return from_family_vector(tag, tuple(free) + tail)
    raise ValueError("no coding inverse for %r" % (tag,))


# ---------------------------------------------------------------------------
# the hook product theorems, both sides as formal products
# ---------------------------------------------------------------------------

def lhs_counter(lam: Partition, tag: FamilyTag,
                variant: str = "minus") -> Counter:
    """The hook-product side, cancelled, as {tau-argument: exponent}.

    t-core family: prod tau(h-t) tau(h+t) / tau(h)^2.
    Other families: prod tau(h - eps*g)/tau(h) ('minus') or
    tau(h + eps*g)/tau(h) ('plus').
    """
    if not in_family(lam, tag):
        raise NotInFamily("%r is not in %r" % (lam.parts, tag))
    g = tag.g
    out: Counter = Counter()
    if tag.kind == "P":
        for r, c in lam.boxes():
            h = lam.hook(r, c)
            out[h - g] += 1
            out[h + g] += 1
            out[h] -= 2
    else:
        sign = -1 if variant == "minus" else 1
        for r, c in lam.boxes():
            h = lam.hook(r, c)
            eps = 1 if r <= c else -1
            out[h + sign * eps * g] += 1
            out[h] -= 1
    return Counter({a: e for a, e in out.items() if e})


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise AssertionError("non-integral tau argument %s" % (x,))
    return int(x)


def rhs_counter(vc: VCoding, tag: FamilyTag, alpha: tuple[int, ...],
                variant: str = "minus") -> Counter:
    """The closed-form side as {tau-argument: exponent}.

    The 'plus' variant exists for the doubled-distinct family with even
    modulus only; it is expressed through the conjugate member, see
    :func:`plus_rhs_counter`.
    """
    g, t = tag.g, tag.rank
    kind = tag.kind
    if variant == "plus":
        if kind != "DD" or g % 2:
            raise ValueError("plus variant needs the DD family, even g")
        return plus_rhs_counter(vc, tag)
    r = r_vector(vc, tag)
    out: Counter = Counter()
    hi = t - 1 if kind == "P" else g - 1
    for i in range(1, hi + 1):
        a = alpha[i - 1]
        if a:
            out[-i] += a
            out[i] -= a
    if (kind == "DD" or kind == "DDp1") and g % 2 == 0:
        for i in range(1, t + 1):
            out[_as_int(r[i - 1])] += 1
            out[i] -= 1
    if kind == "DDp2":
        # slots whose runner reaches past the first bead: the product picks
        # up tau at the folded coordinate (distance from r_i to the nearest
        # multiple of g) in place of tau(r_i)
        for i in range(1, t + 1):
            ri = _as_int(r[i - 1])
            folded = min(ri % g, g - ri % g)
            if folded != ri:
                out[folded] += 1
                out[ri] -= 1
    if kind == "P":
        pair_sum = None
    elif kind == "DD":
        pair_sum = g
    elif kind == "SC":
        pair_sum = g + 1
    else:
        pair_sum = g + 2
    for i in range(1, t + 1):
        for j in range(i + 1, t + 1):
            out[_as_int(r[i - 1] - r[j - 1])] += 1
            out[j - i] -= 1
            if pair_sum is not None:
                out[_as_int(r[i - 1] + r[j - 1])] += 1
                out[pair_sum - i - j] -= 1
    return out


def plus_rhs_counter(vc: VCoding, tag: FamilyTag) -> Counter:
    """Closed form for prod tau(h + eps*g)/tau(h) over a DD member, even g.

    Conjugation swaps eps on the off-diagonal boxes while keeping hook
    lengths, so the product equals the 'minus'-shifted product of the
    conjugate member -- which lives in the conjugate-doubled-distinct
    family with the same even modulus and trivial quotient -- corrected on
    the diagonal (where eps stays +1) by tau(h+g)/tau(h-g).
    """
    g = tag.g
    lam = member_from_vcoding(vc, tag)
    conj = lam.conjugate()
    ctag = FamilyTag("DDp1", g)
    cvc = vcoding(conj, g, ctag.rank)
    out = rhs_counter(cvc, ctag, hook_stats(conj, ctag).alpha, "minus")
    for h in diagonal_hooks(lam, tag):
        out[h + g] += 1
        out[h - g] -= 1
    return out


def tau_lhs(lam: Partition, tag: FamilyTag, tau: TauFn,
            variant: str = "minus"):
    return tau.product(lhs_counter(lam, tag, variant))


def tau_rhs(vc: VCoding, tag: FamilyTag, tau: TauFn,
            variant: str = "minus"):
    lam = member_from_vcoding(vc, tag)
    alpha = hook_stats(lam, tag).alpha
    return tau.product(rhs_counter(vc, tag, alpha, variant))


def hook_product_counters(lam: Partition, tag: FamilyTag,
                          variant: str = "minus") -> tuple[Counter, Counter]:
    """Cancelled (lhs, rhs) argument counters; equality for all tau at once."""
    lhs = lhs_counter(lam, tag, variant)
    vc = vcoding(lam, tag.g, tag.rank)
    alpha = hook_stats(lam, tag).alpha
    rhs = rhs_counter(vc, tag, alpha, variant)
    rhs = Counter({a: e for a, e in rhs.items() if e})
    return lhs, rhs


def verify_hook_product(lam: Partition, tag: FamilyTag,
                        variant: str = "minus") -> bool:
    """True iff the hook product theorem holds for *every* function tau."""
    lhs, rhs = hook_product_counters(lam, tag, variant)
    return lhs == rhs


# ---------------------------------------------------------------------------
# sign congruences
# ---------------------------------------------------------------------------

def coding_parity(vc: VCoding, tag: FamilyTag) -> int:
    """Parity (Z/2) of the coding permutation, in the family's convention.

    Inversion count of (sigma(1),...,sigma(t)), plus -- for the families
    whose coding slots pair residues symmetrically around c/2 -- the number
    of slot pairs with sigma(i)+sigma(j) < c and of slots with 2 sigma(i)
    < c, where c is the pairing constant: g for the doubled-distinct and
    self-conjugate families, g-2 for the conjugate-doubled-distinct ones.
    """
    t = tag.rank
    sig = vc.sigma[:t]
    par = sum(
        1 for i in range(t) for j in range(i + 1, t) if sig[i] < sig[j]
    )
    if tag.kind != "P":
        c = tag.g if tag.kind in ("DD", "SC") else tag.g - 2
        par += sum(
            1 for i in range(t) for j in range(i + 1, t) if sig[i] + sig[j] < c
        )
        par += sum(1 for i in range(t) if 2 * sig[i] < c)
    return par % 2


def sign_stats(lam: Partition, tag: FamilyTag) -> dict:
    """The family's sign congruence: hook-count residue vs coding parity.

    lhs = |H_{<g,+}| mod 2 (|H_{<t}| for the t-core family); rhs is the
    family's combination of Durfee size d, |H_{<g,+} on the diagonal| and
    the coding parity.
    """
    if not in_family(lam, tag):
        raise NotInFamily("%r is not in %r" % (lam.parts, tag))
    g, t = tag.g, tag.rank
    stats = hook_stats(lam, tag)
    vc = vcoding(lam, g, t)
    kind = tag.kind
    d = stats.durfee
    parity = coding_parity(vc, tag)
    if kind == "P":
        rhs = parity
    elif kind == "DD" and g % 2 == 0:
        rhs = (d + parity) % 2
    elif kind == "DD":
        rhs = (parity + stats.below_delta) % 2
    elif kind == "SC":
        rhs = (parity + stats.below_delta + d) % 2
    elif kind == "DDp1" and g % 2 == 0:
        rhs = (d + parity) % 2
    elif kind == "DDp1":
        rhs = (parity + stats.below_delta) % 2
    elif kind == "DDp2":
        rhs = (d + parity) % 2
    else:
        raise ValueError("no sign congruence for %r" % (tag,))
    lhs = stats.below_plus % 2
    return {
        "partition": list(lam.parts),
        "family": kind,
        "g": g,
        "lhs": lhs,
        "rhs": rhs,
        "parity": parity,
        "durfee": d,
        "below_plus": stats.below_plus,
        "below_delta": stats.below_delta,
        "agree": lhs == rhs,
    }
