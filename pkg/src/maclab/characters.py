"""Classical characters by determinant ratios, and their hook-product forms.

Schur (general linear), symplectic, odd-orthogonal and even-orthogonal
characters are evaluated exactly as quotients of alternant determinants
over a Laurent-polynomial ring.  For the seven partition families, the
character of the shape mu_i = v_i + i - g read off the coding vector,
specialized at geometric points x_i = q^i or q^{2i-1}, collapses to a
signed q-power times a product over hook lengths; both sides are computed
independently here so the collapse can be cross-checked coefficient by
coefficient.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations

from .partitions import NotInFamily, Partition
from .series import InexactDivision, LaurentPoly, PolyFraction, PolyRing
from .vcoding import FamilyTag, VCoding, in_family, r_vector, vcoding
from .hookprods import hook_stats

CHAR_KINDS = ("schur", "sp", "oo", "oe")


class NonDivisible(ArithmeticError):
    """The alternant quotient failed to divide exactly (implementation bug)."""


@dataclass(frozen=True)
class XSpec:
    """Evaluation points x_1..x_t, each an invertible monomial of ``ring``.

    ``exps[i]`` maps variable names to the exponent vector of x_{i+1}; the
    empty dict is the constant 1 (degenerate for alternants).
    """

    ring: PolyRing
    exps: tuple

    @classmethod
    def q_powers(cls, t: int, step: int = 1, offset: int = 0,
                 ring: PolyRing | None = None) -> "XSpec":
        """x_i = q^(step*i + offset); q^i and q^(2i-1) are the used cases."""
        ring = ring or PolyRing(("q",))
        return cls(ring, tuple({"q": step * i + offset}
                               for i in range(1, t + 1)))

    @classmethod
    def symbols(cls, t: int) -> "XSpec":
        names = tuple("x%d" % i for i in range(1, t + 1))
        ring = PolyRing(names)
        return cls(ring, tuple({n: 1} for n in names))

    @property
    def t(self) -> int:
        return len(self.exps)

    def power(self, i: int, a: int) -> LaurentPoly:
        """The monomial x_i^a (i is 1-based; a may be negative)."""
        return self.ring.monomial(
            1, **{n: e * a for n, e in self.exps[i - 1].items()}
        )


def _det(rows: list[list[LaurentPoly]], ring: PolyRing) -> LaurentPoly:
    """Permutation-expansion determinant; n stays small (the rank t)."""
    n = len(rows)
    total = ring.zero()
    for perm in permutations(range(n)):
        inv = sum(
            1
            for a in range(n)
            for b in range(a + 1, n)
            if perm[a] > perm[b]
        )
        term = ring.one()
        for i in range(n):
            term = term * rows[i][perm[i]]
        total = total + (term if inv % 2 == 0 else -term)
    return total


def char_eval(kind: str, mu: Partition, xs: XSpec) -> LaurentPoly:
    """The character of shape mu in len(xs) variables, as a Laurent poly.

    schur: det(x_i^(mu_j+n-j)) / det(x_i^(n-j));
    sp:    det(x_i^a - x_i^-a), a = mu_j+n-j+1, over the same with mu = 0;
    oo:    det(x_i^(mu_j+n-j+1) - x_i^-(mu_j+n-j)) likewise;
    oe:    2 det(x_i^b + x_i^-b) / ((1+delta(mu_n,0)) det(...)), b = mu_j+n-j.
    """
    if kind not in CHAR_KINDS:
        raise ValueError("unknown character kind %r" % (kind,))
    n = xs.t
    parts = mu.parts
    if len(parts) > n:
        raise ValueError("shape %r needs at most %d rows" % (parts, n))
    m = [parts[j] if j < len(parts) else 0 for j in range(n)]

    def entry(i: int, j: int, shape) -> LaurentPoly:
        if kind == "schur":
            return xs.power(i, shape[j] + n - j - 1)
        if kind == "sp":
            a = shape[j] + n - j
            return xs.power(i, a) - xs.power(i, -a)
        if kind == "oo":
            a = shape[j] + n - j
            return xs.power(i, a) - xs.power(i, -(a - 1))
        a = shape[j] + n - j - 1
        return xs.power(i, a) + xs.power(i, -a)

    zero_shape = [0] * n
    num = _det(
        [[entry(i, j, m) for j in range(n)] for i in range(1, n + 1)],
        xs.ring,
    )
    den = _det(
        [[entry(i, j, zero_shape) for j in range(n)]
         for i in range(1, n + 1)],
        xs.ring,
    )
    if kind == "oe":
        num = num + num
        if m[n - 1] == 0:
            den = den + den
    try:
        return num.divide_exact(den)
    except InexactDivision as exc:
        raise NonDivisible(str(exc)) from exc


# ---------------------------------------------------------------------------
# the specialization lemmas: shapes, evaluation points, hook-product sides
# ---------------------------------------------------------------------------

def mu_from_vcoding(vc: VCoding) -> Partition:
    """The character shape mu_i = v_i + i - g attached to a coding."""
    g = vc.g
    parts = [v + i - g for i, v in enumerate(vc.v, start=1)]
    if any(a < b for a, b in zip(parts, parts[1:])) or (parts and parts[-1] < 0):
        raise ValueError("coding %r gives no partition shape" % (vc.v,))
    return Partition([p for p in parts if p])


def _lemma_profile(tag: FamilyTag):
    """(char kind, x-step, q-scale k, Durfee q-power, sign mode, diag mode).

    sign mode 'plus' uses (-1)^|H_{<g,+}|, 'plusdelta' adds |H∩Delta|;
    diag mode describes the product over diagonal boxes: c is the shift
    constant, with factors (1 +/- q^(c+h*k/2))/(1 +/- q^(-c+h*k/2)).
    """
    g, t = tag.g, tag.rank
    kind = tag.kind
    if kind == "DD" and g % 2 == 0:
        return "sp", 1, 1, t + 1, "plus", ("+", t + 1)
    if kind == "DD":
        return "oo", 2, 2, 2 * t + 1, "plusdelta", ("-", 2 * t + 1)
    if kind == "SC":
        return "oo", 2, 2, 0, "plusdelta", ("-", 2 * t)
    if kind == "DDp1" and g % 2 == 1:
        return "oo", 2, 2, -(2 * t - 1), "plusdelta", ("-", 2 * t - 1)
    if kind == "DDp1":
        return "sp", 1, 1, -t, "plus", ("+", t)
    if kind == "DDp2":
        return "oe", 2, 2, -4 * (t - 1), "plus", None
    raise NotInFamily("no character specialization for %r" % (tag,))


def char_hook_form(lam: Partition, tag: FamilyTag,
                   ring: PolyRing | None = None) -> PolyFraction:
    """The hook-product side of the family's specialization lemma.

    Returned as an exact fraction of Laurent polynomials in q: sign times
    q^(c*d) times prod (1-q^(k(h-g*eps)))/(1-q^(k h)) times the diagonal
    factor.  For the square-quotient family the box product alone vanishes
    whenever a box has h = g and eps = 1; the slot factors
    q^(2k*fold_i*[r_i mod g > g/2]) (1-q^(2k r_i))/(1-q^(2k fold_i)), with
    fold_i the distance from r_i to the nearest multiple of g, cancel
    those zeros, so the two products are combined at the exponent level
    before any polynomial is formed.
    """
    if not in_family(lam, tag):
        raise NotInFamily("%r is not in %r" % (lam.parts, tag))
    ring = ring or PolyRing(("q",))
    g, t = tag.g, tag.rank
    _, _, k, dpow, sign_mode, diag = _lemma_profile(tag)
    stats = hook_stats(lam, tag)
    sign = stats.below_plus
    if sign_mode == "plusdelta":
        sign += stats.below_delta
    qpow = dpow * stats.durfee
    factors: Counter = Counter()
    for r, c in lam.boxes():
        h = lam.hook(r, c)
        eps = 1 if r <= c else -1
        factors[h - eps * g] += 1
        factors[h] -= 1
    if tag.kind == "DDp2":
        for ri in r_vector(vcoding(lam, g, t), tag):
            ri = int(ri)
            m = ri % g
            fold = min(m, g - m)
            if fold != ri:
                factors[2 * ri] += 1
                factors[2 * fold] -= 1
                if m > g - m:
                    qpow += 2 * k * fold
    if factors[0] != 0:
        raise NotInFamily(
            "unbalanced zero exponent for %r in %r" % (lam.parts, tag))
    num = ring.monomial(1, q=qpow)
    if sign % 2:
        num = -num
    den = ring.one()
    one = ring.one()
    for a, e in sorted(factors.items()):
        if e == 0 or a == 0:
            continue
        f = one - ring.var("q", k * a)
        for _ in range(abs(e)):
            if e > 0:
                num = num * f
            else:
                den = den * f
    if diag is not None:
        pm, c = diag
        s = 1 if pm == "+" else -1
        for i in range(1, lam.durfee + 1):
            h = lam.hook(i, i)
            half = k * h // 2
            num = num * (one + s * ring.var("q", c + half))
            den = den * (one + s * ring.var("q", -c + half))
    return PolyFraction(num, den)


def char_lemma_stats(lam: Partition, tag: FamilyTag) -> dict:
    """Both sides of the family's specialization lemma, and whether they agree."""
    g, t = tag.g, tag.rank
    kind, step, _, _, _, _ = _lemma_profile(tag)
    vc = vcoding(lam, g, t)
    mu = mu_from_vcoding(vc)
    xs = XSpec.q_powers(t, step=step, offset=-step // 2 if step == 2 else 0)
    char = char_eval(kind, mu, xs)
    rhs = char_hook_form(lam, tag, ring=xs.ring)
    lhs = PolyFraction(char, xs.ring.one())
    return {
        "partition": list(lam.parts),
        "family": tag.kind,
        "g": g,
        "kind": kind,
        "mu": list(mu.parts),
        "char": char,
        "hook_form": rhs,
        "agree": lhs == rhs,
    }
