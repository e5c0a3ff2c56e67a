"""End-to-end verifiers: affine Macdonald rewritings, q-deformed and
classical Nekrasov-Okounkov formulas, and the (q,t)-extension.

Each identity is checked coefficient-by-coefficient to a requested order:
the sum side is assembled from family enumeration, hook statistics and
character evaluation, the product side from truncated Pochhammer products.
The two sides share no code path beyond the series ring, so agreement is
evidence rather than tautology.  All arithmetic is exact; q-dependent
coefficients that are genuinely rational functions are compared after
q-adic truncation at an explicit cap carried in the report.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .characters import XSpec, char_eval, mu_from_vcoding
from .hookprods import hook_stats
from .partitions import Partition
from .series import (
    LaurentPoly,
    PolyFraction,
    PolyRing,
    TruncatedSeries,
    pochhammer,
)
from .vcoding import FamilyTag, enumerate_family, vcoding


class ParameterOutOfRange(ValueError):
    pass


class UnknownIdentity(ValueError):
    pass


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass
class VerifyReport:
    identity: str
    params: dict
    ok: bool
    order: int
    first_mismatch: Optional[dict] = None
    seconds: float = 0.0
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "schema": "1",
            "identity": self.identity,
            "params": {k: repr(v) if isinstance(v, Fraction) else v
                       for k, v in self.params.items()},
            "ok": self.ok,
            "order": self.order,
            "first_mismatch": self.first_mismatch,
            "seconds": round(self.seconds, 3),
            "notes": self.notes,
        }


def _coeffs_equal(a, b) -> bool:
    if a is b:
        return True
    try:
        if a == b:
            return True
    except TypeError:
        pass
    try:
        return not (a - b)
    except TypeError:
        return False


def _first_mismatch(lhs: TruncatedSeries, rhs: TruncatedSeries,
                    label: str = "T") -> Optional[dict]:
    order = min(lhs.order, rhs.order)
    for n in range(order + 1):
        a, b = lhs.coeff(n), rhs.coeff(n)
        if not _coeffs_equal(a, b):
            return {"variable": label, "power": n,
                    "sum_side": repr(a), "product_side": repr(b)}
    return None


# ---------------------------------------------------------------------------
# Macdonald rewritings for the seven infinite affine families
# ---------------------------------------------------------------------------

# family kind, modulus g(t), character, minimal rank, x-step for the
# geometric specialization (1: q^i, 2: q^(2i-1)), and whether the product
# side lives in the half-power variable S with S^2 = T.
MACDONALD = {
    "A": dict(kind="P", g=lambda t: t, char="schur", tmin=2, step=1,
              s_mode=False),
    "B": dict(kind="DDp1", g=lambda t: 2 * t - 1, char="oo", tmin=3, step=2,
              s_mode=False),
    "BV": dict(kind="DDp1", g=lambda t: 2 * t, char="sp", tmin=3, step=1,
               s_mode=False),
    "C": dict(kind="DD", g=lambda t: 2 * t + 2, char="sp", tmin=2, step=1,
              s_mode=False),
    "CV": dict(kind="SC", g=lambda t: 2 * t, char="oo", tmin=2, step=2,
               s_mode=True),
    "BC": dict(kind="DD", g=lambda t: 2 * t + 1, char="oo", tmin=1, step=2,
               s_mode=False),
    "D": dict(kind="DDp2", g=lambda t: 2 * t - 2, char="oe", tmin=4, step=2,
              s_mode=False),
}

# exponent of (-1) in front of each summand, from the member's hook stats
_SIGN_EXP = {
    "A": lambda s: s.below_plus,
    "B": lambda s: s.durfee + s.below_plus + s.below_delta,
    "BV": lambda s: s.below_plus,
    "C": lambda s: s.durfee + s.below_plus,
    "CV": lambda s: s.below_plus + s.below_delta + s.durfee,
    "BC": lambda s: s.below_plus + s.below_delta,
    "D": lambda s: s.durfee + s.below_plus + s.below_delta,
}


def _macdonald_tag(ident: str, t: int) -> FamilyTag:
    try:
        spec = MACDONALD[ident]
    except KeyError:
        raise UnknownIdentity("no Macdonald rewriting %r" % (ident,))
    if t < spec["tmin"]:
        raise ParameterOutOfRange(
            "%s needs t >= %d" % (ident, spec["tmin"]))
    return FamilyTag(spec["kind"], spec["g"](t))


def macdonald_xspec(ident: str, t: int, mode: str) -> XSpec:
    """Evaluation points: free symbols, or the family's geometric point."""
    if mode == "symbolic":
        return XSpec.symbols(t)
    if mode != "specialized":
        raise ParameterOutOfRange("mode must be symbolic or specialized")
    try:
        step = MACDONALD[ident]["step"]
    except KeyError:
        raise UnknownIdentity("no Macdonald rewriting %r" % (ident,))
    return XSpec.q_powers(t, step=step, offset=-step // 2 if step == 2 else 0)


def _type_a_shape(vc) -> Partition:
    t = vc.t
    parts = [v - vc.v[-1] + i - t for i, v in enumerate(vc.v, start=1)]
    if any(a < b for a, b in zip(parts, parts[1:])) or parts[-1] < 0:
        raise AssertionError("coding %r gives no shape" % (vc.v,))
    return Partition([p for p in parts if p])


def macdonald_sum_side(ident: str, t: int, N: int,
                       xs: XSpec) -> TruncatedSeries:
    """Signed character sum over the family, as a series in T (or S)."""
    spec = MACDONALD[ident]
    tag = _macdonald_tag(ident, t)
    g = tag.g
    s_mode = spec["s_mode"]
    order = 2 * N if s_mode else N
    bound = N if ident == "A" else 2 * N
    coeffs: dict[int, object] = {}
    for lam in enumerate_family(tag, bound):
        st = hook_stats(lam, tag)
        vc = vcoding(lam, g, t)
        mu = _type_a_shape(vc) if ident == "A" else mu_from_vcoding(vc)
        term = char_eval(spec["char"], mu, xs)
        if ident == "A":
            for i in range(1, t + 1):
                term = term * xs.power(i, -lam.length)
        if _SIGN_EXP[ident](st) % 2:
            term = -term
        if ident == "A" or s_mode:
            n = lam.weight
        else:
            if lam.weight % 2:
                raise AssertionError("odd weight in %r" % (tag,))
            n = lam.weight // 2
        coeffs[n] = coeffs.get(n, 0) + term
    return TruncatedSeries(order, coeffs)


def _kt_product(order: int, xs: XSpec, start: int,
                step: int) -> TruncatedSeries:
    """prod_{i<j} (T x_i^{+-} x_j^{+-}; T)_inf, truncated."""
    acc = TruncatedSeries.one(order)
    for i in range(1, xs.t + 1):
        for j in range(i + 1, xs.t + 1):
            for si in (1, -1):
                for sj in (1, -1):
                    c = xs.power(i, si) * xs.power(j, sj)
                    acc = acc * pochhammer(order, c, start, step)
    return acc


def macdonald_product_side(ident: str, t: int, N: int,
                           xs: XSpec) -> TruncatedSeries:
    spec = MACDONALD[ident]
    _macdonald_tag(ident, t)
    one = xs.ring.one()
    if spec["s_mode"]:
        # S-variable: S^2 = T, so T-Pochhammers run with start/step 2
        order = 2 * N
        euler_t = pochhammer(order, one, 2, 2)
        acc = pochhammer(order, one, 1, 1)  # (S; S)_inf
        acc = acc * euler_t ** (t - 1)
        acc = acc * _kt_product(order, xs, 2, 2)
        for i in range(1, t + 1):
            for s in (1, -1):
                acc = acc * pochhammer(order, xs.power(i, s), 1, 1)
        return acc
    order = N
    euler = pochhammer(order, one, 1, 1)
    if ident == "BV":
        # the raw lattice identity carries (T^2;T^2)(T;T)^(t-1) here
        acc = pochhammer(order, one, 2, 2) * euler ** (t - 1)
        acc = acc * _kt_product(order, xs, 1, 1)
        for i in range(1, t + 1):
            for s in (2, -2):
                acc = acc * pochhammer(order, xs.power(i, s), 2, 2)
        return acc
    if ident == "A":
        acc = euler ** (t - 1)
        for i in range(1, t + 1):
            for j in range(i + 1, t + 1):
                acc = acc * pochhammer(
                    order, xs.power(i, 1) * xs.power(j, -1), 1, 1)
                acc = acc * pochhammer(
                    order, xs.power(i, -1) * xs.power(j, 1), 1, 1)
        return acc
    acc = euler ** t
    acc = acc * _kt_product(order, xs, 1, 1)
    if ident == "C":
        for i in range(1, t + 1):
            for s in (2, -2):
                acc = acc * pochhammer(order, xs.power(i, s), 1, 1)
    elif ident == "B":
        for i in range(1, t + 1):
            for s in (1, -1):
                acc = acc * pochhammer(order, xs.power(i, s), 1, 1)
    elif ident == "BC":
        for i in range(1, t + 1):
            for s in (1, -1):
                acc = acc * pochhammer(order, xs.power(i, s), 1, 1)
            for s in (2, -2):
                acc = acc * pochhammer(order, xs.power(i, s), 1, 2)
    elif ident == "D":
        pass  # (T;T)^t K_T only
    else:
        raise UnknownIdentity(ident)
    return acc


def verify_macdonald(ident: str, t: int, N: int,
                     mode: str = "specialized") -> VerifyReport:
    t0 = time.time()
    xs = macdonald_xspec(ident, t, mode)
    lhs = macdonald_sum_side(ident, t, N, xs)
    rhs = macdonald_product_side(ident, t, N, xs)
    label = "S" if MACDONALD[ident]["s_mode"] else "T"
    mism = _first_mismatch(lhs, rhs, label)
    return VerifyReport(
        identity="MACDONALD_" + ident,
        params={"t": t, "N": N, "mode": mode},
        ok=mism is None,
        order=lhs.order,
        first_mismatch=mism,
        seconds=time.time() - t0,
    )


# ---------------------------------------------------------------------------
# raw lattice forms (types A and C), as a cross-check of the rewriting
# ---------------------------------------------------------------------------

def _zero_sum_vectors(t: int, M: int):
    if t == 1:
        yield (0,)
        return
    def rec(prefix, left):
        if len(prefix) == t - 1:
            if -M <= -sum(prefix) <= M:
                yield tuple(prefix) + (-sum(prefix),)
            return
        for m in range(-M, M + 1):
            yield from rec(prefix + [m], left - 1)
    yield from rec([], t)


def _perms(t: int):
    from itertools import permutations
    for perm in permutations(range(1, t + 1)):
        inv = sum(1 for a in range(t) for b in range(a + 1, t)
                  if perm[a] > perm[b])
        yield perm, -1 if inv % 2 else 1


def raw_lattice_check(ident: str, t: int, N: int) -> VerifyReport:
    """Types A and C as explicit lattice sums at x_i = q^i, to order N.

    The lattice window is widened until the boundary shell only produces
    T-exponents beyond N, so the truncation is exact.
    """
    t0 = time.time()
    if ident not in ("A", "C"):
        raise UnknownIdentity("raw lattice form only for A and C")
    xs = XSpec.q_powers(t)
    ring = xs.ring
    M = N + 3
    coeffs: dict[int, object] = {}
    min_shell = None
    if ident == "A":
        for m in _zero_sum_vectors(t, M):
            for perm, sgn in _perms(t):
                texp = sum(t * (mi * (mi - 1) // 2) + (perm[i] - 1) * mi
                           for i, mi in enumerate(m))
                if max(abs(v) for v in m) == M:
                    min_shell = texp if min_shell is None else min(min_shell,
                                                                  texp)
                if texp < 0 or texp > N:
                    continue
                mono = ring.one() * sgn
                for i, mi in enumerate(m):
                    mono = mono * xs.power(i + 1, t * mi + perm[i] - 1)
                coeffs[texp] = coeffs.get(texp, 0) + mono
        lhs = TruncatedSeries(N, coeffs)
        rhs = macdonald_product_side("A", t, N, xs)
        # Delta_A(x) = prod_{i<j} (x_j - x_i)
        delta = ring.one()
        for i in range(1, t + 1):
            for j in range(i + 1, t + 1):
                delta = delta * (xs.power(j, 1) - xs.power(i, 1))
        rhs = rhs * delta
    else:
        g = 2 * t + 2
        from itertools import product as iproduct
        for m in iproduct(range(-M, M + 1), repeat=t):
            for perm, sgn in _perms(t):
                base = sum(g * (mi * (mi - 1) // 2) + (t + 1) * mi
                           for mi in m)
                for signs in iproduct((0, 1), repeat=t):
                    texp = base
                    mono = ring.one() * sgn
                    for i, mi in enumerate(m):
                        if signs[i] == 0:
                            e = perm[i] - t - 1
                        else:
                            e = t + 1 - perm[i]
                            mono = -mono
                        texp += mi * e
                        mono = mono * xs.power(i + 1, g * mi + e)
                    if max(abs(v) for v in m) == M:
                        min_shell = (texp if min_shell is None
                                     else min(min_shell, texp))
                    if 0 <= texp <= N:
                        coeffs[texp] = coeffs.get(texp, 0) + mono
        lhs = TruncatedSeries(N, coeffs)
        rhs = macdonald_product_side("C", t, N, xs)
        # Delta_C(x) = prod x_i^{-t}(1-x_i^2) prod_{i<j}(x_j-x_i)(1-x_i x_j)
        delta = ring.one()
        for i in range(1, t + 1):
            delta = delta * xs.power(i, -t) * (ring.one() - xs.power(i, 2))
        for i in range(1, t + 1):
            for j in range(i + 1, t + 1):
                delta = delta * (xs.power(j, 1) - xs.power(i, 1))
                delta = delta * (ring.one() - xs.power(i, 1) * xs.power(j, 1))
        rhs = rhs * delta
    if min_shell is not None and min_shell <= N:
        raise ParameterOutOfRange(
            "lattice window too small: shell reaches T^%d" % (min_shell,))
    mism = _first_mismatch(lhs, rhs)
    return VerifyReport(
        identity="RAW_" + ident,
        params={"t": t, "N": N, "window": M},
        ok=mism is None,
        order=N,
        first_mismatch=mism,
        seconds=time.time() - t0,
    )


# ---------------------------------------------------------------------------
# q-Nekrasov-Okounkov formulas
# ---------------------------------------------------------------------------

QNO_IDS = ("QNO_A", "QNO_B", "QNO_BV", "QNO_C", "QNO_CV", "QNO_BC", "QNO_D")

_QNO_FAMILY = {
    "QNO_A": "P",
    "QNO_B": "DDp",
    "QNO_BV": "DDp",
    "QNO_C": "DD",
    "QNO_CV": "SC",
    "QNO_BC": "DD",
    "QNO_D": "DDp",
}


def _qno_ring(qcap: int, symbolic: bool) -> PolyRing:
    names = ("q", "u") if symbolic else ("q",)
    return PolyRing(names, caps={"q": qcap})


def _upow(ring: PolyRing, e: int, uval):
    if uval is None:
        return ring.var("u", e)
    val = Fraction(uval) ** e
    return ring.const(val)


def _inv_unit(p: LaurentPoly) -> LaurentPoly:
    """(1 - f)^{-1} in the q-capped ring, f with positive q-valuation."""
    ring = p.ring
    f = ring.one() - p
    acc = ring.one()
    term = ring.one()
    while True:
        term = term * f
        if term.is_zero():
            return acc
        acc = acc + term


def qno_sum_side(ident: str, N: int, ring: PolyRing,
                 uval=None) -> TruncatedSeries:
    """The hook-product sum, with q-power-series coefficients (capped)."""
    if ident not in QNO_IDS:
        raise UnknownIdentity(ident)
    tag = FamilyTag(_QNO_FAMILY[ident])
    s_mode = ident == "QNO_CV"
    order = 2 * N if s_mode else N
    bound = N if ident == "QNO_A" else 2 * N
    one = ring.one()
    q = lambda a: ring.var("q", a)
    u = lambda e: _upow(ring, e, uval)
    coeffs: dict[int, object] = {}
    for lam in enumerate_family(tag, bound):
        d = lam.durfee
        if ident == "QNO_A":
            term = one
        elif ident == "QNO_C":
            term = u(d) * (-1 if d % 2 else 1)
        elif ident == "QNO_B":
            term = u(-d) * (-1 if d % 2 else 1)
        elif ident == "QNO_BV":
            term = u(-d)
        elif ident == "QNO_CV":
            term = one * (-1 if d % 2 else 1)
        elif ident == "QNO_BC":
            term = u(d)
        else:  # QNO_D
            term = u(-2 * d) * (-1 if d % 2 else 1)
        for r, c in lam.boxes():
            h = lam.hook(r, c)
            # type D flips the diagonal orientation (no separate diagonal
            # factor there); all other types use the usual arm-side sign
            if ident == "QNO_D":
                eps = 1 if r < c else -1
            else:
                eps = 1 if r <= c else -1
            if ident == "QNO_A":
                term = term * (one - u(1) * q(h)) * (one - u(-1) * q(h))
                inv = _inv_unit(one - q(h))
                term = term * inv * inv
            elif ident in ("QNO_C", "QNO_BV"):
                term = term * (one - u(-2 * eps) * q(h))
                term = term * _inv_unit(one - q(h))
            else:
                term = term * (one - u(-2 * eps) * q(2 * h))
                term = term * _inv_unit(one - q(2 * h))
        for i in range(1, d + 1):
            h = lam.hook(i, i)
            if ident in ("QNO_A", "QNO_D"):
                break
            if ident in ("QNO_C", "QNO_BV"):
                term = term * (one + u(1) * q(h // 2))
                term = term * _inv_unit(one + u(-1) * q(h // 2))
            else:  # QNO_B, QNO_CV, QNO_BC
                term = term * (one - u(1) * q(h))
                term = term * _inv_unit(one - u(-1) * q(h))
        n = lam.weight if (ident == "QNO_A" or s_mode) else lam.weight // 2
        coeffs[n] = coeffs.get(n, 0) + term
    return TruncatedSeries(order, coeffs)


def _qf(acc: TruncatedSeries, c, tpow: int, e: int, qcap: int,
        qmin: int) -> TruncatedSeries:
    """Multiply by (1 - c T^tpow)^e, skipping factors beyond the q cap."""
    if qmin > qcap or tpow > acc.order:
        return acc
    return acc.apply_binomial(-c, tpow, e)


def qno_product_side(ident: str, N: int, ring: PolyRing, uval=None,
                     mutate: bool = False) -> TruncatedSeries:
    if ident not in QNO_IDS:
        raise UnknownIdentity(ident)
    qcap = ring.caps.get(ring.variables.index("q"))
    s_mode = ident == "QNO_CV"
    order = 2 * N if s_mode else N
    acc = TruncatedSeries.one(order)
    one = ring.one()
    q = lambda a: ring.var("q", a)
    u = lambda e: _upow(ring, e, uval)
    rmax = qcap + 3
    for m in range(1, order + 1):
        odd = m % 2 == 1
        for r in range(1, rmax + 1):
            ceil_r = r - r // 2
            if ident == "QNO_A":
                acc = _qf(acc, u(1) * q(r), m, r, qcap, r)
                acc = _qf(acc, u(-1) * q(r), m, r, qcap, r)
                acc = _qf(acc, q(r - 1), m, -r, qcap, r - 1)
                acc = _qf(acc, q(r + 1), m, -r, qcap, r + 1)
            elif ident == "QNO_C":
                acc = _qf(acc, u(1) * q(r - 1), m, 1, qcap, r - 1)
                acc = _qf(acc, u(-1) * q(r), m, -1, qcap, r)
                acc = _qf(acc, u(2) * q(r), m, ceil_r, qcap, r)
                acc = _qf(acc, u(-2) * q(r + 1), m, ceil_r, qcap, r + 1)
                acc = _qf(acc, q(r), m, -ceil_r, qcap, r)
                acc = _qf(acc, q(r + 1), m, -ceil_r, qcap, r + 1)
            elif ident == "QNO_B":
                acc = _qf(acc, u(-1) * q(2 * (r - 1)), m, 1, qcap,
                          2 * (r - 1))
                acc = _qf(acc, u(1) * q(2 * r), m, -1, qcap, 2 * r)
                acc = _qf(acc, u(-2) * q(2 * r), m, ceil_r, qcap, 2 * r)
                acc = _qf(acc, u(2) * q(2 * (r + 1)), m, ceil_r, qcap,
                          2 * (r + 1))
                acc = _qf(acc, q(2 * r), m, -ceil_r, qcap, 2 * r)
                acc = _qf(acc, q(2 * (r + 1)), m, -ceil_r, qcap,
                          2 * (r + 1))
            elif ident == "QNO_BV":
                acc = _qf(acc, u(-1) * q(r - 1), m, -1, qcap, r - 1)
                acc = _qf(acc, u(1) * q(r), m, 1, qcap, r)
                acc = _qf(acc, q(r), m, -ceil_r, qcap, r)
                acc = _qf(acc, q(r + 1), m, -ceil_r, qcap, r + 1)
                if odd:
                    acc = _qf(acc, u(-2) * q(r), m, ceil_r, qcap, r)
                    acc = _qf(acc, u(2) * q(r + 1), m, ceil_r, qcap, r + 1)
                else:
                    acc = _qf(acc, u(-2) * q(r - 1), m, ceil_r, qcap, r - 1)
                    acc = _qf(acc, u(2) * q(r + 2), m, ceil_r, qcap, r + 2)
            elif ident == "QNO_CV":
                # the exponent of S, not T; even powers carry extra factors
                acc = _qf(acc, u(-1) * q(2 * r - 1), m, 1, qcap, 2 * r - 1)
                acc = _qf(acc, u(1) * q(2 * r - 1), m, -1, qcap, 2 * r - 1)
                if not odd:
                    acc = _qf(acc, u(-2) * q(2 * (r + 1)), m, ceil_r,
                              qcap, 2 * (r + 1))
                    acc = _qf(acc, u(2) * q(2 * r), m, ceil_r, qcap, 2 * r)
                    acc = _qf(acc, q(2 * r), m, -ceil_r, qcap, 2 * r)
                    acc = _qf(acc, q(2 * (r + 1)), m, -ceil_r, qcap,
                              2 * (r + 1))
            elif ident == "QNO_BC":
                acc = _qf(acc, u(-1) * q(2 * r), m, 1, qcap, 2 * r)
                acc = _qf(acc, u(1) * q(2 * (r - 1)), m, -1, qcap,
                          2 * (r - 1))
                acc = _qf(acc, q(2 * r), m, -ceil_r, qcap, 2 * r)
                acc = _qf(acc, q(2 * (r + 1)), m, -ceil_r, qcap,
                          2 * (r + 1))
                if odd:
                    acc = _qf(acc, u(-2) * q(2 * (r + 1)), m, ceil_r, qcap,
                              2 * (r + 1))
                    acc = _qf(acc, u(2) * q(2 * r), m, ceil_r, qcap, 2 * r)
                else:
                    acc = _qf(acc, u(-2) * q(2 * (r + 2)), m, ceil_r, qcap,
                              2 * (r + 2))
                    acc = _qf(acc, u(2) * q(2 * (r - 1)), m, ceil_r, qcap,
                              2 * (r - 1))
            else:  # QNO_D
                acc = _qf(acc, u(2) * q(2 * (r + 2)), m, ceil_r, qcap,
                          2 * (r + 2))
                acc = _qf(acc, u(-2) * q(2 * (r - 1)), m, ceil_r, qcap,
                          2 * (r - 1))
                acc = _qf(acc, q(2 * r), m, -ceil_r, qcap, 2 * r)
                acc = _qf(acc, q(2 * (r + 1)), m, -ceil_r, qcap,
                          2 * (r + 1))
        if ident == "QNO_CV" and odd:
            acc = _qf(acc, one, m, 1, qcap, 0)
    if mutate:
        # flip one exponent in one factor: q -> q^2 in the first numerator
        mstep = 2 if s_mode else 1
        acc = acc.apply_binomial(-(u(1) * q(1)), mstep, -1)
        acc = acc.apply_binomial(-(u(1) * q(2)), mstep, 1)
    return acc


def verify_qno(ident: str, N: int, u_mode: str = "symbolic",
               qcap: Optional[int] = None, samples=(Fraction(2),
                                                    Fraction(1, 2),
                                                    Fraction(3)),
               mutate: bool = False) -> VerifyReport:
    t0 = time.time()
    if qcap is None:
        qcap = 2 * N + 6
    label = "S" if ident == "QNO_CV" else "T"
    if u_mode == "symbolic":
        ring = _qno_ring(qcap, True)
        lhs = qno_sum_side(ident, N, ring)
        rhs = qno_product_side(ident, N, ring, mutate=mutate)
        mism = _first_mismatch(lhs, rhs, label)
        order = lhs.order
    elif u_mode == "samples":
        ring = _qno_ring(qcap, False)
        mism = None
        order = 2 * N if ident == "QNO_CV" else N
        for uval in samples:
            lhs = qno_sum_side(ident, N, ring, uval=uval)
            rhs = qno_product_side(ident, N, ring, uval=uval, mutate=mutate)
            mism = _first_mismatch(lhs, rhs, label)
            if mism is not None:
                mism["u"] = repr(uval)
                break
    else:
        raise ParameterOutOfRange("u-mode must be symbolic or samples")
    return VerifyReport(
        identity=ident,
        params={"N": N, "u_mode": u_mode, "q_cap": qcap, "mutate": mutate},
        ok=mism is None,
        order=order,
        first_mismatch=mism,
        seconds=time.time() - t0,
    )


# -- coherence: q-NO at u = q^(g-power) vs the Macdonald rewriting ----------

def qno_macdonald_coherence(ident: str, t: int, N: int) -> bool:
    """QNO sum at u = q^(type power) equals the Macdonald sum at x_i = q^i.

    Exact (PolyFraction) comparison, no q-adic truncation; types A and C.
    """
    if ident == "QNO_A":
        upow, mac, tagkind, bound = t, "A", "P", N
    elif ident == "QNO_C":
        upow, mac, tagkind, bound = t + 1, "C", "DD", 2 * N
    else:
        raise UnknownIdentity("coherence check covers QNO_A and QNO_C")
    ring = PolyRing(("q",))
    one = ring.one()
    q = lambda a: ring.var("q", a)
    tag = FamilyTag(tagkind)
    coeffs: dict[int, PolyFraction] = {}
    for lam in enumerate_family(tag, bound):
        d = lam.durfee
        num, den = one, one
        if ident == "QNO_A":
            n = lam.weight
        else:
            if d % 2:
                num = -num
            num = num * q(upow * d)
            n = lam.weight // 2
        for r, c in lam.boxes():
            h = lam.hook(r, c)
            eps = 1 if r <= c else -1
            if ident == "QNO_A":
                num = num * (one - q(h + upow)) * (one - q(h - upow))
                den = den * (one - q(h)) * (one - q(h))
            else:
                num = num * (one - q(h - 2 * eps * upow))
                den = den * (one - q(h))
        if ident == "QNO_C":
            for i in range(1, d + 1):
                h = lam.hook(i, i)
                num = num * (one + q(h // 2 + upow))
                den = den * (one + q(h // 2 - upow))
        cur = coeffs.get(n)
        term = PolyFraction(num, den)
        coeffs[n] = term if cur is None else cur + term
    xs = XSpec.q_powers(t, ring=ring)
    mac_lhs = macdonald_sum_side(mac, t, N, xs)
    for n in range(N + 1):
        a = coeffs.get(n, PolyFraction(ring.zero(), one))
        b = mac_lhs.coeff(n)
        if isinstance(b, int):
            b = ring.const(b)
        if not a.num * one == b * a.den:
            return False
    return True


# ---------------------------------------------------------------------------
# Nekrasov-Okounkov specializations
# ---------------------------------------------------------------------------

# family, sign by Durfee, weight mode ("full", "half", "s"), box factor
# (orientation sign o with factor 1 + o*c(z)*eps/h, or "square" for the
# classical 1 - z/h^2), the z-linear constant c (a, b) meaning a*z + b,
# diagonal override (+1: diagonal boxes use 1 + c/h regardless of eps),
# and the product side as a list of (base, exponent-poly spec) where base
# is "T" or "T2" or "S" and the exponent is a polynomial in z given by
# coefficients {degree: Fraction}.
NO_SPECS = {
    "NO_CLASSICAL": dict(family="P", sign=False, weight="full",
                         box="square", c=(0, 0), diag=False,
                         rhs=[("T", {1: 1, 0: -1})]),
    "NO_B_a": dict(family="DD", sign=True, weight="half", box=1,
                   c=(2, -1), diag=False,
                   rhs=[("T", {2: 2, 1: 1})]),
    "NO_B_b": dict(family="DDp", sign=False, weight="half", box=-1,
                   c=(2, -1), diag=False,
                   rhs=[("T", {2: 2, 1: -3}), ("T2", {1: 2})]),
    "NO_B_c": dict(family="SC", sign=True, weight="s", box=1,
                   c=(2, -1), diag=False,
                   rhs=[("S", {1: 2}), ("T", {2: 2, 1: -3})]),
    "NO_BV_a": dict(family="DDp", sign=False, weight="half", box=-1,
                    c=(2, 0), diag=False,
                    rhs=[("T", {2: 2, 1: -1, 0: -1}), ("T2", {1: 2, 0: 1})]),
    "NO_BV_b": dict(family="DDp", sign=False, weight="half", box=1,
                    c=(2, 0), diag=False,
                    rhs=[("T", {2: 2, 1: 1, 0: -1}), ("T2", {1: -2, 0: 1})]),
    "NO_C": dict(family="DD", sign=True, weight="half", box=-1,
                 c=(2, 2), diag=False,
                 rhs=[("T", {2: 2, 1: 1})]),
    "NO_CV_a": dict(family="SC", sign=True, weight="full", box=-1,
                    c=(2, 0), diag=True,
                    rhs=[("T", {1: 2, 0: 1}), ("T2", {2: 2, 1: -1, 0: -1})]),
    "NO_CV_b": dict(family="SC", sign=True, weight="full", box=-1,
                    c=(2, 0), diag=False,
                    rhs=[("T", {1: -2, 0: 1}), ("T2", {2: 2, 1: 1, 0: -1})]),
    "NO_BC_a": dict(family="DD", sign=False, weight="half", box=-1,
                    c=(2, 1), diag=True,
                    rhs=[("T", {2: 2, 1: 3}), ("T2", {1: -2})]),
    "NO_BC_b": dict(family="SC", sign=False, weight="s", box=-1,
                    c=(2, 1), diag=False,
                    rhs=[("S", {1: 2}), ("T", {2: 2, 1: -3}),
                         ("T2", {1: 2})]),
    "NO_BC_c": dict(family="DD", sign=True, weight="half", box=-1,
                    c=(2, 1), diag=False,
                    rhs=[("T", {2: 2, 1: -1})]),
    "NO_BC_d": dict(family="SC", sign=True, weight="s", box=-1,
                    c=(2, 1), diag=False,
                    rhs=[("T", {2: 2, 1: 3}), ("S", {1: -2})]),
    "NO_D": dict(family="DDp", sign=True, weight="half", box=-1,
                 c=(2, -2), diag="flip",
                 rhs=[("T", {2: 2, 1: -1})]),
}

NO_IDS = tuple(NO_SPECS)


class ZeroDenominator(ArithmeticError):
    pass


def _z_value(spec_c, z):
    a, b = spec_c
    return a * z + b


def no_sum_side(ident: str, N: int, z) -> TruncatedSeries:
    """Signed rational hook sum; z is a Fraction or a LaurentPoly symbol."""
    spec = NO_SPECS[ident]
    tag = FamilyTag(spec["family"])
    wmode = spec["weight"]
    order = 2 * N if wmode == "s" else N
    bound = N if wmode == "full" else 2 * N
    coeffs: dict[int, object] = {}
    for lam in enumerate_family(tag, bound):
        d = lam.durfee
        term = Fraction(-1 if (spec["sign"] and d % 2) else 1)
        if spec["box"] == "square":
            for h in lam.hooks():
                term = term * (1 - z * Fraction(1, h * h))
        else:
            o = spec["box"]
            c = _z_value(spec["c"], z)
            for r, col in lam.boxes():
                h = lam.hook(r, col)
                # "flip" reverses the diagonal orientation (type D)
                if spec["diag"] == "flip":
                    eps = 1 if r < col else -1
                else:
                    eps = 1 if r <= col else -1
                if spec["diag"] is True and r == col:
                    term = term * (1 + c * Fraction(1, h))
                else:
                    term = term * (1 + o * eps * c * Fraction(1, h))
        if wmode == "full":
            n = lam.weight
        elif wmode == "s":
            n = lam.weight
        else:
            if lam.weight % 2:
                raise AssertionError("odd weight in %r" % (tag,))
            n = lam.weight // 2
        coeffs[n] = coeffs.get(n, 0) + term
    return TruncatedSeries(order, coeffs)


def no_product_side(ident: str, N: int, z) -> TruncatedSeries:
    spec = NO_SPECS[ident]
    s_mode = spec["weight"] == "s"
    order = 2 * N if s_mode else N
    acc = TruncatedSeries.one(order)
    scale = 2 if s_mode else 1
    for base, exps in spec["rhs"]:
        e = 0
        zp = 1
        for deg in range(0, max(exps) + 1):
            cdeg = exps.get(deg, 0)
            if cdeg:
                e = e + cdeg * zp
            zp = zp * z
        step = {"S": 1, "T": scale, "T2": 2 * scale}[base]
        acc = acc * pochhammer(order, 1, step, step, e)
    return acc


def verify_no(ident: str, N: int, z_mode: str = "poly",
              z_samples=None) -> VerifyReport:
    t0 = time.time()
    if ident not in NO_SPECS:
        raise UnknownIdentity(ident)
    label = "S" if NO_SPECS[ident]["weight"] == "s" else "T"
    if z_mode == "poly":
        ring = PolyRing(("z",))
        z = ring.var("z")
        lhs = no_sum_side(ident, N, z)
        rhs = no_product_side(ident, N, z)
        mism = _first_mismatch(lhs, rhs, label)
        order = lhs.order
    elif z_mode == "samples":
        if z_samples is None:
            z_samples = tuple(Fraction(k, 2) for k in range(-N, N + 2))
        mism = None
        order = 2 * N if label == "S" else N
        for zval in z_samples:
            zval = Fraction(zval)
            lhs = no_sum_side(ident, N, zval)
            rhs = no_product_side(ident, N, zval)
            mism = _first_mismatch(lhs, rhs, label)
            if mism is not None:
                mism["z"] = repr(zval)
                break
    else:
        raise ParameterOutOfRange("z-mode must be poly or samples")
    return VerifyReport(
        identity=ident,
        params={"N": N, "z_mode": z_mode},
        ok=mism is None,
        order=order,
        first_mismatch=mism,
        seconds=time.time() - t0,
    )


# ---------------------------------------------------------------------------
# the (q,t)-extension
# ---------------------------------------------------------------------------

def _qt_ring(D: int) -> PolyRing:
    return PolyRing(("q", "t", "u"), total_cap=D, total_vars=("q", "t"))


def qtno_sum_side(N: int, D: int, ring: Optional[PolyRing] = None
                  ) -> TruncatedSeries:
    ring = ring or _qt_ring(D)
    one = ring.one()
    coeffs: dict[int, object] = {}
    for lam in enumerate_family(FamilyTag("P"), N):
        term = one
        for r, c in lam.boxes():
            a, l = lam.arm_leg(r, c)
            m1 = ring.monomial(1, q=a + 1, t=l)
            m2 = ring.monomial(1, q=a, t=l + 1)
            term = term * (one - ring.var("u") * m1)
            term = term * (one - ring.var("u", -1) * m2)
            term = term * _inv_unit(one - m1) * _inv_unit(one - m2)
        coeffs[lam.weight] = coeffs.get(lam.weight, 0) + term
    return TruncatedSeries(N, coeffs)


def qtno_product_side(N: int, D: int, ring: Optional[PolyRing] = None
                      ) -> TruncatedSeries:
    ring = ring or _qt_ring(D)
    acc = TruncatedSeries.one(N)
    u = ring.var("u")
    uinv = ring.var("u", -1)
    for k in range(1, N + 1):
        for i in range(1, D + 2):
            for j in range(1, D + 2):
                if i + j - 1 <= D:
                    acc = acc.apply_binomial(
                        -(u * ring.monomial(1, q=i, t=j - 1)), k, 1)
                    acc = acc.apply_binomial(
                        -(uinv * ring.monomial(1, q=i - 1, t=j)), k, 1)
                if i + j - 2 <= D:
                    acc = acc.apply_binomial(
                        -ring.monomial(1, q=i - 1, t=j - 1), k, -1)
                if i + j <= D:
                    acc = acc.apply_binomial(
                        -ring.monomial(1, q=i, t=j), k, -1)
    return acc


def verify_qtno(N: int, D: int) -> VerifyReport:
    t0 = time.time()
    ring = _qt_ring(D)
    lhs = qtno_sum_side(N, D, ring)
    rhs = qtno_product_side(N, D, ring)
    mism = _first_mismatch(lhs, rhs)
    return VerifyReport(
        identity="QTNO",
        params={"N": N, "degree_cap": D},
        ok=mism is None,
        order=N,
        first_mismatch=mism,
        seconds=time.time() - t0,
    )


def qtno_matches_qno_a(N: int, D: int) -> bool:
    """The q = t specialization agrees with the one-parameter deformation."""
    qt = qtno_sum_side(N, D)
    ring = _qno_ring(D, True)
    qa = qno_sum_side("QNO_A", N, ring)
    for n in range(N + 1):
        a = qt.coeff(n)
        spec: dict[tuple[int, ...], object] = {}
        if not isinstance(a, int):
            for (eq, et, eu), cval in a.coeffs.items():
                key = (eq + et, eu)
                spec[key] = spec.get(key, 0) + cval
        else:
            if a:
                spec[(0, 0)] = a
        b = qa.coeff(n)
        bco = {} if isinstance(b, int) and not b else (
            {(0, 0): b} if isinstance(b, int) else dict(b.coeffs))
        spec = {k: v for k, v in spec.items() if v}
        bco = {k: v for k, v in bco.items() if v}
        if spec != bco:
            return False
    return True
