"""Exact arithmetic: Laurent polynomials and truncated power series.

Everything here is exact -- coefficients are ints or Fractions, never
floats.  A PolyRing fixes a tuple of variable names and (optionally)
truncation caps; a LaurentPoly is a dict from exponent vectors to
coefficients.  TruncatedSeries is a power series in one distinguished
variable T, truncated at a fixed order, whose coefficients live in an
arbitrary ring (ints, Fractions, or LaurentPolys).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional


class InexactDivision(ArithmeticError):
    pass


class PolyRing:
    """A Laurent-polynomial ring with optional exponent caps.

    ``caps`` maps variable names to a maximal kept exponent (terms above
    are silently dropped -- i.e. the ring is truncated in that variable);
    ``total_cap`` drops terms whose total degree over ``total_vars``
    (default: all variables) exceeds the cap.  Negative exponents are
    always allowed.
    """

    __slots__ = ("variables", "caps", "total_cap", "total_idx")

    def __init__(
        self,
        variables: Iterable[str],
        caps: Optional[Mapping[str, int]] = None,
        total_cap: Optional[int] = None,
        total_vars: Optional[Iterable[str]] = None,
    ):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        self.caps = {}
        for name, cap in (caps or {}).items():
            if name not in self.variables:
                raise ValueError("cap on unknown variable %r" % (name,))
            self.caps[self.variables.index(name)] = cap
        self.total_cap = total_cap
        if total_vars is None:
            self.total_idx = tuple(range(len(self.variables)))
        else:
            self.total_idx = tuple(self.variables.index(v) for v in total_vars)

    def _keep(self, exps: tuple[int, ...]) -> bool:
        for i, cap in self.caps.items():
            if exps[i] > cap:
                return False
        if self.total_cap is not None:
            if sum(exps[i] for i in self.total_idx) > self.total_cap:
                return False
        return True

    def poly(self, coeffs: Mapping[tuple[int, ...], object]) -> "LaurentPoly":
        return LaurentPoly(self, coeffs)

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    def one(self) -> "LaurentPoly":
        return self.const(1)

    def const(self, c) -> "LaurentPoly":
        return LaurentPoly(self, {(0,) * len(self.variables): c})

    def monomial(self, coeff, **exps) -> "LaurentPoly":
        """coeff * prod var^e for the named variables (others exponent 0)."""
        vec = [0] * len(self.variables)
        for name, e in exps.items():
            vec[self.variables.index(name)] = e
        return LaurentPoly(self, {tuple(vec): coeff})

    def var(self, name: str, power: int = 1) -> "LaurentPoly":
        return self.monomial(1, **{name: power})

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.caps == other.caps
            and self.total_cap == other.total_cap
            and self.total_idx == other.total_idx
        )

    def __hash__(self):
        return hash((self.variables, tuple(sorted(self.caps.items())),
                     self.total_cap, self.total_idx))

    def __repr__(self):
        return "PolyRing(%r)" % (self.variables,)


class LaurentPoly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: PolyRing, coeffs: Mapping[tuple[int, ...], object]):
        self.ring = ring
        clean = {}
        for exps, c in coeffs.items():
            if c and ring._keep(exps):
                clean[exps] = c
        self.coeffs = clean

    # -- basic structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_term(self):
        return self.coeffs.get((0,) * len(self.ring.variables), 0)

    def coeff(self, **exps):
        vec = [0] * len(self.ring.variables)
        for name, e in exps.items():
            vec[self.ring.variables.index(name)] = e
        return self.coeffs.get(tuple(vec), 0)

    def terms(self):
        return sorted(self.coeffs.items())

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.ring.variables != self.ring.variables:
                raise ValueError("mixed rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for exps, c in other.coeffs.items():
            out[exps] = out.get(exps, 0) + c
        return LaurentPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.ring.zero()
            return LaurentPoly(
                self.ring, {e: c * other for e, c in self.coeffs.items()}
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[tuple[int, ...], object] = {}
        keep = self.ring._keep
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if keep(e):
                    out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers: use divide_exact")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n > 1
            if base_needed:
                base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for exps, c in self.terms():
            mono = "*".join(
                "%s^%d" % (v, e)
                for v, e in zip(self.ring.variables, exps)
                if e
            )
            bits.append("%s%s" % (c, "*" + mono if mono else ""))
        return " + ".join(bits)

    # -- division and substitution ----------------------------------------

    def divide_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self/other; raises InexactDivision otherwise.

        Lex-leading-term elimination.  Exponents of the quotient are
        bounded below coordinatewise by min(self) - max(other), which
        bounds the loop for inexact inputs too.
        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self.ring.zero()
        nvars = len(self.ring.variables)
        lo = [
            min(e[i] for e in self.coeffs) - max(e[i] for e in other.coeffs)
            for i in range(nvars)
        ]
        lead_b = max(other.coeffs)
        cb = other.coeffs[lead_b]
        rem = dict(self.coeffs)
        quot: dict[tuple[int, ...], object] = {}
        while rem:
            lead_r = max(rem)
            e = tuple(a - b for a, b in zip(lead_r, lead_b))
            if any(e[i] < lo[i] for i in range(nvars)):
                raise InexactDivision("quotient exponent out of range")
            cr = rem[lead_r]
            if isinstance(cr, int) and isinstance(cb, int):
                c = cr // cb if cr % cb == 0 else Fraction(cr, cb)
            else:
                c = Fraction(cr) / Fraction(cb)
            quot[e] = quot.get(e, 0) + c
            for eb, vb in other.coeffs.items():
                key = tuple(a + b for a, b in zip(e, eb))
                nv = rem.get(key, 0) - c * vb
                if nv:
                    rem[key] = nv
                elif key in rem:
                    del rem[key]
        out = LaurentPoly(self.ring, quot)
        if self.ring.caps or self.ring.total_cap is not None:
            return out
        if out * other != self:
            raise InexactDivision("not an exact quotient")
        return out

    def subs_unit(self, name: str, coeff, **exps) -> "LaurentPoly":
        """Substitute variable ``name`` by the unit monomial coeff*prod v^e."""
        idx = self.ring.variables.index(name)
        vec = [0] * len(self.ring.variables)
        for v, e in exps.items():
            vec[self.ring.variables.index(v)] = e
        out: dict[tuple[int, ...], object] = {}
        for old, c in self.coeffs.items():
            k = old[idx]
            new = list(old)
            new[idx] = 0
            for i, e in enumerate(vec):
                new[i] += e * k
            if coeff != 1:
                c = c * (coeff ** k if k >= 0 else Fraction(1, coeff ** (-k)))
            key = tuple(new)
            out[key] = out.get(key, 0) + c
        return LaurentPoly(self.ring, out)


class PolyFraction:
    """A formal quotient of two ring elements, compared by cross-products."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num = num
        self.den = den

    def __eq__(self, other):
        if isinstance(other, PolyFraction):
            return self.num * other.den == other.num * self.den
        return self.num == self.den * other

    def __mul__(self, other):
        if isinstance(other, PolyFraction):
            return PolyFraction(self.num * other.num, self.den * other.den)
        return PolyFraction(self.num * other, self.den)

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, PolyFraction):
            other = PolyFraction(self.den * other, self.den)
        return PolyFraction(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return PolyFraction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other if isinstance(other, PolyFraction)
                       else PolyFraction(self.den * (-other), self.den))

    def __repr__(self):
        return "(%r) / (%r)" % (self.num, self.den)


# ---------------------------------------------------------------------------
# truncated power series in one variable
# ---------------------------------------------------------------------------

def _binomials(e, jmax: int) -> list:
    """binom(e, j) for j = 0..jmax; e may be an int, Fraction or poly."""
    out = [1]
    num = 1
    for j in range(1, jmax + 1):
        num = num * (e - (j - 1))
        out.append(num * Fraction(1, _factorial(j)))
    return out


def _factorial(n: int) -> int:
    f = 1
    for k in range(2, n + 1):
        f *= k
    return f


class TruncatedSeries:
    """sum_{n=0}^{order} c_n T^n with exact coefficients in any ring."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Mapping[int, object]):
        self.order = order
        self.coeffs = {n: c for n, c in coeffs.items() if 0 <= n <= order and c}

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, {0: 1})

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, {})

    def coeff(self, n: int):
        return self.coeffs.get(n, 0)

    def __add__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        out = {n: c for n, c in self.coeffs.items() if n <= order}
        for n, c in other.coeffs.items():
            if n <= order:
                out[n] = out.get(n, 0) + c
        return TruncatedSeries(order, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.order, {n: -c for n, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries(self.order, {0: other})

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(
                self.order, {n: c * other for n, c in self.coeffs.items()}
            )
        order = min(self.order, other.order)
        out: dict[int, object] = {}
        for n1, c1 in self.coeffs.items():
            if n1 > order:
                continue
            for n2, c2 in other.coeffs.items():
                n = n1 + n2
                if n <= order:
                    out[n] = out.get(n, 0) + c1 * c2
        return TruncatedSeries(order, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = TruncatedSeries.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        order = min(self.order, other.order)
        for n in range(order + 1):
            a, b = self.coeff(n), other.coeff(n)
            if a != b and not _coeff_equal(a, b):
                return False
        return True

    def __repr__(self):
        bits = ["(%r)*T^%d" % (c, n) for n, c in sorted(self.coeffs.items())]
        return " + ".join(bits) if bits else "0"

    def inverse(self) -> "TruncatedSeries":
        c0 = self.coeff(0)
        if c0 != 1:
            raise ValueError("inverse needs constant term 1")
        out = {0: 1}
        for n in range(1, self.order + 1):
            acc = 0
            for k in range(1, n + 1):
                fk = self.coeff(k)
                if fk:
                    acc = acc + fk * out.get(n - k, 0)
            if acc:
                out[n] = -acc
        return TruncatedSeries(self.order, out)

    def log(self) -> "TruncatedSeries":
        """log of a series with constant term 1 (rational coefficients)."""
        if self.coeff(0) != 1:
            raise ValueError("log needs constant term 1")
        g: dict[int, object] = {}
        for n in range(1, self.order + 1):
            acc = self.coeff(n) * n
            for k in range(1, n):
                gk = g.get(k, 0)
                if gk:
                    acc = acc - gk * k * self.coeff(n - k)
            if acc:
                g[n] = acc * Fraction(1, n)
        return TruncatedSeries(self.order, g)

    def exp(self) -> "TruncatedSeries":
        if self.coeff(0):
            raise ValueError("exp needs zero constant term")
        h = {0: 1}
        for n in range(1, self.order + 1):
            acc = 0
            for k in range(1, n + 1):
                gk = self.coeff(k)
                if gk:
                    acc = acc + gk * k * h.get(n - k, 0)
            if acc:
                h[n] = acc * Fraction(1, n)
        return TruncatedSeries(self.order, h)

    def pow_sym(self, e) -> "TruncatedSeries":
        """self^e for a symbolic (or rational) exponent: exp(e * log self)."""
        return (self.log() * e).exp()

    def apply_binomial(self, c, m: int, e) -> "TruncatedSeries":
        """Multiply by (1 + c*T^m)^e; e may be an int or symbolic scalar."""
        if m <= 0:
            raise ValueError("need a positive T-power")
        jmax = self.order // m
        binom = _binomials(e, jmax)
        factor: dict[int, object] = {}
        cj = 1
        for j in range(jmax + 1):
            factor[j * m] = binom[j] * cj
            cj = cj * c
        return self * TruncatedSeries(self.order, factor)


def _coeff_equal(a, b) -> bool:
    """Equality up to int/Fraction/constant-poly coercion."""
    try:
        return (a - b) == 0 or not (a - b)
    except TypeError:
        return False


def pochhammer(order: int, c, start: int, step: int, e=1) -> TruncatedSeries:
    """prod_{k>=0} (1 - c*T^(start + k*step))^e, truncated at ``order``.

    ``start`` must be positive (the k=0 factor already carries a T power);
    ``e`` may be an int or a symbolic scalar exponent.
    """
    if start <= 0 or step <= 0:
        raise ValueError("need positive start and step")
    out = TruncatedSeries.one(order)
    m = start
    while m <= order:
        out = out.apply_binomial(-c, m, e)
        m += step
    return out


def euler_products(order: int) -> TruncatedSeries:
    """(T; T)_infinity = prod (1 - T^k), truncated."""
    return pochhammer(order, 1, 1, 1)


def partition_numbers(order: int) -> list[int]:
    """p(0), ..., p(order) via the pentagonal recurrence."""
    p = [1] + [0] * order
    for n in range(1, order + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 == 1 else -1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p
