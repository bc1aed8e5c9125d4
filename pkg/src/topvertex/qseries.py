"""Exact arithmetic in the field Q(t), t = q^(1/24).

Every scalar in the package lives here: brackets ``[n] = q^(n/2) - q^(-n/2)``,
specialised Schur functions, vertex values, Bogoliubov coefficients.  All
exponents are stored in units of ``t`` so that ``q^(1/6)``, ``q^(1/4)`` and
``q^(1/2)`` are ordinary integer powers.

Representation
--------------
A nonzero :class:`QRat` is held in the reduced form::

    c * t^s * P(t^g) / (prod_k Phi_k(t)^e_k * G(t))

where ``c`` is a nonzero rational, ``P`` is a primitive integer polynomial
with ``P(0) > 0``, ``g`` is the largest step such that the numerator is a
polynomial in ``t^g`` (0 for a single term), ``Phi_k`` are cyclotomic
polynomials in ``t`` and ``G`` is a primitive integer polynomial with
``G(0) > 0`` and no cyclotomic factor.  Numerator and denominator are
coprime.  Since ``Phi_k`` are irreducible over Q this is a refinement of the
GCD-reduced fraction, so it is unique and equality is a tuple comparison.

Denominators produced by q-brackets are products of ``Phi_k`` only, so the
hot paths never compute a polynomial GCD: cancellation is trial division by
the known factors.  ``G`` only appears after dividing by something that is
not a product of brackets, and is handled by a slower general path.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Callable, Iterable, Union

from . import kernels

T_PER_Q = 24

Rational = Union[int, Fraction]


class VanishingDenominator(ArithmeticError):
    """Evaluation point is a pole; the caller should pick another point."""


# ---------------------------------------------------------------------------
# integer polynomial helpers (dense lists, lowest degree first)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return tuple(sorted(set(small + [n // d for d in small])))


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> tuple[int, ...]:
    """Coefficients of the k-th cyclotomic polynomial."""
    if k < 1:
        raise ValueError("cyclotomic index must be positive")
    poly = [-1] + [0] * (k - 1) + [1]
    for d in divisors(k)[:-1]:
        poly = kernels.divexact(poly, list(cyclotomic(d)))
    return tuple(poly)


_phi_cache: list[int] = [0, 1]


def _totients(upto: int) -> list[int]:
    if len(_phi_cache) <= upto:
        n = max(upto + 1, 2 * len(_phi_cache))
        phi = list(range(n))
        for p in range(2, n):
            if phi[p] == p:
                for m in range(p, n, p):
                    phi[m] -= phi[m] // p
        _phi_cache[:] = phi
    return _phi_cache


def _compress(c: list[int]) -> tuple[int, list[int]]:
    """Largest step g with c supported on multiples of g (0 if one term)."""
    g = 0
    for i in range(1, len(c)):
        if c[i]:
            g = gcd(g, i)
            if g == 1:
                return 1, c
    if g == 0:
        return 0, c[:1]
    return g, c[::g]


def _at_step(g: int, p, h: int) -> list[int]:
    """Dense coefficients of P(t^g) as a polynomial in t^h (h divides g)."""
    if g == h or len(p) == 1:
        return list(p)
    f = g // h
    out = [0] * ((len(p) - 1) * f + 1)
    out[::f] = p
    return out


def _pmul(g1: int, p1, g2: int, p2) -> tuple[int, list[int]]:
    if len(p1) == 1 and len(p2) == 1:
        return 0, [p1[0] * p2[0]]
    h = gcd(g1, g2)
    g, out = _compress(kernels.mul(_at_step(g1, p1, h), _at_step(g2, p2, h)))
    return g * h, out


@lru_cache(maxsize=None)
def _phi_t(k: int) -> tuple[int, tuple[int, ...]]:
    g, c = _compress(list(cyclotomic(k)))
    return g, tuple(c)


@lru_cache(maxsize=16384)
def _cyclo_product(items: tuple[tuple[int, int], ...]) -> tuple[int, tuple[int, ...]]:
    """prod Phi_k(t)^e over ``items`` as a compressed polynomial."""
    g, p = 0, [1]
    for k, e in items:
        gk, ck = _phi_t(k)
        for _ in range(e):
            g, p = _pmul(g, p, gk, ck)
    return g, tuple(p)


def _norm(scale: Fraction, s: int, h: int, coeffs: list[int]):
    """Normal form (c, s, g, P) of ``scale * t^s * sum coeffs[i] t^(h i)``."""
    lo = 0
    n = len(coeffs)
    while lo < n and not coeffs[lo]:
        lo += 1
    if lo == n or not scale:
        return Fraction(0), 0, 0, ()
    hi = n - 1
    while not coeffs[hi]:
        hi -= 1
    c = coeffs[lo : hi + 1]
    s += h * lo
    ct = gcd(*c)
    if c[0] < 0:
        ct = -ct
    if ct != 1:
        c = [x // ct for x in c]
        scale = scale * ct
    g, c = _compress(c)
    return scale, s, g * h, tuple(c)


def _cancel(c, s, g, p, den: dict[int, int]):
    """Strip from P every Phi_k present in ``den`` (mutated)."""
    while den and g:
        hits = []
        tested: dict[int, bool] = {}
        pl = list(p)
        for k in den:
            d = k // gcd(k, g)
            ok = tested.get(d)
            if ok is None:
                ok = tested[d] = kernels.divexact(pl, list(cyclotomic(d))) is not None
            if ok:
                hits.append(k)
        if not hits:
            break
        hits.sort()
        h, dk = _cyclo_product(tuple((k, 1) for k in hits))
        step = gcd(g, h)
        quo = kernels.divexact(_at_step(g, p, step), _at_step(h, dk, step))
        if quo is None:  # pragma: no cover - hits are coprime divisors
            raise AssertionError("cyclotomic cancellation failed")
        for k in hits:
            if den[k] == 1:
                del den[k]
            else:
                den[k] -= 1
        c, s, g, p = _norm(c, s, step, quo)
    return c, s, g, p, den


def _lincomb(terms) -> tuple[Fraction, int, int, tuple[int, ...]]:
    """Sum of ``c * t^s * P(t^g)`` over (c, s, g, P) terms, normalised."""
    s0 = min(t[1] for t in terms)
    h = 0
    den_l = 1
    for c, s, g, _ in terms:
        h = gcd(h, g, s - s0)
        den_l = lcm(den_l, c.denominator)
    if h == 0:
        h = 1
    length = 0
    for _, s, g, p in terms:
        end = (s - s0) // h + (len(p) - 1) * (g // h) + 1
        if end > length:
            length = end
    acc = [0] * length
    for c, s, g, p in terms:
        m = c.numerator * (den_l // c.denominator)
        base = (s - s0) // h
        if len(p) == 1:
            acc[base] += m * p[0]
            continue
        st = g // h
        end = base + (len(p) - 1) * st + 1
        acc[base:end:st] = [x + m * y for x, y in zip(acc[base:end:st], p)]
    return _norm(Fraction(1, den_l), s0, h, acc)


def _prim(a: list[int]) -> list[int]:
    while a and not a[-1]:
        a = a[:-1]
    if not a:
        return a
    ct = gcd(*a)
    if a[-1] < 0:
        ct = -ct
    return [x // ct for x in a]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b."""
    r = list(a)
    lead = b[-1]
    m = len(b)
    while len(r) >= m and any(r):
        top = r[-1]
        shift = len(r) - m
        r = [x * lead for x in r]
        for j in range(m):
            r[shift + j] -= top * b[j]
        r.pop()
        while r and not r[-1]:
            r.pop()
    return r


def _poly_gcd(a: list[int], b: list[int]) -> list[int]:
    a, b = _prim(a), _prim(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _prim(r)
    return _prim(a)


@lru_cache(maxsize=64)
def _candidates(deg: int) -> tuple[tuple[int, int], ...]:
    """(phi(d), d) with phi(d) <= deg, ordered by phi(d)."""
    bound = max(2, 2 * deg * deg + 2)  # phi(d) >= sqrt(d/2)
    phi = _totients(bound)
    return tuple(sorted((phi[d], d) for d in range(1, bound + 1) if phi[d] <= deg))


def _surely_nonzero_at_root(p: list[int], d: int) -> bool:
    """Floating-point filter: True only if P(exp(2 pi i/d)) is clearly nonzero."""
    z = cmath.exp(2j * cmath.pi / d)
    acc = 0j
    for a in reversed(p):
        acc = acc * z + a
    scale = sum(abs(a) for a in p)
    return abs(acc) > 1e-9 * scale * len(p)


def _split_cyclotomic(g: int, p) -> tuple[dict[int, int], list[int]]:
    """Factor P(t^g) as prod Phi_k(t)^e times a cyclotomic-free rest.

    The rest is returned as coefficients in ``t^g``.
    """
    found: dict[int, int] = {}
    rest = list(p)
    if g == 0 or len(rest) == 1:
        return found, rest
    for phi_val, d in _candidates(len(rest) - 1):
        if phi_val > len(rest) - 1:
            break
        if len(rest) > 16 and _surely_nonzero_at_root(rest, d):
            continue
        phi_d = list(cyclotomic(d))
        while len(rest) > 1:
            quo = kernels.divexact(rest, phi_d)
            if quo is None:
                break
            rest = quo
            for j in divisors(g):
                k = d * j
                if k // gcd(k, g) == d:
                    found[k] = found.get(k, 0) + 1
    return found, rest


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """Finite sum of rational multiples of powers of t; immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, Rational] | Iterable[tuple[int, Rational]] = ()):
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[int, Fraction] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), Fraction(0)) + Fraction(c)
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> int:
        return self._terms[0][0]

    def max_exp(self) -> int:
        return self._terms[-1][0]

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        return LaurentPoly(list(self._terms) + list(other._terms))

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly([(e, -c) for e, c in self._terms])

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        return LaurentPoly(
            [(e1 + e2, c1 * c2) for e1, c1 in self._terms for e2, c2 in other._terms]
        )

    def evaluate(self, t0: Rational) -> Fraction:
        t0 = Fraction(t0)
        return sum((c * t0**e for e, c in self._terms), Fraction(0))

    def to_json(self) -> list[list]:
        return [[e, f"{c.numerator}/{c.denominator}"] for e, c in self._terms]

    @classmethod
    def from_json(cls, data: list) -> LaurentPoly:
        return cls([(int(e), Fraction(c)) for e, c in data])

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self._terms)!r})"


# ---------------------------------------------------------------------------
# the field element


def _fmt_q(e: int) -> str:
    r = Fraction(e, T_PER_Q)
    if r == 0:
        return ""
    if r == 1:
        return "q"
    return f"q^{r}" if r.denominator == 1 else f"q^({r})"


class QRat:
    """Element of Q(q^(1/24)) in canonical reduced form.  Immutable."""

    __slots__ = ("_c", "_s", "_g", "_p", "_den", "_gen", "_hash")

    def __init__(self, value: Rational = 0):
        c = Fraction(value)
        self._set(c, 0, 0, (1,) if c else (), (), None)

    def _set(self, c, s, g, p, den, gen) -> None:
        self._c = c
        self._s = s
        self._g = g
        self._p = p
        self._den = den
        self._gen = gen
        self._hash = None

    @classmethod
    def _raw(cls, c, s, g, p, den=(), gen=None) -> QRat:
        obj = object.__new__(cls)
        if not c:
            obj._set(Fraction(0), 0, 0, (), (), None)
        else:
            obj._set(c, s, g, p, den, gen)
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def monomial(cls, exp: int, coeff: Rational = 1) -> QRat:
        """``coeff * t^exp``."""
        return cls._raw(Fraction(coeff), int(exp), 0, (1,))

    @classmethod
    def qpow(cls, r: Rational) -> QRat:
        """``q^r``; ``24 r`` must be an integer."""
        e = Fraction(r) * T_PER_Q
        if e.denominator != 1:
            raise ValueError(f"q^{r} is not a power of q^(1/24)")
        return cls.monomial(int(e))

    @classmethod
    def from_laurent(cls, poly: LaurentPoly | dict) -> QRat:
        if not isinstance(poly, LaurentPoly):
            poly = LaurentPoly(poly)
        if poly.is_zero():
            return ZERO
        terms = list(poly.items())
        s0 = terms[0][0]
        den_l = lcm(*(c.denominator for _, c in terms))
        acc = [0] * (terms[-1][0] - s0 + 1)
        for e, c in terms:
            acc[e - s0] = c.numerator * (den_l // c.denominator)
        return cls._raw(*_norm(Fraction(1, den_l), s0, 1, acc))

    @classmethod
    def from_fraction(cls, num: LaurentPoly, den: LaurentPoly) -> QRat:
        return cls.from_laurent(num) / cls.from_laurent(den)

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def _den_poly(self) -> tuple[int, list[int]]:
        g, p = _cyclo_product(self._den)
        if self._gen is not None:
            g, p = _pmul(g, p, *self._gen)
        return g, list(p)

    def _sign_fix(self) -> int:
        e1 = dict(self._den).get(1, 0)
        return -1 if e1 % 2 else 1

    @property
    def numerator(self) -> LaurentPoly:
        """Numerator of the canonical fraction (denominator has D(0) > 0)."""
        sign = self._sign_fix()
        c = self._c * sign
        g = self._g
        return LaurentPoly([(self._s + g * i, c * a) for i, a in enumerate(self._p) if a])

    @property
    def denominator(self) -> LaurentPoly:
        """Primitive integer polynomial, lowest exponent 0, positive constant."""
        sign = self._sign_fix()
        g, p = self._den_poly()
        return LaurentPoly([(g * i, sign * a) for i, a in enumerate(p) if a])

    def is_laurent(self) -> bool:
        return not self._den and self._gen is None

    def canonical_key(self):
        return (self._c, self._s, self._g, self._p, self._den, self._gen)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QRat(other)
        if not isinstance(other, QRat):
            return NotImplemented
        return (
            self._c == other._c
            and self._s == other._s
            and self._g == other._g
            and self._p == other._p
            and self._den == other._den
            and self._gen == other._gen
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.canonical_key())
        return self._hash

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> QRat:
        return QRat._raw(-self._c, self._s, self._g, self._p, self._den, self._gen)

    def __pos__(self) -> QRat:
        return self

    def __add__(self, other) -> QRat:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return qsum((self, other))

    __radd__ = __add__

    def __sub__(self, other) -> QRat:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return qsum((self, -other))

    def __rsub__(self, other) -> QRat:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return qsum((other, -self))

    def __mul__(self, other) -> QRat:
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return QRat._raw(self._c * other, self._s, self._g, self._p, self._den, self._gen)
        if not isinstance(other, QRat):
            return NotImplemented
        return _mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other) -> QRat:
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("QRat division by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, QRat):
            return NotImplemented
        return _mul(self, other.inverse())

    def __rtruediv__(self, other) -> QRat:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return _mul(other, self.inverse())

    def __pow__(self, n: int) -> QRat:
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        out = ONE
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> QRat:
        if not self._c:
            raise ZeroDivisionError("QRat division by zero")
        found, rest = _split_cyclotomic(self._g, self._p)
        g, p = _cyclo_product(self._den)
        if self._gen is not None:
            g, p = _pmul(g, p, *self._gen)
        c = 1 / self._c
        gen = None
        if len(rest) == 1:
            c = c / rest[0]
        else:
            if rest[0] < 0:
                rest = [-x for x in rest]
                c = -c
            gen = (self._g, tuple(rest))
        c, s, g, p = _norm(c, -self._s, g, list(p))
        den = tuple(sorted(found.items()))
        return QRat._raw(c, s, g, p, den, gen)

    def invert_q(self) -> QRat:
        """Substitute q -> 1/q."""
        if not self._c:
            return self
        c = self._c
        p = self._p[::-1]
        s = -self._s - self._g * (len(self._p) - 1)
        for k, e in self._den:
            s += e * (len(cyclotomic(k)) - 1)
            if k == 1 and e % 2:
                c = -c
        gen = self._gen
        if gen is not None:
            gg, gp = gen
            s += gg * (len(gp) - 1)
            gp = gp[::-1]
            if gp[0] < 0:
                gp = tuple(-x for x in gp)
                c = -c
            gen = (gg, gp)
        if p[0] < 0:
            p = tuple(-x for x in p)
            c = -c
        return QRat._raw(c, s, self._g, p, self._den, gen)

    def eval_at(self, t0: Rational) -> Fraction:
        """Exact value at ``t = t0``; raises VanishingDenominator at a pole."""
        t0 = Fraction(t0)
        if not t0:
            raise VanishingDenominator("t0 must be nonzero")
        if not self._c:
            return Fraction(0)
        den = Fraction(1)
        for k, e in self._den:
            den *= _horner(cyclotomic(k), t0) ** e
        if self._gen is not None:
            gg, gp = self._gen
            den *= _horner(gp, t0**gg)
        if not den:
            raise VanishingDenominator(f"pole at t = {t0}")
        num = self._c * t0**self._s * _horner(self._p, t0**self._g if self._g else t0)
        return num / den

    # -- serialisation ----------------------------------------------------

    def to_json(self) -> dict:
        return {"num": self.numerator.to_json(), "den": self.denominator.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> QRat:
        num = LaurentPoly.from_json(data["num"])
        den = LaurentPoly.from_json(data["den"])
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in serialized QRat")
        return cls.from_fraction(num, den)

    def __str__(self) -> str:
        def fmt(poly: LaurentPoly) -> str:
            parts = []
            for e, c in poly.items():
                mono = _fmt_q(e)
                if not mono:
                    parts.append(str(c))
                elif c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append("-" + mono)
                else:
                    parts.append(f"{c}*{mono}")
            return " + ".join(parts).replace("+ -", "- ") or "0"

        num = fmt(self.numerator)
        if self.is_laurent():
            return num
        return f"({num})/({fmt(self.denominator)})"

    def __repr__(self) -> str:
        return f"QRat({self})"


def _horner(p, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for a in reversed(p):
        acc = acc * x + a
    return acc


def _coerce(x):
    if isinstance(x, QRat):
        return x
    if isinstance(x, (int, Fraction)):
        return QRat(x)
    return NotImplemented


def _mul(a: QRat, b: QRat) -> QRat:
    if not a._c or not b._c:
        return ZERO
    if a._gen is not None or b._gen is not None:
        return _generic_mul(a, b)
    ca, sa, ga, pa = a._c, a._s, a._g, a._p
    cb, sb, gb, pb = b._c, b._s, b._g, b._p
    da = dict(a._den)
    db = dict(b._den)
    if db and ga:
        ca, sa, ga, pa, db = _cancel(ca, sa, ga, pa, db)
    if da and gb:
        cb, sb, gb, pb, da = _cancel(cb, sb, gb, pb, da)
    for k, e in db.items():
        da[k] = da.get(k, 0) + e
    g, p = _pmul(ga, pa, gb, pb)
    return QRat._raw(ca * cb, sa + sb, g, tuple(p), tuple(sorted(da.items())))


def qsum(values: Iterable) -> QRat:
    """Sum with a single common-denominator pass and one reduction."""
    vals = []
    generic = False
    for v in values:
        v = _coerce(v)
        if v is NotImplemented:
            raise TypeError("qsum expects QRat or rational values")
        if v._c:
            vals.append(v)
            generic = generic or v._gen is not None
    if not vals:
        return ZERO
    if len(vals) == 1:
        return vals[0]
    if generic:
        out = vals[0]
        for v in vals[1:]:
            out = _generic_add(out, v)
        return out
    common: dict[int, int] = {}
    for v in vals:
        for k, e in v._den:
            if e > common.get(k, 0):
                common[k] = e
    ctuple = tuple(sorted(common.items()))
    terms = []
    for v in vals:
        if v._den == ctuple:
            terms.append((v._c, v._s, v._g, v._p))
            continue
        dv = dict(v._den)
        missing = tuple((k, e - dv.get(k, 0)) for k, e in ctuple if e > dv.get(k, 0))
        h, x = _cyclo_product(missing)
        g, p = _pmul(v._g, v._p, h, x)
        terms.append((v._c, v._s, g, p))
    c, s, g, p = _lincomb(terms)
    if not c:
        return ZERO
    c, s, g, p, den = _cancel(c, s, g, p, common)
    return QRat._raw(c, s, g, p, tuple(sorted(den.items())))


def qprod(values: Iterable) -> QRat:
    out = ONE
    for v in values:
        out = out * v
    return out


# ---------------------------------------------------------------------------
# general path: some denominator factor is not cyclotomic


def _full(v: QRat) -> tuple[Fraction, int, list[int], list[int]]:
    """(c, s, N, D) with N, D dense in t."""
    num = _at_step(v._g, v._p, 1) if v._g else list(v._p)
    g, d = v._den_poly()
    den = _at_step(g, d, 1) if g else list(d)
    return v._c, v._s, num, den


def _rebuild(c: Fraction, s: int, num: list[int], den: list[int], ks: Iterable[int]) -> QRat:
    """Canonical QRat from a coprime fraction with dense t-coefficients."""
    factors: dict[int, int] = {}
    for k in sorted(set(ks)):
        phi = list(cyclotomic(k))
        while len(den) > 1:
            quo = kernels.divexact(den, phi)
            if quo is None:
                break
            den = quo
            factors[k] = factors.get(k, 0) + 1
    gen = None
    if len(den) == 1:
        c = c / den[0]
    else:
        ct = gcd(*den)
        if den[0] < 0:
            ct = -ct
        den = [x // ct for x in den]
        c = c / ct
        g, dc = _compress(den)
        gen = (g, tuple(dc))
    c, s, g, p = _norm(c, s, 1, num)
    return QRat._raw(c, s, g, p, tuple(sorted(factors.items())), gen)


def _strip_low(p: list[int]) -> tuple[int, list[int]]:
    i = 0
    while i < len(p) and not p[i]:
        i += 1
    return i, p[i:]


def _generic_mul(a: QRat, b: QRat) -> QRat:
    ca, sa, na, da = _full(a)
    cb, sb, nb, db = _full(b)
    g1 = _poly_gcd(na, db)
    g2 = _poly_gcd(nb, da)
    if len(g1) > 1:
        na, db = kernels.divexact(na, g1), kernels.divexact(db, g1)
    if len(g2) > 1:
        nb, da = kernels.divexact(nb, g2), kernels.divexact(da, g2)
    ks = [k for k, _ in a._den] + [k for k, _ in b._den]
    return _rebuild(ca * cb, sa + sb, kernels.mul(na, nb), kernels.mul(da, db), ks)


def _generic_add(a: QRat, b: QRat) -> QRat:
    if not a._c:
        return b
    if not b._c:
        return a
    ca, sa, na, da = _full(a)
    cb, sb, nb, db = _full(b)
    g = _poly_gcd(da, db)
    ea = kernels.divexact(db, g)  # L / da
    eb = kernels.divexact(da, g)  # L / db
    common = kernels.mul(da, ea)
    s0 = min(sa, sb)
    c, s, h, p = _lincomb(
        [
            (ca, sa, 1, tuple(kernels.mul(na, ea))),
            (cb, sb, 1, tuple(kernels.mul(nb, eb))),
        ]
    )
    if not c:
        return ZERO
    num = _at_step(h, p, 1) if h else list(p)
    red = _poly_gcd(num, common)
    if len(red) > 1:
        num = kernels.divexact(num, red)
        common = kernels.divexact(common, red)
    low, num = _strip_low(num)
    ks = [k for k, _ in a._den] + [k for k, _ in b._den]
    del s0
    return _rebuild(c, s + low, num, common, ks)


ZERO = QRat(0)
ONE = QRat(1)


# ---------------------------------------------------------------------------
# module-level operations


def arith(a: QRat, b: QRat, op: str) -> QRat:
    """Field operation by name: add, sub, mul or div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def q_power(r: Rational) -> QRat:
    return QRat.qpow(r)


def t_power(e: int) -> QRat:
    return QRat.monomial(e)


@lru_cache(maxsize=None)
def bracket(n: int) -> QRat:
    """``[n] = q^(n/2) - q^(-n/2)``."""
    if n == 0:
        return ZERO
    if n < 0:
        return -bracket(-n)
    return QRat._raw(Fraction(-1), -12 * n, 24 * n, (1, -1))


@lru_cache(maxsize=None)
def inverse_bracket(n: int) -> QRat:
    """``1/[n]``, built directly from the factorisation of t^(24n) - 1."""
    if n == 0:
        raise ZeroDivisionError("[0] = 0")
    if n < 0:
        return -inverse_bracket(-n)
    den = tuple((k, 1) for k in divisors(24 * n))
    return QRat._raw(Fraction(1), 12 * n, 0, (1,), den)


@lru_cache(maxsize=None)
def bracket_factorial(n: int) -> QRat:
    """``[1][2]...[n]``; ``[0]! = 1``."""
    if n < 0:
        raise ValueError("bracket_factorial needs n >= 0")
    if n == 0:
        return ONE
    return bracket_factorial(n - 1) * bracket(n)


@lru_cache(maxsize=None)
def inverse_bracket_factorial(n: int) -> QRat:
    if n < 0:
        raise ValueError("bracket_factorial needs n >= 0")
    if n == 0:
        return ONE
    return inverse_bracket_factorial(n - 1) * inverse_bracket(n)


def invert_q(a: QRat) -> QRat:
    return a.invert_q()


def eval_at(a: QRat, t0: Rational) -> Fraction:
    return a.eval_at(t0)


# ---------------------------------------------------------------------------
# scalar fields: exact, or evaluated at a rational point


@dataclass(frozen=True)
class ExactField:
    """Computations carried out exactly in Q(t)."""

    name: str = "exact"

    @property
    def zero(self) -> QRat:
        return ZERO

    @property
    def one(self) -> QRat:
        return ONE

    def const(self, x: Rational) -> QRat:
        return QRat(x)

    def tpow(self, e: int) -> QRat:
        return QRat.monomial(e)

    def qpow(self, r: Rational) -> QRat:
        return QRat.qpow(r)

    def bracket(self, n: int) -> QRat:
        return bracket(n)

    def inverse_bracket(self, n: int) -> QRat:
        return inverse_bracket(n)

    def inverse_bracket_factorial(self, n: int) -> QRat:
        return inverse_bracket_factorial(n)

    def sum(self, values: Iterable) -> QRat:
        return qsum(values)

    def flip(self, fn: Callable[[ExactField], QRat]) -> QRat:
        """Value of ``fn`` with q replaced by 1/q."""
        return fn(self).invert_q()

    def lift(self, x: QRat) -> QRat:
        return x


@dataclass(frozen=True)
class PointField:
    """Computations carried out in Q after substituting ``t = t0``."""

    t0: Fraction

    def __post_init__(self):
        if not self.t0 or abs(self.t0) == 1:
            raise ValueError("evaluation point must avoid 0 and roots of unity")

    @property
    def name(self) -> str:
        return f"t={self.t0}"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def const(self, x: Rational) -> Fraction:
        return Fraction(x)

    def tpow(self, e: int) -> Fraction:
        return self.t0**e

    def qpow(self, r: Rational) -> Fraction:
        e = Fraction(r) * T_PER_Q
        if e.denominator != 1:
            raise ValueError(f"q^{r} is not a power of q^(1/24)")
        return self.t0 ** int(e)

    def bracket(self, n: int) -> Fraction:
        return self.t0 ** (12 * n) - self.t0 ** (-12 * n)

    def inverse_bracket(self, n: int) -> Fraction:
        return 1 / self.bracket(n)

    def inverse_bracket_factorial(self, n: int) -> Fraction:
        out = Fraction(1)
        for j in range(1, n + 1):
            out *= self.bracket(j)
        return 1 / out

    def sum(self, values: Iterable) -> Fraction:
        return sum(values, Fraction(0))

    def flip(self, fn: Callable[[PointField], Fraction]) -> Fraction:
        return fn(PointField(1 / self.t0))

    def lift(self, x: QRat) -> Fraction:
        return x.eval_at(self.t0)


EXACT = ExactField()
