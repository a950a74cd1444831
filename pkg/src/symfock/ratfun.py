"""Exact arithmetic in Q and Q(t).

Coefficients of everything downstream live in the field Q(t) of rational
functions in a formal parameter t with rational coefficients.  Values are
immutable; all operations are pure.

Representation notes
--------------------
A polynomial is stored packed: its integer coefficient vector (after
clearing a single positive integer denominator ``den``) is evaluated at
t = 2**LIMB_BITS and kept as one Python int ``enc``.  Since evaluation at
a point is a ring homomorphism, addition and multiplication of packed
polynomials are single bigint operations; coefficients are only unpacked
at boundaries (normalisation, division, printing, JSON).  Packing is
faithful while every true coefficient stays below 2**(LIMB_BITS-1) in
absolute value; ``from_coeffs`` rejects inputs anywhere near the bound
and ``coeff_vector`` re-verifies on unpacking, so desk-scale data keeps
a margin of dozens of orders of magnitude.

Rational functions are kept as num/den pairs of polynomials.  The
canonical form (gcd(num, den) = 1 over Q[t], den monic) required for
hashing and serialisation is established lazily; arithmetic does not
reduce.  Equality and zero tests are exact without reduction.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

try:  # GMP-backed ints are several times faster at packed-polynomial sizes
    from gmpy2 import mpz as _Z
except ImportError:  # pragma: no cover
    def _Z(x):
        return x

LIMB_BITS = 192
_BASE = 1 << LIMB_BITS
_MASK = _BASE - 1
_HALF = _BASE >> 1
# from_coeffs cap; keeps all internal arithmetic far from _HALF
_INPUT_BOUND = 1 << 64


class PackingOverflow(OverflowError):
    """Raised when a coefficient cannot be packed faithfully."""


def _digits(n: int) -> list[int]:
    """Balanced base-2**LIMB_BITS digit vector of n, ascending, no trailing zeros."""
    out = []
    while n:
        d = n & _MASK
        if d >= _HALF:
            d -= _BASE
        out.append(int(d))
        n = (n - d) >> LIMB_BITS
    return out


def _encode(digits: Sequence[int]) -> int:
    n = _Z(0)
    for d in reversed(digits):
        n = (n << LIMB_BITS) + d
    return n


def _gcd_list(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


class TPoly:
    """A univariate polynomial in t with rational coefficients."""

    __slots__ = ("enc", "den", "_deg")

    def __init__(self, enc: int, den: int, _deg: int | None = None):
        # raw constructor: trusts enc/den; use from_coeffs for checked input
        self.enc = enc
        self.den = den
        self._deg = _deg

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Fraction | int]) -> "TPoly":
        """Build from coefficients ascending in t; trailing zeros are dropped."""
        fracs = [Fraction(c) for c in coeffs]
        while fracs and fracs[-1] == 0:
            fracs.pop()
        if not fracs:
            return ZERO
        den = 1
        for c in fracs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in fracs]
        if any(abs(v) >= _INPUT_BOUND for v in ints) or den >= _INPUT_BOUND:
            raise PackingOverflow("coefficient too large for packed representation")
        return cls(_encode(ints), den, len(ints) - 1)

    @classmethod
    def from_int(cls, v: int) -> "TPoly":
        return cls.from_coeffs([Fraction(v)])

    def is_zero(self) -> bool:
        return self.enc == 0

    def __bool__(self) -> bool:
        return self.enc != 0

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        if self._deg is None:
            self._deg = len(self._digit_vector()) - 1
        return self._deg

    def _digit_vector(self) -> list[int]:
        ds = _digits(self.enc)
        if ds and _encode(ds) != self.enc:
            raise PackingOverflow("packed polynomial corrupted (digit overflow)")
        return ds

    def coeff_vector(self) -> tuple[Fraction, ...]:
        """Coefficients ascending in t, trailing zeros stripped."""
        return tuple(Fraction(d, self.den) for d in self._digit_vector())

    def content_normalized(self) -> "TPoly":
        """Equal value with gcd(integer content, den) = 1."""
        if self.enc == 0:
            return ZERO
        ds = self._digit_vector()
        g = gcd(_gcd_list(ds), self.den)
        if g == 1:
            return self
        return TPoly(_encode([d // g for d in ds]), self.den // g, self._deg)

    def __add__(self, other: "TPoly") -> "TPoly":
        if self.den == other.den:
            return TPoly(self.enc + other.enc, self.den)
        g = gcd(self.den, other.den)
        m1 = other.den // g
        m2 = self.den // g
        return TPoly(self.enc * m1 + other.enc * m2, self.den * m1)

    def __sub__(self, other: "TPoly") -> "TPoly":
        if self.den == other.den:
            return TPoly(self.enc - other.enc, self.den)
        g = gcd(self.den, other.den)
        m1 = other.den // g
        m2 = self.den // g
        return TPoly(self.enc * m1 - other.enc * m2, self.den * m1)

    def __mul__(self, other: "TPoly") -> "TPoly":
        if self.enc == 0 or other.enc == 0:
            return ZERO
        deg = None
        if self._deg is not None and other._deg is not None:
            deg = self._deg + other._deg
        return TPoly(self.enc * other.enc, self.den * other.den, deg)

    def __neg__(self) -> "TPoly":
        return TPoly(-self.enc, self.den, self._deg)

    def scale(self, c: Fraction) -> "TPoly":
        if c == 0 or self.enc == 0:
            return ZERO
        return TPoly(self.enc * c.numerator, self.den * c.denominator, self._deg)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TPoly):
            return NotImplemented
        if self.den == other.den:
            return self.enc == other.enc
        return self.enc * other.den == other.enc * self.den

    def __hash__(self) -> int:
        n = self.content_normalized()
        return hash((n.enc, n.den))

    def eval_at(self, t0: Fraction) -> Fraction:
        acc = Fraction(0)
        for d in reversed(self._digit_vector()):
            acc = acc * t0 + d
        return acc / self.den

    def leading_coeff(self) -> Fraction:
        ds = self._digit_vector()
        if not ds:
            return Fraction(0)
        return Fraction(ds[-1], self.den)

    def __repr__(self) -> str:
        if self.enc == 0:
            return "TPoly(0)"
        parts = []
        for i, c in enumerate(self.coeff_vector()):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{i}")
        return "TPoly(" + " + ".join(parts) + ")"


ZERO = TPoly(_Z(0), 1, -1)
ONE = TPoly(_Z(1), 1, 0)
T = TPoly(_Z(_BASE), 1, 1)

_omtp_cache: dict[int, TPoly] = {}


def one_minus_t_pow(n: int) -> TPoly:
    """The polynomial 1 - t**n."""
    p = _omtp_cache.get(n)
    if p is None:
        p = TPoly(_Z(1 - (1 << (LIMB_BITS * n))), 1, n)
        _omtp_cache[n] = p
    return p


def poly_divmod(a: TPoly, b: TPoly) -> tuple[TPoly, TPoly]:
    """Exact Euclidean division over Q[t]."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    ra = list(a.coeff_vector())
    rb = list(b.coeff_vector())
    if len(ra) < len(rb):
        return ZERO, a
    quot = [Fraction(0)] * (len(ra) - len(rb) + 1)
    lead = rb[-1]
    for i in range(len(ra) - len(rb), -1, -1):
        c = ra[i + len(rb) - 1] / lead
        if c:
            quot[i] = c
            for j, bc in enumerate(rb):
                ra[i + j] -= c * bc
    return TPoly.from_coeffs(quot), TPoly.from_coeffs(ra[: len(rb) - 1])


def poly_gcd(a: TPoly, b: TPoly) -> TPoly:
    """Monic gcd over Q[t]; gcd(0, 0) = 0."""
    ca = list(a.coeff_vector())
    cb = list(b.coeff_vector())
    while cb:
        ra = ca
        lead = cb[-1]
        while len(ra) >= len(cb):
            c = ra[-1] / lead
            for j in range(len(cb)):
                ra[len(ra) - len(cb) + j] -= c * cb[j]
            while ra and ra[-1] == 0:
                ra.pop()
        ca, cb = cb, ra
    if not ca:
        return ZERO
    lead = ca[-1]
    return TPoly.from_coeffs([c / lead for c in ca])


class RatFun:
    """An element of Q(t): a ratio of two TPoly values, den != 0.

    Stored flat as four ints (ne, nd, de, dd) meaning (ne/nd)/(de/dd)
    with ne, de packed polynomials and nd, dd positive scalar
    denominators, so the field operations are a handful of bigint
    multiplications with no intermediate objects.  Arithmetic is exact
    but lazy: the canonical reduced, monic-denominator form is only
    established when observed through .num/.den, hashing, or
    serialisation.  Equality and zero tests are exact on unreduced
    representatives.
    """

    __slots__ = ("ne", "nd", "de", "dd", "_canon")

    def __init__(self, num: TPoly, den: TPoly = ONE):
        if den.enc == 0:
            raise ZeroDivisionError("rational function with zero denominator")
        self.ne = num.enc
        self.nd = num.den
        self.de = den.enc
        self.dd = den.den
        self._canon = den.enc == 1 and den.den == 1

    @classmethod
    def _raw(cls, ne: int, nd: int, de: int, dd: int) -> "RatFun":
        out = object.__new__(cls)
        out.ne = ne
        out.nd = nd
        out.de = de
        out.dd = dd
        out._canon = False
        return out

    @classmethod
    def from_int(cls, v: int) -> "RatFun":
        if v == 0:
            return RF_ZERO
        if v == 1:
            return RF_ONE
        out = cls._raw(v, 1, 1, 1)
        out._canon = True
        return out

    @classmethod
    def from_fraction(cls, c: Fraction | int) -> "RatFun":
        c = Fraction(c)
        if c == 0:
            return RF_ZERO
        if c == 1:
            return RF_ONE
        out = cls._raw(c.numerator, c.denominator, 1, 1)
        out._canon = True
        return out

    def _reduce(self) -> None:
        if self._canon:
            return
        if self.ne == 0:
            self.ne, self.nd, self.de, self.dd = 0, 1, 1, 1
            self._canon = True
            return
        num = TPoly(self.ne, self.nd)
        den = TPoly(self.de, self.dd)
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, _ = poly_divmod(num, g)
            den, _ = poly_divmod(den, g)
        lead = den.leading_coeff()
        if lead != 1:
            inv = 1 / lead
            num = num.scale(inv)
            den = den.scale(inv)
        num = num.content_normalized()
        den = den.content_normalized()
        self.ne, self.nd = num.enc, num.den
        self.de, self.dd = den.enc, den.den
        self._canon = True

    @property
    def num(self) -> TPoly:
        self._reduce()
        return TPoly(self.ne, self.nd)

    @property
    def den(self) -> TPoly:
        self._reduce()
        return TPoly(self.de, self.dd)

    def is_zero(self) -> bool:
        return self.ne == 0

    def __bool__(self) -> bool:
        return self.ne != 0

    def __add__(self, other: "RatFun") -> "RatFun":
        if self.ne == 0:
            return other
        if other.ne == 0:
            return self
        if self.de == other.de and self.dd == other.dd:
            nd1, nd2 = self.nd, other.nd
            if nd1 == nd2:
                return RatFun._raw(self.ne + other.ne, nd1, self.de, self.dd)
            g = gcd(nd1, nd2)
            m1 = nd2 // g
            return RatFun._raw(self.ne * m1 + other.ne * (nd1 // g), nd1 * m1, self.de, self.dd)
        b1 = self.nd * other.dd
        b2 = other.nd * self.dd
        g = gcd(b1, b2)
        m1 = b2 // g
        m2 = b1 // g
        return RatFun._raw(
            self.ne * other.de * m1 + other.ne * self.de * m2,
            b1 * m1,
            self.de * other.de,
            self.dd * other.dd,
        )

    def __sub__(self, other: "RatFun") -> "RatFun":
        if other.ne == 0:
            return self
        return self + RatFun._raw(-other.ne, other.nd, other.de, other.dd)

    def __mul__(self, other: "RatFun") -> "RatFun":
        if self.ne == 0 or other.ne == 0:
            return RF_ZERO
        if other.de == 1:
            return RatFun._raw(
                self.ne * other.ne, self.nd * other.nd, self.de, self.dd * other.dd
            )
        if self.de == 1:
            return RatFun._raw(
                self.ne * other.ne, self.nd * other.nd, other.de, self.dd * other.dd
            )
        return RatFun._raw(
            self.ne * other.ne,
            self.nd * other.nd,
            self.de * other.de,
            self.dd * other.dd,
        )

    def __truediv__(self, other: "RatFun") -> "RatFun":
        if other.ne == 0:
            raise ZeroDivisionError("division by zero rational function")
        if self.ne == 0:
            return RF_ZERO
        return RatFun._raw(
            self.ne * other.de,
            self.nd * other.dd,
            self.de * other.ne,
            self.dd * other.nd,
        )

    def __neg__(self) -> "RatFun":
        return RatFun._raw(-self.ne, self.nd, self.de, self.dd)

    def inverse(self) -> "RatFun":
        if self.ne == 0:
            raise ZeroDivisionError("inverse of zero")
        return RatFun._raw(self.de, self.dd, self.ne, self.nd)

    def scale(self, c: Fraction | int) -> "RatFun":
        c = Fraction(c)
        if c == 0 or self.ne == 0:
            return RF_ZERO
        return RatFun._raw(self.ne * c.numerator, self.nd * c.denominator, self.de, self.dd)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatFun):
            return NotImplemented
        if self.de == other.de and self.dd == other.dd and self.nd == other.nd:
            return self.ne == other.ne
        return self.ne * other.de * (other.nd * self.dd) == other.ne * self.de * (
            self.nd * other.dd
        )

    def __hash__(self) -> int:
        self._reduce()
        n = TPoly(self.ne, self.nd).content_normalized()
        d = TPoly(self.de, self.dd).content_normalized()
        return hash((n.enc, n.den, d.enc, d.den))

    def eval_at(self, t0: Fraction | int) -> Fraction:
        """Exact evaluation at t = t0; raises on a pole."""
        t0 = Fraction(t0)
        self._reduce()
        dv = TPoly(self.de, self.dd).eval_at(t0)
        if dv == 0:
            raise ZeroDivisionError(f"pole at t = {t0}")
        return TPoly(self.ne, self.nd).eval_at(t0) / dv

    def as_fraction(self) -> Fraction:
        """The constant value, if this rational function is constant."""
        self._reduce()
        num = TPoly(self.ne, self.nd)
        den = TPoly(self.de, self.dd)
        if num.degree > 0 or den.degree > 0:
            raise ValueError("not a constant rational function")
        if num.is_zero():
            return Fraction(0)
        return num.leading_coeff() / den.leading_coeff()

    def slim(self) -> "RatFun":
        """Content-normalised copy (cheap; no polynomial gcd)."""
        n = TPoly(self.ne, self.nd).content_normalized()
        d = TPoly(self.de, self.dd).content_normalized()
        out = RatFun._raw(n.enc, n.den, d.enc, d.den)
        out._canon = self._canon
        return out

    def __repr__(self) -> str:
        self._reduce()
        if self.de == 1 and self.dd == 1:
            return f"RatFun({TPoly(self.ne, self.nd)!r})"
        return f"RatFun({TPoly(self.ne, self.nd)!r} / {TPoly(self.de, self.dd)!r})"


RF_ZERO = RatFun(ZERO)
RF_ONE = RatFun(ONE)
RF_T = RatFun(T)

_omtp_rf_cache: dict[int, RatFun] = {}
_inv_omtp_rf_cache: dict[int, RatFun] = {}


def rf_one_minus_t_pow(n: int) -> RatFun:
    """(1 - t**n) as a rational function."""
    r = _omtp_rf_cache.get(n)
    if r is None:
        r = RatFun(one_minus_t_pow(n))
        _omtp_rf_cache[n] = r
    return r


def rf_inv_one_minus_t_pow(n: int) -> RatFun:
    """1/(1 - t**n) as a rational function."""
    r = _inv_omtp_rf_cache.get(n)
    if r is None:
        r = RatFun(ONE, one_minus_t_pow(n))
        _inv_omtp_rf_cache[n] = r
    return r


_FRACTION_RE = re.compile(r"^-?\d+(/\d+)?$")


def _fraction_to_str(c: Fraction) -> str:
    return str(c)


def _fraction_from_str(s: str) -> Fraction:
    if not isinstance(s, str) or not _FRACTION_RE.match(s.strip()):
        raise ValueError(f"malformed rational literal: {s!r}")
    return Fraction(s)


def rat_to_json(r: RatFun) -> dict:
    """Canonical JSON form {"num": [...], "den": [...]}, coefficients ascending in t."""
    return {
        "num": [_fraction_to_str(c) for c in r.num.coeff_vector()],
        "den": [_fraction_to_str(c) for c in r.den.coeff_vector()],
    }


def rat_from_json(obj: object) -> RatFun:
    if not isinstance(obj, dict) or set(obj) - {"num", "den"}:
        raise ValueError("rational function JSON must be {'num': [...], 'den': [...]}")
    try:
        num = TPoly.from_coeffs(_fraction_from_str(s) for s in obj["num"])
        den = TPoly.from_coeffs(_fraction_from_str(s) for s in obj.get("den", ["1"]))
    except TypeError as exc:
        raise ValueError(f"malformed rational function JSON: {exc}") from exc
    if den.is_zero():
        raise ValueError("zero denominator in rational function JSON")
    r = RatFun(num, den)
    r._reduce()
    return r
