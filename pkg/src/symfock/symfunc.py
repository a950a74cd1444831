"""The ring Lambda[t] of symmetric functions presented in power sums.

An element is a finite Q(t)-linear combination of monomials
p_la = p_{la_1} p_{la_2} ... indexed by partitions, stored sparsely as a
dict partition -> RatFun with no zero coefficients.  The generators p_n
are algebraically independent, so multiplication is free-commutative
monomial merging.

Besides ring arithmetic the module provides the derivations d/dp_n, the
diagonal substitutions p_n -> s(n) p_n, the classical and t-deformed
scalar products

    <p_la, p_mu>   = delta z_la,
    <p_la, p_mu>_t = delta z_la prod_i 1/(1 - t**la_i),

and the adjoint ("perp") of multiplication with respect to either one.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Iterable

from .partitions import (
    Partition,
    as_partition,
    multiplicities,
    partition_from_json,
    revlex_key,
    weight,
    z_factor,
)
from .ratfun import (
    RF_ONE,
    RF_ZERO,
    RatFun,
    rat_from_json,
    rat_to_json,
    rf_inv_one_minus_t_pow,
)

Coeff = RatFun | Fraction | int


def _coerce(c: Coeff) -> RatFun:
    if isinstance(c, RatFun):
        return c
    return RatFun.from_fraction(c)


def _merge(la: Partition, mu: Partition) -> Partition:
    return tuple(sorted(la + mu, reverse=True))


class SymFunc:
    """A symmetric function: finite sum of p-monomials with Q(t) coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Partition, RatFun] | None = None, _clean: bool = False):
        if terms is None:
            terms = {}
        if not _clean:
            terms = {la: c for la, c in terms.items() if not c.is_zero()}
        self.terms = terms

    @classmethod
    def zero(cls) -> "SymFunc":
        return cls({}, _clean=True)

    @classmethod
    def one(cls) -> "SymFunc":
        return cls({(): RF_ONE}, _clean=True)

    @classmethod
    def p(cls, n: int) -> "SymFunc":
        if n < 1:
            raise ValueError("power sums are indexed by n >= 1")
        return cls({(n,): RF_ONE}, _clean=True)

    @classmethod
    def monomial(cls, la, coeff: Coeff = 1) -> "SymFunc":
        c = _coerce(coeff)
        if c.is_zero():
            return cls.zero()
        return cls({as_partition(la): c}, _clean=True)

    @classmethod
    def constant(cls, coeff: Coeff) -> "SymFunc":
        return cls.monomial((), coeff)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Top p-degree; -1 for the zero element."""
        return max((weight(la) for la in self.terms), default=-1)

    def coefficient(self, la) -> RatFun:
        return self.terms.get(as_partition(la), RF_ZERO)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for la, c in other.terms.items():
            acc = out.get(la)
            s = c if acc is None else acc + c
            if s.is_zero():
                out.pop(la, None)
            else:
                out[la] = s
        return SymFunc(out, _clean=True)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        if not other.terms:
            return self
        out = dict(self.terms)
        for la, c in other.terms.items():
            acc = out.get(la)
            s = -c if acc is None else acc - c
            if s.is_zero():
                out.pop(la, None)
            else:
                out[la] = s
        return SymFunc(out, _clean=True)

    def __neg__(self) -> "SymFunc":
        return SymFunc({la: -c for la, c in self.terms.items()}, _clean=True)

    def scaled(self, c: Coeff) -> "SymFunc":
        c = _coerce(c)
        if c.is_zero():
            return SymFunc.zero()
        return SymFunc({la: v * c for la, v in self.terms.items()}, _clean=True)

    def __mul__(self, other: "SymFunc") -> "SymFunc":
        if not self.terms or not other.terms:
            return SymFunc.zero()
        out: dict[Partition, RatFun] = {}
        for la, c in self.terms.items():
            for mu, d in other.terms.items():
                key = _merge(la, mu)
                prod = c * d
                acc = out.get(key)
                s = prod if acc is None else acc + prod
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return SymFunc(out, _clean=True)

    def times_p(self, n: int) -> "SymFunc":
        """Multiplication by the generator p_n (cheap monomial prefixing)."""
        out: dict[Partition, RatFun] = {}
        for la, c in self.terms.items():
            out[_merge(la, (n,))] = c
        return SymFunc(out, _clean=True)

    def diff_p(self, n: int) -> "SymFunc":
        """Formal partial derivative with respect to p_n."""
        if n < 1:
            raise ValueError("derivations are indexed by n >= 1")
        out: dict[Partition, RatFun] = {}
        for la, c in self.terms.items():
            m = la.count(n)
            if m == 0:
                continue
            reduced = list(la)
            reduced.remove(n)
            key = tuple(reduced)
            contrib = c.scale(Fraction(m))
            acc = out.get(key)
            s = contrib if acc is None else acc + contrib
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return SymFunc(out, _clean=True)

    def scale_p(self, s: Callable[[int], RatFun]) -> "SymFunc":
        """The algebra endomorphism p_n -> s(n) * p_n."""
        out: dict[Partition, RatFun] = {}
        for la, c in self.terms.items():
            for part in la:
                c = c * s(part)
            if not c.is_zero():
                out[la] = c
        return SymFunc(out, _clean=True)

    def specialize_t(self, t0: Fraction | int) -> "SymFunc":
        """Evaluate every coefficient at t = t0 (raises on a pole)."""
        out: dict[Partition, RatFun] = {}
        for la, c in self.terms.items():
            v = RatFun.from_fraction(c.eval_at(t0))
            if not v.is_zero():
                out[la] = v
        return SymFunc(out, _clean=True)

    def map_coeffs(self, fn: Callable[[RatFun], RatFun]) -> "SymFunc":
        return SymFunc({la: fn(c) for la, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(other.terms[la] == c for la, c in self.terms.items())

    def __hash__(self) -> int:
        return hash(frozenset((la, hash(c)) for la, c in self.terms.items()))

    def sorted_terms(self) -> list[tuple[Partition, RatFun]]:
        """Terms ordered by weight, then reverse-lexicographically."""
        return sorted(self.terms.items(), key=lambda kv: (weight(kv[0]), revlex_key(kv[0])))

    def __repr__(self) -> str:
        if not self.terms:
            return "SymFunc(0)"
        bits = [f"p{list(la)}: {c!r}" for la, c in self.sorted_terms()]
        return "SymFunc(" + ", ".join(bits) + ")"


def linear_combination(pairs: Iterable[tuple[RatFun, SymFunc]]) -> SymFunc:
    """Sum of c * f over the given pairs, accumulated in one dict pass.

    The hot loop of every operator application; works on the raw packed
    fields and defers object construction to the final pass.
    """
    buckets: dict[Partition, list] = {}
    get = buckets.get
    for c, f in pairs:
        cne = c.ne
        if cne == 0:
            continue
        cnd, cde, cdd = c.nd, c.de, c.dd
        for la, v in f.terms.items():
            pne = v.ne * cne
            pnd = v.nd * cnd
            pdd = v.dd * cdd
            vde = v.de
            if vde == 1:
                pde = cde
            elif cde == 1:
                pde = vde
            else:
                pde = vde * cde
            acc = get(la)
            if acc is None:
                buckets[la] = [pne, pnd, pde, pdd]
                continue
            if acc[2] == pde and acc[3] == pdd:
                and_ = acc[1]
                if and_ == pnd:
                    acc[0] += pne
                else:
                    g = gcd(and_, pnd)
                    m1 = pnd // g
                    acc[0] = acc[0] * m1 + pne * (and_ // g)
                    acc[1] = and_ * m1
            else:
                b1 = acc[1] * pdd
                b2 = pnd * acc[3]
                g = gcd(b1, b2)
                m1 = b2 // g
                acc[0] = acc[0] * pde * m1 + pne * acc[2] * (b1 // g)
                acc[1] = b1 * m1
                acc[2] = acc[2] * pde
                acc[3] = acc[3] * pdd
    out: dict[Partition, RatFun] = {}
    for la, fields in buckets.items():
        if fields[0]:
            out[la] = RatFun._raw(fields[0], fields[1], fields[2], fields[3])
    return SymFunc(out, _clean=True)


def scalar_product(f: SymFunc, g: SymFunc, deformed: bool = False) -> RatFun:
    """<f, g> or <f, g>_t on the power-sum basis."""
    acc = RF_ZERO
    small, large = (f.terms, g.terms) if len(f.terms) <= len(g.terms) else (g.terms, f.terms)
    for la, c in small.items():
        d = large.get(la)
        if d is None:
            continue
        term = (c * d).scale(Fraction(z_factor(la)))
        if deformed:
            for part in la:
                term = term * rf_inv_one_minus_t_pow(part)
        acc = acc + term
    return acc


def perp_apply(f: SymFunc, g: SymFunc, deformed: bool = False) -> SymFunc:
    """Apply the adjoint of multiplication by f to g.

    Classically p_n acts as n d/dp_n; for the t-deformed product as
    n/(1 - t**n) d/dp_n.  Both substitutions turn any f into a finite
    differential polynomial.
    """
    out: dict[Partition, RatFun] = {}
    for mu, c in f.terms.items():
        for value, mult in multiplicities(mu).items():
            factor = RatFun.from_fraction(Fraction(value**mult))
            if deformed:
                for _ in range(mult):
                    factor = factor * rf_inv_one_minus_t_pow(value)
            c = c * factor
        for nu, d in g.terms.items():
            coeff, key = _apply_monomial_derivative(mu, nu)
            if coeff == 0:
                continue
            contrib = (c * d).scale(coeff)
            acc = out.get(key)
            s = contrib if acc is None else acc + contrib
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return SymFunc(out, _clean=True)


def _apply_monomial_derivative(mu: Partition, nu: Partition) -> tuple[Fraction, Partition]:
    """Coefficient and partition from applying prod_i d/dp_{mu_i} to p_nu."""
    counts = multiplicities(nu)
    coeff = 1
    for value, k in multiplicities(mu).items():
        m = counts.get(value, 0)
        if m < k:
            return Fraction(0), ()
        for j in range(k):
            coeff *= m - j
        counts[value] = m - k
    rest: list[int] = []
    for value, m in counts.items():
        rest.extend([value] * m)
    rest.sort(reverse=True)
    return Fraction(coeff), tuple(rest)


def symfunc_to_json(f: SymFunc) -> dict:
    return {
        "terms": [
            {"p": list(la), "coeff": rat_to_json(c)} for la, c in f.sorted_terms()
        ]
    }


def symfunc_from_json(obj: object) -> SymFunc:
    if not isinstance(obj, dict) or "terms" not in obj or not isinstance(obj["terms"], list):
        raise ValueError("symmetric function JSON must be {'terms': [...]}")
    out: dict[Partition, RatFun] = {}
    for entry in obj["terms"]:
        if not isinstance(entry, dict) or "p" not in entry or "coeff" not in entry:
            raise ValueError(f"malformed term entry: {entry!r}")
        la = partition_from_json(entry["p"])
        c = rat_from_json(entry["coeff"])
        if la in out:
            raise ValueError(f"duplicate partition in terms: {la}")
        if not c.is_zero():
            out[la] = c
    return SymFunc(out, _clean=True)
