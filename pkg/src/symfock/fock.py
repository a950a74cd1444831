"""Charged boson Fock space and mode-indexed vertex operators.

The Fock space is B = (+)_m B^(m) with B^(m) = z^m Lambda[t]; a vector is
a charge m together with a symmetric-function body.  Every vertex
operator used here is an instance of one kernel shape

    K(u) = R(u)**eps * exp( sum_n a_n p_n u**-n / n ) * exp( sum_n c_n d/dp_n u**n )

where R(u) (z^m f -> (z/u)**(m+1) f) and its inverse shift the charge.
Modes are indexed by the literal power of u extracted from K(u) v, so for
v = (m, f) the coefficient of u**j is

    charge m + eps,  body = sum_{r - k = j + eps*m + 1} A_k (C_r f)

with A_k the modes of the multiplication exponential and C_r the modes of
the derivation exponential.  C_r lowers degree by r, so the sum is finite
and K[j] v = 0 exactly when j + eps*m + 1 > deg f.

Kernel instances:

* fermion+ / fermion-   (a_n, c_n) = (1, -1) and (-1, +1): classical
  charged free fermions;
* twisted+ / twisted-   (1-t^n, -1) and (t^n-1, +1): the twisted fermions
  generating Hall-Littlewood data;
* deformed+ / deformed- (1-t^n, -1/(1-t^n)) and (t^n-1, 1/(1-t^n)): the
  images of the classical fermions under p_n -> (1-t^n) p_n.

Half-integer mode labels used in the vertex-algebra literature map to
this indexing by K_{k+1/2} <-> K[-+k]; the normal ordering below splits
the fermion+ modes at a <= -1 (applied outermost) versus a >= 0 (applied
innermost, with a fermionic sign), which is the unique split for which
every mode sum terminates on each vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .partitions import Partition, multiplicities, partitions_of, partitions_up_to, weight
from .ratfun import RF_ONE, RF_ZERO, RatFun, rf_inv_one_minus_t_pow, rf_one_minus_t_pow
from .symfunc import (
    SymFunc,
    linear_combination,
    perp_apply,
    scalar_product,
    symfunc_to_json,
)

RF_MINUS_ONE = RatFun.from_int(-1)


class FockVector:
    """z^charge * body, an element of one graded component of B."""

    __slots__ = ("charge", "body")

    def __init__(self, charge: int, body: SymFunc):
        self.charge = charge
        self.body = body

    @classmethod
    def vacuum(cls) -> "FockVector":
        return cls(0, SymFunc.one())

    @classmethod
    def zero(cls, charge: int = 0) -> "FockVector":
        return cls(charge, SymFunc.zero())

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def scaled(self, c) -> "FockVector":
        return FockVector(self.charge, self.body.scaled(c))

    def __add__(self, other: "FockVector") -> "FockVector":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.charge != other.charge:
            raise ValueError(f"charge mismatch: {self.charge} vs {other.charge}")
        return FockVector(self.charge, self.body + other.body)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + other.scaled(RF_MINUS_ONE)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FockVector):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.charge == other.charge and self.body == other.body

    def __repr__(self) -> str:
        return f"FockVector(charge={self.charge}, body={self.body!r})"


def fock_to_json(v: FockVector) -> dict:
    return {"charge": v.charge, "body": symfunc_to_json(v.body)}


DerivOp = tuple[tuple[RatFun, Partition], ...]


class VertexKernel:
    """One charge-shifting vertex operator in the uniform exponential form."""

    def __init__(self, name: str, eps: int, a: Callable[[int], RatFun], c: Callable[[int], RatFun]):
        if eps not in (+1, -1):
            raise ValueError("eps must be +1 or -1")
        self.name = name
        self.eps = eps
        self.a = a
        self.c = c
        self._mult: list[SymFunc] = [SymFunc.one()]
        self._deriv: list[DerivOp] = [((RF_ONE, ()),)]
        self._modes: dict[tuple[int, int, Partition], FockVector] = {}

    def __repr__(self) -> str:
        return f"VertexKernel({self.name})"

    def clear_caches(self) -> None:
        self._mult = self._mult[:1]
        self._deriv = self._deriv[:1]
        self._modes.clear()

    def mult_coefficient(self, k: int) -> SymFunc:
        """A_k: coefficient of u**-k in exp(sum a_n p_n u**-n / n)."""
        if k < 0:
            return SymFunc.zero()
        while len(self._mult) <= k:
            m = len(self._mult)
            acc = SymFunc.zero()
            for n in range(1, m + 1):
                acc = acc + self._mult[m - n].times_p(n).scaled(self.a(n))
            self._mult.append(acc.scaled(Fraction(1, m)).map_coeffs(lambda r: r.slim()))
        return self._mult[k]

    def deriv_coefficient(self, r: int) -> DerivOp:
        """C_r: coefficient of u**r in exp(sum c_n d/dp_n u**n), as sum of d_mu terms."""
        if r < 0:
            return ()
        while len(self._deriv) <= r:
            m = len(self._deriv)
            terms = []
            for mu in partitions_of(m):
                coeff = RF_ONE
                for value, mult in multiplicities(mu).items():
                    base = self.c(value)
                    for _ in range(mult):
                        coeff = coeff * base
                    coeff = coeff.scale(Fraction(1, _factorial(mult)))
                if not coeff.is_zero():
                    terms.append((coeff.slim(), mu))
            self._deriv.append(tuple(terms))
        return self._deriv[r]

    def vanishes_above(self, m: int, degree: int) -> int:
        """Largest j with K[j] possibly nonzero on charge m, degree <= degree."""
        return degree - self.eps * m - 1

    def mode_on_basis(self, j: int, m: int, la: Partition) -> FockVector:
        key = (j, m, la)
        cached = self._modes.get(key)
        if cached is not None:
            return cached
        shift = j + self.eps * m + 1
        deg = weight(la)
        body = SymFunc.zero()
        for r in range(max(0, shift), deg + 1):
            df = apply_deriv_op(self.deriv_coefficient(r), SymFunc.monomial(la))
            if df.is_zero():
                continue
            body = body + self.mult_coefficient(r - shift) * df
        out = FockVector(m + self.eps, body.map_coeffs(lambda c: c.slim()))
        self._modes[key] = out
        return out


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def apply_deriv_op(op: DerivOp, f: SymFunc) -> SymFunc:
    """Apply a sum of coeff * prod d/dp_{mu_i} terms to f."""
    from .symfunc import _apply_monomial_derivative

    pieces = []
    for coeff, mu in op:
        out = {}
        for nu, d in f.terms.items():
            scalar, key = _apply_monomial_derivative(mu, nu)
            if scalar == 0:
                continue
            contrib = d.scale(scalar)
            acc = out.get(key)
            s = contrib if acc is None else acc + contrib
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        pieces.append((coeff, SymFunc(out, _clean=True)))
    return linear_combination(pieces)


def mode_apply(kernel: VertexKernel, j: int, v: FockVector) -> FockVector:
    """The coefficient of u**j in K(u) v."""
    if v.is_zero():
        return FockVector.zero(v.charge + kernel.eps)
    terms = v.body.terms
    if len(terms) == 1:
        ((la, c),) = terms.items()
        basis = kernel.mode_on_basis(j, v.charge, la)
        if c.ne == 1 and c.nd == 1 and c.de == 1 and c.dd == 1:
            return basis
        return basis.scaled(c)
    pieces = []
    for la, c in terms.items():
        basis = kernel.mode_on_basis(j, v.charge, la)
        if not basis.is_zero():
            pieces.append((c, basis.body))
    return FockVector(v.charge + kernel.eps, linear_combination(pieces))


FERMION_PLUS = VertexKernel("fermion+", +1, lambda n: RF_ONE, lambda n: RF_MINUS_ONE)
FERMION_MINUS = VertexKernel("fermion-", -1, lambda n: RF_MINUS_ONE, lambda n: RF_ONE)
TWISTED_PLUS = VertexKernel("twisted+", +1, rf_one_minus_t_pow, lambda n: RF_MINUS_ONE)
TWISTED_MINUS = VertexKernel(
    "twisted-", -1, lambda n: -rf_one_minus_t_pow(n), lambda n: RF_ONE
)
DEFORMED_PLUS = VertexKernel(
    "deformed+", +1, rf_one_minus_t_pow, lambda n: -rf_inv_one_minus_t_pow(n)
)
DEFORMED_MINUS = VertexKernel(
    "deformed-", -1, lambda n: -rf_one_minus_t_pow(n), rf_inv_one_minus_t_pow
)

KERNELS = {
    k.name: k
    for k in (
        FERMION_PLUS,
        FERMION_MINUS,
        TWISTED_PLUS,
        TWISTED_MINUS,
        DEFORMED_PLUS,
        DEFORMED_MINUS,
    )
}


def corrupted_kernel(base: VertexKernel) -> VertexKernel:
    """A deliberately wrong copy of a kernel (negative-control test hook)."""
    def bad_a(n: int, _orig=base.a) -> RatFun:
        return _orig(n) + RF_ONE if n == 2 else _orig(n)

    return VertexKernel(base.name + "-corrupt", base.eps, bad_a, base.c)


# ---------------------------------------------------------------------------
# normal-ordered bilinears in the classical fermions


def _normal_ordered_pair(
    pair_sum: int, v: FockVector, weight_fn: Callable[[int, int], Fraction] | None
) -> FockVector:
    """sum over a+b = pair_sum of w(a,b) :fermion+[a] fermion-[b]: applied to v.

    The split sends a <= -1 outermost and a >= 0 innermost with a minus
    sign; both branches terminate by the mode vanishing bound.
    """
    m, f = v.charge, v.body
    deg = f.degree()
    if deg < 0:
        return FockVector.zero(m)
    out = FockVector.zero(m)
    for a in range(pair_sum - (deg + m - 1), 0):
        b = pair_sum - a
        w = Fraction(1) if weight_fn is None else weight_fn(a, b)
        if w == 0:
            continue
        inner = mode_apply(FERMION_MINUS, b, v)
        if inner.is_zero():
            continue
        term = mode_apply(FERMION_PLUS, a, inner)
        if not term.is_zero():
            out = out + term.scaled(w)
    for a in range(0, deg - m):
        b = pair_sum - a
        w = Fraction(-1) if weight_fn is None else -weight_fn(a, b)
        if w == 0:
            continue
        inner = mode_apply(FERMION_PLUS, a, v)
        if inner.is_zero():
            continue
        term = mode_apply(FERMION_MINUS, b, inner)
        if not term.is_zero():
            out = out + term.scaled(w)
    return out


_heis_cache: dict[tuple[int, int, Partition], FockVector] = {}
_vir_cache: dict[tuple[Fraction, int, int, Partition], FockVector] = {}


def heisenberg_mode(k: int, v: FockVector) -> FockVector:
    """alpha_k with alpha_{-n} = p_n, alpha_n = n d/dp_n (n > 0), alpha_0 = charge.

    Realised as the coefficient of u**(k-1) of the normal-ordered product
    :fermion+(u) fermion-(u): .
    """
    pieces = []
    for la, c in v.body.terms.items():
        key = (k, v.charge, la)
        cached = _heis_cache.get(key)
        if cached is None:
            cached = _normal_ordered_pair(k - 1, FockVector(v.charge, SymFunc.monomial(la)), None)
            _heis_cache[key] = cached
        if not cached.is_zero():
            pieces.append((c, cached.body))
    return FockVector(v.charge, linear_combination(pieces))


def twisted_heisenberg_mode(k: int, v: FockVector) -> FockVector:
    """h_k = alpha_k for k <= 0 and alpha_k/(1 - t**k) for k > 0."""
    out = heisenberg_mode(k, v)
    if k > 0 and not out.is_zero():
        out = out.scaled(rf_inv_one_minus_t_pow(k))
    return out


def virasoro_mode(beta: Fraction | int, k: int, v: FockVector) -> FockVector:
    """L^(beta)_k from the weighted fermion bilinear
    beta :dfermion+(u) fermion-(u): + (1-beta) :fermion+(u) dfermion-(u): .

    The derivative of the minus field is taken in the variable its modes
    are naturally indexed by, which is 1/u; together with the mode
    labelling fixed so the bracket closes with positive structure
    constants this makes the pair (a, b) with a + b = k - 1 enter with
    weight (1-beta)*b - beta*a.  The resulting modes satisfy

        [L_j, L_k] = (j - k) L_{j+k} + c/12 (j**3 - j) delta_{j,-k}

    with central charge c = -12 beta**2 + 12 beta - 2, and L_0 acts on
    the charge-m vacuum by m(m-1)/2 + beta*m.
    """
    beta = Fraction(beta)

    def w(a: int, b: int) -> Fraction:
        return (1 - beta) * b - beta * a

    pieces = []
    for la, c in v.body.terms.items():
        key = (beta, k, v.charge, la)
        cached = _vir_cache.get(key)
        if cached is None:
            cached = _normal_ordered_pair(
                k - 1, FockVector(v.charge, SymFunc.monomial(la)), w
            )
            _vir_cache[key] = cached
        if not cached.is_zero():
            pieces.append((c, cached.body))
    return FockVector(v.charge, linear_combination(pieces))


def clear_mode_caches() -> None:
    """Drop all memoised mode actions (frees memory between large sweeps)."""
    _heis_cache.clear()
    _vir_cache.clear()
    for kernel in KERNELS.values():
        kernel.clear_caches()


# ---------------------------------------------------------------------------
# operator expressions and the generic identity checker


@dataclass(frozen=True)
class ModeTerm:
    """coeff times a composition of atoms, applied right to left."""

    coeff: RatFun
    atoms: tuple[tuple, ...]


@dataclass(frozen=True)
class ModeExpression:
    """A finite sum of composed operator terms.

    Atoms: ("kernel", VertexKernel, j), ("mul", SymFunc), ("perp", SymFunc),
    ("heis", k), ("twisted", k), ("virasoro", beta, k), ("scale_p", s_fn),
    ("id",).
    """

    terms: tuple[ModeTerm, ...]

    @classmethod
    def single(cls, *atoms, coeff: RatFun = RF_ONE) -> "ModeExpression":
        return cls((ModeTerm(coeff, tuple(atoms)),))

    @classmethod
    def zero(cls) -> "ModeExpression":
        return cls(())

    def __add__(self, other: "ModeExpression") -> "ModeExpression":
        return ModeExpression(self.terms + other.terms)

    def __sub__(self, other: "ModeExpression") -> "ModeExpression":
        return self + other.scaled(RF_MINUS_ONE)

    def scaled(self, c: RatFun) -> "ModeExpression":
        return ModeExpression(tuple(ModeTerm(t.coeff * c, t.atoms) for t in self.terms))

    def apply(self, v: FockVector) -> FockVector:
        results: dict[int, FockVector] = {}
        for term in self.terms:
            cur = v
            for atom in reversed(term.atoms):
                cur = _apply_atom(atom, cur)
                if cur.is_zero():
                    break
            if cur.is_zero():
                continue
            cur = cur.scaled(term.coeff)
            if cur.is_zero():
                continue
            if cur.charge in results:
                results[cur.charge] = results[cur.charge] + cur
            else:
                results[cur.charge] = cur
        nonzero = [w for w in results.values() if not w.is_zero()]
        if not nonzero:
            return FockVector.zero(v.charge)
        if len(nonzero) > 1:
            raise ValueError("expression result mixes charges")
        return nonzero[0]

    def to_json(self) -> dict:
        return {
            "terms": [
                {"coeff": _atom_coeff_json(t.coeff), "ops": [_atom_json(a) for a in t.atoms]}
                for t in self.terms
            ]
        }


def _atom_coeff_json(c: RatFun):
    from .ratfun import rat_to_json

    return rat_to_json(c)


def _atom_json(atom: tuple):
    kind = atom[0]
    if kind == "kernel":
        return {"op": "kernel", "kernel": atom[1].name, "mode": atom[2]}
    if kind == "mul":
        return {"op": "mul", "value": symfunc_to_json(atom[1])}
    if kind == "perp":
        return {"op": "perp", "value": symfunc_to_json(atom[1])}
    if kind == "heis":
        return {"op": "heisenberg", "mode": atom[1]}
    if kind == "twisted":
        return {"op": "twisted-heisenberg", "mode": atom[1]}
    if kind == "virasoro":
        return {"op": "virasoro", "beta": str(atom[1]), "mode": atom[2]}
    if kind == "scale_p":
        return {"op": "scale_p"}
    return {"op": "id"}


def _apply_atom(atom: tuple, v: FockVector) -> FockVector:
    kind = atom[0]
    if kind == "kernel":
        return mode_apply(atom[1], atom[2], v)
    if kind == "mul":
        return FockVector(v.charge, atom[1] * v.body)
    if kind == "perp":
        return FockVector(v.charge, perp_apply(atom[1], v.body))
    if kind == "heis":
        return heisenberg_mode(atom[1], v)
    if kind == "twisted":
        return twisted_heisenberg_mode(atom[1], v)
    if kind == "virasoro":
        return virasoro_mode(atom[1], atom[2], v)
    if kind == "scale_p":
        return FockVector(v.charge, v.body.scale_p(atom[1]))
    if kind == "id":
        return v
    raise ValueError(f"unknown atom {atom!r}")


@dataclass(frozen=True)
class Verdict:
    equal: bool
    charge: int | None = None
    partition: Partition | None = None
    lhs: FockVector | None = None
    rhs: FockVector | None = None

    def witness_json(self) -> dict | None:
        if self.equal:
            return None
        return {
            "charge": self.charge,
            "p": list(self.partition),
            "lhs": fock_to_json(self.lhs),
            "rhs": fock_to_json(self.rhs),
        }


def check_mode_identity(
    lhs: ModeExpression,
    rhs: ModeExpression,
    max_degree: int,
    charges: Iterable[int],
) -> Verdict:
    """Evaluate both sides on every z^m p_la with m in charges, |la| <= max_degree.

    Returns the first discrepancy in the fixed enumeration order (charges
    ascending, partitions by weight then revlex) or equality.
    """
    for m in sorted(charges):
        for la in partitions_up_to(max_degree):
            v = FockVector(m, SymFunc.monomial(la))
            left = lhs.apply(v)
            right = rhs.apply(v)
            if left != right:
                return Verdict(False, m, la, left, right)
    return Verdict(True)
