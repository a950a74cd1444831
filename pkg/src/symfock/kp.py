"""The KP bilinear identity in the fermionic form, exactly.

For charge-0 tau the bilinear operator couples the fermion modes along
the anticommutator diagonal a + b = -1,

    Omega(tau1 (x) tau2) = sum_a  fermion+[a] tau1 (x) fermion-[-1-a] tau2,

landing in the charge (+1, -1) component of B (x) B.  (In half-integer
mode labels this is the usual pairing of K_{k+1/2} with its dual; the
literal-power indexing used here shifts the diagonal to -1.)  The mode
sum is finite: fermion+[a] kills charge-0 bodies for a >= deg tau1 and
fermion-[-1-a] kills them for a < -deg tau2, so a runs over
[-deg tau2, deg tau1 - 1] and the result is exact with no truncation.
tau is a KP tau-function iff Omega(tau (x) tau) = 0; with the deformed
kernels the same pairing tests the t-deformed hierarchy.
"""

from __future__ import annotations

from itertools import combinations

from .bases import schur
from .fock import DEFORMED_MINUS, DEFORMED_PLUS, FERMION_MINUS, FERMION_PLUS, FockVector, mode_apply
from .partitions import Partition, partitions_up_to, revlex_key, weight
from .ratfun import RatFun, rat_to_json
from .symfunc import SymFunc

PairKey = tuple[Partition, Partition]


class TensorState:
    """An element of B^(left) (x) B^(right), sparse over partition pairs."""

    __slots__ = ("left_charge", "right_charge", "terms")

    def __init__(self, left_charge: int, right_charge: int, terms: dict[PairKey, RatFun] | None = None):
        self.left_charge = left_charge
        self.right_charge = right_charge
        self.terms = {k: c for k, c in (terms or {}).items() if not c.is_zero()}

    def is_zero(self) -> bool:
        return not self.terms

    def add_product(self, left: SymFunc, right: SymFunc) -> None:
        for la, c in left.terms.items():
            for mu, d in right.terms.items():
                key = (la, mu)
                prod = c * d
                acc = self.terms.get(key)
                s = prod if acc is None else acc + prod
                if s.is_zero():
                    self.terms.pop(key, None)
                else:
                    self.terms[key] = s

    def map_bodies(self, fn) -> "TensorState":
        """Apply a SymFunc endomorphism to both tensor legs, coefficientwise."""
        out = TensorState(self.left_charge, self.right_charge)
        for (la, mu), c in self.terms.items():
            left = fn(SymFunc.monomial(la, c))
            right = fn(SymFunc.monomial(mu))
            out.add_product(left, right)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorState):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        if (self.left_charge, self.right_charge) != (other.left_charge, other.right_charge):
            return False
        if self.terms.keys() != other.terms.keys():
            return False
        return all(other.terms[k] == c for k, c in self.terms.items())

    def __repr__(self) -> str:
        if self.is_zero():
            return "TensorState(0)"
        return f"TensorState({len(self.terms)} terms, charges ({self.left_charge},{self.right_charge}))"


def tensor_to_json(state: TensorState) -> dict:
    entries = sorted(
        state.terms.items(),
        key=lambda kv: (
            weight(kv[0][0]) + weight(kv[0][1]),
            revlex_key(kv[0][0]),
            revlex_key(kv[0][1]),
        ),
    )
    return {
        "left_charge": state.left_charge,
        "right_charge": state.right_charge,
        "terms": [
            {"left": list(la), "right": list(mu), "coeff": rat_to_json(c)}
            for (la, mu), c in entries
        ],
    }


def omega_apply(tau1: SymFunc, tau2: SymFunc, deformed: bool = False) -> TensorState:
    """The bilinear pairing sum_a K+[a] tau1 (x) K-[-1-a] tau2, exactly."""
    plus, minus = (DEFORMED_PLUS, DEFORMED_MINUS) if deformed else (FERMION_PLUS, FERMION_MINUS)
    out = TensorState(+1, -1)
    d1, d2 = tau1.degree(), tau2.degree()
    if d1 < 0 or d2 < 0:
        return out
    for a in range(-d2, d1):
        left = mode_apply(plus, a, FockVector(0, tau1))
        if left.is_zero():
            continue
        right = mode_apply(minus, -1 - a, FockVector(0, tau2))
        if right.is_zero():
            continue
        out.add_product(left.body, right.body)
    return out


def is_tau(tau: SymFunc, deformed: bool = False) -> bool:
    """True iff tau satisfies the bilinear identity (zero tau counts)."""
    return omega_apply(tau, tau, deformed).is_zero()


def search_negative_control(degree_bound: int):
    """First small integer Schur combination violating the bilinear identity.

    Scans tau = s_la + s_mu and tau = 1 + s_la + s_mu over partitions of
    weight <= degree_bound in a fixed order; returns (tau, witness) or
    None when the space is exhausted.
    """
    pool = [la for la in partitions_up_to(degree_bound) if la]
    for la, mu in combinations(pool, 2):
        tau = schur(la) + schur(mu)
        state = omega_apply(tau, tau)
        if not state.is_zero():
            return tau, state
    for la, mu in combinations(pool, 2):
        tau = SymFunc.one() + schur(la) + schur(mu)
        state = omega_apply(tau, tau)
        if not state.is_zero():
            return tau, state
    return None
