"""Membership, the powerset ordering, singletons, bounds and quotients of membership."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import NotAnEquivalence, ensure
from .finset import UNIT, Atomic, Power, Universe
from .relcore import (
    Relation,
    identity,
    is_equivalence,
    is_mapping,
    is_preorder,
    is_surjective,
    syq,
    top,
)


class MembershipBundle:
    """epsilon relates x to S when x is in S; the rest is derived from it."""

    def __init__(self, base: Universe):
        self.base = base
        self.power = Power(base)
        n = base.size
        cols = np.arange(self.power.size, dtype=np.int64)
        bits = ((cols[None, :] >> np.arange(n, dtype=np.int64)[:, None]) & 1).astype(bool)
        self.epsilon = Relation._wrap(base, self.power, bits)

    def __repr__(self):
        return f"MembershipBundle({self.base.name})"

    @cached_property
    def omega(self) -> Relation:
        e = self.epsilon
        return ~(e.T @ ~e)

    @cached_property
    def sigma(self) -> Relation:
        return syq(identity(self.base), self.epsilon)


@lru_cache(maxsize=64)
def membership(base: Universe) -> MembershipBundle:
    return MembershipBundle(base)


def atoms(b: MembershipBundle) -> Relation:
    return b.sigma.T @ b.sigma


def atoms_vector(b: MembershipBundle) -> Relation:
    return atoms(b) @ top(b.power, UNIT)


def lub(b: MembershipBundle, x: Relation) -> Relation:
    """Column-wise least upper bound: each column of x is a set of subsets."""
    e = b.epsilon
    return syq(e, e @ x)


def glb(b: MembershipBundle, x: Relation) -> Relation:
    e = ~b.epsilon
    return syq(e, e @ x)


def lubR(b: MembershipBundle, r: Relation) -> Relation:
    """Row-wise least upper bound, for r: K -> power."""
    e = b.epsilon
    return syq(e @ r.T, e)


def glbR(b: MembershipBundle, r: Relation) -> Relation:
    e = ~b.epsilon
    return syq(e @ r.T, e)


def _safe_name(text: str) -> str:
    return re.sub(r"\W+", "_", text).strip("_") or "Q"


def natural_projection(equiv: Relation, name: str | None = None) -> tuple[Atomic, Relation]:
    """Quotient universe labelled "[repr]" by least-index representatives, and the projection."""
    if equiv.src != equiv.tgt or not is_equivalence(equiv):
        raise NotAnEquivalence(f"relation on {equiv.src.name} is not an equivalence")
    u = equiv.src
    reps = equiv.bits.argmax(axis=1) if u.size else np.zeros(0, dtype=np.int64)
    classes = sorted({int(r) for r in reps})
    q = Atomic(name or _safe_name(u.name) + "_quot", tuple(f"[{u.labels[r]}]" for r in classes))
    pos = {r: k for k, r in enumerate(classes)}
    a = np.zeros((u.size, q.size), dtype=bool)
    for i, r in enumerate(reps):
        a[i, pos[int(r)]] = True
    return q, Relation._wrap(u, q, a)


@dataclass(frozen=True)
class QuotientBundle:
    equivalence: Relation
    quotient_universe: Atomic
    xi: Relation
    omega_prime: Relation
    Q: Relation
    eta: Relation
    epsilon_xi: Relation

    @property
    def omega_xi(self) -> Relation:
        e = self.epsilon_xi
        return ~(e.T @ ~e)


def quotient_membership(equiv: Relation) -> QuotientBundle:
    bundle = build_quotient(equiv)
    for name, ok in quotient_claims(bundle).items():
        ensure(ok, f"quotient of membership: {name} fails")
    return bundle


def build_quotient(equiv: Relation) -> QuotientBundle:
    """The quotient construction without the post-construction checks."""
    x = equiv.src
    if equiv.tgt != x or not is_equivalence(equiv):
        raise NotAnEquivalence(f"relation on {x.name} is not an equivalence")
    b = membership(x)
    e = b.epsilon
    saturated = equiv @ e
    omega_prime = ~(e.T @ ~saturated)
    Q = syq(saturated, saturated)
    qx, xi = natural_projection(equiv)
    _, eta = natural_projection(Q, _safe_name(qx.name) + "_pow")
    eps_xi = xi.T @ e @ eta
    return QuotientBundle(equiv, qx, xi, omega_prime, Q, eta, eps_xi)


def quotient_claims(qb: QuotientBundle, b: MembershipBundle | None = None) -> dict[str, bool]:
    """Every identity the quotient construction promises, evaluated."""
    b = b or membership(qb.equivalence.src)
    e, xi, eta, ex = b.epsilon, qb.xi, qb.eta, qb.epsilon_xi
    qx = qb.quotient_universe
    return {
        "projection is a surjective mapping": is_mapping(xi) and is_surjective(xi),
        "projection kernel is the equivalence": xi @ xi.T == qb.equivalence,
        "omega' is a preorder": is_preorder(qb.omega_prime),
        "Q is an equivalence": is_equivalence(qb.Q),
        "Q is the symmetric part of omega'": qb.Q == (qb.omega_prime & qb.omega_prime.T),
        "Q is the kernel of eta": qb.Q == eta @ eta.T,
        "eps Q = Xi eps": e @ qb.Q == qb.equivalence @ e,
        "quotient membership is extensional": syq(ex, ex) == identity(ex.tgt),
        "quotient membership hits every subset": is_surjective(syq(ex, membership(qx).epsilon)),
        "xi^T eps = eps_Xi eta^T": xi.T @ e == ex @ eta.T,
        "omega' eta = eta omega_Xi": qb.omega_prime @ eta == eta @ qb.omega_xi,
    }
