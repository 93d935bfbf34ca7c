"""The Boolean algebra of subsets lifted to relations on the powerset.

Elements of pow(X) are treated as points; negation N, meet and join become
mappings between powerset (pairs) and powerset.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .binop import BinOp
from .errors import NotAPoint, TypeMismatch, ensure
from .finset import UNIT, Power, Universe
from .powerset import MembershipBundle, glbR, lubR, membership
from .prodsum import ProductWitness, fork, kronecker, product
from .relcore import (
    Relation,
    bottom,
    identity,
    is_bijective_mapping,
    is_mapping,
    is_point,
    is_surjective,
    syq,
    top,
)


@dataclass(frozen=True)
class LiftedAlgebra:
    base: Universe
    bundle: MembershipBundle
    product: ProductWitness
    N: Relation
    NN: Relation
    meet: Relation
    join: Relation
    bot_pt: Relation
    top_pt: Relation

    @property
    def power(self) -> Power:
        return self.bundle.power

    @property
    def meet_op(self) -> BinOp:
        return BinOp(self.meet)

    @property
    def join_op(self) -> BinOp:
        return BinOp(self.join)


def direct_table(base: Universe, combine) -> Relation:
    """Table of a set operation computed on subset indices, e.g. combine=np.bitwise_and."""
    p = Power(base)
    pp = product(p, p)
    idx = np.arange(p.size, dtype=np.int64)
    result = combine(idx[:, None], idx[None, :]).reshape(-1)
    a = np.zeros((pp.carrier.size, p.size), dtype=bool)
    a[np.arange(pp.carrier.size), result] = True
    return Relation._wrap(pp.carrier, p, a)


@lru_cache(maxsize=16)
def lifted(base: Universe) -> LiftedAlgebra:
    b = membership(base)
    e = b.epsilon
    p = b.power
    pp = product(p, p)
    n = syq(~e, e)
    meet = syq(fork(e, e), e)
    join = syq((~e @ pp.pi.T) & (~e @ pp.rho.T), ~e)
    alg = LiftedAlgebra(
        base=base,
        bundle=b,
        product=pp,
        N=n,
        NN=kronecker(n, n),
        meet=meet,
        join=join,
        bot_pt=syq(e, bottom(base, UNIT)),
        top_pt=syq(e, top(base, UNIT)),
    )
    ensure(is_bijective_mapping(n) and n @ n == identity(p), "N must be a bijective involution")
    for name, op in (("meet", meet), ("join", join)):
        ensure(is_mapping(op) and is_surjective(op), f"{name} must be a surjective mapping")
    ensure(is_point(alg.bot_pt) and is_point(alg.top_pt), "bottom and top must be points")
    cover = pp.pi | pp.rho
    ensure(meet == glbR(b, cover), "meet disagrees with the greatest-lower-bound route")
    ensure(join == lubR(b, cover), "join disagrees with the least-upper-bound route")
    ensure(meet == direct_table(base, np.bitwise_and), "meet disagrees with subset intersection")
    ensure(join == direct_table(base, np.bitwise_or), "join disagrees with subset union")
    return alg


def subset_of_point(b: MembershipBundle, u: Relation) -> Relation:
    """The point of pow(X) standing for the subset vector u: X -> unit."""
    if u.src != b.base or u.tgt != UNIT:
        raise TypeMismatch(f"expected a vector {b.base.name} -> unit", u.typ)
    return syq(b.epsilon, u)


def point_to_subset(b: MembershipBundle, e: Relation) -> Relation:
    if e.src != b.power or e.tgt != UNIT or not is_point(e):
        raise NotAPoint(f"expected a point of {b.power.name}")
    return b.epsilon @ e
