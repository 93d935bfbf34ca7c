"""Laws of the Boolean algebra of subsets lifted to the powerset."""

import numpy as np

from ..binop import distributes_over, is_associative, is_commutative
from ..boolalg import direct_table, lifted, point_to_subset, subset_of_point
from ..finset import UNIT
from ..powerset import glbR, lubR
from ..prodsum import fork, join, kronecker, swap
from ..relcore import (
    bottom,
    identity,
    is_bijective_mapping,
    is_mapping,
    is_point,
    is_surjective,
    is_univalent,
    syq,
    top,
)
from .engine import law


def _alg(g):
    return lifted(g.universe("X"))


def _parts(alg):
    b = alg.bundle
    return b.epsilon, b.omega, alg.product.pi, alg.product.rho


@law("boolalg", "meet and join agree across three constructions", "lifted algebra", size=3)
def _(g):
    alg = _alg(g)
    cover = alg.product.pi | alg.product.rho
    return (
        alg.meet == glbR(alg.bundle, cover) == direct_table(alg.base, np.bitwise_and)
        and alg.join == lubR(alg.bundle, cover) == direct_table(alg.base, np.bitwise_or)
    )


@law("boolalg", "negation is a bijective involution", "negation", size=3)
def _(g):
    alg = _alg(g)
    return is_bijective_mapping(alg.N) and alg.N @ alg.N == identity(alg.power)


@law("boolalg", "negation flips membership", "negation", size=3)
def _(g):
    alg = _alg(g)
    e, om, _, _ = _parts(alg)
    disjoint = ~(e.T @ e)
    return ~e @ alg.N == e and e @ alg.N == ~e and alg.N <= disjoint and om @ alg.N == disjoint


@law("boolalg", "membership through meet and join", "meet and join", size=3)
def _(g):
    alg = _alg(g)
    e, _, pi, rho = _parts(alg)
    return e @ alg.join.T == (e @ pi.T) | (e @ rho.T) and e @ alg.meet.T == fork(e, e)


@law("boolalg", "pairwise negation swaps meet and join", "meet and join", size=3)
def _(g):
    alg = _alg(g)
    _, _, pi, rho = _parts(alg)
    nn, n = alg.NN, alg.N
    return (
        nn @ pi == pi @ n
        and nn @ rho == rho @ n
        and nn @ alg.meet == alg.join @ n
        and nn @ alg.join == alg.meet @ n
    )


@law("boolalg", "meet and join projected back give the order", "meet and join", size=3)
def _(g):
    alg = _alg(g)
    _, om, pi, rho = _parts(alg)
    m, j = alg.meet, alg.join
    return m.T @ pi == om and m.T @ rho == om and j.T @ pi == om.T and j.T @ rho == om.T


@law("boolalg", "cones of meet and join", "meet and join", size=3)
def _(g):
    alg = _alg(g)
    _, om, pi, rho = _parts(alg)
    return (
        alg.meet @ om.T == (pi @ om.T) & (rho @ om.T) == join(om.T, om.T)
        and alg.join @ om == (pi @ om) & (rho @ om) == join(om, om)
    )


@law("boolalg", "meet and join recover membership", "meet and join", size=3)
def _(g):
    alg = _alg(g)
    e, _, pi, rho = _parts(alg)
    return (
        ((e @ pi.T) & (e @ rho.T)) @ alg.meet == e
        and ((e @ pi.T) | (e @ rho.T)) @ alg.join == e
        and fork(e, e) @ alg.meet == e
    )


@law("boolalg", "paired membership absorbs the order", "meet and join", size=3)
def _(g):
    alg = _alg(g)
    e, om, _, _ = _parts(alg)
    return fork(e, e) @ kronecker(om, om) == fork(e, e)


@law("boolalg", "meet commutes with a symmetric quotient", "meet and join", size=3)
def _(g):
    alg = _alg(g)
    e, _, pi, rho = _parts(alg)
    K = g.universe("K", hi=3)
    R = g.rel("R", alg.base, K)
    both = (e @ pi.T) & (e @ rho.T)
    return alg.meet.T @ syq(both, R) == syq(both @ alg.meet, R) and alg.meet.T @ syq(
        fork(e, e), R
    ) == syq(fork(e, e) @ alg.meet, R)


@law("boolalg", "join lies above the order-constrained projections", "meet and join", size=3)
def _(g):
    alg = _alg(g)
    _, om, pi, rho = _parts(alg)
    i = identity(alg.power)
    j = alg.join
    return (
        ((pi @ om) & rho) <= j
        and ((rho @ om) & pi) <= j
        and join(om, i) <= j
        and join(i, om) <= j
    )


@law("boolalg", "common lower bounds lie below the meet", "points", size=3)
def _(g):
    alg = _alg(g)
    _, om, _, _ = _parts(alg)
    p = alg.power
    a, c, d = g.point("a", p), g.point("c", p), g.point("d", p)
    g.assume(a <= om @ c and a <= om @ d)
    cd = join(c, d)
    return a <= om @ alg.meet.T @ cd and om @ alg.meet.T @ cd == fork(om, om) @ cd


@law("boolalg", "common upper bounds lie above the join", "points", size=3)
def _(g):
    alg = _alg(g)
    _, om, _, _ = _parts(alg)
    p = alg.power
    b, c, d = g.point("b", p), g.point("c", p), g.point("d", p)
    g.assume(b <= om.T @ c and b <= om.T @ d)
    cd = join(c, d)
    return b <= om.T @ alg.join.T @ cd and om.T @ alg.join.T @ cd == fork(om.T, om.T) @ cd


@law("boolalg", "diagonal of the pair set is univalent and surjective", "lattice laws", size=3)
def _(g):
    alg = _alg(g)
    _, _, pi, rho = _parts(alg)
    p = pi & rho
    return is_univalent(p) and is_surjective(p)


@law("boolalg", "meet and join are surjective mappings", "lattice laws", size=3)
def _(g):
    alg = _alg(g)
    return all(is_mapping(r) and is_surjective(r) for r in (alg.meet, alg.join))


@law("boolalg", "join distributes over meet", "lattice laws", size=3)
def _(g):
    alg = _alg(g)
    return distributes_over(alg.join_op, alg.meet_op)


@law("boolalg", "meet is monotone in both arguments", "lattice laws", size=3)
def _(g):
    alg = _alg(g)
    om = alg.bundle.omega
    return kronecker(om, om) @ alg.meet == alg.meet @ om


@law("boolalg", "absorption laws", "lattice laws", size=3)
def _(g):
    alg = _alg(g)
    _, _, pi, rho = _parts(alg)
    i = identity(alg.power)
    return (
        (pi.T & (rho.T @ alg.meet @ rho.T)) @ alg.join == i
        and (pi.T & (rho.T @ alg.join @ rho.T)) @ alg.meet == i
    )


@law("boolalg", "meet and join are associative", "lattice laws", size=3)
def _(g):
    alg = _alg(g)
    return is_associative(alg.meet_op) and is_associative(alg.join_op)


@law("boolalg", "meet is commutative and idempotent", "lattice laws", size=3)
def _(g):
    alg = _alg(g)
    _, _, pi, rho = _parts(alg)
    p = alg.power
    return (
        swap(p, p) @ alg.meet == alg.meet
        and is_commutative(alg.meet_op)
        and (pi & rho) <= alg.meet
        and join(identity(p), identity(p)) <= alg.meet
    )


@law("boolalg", "bottom and top points decode to the empty and full subsets", "points", size=3)
def _(g):
    alg = _alg(g)
    e = alg.bundle.epsilon
    X = alg.base
    return (
        is_point(alg.bot_pt)
        and is_point(alg.top_pt)
        and e @ alg.bot_pt == bottom(X, UNIT)
        and e @ alg.top_pt == top(X, UNIT)
    )


@law("boolalg", "subsets and points convert back and forth", "points", size=3)
def _(g):
    alg = _alg(g)
    u = g.vector("U", alg.base)
    pt = subset_of_point(alg.bundle, u)
    return is_point(pt) and point_to_subset(alg.bundle, pt) == u
