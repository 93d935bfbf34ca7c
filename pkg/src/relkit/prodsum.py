"""Direct products and sums, Kronecker/fork/join, vectorization and point encodings."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import TypeMismatch, ensure
from .finset import UNIT, Pair, Power, Sum, Universe
from .powerset import membership
from .relcore import Relation, bottom, identity, syq, top


@dataclass(frozen=True)
class ProductWitness:
    left: Universe
    right: Universe
    carrier: Pair
    pi: Relation
    rho: Relation


@dataclass(frozen=True)
class SumWitness:
    left: Universe
    right: Universe
    carrier: Sum
    iota: Relation
    kappa: Relation


@lru_cache(maxsize=256)
def product(x: Universe, y: Universe) -> ProductWitness:
    c = Pair(x, y)
    pi = np.repeat(np.eye(x.size, dtype=bool), y.size, axis=0)
    rho = np.tile(np.eye(y.size, dtype=bool), (x.size, 1))
    w = ProductWitness(x, y, c, Relation._wrap(c, x, pi), Relation._wrap(c, y, rho))
    p, r = w.pi, w.rho
    ensure(p.T @ p == identity(x) or c.size == 0, "pi is not surjective and univalent")
    ensure(r.T @ r == identity(y) or c.size == 0, "rho is not surjective and univalent")
    ensure((p @ p.T) & (r @ r.T) == identity(c), "projections do not separate pairs")
    ensure(p.T @ r == top(x, y), "projections do not cover all pairs")
    return w


@lru_cache(maxsize=256)
def direct_sum(x: Universe, y: Universe) -> SumWitness:
    c = Sum(x, y)
    iota = np.zeros((x.size, c.size), dtype=bool)
    iota[:, : x.size] = np.eye(x.size, dtype=bool)
    kappa = np.zeros((y.size, c.size), dtype=bool)
    kappa[:, x.size :] = np.eye(y.size, dtype=bool)
    w = SumWitness(x, y, c, Relation._wrap(x, c, iota), Relation._wrap(y, c, kappa))
    i, k = w.iota, w.kappa
    ensure(i @ i.T == identity(x), "iota is not an injective mapping")
    ensure(k @ k.T == identity(y), "kappa is not an injective mapping")
    ensure((i.T @ i) | (k.T @ k) == identity(c), "injections do not cover the sum")
    ensure(i @ k.T == bottom(x, y), "injections overlap")
    return w


def kronecker(a: Relation, b: Relation) -> Relation:
    """Relates (x, y) to (u, v) when a(x, u) and b(y, v)."""
    p, q = product(a.src, b.src), product(a.tgt, b.tgt)
    return (p.pi @ a @ q.pi.T) & (p.rho @ b @ q.rho.T)


def fork(c: Relation, d: Relation) -> Relation:
    """Relates z to (x, y) when c(z, x) and d(z, y)."""
    if c.src != d.src:
        raise TypeMismatch(f"fork: sources differ, {c.src.name} versus {d.src.name}", c.typ, d.typ)
    q = product(c.tgt, d.tgt)
    return (c @ q.pi.T) & (d @ q.rho.T)


def join(e: Relation, f: Relation) -> Relation:
    """Relates (x, y) to w when e(x, w) and f(y, w)."""
    if e.tgt != f.tgt:
        raise TypeMismatch(f"join: targets differ, {e.tgt.name} versus {f.tgt.name}", e.typ, f.typ)
    p = product(e.src, f.src)
    return (p.pi @ e) & (p.rho @ f)


@lru_cache(maxsize=128)
def swap(x: Universe, y: Universe) -> Relation:
    """(x, y) |-> (y, x)."""
    p, q = product(x, y), product(y, x)
    return (p.pi @ q.rho.T) & (p.rho @ q.pi.T)


@lru_cache(maxsize=128)
def assoc(x: Universe, y: Universe, z: Universe) -> Relation:
    """((x, y), z) |-> (x, (y, z))."""
    inner = product(x, y)
    outer = product(inner.carrier, z)
    return fork(outer.pi @ inner.pi, kronecker(inner.rho, identity(z)))


def _pair_parts(u: Universe) -> tuple[Universe, Universe]:
    if not isinstance(u, Pair):
        raise TypeMismatch(f"expected a pair universe, got {u.name}", u)
    return u.left, u.right


def vec(r: Relation) -> Relation:
    """The relation as a vector on pairs."""
    p = product(r.src, r.tgt)
    return ((p.pi @ r) & p.rho) @ top(r.tgt, UNIT)


def unvec(v: Relation) -> Relation:
    if v.tgt != UNIT:
        raise TypeMismatch(f"unvec needs a vector into unit, got target {v.tgt.name}", v.typ)
    x, y = _pair_parts(v.src)
    p = product(x, y)
    return p.pi.T @ ((v @ top(UNIT, y)) & p.rho)


def relation_point(r: Relation) -> Relation:
    """The point of pow(X x Y) whose members are exactly the pairs of r."""
    e = membership(Pair(r.src, r.tgt)).epsilon
    return syq(e, vec(r))


def identity_point(x: Universe) -> Relation:
    p = product(x, x)
    e = membership(p.carrier).epsilon
    return syq(e, (p.pi & p.rho) @ top(x, UNIT))


def bot_point(x: Universe, y: Universe) -> Relation:
    c = Pair(x, y)
    return syq(membership(c).epsilon, bottom(c, UNIT))


def top_point(x: Universe, y: Universe) -> Relation:
    c = Pair(x, y)
    return syq(membership(c).epsilon, top(c, UNIT))


def decode_point(pt: Relation) -> Relation:
    """Inverse of relation_point: unvec of the membership column picked by pt."""
    if not isinstance(pt.src, Power):
        raise TypeMismatch(f"expected a point of a powerset, got {pt.src.name}", pt.typ)
    return unvec(membership(pt.src.base).epsilon @ pt)


def transposition_point_map(x: Universe, y: Universe) -> Relation:
    """pow(X x Y) -> pow(Y x X), transposing the encoded relation."""
    e = membership(Pair(x, y)).epsilon
    e2 = membership(Pair(y, x)).epsilon
    return syq(swap(x, y).T @ e, e2)


def addition_theorem_sides(q: Relation, r: Relation, s: Relation) -> tuple[Relation, Relation]:
    """Both sides of the syq/fork addition theorem for q: X->U, r: Y->V, s: X+Y->Z."""
    sm = direct_sum(q.src, r.src)
    if s.src != sm.carrier:
        raise TypeMismatch(f"s must start in {sm.carrier.name}, got {s.src.name}", s.typ)
    p = product(q.tgt, r.tgt)
    i, k = sm.iota, sm.kappa
    lhs = syq(s, (i.T @ q @ p.pi.T) | (k.T @ r @ p.rho.T))
    rhs = fork(syq(i @ s, q), syq(k @ s, r))
    return lhs, rhs


def addition_theorem_check(q: Relation, r: Relation, s: Relation) -> bool:
    lhs, rhs = addition_theorem_sides(q, r, s)
    return lhs == rhs


@dataclass(frozen=True)
class SumPowerIso:
    sum: SumWitness
    product: ProductWitness
    epsilon_x: Relation
    epsilon_y: Relation
    epsilon_sum: Relation
    epsilon_plus: Relation
    phi: Relation


@lru_cache(maxsize=32)
def sum_power_iso(x: Universe, y: Universe) -> SumPowerIso:
    """Subsets of X+Y versus pairs of subsets: the membership-like epsilon_plus and the bijection phi."""
    sm = direct_sum(x, y)
    ex, ey = membership(x).epsilon, membership(y).epsilon
    p = product(ex.tgt, ey.tgt)
    eps_plus = (sm.iota.T @ ex @ p.pi.T) | (sm.kappa.T @ ey @ p.rho.T)
    eps_sum = membership(sm.carrier).epsilon
    phi = syq(eps_sum, eps_plus)
    return SumPowerIso(sm, p, ex, ey, eps_sum, eps_plus, phi)
