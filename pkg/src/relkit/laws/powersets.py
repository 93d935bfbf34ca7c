"""Laws of membership, the powerset order, singletons, bounds and quotients."""

from functools import lru_cache

from .. import oracle
from ..powerset import (
    atoms,
    build_quotient,
    glb,
    glbR,
    lub,
    lubR,
    membership,
    quotient_claims,
)
from ..relcore import (
    identity,
    is_injective,
    is_mapping,
    is_order,
    right_residual,
    syq,
    top,
)
from .engine import law


def _base(g):
    return membership(g.universe("X"))


@law("powerset", "membership matches the pointwise definition", "oracle", size=4)
def _(g):
    b = _base(g)
    return b.epsilon == oracle.oracle_membership(b.base)


@law("powerset", "membership is extensional", "membership", size=4)
def _(g):
    b = _base(g)
    return syq(b.epsilon, b.epsilon) == identity(b.power)


@law("powerset", "every column is some subset", "membership", size=4)
def _(g):
    b = _base(g)
    K = g.universe("K")
    R = g.rel("R", b.base, K)
    return top(b.power, b.power) @ syq(b.epsilon, R) == top(b.power, K)


@law("powerset", "powerset ordering is an order", "membership", size=4)
def _(g):
    b = _base(g)
    return is_order(b.omega) and b.omega == right_residual(b.epsilon, b.epsilon)


@law("powerset", "singleton injection is an injective mapping", "singletons", size=4)
def _(g):
    b = _base(g)
    return is_mapping(b.sigma) and is_injective(b.sigma)


@law("powerset", "atoms are exactly the singletons", "singletons", size=4)
def _(g):
    b = _base(g)
    a = atoms(b)
    sizes = b.epsilon.bits.sum(axis=0)
    return a <= identity(b.power) and bool((a.bits.diagonal() == (sizes == 1)).all())


@law("powerset", "singletons followed by non-membership give identity", "singletons", size=4)
def _(g):
    b = _base(g)
    return b.sigma @ b.epsilon.T == identity(b.base)


@law("powerset", "membership outside other elements", "singletons", size=4)
def _(g):
    b = _base(g)
    e, s, X = b.epsilon, b.sigma, b.base
    return ~(~identity(X) @ e) == s | ~(top(X, X) @ e)


@law("powerset", "singleton injection followed by the order", "singletons", size=4)
def _(g):
    b = _base(g)
    e, s, X = b.epsilon, b.sigma, b.base
    return s @ b.omega == e and s @ b.omega.T == s | ~(top(X, X) @ e)


@law("powerset", "membership splits into singletons and the rest", "singletons", size=4)
def _(g):
    b = _base(g)
    e, s, X = b.epsilon, b.sigma, b.base
    return e == s | (e & ~(top(X, X) @ s))


@law("powerset", "members of non-singletons", "singletons", size=4)
def _(g):
    b = _base(g)
    e, s, X = b.epsilon, b.sigma, b.base
    ni, t = ~identity(X), top(X, X)
    return (ni @ e) & ~(ni @ s) == (t @ e) & ~(t @ s)


@law("powerset", "order restricted to overlapping subsets", "singletons", size=4)
def _(g):
    b = _base(g)
    e, om = b.epsilon, b.omega
    return om & (e.T @ e) == om & (e.T @ top(b.base, b.power))


@law("powerset", "overlapping supersets cover the nonempty subsets", "singletons", size=4)
def _(g):
    b = _base(g)
    e, om, X = b.epsilon, b.omega, b.base
    return (om & (e.T @ e)) @ e.T == e.T @ top(X, X)


@law("powerset", "nonempty lower parts meet exactly when the sets overlap", "singletons", size=4)
def _(g):
    b = _base(g)
    e, om = b.epsilon, b.omega
    m = om & (e.T @ top(b.base, b.power))
    return m.T @ m == e.T @ e


@law("powerset", "membership cancels a negated image", "least upper bounds", size=4)
def _(g):
    b = _base(g)
    K = g.universe("K")
    R = g.rel("R", b.base, K)
    e = b.epsilon
    return e @ ~(e.T @ R) == ~R and ~e @ ~(~e.T @ R) == ~R


@law("powerset", "least upper bound matches union of members", "oracle", size=4)
def _(g):
    b = _base(g)
    K = g.universe("K", hi=4)
    R = g.rel("R", b.power, K)
    return lub(b, R) == oracle.oracle_lub(b.base, R)


@law("powerset", "greatest lower bound matches intersection of members", "oracle", size=4)
def _(g):
    b = _base(g)
    K = g.universe("K", hi=4)
    R = g.rel("R", b.power, K)
    return glb(b, R) == oracle.oracle_glb(b.base, R)


@law("powerset", "row-wise bounds are transposed column-wise bounds", "least upper bounds", size=4)
def _(g):
    b = _base(g)
    K = g.universe("K", hi=4)
    R = g.rel("R", K, b.power)
    return lubR(b, R) == lub(b, R.T).T and glbR(b, R) == glb(b, R.T).T


@law("powerset", "least upper bound is least among upper bounds", "least upper bounds", size=4)
def _(g):
    b = _base(g)
    K = g.universe("K", hi=4)
    R = g.rel("R", b.power, K)
    om = b.omega
    upper = right_residual(R, om)  # columns: subsets above every member
    least = upper & right_residual(upper.T, om.T)
    return lub(b, R) == least.T and is_mapping(lub(b, R).T)


@lru_cache(maxsize=256)
def _claims(equiv) -> dict[str, bool]:
    return quotient_claims(build_quotient(equiv))


def _quotient_law(claim: str):
    @law("powerset", f"quotient of membership: {claim}", "quotients", size=4)
    def _(g):
        X = g.universe("X")
        return _claims(g.equivalence("Xi", X))[claim]


for _claim in (
    "projection is a surjective mapping",
    "projection kernel is the equivalence",
    "omega' is a preorder",
    "Q is an equivalence",
    "Q is the symmetric part of omega'",
    "Q is the kernel of eta",
    "eps Q = Xi eps",
    "quotient membership is extensional",
    "quotient membership hits every subset",
    "xi^T eps = eps_Xi eta^T",
    "omega' eta = eta omega_Xi",
):
    _quotient_law(_claim)
