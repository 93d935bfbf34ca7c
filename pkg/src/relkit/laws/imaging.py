"""Laws of existential images, inverse images and the power relator."""

from .. import oracle
from ..images import (
    existential_image,
    existential_image_syq,
    inverse_image,
    inverse_image_syq,
    power_relator,
)
from ..powerset import membership
from ..relcore import (
    identity,
    is_injective,
    is_mapping,
    is_surjective,
    is_total,
    is_univalent,
    syq,
    top,
)
from .engine import law


def _xy(g):
    return g.universes("X Y")


@law("images", "existential image matches the subset-image oracle", "oracle", size=4)
def _(g):
    X, Y = _xy(g)
    R = g.rel("R", X, Y)
    return existential_image(R) == oracle.oracle_exim(R)


@law("images", "inverse image matches the preimage oracle", "oracle", size=4)
def _(g):
    X, Y = _xy(g)
    R = g.rel("R", X, Y)
    return inverse_image(R) == oracle.oracle_inverse_image(R)


@law("images", "power relator matches the quantifier oracle", "oracle", size=4)
def _(g):
    X, Y = _xy(g)
    R = g.rel("R", X, Y)
    return power_relator(R) == oracle.oracle_power_relator(R)


@law("images", "image fast path agrees with the symmetric quotient route", "existential image", size=4)
def _(g):
    X, Y = _xy(g)
    R = g.rel("R", X, Y)
    return existential_image(R) == existential_image_syq(R) and inverse_image(R) == inverse_image_syq(R)


@law("images", "existential and inverse images are mappings", "existential image", size=4)
def _(g):
    X, Y = _xy(g)
    R = g.rel("R", X, Y)
    return is_mapping(existential_image(R)) and is_mapping(inverse_image(R))


@law("images", "images simulate the relation", "existential image", size=4)
def _(g):
    X, Y = _xy(g)
    R = g.rel("R", X, Y)
    e, e2 = membership(X).epsilon, membership(Y).epsilon
    return e.T @ R == existential_image(R) @ e2.T and R @ e2 == e @ inverse_image(R).T


@law("images", "existential images are multiplicative", "existential image", size=4)
def _(g):
    X, Y, Z = g.universes("X Y Z")
    R, S = g.rel("R", X, Y), g.rel("S", Y, Z)
    return existential_image(R @ S) == existential_image(R) @ existential_image(S)


@law("images", "image of the identity is the identity", "existential image", size=4)
def _(g):
    X = g.universe("X")
    return existential_image(identity(X)) == identity(membership(X).power)


@law("images", "inverse image of a mapping is monotone", "orderings", size=4)
def _(g):
    X, Y = _xy(g)
    f = g.rel("f", X, Y, "mapping")
    om, om2 = membership(X).omega, membership(Y).omega
    inv = inverse_image(f)
    return (om2 @ inv) <= inv @ om


@law("images", "order below an inverse image of a mapping", "orderings", size=4)
def _(g):
    X, Y = _xy(g)
    f = g.rel("f", X, Y, "mapping")
    om, om2 = membership(X).omega, membership(Y).omega
    return om @ inverse_image(f).T == existential_image(f) @ om2


@law("images", "singletons through the converse inverse image", "singletons", size=4)
def _(g):
    X, Y = _xy(g)
    R = g.rel("R", X, Y)
    bx, by = membership(X), membership(Y)
    back = inverse_image(R).T @ by.sigma.T
    return (bx.sigma @ back) <= R and bx.epsilon @ back == R


@law("images", "singletons commute with the image of a mapping", "singletons", size=4)
def _(g):
    X, Y = _xy(g)
    f = g.rel("f", X, Y, "mapping")
    return membership(X).sigma @ existential_image(f) == f @ membership(Y).sigma


@law("images", "inverse then forward image of a mapping", "mappings", size=4)
def _(g):
    X, Y = _xy(g)
    f = g.rel("f", X, Y, "mapping")
    th, back = existential_image(f), inverse_image(f).T
    return back @ inverse_image(f) @ th == back @ th.T @ th


@law("images", "restricting an image by the converse inverse image", "mappings", size=4)
def _(g):
    X, Y = _xy(g)
    f = g.rel("f", X, Y, "mapping")
    th, back = existential_image(f), inverse_image(f).T
    px, py = th.src, th.tgt
    return (back @ top(py, py)) & th == back & (top(px, px) @ th)


@law("images", "converse inverse image below the image for surjective mappings", "mappings", size=4)
def _(g):
    X, Y = _xy(g)
    f = g.rel("f", X, Y, "surjective mapping")
    ex, ey = membership(X).epsilon, membership(Y).epsilon
    return inverse_image(f).T <= existential_image(f) and syq(ex, f @ ey) <= syq(f.T @ ex, ey)


@law("images", "converse inverse image of a surjective mapping is univalent", "mappings", size=4)
def _(g):
    X, Y = _xy(g)
    f = g.rel("f", X, Y, "surjective mapping")
    th, back = existential_image(f), inverse_image(f).T
    return is_univalent(back) and th & (back @ top(th.tgt, th.tgt)) == back


@law("images", "power relator of a univalent relation is univalent", "power relator", size=4)
def _(g):
    X, Y = _xy(g)
    return is_univalent(power_relator(g.rel("R", X, Y, "univalent")))


@law("images", "power relator of a surjective relation is surjective", "power relator", size=4)
def _(g):
    X, Y = _xy(g)
    return is_surjective(power_relator(g.rel("R", X, Y, "surjective")))


@law("images", "power relator of a total relation is total", "power relator", size=4)
def _(g):
    X, Y = _xy(g)
    return is_total(power_relator(g.rel("R", X, Y, "total")))


@law("images", "power relator of an injective relation is injective", "power relator", size=4)
def _(g):
    X, Y = _xy(g)
    return is_injective(power_relator(g.rel("R", X, Y, "injective")))


@law("images", "power relator of a mapping is its existential image", "power relator", size=4)
def _(g):
    X, Y = _xy(g)
    f = g.rel("f", X, Y, "mapping")
    return power_relator(f) == existential_image(f)
