"""Laws of the base algebra: composition, residuals and the symmetric quotient."""

from .. import oracle
from ..relcore import (
    bottom,
    identity,
    is_reflexive,
    is_surjective,
    is_total,
    is_transitive,
    is_univalent,
    left_residual,
    right_residual,
    syq,
    top,
)
from .engine import law


def _iff(*claims: bool) -> bool:
    return all(c == claims[0] for c in claims)


# composition and the lattice


@law("core", "composition is associative", "composition")
def _(g):
    W, X, Y, Z = g.universes("W X Y Z")
    R, S, T = g.rel("R", W, X), g.rel("S", X, Y), g.rel("T", Y, Z)
    return (R @ S) @ T == R @ (S @ T)


@law("core", "converse reverses composition", "composition")
def _(g):
    X, Y, Z = g.universes("X Y Z")
    R, S = g.rel("R", X, Y), g.rel("S", Y, Z)
    return (R @ S).T == S.T @ R.T


@law("core", "identity is neutral for composition", "composition")
def _(g):
    X, Y = g.universes("X Y")
    R = g.rel("R", X, Y)
    return identity(X) @ R == R and R @ identity(Y) == R


@law("core", "composition distributes over union", "composition")
def _(g):
    X, Y, Z = g.universes("X Y Z")
    R, S, T = g.rel("R", X, Y), g.rel("S", X, Y), g.rel("T", Y, Z)
    return (R | S) @ T == (R @ T) | (S @ T)


@law("core", "composition matches the pointwise definition", "oracle")
def _(g):
    X, Y, Z = g.universes("X Y Z")
    R, S = g.rel("R", X, Y), g.rel("S", Y, Z)
    return R @ S == oracle.oracle_compose(R, S)


@law("core", "predicates match their row and column counts", "oracle")
def _(g):
    X, Y = g.universes("X Y")
    R = g.rel("R", X, Y)
    rows, cols = R.bits.sum(axis=1), R.bits.sum(axis=0)
    return (
        is_univalent(R) == bool((rows <= 1).all())
        and is_total(R) == bool((rows >= 1).all())
        and is_surjective(R) == bool((cols >= 1).all())
    )


@law("core", "dedekind rule", "prerequisites")
def _(g):
    X, Y, Z = g.universes("X Y Z")
    R, S, Q = g.rel("R", X, Y), g.rel("S", Y, Z), g.rel("Q", X, Z)
    return ((R @ S) & Q) <= (R & (Q @ S.T)) @ (S & (R.T @ Q))


@law("core", "schroeder equivalences", "prerequisites")
def _(g):
    X, Y, Z = g.universes("X Y Z")
    A, B, C = g.rel("A", X, Y), g.rel("B", Y, Z), g.rel("C", X, Z)
    return _iff((A @ B) <= C, (A.T @ ~C) <= ~B, (~C @ B.T) <= ~A)


@law("core", "mappings shunt across an inclusion", "prerequisites")
def _(g):
    W, X, Y = g.universes("W X Y")
    f = g.rel("f", X, Y, "mapping")
    A, B = g.rel("A", W, X), g.rel("B", W, Y)
    return _iff((A @ f) <= B, A <= B @ f.T)


@law("core", "destroy and append through a univalent relation", "prerequisites")
def _(g):
    W, X, Y = g.universes("W X Y")
    u = g.rel("g", X, Y, "univalent")
    A, B = g.rel("A", W, X), g.rel("B", W, Y)
    return (A & (B @ u.T)) @ u == (A @ u) & B


@law("core", "negated diagonal part", "prerequisites")
def _(g):
    X = g.universe("X")
    D = g.rel("D", X, X)
    i, t = identity(X), top(X, X)
    return ~((i & D) @ t) == (i & ~D) @ t


@law("core", "two mappings disagree symmetrically", "prerequisites")
def _(g):
    X, Y = g.universes("X Y")
    f, h = g.rel("f", X, Y, "mapping"), g.rel("g", X, Y, "mapping")
    t = top(Y, Y)
    return (~f & h) @ t == (f & ~h) @ t


# residuals


@law("core", "residual galois connection", "residuals")
def _(g):
    X, Y, Z = g.universes("X Y Z")
    A, B, C = g.rel("A", X, Y), g.rel("B", Y, Z), g.rel("C", X, Z)
    return _iff((A @ B) <= C, A <= left_residual(C, B), B <= right_residual(A, C))


@law("core", "left residual matches the pointwise definition", "oracle")
def _(g):
    X, Y, Z = g.universes("X Y Z")
    C, B = g.rel("C", X, Z), g.rel("B", Y, Z)
    return left_residual(C, B) == oracle.oracle_left_residual(C, B)


@law("core", "right residual matches the pointwise definition", "oracle")
def _(g):
    X, Y, Z = g.universes("X Y Z")
    A, C = g.rel("A", X, Y), g.rel("C", X, Z)
    return right_residual(A, C) == oracle.oracle_right_residual(A, C)


@law("core", "self residual is a preorder", "residuals")
def _(g):
    X, Y = g.universes("X Y")
    R = g.rel("R", X, Y)
    s = right_residual(R, R)
    return is_reflexive(s) and is_transitive(s)


@law("core", "residuals into top or out of bottom are top", "residuals")
def _(g):
    X, Y, Z = g.universes("X Y Z")
    B = g.rel("B", Y, Z)
    return left_residual(top(X, Z), B) == top(X, Y) and right_residual(bottom(X, Y), top(X, Z)) == top(Y, Z)


@law("core", "nested residuals reassociate", "residuals")
def _(g):
    W, X, Y, Z = g.universes("W X Y Z")
    Q, R, T = g.rel("Q", X, Y), g.rel("R", X, Z), g.rel("T", W, Z)
    return left_residual(right_residual(Q, R), T) == right_residual(Q, left_residual(R, T))


@law("core", "self residual is its own left residual", "residuals")
def _(g):
    X, Y = g.universes("X Y")
    Q = g.rel("Q", X, Y)
    s = right_residual(Q, Q)
    return s == left_residual(s, s)


@law("core", "residual through a total factor", "residuals")
def _(g):
    X, Y, V, Z = g.universes("X Y V Z")
    Q, R = g.rel("Q", X, Z), g.rel("R", Y, V)
    U = g.rel("U", V, Z, "total")
    return left_residual(Q, R @ U) <= left_residual(Q @ U.T, R)


# symmetric quotient


@law("syq", "symmetric quotient matches column comparison", "oracle")
def _(g):
    V, W, Z = g.universes("V W Z")
    R, S = g.rel("R", V, W), g.rel("S", V, Z)
    return syq(R, S) == oracle.oracle_syq(R, S)


@law("syq", "symmetric quotient is the meet of two residuals", "symmetric quotient")
def _(g):
    V, W, Z = g.universes("V W Z")
    R, S = g.rel("R", V, W), g.rel("S", V, Z)
    return syq(R, S) == right_residual(R, S) & left_residual(R.T, S.T)


@law("syq", "symmetric quotient of a relation with itself is an equivalence", "symmetric quotient")
def _(g):
    V, W = g.universes("V W")
    R = g.rel("R", V, W)
    s = syq(R, R)
    return identity(W) <= s and s.T == s and is_transitive(s)


@law("syq", "converse of a symmetric quotient swaps its arguments", "symmetric quotient")
def _(g):
    V, W, Z = g.universes("V W Z")
    R, S = g.rel("R", V, W), g.rel("S", V, Z)
    return syq(R, S).T == syq(S, R)


@law("syq", "symmetric quotient is difunctional", "symmetric quotient")
def _(g):
    V, W, Z = g.universes("V W Z")
    R, S = g.rel("R", V, W), g.rel("S", V, Z)
    s = syq(R, S)
    return (s @ s.T @ s) <= s


@law("syq", "symmetric quotient of intersections and unions", "symmetric quotient")
def _(g):
    V, W, Z = g.universes("V W Z")
    A, B, C = g.rel("A", V, W), g.rel("B", V, W), g.rel("C", V, Z)
    lhs = syq(A, C) & syq(B, C)
    return lhs <= syq(A & B, C) & syq(A | B, C)


@law("syq", "cancellation of a symmetric quotient", "cancellation")
def _(g):
    V, W, Z = g.universes("V W Z")
    A, B = g.rel("A", V, W), g.rel("B", V, Z)
    s = syq(A, B)
    return A @ s == B & (top(V, W) @ s)


@law("syq", "cancellation is exact for a surjective quotient", "cancellation")
def _(g):
    V, W, Z = g.universes("V W Z")
    A = g.rel("A", V, W)
    h = g.rel("h", Z, W, "mapping")
    B = A @ h.T  # every column of B is a column of A
    s = syq(A, B)
    g.assume(is_surjective(s))
    return A @ s == B


@law("syq", "chained symmetric quotients", "cancellation")
def _(g):
    V, W, X, Y = g.universes("V W X Y")
    A, B, C = g.rel("A", V, W), g.rel("B", V, X), g.rel("C", V, Y)
    chain = syq(A, B) @ syq(B, C)
    direct = syq(A, C)
    return chain == direct & (syq(A, B) @ top(X, Y)) and chain == direct & (top(W, X) @ syq(B, C))


@law("syq", "chained symmetric quotients through a total quotient", "cancellation")
def _(g):
    V, W, X, Y = g.universes("V W X Y")
    A, C = g.rel("A", V, W), g.rel("C", V, Y)
    h = g.rel("h", X, W, "surjective mapping")
    B = A @ h.T  # every column of A occurs in B
    g.assume(is_total(syq(A, B)))
    return syq(A, B) @ syq(B, C) == syq(A, C)


@law("syq", "chained symmetric quotients through a surjective quotient", "cancellation")
def _(g):
    V, W, X, Y = g.universes("V W X Y")
    B, A = g.rel("B", V, X), g.rel("A", V, W)
    h = g.rel("h", Y, X, "mapping")
    C = B @ h.T
    g.assume(is_surjective(syq(B, C)))
    return syq(A, B) @ syq(B, C) == syq(A, C)


@law("syq", "residual of symmetric quotients", "cancellation")
def _(g):
    V, A_, B_, C_ = g.universes("V A B C")
    X, Y, Z = g.rel("X", V, A_), g.rel("Y", V, B_), g.rel("Z", V, C_)
    return syq(Y, Z) <= right_residual(syq(X, Y), syq(X, Z))


@law("syq", "symmetric quotient of symmetric quotients", "cancellation")
def _(g):
    V, A_, B_, C_ = g.universes("V A B C")
    X, Y, Z = g.rel("X", V, A_), g.rel("Y", V, B_), g.rel("Z", V, C_)
    return syq(Y, Z) <= syq(syq(X, Y), syq(X, Z))


@law("syq", "symmetric quotient of surjective symmetric quotients", "cancellation")
def _(g):
    V, A_, B_, C_ = g.universes("V A B C")
    X = g.rel("X", V, A_)
    hy, hz = g.rel("hy", B_, A_, "mapping"), g.rel("hz", C_, A_, "mapping")
    Y, Z = X @ hy.T, X @ hz.T
    g.drawn.update(Y=Y, Z=Z)
    g.assume(is_surjective(syq(X, Y)) and is_surjective(syq(X, Z)))
    return syq(syq(X, Y), syq(X, Z)) == syq(Y, Z)


@law("syq", "symmetric quotient through a surjective mapping", "symmetric quotient")
def _(g):
    U, V, A_, B_ = g.universes("U V A B")
    f = g.rel("f", U, V, "surjective mapping")
    X, Y = g.rel("X", U, A_), g.rel("Y", V, B_)
    return syq(X, f @ Y) <= syq(f.T @ X, Y)
