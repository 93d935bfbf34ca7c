"""Laws of direct products and sums, Kronecker/fork/join, vectorization and encodings."""

from .. import oracle
from ..finset import Pair
from ..powerset import membership
from ..prodsum import (
    addition_theorem_check,
    assoc,
    bot_point,
    decode_point,
    direct_sum,
    fork,
    identity_point,
    join,
    kronecker,
    product,
    relation_point,
    sum_power_iso,
    swap,
    top_point,
    transposition_point_map,
    unvec,
    vec,
)
from ..relcore import (
    bottom,
    identity,
    is_bijective_mapping,
    is_mapping,
    is_order,
    is_point,
    is_univalent,
    right_residual,
    syq,
    top,
)
from .engine import SAMPLED_BUDGET, law


def _small_pair(g):
    """Two universes whose product stays small enough for its powerset."""
    X = g.universe("X", hi=3)
    Y = g.universe("Y", hi=min(3, 6 // max(X.size, 1)))
    return X, Y


# witnesses


@law("prodsum", "projections form a direct product", "direct product")
def _(g):
    X, Y = g.universes("X Y")
    p = product(X, Y)
    pi, rho = p.pi, p.rho
    ok_sizes = X.size == 0 or Y.size == 0
    return (
        (ok_sizes or (pi.T @ pi == identity(X) and rho.T @ rho == identity(Y)))
        and (pi @ pi.T) & (rho @ rho.T) == identity(p.carrier)
        and (ok_sizes or pi.T @ rho == top(X, Y))
    )


@law("prodsum", "injections form a direct sum", "direct sum")
def _(g):
    X, Y = g.universes("X Y")
    s = direct_sum(X, Y)
    i, k = s.iota, s.kappa
    return (
        i @ i.T == identity(X)
        and k @ k.T == identity(Y)
        and (i.T @ i) | (k.T @ k) == identity(s.carrier)
        and i @ k.T == bottom(X, Y)
    )


# Kronecker, fork and join


@law("prodsum", "kronecker product matches the pointwise definition", "oracle", size=4)
def _(g):
    X, Y, U, V = g.universes("X Y U V", hi=3)
    A, B = g.rel("A", X, U), g.rel("B", Y, V)
    return kronecker(A, B) == oracle.oracle_kronecker(A, B)


@law("prodsum", "fork and join relate componentwise", "kronecker fork join", budget=SAMPLED_BUDGET)
def _(g):
    X, Y, Z = g.universes("X Y Z")
    C, D = g.rel("C", Z, X), g.rel("D", Z, Y)
    E, F = g.rel("E", X, Z), g.rel("F", Y, Z)
    p = product(X, Y).carrier
    fk, jn = fork(C, D), join(E, F)
    for k in range(p.size):
        x, y = p.split(k)
        if not ((fk.bits[:, k] == (C.bits[:, x] & D.bits[:, y])).all()):
            return False
        if not ((jn.bits[k] == (E.bits[x] & F.bits[y])).all()):
            return False
    return True


@law("prodsum", "kronecker followed by a projection", "kronecker fork join")
def _(g):
    X, Y, U, V = g.universes("X Y U V")
    A, B = g.rel("A", X, U), g.rel("B", Y, V)
    p, q = product(X, Y), product(U, V)
    k = kronecker(A, B)
    return k @ q.pi == (p.pi @ A) & (p.rho @ B @ top(V, U)) and k @ q.rho == (p.pi @ A @ top(U, V)) & (p.rho @ B)


@law("prodsum", "kronecker then first projection when the second factor is total", "kronecker fork join")
def _(g):
    X, Y, U, V = g.universes("X Y U V")
    A, B = g.rel("A", X, U), g.rel("B", Y, V, "total")
    return kronecker(A, B) @ product(U, V).pi == product(X, Y).pi @ A


@law("prodsum", "kronecker then second projection when the first factor is total", "kronecker fork join")
def _(g):
    X, Y, U, V = g.universes("X Y U V")
    A, B = g.rel("A", X, U, "total"), g.rel("B", Y, V)
    return kronecker(A, B) @ product(U, V).rho == product(X, Y).rho @ B


@law("prodsum", "kronecker with identity then projection", "kronecker fork join")
def _(g):
    X, Y, U, V = g.universes("X Y U V")
    A, B = g.rel("A", X, U), g.rel("B", Y, V)
    left = kronecker(A, identity(Y)) @ product(U, Y).pi
    right = kronecker(identity(X), B) @ product(X, V).rho
    return (
        left == join(A, top(Y, U))
        and left == product(X, Y).pi @ A
        and right == join(top(X, V), B)
        and right == product(X, Y).rho @ B
    )


@law("prodsum", "fork with identity then projection", "kronecker fork join")
def _(g):
    X, Y, Z = g.universes("X Y Z")
    A, B = g.rel("A", Z, X), g.rel("B", Z, Y)
    return fork(A, identity(Z)) @ product(X, Z).pi == A and fork(identity(Z), B) @ product(Z, Y).rho == B


@law("prodsum", "kronecker of univalent relations is univalent", "kronecker fork join")
def _(g):
    X, Y, U, V = g.universes("X Y U V")
    A, B = g.rel("A", X, U, "univalent"), g.rel("B", Y, V, "univalent")
    return is_univalent(kronecker(A, B))


@law("prodsum", "kronecker of mappings is a mapping", "kronecker fork join")
def _(g):
    X, Y, U, V = g.universes("X Y U V")
    A, B = g.rel("A", X, U, "mapping"), g.rel("B", Y, V, "mapping")
    return is_mapping(kronecker(A, B))


def _four(g):
    X, Y, U, V, W, Z = g.universes("X Y U V W Z", hi=3)
    return X, Y, U, V, W, Z


@law("prodsum", "kronecker composition contains the product of composites", "multiplicativity", size=3, budget=SAMPLED_BUDGET)
def _(g):
    X, Y, U, V, W, Z = _four(g)
    R, S, P, Q = g.rel("R", X, U), g.rel("S", Y, V), g.rel("P", U, W), g.rel("Q", V, Z)
    return kronecker(R, S) @ kronecker(P, Q) <= kronecker(R @ P, S @ Q)


@law("prodsum", "kronecker then join contained in join of composites", "multiplicativity", size=3, budget=SAMPLED_BUDGET)
def _(g):
    X, Y, U, V, W, _ = _four(g)
    R, S, P, Q = g.rel("R", X, U), g.rel("S", Y, V), g.rel("P", U, W), g.rel("Q", V, W)
    return kronecker(R, S) @ join(P, Q) <= join(R @ P, S @ Q)


@law("prodsum", "fork then kronecker contained in fork of composites", "multiplicativity", size=3, budget=SAMPLED_BUDGET)
def _(g):
    X, _, U, V, W, Z = _four(g)
    R, S, P, Q = g.rel("R", X, U), g.rel("S", X, V), g.rel("P", U, W), g.rel("Q", V, Z)
    return fork(R, S) @ kronecker(P, Q) <= fork(R @ P, S @ Q)


@law("prodsum", "fork then join contained in meet of composites", "multiplicativity", size=3, budget=SAMPLED_BUDGET)
def _(g):
    X, _, U, V, W, _ = _four(g)
    R, S, P, Q = g.rel("R", X, U), g.rel("S", X, V), g.rel("P", U, W), g.rel("Q", V, W)
    return fork(R, S) @ join(P, Q) <= (R @ P) & (S @ Q)


@law("prodsum", "kronecker is multiplicative in the matrix model", "model equality", size=3, budget=SAMPLED_BUDGET)
def _(g):
    X, Y, U, V, W, Z = _four(g)
    R, S, P, Q = g.rel("R", X, U), g.rel("S", Y, V), g.rel("P", U, W), g.rel("Q", V, Z)
    return kronecker(R, S) @ kronecker(P, Q) == kronecker(R @ P, S @ Q)


@law("prodsum", "kronecker then join is the join of composites in the matrix model", "model equality", size=3, budget=SAMPLED_BUDGET)
def _(g):
    X, Y, U, V, W, _ = _four(g)
    R, S, P, Q = g.rel("R", X, U), g.rel("S", Y, V), g.rel("P", U, W), g.rel("Q", V, W)
    return kronecker(R, S) @ join(P, Q) == join(R @ P, S @ Q)


@law("prodsum", "fork then kronecker is the fork of composites in the matrix model", "model equality", size=3, budget=SAMPLED_BUDGET)
def _(g):
    X, _, U, V, W, Z = _four(g)
    R, S, P, Q = g.rel("R", X, U), g.rel("S", X, V), g.rel("P", U, W), g.rel("Q", V, Z)
    return fork(R, S) @ kronecker(P, Q) == fork(R @ P, S @ Q)


@law("prodsum", "fork then join is the meet of composites", "model equality", size=3, budget=SAMPLED_BUDGET)
def _(g):
    X, _, U, V, W, _ = _four(g)
    R, S, P, Q = g.rel("R", X, U), g.rel("S", X, V), g.rel("P", U, W), g.rel("Q", V, W)
    return fork(R, S) @ join(P, Q) == (R @ P) & (S @ Q)


@law("prodsum", "kronecker of univalent relations is multiplicative", "multiplicativity", size=3, budget=SAMPLED_BUDGET)
def _(g):
    X, Y, U, V, W, Z = _four(g)
    f, h = g.rel("f", X, U, "univalent"), g.rel("g", Y, V, "univalent")
    A, B = g.rel("A", U, W), g.rel("B", V, Z)
    return kronecker(f, h) @ kronecker(A, B) == kronecker(f @ A, h @ B)


@law("prodsum", "kronecker of univalent relations then join", "multiplicativity", size=3, budget=SAMPLED_BUDGET)
def _(g):
    X, Y, U, V, W, _ = _four(g)
    f, h = g.rel("f", X, U, "univalent"), g.rel("g", Y, V, "univalent")
    A, B = g.rel("A", U, W), g.rel("B", V, W)
    return kronecker(f, h) @ join(A, B) == join(f @ A, h @ B)


@law("prodsum", "kronecker then join of injective relations", "multiplicativity", size=3, budget=SAMPLED_BUDGET)
def _(g):
    X, Y, U, V, W, _ = _four(g)
    R, S = g.rel("R", X, U), g.rel("S", Y, V)
    A, B = g.rel("A", U, W, "injective"), g.rel("B", V, W, "injective")
    return kronecker(R, S) @ join(A, B) == join(R @ A, S @ B)


@law("prodsum", "fork then join of injective relations", "multiplicativity", size=3, budget=SAMPLED_BUDGET)
def _(g):
    X, _, U, V, W, _ = _four(g)
    R, S = g.rel("R", X, U), g.rel("S", X, V)
    A, B = g.rel("A", U, W, "injective"), g.rel("B", V, W, "injective")
    return fork(R, S) @ join(A, B) == (R @ A) & (S @ B)


@law("prodsum", "fork of univalent relations then join", "multiplicativity", size=3, budget=SAMPLED_BUDGET)
def _(g):
    X, _, U, V, W, _ = _four(g)
    R, S = g.rel("R", X, U, "univalent"), g.rel("S", X, V, "univalent")
    A, B = g.rel("A", U, W), g.rel("B", V, W)
    return fork(R, S) @ join(A, B) == (R @ A) & (S @ B)


@law("prodsum", "kronecker followed by top", "kronecker fork join")
def _(g):
    X, Y, U, V, W = g.universes("X Y U V W", hi=4)
    R, S = g.rel("R", X, U), g.rel("S", Y, V)
    q = product(U, V).carrier
    return kronecker(R, S) @ top(q, W) == join(R @ top(U, W), S @ top(V, W))


@law("prodsum", "fork restricted by a vector", "kronecker fork join")
def _(g):
    X, Y, Z, W = g.universes("X Y Z W", hi=4)
    A, B, C = g.rel("A", Z, X), g.rel("B", Z, Y), g.rel("C", Z, W)
    q = product(X, Y).carrier
    return fork(A, B) & (C @ top(W, q)) == fork(A & (C @ top(W, X)), B & (C @ top(W, Y)))


@law("prodsum", "kronecker restricted by a join of vectors", "kronecker fork join", size=3, budget=SAMPLED_BUDGET)
def _(g):
    X, Y, U, V, W, _ = _four(g)
    A, B = g.rel("A", X, U), g.rel("B", Y, V)
    C, D = g.rel("C", X, W), g.rel("D", Y, W)
    q = product(U, V).carrier
    lhs = kronecker(A, B) & join(C @ top(W, q), D @ top(W, q))
    return lhs == kronecker(A & (C @ top(W, U)), B & (D @ top(W, V)))


@law("prodsum", "fork distributes over intersection", "kronecker fork join", budget=SAMPLED_BUDGET)
def _(g):
    X, Y, Z = g.universes("X Y Z")
    A, B, C, D = g.rel("A", Z, X), g.rel("B", Z, Y), g.rel("C", Z, X), g.rel("D", Z, Y)
    return fork(A & C, B & D) == fork(A, B) & fork(C, D)


@law("prodsum", "kronecker of self residuals below the residual of a fork", "kronecker fork join", size=4)
def _(g):
    X, Y, Z = g.universes("X Y Z")
    R, S = g.rel("R", Z, X), g.rel("S", Z, Y)
    fk = fork(R, S)
    return kronecker(right_residual(R, R), right_residual(S, S)) <= right_residual(fk, fk)


@law("prodsum", "univalent relation distributes into a fork", "kronecker fork join")
def _(g):
    W, X, Y, Z = g.universes("W X Y Z")
    C = g.rel("C", W, Z, "univalent")
    A, B = g.rel("A", Z, X), g.rel("B", Z, Y)
    return C @ fork(A, B) == fork(C @ A, C @ B)


@law("prodsum", "residual distributes over a fork", "kronecker fork join")
def _(g):
    W, X, Y, Z = g.universes("W X Y Z")
    A, B, C = g.rel("A", X, W), g.rel("B", X, Y), g.rel("C", X, Z)
    return right_residual(A, fork(B, C)) == fork(right_residual(A, B), right_residual(A, C))


@law("prodsum", "addition theorem for symmetric quotients", "direct sum", size=3, budget=SAMPLED_BUDGET)
def _(g):
    X, Y, U, V, Z = g.universes("X Y U V Z")
    Q, R = g.rel("Q", X, U), g.rel("R", Y, V)
    S = g.rel("S", direct_sum(X, Y).carrier, Z)
    return addition_theorem_check(Q, R, S)


# swap and rearrangement


@law("prodsum", "swap and rearrangement are bijective mappings", "swap and rearrangement", size=4)
def _(g):
    X, Y, Z = g.universes("X Y Z")
    return is_bijective_mapping(swap(X, Y)) and is_bijective_mapping(assoc(X, Y, Z))


@law("prodsum", "converse swap is the opposite swap", "swap and rearrangement")
def _(g):
    X, Y = g.universes("X Y")
    return swap(X, Y).T == swap(Y, X) and swap(X, X).T == swap(X, X)


@law("prodsum", "swap exchanges the projections", "swap and rearrangement")
def _(g):
    X, Y = g.universes("X Y")
    P = swap(X, Y)
    p, q = product(X, Y), product(Y, X)
    return P @ q.rho == p.pi and P @ q.pi == p.rho and P.T @ p.pi == q.rho and P.T @ p.rho == q.pi


@law("prodsum", "swap commutes kronecker factors", "swap and rearrangement", size=4)
def _(g):
    X, Y, U, V = g.universes("X Y U V")
    R, S = g.rel("R", X, U), g.rel("S", Y, V)
    return swap(Y, X) @ kronecker(R, S) == kronecker(S, R) @ swap(V, U)


@law("prodsum", "swap exchanges join and fork arguments", "swap and rearrangement", budget=SAMPLED_BUDGET)
def _(g):
    X, Y, Z = g.universes("X Y Z")
    R, S = g.rel("R", X, Z), g.rel("S", Y, Z)
    C, D = g.rel("C", Z, X), g.rel("D", Z, Y)
    return swap(Y, X) @ join(R, S) == join(S, R) and fork(C, D) @ swap(X, Y) == fork(D, C)


@law("prodsum", "rearrangement reassociates kronecker products", "swap and rearrangement", size=2, budget=SAMPLED_BUDGET)
def _(g):
    X, Y, Z, U, V, W = g.universes("X Y Z U V W")
    Q, R, S = g.rel("Q", X, U), g.rel("R", Y, V), g.rel("S", Z, W)
    return assoc(X, Y, Z) @ kronecker(Q, kronecker(R, S)) == kronecker(kronecker(Q, R), S) @ assoc(U, V, W)


@law("prodsum", "rearrangement reassociates forks", "swap and rearrangement", size=3)
def _(g):
    A, X, Y, Z = g.universes("A X Y Z")
    Q, R, S = g.rel("Q", A, X), g.rel("R", A, Y), g.rel("S", A, Z)
    return fork(Q, fork(R, S)) == fork(fork(Q, R), S) @ assoc(X, Y, Z)


@law("prodsum", "rearrangement has three equivalent forms", "swap and rearrangement", size=3)
def _(g):
    X, Y, Z = g.universes("X Y Z")
    p1 = product(X, Y)
    p2 = product(p1.carrier, Z)
    q2 = product(Y, Z)
    q1 = product(X, q2.carrier)
    three = (
        (p2.pi @ p1.pi @ q1.pi.T)
        & (p2.pi @ p1.rho @ q2.pi.T @ q1.rho.T)
        & (p2.rho @ q2.rho.T @ q1.rho.T)
    )
    via_join = join(kronecker(identity(X), q2.pi.T), q2.rho.T @ q1.rho.T)
    T = assoc(X, Y, Z)
    return three == T and via_join == T and T @ q1.pi == p2.pi @ p1.pi


# vectorization and encodings


@law("prodsum", "unvec inverts vec", "vectorization")
def _(g):
    X, Y = g.universes("X Y")
    R = g.rel("R", X, Y)
    return unvec(vec(R)) == R


@law("prodsum", "vec inverts unvec", "vectorization")
def _(g):
    X, Y = g.universes("X Y")
    v = g.vector("v", Pair(X, Y))
    return vec(unvec(v)) == v


@law("prodsum", "vec and unvec commute with negation", "vectorization")
def _(g):
    X, Y = g.universes("X Y")
    R = g.rel("R", X, Y)
    v = g.vector("v", Pair(X, Y))
    return vec(~R) == ~vec(R) and unvec(~v) == ~unvec(v)


@law("prodsum", "swap transposes vectorized relations", "vectorization")
def _(g):
    X, Y = g.universes("X Y")
    R = g.rel("R", X, Y)
    v = g.vector("v", Pair(X, Y))
    P = swap(X, Y)
    return unvec(P.T @ v) == unvec(v).T and vec(R.T) == P.T @ vec(R)


@law("prodsum", "identity point decodes to the identity", "points", size=3)
def _(g):
    X = g.universe("X", hi=2)
    pt = identity_point(X)
    eps = membership(Pair(X, X)).epsilon
    return is_point(pt) and unvec(eps @ pt) == identity(X) and decode_point(pt) == identity(X)


@law("prodsum", "bottom and top points decode to bottom and top", "points", size=3)
def _(g):
    X, Y = _small_pair(g)
    eps = membership(Pair(X, Y)).epsilon
    b, t = bot_point(X, Y), top_point(X, Y)
    return (
        is_point(b)
        and is_point(t)
        and unvec(eps @ b) == bottom(X, Y)
        and unvec(eps @ t) == top(X, Y)
    )


@law("prodsum", "relation points decode to their relation", "points", size=3)
def _(g):
    X, Y = _small_pair(g)
    R = g.rel("R", X, Y)
    pt = relation_point(R)
    return is_point(pt) and decode_point(pt) == R


@law("prodsum", "transposition map is a bijective mapping bisimulating swap", "points", size=3)
def _(g):
    X, Y = _small_pair(g)
    T = transposition_point_map(X, Y)
    e, e2 = membership(Pair(X, Y)).epsilon, membership(Pair(Y, X)).epsilon
    return is_bijective_mapping(T) and T @ e2.T == e.T @ swap(X, Y)


@law("prodsum", "transposition map sends a relation point to its converse", "points", size=3)
def _(g):
    X, Y = _small_pair(g)
    R = g.rel("R", X, Y)
    return relation_point(R).T @ transposition_point_map(X, Y) == relation_point(R.T).T


# sums of powersets


def _iso(g):
    X = g.universe("X", hi=3)
    Y = g.universe("Y", hi=3)
    return sum_power_iso(X, Y)


@law("prodsum", "sum membership restricts to the summands", "sum of powersets", size=3)
def _(g):
    s = _iso(g)
    ep, i, k, p = s.epsilon_plus, s.sum.iota, s.sum.kappa, s.product
    return (
        i @ ep == s.epsilon_x @ p.pi.T
        and i @ ep @ p.pi == s.epsilon_x
        and k @ ep == s.epsilon_y @ p.rho.T
        and k @ ep @ p.rho == s.epsilon_y
        and syq(i @ ep, s.epsilon_x) == p.pi
        and syq(k @ ep, s.epsilon_y) == p.rho
    )


@law("prodsum", "subset splitting satisfies an addition theorem", "sum of powersets", size=3)
def _(g):
    s = _iso(g)
    i, k, p, e = s.sum.iota, s.sum.kappa, s.product, s.epsilon_sum
    a, b = syq(i @ e, s.epsilon_x), syq(k @ e, s.epsilon_y)
    return s.phi == (a @ p.pi.T) & (b @ p.rho.T) and s.phi @ p.pi == a and s.phi @ p.rho == b


@law("prodsum", "subset splitting is a bijection carrying membership", "sum of powersets", size=3)
def _(g):
    s = _iso(g)
    ep, e = s.epsilon_plus, s.epsilon_sum
    return is_bijective_mapping(s.phi) and e @ s.phi == ep and ep @ s.phi.T == e


@law("prodsum", "injections recovered from the sum membership", "sum of powersets", size=3)
def _(g):
    s = _iso(g)
    p = s.product
    return (
        syq(p.pi @ s.epsilon_x.T, s.epsilon_plus.T) == s.sum.iota
        and syq(p.rho @ s.epsilon_y.T, s.epsilon_plus.T) == s.sum.kappa
    )


@law("prodsum", "sum membership behaves like a membership", "sum of powersets", size=3)
def _(g):
    s = _iso(g)
    ep = s.epsilon_plus
    K = g.universe("K", hi=3)
    R = g.rel("R", ep.src, K)
    pp = ep.tgt
    return syq(ep, ep) == identity(pp) and top(pp, pp) @ syq(ep, R) == top(pp, K)


@law("prodsum", "subset splitting is an order isomorphism", "sum of powersets", size=3)
def _(g):
    s = _iso(g)
    ep, e = s.epsilon_plus, s.epsilon_sum
    om_plus = ~(ep.T @ ~ep)
    om_sum = ~(e.T @ ~e)
    om_x, om_y = membership(s.sum.left).omega, membership(s.sum.right).omega
    return (
        is_order(om_plus)
        and om_plus == kronecker(om_x, om_y)
        and om_sum @ s.phi == s.phi @ om_plus
    )

