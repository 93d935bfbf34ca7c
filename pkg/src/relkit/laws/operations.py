"""Laws of binary operations: invertibility, invariant and neutral elements, sections, distributivity."""

from itertools import product as cartesian

import numpy as np

from .. import oracle
from ..binop import (
    BinOp,
    allows_left_inversion,
    allows_right_inversion,
    distributes_over,
    invariant_elements,
    is_associative,
    is_commutative,
    left_invertible_elements,
    left_neutrals,
    right_inverse_map,
    right_invertible_elements,
    right_neutral_relation,
    right_neutral_relation_via_diagonal,
    right_neutrals,
    section_map,
)
from ..finset import UNIT, Pair
from ..prodsum import assoc, kronecker, product, swap
from ..relcore import (
    Relation,
    identity,
    is_bijective_mapping,
    is_mapping,
    is_point,
    right_residual,
    top,
    vector,
)
from .engine import law


def _op(g, name="A", hi=4) -> BinOp:
    X = g.universe("X", hi=hi)
    return BinOp(g.rel(name, Pair(X, X), X, "mapping"))


def _table(op: BinOp) -> list[list[int]]:
    return oracle.table_lookup(op.table)


def _from_indices(X, t) -> BinOp:
    c = Pair(X, X)
    bits = np.zeros((c.size, X.size), dtype=bool)
    for i, j in cartesian(range(X.size), repeat=2):
        bits[c.join(i, j), t[i][j]] = True
    return BinOp(Relation(c, X, bits))


def _with_neutral(g, hi=4) -> tuple[BinOp, Relation]:
    """Random operation with a planted two-sided neutral element."""
    X = g.universe("X", hi=hi, lo=1)
    e = g.choice(X.size)
    t = [[g.choice(X.size) for _ in range(X.size)] for _ in range(X.size)]
    for k in range(X.size):
        t[e][k] = k
        t[k][e] = k
    op = _from_indices(X, t)
    g.drawn["A"] = op.table
    return op, vector(X, [X.labels[e]])


def _group(g) -> tuple[BinOp, Relation]:
    """Z_a x Z_b with its elements relabeled by a random permutation."""
    a = 1 + g.choice(4)
    b = 1 + g.choice(2) if a == 2 else 1
    n = a * b
    X = g.universe("X", hi=n, lo=n)
    perm = g.rel("relabel", X, X, "permutation").bits.argmax(axis=1)

    def add(i, j):
        return ((i // b + j // b) % a) * b + (i % b + j % b) % b

    t = [[0] * n for _ in range(n)]
    for i, j in cartesian(range(n), repeat=2):
        t[perm[i]][perm[j]] = perm[add(i, j)]
    op = _from_indices(X, t)
    g.drawn["A"] = op.table
    return op, vector(X, [X.labels[perm[0]]])


def _members(X, pred) -> Relation:
    return vector(X, [X.labels[i] for i in range(X.size) if pred(i)])


# pointwise references


@law("binop", "commutativity matches the pointwise test", "oracle")
def _(g):
    op = _op(g)
    t, n = _table(op), op.carrier.size
    return is_commutative(op) == all(t[x][y] == t[y][x] for x in range(n) for y in range(n))


@law("binop", "associativity matches the pointwise test", "oracle")
def _(g):
    op = _op(g)
    t, n = _table(op), op.carrier.size
    expect = all(t[t[x][y]][z] == t[x][t[y][z]] for x, y, z in cartesian(range(n), repeat=3))
    return is_associative(op) == expect


@law("binop", "group operations are associative", "binary mappings")
def _(g):
    op, _e = _group(g)
    return is_associative(op) and is_commutative(op)


@law("binop", "invariant elements match the commuting-row oracle", "oracle")
def _(g):
    op = _op(g)
    return invariant_elements(op) == oracle.oracle_invariant_elements(op.table)


@law("binop", "commutative operations make every element invariant", "invariant elements")
def _(g):
    op = _op(g)
    everything = top(op.carrier, invariant_elements(op).tgt)
    return is_commutative(op) == (invariant_elements(op) == everything)


@law("binop", "invertible elements have surjective rows or columns", "invertibility")
def _(g):
    op = _op(g)
    t, n = _table(op), op.carrier.size
    full = set(range(n))
    left = _members(op.carrier, lambda x: {t[x][y] for y in range(n)} == full)
    right = _members(op.carrier, lambda y: {t[x][y] for x in range(n)} == full)
    return left_invertible_elements(op) == left and right_invertible_elements(op) == right


@law("binop", "global inversion means every element is invertible", "invertibility")
def _(g):
    op = _op(g)
    every = top(op.carrier, left_invertible_elements(op).tgt)
    return (
        allows_left_inversion(op) == (left_invertible_elements(op) == every)
        and allows_right_inversion(op) == (right_invertible_elements(op) == every)
    )


# neutral elements


@law("binop", "neutral elements match the pointwise test", "neutral elements")
def _(g):
    op = _op(g)
    t, n = _table(op), op.carrier.size
    right = _members(op.carrier, lambda e: all(t[x][e] == x for x in range(n)))
    left = _members(op.carrier, lambda e: all(t[e][x] == x for x in range(n)))
    return right_neutrals(op) == right and left_neutrals(op) == left


@law("binop", "diagonal route finds the same right neutrals", "neutral elements")
def _(g):
    op = _op(g)
    X = op.carrier
    full = top(X, UNIT)

    def rows(m):
        return ~(~m @ full)

    return rows(right_neutral_relation_via_diagonal(op)) == rows(right_neutral_relation(op))


@law("binop", "left and right neutrals coincide when both exist", "neutral elements")
def _(g):
    op = _op(g, hi=3)
    r, lft = right_neutrals(op), left_neutrals(op)
    g.assume(r.bits.any() and lft.bits.any())
    return r == lft and is_point(r)


@law("binop", "a planted neutral is the only neutral", "neutral elements")
def _(g):
    op, e = _with_neutral(g)
    return right_neutrals(op) == e and left_neutrals(op) == e


@law("binop", "right-neutral element recovers the identity", "neutral elements")
def _(g):
    op, e = _with_neutral(g)
    X = op.carrier
    return op.table.T @ (op.pi & (op.rho @ e @ top(e.tgt, X))) == identity(X)


# inverses


def _column_quasigroup(g) -> BinOp:
    """Each column of the table is a permutation, so right inversion is possible."""
    X = g.universe("X", hi=4)
    cols = [g.rel(f"c{y}", X, X, "permutation").bits.argmax(axis=1) for y in range(X.size)]
    t = [[int(cols[y][x]) for y in range(X.size)] for x in range(X.size)]
    op = _from_indices(X, t)
    g.drawn["A"] = op.table
    return op


@law("binop", "right inverses cover everything under right inversion", "inverses")
def _(g):
    op = _column_quasigroup(g)
    X = op.carrier
    e = g.point("e", X)
    return allows_right_inversion(op) and top(X, X) @ right_inverse_map(op, e) == top(X, X)


@law("binop", "right inverse map of a group is a bijection", "inverses")
def _(g):
    op, e = _group(g)
    inv = right_inverse_map(op, e)
    return is_bijective_mapping(inv) and inv == inv.T


@law("binop", "right inverse map matches the pointwise definition", "inverses")
def _(g):
    op = _op(g)
    X = op.carrier
    e = g.point("e", X)
    t, k = _table(op), int(e.bits.argmax())
    expect = np.array([[t[x][y] == k for y in range(X.size)] for x in range(X.size)], dtype=bool)
    return right_inverse_map(op, e) == Relation(X, X, expect.reshape(X.size, X.size))


# sections


@law("binop", "section maps split off one component", "sections")
def _(g):
    X = g.universe("X", lo=1)
    x = g.point("x", X)
    op_prod = product(X, X)
    f, h = section_map(x, op_prod), section_map(x, op_prod, flip=True)
    return (
        is_mapping(f)
        and f @ op_prod.rho == identity(X)
        and op_prod.rho <= right_residual(f, identity(X))
        and is_mapping(h)
        and h @ op_prod.pi == identity(X)
    )


@law("binop", "section map pairs the point with every element", "sections")
def _(g):
    X = g.universe("X", lo=1)
    x = g.point("x", X)
    f = section_map(x)
    k = int(x.bits.argmax())
    c = Pair(X, X)
    return all(f.bits[y, c.join(k, y)] for y in range(X.size))


# swap and rearrangement on operation carriers


@law("binop", "swap and rearrangement act on operation tables", "swap and rearrangement", size=3)
def _(g):
    op = _op(g, hi=3)
    X, a = op.carrier, op.table
    P = swap(X, X)
    return (
        is_bijective_mapping(P)
        and P.T == P
        and swap(a.src, a.src) @ kronecker(a, a) == kronecker(a, a) @ P
        and is_commutative(op) == (P @ a == a)
    )


@law("binop", "rearrangement reassociates operation tables", "swap and rearrangement", size=2)
def _(g):
    op = _op(g, hi=2)
    X, a = op.carrier, op.table
    c = Pair(X, X)
    lhs = assoc(c, c, c) @ kronecker(a, kronecker(a, a))
    rhs = kronecker(kronecker(a, a), a) @ assoc(X, X, X)
    return is_bijective_mapping(assoc(X, X, X)) and lhs == rhs


# distributivity


@law("binop", "distributivity matches the pointwise test", "distributivity", size=3)
def _(g):
    X = g.universe("X", hi=3)
    j = BinOp(g.rel("J", Pair(X, X), X, "mapping"))
    m = BinOp(g.rel("M", Pair(X, X), X, "mapping"))
    tj, tm, n = _table(j), _table(m), X.size
    expect = all(
        tm[tj[a][c]][tj[b][c]] == tj[tm[a][b]][c] for a, b, c in cartesian(range(n), repeat=3)
    )
    return distributes_over(j, m) == expect


@law("binop", "chain lattices distribute both ways", "distributivity")
def _(g):
    X = g.universe("X")
    n = X.size
    lo = _from_indices(X, [[min(i, j) for j in range(n)] for i in range(n)])
    hi = _from_indices(X, [[max(i, j) for j in range(n)] for i in range(n)])
    return distributes_over(lo, hi) and distributes_over(hi, lo)
