"""Slow pointwise reference implementations.

Everything here is written with plain nested quantifiers over Python lists.
No relational operation from relcore is used, so agreement with the fast
paths is a genuine second opinion.
"""

from __future__ import annotations

from .errors import CapExceeded, TypeMismatch
from .finset import Pair, Power, power_index, power_members
from .relcore import Relation, vector

ORACLE_CAP = 2**12


def _cells(*shapes):
    total = sum(a * b for a, b in shapes)
    if total > ORACLE_CAP:
        raise CapExceeded(f"oracle refuses {total} cells (cap {ORACLE_CAP})")


def _rows(r: Relation):
    return [[bool(v) for v in row] for row in r.bits.tolist()]


def _build(src, tgt, fn):
    return Relation(src, tgt, [[fn(i, j) for j in range(tgt.size)] for i in range(src.size)])


def oracle_compose(r: Relation, s: Relation) -> Relation:
    if r.tgt != s.src:
        raise TypeMismatch("oracle_compose: middle universes differ")
    _cells(r.shape, s.shape, (r.src.size, s.tgt.size))
    a, b = _rows(r), _rows(s)
    mid = range(r.tgt.size)
    return _build(r.src, s.tgt, lambda i, k: any(a[i][j] and b[j][k] for j in mid))


def oracle_left_residual(c: Relation, b: Relation) -> Relation:
    """(x, y) holds iff every z reached from y by b is reached from x by c."""
    if c.tgt != b.tgt:
        raise TypeMismatch("oracle_left_residual: targets differ")
    _cells(c.shape, b.shape, (c.src.size, b.src.size))
    cc, bb = _rows(c), _rows(b)
    zs = range(c.tgt.size)
    return _build(c.src, b.src, lambda x, y: all((not bb[y][z]) or cc[x][z] for z in zs))


def oracle_right_residual(a: Relation, c: Relation) -> Relation:
    """(y, z) holds iff every x related to y by a is related to z by c."""
    if a.src != c.src:
        raise TypeMismatch("oracle_right_residual: sources differ")
    _cells(a.shape, c.shape, (a.tgt.size, c.tgt.size))
    aa, cc = _rows(a), _rows(c)
    xs = range(a.src.size)
    return _build(a.tgt, c.tgt, lambda y, z: all((not aa[x][y]) or cc[x][z] for x in xs))


def oracle_syq(r: Relation, s: Relation) -> Relation:
    if r.src != s.src:
        raise TypeMismatch("oracle_syq: sources differ")
    _cells(r.shape, s.shape, (r.tgt.size, s.tgt.size))
    rr, ss = _rows(r), _rows(s)
    vs = range(r.src.size)
    return _build(r.tgt, s.tgt, lambda w, z: all(rr[v][w] == ss[v][z] for v in vs))


def oracle_membership(base) -> Relation:
    p = Power(base)
    _cells((base.size, p.size))
    return _build(base, p, lambda x, S: x in power_members(S))


def _subset_columns(x: Relation):
    """For each column k of x: the list of subsets (as member sets) marked in it."""
    rows = _rows(x)
    return [
        [set(power_members(S)) for S in range(x.src.size) if rows[S][k]]
        for k in range(x.tgt.size)
    ]


def oracle_lub(base, x: Relation) -> Relation:
    """Column k of the result marks the union of the subsets marked in column k of x."""
    p = Power(base)
    if x.src != p:
        raise TypeMismatch("oracle_lub: source must be the powerset")
    _cells(x.shape, x.shape)
    cols = _subset_columns(x)
    unions = [power_index(set().union(*c)) for c in cols]
    return _build(p, x.tgt, lambda S, k: S == unions[k])


def oracle_glb(base, x: Relation) -> Relation:
    p = Power(base)
    if x.src != p:
        raise TypeMismatch("oracle_glb: source must be the powerset")
    _cells(x.shape, x.shape)
    full = set(range(base.size))
    cols = _subset_columns(x)
    meets = [power_index(full.intersection(*c)) for c in cols]
    return _build(p, x.tgt, lambda S, k: S == meets[k])


def oracle_exim(r: Relation) -> Relation:
    """A |-> {y | some x in A has r(x, y)}."""
    px, py = Power(r.src), Power(r.tgt)
    _cells(r.shape, (px.size, py.size))
    rows = _rows(r)
    image = []
    for A in range(px.size):
        ys = {y for x in power_members(A) for y in range(r.tgt.size) if rows[x][y]}
        image.append(power_index(ys))
    return _build(px, py, lambda A, B: image[A] == B)


def oracle_inverse_image(r: Relation) -> Relation:
    """B |-> {x | x reaches some y in B}."""
    px, py = Power(r.src), Power(r.tgt)
    _cells(r.shape, (py.size, px.size))
    rows = _rows(r)
    pre = []
    for B in range(py.size):
        ys = power_members(B)
        xs = {x for x in range(r.src.size) if any(rows[x][y] for y in ys)}
        pre.append(power_index(xs))
    return _build(py, px, lambda B, A: pre[B] == A)


def oracle_power_relator(r: Relation) -> Relation:
    """A ~ B iff every x in A reaches into B and every y in B is reached from A."""
    px, py = Power(r.src), Power(r.tgt)
    _cells(r.shape, (px.size, py.size))
    rows = _rows(r)

    def rel(A, B):
        xs, ys = power_members(A), power_members(B)
        forth = all(any(rows[x][y] for y in ys) for x in xs)
        back = all(any(rows[x][y] for x in xs) for y in ys)
        return forth and back

    return _build(px, py, rel)


def oracle_kronecker(a: Relation, b: Relation) -> Relation:
    src, tgt = Pair(a.src, b.src), Pair(a.tgt, b.tgt)
    _cells((src.size, tgt.size))
    aa, bb = _rows(a), _rows(b)

    def rel(p, q):
        x, y = src.split(p)
        u, v = tgt.split(q)
        return aa[x][u] and bb[y][v]

    return _build(src, tgt, rel)


def table_lookup(table: Relation):
    """Read a binary mapping (X x X) -> X into a nested list of result indices."""
    carrier = table.tgt
    n = carrier.size
    rows = _rows(table)
    out = [[None] * n for _ in range(n)]
    for p in range(table.src.size):
        x, y = table.src.split(p)
        hits = [z for z in range(n) if rows[p][z]]
        if len(hits) != 1:
            raise ValueError(f"table is not a mapping at pair {table.src.labels[p]}")
        out[x][y] = hits[0]
    return out


def oracle_invariant_elements(table: Relation) -> Relation:
    """Vector of the elements x with op(x, y) == op(y, x) for every y."""
    n = table.tgt.size
    t = table_lookup(table)
    keep = [table.tgt.labels[x] for x in range(n) if all(t[x][y] == t[y][x] for y in range(n))]
    return vector(table.tgt, keep)
