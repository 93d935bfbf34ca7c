"""Relational analysis of a binary operation (X x X) -> X."""

from __future__ import annotations

import numpy as np

from .errors import NotAMapping, NotAPoint, TypeMismatch
from .finset import UNIT, Universe
from .prodsum import ProductWitness, assoc, fork, kronecker, product, swap
from .relcore import (
    Relation,
    identity,
    is_mapping,
    is_point,
    top,
)


class BinOp:
    """A binary operation given as a mapping table: (X x X) -> X."""

    def __init__(self, table: Relation):
        x = table.tgt
        self.carrier = x
        self.product = product(x, x)
        if table.src != self.product.carrier:
            raise TypeMismatch(f"a binary operation on {x.name} must start in {self.product.carrier.name}", table.typ)
        if not is_mapping(table):
            raise NotAMapping(_mapping_diagnostic(table))
        self.table = table

    @classmethod
    def from_cayley(cls, carrier: Universe, rows) -> BinOp:
        """rows[i] lists op(x_i, y) for y in carrier order; rows may also be a dict keyed by label."""
        if isinstance(rows, dict):
            missing = [lab for lab in carrier.labels if lab not in rows]
            if missing:
                raise NotAMapping(f"Cayley table has no row for {missing[0]}")
            rows = [rows[lab] for lab in carrier.labels]
        if len(rows) != carrier.size:
            raise NotAMapping(f"Cayley table has {len(rows)} rows, {carrier.name} has {carrier.size} elements")
        n = carrier.size
        c = product(carrier, carrier).carrier
        bits = np.zeros((c.size, n), dtype=bool)
        for i, (x, row) in enumerate(zip(carrier.labels, rows)):
            if len(row) != n:
                raise NotAMapping(f"row {x} has {len(row)} entries, expected {n}")
            for j, (y, z) in enumerate(zip(carrier.labels, row)):
                if z not in carrier:
                    raise NotAMapping(f"row {x}, column {y}: {z!r} is not an element of {carrier.name}")
                bits[c.join(i, j), carrier.index(z)] = True
        return cls(Relation(c, carrier, bits))

    def __call__(self, x: str, y: str) -> str:
        p = self.product.carrier.join(self.carrier.index(x), self.carrier.index(y))
        return self.carrier.labels[int(self.table.bits[p].argmax())]

    def rows(self) -> list[list[str]]:
        return [[self(x, y) for y in self.carrier.labels] for x in self.carrier.labels]

    @property
    def pi(self):
        return self.product.pi

    @property
    def rho(self):
        return self.product.rho

    def __repr__(self):
        return f"BinOp({self.carrier.name})"


def _mapping_diagnostic(table: Relation) -> str:
    for i, lab in enumerate(table.src.labels):
        n = int(table.bits[i].sum())
        if n != 1:
            return f"table is not a mapping: pair {lab} has {n} results"
    return "table is not a mapping"


def _vector_of_full_rows(m: Relation) -> Relation:
    """Rows of m that are completely filled, as a vector."""
    return ~(~m @ top(m.tgt, UNIT))


def is_commutative(op: BinOp) -> bool:
    x = op.carrier
    return swap(x, x) @ op.table == op.table


def is_associative(op: BinOp) -> bool:
    a, x = op.table, op.carrier
    i = identity(x)
    return kronecker(a, i) @ a == assoc(x, x, x) @ kronecker(i, a) @ a


def left_invertible_elements(op: BinOp) -> Relation:
    return _vector_of_full_rows(op.pi.T @ op.table)


def right_invertible_elements(op: BinOp) -> Relation:
    return _vector_of_full_rows(op.rho.T @ op.table)


def allows_left_inversion(op: BinOp) -> bool:
    x = op.carrier
    return op.pi.T @ op.table == top(x, x)


def allows_right_inversion(op: BinOp) -> bool:
    x = op.carrier
    return op.rho.T @ op.table == top(x, x)


def invariant_elements(op: BinOp) -> Relation:
    """Elements whose row and column in the table coincide."""
    x = op.carrier
    a = op.table
    commuting = (a & (swap(x, x) @ a)) @ top(x, UNIT)
    return ~(op.pi.T @ ~commuting)


def right_neutral_relation(op: BinOp) -> Relation:
    """X -> X; row n is full exactly when n is right-neutral."""
    return ~(op.rho.T @ (~op.table & op.pi))


def left_neutral_relation(op: BinOp) -> Relation:
    return ~(op.pi.T @ (~op.table & op.rho))


def right_neutrals(op: BinOp) -> Relation:
    return _vector_of_full_rows(right_neutral_relation(op))


def left_neutrals(op: BinOp) -> Relation:
    return _vector_of_full_rows(left_neutral_relation(op))


def neutrals(op: BinOp) -> Relation:
    return right_neutrals(op) & left_neutrals(op)


def right_neutral_relation_via_diagonal(op: BinOp) -> Relation:
    """Alternative route through the pairs whose result equals their left component."""
    x = op.carrier
    c = op.product.carrier
    delta = identity(c) & (op.table @ op.pi.T)
    return ~(op.rho.T @ ~(delta @ top(c, x)))


def _require_point(e: Relation, x: Universe) -> None:
    if e.src != x or e.tgt != UNIT or not is_point(e):
        raise NotAPoint(f"expected a point of {x.name}")


def right_inverse_map(op: BinOp, e: Relation) -> Relation:
    """x |-> {y | op(x, y) = e}."""
    x = op.carrier
    _require_point(e, x)
    return op.pi.T @ ((op.table @ e @ top(UNIT, x)) & op.rho)


def section_map(pt: Relation, prod: ProductWitness | None = None, flip: bool = False) -> Relation:
    """y |-> (x, y) for the point x; with flip, y |-> (y, x)."""
    x = pt.src
    _require_point(pt, x)
    prod = prod or product(x, x)
    if flip:
        return (prod.pi & (prod.rho @ pt @ top(UNIT, x))).T
    return (prod.rho & (prod.pi @ pt @ top(UNIT, x))).T


def distributes_over(op_j: BinOp, op_m: BinOp) -> bool:
    """(a J c) M (b J c) = (a M b) J c for all a, b, c."""
    if op_j.carrier != op_m.carrier:
        raise TypeMismatch("distributivity needs both operations on one carrier", op_j.carrier, op_m.carrier)
    x = op_j.carrier
    i = identity(x)
    j, m = op_j.table, op_m.table
    spread = fork(kronecker(op_j.pi, i) @ j, kronecker(op_j.rho, i) @ j)
    return spread @ m == kronecker(m, i) @ j

