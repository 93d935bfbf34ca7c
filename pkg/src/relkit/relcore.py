"""The relation value type and the base algebra.

A Relation is an immutable boolean matrix between two universes. Operators:

    R | S   union          R & S   intersection     ~R   complement
    R @ S   composition    R.T     converse         R <= S   inclusion
"""

from __future__ import annotations

import numpy as np

from .errors import TypeMismatch
from .finset import UNIT, Universe


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


class Relation:
    __slots__ = ("_hash", "bits", "src", "tgt")

    def __init__(self, src: Universe, tgt: Universe, bits=None):
        if bits is None:
            a = np.zeros((src.size, tgt.size), dtype=bool)
        else:
            a = np.array(bits, dtype=bool, copy=True)
            if a.size == 0 and src.size * tgt.size == 0:
                a = np.zeros((src.size, tgt.size), dtype=bool)
            if a.shape != (src.size, tgt.size):
                raise TypeMismatch(
                    f"matrix shape {a.shape} does not fit {src.name} -> {tgt.name} "
                    f"({src.size}x{tgt.size})"
                )
        self.src = src
        self.tgt = tgt
        self.bits = _frozen(a)
        self._hash = None

    @classmethod
    def _wrap(cls, src, tgt, a):
        # trusted constructor: takes ownership of a freshly built array
        r = cls.__new__(cls)
        r.src, r.tgt, r.bits, r._hash = src, tgt, _frozen(a), None
        return r

    # construction helpers

    @classmethod
    def from_pairs(cls, src, tgt, pairs):
        a = np.zeros((src.size, tgt.size), dtype=bool)
        for x, y in pairs:
            a[src.index(x), tgt.index(y)] = True
        return cls._wrap(src, tgt, a)

    @classmethod
    def from_rows(cls, src, tgt, rows):
        """``rows`` maps source labels to iterables of target labels."""
        a = np.zeros((src.size, tgt.size), dtype=bool)
        for x, ys in rows.items():
            i = src.index(x)
            for y in ys:
                a[i, tgt.index(y)] = True
        return cls._wrap(src, tgt, a)

    @classmethod
    def from_function(cls, src, tgt, fn):
        """Mapping built from a function on labels."""
        return cls.from_pairs(src, tgt, ((x, fn(x)) for x in src.labels))

    @property
    def shape(self):
        return self.bits.shape

    @property
    def typ(self):
        return (self.src, self.tgt)

    def __getitem__(self, key):
        i, j = key
        if isinstance(i, str):
            i = self.src.index(i)
        if isinstance(j, str):
            j = self.tgt.index(j)
        return bool(self.bits[i, j])

    def row_set(self, x) -> list[str]:
        i = self.src.index(x) if isinstance(x, str) else x
        return [self.tgt.labels[j] for j in np.flatnonzero(self.bits[i])]

    def to_sets(self) -> dict[str, list[str]]:
        return {self.src.labels[i]: self.row_set(i) for i in range(self.src.size)}

    def pairs(self):
        for i, j in zip(*np.nonzero(self.bits)):
            yield self.src.labels[i], self.tgt.labels[j]

    def count(self) -> int:
        return int(self.bits.sum())

    # equality and hashing by value

    def __eq__(self, other):
        if not isinstance(other, Relation):
            return NotImplemented
        return (
            self.src == other.src
            and self.tgt == other.tgt
            and np.array_equal(self.bits, other.bits)
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.src, self.tgt, self.bits.shape, np.packbits(self.bits).tobytes()))
        return self._hash

    def __repr__(self):
        return f"Relation({self.src.name} -> {self.tgt.name}, {self.count()} pairs)"

    # algebra

    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __invert__(self):
        return negate(self)

    def __matmul__(self, other):
        return compose(self, other)

    def __le__(self, other):
        return includes(other, self)

    def __ge__(self, other):
        return includes(self, other)

    @property
    def T(self):
        return converse(self)


def _same_type(r: Relation, s: Relation, op: str) -> None:
    if r.src != s.src or r.tgt != s.tgt:
        raise TypeMismatch(
            f"{op}: {r.src.name} -> {r.tgt.name} versus {s.src.name} -> {s.tgt.name}",
            r.typ,
            s.typ,
        )


def bottom(src: Universe, tgt: Universe) -> Relation:
    return Relation._wrap(src, tgt, np.zeros((src.size, tgt.size), dtype=bool))


def top(src: Universe, tgt: Universe) -> Relation:
    return Relation._wrap(src, tgt, np.ones((src.size, tgt.size), dtype=bool))


def identity(u: Universe) -> Relation:
    return Relation._wrap(u, u, np.eye(u.size, dtype=bool))


def union(r: Relation, s: Relation) -> Relation:
    _same_type(r, s, "union")
    return Relation._wrap(r.src, r.tgt, r.bits | s.bits)


def intersect(r: Relation, s: Relation) -> Relation:
    _same_type(r, s, "intersection")
    return Relation._wrap(r.src, r.tgt, r.bits & s.bits)


def negate(r: Relation) -> Relation:
    return Relation._wrap(r.src, r.tgt, ~r.bits)


def includes(r: Relation, s: Relation) -> bool:
    """True when s is contained in r."""
    _same_type(r, s, "inclusion")
    return not bool((s.bits & ~r.bits).any())


def converse(r: Relation) -> Relation:
    return Relation._wrap(r.tgt, r.src, np.ascontiguousarray(r.bits.T))


def compose(r: Relation, s: Relation) -> Relation:
    if r.tgt != s.src:
        raise TypeMismatch(
            f"composition: {r.src.name} -> {r.tgt.name} cannot be followed by "
            f"{s.src.name} -> {s.tgt.name}",
            r.typ,
            s.typ,
        )
    if r.tgt.size == 0:
        return bottom(r.src, s.tgt)
    # float products are exact up to 2^24 summands, far above the size cap
    prod = r.bits.astype(np.float32) @ s.bits.astype(np.float32)
    return Relation._wrap(r.src, s.tgt, prod > 0.5)


def left_residual(c: Relation, b: Relation) -> Relation:
    """C/B, the greatest A with A @ B <= C."""
    return ~(~c @ b.T)


def right_residual(a: Relation, c: Relation) -> Relation:
    """A\\C, the greatest B with A @ B <= C."""
    return ~(a.T @ ~c)


def syq(r: Relation, s: Relation) -> Relation:
    """Relates column w of r to column z of s when the columns coincide."""
    if r.src != s.src:
        raise TypeMismatch(
            f"syq: sources differ, {r.src.name} versus {s.src.name}", r.typ, s.typ
        )
    return ~(r.T @ ~s) & ~(~r.T @ s)


def top_to_unit(u: Universe) -> Relation:
    return top(u, UNIT)


def point(u: Universe, label: str) -> Relation:
    """The point u -> unit selecting one element."""
    a = np.zeros((u.size, 1), dtype=bool)
    a[u.index(label), 0] = True
    return Relation._wrap(u, UNIT, a)


def vector(u: Universe, labels) -> Relation:
    a = np.zeros((u.size, 1), dtype=bool)
    for lab in labels:
        a[u.index(lab), 0] = True
    return Relation._wrap(u, UNIT, a)


def vector_members(v: Relation) -> list[str]:
    return [v.src.labels[i] for i in np.flatnonzero(v.bits.any(axis=1))]


def random_relation(src: Universe, tgt: Universe, rng: np.random.Generator, density=0.5) -> Relation:
    return Relation._wrap(src, tgt, rng.random((src.size, tgt.size)) < density)


# predicates


def is_univalent(r: Relation) -> bool:
    return (r.T @ r) <= identity(r.tgt)


def is_total(r: Relation) -> bool:
    return identity(r.src) <= (r @ r.T)


def is_injective(r: Relation) -> bool:
    return (r @ r.T) <= identity(r.src)


def is_surjective(r: Relation) -> bool:
    return identity(r.tgt) <= (r.T @ r)


def is_mapping(r: Relation) -> bool:
    return is_univalent(r) and is_total(r)


def is_bijective_mapping(r: Relation) -> bool:
    return is_mapping(r) and is_injective(r) and is_surjective(r)


def is_vector(r: Relation) -> bool:
    return r == r @ top(r.tgt, r.tgt)


def is_point(r: Relation) -> bool:
    return is_vector(r) and is_injective(r) and is_surjective(r)


def _homogeneous(r: Relation, what: str) -> None:
    if r.src != r.tgt:
        raise TypeMismatch(f"{what} needs a homogeneous relation, got {r.src.name} -> {r.tgt.name}", r.typ)


def is_reflexive(r: Relation) -> bool:
    _homogeneous(r, "reflexivity")
    return identity(r.src) <= r


def is_transitive(r: Relation) -> bool:
    _homogeneous(r, "transitivity")
    return (r @ r) <= r


def is_symmetric(r: Relation) -> bool:
    _homogeneous(r, "symmetry")
    return r.T == r


def is_antisymmetric(r: Relation) -> bool:
    _homogeneous(r, "antisymmetry")
    return (r & r.T) <= identity(r.src)


def is_equivalence(r: Relation) -> bool:
    return is_reflexive(r) and is_transitive(r) and is_symmetric(r)


def is_preorder(r: Relation) -> bool:
    return is_reflexive(r) and is_transitive(r)


def is_order(r: Relation) -> bool:
    return is_preorder(r) and is_antisymmetric(r)
