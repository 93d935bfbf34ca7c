"""Labeled finite universes.

Element orderings are canonical:

* Atomic: the order the labels were given in.
* Pair(A, B): row-major, the left component varies slowest.
* Sum(A, B): every left element first, then every right element.
* Power(A): binary counting, bit i of the index says whether base element i
  is a member. Index 0 is the empty set.
* Unit: a single element rendered as ``*``.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass
from functools import cached_property

from .errors import CapExceeded, DuplicateLabel, IndexOutOfRange

DEFAULT_SIZE_CAP = 2**20
_cap = [DEFAULT_SIZE_CAP]


def size_cap() -> int:
    return _cap[0]


@contextlib.contextmanager
def override_size_cap(cap: int):
    old = _cap[0]
    _cap[0] = cap
    try:
        yield
    finally:
        _cap[0] = old


def _check_cap(size: int, what: str) -> None:
    if size > _cap[0]:
        raise CapExceeded(f"{what} would have {size} elements, cap is {_cap[0]}")


class Universe:
    """Common behaviour; concrete kinds are the dataclasses below."""

    kind = "abstract"

    @property
    def size(self) -> int:
        raise NotImplementedError

    def __len__(self):
        return self.size

    def label(self, i: int) -> str:
        if not 0 <= i < self.size:
            raise IndexOutOfRange(f"index {i} outside {self.name} of size {self.size}")
        return self._label(i)

    def _label(self, i: int) -> str:
        raise NotImplementedError

    @cached_property
    def labels(self) -> tuple[str, ...]:
        return tuple(self._label(i) for i in range(self.size))

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise IndexOutOfRange(f"{label!r} is not an element of {self.name}") from None

    def __contains__(self, label):
        return label in self._index

    def __str__(self):
        return self.name


@dataclass(frozen=True, eq=True)
class Atomic(Universe):
    name: str
    atoms: tuple[str, ...]

    kind = "atomic"

    def __post_init__(self):
        seen = set()
        for lab in self.atoms:
            if not isinstance(lab, str) or lab == "":
                raise DuplicateLabel(f"labels of {self.name} must be nonempty strings")
            if lab in seen:
                raise DuplicateLabel(f"label {lab!r} occurs twice in {self.name}")
            seen.add(lab)
        _check_cap(len(self.atoms), self.name)

    @property
    def size(self):
        return len(self.atoms)

    def _label(self, i):
        return self.atoms[i]


@dataclass(frozen=True, eq=True)
class Pair(Universe):
    left: Universe
    right: Universe

    kind = "pair"

    def __post_init__(self):
        _check_cap(self.left.size * self.right.size, self.name)

    @property
    def name(self):
        return f"pair({self.left.name},{self.right.name})"

    @cached_property
    def size(self):
        return self.left.size * self.right.size

    def split(self, k: int) -> tuple[int, int]:
        return divmod(k, self.right.size)

    def join(self, i: int, j: int) -> int:
        return i * self.right.size + j

    def _label(self, k):
        i, j = self.split(k)
        return f"({self.left._label(i)},{self.right._label(j)})"


@dataclass(frozen=True, eq=True)
class Sum(Universe):
    left: Universe
    right: Universe

    kind = "sum"

    def __post_init__(self):
        _check_cap(self.left.size + self.right.size, self.name)

    @property
    def name(self):
        return f"sum({self.left.name},{self.right.name})"

    @cached_property
    def size(self):
        return self.left.size + self.right.size

    def _label(self, k):
        if k < self.left.size:
            return self.left._label(k) + "<"
        return ">" + self.right._label(k - self.left.size)


@dataclass(frozen=True, eq=True)
class Power(Universe):
    base: Universe

    kind = "power"

    def __post_init__(self):
        if self.base.size >= 64 or 2**self.base.size > _cap[0]:
            raise CapExceeded(f"pow({self.base.name}) would have 2^{self.base.size} elements, cap is {_cap[0]}")

    @property
    def name(self):
        return f"pow({self.base.name})"

    @cached_property
    def size(self):
        return 2**self.base.size

    def _label(self, k):
        return "{" + ",".join(self.base._label(i) for i in power_members(k)) + "}"


@dataclass(frozen=True, eq=True)
class Unit(Universe):
    kind = "unit"

    @property
    def name(self):
        return "unit"

    @property
    def size(self):
        return 1

    def _label(self, k):
        return "*"


UNIT = Unit()


def atomic(name: str, labels) -> Atomic:
    return Atomic(name, tuple(labels))


def element_label(u: Universe, i: int) -> str:
    return u.label(i)


def power_index(members) -> int:
    return sum(1 << i for i in set(members))


def power_members(index: int) -> list[int]:
    out, i = [], 0
    while index:
        if index & 1:
            out.append(i)
        index >>= 1
        i += 1
    return out
