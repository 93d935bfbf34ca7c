"""Law registry, instance generation and the runner.

A law is a function of a generator ``g``. It draws its inputs through ``g``
and returns True when the law holds on them. Every draw goes through
``Gen.choice`` (or ``Gen.bits``), so the same law body serves two modes:

* random: choices come from a seeded numpy Generator;
* exhaustive: choices are enumerated depth-first, odometer style, with
  universe sizes bounded by 2, until the search space is used up or the
  budget runs out. Laws over many relations whose size-2 space has millions
  of members declare the smaller ``SAMPLED_BUDGET``; the report says the
  enumeration was partial.
"""

from __future__ import annotations

import json
import zlib
from collections.abc import Callable
from dataclasses import asdict, dataclass, field

import numpy as np

from ..finset import UNIT, Atomic, Universe
from ..relcore import Relation, is_surjective, is_total

SUITES = ("core", "syq", "powerset", "images", "prodsum", "binop", "boolalg")
DEFAULT_SEED = 1
DEFAULT_INSTANCES = 500
EXHAUSTIVE_SIZE = 2
EXHAUSTIVE_BUDGET = 10000
SAMPLED_BUDGET = 1000
MAX_REJECTS = 40


class Reject(Exception):
    """The drawn inputs do not meet the law's preconditions."""


@dataclass(frozen=True)
class Law:
    name: str
    suite: str
    anchor: str
    fn: Callable
    size: int = 5
    budget: int = EXHAUSTIVE_BUDGET


REGISTRY: dict[str, Law] = {}


def law(suite: str, name: str, anchor: str, size: int = 5, budget: int = EXHAUSTIVE_BUDGET):
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite}")

    def register(fn):
        if name in REGISTRY:
            raise ValueError(f"duplicate law name {name!r}")
        REGISTRY[name] = Law(name, suite, anchor, fn, size, budget)
        return fn

    return register


class _RandomSource:
    def __init__(self, rng: np.random.Generator):
        self.rng = rng

    def draw(self, n: int) -> int:
        return int(self.rng.integers(n))

    def bits(self, k: int) -> list[int]:
        return self.rng.integers(0, 2, k).tolist()


class _ReplaySource:
    """Replays a prefix of choices, then always picks 0; records the bounds seen."""

    def __init__(self, prefix: list[int]):
        self.prefix = prefix
        self.values: list[int] = []
        self.bounds: list[int] = []

    def draw(self, n: int) -> int:
        k = len(self.values)
        v = self.prefix[k] if k < len(self.prefix) else 0
        self.values.append(v)
        self.bounds.append(n)
        return v

    def bits(self, k: int) -> list[int]:
        return [self.draw(2) for _ in range(k)]


_UNIVERSES: dict[tuple[str, int], Atomic] = {}


def make_universe(name: str, n: int) -> Atomic:
    key = (name, n)
    if key not in _UNIVERSES:
        stem = name.lower()
        _UNIVERSES[key] = Atomic(name, tuple(f"{stem}{i}" for i in range(n)))
    return _UNIVERSES[key]


class Gen:
    def __init__(self, source, max_size: int):
        self.source = source
        self.max_size = max_size
        self.drawn: dict[str, object] = {}
        self.trace: list[int] = []

    def choice(self, n: int) -> int:
        if n <= 0:
            raise Reject("nothing to choose from")
        v = self.source.draw(n)
        self.trace.append(v)
        return v

    def bits(self, k: int) -> np.ndarray:
        b = self.source.bits(k)
        self.trace.extend(b)
        return np.array(b, dtype=bool)

    def assume(self, condition: bool) -> None:
        if not condition:
            raise Reject("precondition not met")

    def size(self, hi: int | None = None, lo: int = 0) -> int:
        top_ = self.max_size if hi is None else min(hi, self.max_size)
        if top_ < lo:
            raise Reject("size bound below minimum")
        return lo + self.choice(top_ - lo + 1)

    def universe(self, name: str, hi: int | None = None, lo: int = 0) -> Atomic:
        u = make_universe(name, self.size(hi, lo))
        self.drawn[name] = u
        return u

    def universes(self, names: str, hi: int | None = None, lo: int = 0) -> list[Atomic]:
        return [self.universe(n, hi, lo) for n in names.split()]

    def rel(self, name: str, src: Universe, tgt: Universe, kind: str = "any") -> Relation:
        r = self._relation(src, tgt, kind)
        self.drawn[name] = r
        return r

    def _relation(self, src: Universe, tgt: Universe, kind: str) -> Relation:
        n, m = src.size, tgt.size
        if kind == "any":
            return Relation(src, tgt, self.bits(n * m).reshape(n, m))
        if kind in ("mapping", "univalent"):
            extra = 1 if kind == "univalent" else 0
            a = np.zeros((n, m), dtype=bool)
            for i in range(n):
                j = self.choice(m + extra)
                if j < m:
                    a[i, j] = True
            return Relation(src, tgt, a)
        if kind == "injective":
            return self._relation(tgt, src, "univalent").T
        if kind == "total":
            r = self._relation(src, tgt, "any")
            self.assume(is_total(r))
            return r
        if kind == "surjective":
            r = self._relation(src, tgt, "any")
            self.assume(is_surjective(r))
            return r
        if kind == "surjective mapping":
            r = self._relation(src, tgt, "mapping")
            self.assume(is_surjective(r))
            return r
        if kind == "permutation":
            if n != m:
                raise Reject("permutation between sets of different size")
            free = list(range(m))
            a = np.zeros((n, m), dtype=bool)
            for i in range(n):
                a[i, free.pop(self.choice(len(free)))] = True
            return Relation(src, tgt, a)
        raise ValueError(f"unknown relation kind {kind!r}")

    def point(self, name: str, u: Universe) -> Relation:
        a = np.zeros((u.size, 1), dtype=bool)
        a[self.choice(u.size), 0] = True
        r = Relation(u, UNIT, a)
        self.drawn[name] = r
        return r

    def vector(self, name: str, u: Universe) -> Relation:
        r = Relation(u, UNIT, self.bits(u.size).reshape(u.size, 1))
        self.drawn[name] = r
        return r

    def equivalence(self, name: str, u: Universe) -> Relation:
        """Random partition as a restricted growth string."""
        cls: list[int] = []
        for _ in range(u.size):
            cls.append(self.choice(max(cls, default=-1) + 2))
        c = np.array(cls, dtype=np.int64)
        r = Relation(u, u, c[:, None] == c[None, :])
        self.drawn[name] = r
        return r


def serialize(value) -> object:
    if isinstance(value, Relation):
        return {"type": f"{value.src.name} -> {value.tgt.name}", "rows": value.to_sets()}
    if isinstance(value, Universe):
        return list(value.labels)
    return repr(value)


@dataclass
class LawReport:
    name: str
    suite: str
    anchor: str
    seed: int
    instances: int = 0
    distinct: int = 0
    rejected: int = 0
    exhaustive_instances: int = 0
    exhaustive_complete: bool = False
    failures: int = 0
    passed: bool = True
    counterexample: dict | None = None
    error: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def _law_seed(name: str, seed: int) -> np.random.Generator:
    return np.random.default_rng([seed, zlib.crc32(name.encode())])


def _attempt(lw: Law, g: Gen, report: LawReport) -> bool | None:
    """Run one instance; None means rejected."""
    try:
        ok = bool(lw.fn(g))
    except Reject:
        report.rejected += 1
        return None
    except Exception as exc:  # noqa: BLE001  a crashing law counts as a failure
        ok = False
        if report.error is None:
            report.error = f"{type(exc).__name__}: {exc}"
    if not ok:
        report.failures += 1
        if report.counterexample is None:
            report.counterexample = {k: serialize(v) for k, v in g.drawn.items()}
    return ok


def run_law(
    lw: Law,
    seed: int = DEFAULT_SEED,
    instances: int = DEFAULT_INSTANCES,
    max_size: int | None = None,
    exhaustive: bool = True,
    budget: int | None = None,
) -> LawReport:
    report = LawReport(lw.name, lw.suite, lw.anchor, seed)
    budget = lw.budget if budget is None else budget
    if exhaustive:
        prefix: list[int] = []
        limit = min(EXHAUSTIVE_SIZE, lw.size)
        while report.exhaustive_instances < budget:
            src = _ReplaySource(prefix)
            if _attempt(lw, Gen(src, limit), report) is not None:
                report.exhaustive_instances += 1
            seq, bounds = src.values, src.bounds
            i = len(seq) - 1
            while i >= 0 and seq[i] + 1 >= bounds[i]:
                i -= 1
            if i < 0:
                report.exhaustive_complete = True
                break
            prefix = seq[:i] + [seq[i] + 1]

    rng = _law_seed(lw.name, seed)
    size = lw.size if max_size is None else min(lw.size, max_size)
    seen = set()
    tries = 0
    while report.instances < instances and tries < instances * MAX_REJECTS:
        tries += 1
        g = Gen(_RandomSource(rng), size)
        if _attempt(lw, g, report) is not None:
            report.instances += 1
            seen.add(tuple(g.trace))
    report.distinct = len(seen)
    report.passed = report.failures == 0 and report.instances > 0
    if report.instances == 0 and report.error is None:
        report.error = "no instance satisfied the preconditions"
    return report


def select(suite: str) -> list[Law]:
    from . import suites  # noqa: F401  (registers every law)

    if suite == "all":
        return list(REGISTRY.values())
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
    return [lw for lw in REGISTRY.values() if lw.suite == suite]


def _run_named(args):
    name, seed, instances, max_size = args
    from . import suites  # noqa: F401

    return run_law(REGISTRY[name], seed, instances, max_size)


def run_laws(
    suite: str = "all",
    seed: int = DEFAULT_SEED,
    max_size: int | None = None,
    instances: int = DEFAULT_INSTANCES,
    jobs: int = 1,
) -> list[LawReport]:
    laws = select(suite)
    if jobs <= 1:
        return [run_law(lw, seed, instances, max_size) for lw in laws]
    from concurrent.futures import ProcessPoolExecutor

    work = [(lw.name, seed, instances, max_size) for lw in laws]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_named, work, chunksize=4))


def reports_json(reports: list[LawReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True)


@dataclass
class Summary:
    total: int = 0
    failed: list[str] = field(default_factory=list)
    incomplete: list[str] = field(default_factory=list)


def summarize(reports: list[LawReport]) -> Summary:
    s = Summary(total=len(reports))
    for r in reports:
        if not r.passed:
            s.failed.append(r.name)
        if not r.exhaustive_complete:
            s.incomplete.append(r.name)
    return s
