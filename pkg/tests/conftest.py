from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from relkit.cli.fileformat import load_file
from relkit.finset import Atomic
from relkit.relcore import Relation

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def fixture_doc(name: str):
    return load_file(str(FIXTURES / name))


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def universe_of(name: str, n: int) -> Atomic:
    return Atomic(name, tuple(f"{name.lower()}{i}" for i in range(n)))


def sizes(lo: int = 0, hi: int = 4):
    return st.integers(min_value=lo, max_value=hi)


@st.composite
def relations(draw, src=None, tgt=None, lo: int = 0, hi: int = 4):
    if src is None:
        src = universe_of("X", draw(sizes(lo, hi)))
    if tgt is None:
        tgt = universe_of("Y", draw(sizes(lo, hi)))
    flat = draw(st.lists(st.booleans(), min_size=src.size * tgt.size, max_size=src.size * tgt.size))
    return Relation(src, tgt, np.array(flat, dtype=bool).reshape(src.size, tgt.size))


@st.composite
def composable(draw, k: int = 2, lo: int = 0, hi: int = 4):
    """k relations X0 -> X1 -> ... -> Xk."""
    us = [universe_of(f"U{i}", draw(sizes(lo, hi))) for i in range(k + 1)]
    return [draw(relations(us[i], us[i + 1])) for i in range(k)]


@st.composite
def same_type(draw, k: int = 2, lo: int = 0, hi: int = 4):
    x = universe_of("X", draw(sizes(lo, hi)))
    y = universe_of("Y", draw(sizes(lo, hi)))
    return [draw(relations(x, y)) for _ in range(k)]


@st.composite
def mappings(draw, src, tgt):
    cols = draw(st.lists(st.integers(0, tgt.size - 1), min_size=src.size, max_size=src.size))
    a = np.zeros((src.size, tgt.size), dtype=bool)
    a[np.arange(src.size), cols] = True
    return Relation(src, tgt, a)


# acceptance criteria report: filled by test_acceptance, printed after the run
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (int(k.rstrip("abcdefg")), k)):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key:4} {detail}")
