"""Fast paths against the pointwise reference implementations."""

import itertools

import numpy as np
import pytest
from conftest import composable, fixture_doc, relations, universe_of
from hypothesis import given
from hypothesis import strategies as st

from relkit.binop import BinOp, invariant_elements
from relkit.errors import CapExceeded
from relkit.finset import Power, atomic
from relkit.images import (
    existential_image,
    existential_image_syq,
    inverse_image,
    inverse_image_syq,
    power_relator,
)
from relkit.oracle import (
    oracle_compose,
    oracle_exim,
    oracle_glb,
    oracle_invariant_elements,
    oracle_inverse_image,
    oracle_kronecker,
    oracle_left_residual,
    oracle_lub,
    oracle_membership,
    oracle_power_relator,
    oracle_right_residual,
    oracle_syq,
)
from relkit.powerset import glb, lub, membership
from relkit.prodsum import kronecker
from relkit.relcore import Relation, left_residual, right_residual, syq

UNIVERSES = [universe_of(n, k) for n, k in (("A", 0), ("B", 1), ("C", 2))]


def all_relations(src, tgt):
    n = src.size * tgt.size
    for bits in itertools.product((False, True), repeat=n):
        yield Relation(src, tgt, np.array(bits, dtype=bool).reshape(src.size, tgt.size))


def test_compose_and_residuals_exhaustive_small():
    for x, y, z in itertools.product(UNIVERSES, repeat=3):
        for r in all_relations(x, y):
            for s in all_relations(y, z):
                assert r @ s == oracle_compose(r, s)
                assert right_residual(r, r @ s) == oracle_right_residual(r, r @ s)
        for c in all_relations(x, z):
            for b in all_relations(y, z):
                assert left_residual(c, b) == oracle_left_residual(c, b)


def test_syq_exhaustive_small():
    for v, w, z in itertools.product(UNIVERSES, repeat=3):
        for r in all_relations(v, w):
            for s in all_relations(v, z):
                assert syq(r, s) == oracle_syq(r, s)


def test_images_and_relator_exhaustive_small():
    for x, y in itertools.product(UNIVERSES, repeat=2):
        for r in all_relations(x, y):
            assert existential_image(r) == oracle_exim(r) == existential_image_syq(r)
            assert inverse_image(r) == oracle_inverse_image(r) == inverse_image_syq(r)
            assert power_relator(r) == oracle_power_relator(r)


def test_membership_lub_glb_exhaustive_small():
    for base in UNIVERSES:
        b = membership(base)
        assert b.epsilon == oracle_membership(base)
        k = universe_of("K", 2)
        for x in all_relations(b.power, k):
            assert lub(b, x) == oracle_lub(base, x)
            assert glb(b, x) == oracle_glb(base, x)


def test_kronecker_exhaustive_small():
    for a_src, a_tgt, b_src, b_tgt in itertools.product(UNIVERSES[1:], repeat=4):
        for a in all_relations(a_src, a_tgt):
            for b in all_relations(b_src, b_tgt):
                assert kronecker(a, b) == oracle_kronecker(a, b)


def test_invariant_elements_exhaustive_small():
    x = universe_of("X", 2)
    for cells in itertools.product(x.labels, repeat=4):
        op = BinOp.from_cayley(x, [cells[:2], cells[2:]])
        assert invariant_elements(op) == oracle_invariant_elements(op.table)


@given(composable(2, hi=5))
def test_compose_random(rs):
    r, s = rs
    assert r @ s == oracle_compose(r, s)


@given(composable(2, hi=5), st.data())
def test_residuals_random(rs, data):
    a, b = rs
    c = data.draw(relations(a.src, b.tgt))
    assert left_residual(c, b) == oracle_left_residual(c, b)
    assert right_residual(a, c) == oracle_right_residual(a, c)


@given(st.data())
def test_syq_random(data):
    v = universe_of("V", data.draw(st.integers(0, 5)))
    r, s = data.draw(relations(src=v, hi=6)), data.draw(relations(src=v, hi=6))
    assert syq(r, s) == oracle_syq(r, s)


@given(relations(hi=4))
def test_images_random(r):
    assert existential_image(r) == oracle_exim(r)
    assert inverse_image(r) == oracle_inverse_image(r)
    assert power_relator(r) == oracle_power_relator(r)


@given(st.integers(0, 4), st.data())
def test_lub_glb_random(n, data):
    base = universe_of("X", n)
    b = membership(base)
    x = data.draw(relations(src=b.power, hi=3))
    assert lub(b, x) == oracle_lub(base, x)
    assert glb(b, x) == oracle_glb(base, x)


@given(st.integers(1, 4), st.data())
def test_invariant_elements_random(n, data):
    x = universe_of("X", n)
    rows = [data.draw(st.lists(st.sampled_from(x.labels), min_size=n, max_size=n)) for _ in range(n)]
    op = BinOp.from_cayley(x, rows)
    assert invariant_elements(op) == oracle_invariant_elements(op.table)


def test_oracle_cap():
    x = universe_of("X", 70)
    big = Relation(x, x)
    with pytest.raises(CapExceeded):
        oracle_compose(big, big)


def test_oracle_syq_of_membership_is_identity():
    e = oracle_membership(atomic("X", "abc"))
    assert oracle_syq(e, e) == Relation(e.tgt, e.tgt, np.eye(8, dtype=bool))


# frozen values


def test_frozen_existential_image():
    doc = fixture_doc("images_frozen.rel")
    r, frozen = doc.relations["R"], doc.relations["exim_R"]
    assert frozen.shape == (32, 16)
    assert oracle_exim(r) == frozen
    assert existential_image(r) == frozen


def test_exim_of_two_rows_is_union_of_row_images():
    r = fixture_doc("images.rel").relations["R"]
    img = oracle_exim(r)
    assert img.row_set("{1,5}") == ["{a,b,c,d}"]


def test_power_index_matches_figure_column():
    p = Power(atomic("X", "abcd"))
    assert p.index("{b,d}") == 10
