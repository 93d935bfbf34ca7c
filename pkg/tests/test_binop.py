import pytest
from conftest import fixture_doc, universe_of
from hypothesis import given
from hypothesis import strategies as st

from relkit.binop import (
    BinOp,
    allows_left_inversion,
    allows_right_inversion,
    distributes_over,
    invariant_elements,
    is_associative,
    is_commutative,
    left_invertible_elements,
    left_neutrals,
    neutrals,
    right_inverse_map,
    right_invertible_elements,
    right_neutral_relation_via_diagonal,
    right_neutrals,
    section_map,
)
from relkit.errors import NotAMapping, NotAPoint, TypeMismatch
from relkit.finset import atomic
from relkit.relcore import (
    is_bijective_mapping,
    is_mapping,
    point,
    top,
    vector,
    vector_members,
)


def fig(name):
    return fixture_doc(name).binops["F"]


def chain(fn):
    x = atomic("C", "123")
    return BinOp.from_cayley(x, [[fn(a, b) for b in "123"] for a in "123"])


def test_table_lookup_and_rows():
    op = fig("cyclic3.rel")
    assert op("[2,3,1]", "[2,3,1]") == "[3,1,2]"
    assert op.rows()[2] == ["[3,1,2]", "[1,2,3]", "[2,3,1]"]


def test_bad_tables_rejected():
    x = atomic("X", "ab")
    with pytest.raises(NotAMapping, match="row a has 1 entries"):
        BinOp.from_cayley(x, [["a"], ["a", "b"]])
    with pytest.raises(NotAMapping, match="not an element"):
        BinOp.from_cayley(x, [["a", "q"], ["a", "b"]])
    with pytest.raises(NotAMapping):
        BinOp.from_cayley(x, {"a": ["a", "b"]})
    with pytest.raises(TypeMismatch):
        BinOp(top(x, x))


def test_cyclic_group():
    op = fig("cyclic3.rel")
    assert is_commutative(op) and is_associative(op)
    assert vector_members(neutrals(op)) == ["[1,2,3]"]
    assert allows_left_inversion(op) and allows_right_inversion(op)
    ir = right_inverse_map(op, point(op.carrier, "[1,2,3]"))
    assert is_bijective_mapping(ir)
    assert ir.to_sets() == {
        "[1,2,3]": ["[1,2,3]"],
        "[2,3,1]": ["[3,1,2]"],
        "[3,1,2]": ["[2,3,1]"],
    }


def test_constant_table():
    op = fig("constant4.rel")
    assert is_commutative(op) and is_associative(op)
    assert vector_members(right_neutrals(op)) == []


def test_left_invertible_elements_of_figure_table():
    op = fig("left_inverses.rel")
    assert vector_members(left_invertible_elements(op)) == ["b", "f"]
    assert not allows_left_inversion(op)


def test_invariant_elements_of_figure_table():
    op = fig("invariants.rel")
    assert not is_commutative(op)
    assert op("a", "b") == "b" and op("b", "a") == "a"
    # row a and column a differ, so only c commutes with everything
    assert vector_members(invariant_elements(op)) == ["c"]


def test_two_right_neutrals():
    op = fig("two_right_neutrals.rel")
    assert vector_members(right_neutrals(op)) == ["c", "e"]
    assert vector_members(left_neutrals(op)) == []
    assert vector_members(neutrals(op)) == []


@pytest.mark.parametrize("e", ["c", "e"])
def test_right_inverses_frozen(e):
    op = fig("two_right_neutrals.rel")
    frozen = fixture_doc(f"two_right_neutrals_ir_{e}.rel").relations[f"ir_{e}"]
    ir = right_inverse_map(op, point(op.carrier, e))
    assert ir == frozen
    assert not is_bijective_mapping(ir)


def test_right_inverse_needs_point():
    op = fig("cyclic3.rel")
    with pytest.raises(NotAPoint):
        right_inverse_map(op, vector(op.carrier, []))


def test_section_map_for_point_c():
    x = atomic("X", "abcdefg")
    f = section_map(point(x, "c"))
    assert is_mapping(f)
    assert f.to_sets() == {y: [f"(c,{y})"] for y in x.labels}
    assert section_map(point(x, "c"), flip=True).to_sets()["a"] == ["(a,c)"]


def test_distributivity():
    mn, mx = chain(min), chain(max)
    assert distributes_over(mn, mx) and distributes_over(mx, mn)
    op = fig("cyclic3.rel")
    assert not distributes_over(op, op)


def test_distributivity_carrier_mismatch():
    with pytest.raises(TypeMismatch):
        distributes_over(chain(min), fig("cyclic3.rel"))


@st.composite
def ops(draw, lo=1, hi=4):
    n = draw(st.integers(lo, hi))
    x = universe_of("X", n)
    rows = [draw(st.lists(st.sampled_from(x.labels), min_size=n, max_size=n)) for _ in range(n)]
    return BinOp.from_cayley(x, rows)


@given(ops())
def test_commutativity_pointwise(op):
    xs = op.carrier.labels
    assert is_commutative(op) == all(op(a, b) == op(b, a) for a in xs for b in xs)


@given(ops())
def test_associativity_pointwise(op):
    xs = op.carrier.labels
    assert is_associative(op) == all(op(op(a, b), c) == op(a, op(b, c)) for a in xs for b in xs for c in xs)


@given(ops())
def test_neutrals_pointwise(op):
    xs = op.carrier.labels
    assert vector_members(right_neutrals(op)) == [n for n in xs if all(op(x, n) == x for x in xs)]
    assert vector_members(left_neutrals(op)) == [n for n in xs if all(op(n, x) == x for x in xs)]


def _full_rows(m):
    return [x for x in m.src.labels if m.row_set(x) == list(m.tgt.labels)]


@given(ops())
def test_diagonal_route_gives_same_neutrals(op):
    assert _full_rows(right_neutral_relation_via_diagonal(op)) == vector_members(right_neutrals(op))


@given(ops())
def test_invertibility_pointwise(op):
    xs = op.carrier.labels
    solvable_right = [x for x in xs if all(any(op(x, y) == z for y in xs) for z in xs)]
    solvable_left = [y for y in xs if all(any(op(x, y) == z for x in xs) for z in xs)]
    assert vector_members(left_invertible_elements(op)) == solvable_right
    assert vector_members(right_invertible_elements(op)) == solvable_left


@st.composite
def ops_with_neutral(draw):
    n = draw(st.integers(1, 4))
    x = universe_of("X", n)
    e = draw(st.integers(0, n - 1))
    rows = [draw(st.lists(st.sampled_from(x.labels), min_size=n, max_size=n)) for _ in range(n)]
    for i in range(n):
        rows[i][e] = x.labels[i]
        rows[e][i] = x.labels[i]
    return BinOp.from_cayley(x, rows), x.labels[e]


@given(ops_with_neutral())
def test_left_and_right_neutrals_coincide(case):
    op, e = case
    r, l = right_neutrals(op), left_neutrals(op)
    assert r == l
    assert vector_members(r) == [e]
