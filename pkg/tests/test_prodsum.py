import pytest
from conftest import mappings, relations, universe_of
from hypothesis import given
from hypothesis import strategies as st

from relkit.errors import TypeMismatch
from relkit.finset import UNIT, Pair, atomic
from relkit.oracle import oracle_kronecker
from relkit.prodsum import (
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
from relkit.relcore import (
    Relation,
    bottom,
    identity,
    is_bijective_mapping,
    is_mapping,
    is_point,
    top,
)

X = atomic("X", "ab")
Y = atomic("Y", "xyz")


def test_projections():
    w = product(X, Y)
    assert w.pi.to_sets()["(b,y)"] == ["b"]
    assert w.rho.to_sets()["(b,y)"] == ["y"]
    assert w.pi.T @ w.rho == top(X, Y)


def test_injections():
    s = direct_sum(X, Y)
    assert s.iota.to_sets() == {"a": ["a<"], "b": ["b<"]}
    assert s.kappa.to_sets()["z"] == [">z"]
    assert s.iota @ s.kappa.T == bottom(X, Y)


def test_fork_of_mappings_is_mapping():
    f = Relation.from_function(X, X, lambda v: "b")
    g = Relation.from_function(X, Y, lambda v: "x" if v == "a" else "z")
    h = fork(f, g)
    assert is_mapping(h)
    assert h.to_sets() == {"a": ["(b,x)"], "b": ["(b,z)"]}
    assert h @ product(X, Y).pi == f


def test_fork_and_join_type_errors():
    with pytest.raises(TypeMismatch):
        fork(top(X, X), top(Y, X))
    with pytest.raises(TypeMismatch):
        join(top(X, X), top(X, Y))


def test_swap_and_assoc_are_bijections():
    z = atomic("Z", "pq")
    assert is_bijective_mapping(swap(X, Y))
    assert swap(X, Y).to_sets()["(a,z)"] == ["(z,a)"]
    t = assoc(X, Y, z)
    assert is_bijective_mapping(t)
    assert t.to_sets()["((b,x),q)"] == ["(b,(x,q))"]


def test_vec_layout():
    r = Relation.from_rows(X, Y, {"a": ["y"], "b": ["x", "z"]})
    assert vec(r).to_sets() == {
        "(a,x)": [], "(a,y)": ["*"], "(a,z)": [], "(b,x)": ["*"], "(b,y)": [], "(b,z)": ["*"]
    }


def test_unvec_needs_pair_source():
    with pytest.raises(TypeMismatch):
        unvec(top(X, UNIT))


def test_special_points_decode():
    assert decode_point(identity_point(X)) == identity(X)
    assert decode_point(bot_point(X, Y)) == bottom(X, Y)
    assert decode_point(top_point(X, Y)) == top(X, Y)
    assert is_point(top_point(X, Y))


def test_addition_theorem_example():
    u, v = atomic("U", "12"), atomic("V", "3")
    q = Relation.from_rows(X, u, {"a": ["1"]})
    r = Relation.from_rows(Y, v, {"y": ["3"]})
    s = Relation(direct_sum(X, Y).carrier, X, [[1, 0], [0, 1], [1, 1], [0, 0], [1, 0]])
    assert addition_theorem_check(q, r, s)


@pytest.mark.parametrize("nx,ny", [(1, 1), (2, 1), (2, 2), (0, 2)])
def test_sum_power_iso_is_order_isomorphism(nx, ny):
    x, y = universe_of("X", nx), universe_of("Y", ny)
    iso = sum_power_iso(x, y)
    phi = iso.phi
    assert is_bijective_mapping(phi)
    e = iso.epsilon_sum
    omega_sum = ~(e.T @ ~e)
    ex, ey = iso.epsilon_x, iso.epsilon_y
    omega_plus = kronecker(~(ex.T @ ~ex), ~(ey.T @ ~ey))
    assert omega_sum @ phi == phi @ omega_plus
    assert e @ phi == iso.epsilon_plus


# properties


@given(relations(lo=1, hi=3), relations(lo=1, hi=3))
def test_kronecker_matches_oracle(a, b):
    assert kronecker(a, b) == oracle_kronecker(a, b)


@given(st.data())
def test_fork_join_model_equality(data):
    z = universe_of("Z", data.draw(st.integers(0, 3)))
    x, y, w = (universe_of(n, data.draw(st.integers(0, 3))) for n in "XYW")
    r, s = data.draw(relations(z, x)), data.draw(relations(z, y))
    p, q = data.draw(relations(x, w)), data.draw(relations(y, w))
    assert fork(r, s) @ join(p, q) == (r @ p) & (s @ q)


@given(st.data())
def test_kronecker_multiplicative(data):
    a, b, c, d, e, f = (universe_of(n, data.draw(st.integers(0, 2))) for n in "ABCDEF")
    p, q = data.draw(relations(a, b)), data.draw(relations(b, c))
    r, s = data.draw(relations(d, e)), data.draw(relations(e, f))
    assert kronecker(p, r) @ kronecker(q, s) == kronecker(p @ q, r @ s)


@given(relations(hi=4))
def test_vec_round_trip(r):
    assert unvec(vec(r)) == r


@given(st.integers(0, 3), st.integers(0, 3), st.data())
def test_unvec_round_trip(n, m, data):
    v = data.draw(relations(Pair(universe_of("X", n), universe_of("Y", m)), UNIT))
    assert vec(unvec(v)) == v


@given(relations(hi=2))
def test_relation_point_round_trip(r):
    pt = relation_point(r)
    assert is_point(pt)
    assert decode_point(pt) == r


@given(relations(hi=2))
def test_transposition_on_points(r):
    t = transposition_point_map(r.src, r.tgt)
    assert is_bijective_mapping(t)
    assert t.T @ relation_point(r) == relation_point(r.T)


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_swap_commutes_with_fork(n, m, data):
    z = universe_of("Z", data.draw(st.integers(0, 3)))
    x, y = universe_of("X", n), universe_of("Y", m)
    c, d = data.draw(mappings(z, x)), data.draw(mappings(z, y))
    assert fork(c, d) @ swap(x, y) == fork(d, c)
