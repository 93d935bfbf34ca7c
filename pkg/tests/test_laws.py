import json

import pytest

from relkit import relcore
from relkit.laws import (
    REGISTRY,
    SUITES,
    Reject,
    law,
    reports_json,
    run_law,
    run_laws,
    select,
    summarize,
)
from relkit.laws.engine import Law


@pytest.mark.parametrize("suite", SUITES)
def test_each_suite_passes_on_a_short_run(suite):
    reports = run_laws(suite, seed=3, instances=25)
    assert reports, f"suite {suite} has no laws"
    failed = [(r.name, r.error, r.counterexample) for r in reports if not r.passed]
    assert not failed


def test_every_suite_is_populated_and_names_unique():
    laws = select("all")
    assert {lw.suite for lw in laws} == set(SUITES)
    assert len({lw.name for lw in laws}) == len(laws) == len(REGISTRY)


def test_unknown_suite():
    with pytest.raises(ValueError):
        select("nope")


def _broken_compose(r, s):
    out = relcore.Relation(r.src, s.tgt, (r.bits.astype(int) @ s.bits.astype(int)) > 0)
    if out.bits.size:
        bits = out.bits.copy()
        bits[0, 0] = not bits[0, 0]
        out = relcore.Relation(r.src, s.tgt, bits)
    return out


def test_broken_compose_is_caught(monkeypatch):
    monkeypatch.setattr(relcore, "compose", _broken_compose)
    reports = run_laws("core", seed=1, instances=30)
    bad = [r for r in reports if not r.passed]
    assert bad
    assert any(r.counterexample for r in bad)


def test_reports_are_deterministic():
    a = reports_json(run_laws("binop", seed=42, instances=20))
    b = reports_json(run_laws("binop", seed=42, instances=20))
    assert a == b
    assert json.loads(a)[0]["seed"] == 42


def test_other_seeds_also_pass():
    lw = select("core")[0]
    a = run_law(lw, seed=1, instances=40, exhaustive=False)
    b = run_law(lw, seed=2, instances=40, exhaustive=False)
    assert a.passed and b.passed
    assert a.instances == b.instances == 40


def _scratch_law(fn, size=2):
    return Law("scratch", "core", "scratch", fn, size)


def test_exhaustive_phase_enumerates_all_choices():
    seen = set()

    def fn(g):
        x = g.universe("X", hi=2)
        r = g.rel("R", x, x)
        seen.add((x.size, r.bits.tobytes()))
        return True

    rep = run_law(_scratch_law(fn), instances=0)
    assert rep.exhaustive_complete
    # sizes 0, 1, 2 give 1 + 2 + 16 relations
    assert len(seen) == rep.exhaustive_instances == 19


def test_failing_law_reports_counterexample():
    def fn(g):
        x = g.universe("X", lo=1, hi=3)
        r = g.rel("R", x, x)
        return r.count() < x.size * x.size

    rep = run_law(_scratch_law(fn, size=3), instances=50)
    assert not rep.passed and rep.failures
    assert set(rep.counterexample) >= {"X", "R"}


def test_crashing_law_is_a_failure():
    def fn(g):
        raise ZeroDivisionError("boom")

    rep = run_law(_scratch_law(fn), instances=5)
    assert not rep.passed
    assert rep.error == "ZeroDivisionError: boom"


def test_law_that_always_rejects_fails():
    def fn(g):
        raise Reject()

    rep = run_law(_scratch_law(fn), instances=5)
    assert not rep.passed
    assert rep.instances == 0 and "preconditions" in rep.error


def test_max_size_caps_universes():
    sizes = []

    def fn(g):
        sizes.append(g.universe("X", hi=5).size)
        return True

    run_law(_scratch_law(fn, size=5), instances=50, max_size=2, exhaustive=False)
    assert max(sizes) <= 2


def test_summary_counts_failures():
    def fn(g):
        return False

    rep = run_law(_scratch_law(fn), instances=3)
    s = summarize([rep])
    assert s.total == 1 and s.failed == ["scratch"]


def test_registering_twice_is_refused():
    name = select("all")[0].name
    with pytest.raises(ValueError):
        law("core", name, "x")(lambda g: True)


def test_gen_helpers_build_typed_objects():
    from relkit.relcore import is_equivalence, is_point, is_vector

    checked = []

    def fn(g):
        x = g.universe("X", lo=1, hi=3)
        p, v, q = g.point("p", x), g.vector("v", x), g.equivalence("Q", x)
        checked.append(is_point(p) and is_vector(v) and is_equivalence(q))
        return True

    run_law(_scratch_law(fn, size=3), instances=30)
    assert checked and all(checked)
