import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest
from conftest import FIXTURES, fixture_doc, relations, universe_of
from hypothesis import given
from hypothesis import strategies as st

from relkit import relcore
from relkit.binop import BinOp
from relkit.cli.fileformat import Document, dump, load, quote
from relkit.cli.main import main
from relkit.cli.render import render
from relkit.cli.term import Binary, Call, Label, Name, Unary, eval_text, parse, to_text
from relkit.errors import ParseError, RelkitError, TermTypeError, UnboundIdentifier
from relkit.finset import Pair, Power, atomic
from relkit.powerset import membership
from relkit.relcore import Relation, identity, is_mapping, is_surjective

GOLDEN = Path(__file__).parent / "golden"
AB = "universe X = {a, b}\n"


@pytest.fixture
def ab_file(tmp_path):
    p = tmp_path / "ab.rel"
    p.write_text(AB)
    return str(p)


# parsing


def test_precedence():
    assert parse("A | B & C") == Binary("|", Name("A"), Binary("&", Name("B"), Name("C")))
    assert parse("A * B * C") == Binary("*", Binary("*", Name("A"), Name("B")), Name("C"))
    assert parse("A \\ B * C") == Binary("\\", Name("A"), Binary("*", Name("B"), Name("C")))
    assert parse("~A^") == Unary("~", Unary("^", Name("A")))
    assert parse("~A * B") == Binary("*", Unary("~", Name("A")), Name("B"))


def test_calls_and_labels():
    t = parse('point(X, "{a,b}")')
    assert t == Call("point", (Name("X"), Label("{a,b}")))
    assert parse("f()") == Call("f", ())


def test_whitespace_insensitive():
    assert parse("syq( R ,S )^") == parse("syq(R,S)^")


def test_residual_chain_needs_parentheses():
    with pytest.raises(ParseError, match="line 1, column 7"):
        parse("A \\ C / B")
    assert parse("(A \\ C) / B") == Binary("/", Binary("\\", Name("A"), Name("C")), Name("B"))


@pytest.mark.parametrize("text", ["", "A *", "(A", "A B", "A $ B", 'point(X, "a)'])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)


def test_parse_error_position_on_second_line():
    with pytest.raises(ParseError) as info:
        parse("A *\n  * B")
    assert (info.value.line, info.value.col) == (2, 3)


names = st.sampled_from(["A", "B", "R", "eps_X", "x'"])


def terms():
    leaves = st.one_of(names.map(Name), st.sampled_from(["a", "{a,b}", 'q"x']).map(Label))

    def extend(inner):
        return st.one_of(
            st.tuples(st.sampled_from(["~", "^"]), inner).map(lambda p: Unary(*p)),
            st.tuples(st.sampled_from(["|", "&", "\\", "/", "*"]), inner, inner).map(lambda p: Binary(*p)),
            st.tuples(st.sampled_from(["syq", "kron", "f"]), st.lists(inner, max_size=3)).map(
                lambda p: Call(p[0], tuple(p[1]))
            ),
        )

    return st.recursive(leaves, extend, max_leaves=12)


@given(terms())
def test_print_parse_round_trip(t):
    text = to_text(t)
    assert parse(text) == t
    assert to_text(parse(text)) == text


# typing and evaluation


def test_omega_term(ab_file):
    env = load(AB).env()
    omega = eval_text("~(eps(X)^ * ~eps(X))", env)
    assert omega == membership(atomic("X", "ab")).omega


def test_identity_composition():
    doc = fixture_doc("images.rel")
    assert eval_text("I(N) * R", doc.env()) == doc.relations["R"]


def test_syq_type_error_names_both_universes():
    doc = fixture_doc("images.rel")
    with pytest.raises(TermTypeError) as info:
        eval_text("syq(R, R^)", doc.env())
    assert "N" in str(info.value) and "X" in str(info.value)


def test_composition_type_error_has_position():
    doc = fixture_doc("images.rel")
    with pytest.raises(TermTypeError, match="line 1"):
        eval_text("R * R", doc.env())


def test_unbound_identifier():
    with pytest.raises(UnboundIdentifier) as info:
        eval_text("I(N) | Q", fixture_doc("images.rel").env())
    assert info.value.col == 8


def test_exim_term_matches_frozen():
    doc = fixture_doc("images_frozen.rel")
    assert eval_text("exim(R)", doc.env()) == doc.relations["exim_R"]


def test_meet_term():
    m = eval_text("meet(pow(X))", load("universe X = {a, b, c}").env())
    assert m.shape == (64, 8)
    assert is_mapping(m) and is_surjective(m)


def test_residual_terms():
    doc = fixture_doc("images.rel")
    env = doc.env()
    r = doc.relations["R"]
    assert eval_text("R \\ R", env) == relcore.right_residual(r, r)
    assert eval_text("R / R", env) == relcore.left_residual(r, r)


def test_product_functions():
    env = load("universe X = {a, b}\nuniverse Y = {u}").env()
    assert eval_text("pi(X, Y)^ * rho(X, Y)", env) == relcore.top(env["X"], env["Y"])
    assert eval_text("unvec(vec(TOP(X, Y)))", env) == relcore.top(env["X"], env["Y"])


def test_binop_table_in_env():
    env = fixture_doc("cyclic3.rel").env()
    t = eval_text("F", env)
    assert is_mapping(t)


# file format


def test_load_example():
    doc = load(
        """
        # comment
        universe X = {a, b}
        universe PX = pow(X)
        relation R : X -> PX {
          a: {"{}", "{a,b}"}   # trailing comment
          b: {}
        }
        binop F : X {
          row a: [a, b]
          row b: [b, a]
        }
        """
    )
    r = doc.relations["R"]
    assert r.tgt == Power(atomic("X", "ab"))
    assert r.to_sets() == {"a": ["{}", "{a,b}"], "b": []}
    assert doc.binops["F"]("b", "b") == "a"


@pytest.mark.parametrize(
    "text, where",
    [
        ("universe X = {a, a}", (1, 18)),
        ("universe X = {a}\nrelation R : X -> Y { }", (2, 19)),
        ("universe X = {a, b}\nrelation R : X -> X {\n b: {}\n a: {}\n}", (3, 2)),
        ("universe X = {a}\nrelation R : X -> X {\n a: {z}\n}", (3, 6)),
        ("universe X = {a}\nbinop F : X {\n row a: [a, a]\n}", (2, 13)),
        ("universe X = {a}\nuniverse X = {b}", (2, 10)),
        ("relation", (1, 9)),
        ('universe X = {"}', (1, 15)),
        ("universe X = {a}\nthing", (2, 1)),
    ],
)
def test_file_errors_carry_positions(text, where):
    with pytest.raises(ParseError) as info:
        load(text)
    assert (info.value.line, info.value.col) == where


def test_fixture_files_round_trip():
    for path in sorted(FIXTURES.glob("*.rel")):
        text = dump(load(path.read_text()))
        assert dump(load(text)) == text, path.name


@given(relations(hi=4))
def test_relation_file_round_trip(r):
    doc = Document()
    doc.add_relation("R", r)
    again = load(dump(doc)).relations["R"]
    assert again == r
    assert np.array_equal(again.bits, r.bits)


def test_composite_universes_round_trip():
    x, y = atomic("X", ["a b", "c->d", "unit"]), atomic("Y", ["1"])
    doc = Document()
    doc.add_relation("S", Relation(Pair(x, y), Power(y), [[1, 0], [0, 1], [1, 1]]))
    text = dump(doc)
    assert '"a b"' in text and '"c->d"' in text and '"unit"' in text
    assert load(text).relations["S"] == doc.relations["S"]


def test_conflicting_universe_names():
    doc = Document()
    doc.add_relation("R", identity(atomic("X", "ab")))
    with pytest.raises(RelkitError):
        doc.add_relation("S", identity(atomic("X", "abc")))


def test_binop_round_trip():
    doc = fixture_doc("left_inverses.rel")
    again = load(dump(doc))
    assert again.binops["F"].table == doc.binops["F"].table


def test_quote():
    assert quote("abc") == "abc"
    assert quote("{a,b}") == '"{a,b}"'
    assert quote("row") == '"row"'


# rendering


@pytest.mark.parametrize(
    "argv, golden",
    [
        (["eval", "-f", "{ab}", "-e", "I(X)"], "identity_ab.txt"),
        (["eval", "-f", "{ab}", "-e", "eps(X)"], "eps_ab.txt"),
        (["eval", "-f", "{ab}", "-e", "eps(X)", "--dense"], "eps_ab_dense.txt"),
        (["eval", "-f", "{ab}", "-e", "joinop(pow(X))", "--style", "sets"], "join_ab_sets.txt"),
        (["render", "-f", "{fx}/cyclic3.rel", "F", "--style", "sets"], "cyclic3_sets.txt"),
        (["render", "-f", "{fx}/images.rel", "R"], "images_R.txt"),
        (["render", "-f", "{fx}/images.rel", "R", "--style", "sets"], "images_R_sets.txt"),
    ],
)
def test_golden_output(argv, golden, ab_file, capsys):
    argv = [a.format(ab=ab_file, fx=FIXTURES) for a in argv]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first
    assert first == (GOLDEN / golden).read_text()


def test_identity_grid():
    assert render(identity(atomic("X", "ab"))) == "  a b\na 1 .\nb . 1\n"


def test_membership_pattern_dense():
    out = render(membership(atomic("X", "ab")).epsilon, dense=True).splitlines()
    assert out[0].split() == ["{}", "{a}", "{b}", "{a,b}"]
    assert out[1].split()[1:] == ["0", "1", "0", "1"]
    assert out[2].split()[1:] == ["0", "0", "1", "1"]


def test_render_unknown_style():
    with pytest.raises(ValueError):
        render(identity(atomic("X", "a")), style="fancy")


def test_empty_relation_renders():
    e = universe_of("E", 0)
    assert render(identity(e)) == "\n"


# command line


def test_exit_code_for_parse_error(capsys):
    assert main(["eval", "-e", "A \\ C / B"]) == 2
    assert "line 1" in capsys.readouterr().err


def test_exit_code_for_type_error(capsys):
    assert main(["eval", "-f", str(FIXTURES / "images.rel"), "-e", "R * R"]) == 2
    assert "relkit:" in capsys.readouterr().err


def test_exit_code_for_missing_file(capsys):
    assert main(["render", "-f", "/nonexistent/file.rel", "R"]) == 2


def test_exit_code_for_unknown_name(capsys):
    assert main(["render", "-f", str(FIXTURES / "images.rel"), "Q"]) == 2


def test_eval_of_label_is_an_error(capsys):
    assert main(["eval", "-e", '"a"']) == 2


def test_eval_of_universe_prints_elements(ab_file, capsys):
    assert main(["eval", "-f", ab_file, "-e", "pow(X)"]) == 0
    assert capsys.readouterr().out == 'pow(X) = {"{}", "{a}", "{b}", "{a,b}"}\n'


def test_check_passes_and_writes_json(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["check", "binop", "--instances", "10", "--seed", "5", "--json", str(out)]) == 0
    text = capsys.readouterr().out
    assert text.startswith("PASS [binop]")
    assert "laws passed (seed 5)" in text
    data = json.loads(out.read_text())
    assert all(r["passed"] and r["seed"] == 5 for r in data)


def test_check_json_to_stdout_moves_text_to_stderr(capsys):
    assert main(["check", "binop", "--instances", "5", "--seed", "5", "--json", "-"]) == 0
    cap = capsys.readouterr()
    assert json.loads(cap.out)[0]["seed"] == 5
    assert "laws passed (seed 5)" in cap.err


def test_check_quiet_and_env_seed(monkeypatch, capsys):
    monkeypatch.setenv("RELKIT_SEED", "9")
    assert main(["check", "boolalg", "--instances", "5", "-q", "--max-size", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1 and lines[0].endswith("(seed 9)")


def test_check_bad_env_seed(monkeypatch):
    monkeypatch.setenv("RELKIT_SEED", "x")
    with pytest.raises(SystemExit):
        main(["check", "core", "--instances", "1"])


def test_check_failure_exit_code(monkeypatch, capsys):
    def broken(r, s):
        return relcore.bottom(r.src, s.tgt)

    monkeypatch.setattr(relcore, "compose", broken)
    assert main(["check", "core", "--instances", "10", "-q"]) == 1
    assert "FAIL [core]" in capsys.readouterr().out


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "relkit.cli.main", "eval", "-e", "I(unit)"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "  *\n* 1\n"


def test_binop_from_cayley_matches_file():
    x = atomic("X", "ab")
    op = BinOp.from_cayley(x, [["a", "b"], ["b", "a"]])
    doc = Document()
    doc.add_binop("F", op)
    assert "row b: [b, a]" in dump(doc)
