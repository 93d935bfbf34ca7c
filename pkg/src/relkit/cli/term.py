"""The relational term language: parser, printer, type checker and evaluator.

Grammar, weakest binding first::

    expr    := expr '|' expr            union
             | expr '&' expr            intersection
             | expr ('\\' | '/') expr   residuals, no chaining
             | expr '*' expr            composition
             | '~' expr                 complement
             | atom '^'                 converse
    atom    := NAME | NAME '(' args ')' | STRING | '(' expr ')'

``A \\ C`` is the greatest B with A*B <= C, ``C / B`` the greatest A with
A*B <= C.
"""

from __future__ import annotations

import json
import re
from collections.abc import Callable
from dataclasses import dataclass, field

from ..boolalg import lifted
from ..errors import TermTypeError, UnboundIdentifier
from ..finset import UNIT, Pair, Power, Sum, Universe
from ..images import existential_image, inverse_image, power_relator
from ..powerset import atoms, glb, glbR, lub, lubR, membership
from ..prodsum import (
    assoc,
    decode_point,
    direct_sum,
    fork,
    join,
    kronecker,
    product,
    relation_point,
    swap,
    unvec,
    vec,
)
from ..relcore import (
    Relation,
    bottom,
    identity,
    left_residual,
    point,
    right_residual,
    syq,
    top,
    vector,
)
from .lexer import Source, Token, TokenStream, tokenize

Span = tuple[int, int]


@dataclass(frozen=True)
class Name:
    ident: str
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Label:
    text: str
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple[Term, ...]
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Unary:
    op: str  # "~" or "^"
    arg: Term
    span: Span = field(default=(0, 0), compare=False, repr=False)


@dataclass(frozen=True)
class Binary:
    op: str
    left: Term
    right: Term
    span: Span = field(default=(0, 0), compare=False, repr=False)


Term = Name | Label | Call | Unary | Binary

# operator -> (precedence, associativity)
BINARY = {"|": (1, "left"), "&": (2, "left"), "\\": (3, "none"), "/": (3, "none"), "*": (4, "left")}
COMPLEMENT_PREC = 5
CONVERSE_PREC = 6
ATOM_PREC = 7

_WORD = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
_OPS = ("|", "&", "\\", "/", "*", "~", "^", "(", ")", ",")


# parsing


class _Parser:
    def __init__(self, text: str):
        self.src = Source(text)
        self.ts = TokenStream(self.src, tokenize(self.src, _WORD, _OPS))

    def parse(self) -> Term:
        t = self.expr(1)
        if self.ts.peek.kind != "end":
            raise self.ts.fail("unexpected input after the expression")
        return t

    def _binop(self) -> Token | None:
        tok = self.ts.peek
        return tok if tok.kind == "op" and tok.text in BINARY else None

    def expr(self, min_prec: int) -> Term:
        lhs = self.unary()
        while (tok := self._binop()) and BINARY[tok.text][0] >= min_prec:
            prec, assoc_ = BINARY[tok.text]
            self.ts.next()
            rhs = self.expr(prec + 1)
            lhs = Binary(tok.text, lhs, rhs, (lhs.span[0], rhs.span[1]))
            nxt = self._binop()
            if assoc_ == "none" and nxt and BINARY[nxt.text][0] == prec:
                raise self.ts.fail("residuals do not chain; add parentheses", nxt)
        return lhs

    def unary(self) -> Term:
        if tok := self.ts.accept("~"):
            arg = self.unary()
            return Unary("~", arg, (tok.start, arg.span[1]))
        t = self.atom()
        while tok := self.ts.accept("^"):
            t = Unary("^", t, (t.span[0], tok.end))
        return t

    def atom(self) -> Term:
        tok = self.ts.peek
        if tok.kind == "string":
            self.ts.next()
            return Label(tok.text, (tok.start, tok.end))
        if tok.kind == "name":
            self.ts.next()
            if not self.ts.accept("("):
                return Name(tok.text, (tok.start, tok.end))
            args: list[Term] = []
            if not self.ts.at(")"):
                args.append(self.expr(1))
                while self.ts.accept(","):
                    args.append(self.expr(1))
            close = self.ts.expect(")")
            return Call(tok.text, tuple(args), (tok.start, close.end))
        if self.ts.accept("("):
            t = self.expr(1)
            self.ts.expect(")")
            return t
        raise self.ts.fail("expected a name, a string or '('")


def parse(text: str) -> Term:
    return _Parser(text).parse()


# printing


def _prec(t: Term) -> int:
    if isinstance(t, Binary):
        return BINARY[t.op][0]
    if isinstance(t, Unary):
        return COMPLEMENT_PREC if t.op == "~" else CONVERSE_PREC
    return ATOM_PREC


def to_text(t: Term) -> str:
    """Canonical text; ``parse(to_text(t)) == t``."""
    if isinstance(t, Name):
        return t.ident
    if isinstance(t, Label):
        return json.dumps(t.text)
    if isinstance(t, Call):
        return f"{t.fn}({', '.join(to_text(a) for a in t.args)})"
    if isinstance(t, Unary):
        need = COMPLEMENT_PREC if t.op == "~" else CONVERSE_PREC
        inner = _wrap(t.arg, _prec(t.arg) < need)
        return f"~{inner}" if t.op == "~" else f"{inner}^"
    prec, assoc_ = BINARY[t.op]
    left = _wrap(t.left, _prec(t.left) < prec or (_prec(t.left) == prec and assoc_ == "none"))
    right = _wrap(t.right, _prec(t.right) <= prec)
    return f"{left} {t.op} {right}"


def _wrap(t: Term, parens: bool) -> str:
    s = to_text(t)
    return f"({s})" if parens else s


# types


@dataclass(frozen=True)
class RelType:
    src: Universe
    tgt: Universe

    def __str__(self):
        return f"{self.src.name} -> {self.tgt.name}"


Kind = Universe | RelType | str
Env = dict[str, Universe | Relation]


@dataclass(frozen=True)
class _Fn:
    params: str  # one letter per argument: U universe, R relation, L label; trailing '*' repeats the last
    typer: Callable
    impl: Callable


class _Checker:
    def __init__(self, src: Source | None, env: Env):
        self.src = src
        self.env = env

    def fail(self, cls, message: str, t: Term):
        if self.src is None:
            return cls(message)
        return self.src.error(cls, message, t.span[0])

    def kind(self, t: Term) -> Kind:
        if isinstance(t, Name):
            v = self.env.get(t.ident)
            if v is None:
                if t.ident == "unit":
                    return UNIT
                raise self.fail(UnboundIdentifier, f"unbound identifier {t.ident!r}", t)
            return RelType(v.src, v.tgt) if isinstance(v, Relation) else v
        if isinstance(t, Label):
            return t.text
        if isinstance(t, Unary):
            a = self.relation(t.arg)
            return RelType(a.tgt, a.src) if t.op == "^" else a
        if isinstance(t, Binary):
            return self.binary(t)
        return self.call(t)

    def relation(self, t: Term) -> RelType:
        k = self.kind(t)
        if not isinstance(k, RelType):
            raise self.fail(TermTypeError, f"expected a relation, got {_describe(k)}", t)
        return k

    def universe(self, t: Term) -> Universe:
        k = self.kind(t)
        if not isinstance(k, Universe):
            raise self.fail(TermTypeError, f"expected a universe, got {_describe(k)}", t)
        return k

    def binary(self, t: Binary) -> RelType:
        a, b = self.relation(t.left), self.relation(t.right)
        if t.op == "*":
            if a.tgt != b.src:
                raise self.fail(
                    TermTypeError, f"cannot compose {a} with {b}: {a.tgt.name} is not {b.src.name}", t
                )
            return RelType(a.src, b.tgt)
        if t.op in "|&":
            if a != b:
                raise self.fail(TermTypeError, f"'{t.op}' needs equal types, got {a} and {b}", t)
            return a
        if t.op == "\\":
            if a.src != b.src:
                raise self.fail(
                    TermTypeError, f"A \\ C needs a common source, got {a.src.name} and {b.src.name}", t
                )
            return RelType(a.tgt, b.tgt)
        if a.tgt != b.tgt:
            raise self.fail(TermTypeError, f"C / B needs a common target, got {a.tgt.name} and {b.tgt.name}", t)
        return RelType(a.src, b.src)

    def call(self, t: Call) -> Kind:
        fn = FUNCTIONS.get(t.fn)
        if fn is None:
            raise self.fail(UnboundIdentifier, f"unknown function {t.fn!r}", t)
        params = _expand(fn.params, len(t.args))
        if params is None:
            raise self.fail(TermTypeError, f"{t.fn} takes {_arity(fn.params)} arguments, got {len(t.args)}", t)
        kinds = []
        for p, a in zip(params, t.args):
            if p == "U":
                kinds.append(self.universe(a))
            elif p == "R":
                kinds.append(self.relation(a))
            else:
                k = self.kind(a)
                if not isinstance(k, str):
                    raise self.fail(TermTypeError, f"expected a quoted label, got {_describe(k)}", a)
                kinds.append(k)
        try:
            return fn.typer(*kinds)
        except _Mismatch as exc:
            bad = t.args[exc.arg] if exc.arg is not None else t
            raise self.fail(TermTypeError, f"{t.fn}: {exc}", bad) from None


class _Mismatch(Exception):
    def __init__(self, message: str, arg: int | None = None):
        super().__init__(message)
        self.arg = arg


def _describe(k: Kind) -> str:
    if isinstance(k, RelType):
        return f"a relation {k}"
    if isinstance(k, Universe):
        return f"the universe {k.name}"
    return f"the label {json.dumps(k)}"


def _expand(params: str, n: int) -> str | None:
    if params.endswith("*"):
        base = params[:-1]
        if n < len(base):
            return None
        return base + base[-1] * (n - len(base))
    return params if n == len(params) else None


def _arity(params: str) -> str:
    return f"at least {len(params) - 1}" if params.endswith("*") else str(len(params))


def _power(u: Universe, arg: int = 0) -> Power:
    if not isinstance(u, Power):
        raise _Mismatch(f"expected a powerset universe, got {u.name}", arg)
    return u


def _pair(u: Universe, arg: int = 0) -> Pair:
    if not isinstance(u, Pair):
        raise _Mismatch(f"expected a relation out of a pair universe, got {u.name}", arg)
    return u


def _same(a: Universe, b: Universe, what: str, arg: int = 1) -> None:
    if a != b:
        raise _Mismatch(f"{what} differ: {a.name} versus {b.name}", arg)


def _unit_target(r: RelType, arg: int = 0) -> None:
    if r.tgt != UNIT:
        raise _Mismatch(f"expected a vector into unit, got {r}", arg)


def _top_type(*us: Universe) -> RelType:
    return RelType(us[0], us[-1])


def _t_syq(a, b):
    _same(a.src, b.src, "sources")
    return RelType(a.tgt, b.tgt)


def _t_fork(c, d):
    _same(c.src, d.src, "sources")
    return RelType(c.src, Pair(c.tgt, d.tgt))


def _t_join(e, f):
    _same(e.tgt, f.tgt, "targets")
    return RelType(Pair(e.src, f.src), e.tgt)


def _t_unvec(v):
    _unit_target(v)
    p = _pair(v.src)
    return RelType(p.left, p.right)


def _t_decode(v):
    _unit_target(v)
    p = _pair(_power(v.src).base)
    return RelType(p.left, p.right)


def _t_lub(u, r):
    _same(Power(u), r.src, "powerset and relation source")
    return RelType(Power(u), r.tgt)


def _t_lubR(u, r):
    _same(Power(u), r.tgt, "powerset and relation target")
    return r


def _t_point(u, *labels):
    for i, lab in enumerate(labels, start=1):
        if lab not in u:
            raise _Mismatch(f"{json.dumps(lab)} is not an element of {u.name}", i)
    return RelType(u, UNIT)


def _lifted(u):
    return lifted(u.base)


FUNCTIONS: dict[str, _Fn] = {
    # universes
    "pow": _Fn("U", lambda u: Power(u), lambda u: Power(u)),
    "pair": _Fn("UU", lambda a, b: Pair(a, b), lambda a, b: Pair(a, b)),
    "sum": _Fn("UU", lambda a, b: Sum(a, b), lambda a, b: Sum(a, b)),
    # constants
    "I": _Fn("U", lambda u: RelType(u, u), identity),
    "TOP": _Fn("UU*", _top_type, lambda *us: top(us[0], us[-1])),
    "BOT": _Fn("UU*", _top_type, lambda *us: bottom(us[0], us[-1])),
    "point": _Fn("UL", _t_point, point),
    "vector": _Fn("UL*", _t_point, lambda u, *labs: vector(u, labs)),
    # base algebra
    "syq": _Fn("RR", _t_syq, syq),
    # powersets
    "eps": _Fn("U", lambda u: RelType(u, Power(u)), lambda u: membership(u).epsilon),
    "omega": _Fn("U", lambda u: RelType(Power(u), Power(u)), lambda u: membership(u).omega),
    "sigma": _Fn("U", lambda u: RelType(u, Power(u)), lambda u: membership(u).sigma),
    "atoms": _Fn("U", lambda u: RelType(Power(u), Power(u)), lambda u: atoms(membership(u))),
    "lub": _Fn("UR", _t_lub, lambda u, r: lub(membership(u), r)),
    "glb": _Fn("UR", _t_lub, lambda u, r: glb(membership(u), r)),
    "lubR": _Fn("UR", _t_lubR, lambda u, r: lubR(membership(u), r)),
    "glbR": _Fn("UR", _t_lubR, lambda u, r: glbR(membership(u), r)),
    # images
    "exim": _Fn("R", lambda r: RelType(Power(r.src), Power(r.tgt)), existential_image),
    "imim": _Fn("R", lambda r: RelType(Power(r.tgt), Power(r.src)), inverse_image),
    "zeta": _Fn("R", lambda r: RelType(Power(r.src), Power(r.tgt)), power_relator),
    # products and sums
    "kron": _Fn("RR", lambda a, b: RelType(Pair(a.src, b.src), Pair(a.tgt, b.tgt)), kronecker),
    "fork": _Fn("RR", _t_fork, fork),
    "join": _Fn("RR", _t_join, join),
    "pi": _Fn("UU", lambda a, b: RelType(Pair(a, b), a), lambda a, b: product(a, b).pi),
    "rho": _Fn("UU", lambda a, b: RelType(Pair(a, b), b), lambda a, b: product(a, b).rho),
    "iota": _Fn("UU", lambda a, b: RelType(a, Sum(a, b)), lambda a, b: direct_sum(a, b).iota),
    "kappa": _Fn("UU", lambda a, b: RelType(b, Sum(a, b)), lambda a, b: direct_sum(a, b).kappa),
    "swap": _Fn("UU", lambda a, b: RelType(Pair(a, b), Pair(b, a)), swap),
    "assoc": _Fn(
        "UUU", lambda a, b, c: RelType(Pair(Pair(a, b), c), Pair(a, Pair(b, c))), assoc
    ),
    "vec": _Fn("R", lambda r: RelType(Pair(r.src, r.tgt), UNIT), vec),
    "unvec": _Fn("R", _t_unvec, unvec),
    "relpoint": _Fn("R", lambda r: RelType(Power(Pair(r.src, r.tgt)), UNIT), relation_point),
    "decode": _Fn("R", _t_decode, decode_point),
    # lifted Boolean algebra, over a powerset universe
    "N": _Fn("U", lambda u: RelType(_power(u), u), lambda u: _lifted(u).N),
    "meet": _Fn("U", lambda u: RelType(Pair(_power(u), u), u), lambda u: _lifted(u).meet),
    "joinop": _Fn("U", lambda u: RelType(Pair(_power(u), u), u), lambda u: _lifted(u).join),
}


def check(t: Term, env: Env, text: str | None = None) -> Kind:
    """Type of ``t`` under ``env``; raises TermTypeError or UnboundIdentifier."""
    return _Checker(Source(text) if text is not None else None, env).kind(t)


def _eval(t: Term, env: Env):
    if isinstance(t, Name):
        return env.get(t.ident, UNIT if t.ident == "unit" else None)
    if isinstance(t, Label):
        return t.text
    if isinstance(t, Unary):
        a = _eval(t.arg, env)
        return a.T if t.op == "^" else ~a
    if isinstance(t, Binary):
        a, b = _eval(t.left, env), _eval(t.right, env)
        if t.op == "*":
            return a @ b
        if t.op == "|":
            return a | b
        if t.op == "&":
            return a & b
        if t.op == "\\":
            return right_residual(a, b)
        return left_residual(a, b)
    return FUNCTIONS[t.fn].impl(*(_eval(a, env) for a in t.args))


def evaluate(t: Term, env: Env, text: str | None = None):
    """Type-check the whole term, then evaluate it."""
    check(t, env, text)
    return _eval(t, env)


def eval_text(text: str, env: Env):
    return evaluate(parse(text), env, text)
