"""Text format for universes, relations and binary operations.

::

    # comments run to the end of the line
    universe X = {a, b, c}
    universe PX = pow(X)          # composite universes: pow, pair, sum, unit

    relation R : X -> PX {
      a: {"{}", "{a,b}"}          # labels that are not plain words are quoted
      b: {}
      c: {"{c}"}
    }

    binop F : X {
      row a: [a, b, c]
      row b: [b, c, a]
      row c: [c, a, b]
    }

Relation blocks list every source element once, in universe order. Binop
rows are the left operand. ``dump(load(text))`` reproduces canonical text
byte for byte.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

import numpy as np

from ..binop import BinOp
from ..errors import NotAMapping, ParseError, RelkitError
from ..finset import UNIT, Atomic, Pair, Power, Sum, Universe
from ..relcore import Relation
from .lexer import Source, Token, TokenStream, tokenize

_WORD = re.compile(r"(?:[^\s{}\[\](),:\"#=-]|-(?!>))+")
_OPS = ("->", "{", "}", "[", "]", "(", ")", ",", ":", "=")
_PLAIN = re.compile(r"[A-Za-z0-9_.'+*<>!?@$%&|~^/\\-]+")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")
_KEYWORDS = ("universe", "relation", "binop", "row", "unit", "pow", "pair", "sum")


@dataclass
class Document:
    universes: dict[str, Universe] = field(default_factory=dict)
    relations: dict[str, Relation] = field(default_factory=dict)
    binops: dict[str, BinOp] = field(default_factory=dict)

    def env(self) -> dict:
        """Names usable in terms: universes, relations and operation tables."""
        out: dict = dict(self.universes)
        out.update(self.relations)
        out.update({k: op.table for k, op in self.binops.items()})
        return out

    def add_relation(self, name: str, r: Relation) -> None:
        self._declare(r.src)
        self._declare(r.tgt)
        self.relations[name] = r

    def add_binop(self, name: str, op: BinOp) -> None:
        self._declare(op.carrier)
        self.binops[name] = op

    def _declare(self, u: Universe) -> None:
        for a in _atomics(u):
            known = self.universes.get(a.name)
            if known is None:
                self.universes[a.name] = a
            elif known != a:
                raise RelkitError(f"two different universes are named {a.name}")


def _atomics(u: Universe):
    if isinstance(u, Atomic):
        yield u
    elif isinstance(u, (Pair, Sum)):
        yield from _atomics(u.left)
        yield from _atomics(u.right)
    elif isinstance(u, Power):
        yield from _atomics(u.base)


# reading


class _Reader:
    def __init__(self, text: str):
        self.src = Source(text)
        self.ts = TokenStream(self.src, tokenize(self.src, _WORD, _OPS))
        self.doc = Document()
        self.names: set[str] = set()

    def error(self, message: str, tok: Token) -> ParseError:
        return self.src.error(ParseError, message, tok.start)

    def read(self) -> Document:
        while self.ts.peek.kind != "end":
            tok = self.ts.expect_kind("name", what="'universe', 'relation' or 'binop'")
            if tok.text == "universe":
                self.universe()
            elif tok.text == "relation":
                self.relation()
            elif tok.text == "binop":
                self.binop()
            else:
                raise self.error(f"expected 'universe', 'relation' or 'binop', found {tok.text!r}", tok)
        return self.doc

    def fresh_name(self) -> str:
        tok = self.ts.expect_kind("name", what="a name")
        if not _NAME.fullmatch(tok.text) or tok.text in _KEYWORDS:
            raise self.error(f"{tok.text!r} cannot be used as a name", tok)
        if tok.text in self.names:
            raise self.error(f"{tok.text!r} is declared twice", tok)
        self.names.add(tok.text)
        return tok.text

    def label(self) -> tuple[str, Token]:
        tok = self.ts.expect_kind("name", "string", what="an element label")
        return tok.text, tok

    def labels(self, close: str) -> list[tuple[str, Token]]:
        out = []
        if not self.ts.at(close):
            out.append(self.label())
            while self.ts.accept(","):
                out.append(self.label())
        self.ts.expect(close)
        return out

    def universe(self) -> None:
        name = self.fresh_name()
        self.ts.expect("=")
        if self.ts.accept("{"):
            labs = self.labels("}")
            seen = set()
            for lab, tok in labs:
                if lab in seen:
                    raise self.error(f"label {lab!r} occurs twice in {name}", tok)
                seen.add(lab)
            try:
                self.doc.universes[name] = Atomic(name, tuple(lab for lab, _ in labs))
            except RelkitError as exc:
                raise self.error(str(exc), labs[0][1] if labs else self.ts.peek) from None
        else:
            self.doc.universes[name] = self.type_expr()

    def type_expr(self) -> Universe:
        tok = self.ts.expect_kind("name", what="a universe")
        if tok.text == "unit":
            return UNIT
        if tok.text in ("pow", "pair", "sum"):
            self.ts.expect("(")
            a = self.type_expr()
            if tok.text == "pow":
                self.ts.expect(")")
                return Power(a)
            self.ts.expect(",")
            b = self.type_expr()
            self.ts.expect(")")
            return Pair(a, b) if tok.text == "pair" else Sum(a, b)
        u = self.doc.universes.get(tok.text)
        if u is None:
            raise self.error(f"unknown universe {tok.text!r}", tok)
        return u

    def element(self, u: Universe) -> int:
        lab, tok = self.label()
        if lab not in u:
            raise self.error(f"{lab!r} is not an element of {u.name}", tok)
        return u.index(lab)

    def relation(self) -> None:
        name = self.fresh_name()
        self.ts.expect(":")
        src = self.type_expr()
        self.ts.expect("->")
        tgt = self.type_expr()
        self.ts.expect("{")
        bits = np.zeros((src.size, tgt.size), dtype=bool)
        for i in range(src.size):
            tok = self.ts.peek
            if self.element(src) != i:
                raise self.error(f"expected the row for {src.labels[i]!r} (rows follow the order of {src.name})", tok)
            self.ts.expect(":")
            self.ts.expect("{")
            for lab, ltok in self.labels("}"):
                if lab not in tgt:
                    raise self.error(f"{lab!r} is not an element of {tgt.name}", ltok)
                bits[i, tgt.index(lab)] = True
        self.ts.expect("}")
        self.doc.relations[name] = Relation(src, tgt, bits)

    def binop(self) -> None:
        name = self.fresh_name()
        self.ts.expect(":")
        carrier = self.type_expr()
        head = self.ts.expect("{")
        rows = []
        for i in range(carrier.size):
            kw = self.ts.expect_kind("name", what="'row'")
            if kw.text != "row":
                raise self.error(f"expected 'row', found {kw.text!r}", kw)
            tok = self.ts.peek
            if self.element(carrier) != i:
                raise self.error(f"expected the row for {carrier.labels[i]!r}", tok)
            self.ts.expect(":")
            self.ts.expect("[")
            rows.append([lab for lab, _ in self.labels("]")])
        self.ts.expect("}")
        try:
            self.doc.binops[name] = BinOp.from_cayley(carrier, rows)
        except NotAMapping as exc:
            raise self.error(f"binop {name}: {exc}", head) from None


def load(text: str) -> Document:
    return _Reader(text).read()


def load_file(path: str) -> Document:
    with open(path, encoding="utf-8") as fh:
        return load(fh.read())


# writing


def quote(label: str) -> str:
    if _PLAIN.fullmatch(label) and "->" not in label and label not in _KEYWORDS:
        return label
    return json.dumps(label)


def _type_text(u: Universe) -> str:
    return u.name


def dump(doc: Document) -> str:
    chunks = []
    for name, u in doc.universes.items():
        if isinstance(u, Atomic) and u.name == name:
            chunks.append(f"universe {name} = {{{', '.join(quote(a) for a in u.labels)}}}")
        else:
            chunks.append(f"universe {name} = {_type_text(u)}")
    parts = ["\n".join(chunks)] if chunks else []
    for name, r in doc.relations.items():
        lines = [f"relation {name} : {_type_text(r.src)} -> {_type_text(r.tgt)} {{"]
        for x, ys in r.to_sets().items():
            lines.append(f"  {quote(x)}: {{{', '.join(quote(y) for y in ys)}}}")
        lines.append("}")
        parts.append("\n".join(lines))
    for name, op in doc.binops.items():
        lines = [f"binop {name} : {_type_text(op.carrier)} {{"]
        for x, row in zip(op.carrier.labels, op.rows()):
            lines.append(f"  row {quote(x)}: [{', '.join(quote(z) for z in row)}]")
        lines.append("}")
        parts.append("\n".join(lines))
    return "\n\n".join(parts) + "\n"
