"""Plain-text rendering of relations."""

from __future__ import annotations

from ..finset import Pair
from ..relcore import Relation, is_mapping


def render_matrix(r: Relation, dense: bool = False) -> str:
    """Labeled 0/1 grid; absent pairs print as ``.`` unless ``dense``."""
    off = "0" if dense else "."
    rows, cols = r.src.labels, r.tgt.labels
    lw = max((len(x) for x in rows), default=0)
    widths = [max(len(c), 1) for c in cols]
    header = " " * lw + "".join(" " + c.rjust(w) for c, w in zip(cols, widths))
    lines = [header.rstrip()]
    for i, x in enumerate(rows):
        cells = ("1" if r.bits[i, j] else off for j in range(len(cols)))
        lines.append(x.ljust(lw) + "".join(" " + c.rjust(w) for c, w in zip(cells, widths)))
    return "\n".join(lines) + "\n"


def render_sets(r: Relation) -> str:
    """Mappings out of a pair universe become a function table; anything else lists row sets."""
    if isinstance(r.src, Pair) and is_mapping(r) and r.src.size:
        return _function_table(r)
    rows = r.to_sets()
    lw = max((len(x) for x in rows), default=0)
    return "".join(f"{x.ljust(lw)} : {{{', '.join(ys)}}}\n" for x, ys in rows.items())


def _function_table(r: Relation) -> str:
    left, right = r.src.left, r.src.right
    result = r.bits.argmax(axis=1)
    cells = [[r.tgt.labels[result[r.src.join(i, j)]] for j in range(right.size)] for i in range(left.size)]
    lw = max((len(x) for x in left.labels), default=0)
    widths = [max([len(c)] + [len(row[j]) for row in cells]) for j, c in enumerate(right.labels)]
    lines = [(" " * lw + "".join(" " + c.rjust(w) for c, w in zip(right.labels, widths))).rstrip()]
    for x, row in zip(left.labels, cells):
        lines.append(x.ljust(lw) + "".join(" " + c.rjust(w) for c, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def render(r: Relation, style: str = "matrix", dense: bool = False) -> str:
    if style == "sets":
        return render_sets(r)
    if style == "matrix":
        return render_matrix(r, dense)
    raise ValueError(f"unknown style {style!r}")
