"""Published tables and figure labels, plus renderers for the table commands."""

from __future__ import annotations

import csv
import io
import json

from .words import df_pair, fib_words_up_to

# (k, printed length, printed word); row F_10 is printed as a 52-symbol prefix.
TABLE1_ROWS = (
    (1, 1, "1"),
    (2, 1, "0"),
    (3, 2, "01"),
    (4, 3, "010"),
    (5, 5, "01001"),
    (6, 8, "01001010"),
    (7, 13, "0100101001001"),
    (8, 21, "010010100100101001010"),
    (9, 34, "0100101001001010010100100101001001"),
    (10, 55, "0100101001001010010100100101001001010010100100101001"),
)

# Printed density cells in reading order (row by row, left to right).
TABLE2_CELLS = {
    (1, 1): 0.3819, (1, 2): 0.3819, (1, 3): 0.3819, (7, 4): 0.3819,
    (1, 4): 0.3819, (1, 5): 0.3819, (1, 6): 0.3819, (7, 5): 0.3819,
    (2, 3): 0.3819, (2, 4): 0.1909, (2, 5): 0.3819, (7, 6): 0.3819,
    (2, 6): 0.1909, (2, 7): 0.3819, (2, 8): 0.1909, (8, 3): 0.3819,
    (3, 2): 0.3819, (3, 3): 0.1273, (3, 4): 0.3819, (8, 4): 0.0954,
    (3, 5): 0.3819, (3, 6): 0.1273, (3, 7): 0.3819, (8, 5): 0.3819,
    (4, 1): 0.3819, (4, 2): 0.1909, (4, 3): 0.3819, (8, 6): 0.1909,
    (4, 4): 0.0954, (4, 5): 0.3819, (4, 6): 0.1909, (8, 7): 0.3819,
    (5, 3): 0.3819, (5, 4): 0.3819, (5, 5): 0.0764, (8, 8): 0.0477,
    (5, 6): 0.3819, (5, 7): 0.3819, (5, 8): 0.3819, (9, 2): 0.3819,
    (6, 2): 0.1909, (6, 3): 0.1273, (6, 4): 0.1909, (9, 3): 0.1273,
    (6, 5): 0.3819, (6, 6): 0.0636, (6, 7): 0.3819, (9, 4): 0.3819,
    (7, 1): 0.3819, (7, 2): 0.3819, (7, 3): 0.3819, (10, 7): 0.3819,
    (9, 5): 0.3819, (9, 6): 0.1273, (9, 7): 0.3819, (10, 8): 0.1909,
}

# Node labels printed along the leftmost spine of the F_10 decomposition figure.
FIGURE1_LABELS = (
    (10, "0100101001001"),
    (9, "01001010010"),
    (8, "01001010"),
    (7, "0100101"),
    (6, "010010"),
    (5, "01001"),
    (4, "010"),
    (3, "01"),
    (2, "0"),
    (1, "1"),
)

FORMATS = ("text", "json", "csv", "markdown")


def table1_rows(n: int = 10) -> list[tuple[str, int, str]]:
    return [(f"F_{w.index}", len(w), w.symbols) for w in fib_words_up_to(n)] if n >= 1 else []


def table2_rows(a_max: int = 10, paper_layout: bool = False) -> list[tuple[int, int, str]]:
    if paper_layout:
        cells = list(TABLE2_CELLS)
    else:
        cells = [(n, m) for n in range(1, a_max + 1) for m in range(1, a_max + 1)]
    return [(n, m, df_pair(n, m).display()) for n, m in cells]


def render(header: list[str], rows: list[tuple], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        lines += ["| " + " | ".join(str(c) for c in r) + " |" for r in rows]
        return "\n".join(lines) + "\n"
    if fmt == "text":
        cols = list(zip(header, *rows)) if rows else [(h,) for h in header]
        widths = [max(len(str(c)) for c in col) for col in cols]
        out = ["  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip()]
        out += ["  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
