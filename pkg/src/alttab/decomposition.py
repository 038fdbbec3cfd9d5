"""Recursive structure of alternative tableaux.

Every tableau splits uniquely into *packed* components (length-n tableaux
with n-1 arrows), one per free row or column, over a partition of its label
set; ``merge_all`` reassembles them.  ``cut``/``block`` remove or insert an
extremal row/column, and ``divide`` groups the components into a rows-only
part and a columns-only part.
"""

from __future__ import annotations

from typing import Iterable, Literal

from .core import LEFT, UP, AltTableau, Arrow, free_stats, validate_alt
from .errors import DomainError, ValidationError

ROW_PACKED = "row"
COL_PACKED = "col"
NOT_PACKED = "none"

Axis = Literal["row", "col"]


def packed_class(t: AltTableau) -> str:
    """Classify as ROW_PACKED (one free row, no free column), COL_PACKED, or NOT_PACKED."""
    stats = free_stats(t)
    if (stats.frow, stats.fcol) == (1, 0):
        return ROW_PACKED
    if (stats.frow, stats.fcol) == (0, 1):
        if len(t) > 1:
            # Consistency: the top-left cell of a column-packed tableau holds a left arrow.
            top, left = min(t.rows), max(t.columns)
            assert t.arrow_map().get((top, left)) == LEFT
        return COL_PACKED
    return NOT_PACKED


def cut(t: AltTableau, axis: Axis) -> AltTableau:
    """Delete the topmost row (axis="row") or leftmost column (axis="col").

    The topmost row is the smallest row label, the leftmost column the
    largest column label; arrows on the deleted line go with it.  Row cuts
    need every column nonempty (and dually), otherwise the border would not
    shrink consistently.
    """
    rows, cols = t.rows, t.columns
    if axis == "row":
        if not rows:
            raise DomainError("nothing-to-cut", "tableau has no row")
        gone = min(rows)
        if any(j < gone for j in cols):
            raise DomainError("empty-line-obstruction", "an empty column blocks the row cut")
    elif axis == "col":
        if not cols:
            raise DomainError("nothing-to-cut", "tableau has no column")
        gone = max(cols)
        if any(i > gone for i in rows):
            raise DomainError("empty-line-obstruction", "an empty row blocks the column cut")
    else:
        raise DomainError("bad-axis", f"unknown axis {axis!r}")
    keep = tuple(l for l in t.labels if l != gone)
    word = "".join(c for l, c in zip(t.labels, t.word) if l != gone)
    arrows = tuple(a for a in t.arrows if gone not in (a.row, a.col))
    return AltTableau(keep, word, arrows)


def block(t: AltTableau, axis: Axis, label: int) -> AltTableau:
    """Inverse of :func:`cut`: insert a new extremal line and pin the free lines.

    axis="col" adds a full-width top row ``label`` (below every existing
    label) with an up arrow over each free column; axis="row" adds a
    full-height leftmost column (above every label) with a left arrow on each
    free row.  Either way ``cut`` on the dual axis restores ``t``.
    """
    stats = free_stats(t)
    if axis == "col":
        if label < 0 or (t.labels and label >= t.labels[0]):
            raise DomainError("label-not-extremal", f"{label} is not below all labels")
        arrows = t.arrows + tuple(Arrow(label, j, UP) for j in stats.free_cols)
        return AltTableau((label,) + t.labels, "D" + t.word, arrows)
    if axis == "row":
        if label < 0 or (t.labels and label <= t.labels[-1]):
            raise DomainError("label-not-extremal", f"{label} is not above all labels")
        arrows = t.arrows + tuple(Arrow(i, label, LEFT) for i in stats.free_rows)
        return AltTableau(t.labels + (label,), t.word + "E", arrows)
    raise DomainError("bad-axis", f"unknown axis {axis!r}")


def block_standard(t: AltTableau, axis: Axis) -> AltTableau:
    """:func:`block` with labels handled automatically: the result carries
    the standard labels 1..n+1 and the new line takes the extremal one."""
    from .core import relabel, standardize

    s = standardize(t)
    if axis == "col":
        return block(relabel(s, range(2, len(s) + 2)), "col", 1)
    return block(s, "row", len(s) + 1)


def closure(t: AltTableau, k: int) -> frozenset[int]:
    """Smallest label set containing free label ``k`` with arrow endpoints paired.

    Arrows tie their row and column labels together, so this is the connected
    component of ``k`` in the graph with one edge per arrow-filled cell.
    """
    stats = free_stats(t)
    if k not in stats.free_rows and k not in stats.free_cols:
        raise DomainError("not-free", f"label {k} is not a free row or column")
    adjacent: dict[int, list[int]] = {}
    for a in t.arrows:
        adjacent.setdefault(a.row, []).append(a.col)
        adjacent.setdefault(a.col, []).append(a.row)
    seen = {k}
    frontier = [k]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adjacent.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(seen)


def restrict(t: AltTableau, subset: Iterable[int]) -> AltTableau:
    """Sub-tableau on a label subset, keeping arrows with both endpoints inside.

    Unions of closures always restrict cleanly; for arbitrary subsets the
    result is re-validated before being returned.
    """
    wanted = frozenset(subset)
    extra = wanted - set(t.labels)
    if extra:
        raise DomainError("not-a-subset", f"labels {sorted(extra)} not in tableau")
    labels = tuple(l for l in t.labels if l in wanted)
    word = "".join(c for l, c in zip(t.labels, t.word) if l in wanted)
    arrows = [(a.row, a.col, a.kind) for a in t.arrows if a.row in wanted and a.col in wanted]
    try:
        return validate_alt(labels, word, arrows)
    except ValidationError as exc:
        raise DomainError("invalid-restriction", str(exc))


def split(t: AltTableau) -> tuple[AltTableau, ...]:
    """Packed components, one per free label, ordered by smallest label."""
    stats = free_stats(t)
    parts = [restrict(t, closure(t, k)) for k in sorted(stats.free_rows | stats.free_cols)]
    return tuple(sorted(parts, key=lambda p: p.labels[0]))


def merge(t: AltTableau, u: AltTableau) -> AltTableau:
    """Interleave two tableaux labeled on disjoint sets; mixed cells stay empty."""
    overlap = set(t.labels) & set(u.labels)
    if overlap:
        raise DomainError("label-collision", f"labels {sorted(overlap)} appear on both sides")
    kind = dict(zip(t.labels, t.word)) | dict(zip(u.labels, u.word))
    labels = tuple(sorted(kind))
    word = "".join(kind[l] for l in labels)
    return AltTableau(labels, word, t.arrows + u.arrows)


def merge_all(parts: Iterable[AltTableau]) -> AltTableau:
    """Merge a collection with pairwise disjoint labels; order is irrelevant."""
    result = AltTableau((), "")
    for part in parts:
        result = merge(result, part)
    return result


def divide(t: AltTableau) -> tuple[AltTableau, AltTableau]:
    """Split into (rows part, columns part): the unions of the free-row and
    free-column components.  The first has no free columns, the second no
    free rows, and merging them restores ``t``."""
    stats = free_stats(t)
    row_side: set[int] = set()
    for k in stats.free_rows:
        row_side |= closure(t, k)
    col_side: set[int] = set()
    for k in stats.free_cols:
        col_side |= closure(t, k)
    return restrict(t, row_side), restrict(t, col_side)


def format_split(parts: Iterable[AltTableau]) -> str:
    """One component per line: ``<label-set> :: <compact>``, ascending minimum label."""
    from .core import render_tableau

    lines = []
    for p in sorted(parts, key=lambda p: p.labels[0]):
        labelset = "{" + ",".join(str(l) for l in p.labels) + "}"
        lines.append(f"{labelset} :: {render_tableau(p)}")
    return "\n".join(lines)
