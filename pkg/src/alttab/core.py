"""Alternative and permutation tableaux: types, validation, statistics, text formats.

A tableau lives on a *shape*: a word over ``D`` (row step) and ``E`` (column
step) read along the south-east border from the top-right corner down to the
bottom-left one.  Border steps carry strictly increasing integer labels; the
k-th letter of the word is the step with the k-th smallest label.  The cell
``(i, j)`` exists exactly when ``i`` labels a row, ``j`` labels a column and
``i < j``.  Geometrically rows run top to bottom by increasing label and
columns run left to right by *decreasing* label, so the leftmost column is
the one with the largest label.

An alternative tableau places ``L`` (left) and ``U`` (up) arrows on cells so
that every cell an arrow points toward is empty: a left arrow at ``(i, j)``
empties all ``(i, j')`` with ``j' > j``, an up arrow empties all ``(i', j)``
with ``i' < i``.  A permutation tableau fills every cell with 0 or 1 so that
each column holds a 1 and no 0 has a 1 above it and a 1 to its left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .errors import DomainError, ParseError, ValidationError, Violation

LEFT = "L"
UP = "U"


class Arrow(NamedTuple):
    row: int
    col: int
    kind: str  # LEFT or UP


def _check_labels_word(labels: Sequence[int], word: str) -> list[Violation]:
    bad = []
    if len(labels) != len(word):
        bad.append(Violation("size-mismatch", f"{len(labels)} labels for word of length {len(word)}"))
    if any(l < 0 for l in labels):
        bad.append(Violation("label-order", f"negative label in {labels}"))
    if any(a >= b for a, b in zip(labels, labels[1:])):
        bad.append(Violation("label-order", f"labels not strictly increasing: {labels}"))
    if any(c not in "DE" for c in word):
        bad.append(Violation("bad-step", f"word {word!r} has letters outside D/E"))
    return bad


@dataclass(frozen=True)
class AltTableau:
    """Immutable alternative tableau.

    ``labels`` are strictly increasing; ``word`` is the aligned D/E border
    word; ``arrows`` are kept sorted by cell.  Construction checks the cheap
    structural invariants; the arrow-emptiness rules are checked by
    :func:`validate_alt`, which all parsing paths go through.  Operations in
    this package only build tableaux that already satisfy them.
    """

    labels: tuple[int, ...]
    word: str
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self) -> None:
        bad = _check_labels_word(self.labels, self.word)
        if bad:
            raise ValidationError(bad)
        arrows = tuple(sorted(Arrow(*a) for a in self.arrows))
        object.__setattr__(self, "arrows", arrows)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def kind_of(self) -> dict[int, str]:
        return dict(zip(self.labels, self.word))

    @property
    def rows(self) -> tuple[int, ...]:
        return tuple(l for l, c in zip(self.labels, self.word) if c == "D")

    @property
    def columns(self) -> tuple[int, ...]:
        return tuple(l for l, c in zip(self.labels, self.word) if c == "E")

    def cells(self) -> Iterator[tuple[int, int]]:
        """All existing cells (i, j), row-major by increasing labels."""
        cols = self.columns
        for i in self.rows:
            for j in cols:
                if i < j:
                    yield (i, j)

    def arrow_map(self) -> dict[tuple[int, int], str]:
        return {(a.row, a.col): a.kind for a in self.arrows}

    def is_standard(self) -> bool:
        return self.labels == tuple(range(1, len(self) + 1))


def empty_tableau() -> AltTableau:
    return AltTableau((), "")


def standard_tableau(word: str, arrows: Sequence[tuple[int, int, str]] = ()) -> AltTableau:
    """Convenience constructor with labels 1..n; validates fully."""
    return validate_alt(tuple(range(1, len(word) + 1)), word, arrows)


def validate_alt(
    labels: Sequence[int], word: str, arrows: Sequence[tuple[int, int, str]]
) -> AltTableau:
    """Check candidate data and return the tableau, or raise listing every violation."""
    bad = _check_labels_word(labels, word)
    if bad:
        raise ValidationError(bad)
    rows = {l for l, c in zip(labels, word) if c == "D"}
    cols = {l for l, c in zip(labels, word) if c == "E"}
    seen: dict[tuple[int, int], str] = {}
    for i, j, kind in arrows:
        if kind not in (LEFT, UP):
            bad.append(Violation("bad-arrow-kind", f"{kind!r} at ({i},{j})"))
            continue
        if i not in rows or j not in cols or i >= j:
            bad.append(Violation("arrow-off-shape", f"{kind} arrow on nonexistent cell ({i},{j})"))
            continue
        if (i, j) in seen:
            bad.append(Violation("duplicate-cell", f"two arrows on cell ({i},{j})"))
            continue
        seen[(i, j)] = kind
    # Emptiness: cells pointed at by an arrow must not be occupied.
    for (i, j), kind in sorted(seen.items()):
        if kind == LEFT:
            hit = [(i, j2) for j2 in cols if j2 > j and (i, j2) in seen]
        else:
            hit = [(i2, j) for i2 in rows if i2 < i and (i2, j) in seen]
        for cell in hit:
            bad.append(
                Violation(
                    "pointed-cell-occupied",
                    f"{kind} arrow at ({i},{j}) points at occupied cell {cell}",
                )
            )
    if bad:
        raise ValidationError(bad)
    return AltTableau(tuple(labels), word, tuple(Arrow(i, j, k) for i, j, k in arrows))


@dataclass(frozen=True)
class FreeStats:
    """Free rows/columns/cells of an alternative tableau."""

    free_rows: frozenset[int]
    free_cols: frozenset[int]
    free_cells: frozenset[tuple[int, int]]

    @property
    def frow(self) -> int:
        return len(self.free_rows)

    @property
    def fcol(self) -> int:
        return len(self.free_cols)

    @property
    def fcell(self) -> int:
        return len(self.free_cells)


def free_stats(t: AltTableau) -> FreeStats:
    """Rows with no left arrow, columns with no up arrow, and cells no arrow points at."""
    left_in_row: dict[int, int] = {}
    up_in_col: dict[int, int] = {}
    for a in t.arrows:
        if a.kind == LEFT:
            left_in_row[a.row] = a.col
        else:
            up_in_col[a.col] = a.row
    rows, cols = t.rows, t.columns
    free_rows = frozenset(i for i in rows if i not in left_in_row)
    free_cols = frozenset(j for j in cols if j not in up_in_col)
    occupied = t.arrow_map()
    free_cells = set()
    for i, j in t.cells():
        if (i, j) in occupied:
            continue
        # Pointed at by the row's left arrow when that arrow sits further right.
        if i in left_in_row and left_in_row[i] < j:
            continue
        # Pointed at by the column's up arrow when that arrow sits lower down.
        if j in up_in_col and up_in_col[j] > i:
            continue
        free_cells.add((i, j))
    return FreeStats(free_rows, free_cols, frozenset(free_cells))


def transpose(t: AltTableau) -> AltTableau:
    """Reflect across the main diagonal: an involution swapping rows and columns.

    The label set is kept and the order-reversing permutation is applied
    within it; arrows move to the mirrored cell with left and up swapped.
    """
    n = len(t)
    rev = {t.labels[k]: t.labels[n - 1 - k] for k in range(n)}
    word = "".join("D" if c == "E" else "E" for c in reversed(t.word))
    arrows = tuple(
        Arrow(rev[a.col], rev[a.row], UP if a.kind == LEFT else LEFT) for a in t.arrows
    )
    return AltTableau(t.labels, word, arrows)


def relabel(t: AltTableau, new_labels: Sequence[int]) -> AltTableau:
    """Order-preserving label substitution; shape and arrow positions are kept."""
    if len(new_labels) != len(t):
        raise DomainError("size-mismatch", f"{len(new_labels)} labels for tableau of length {len(t)}")
    new = tuple(new_labels)
    bad = _check_labels_word(new, t.word)
    if bad:
        raise ValidationError(bad)
    sub = dict(zip(t.labels, new))
    arrows = tuple(Arrow(sub[a.row], sub[a.col], a.kind) for a in t.arrows)
    return AltTableau(new, t.word, arrows)


def standardize(t: AltTableau) -> AltTableau:
    return relabel(t, range(1, len(t) + 1))


# ---------------------------------------------------------------------------
# Permutation tableaux


@dataclass(frozen=True)
class PermTableau:
    """Labeled shape with a total 0/1 filling; only the 1-cells are stored."""

    labels: tuple[int, ...]
    word: str
    ones: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        bad = _check_labels_word(self.labels, self.word)
        if bad:
            raise ValidationError(bad)
        object.__setattr__(self, "ones", tuple(sorted(self.ones)))

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def rows(self) -> tuple[int, ...]:
        return tuple(l for l, c in zip(self.labels, self.word) if c == "D")

    @property
    def columns(self) -> tuple[int, ...]:
        return tuple(l for l, c in zip(self.labels, self.word) if c == "E")

    def cells(self) -> Iterator[tuple[int, int]]:
        cols = self.columns
        for i in self.rows:
            for j in cols:
                if i < j:
                    yield (i, j)


def validate_perm_tableau(
    labels: Sequence[int],
    word: str,
    ones: Sequence[tuple[int, int]],
    filling: dict[tuple[int, int], int] | None = None,
) -> PermTableau:
    """Validate candidate permutation-tableau data, reporting all violations.

    ``ones`` lists the 1-cells (0s implicit).  When an explicit ``filling``
    mapping is given instead, it must cover every cell of the shape.
    """
    bad = _check_labels_word(labels, word)
    if bad:
        raise ValidationError(bad)
    rows = {l for l, c in zip(labels, word) if c == "D"}
    cols = [l for l, c in zip(labels, word) if c == "E"]
    cells = {(i, j) for i in rows for j in cols if i < j}
    if filling is not None:
        missing = cells - set(filling)
        for cell in sorted(missing):
            bad.append(Violation("non-total-filling", f"no value for cell {cell}"))
        extra = set(filling) - cells
        for cell in sorted(extra):
            bad.append(Violation("cell-off-shape", f"value on nonexistent cell {cell}"))
        if bad:
            raise ValidationError(bad)
        ones = tuple(c for c in sorted(filling) if filling[c] == 1)
    one_set = set(ones)
    for cell in sorted(one_set - cells):
        bad.append(Violation("cell-off-shape", f"1 on nonexistent cell {cell}"))
    one_set &= cells
    for j in cols:
        col_cells = [(i, j) for i in rows if i < j]
        if not col_cells or not any(c in one_set for c in col_cells):
            bad.append(Violation("empty-column", f"column {j} contains no 1"))
    for i, j in sorted(cells - one_set):
        above = any((i2, j) in one_set for i2 in rows if i2 < i)
        left = any((i, j2) in one_set for j2 in cols if j2 > j)
        if above and left:
            bad.append(
                Violation("zero-with-one-above-and-left", f"cell ({i},{j}) is 0 but blocked")
            )
    if bad:
        raise ValidationError(bad)
    return PermTableau(tuple(labels), word, tuple(sorted(one_set)))


@dataclass(frozen=True)
class PermTableauStats:
    """Unrestricted rows below the top one, columns with a 1 in the top row,
    and cells holding a superfluous 1 (a 1 with another 1 above it)."""

    unrestricted_rows: frozenset[int]
    top_one_cols: frozenset[int]
    superfluous_cells: frozenset[tuple[int, int]]


def perm_tableau_stats(p: PermTableau) -> PermTableauStats:
    rows, cols = p.rows, p.columns
    ones = set(p.ones)
    top = min(p.labels) if p.labels else None
    superfluous = frozenset(
        (i, j) for (i, j) in ones if any((i2, j) in ones for i2 in rows if i2 < i)
    )
    restricted_rows = set()
    for i in rows:
        for j in cols:
            if i < j and (i, j) not in ones:
                if any((i2, j) in ones for i2 in rows if i2 < i):
                    restricted_rows.add(i)
                    break
    unrestricted = frozenset(i for i in rows if i not in restricted_rows and i != top)
    top_one = frozenset(j for j in cols if top is not None and (top, j) in ones)
    return PermTableauStats(unrestricted, top_one, superfluous)


def from_perm_tableau(p: PermTableau) -> AltTableau:
    """Shrink a permutation tableau of length n+1 to an alternative tableau of length n.

    Non-superfluous 1s become up arrows and each row's rightmost restricted 0
    becomes a left arrow; the top row is then removed together with its label.
    """
    if not p.labels:
        raise DomainError("nothing-to-cut", "permutation tableau has no top row")
    top = p.labels[0]
    if p.word[0] != "D":
        raise DomainError("bad-top-row", "smallest label does not label a row")
    rows, cols = p.rows, p.columns
    ones = set(p.ones)
    arrows = []
    for i, j in ones:
        if i == top:
            continue
        if not any((i2, j) in ones for i2 in rows if i2 < i):
            arrows.append(Arrow(i, j, UP))
    for i in rows:
        if i == top:
            continue
        restricted = [
            j
            for j in cols
            if i < j and (i, j) not in ones and any((i2, j) in ones for i2 in rows if i2 < i)
        ]
        if restricted:
            arrows.append(Arrow(i, min(restricted), LEFT))  # smallest label = rightmost cell
    return AltTableau(p.labels[1:], p.word[1:], tuple(arrows))


def to_perm_tableau(t: AltTableau) -> PermTableau:
    """Grow an alternative tableau into a permutation tableau one longer.

    A new top row (labeled one below the current minimum) gets a 1 over every
    free column; up arrows and free cells become 1s, everything else 0.
    """
    new = t.labels[0] - 1 if t.labels else 0
    if new < 0:
        raise DomainError("label-order", "no nonnegative label available for the new top row")
    stats = free_stats(t)
    ones = [(new, j) for j in stats.free_cols]
    ones.extend((a.row, a.col) for a in t.arrows if a.kind == UP)
    ones.extend(stats.free_cells)
    return PermTableau((new,) + t.labels, "D" + t.word, tuple(sorted(ones)))


# ---------------------------------------------------------------------------
# Text formats
#
# Compact:    [labels=l1,...,ln|]<word>|<arrow>;<arrow>;...
#             with arrow L<i>,<j> or U<i>,<j>; standard labels implied when
#             the prefix is absent; the arrow list may be empty.
# Record:     one key=value per line: labels, word, arrows (list of [i,j,K]),
#             statistics (emitted, never parsed).
# Perm compact: [labels=...|]<word>|<i>,<j>;...   (cells filled with 1)

_ARROW_RE = re.compile(r"([LU])(\d+),(\d+)$")
_CELL_RE = re.compile(r"(\d+),(\d+)$")


def _parse_labels_prefix(text: str) -> tuple[tuple[int, ...] | None, str, int]:
    """Split an optional ``labels=...|`` prefix; returns (labels, rest, offset)."""
    if not text.startswith("labels="):
        return None, text, 0
    cut = text.find("|")
    if cut < 0:
        raise ParseError("labels prefix missing '|'", len(text))
    body = text[len("labels=") : cut]
    try:
        labels = tuple(int(p) for p in body.split(",")) if body else ()
    except ValueError:
        raise ParseError(f"bad label list {body!r}", len("labels="))
    return labels, text[cut + 1 :], cut + 1


def parse_tableau(text: str) -> AltTableau:
    """Parse the compact or record format into a validated tableau."""
    text = text.strip()
    if not text:
        raise ParseError("empty input", 0)
    if "\n" in text or text.startswith("word="):
        return _parse_record(text)
    labels, rest, offset = _parse_labels_prefix(text)
    if rest.count("|") != 1:
        raise ParseError("expected <word>|<arrows>", offset)
    word, _, arrowstr = rest.partition("|")
    if labels is None:
        labels = tuple(range(1, len(word) + 1))
    arrows = []
    pos = offset + len(word) + 1
    for part in arrowstr.split(";"):
        if not part:
            continue
        m = _ARROW_RE.match(part)
        if not m:
            raise ParseError(f"bad arrow {part!r}", pos)
        arrows.append((int(m.group(2)), int(m.group(3)), m.group(1)))
        pos += len(part) + 1
    return validate_alt(labels, word, arrows)


def _parse_record(text: str) -> AltTableau:
    fields: dict[str, str] = {}
    pos = 0
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped:
            pos += len(line) + 1
            continue
        key, eq, value = stripped.partition("=")
        if not eq:
            raise ParseError(f"expected key=value, got {stripped!r}", pos)
        fields[key.strip()] = value.strip()
        pos += len(line) + 1
    unknown = set(fields) - {"labels", "word", "arrows", "statistics"}
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}", 0)
    if "word" not in fields:
        raise ParseError("record missing 'word'", 0)
    word = fields["word"]
    if "labels" in fields and fields["labels"]:
        labels = tuple(int(p) for p in fields["labels"].split(","))
    else:
        labels = tuple(range(1, len(word) + 1))
    arrows = []
    for part in re.findall(r"\[([^\]]*)\]", fields.get("arrows", "")):
        bits = [b.strip() for b in part.split(",")]
        if len(bits) != 3 or bits[2] not in (LEFT, UP):
            raise ParseError(f"bad arrow entry [{part}]", 0)
        arrows.append((int(bits[0]), int(bits[1]), bits[2]))
    return validate_alt(labels, word, arrows)


def render_tableau(t: AltTableau, style: str = "compact") -> str:
    """Canonical text form; ``style`` is one of compact, record, grid."""
    if style == "compact":
        return _render_compact(t.labels, t.word, [f"{a.kind}{a.row},{a.col}" for a in t.arrows])
    if style == "record":
        stats = free_stats(t)
        lines = [
            "labels=" + ",".join(str(l) for l in t.labels),
            "word=" + t.word,
            "arrows=" + ";".join(f"[{a.row},{a.col},{a.kind}]" for a in t.arrows),
            f"statistics=frow:{stats.frow};fcol:{stats.fcol};fcell:{stats.fcell}",
        ]
        return "\n".join(lines)
    if style == "grid":
        return _render_grid(t)
    raise DomainError("bad-style", f"unknown render style {style!r}")


def _render_compact(labels: tuple[int, ...], word: str, items: list[str]) -> str:
    prefix = ""
    if labels != tuple(range(1, len(word) + 1)):
        prefix = "labels=" + ",".join(str(l) for l in labels) + "|"
    return prefix + word + "|" + ";".join(items)


def _render_grid(t: AltTableau) -> str:
    rows = t.rows
    cols = tuple(sorted(t.columns, reverse=True))  # leftmost column = largest label
    occupied = t.arrow_map()
    width = max((len(str(l)) for l in t.labels), default=1)
    sym = {LEFT: "<", UP: "^"}
    header = " " * width + "".join(f" {str(j):>{width}}" for j in cols)
    lines = [header.rstrip()]
    for i in rows:
        cells = []
        for j in cols:
            if i < j:
                cells.append(f" {sym.get(occupied.get((i, j), ''), '.'):>{width}}")
        lines.append((f"{str(i):>{width}}" + "".join(cells)).rstrip())
    return "\n".join(lines)


def parse_perm_tableau(text: str) -> PermTableau:
    text = text.strip()
    if not text:
        raise ParseError("empty input", 0)
    labels, rest, offset = _parse_labels_prefix(text)
    if rest.count("|") != 1:
        raise ParseError("expected <word>|<one-cells>", offset)
    word, _, onestr = rest.partition("|")
    if labels is None:
        labels = tuple(range(1, len(word) + 1))
    ones = []
    pos = offset + len(word) + 1
    for part in onestr.split(";"):
        if not part:
            continue
        m = _CELL_RE.match(part)
        if not m:
            raise ParseError(f"bad cell {part!r}", pos)
        ones.append((int(m.group(1)), int(m.group(2))))
        pos += len(part) + 1
    return validate_perm_tableau(labels, word, ones)


def render_perm_tableau(p: PermTableau) -> str:
    return _render_compact(p.labels, p.word, [f"{i},{j}" for i, j in p.ones])
