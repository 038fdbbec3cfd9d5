"""Bijections between alternative tableaux and permutations.

Permutations here are repeat-free words of nonnegative integers.  A packed
tableau's tree reads off as its postorder word; a whole tableau becomes the
concatenation of its black-rooted tree words (decreasing roots), a separator
``x`` below every label, then the white-rooted words (increasing roots).
An equivalent column-by-column insertion algorithm produces the same word and
exposes its intermediate steps.  Statistics travel: rows are ascent letters,
columns descent letters, free rows right-to-left minima and free columns
shifted right-to-left maxima.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import LEFT, UP, AltTableau, free_stats, relabel, transpose
from .decomposition import divide, merge
from .errors import DomainError, ParseError
from .trees import (
    BLACK,
    WHITE,
    PlaneAltForest,
    PlaneAltTree,
    _guard_size,
    from_forest,
    to_forest,
)

Word = tuple[int, ...]


def check_word(word: Sequence[int]) -> Word:
    w = tuple(word)
    if len(set(w)) != len(w):
        raise DomainError("repeated-letter", f"word {w} repeats a letter")
    if any(a < 0 for a in w):
        raise DomainError("negative-letter", f"word {w} has a negative letter")
    return w


@dataclass(frozen=True)
class PermStats:
    ascent_letters: frozenset[int]
    descent_letters: frozenset[int]
    rl_minima: frozenset[int]
    rl_maxima: frozenset[int]
    shifted_rl_maxima: frozenset[int]


def rl_minima(word: Sequence[int]) -> list[int]:
    """Letters smaller than everything to their right, left to right."""
    out: list[int] = []
    low = None
    for a in reversed(word):
        if low is None or a < low:
            out.append(a)
            low = a
    return out[::-1]


def rl_maxima(word: Sequence[int]) -> list[int]:
    out: list[int] = []
    high = None
    for a in reversed(word):
        if high is None or a > high:
            out.append(a)
            high = a
    return out[::-1]


def perm_stats(word: Sequence[int]) -> PermStats:
    """All letter statistics of a repeat-free word; the last letter counts
    as an ascent and the shifted maxima are the maxima of the prefix before
    the smallest letter."""
    w = check_word(word)
    if not w:
        return PermStats(frozenset(), frozenset(), frozenset(), frozenset(), frozenset())
    ascents = {w[-1]} | {a for a, b in zip(w, w[1:]) if a < b}
    descents = {a for a, b in zip(w, w[1:]) if a > b}
    prefix = w[: w.index(min(w))]
    return PermStats(
        frozenset(ascents),
        frozenset(descents),
        frozenset(rl_minima(w)),
        frozenset(rl_maxima(w)),
        frozenset(rl_maxima(prefix)),
    )


# ---------------------------------------------------------------------------
# Postorder words of trees and forests


def tree_word(t: PlaneAltTree) -> Word:
    """Postorder traversal: children's words left to right, then the root."""
    out: list[int] = []

    def walk(node: PlaneAltTree) -> None:
        for c in node.children:
            walk(c)
        out.append(node.label)

    walk(t)
    return tuple(out)


def word_to_tree(word: Sequence[int], color: str) -> PlaneAltTree:
    """Inverse of :func:`tree_word` for a given root color.

    A black-rooted word ends with its maximum and splits before the root at
    the right-to-left minima; white-rooted words end with their minimum and
    split at the maxima.
    """
    w = check_word(word)
    if not w:
        raise DomainError("bad-terminal-letter", "empty word encodes no tree")
    _guard_size(len(w))
    return _word_to_tree(w, color)


def _word_to_tree(w: Word, color: str) -> PlaneAltTree:
    root = w[-1]
    body = w[:-1]
    if color == BLACK:
        if body and root != max(w):
            raise DomainError("bad-terminal-letter", f"{root} is not the maximum of {w}")
        bounds = rl_minima(body)
        child_color = WHITE
    elif color == WHITE:
        if body and root != min(w):
            raise DomainError("bad-terminal-letter", f"{root} is not the minimum of {w}")
        bounds = rl_maxima(body)
        child_color = BLACK
    else:
        raise DomainError("bad-color", f"unknown color {color!r}")
    children = []
    start = 0
    for b in bounds:
        end = body.index(b, start) + 1
        children.append(_word_to_tree(body[start:end], child_color))
        start = end
    return PlaneAltTree(color, root, tuple(children))


def forest_word(f: PlaneAltForest, separator: int) -> Word:
    """Word of a forest: black-rooted trees by decreasing root, the separator,
    then white-rooted trees by increasing root."""
    labels = f.labels()
    if separator < 0 or (labels and separator >= min(labels)):
        raise DomainError("bad-separator", f"separator {separator} not below all labels")
    blacks = sorted((t for t in f.trees if t.color == BLACK), key=lambda t: -t.label)
    whites = sorted((t for t in f.trees if t.color == WHITE), key=lambda t: t.label)
    out: list[int] = []
    for t in blacks:
        out.extend(tree_word(t))
    out.append(separator)
    for t in whites:
        out.extend(tree_word(t))
    return tuple(out)


def word_to_forest(word: Sequence[int]) -> PlaneAltForest:
    """Inverse of :func:`forest_word`; the separator is the smallest letter."""
    w = check_word(word)
    if not w:
        raise DomainError("bad-separator", "empty word has no separator")
    _guard_size(len(w))
    cut_at = w.index(min(w))
    before, after = w[:cut_at], w[cut_at + 1 :]
    trees: list[PlaneAltTree] = []
    for part, color, bounds in (
        (before, BLACK, rl_maxima(before)),
        (after, WHITE, rl_minima(after)),
    ):
        start = 0
        for b in bounds:
            end = part.index(b, start) + 1
            trees.append(_word_to_tree(part[start:end], color))
            start = end
    return PlaneAltForest(tuple(trees))


# ---------------------------------------------------------------------------
# Tableaux to permutations


def to_permutation(t: AltTableau, separator: int = 0) -> Word:
    """Bijection from tableaux labeled by L to permutations of L plus the separator."""
    return forest_word(to_forest(t), separator)


def from_permutation(word: Sequence[int]) -> AltTableau:
    return from_forest(word_to_forest(word))


def insertion_steps(t: AltTableau) -> list[Word]:
    """Intermediate words of the column-insertion algorithm, one per column.

    Start from 0 followed by the free rows in increasing order.  Columns are
    handled left to right (decreasing label): insert the column label left of
    its up-arrow row (left of 0 when the column has none), then the rows of
    its left arrows, in increasing order, immediately left of it.
    """
    if not t.is_standard():
        raise DomainError("non-standard-labels", "insertion needs labels 1..n")
    stats = free_stats(t)
    up_in_col = {a.col: a.row for a in t.arrows if a.kind == UP}
    lefts_in_col: dict[int, list[int]] = {}
    for a in t.arrows:
        if a.kind == LEFT:
            lefts_in_col.setdefault(a.col, []).append(a.row)
    word = [0] + sorted(stats.free_rows)
    steps = [tuple(word)]
    for j in sorted(t.columns, reverse=True):
        target = up_in_col.get(j, 0)
        word.insert(word.index(target), j)
        for i in sorted(lefts_in_col.get(j, ())):
            word.insert(word.index(j), i)
        steps.append(tuple(word))
    return steps


def to_permutation_by_insertion(t: AltTableau) -> Word:
    return insertion_steps(t)[-1]


# ---------------------------------------------------------------------------
# Signed permutations of symmetric tableaux


@dataclass(frozen=True)
class SignedPerm:
    """Permutation of 1..n with a set of barred positions (0-based)."""

    word: tuple[int, ...]
    barred: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        n = len(self.word)
        if sorted(self.word) != list(range(1, n + 1)):
            raise DomainError("bad-word", f"{self.word} is not a permutation of 1..{n}")
        if any(p < 0 or p >= n for p in self.barred):
            raise DomainError("bad-word", "barred position out of range")


def to_signed_permutation(t: AltTableau) -> SignedPerm:
    """Encode a transpose-fixed tableau of size 2n as a signed permutation.

    The rows half of the tableau maps through the forest bijection; letters
    above n fold down to barred letters.
    """
    if not t.is_standard():
        raise DomainError("non-standard-labels", "symmetric encoding needs labels 1..2n")
    if len(t) % 2 or transpose(t) != t:
        raise DomainError("not-symmetric", "tableau is not fixed by transposition")
    n = len(t) // 2
    half, _ = divide(t)
    word = to_permutation(half, 0)[1:]  # drop the leading separator
    letters = []
    barred = set()
    for pos, a in enumerate(word):
        if a > n:
            letters.append(2 * n + 1 - a)
            barred.add(pos)
        else:
            letters.append(a)
    return SignedPerm(tuple(letters), frozenset(barred))


def from_signed_permutation(sp: SignedPerm) -> AltTableau:
    """Inverse of :func:`to_signed_permutation`."""
    n = len(sp.word)
    unfolded = tuple(
        2 * n + 1 - a if pos in sp.barred else a for pos, a in enumerate(sp.word)
    )
    half = from_permutation((0,) + unfolded)
    mirror_labels = sorted(2 * n + 1 - l for l in half.labels)
    other = relabel(transpose(half), mirror_labels)
    t = merge(half, other)
    if transpose(t) != t:
        raise DomainError("not-symmetric", "reconstruction failed to be symmetric")
    return t


# ---------------------------------------------------------------------------
# Text formats


def render_word(word: Sequence[int]) -> str:
    return " ".join(str(a) for a in word)


def parse_word(text: str) -> Word:
    parts = text.split()
    try:
        return check_word(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"bad letter in {text!r}", 0)


def render_signed(sp: SignedPerm) -> str:
    return " ".join(
        f"{a}'" if pos in sp.barred else str(a) for pos, a in enumerate(sp.word)
    )


def parse_signed(text: str) -> SignedPerm:
    letters = []
    barred = set()
    for pos, part in enumerate(text.split()):
        bar = part.endswith("'")
        body = part[:-1] if bar else part
        if not body.isdigit():
            raise ParseError(f"bad signed letter {part!r}", 0)
        letters.append(int(body))
        if bar:
            barred.add(pos)
    return SignedPerm(tuple(letters), frozenset(barred))
