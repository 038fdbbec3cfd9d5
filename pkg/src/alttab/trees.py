"""Tree and arc-diagram encodings of alternative tableaux.

Three equivalent pictures of the recursive decomposition:

* plane alternative trees/forests: bicolored labeled plane trees where white
  vertices are minimal with black children in decreasing label order and
  black vertices are maximal with white children in increasing order;
* alternative arc diagrams: points 0..n+1 with one arc per arrow cell plus
  virtual arcs to 0 (free columns) and n+1 (free rows) and the arc (0, n+1);
* binary alternative trees: left children maximal, right children minimal.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass

from .core import AltTableau, free_stats, standardize
from .decomposition import (
    COL_PACKED,
    NOT_PACKED,
    ROW_PACKED,
    block,
    cut,
    divide,
    merge_all,
    packed_class,
    split,
)
from .errors import DomainError, ParseError, ResourceLimitError, ValidationError, Violation

WHITE = "W"
BLACK = "B"

MIN_ROOTED = "min"
MAX_ROOTED = "max"

# Recursions below descend one tree level per call; cap input size well under
# the interpreter stack limit.
_DEPTH_LIMIT = int(os.environ.get("ALTAB_MAX_DEPTH", "200"))


def _guard_size(n: int) -> None:
    if n > _DEPTH_LIMIT:
        raise ResourceLimitError(f"object of size {n} exceeds depth limit {_DEPTH_LIMIT}")


@dataclass(frozen=True)
class PlaneAltTree:
    color: str  # WHITE or BLACK
    label: int
    children: tuple[PlaneAltTree, ...] = ()

    def labels(self) -> frozenset[int]:
        out = {self.label}
        for c in self.children:
            out |= c.labels()
        return frozenset(out)

    def size(self) -> int:
        return 1 + sum(c.size() for c in self.children)


@dataclass(frozen=True)
class PlaneAltForest:
    """Set of plane alternative trees; stored sorted by root label."""

    trees: tuple[PlaneAltTree, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "trees", tuple(sorted(self.trees, key=lambda t: t.label)))

    def labels(self) -> frozenset[int]:
        out: set[int] = set()
        for t in self.trees:
            out |= t.labels()
        return frozenset(out)

    def size(self) -> int:
        return sum(t.size() for t in self.trees)


def validate_tree(t: PlaneAltTree) -> None:
    """Check colors, extremality and child ordering; raises listing violations."""
    bad: list[Violation] = []
    seen: set[int] = set()

    def walk(node: PlaneAltTree) -> None:
        if node.label in seen:
            bad.append(Violation("duplicate-label", f"label {node.label} repeats"))
        seen.add(node.label)
        if node.color not in (WHITE, BLACK):
            bad.append(Violation("bad-color", f"color {node.color!r} at {node.label}"))
            return
        child_roots = [c.label for c in node.children]
        if node.color == WHITE:
            if any(c.color != BLACK for c in node.children):
                bad.append(Violation("bad-color", f"white {node.label} has a white child"))
            if any(a <= b for a, b in zip(child_roots, child_roots[1:])):
                bad.append(Violation("bad-order", f"children of white {node.label} not decreasing"))
        else:
            if any(c.color != WHITE for c in node.children):
                bad.append(Violation("bad-color", f"black {node.label} has a black child"))
            if any(a >= b for a, b in zip(child_roots, child_roots[1:])):
                bad.append(Violation("bad-order", f"children of black {node.label} not increasing"))
        rest = [l for c in node.children for l in c.labels()]
        if node.color == WHITE and any(l <= node.label for l in rest):
            bad.append(Violation("not-minimal", f"white {node.label} is not minimal"))
        if node.color == BLACK and any(l >= node.label for l in rest):
            bad.append(Violation("not-maximal", f"black {node.label} is not maximal"))
        for c in node.children:
            walk(c)

    _guard_size(t.size())
    walk(t)
    if bad:
        raise ValidationError(bad)


def validate_forest(f: PlaneAltForest) -> None:
    sizes = sum(t.size() for t in f.trees)
    if len(f.labels()) != sizes:
        raise ValidationError([Violation("duplicate-label", "trees share labels")])
    for t in f.trees:
        validate_tree(t)


def to_tree(t: AltTableau) -> PlaneAltTree:
    """Encode a packed tableau as a plane alternative tree.

    A row-packed tableau becomes a white root carrying its top-row label with
    the components of the cut tableau as subtrees; column-packed dually.
    """
    _guard_size(len(t))
    cls = packed_class(t)
    if cls == NOT_PACKED:
        raise DomainError("not-packed", "tableau is not packed")
    return _tree_rec(t, cls)


def _tree_rec(t: AltTableau, cls: str) -> PlaneAltTree:
    if cls == ROW_PACKED:
        root = t.labels[0]  # the free row is the topmost one
        rest = cut(t, "row")
        kids = [_tree_rec(c, COL_PACKED) for c in split(rest)]
        kids.sort(key=lambda k: -k.label)
        return PlaneAltTree(WHITE, root, tuple(kids))
    root = t.labels[-1]  # the free column is the leftmost one
    rest = cut(t, "col")
    kids = [_tree_rec(c, ROW_PACKED) for c in split(rest)]
    kids.sort(key=lambda k: k.label)
    return PlaneAltTree(BLACK, root, tuple(kids))


def from_tree(tree: PlaneAltTree) -> AltTableau:
    """Inverse of :func:`to_tree`: merge the children's tableaux, then block."""
    validate_tree(tree)
    return _from_tree_rec(tree)


def _from_tree_rec(tree: PlaneAltTree) -> AltTableau:
    body = merge_all(_from_tree_rec(c) for c in tree.children)
    axis = "col" if tree.color == WHITE else "row"
    return block(body, axis, tree.label)


def to_forest(t: AltTableau) -> PlaneAltForest:
    """One tree per packed component of the tableau."""
    _guard_size(len(t))
    return PlaneAltForest(tuple(_tree_rec(c, packed_class(c)) for c in split(t)))


def from_forest(f: PlaneAltForest) -> AltTableau:
    validate_forest(f)
    return merge_all(_from_tree_rec(t) for t in f.trees)


# ---------------------------------------------------------------------------
# Arc diagrams


@dataclass(frozen=True)
class ArcDiagram:
    points: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple(sorted(self.arcs)))


def validate_arc_diagram(d: ArcDiagram) -> None:
    """Check the three defining conditions: in/out exclusivity, tree shape,
    and every non-extremal arc topmost on exactly one side."""
    bad: list[Violation] = []
    points = d.points
    if any(a >= b for a, b in zip(points, points[1:])):
        raise ValidationError([Violation("bad-points", "points not strictly increasing")])
    pset = set(points)
    for i, j in d.arcs:
        if i >= j or i not in pset or j not in pset:
            bad.append(Violation("bad-arc", f"arc ({i},{j}) off the points"))
    if bad:
        raise ValidationError(bad)
    outs = {i for i, _ in d.arcs}
    ins = {j for _, j in d.arcs}
    for p in sorted(outs & ins):
        bad.append(Violation("in-and-out", f"point {p} has both incoming and outgoing arcs"))
    # Tree on the whole point set: right count and connected.
    if len(d.arcs) != len(points) - 1:
        bad.append(Violation("not-a-tree", f"{len(d.arcs)} arcs on {len(points)} points"))
    else:
        parent = {p: p for p in points}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in d.arcs:
            parent[find(i)] = find(j)
        if len({find(p) for p in points}) > 1:
            bad.append(Violation("not-a-tree", "arcs do not connect all points"))
    if points:
        extremal = (points[0], points[-1])
        for arc in d.arcs:
            if arc == extremal:
                continue
            sides = int(_topmost_left(d, arc)) + int(_topmost_right(d, arc))
            if sides != 1:
                bad.append(
                    Violation("topmost", f"arc {arc} is topmost on {sides} sides, expected 1")
                )
    if bad:
        raise ValidationError(bad)


def _topmost_left(d: ArcDiagram, arc: tuple[int, int]) -> bool:
    i, j = arc
    return not any(x == i and y > j for x, y in d.arcs)


def _topmost_right(d: ArcDiagram, arc: tuple[int, int]) -> bool:
    i, j = arc
    return not any(y == j and x < i for x, y in d.arcs)


def arc_diagram(t: AltTableau) -> ArcDiagram:
    """Direct arc encoding on points 0..n+1 (general labels are standardized).

    Arrow cells give arcs, free columns attach to 0, free rows to n+1, and
    the arc (0, n+1) is always present.
    """
    t = t if t.is_standard() else standardize(t)
    n = len(t)
    stats = free_stats(t)
    arcs = [(a.row, a.col) for a in t.arrows]
    arcs.extend((0, j) for j in stats.free_cols)
    arcs.extend((i, n + 1) for i in stats.free_rows)
    arcs.append((0, n + 1))
    return ArcDiagram(tuple(range(n + 2)), tuple(arcs))


def forest_to_arcs(f: PlaneAltForest) -> ArcDiagram:
    """Arc encoding of a forest on labels 1..n: tree edges plus virtual arcs."""
    labels = sorted(f.labels())
    n = len(labels)
    if labels != list(range(1, n + 1)):
        raise DomainError("label-gap", f"labels {labels} are not 1..{n}")
    arcs: list[tuple[int, int]] = [(0, n + 1)]

    def edges(node: PlaneAltTree) -> None:
        for c in node.children:
            arcs.append(tuple(sorted((node.label, c.label))))
            edges(c)

    for t in f.trees:
        arcs.append((0, t.label) if t.color == BLACK else (t.label, n + 1))
        edges(t)
    return ArcDiagram(tuple(range(n + 2)), tuple(arcs))


def arcs_to_forest(d: ArcDiagram) -> PlaneAltForest:
    """Inverse of :func:`forest_to_arcs`: drop the virtual arcs and recolor.

    A point is white when all its arcs leave to the right, black otherwise;
    points that were tied to 0 or n+1 become roots.
    """
    validate_arc_diagram(d)
    if len(d.points) < 2:
        raise DomainError("bad-points", "diagram needs at least the two virtual points")
    lo, hi = d.points[0], d.points[-1]
    inner_arcs = [a for a in d.arcs if lo not in a and hi not in a]
    roots = sorted(
        {i for i, j in d.arcs if j == hi and i != lo}
        | {j for i, j in d.arcs if i == lo and j != hi}
    )
    neighbors: dict[int, list[int]] = {}
    for i, j in inner_arcs:
        neighbors.setdefault(i, []).append(j)
        neighbors.setdefault(j, []).append(i)
    color = {}
    for p in d.points[1:-1]:
        has_out = any(x == p for x, _ in d.arcs)
        color[p] = WHITE if has_out else BLACK

    def build(p: int, parent: int | None) -> PlaneAltTree:
        kids = [build(q, p) for q in neighbors.get(p, ()) if q != parent]
        kids.sort(key=lambda k: -k.label if color[p] == WHITE else k.label)
        return PlaneAltTree(color[p], p, tuple(kids))

    forest = PlaneAltForest(tuple(build(r, None) for r in roots))
    validate_forest(forest)
    return forest


def crossings(d: ArcDiagram) -> frozenset[tuple[int, int]]:
    """All crossing pairs, reported as the middle pair (i, j)."""
    out = set()
    for a in d.arcs:
        for b in d.arcs:
            if a[0] < b[0] < a[1] < b[1]:
                out.add((b[0], a[1]))
    return frozenset(out)


def out_crossings(d: ArcDiagram) -> frozenset[tuple[int, int]]:
    """Crossings whose arcs are topmost at the two middle endpoints.

    For the diagram of a tableau these are exactly the free cells.
    """
    out = set()
    for a in d.arcs:
        if not _topmost_right(d, a):
            continue
        for b in d.arcs:
            if a[0] < b[0] < a[1] < b[1] and _topmost_left(d, b):
                out.add((b[0], a[1]))
    return frozenset(out)


# ---------------------------------------------------------------------------
# Binary alternative trees


@dataclass(frozen=True)
class BinAltTree:
    label: int
    left: BinAltTree | None = None
    right: BinAltTree | None = None
    kind: str = MIN_ROOTED  # extremality of this node within its subtree

    def labels(self) -> frozenset[int]:
        out = {self.label}
        if self.left:
            out |= self.left.labels()
        if self.right:
            out |= self.right.labels()
        return frozenset(out)

    def size(self) -> int:
        return 1 + (self.left.size() if self.left else 0) + (self.right.size() if self.right else 0)


def validate_bin_tree(t: BinAltTree | None, kind: str) -> None:
    """Left children must be maximal, right children minimal; the root per ``kind``."""
    bad: list[Violation] = []

    def walk(node: BinAltTree, want: str) -> None:
        if node.kind != want:
            bad.append(Violation("bad-kind", f"node {node.label} marked {node.kind}, expected {want}"))
        rest = node.labels() - {node.label}
        if want == MIN_ROOTED and any(l <= node.label for l in rest):
            bad.append(Violation("not-minimal", f"node {node.label} is not minimal"))
        if want == MAX_ROOTED and any(l >= node.label for l in rest):
            bad.append(Violation("not-maximal", f"node {node.label} is not maximal"))
        if node.left:
            walk(node.left, MAX_ROOTED)
        if node.right:
            walk(node.right, MIN_ROOTED)

    if t is not None:
        _guard_size(t.size())
        walk(t, kind)
    if bad:
        raise ValidationError(bad)


def to_binary_tree(t: AltTableau, kind: str) -> BinAltTree | None:
    """Binary encoding of a tableau with no free columns (min) or rows (max).

    The root takes the extremal label; cutting it off and dividing the rest
    supplies the right (rows part, min-rooted) and left (columns part,
    max-rooted) subtrees.
    """
    _guard_size(len(t))
    stats = free_stats(t)
    if kind == MIN_ROOTED and stats.fcol != 0:
        raise DomainError("wrong-class", "min-rooted encoding needs a tableau with no free columns")
    if kind == MAX_ROOTED and stats.frow != 0:
        raise DomainError("wrong-class", "max-rooted encoding needs a tableau with no free rows")
    if kind not in (MIN_ROOTED, MAX_ROOTED):
        raise DomainError("bad-kind", f"unknown kind {kind!r}")
    return _bin_rec(t, kind)


def _bin_rec(t: AltTableau, kind: str) -> BinAltTree | None:
    if not t.labels:
        return None
    if kind == MIN_ROOTED:
        root = t.labels[0]
        rest = cut(t, "row")
    else:
        root = t.labels[-1]
        rest = cut(t, "col")
    p, q = divide(rest)
    return BinAltTree(root, _bin_rec(q, MAX_ROOTED), _bin_rec(p, MIN_ROOTED), kind)


def from_binary_tree(tree: BinAltTree | None, kind: str) -> AltTableau:
    validate_bin_tree(tree, kind)
    return _from_bin_rec(tree, kind)


def _from_bin_rec(tree: BinAltTree | None, kind: str) -> AltTableau:
    from .decomposition import merge

    if tree is None:
        return AltTableau((), "")
    p = _from_bin_rec(tree.right, MIN_ROOTED)
    q = _from_bin_rec(tree.left, MAX_ROOTED)
    body = merge(p, q)
    axis = "col" if kind == MIN_ROOTED else "row"
    return block(body, axis, tree.label)


def binary_pair(t: AltTableau) -> tuple[BinAltTree | None, BinAltTree | None]:
    """Encode any tableau as (min-rooted tree, max-rooted tree) via divide."""
    p, q = divide(t)
    return _bin_rec(p, MIN_ROOTED), _bin_rec(q, MAX_ROOTED)


def binary_pair_inv(pair: tuple[BinAltTree | None, BinAltTree | None]) -> AltTableau:
    from .decomposition import merge

    b_min, b_max = pair
    validate_bin_tree(b_min, MIN_ROOTED)
    validate_bin_tree(b_max, MAX_ROOTED)
    return merge(_from_bin_rec(b_min, MIN_ROOTED), _from_bin_rec(b_max, MAX_ROOTED))


# ---------------------------------------------------------------------------
# Text formats


def render_tree(t: PlaneAltTree) -> str:
    inner = "".join(" " + render_tree(c) for c in t.children)
    return f"({t.color} {t.label}{inner})"


def render_forest(f: PlaneAltForest) -> str:
    return " ".join(render_tree(t) for t in f.trees)


_TOKEN_RE = re.compile(r"\(|\)|[A-Za-z]+|\d+")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    for m in _TOKEN_RE.finditer(text):
        if text[pos : m.start()].strip():
            raise ParseError(f"unexpected {text[pos:m.start()].strip()!r}", pos)
        tokens.append((m.group(), m.start()))
        pos = m.end()
    if text[pos:].strip():
        raise ParseError(f"unexpected {text[pos:].strip()!r}", pos)
    return tokens


def parse_forest(text: str) -> PlaneAltForest:
    """Parse whitespace-separated s-expressions like ``(W 4 (B 9))``."""
    tokens = _tokenize(text)
    _guard_size(len(tokens) // 3)
    trees = []
    idx = 0
    while idx < len(tokens):
        tree, idx = _parse_tree_at(tokens, idx)
        trees.append(tree)
    forest = PlaneAltForest(tuple(trees))
    validate_forest(forest)
    return forest


def _parse_tree_at(tokens: list[tuple[str, int]], idx: int) -> tuple[PlaneAltTree, int]:
    def expect(pred, what: str) -> tuple[str, int]:
        if idx >= len(tokens) or not pred(tokens[idx][0]):
            pos = tokens[idx][1] if idx < len(tokens) else (tokens[-1][1] + 1 if tokens else 0)
            raise ParseError(f"expected {what}", pos)
        return tokens[idx]

    tok, pos = expect(lambda s: s == "(", "'('")
    idx += 1
    color, pos = expect(lambda s: s in (WHITE, BLACK), "color W or B")
    idx += 1
    label, pos = expect(str.isdigit, "label")
    idx += 1
    children = []
    while idx < len(tokens) and tokens[idx][0] == "(":
        child, idx = _parse_tree_at(tokens, idx)
        children.append(child)
    expect(lambda s: s == ")", "')'")
    idx += 1
    return PlaneAltTree(color, int(label), tuple(children)), idx


def render_arcs(d: ArcDiagram) -> str:
    pts = f"{d.points[0]}..{d.points[-1]}" if d.points else ""
    return "points=" + pts + " arcs=" + "".join(f"({i},{j})" for i, j in d.arcs)


_ARCS_RE = re.compile(r"points=(\d+)\.\.(\d+) arcs=((?:\(\d+,\d+\))*)$")


def parse_arcs(text: str) -> ArcDiagram:
    m = _ARCS_RE.match(text.strip())
    if not m:
        raise ParseError("expected 'points=a..b arcs=(i,j)...'", 0)
    lo, hi = int(m.group(1)), int(m.group(2))
    arcs = [(int(i), int(j)) for i, j in re.findall(r"\((\d+),(\d+)\)", m.group(3))]
    d = ArcDiagram(tuple(range(lo, hi + 1)), tuple(arcs))
    validate_arc_diagram(d)
    return d


def render_bin_tree(t: BinAltTree | None) -> str:
    if t is None:
        return "-"
    return f"({t.label} L:{render_bin_tree(t.left)} R:{render_bin_tree(t.right)})"


def render_bin_pair(pair: tuple[BinAltTree | None, BinAltTree | None]) -> str:
    return f"{render_bin_tree(pair[0])} {render_bin_tree(pair[1])}"


def parse_bin_pair(text: str) -> tuple[BinAltTree | None, BinAltTree | None]:
    """Parse two binary trees (min-rooted then max-rooted), ``-`` for empty."""
    first, idx = _parse_bin_at(text, 0, MIN_ROOTED)
    second, idx = _parse_bin_at(text, idx, MAX_ROOTED)
    if text[idx:].strip():
        raise ParseError(f"trailing input {text[idx:].strip()!r}", idx)
    validate_bin_tree(first, MIN_ROOTED)
    validate_bin_tree(second, MAX_ROOTED)
    return first, second


def _parse_bin_at(text: str, idx: int, kind: str) -> tuple[BinAltTree | None, int]:
    while idx < len(text) and text[idx].isspace():
        idx += 1
    if idx < len(text) and text[idx] == "-":
        return None, idx + 1
    if idx >= len(text) or text[idx] != "(":
        raise ParseError("expected '(' or '-'", idx)
    idx += 1
    m = re.compile(r"\s*(\d+)\s*L:").match(text, idx)
    if not m:
        raise ParseError("expected '<label> L:'", idx)
    label = int(m.group(1))
    left, idx = _parse_bin_at(text, m.end(), MAX_ROOTED)
    m = re.compile(r"\s*R:").match(text, idx)
    if not m:
        raise ParseError("expected 'R:'", idx)
    right, idx = _parse_bin_at(text, m.end(), MIN_ROOTED)
    while idx < len(text) and text[idx].isspace():
        idx += 1
    if idx >= len(text) or text[idx] != ")":
        raise ParseError("expected ')'", idx)
    return BinAltTree(label, left, right, kind), idx + 1
