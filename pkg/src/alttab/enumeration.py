"""Exhaustive generation, refined counting, stationary distributions, and
exact verification of the counting formulas.

The backtracking generator walks every shape word in lexicographic order and
fills cells leftmost column first, top to bottom, trying empty, then a left
arrow, then an up arrow; arrows are only placed when every cell they point at
is already known to be empty, so each produced filling is valid by
construction.  A second generator reaches the same set through the
permutation bijection, giving an independent oracle.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as iter_permutations
from itertools import product
from typing import Iterable, Iterator, Sequence

from .core import AltTableau, Arrow, PermTableau, free_stats, relabel, transpose
from .decomposition import divide, merge
from .errors import DomainError, ResourceLimitError
from .permutations import from_permutation
from .series import Poly3, Series, geometric, neg_log_one_minus_z

DEFAULT_MAX_N = 9
DEFAULT_MAX_CHAIN_N = 6

PARTICLE = "*"
HOLE = "o"


def _max_n() -> int:
    return int(os.environ.get("ALTAB_MAX_N", DEFAULT_MAX_N))


def _check_cap(n: int, cap: int | None, what: str) -> None:
    limit = cap if cap is not None else _max_n()
    if n > limit:
        raise ResourceLimitError(f"{what} for n={n} exceeds the cap {limit}")
    if n < 0:
        raise DomainError("bad-size", f"negative size {n}")


def shape_words(n: int) -> Iterator[str]:
    """All 2^n border words of length n, lexicographically (D before E)."""
    for bits in product("DE", repeat=n):
        yield "".join(bits)


def fillings(word: str) -> Iterator[tuple[Arrow, ...]]:
    """All valid arrow placements on a shape, in a fixed backtracking order."""
    labels = range(1, len(word) + 1)
    rows = [l for l, c in zip(labels, word) if c == "D"]
    cols = [l for l, c in zip(labels, word) if c == "E"]
    cells = [(i, j) for j in sorted(cols, reverse=True) for i in rows if i < j]
    row_used: dict[int, bool] = {i: False for i in rows}  # any arrow already in row
    col_used: dict[int, bool] = {j: False for j in cols}  # any arrow already in column
    chosen: list[Arrow] = []

    def place(k: int) -> Iterator[tuple[Arrow, ...]]:
        if k == len(cells):
            yield tuple(chosen)
            return
        i, j = cells[k]
        yield from place(k + 1)  # empty
        # A left arrow points at the already-placed cells further left in its
        # row; legal exactly when the row is still untouched.
        if not row_used[i]:
            row_used[i] = True
            before = col_used[j]
            col_used[j] = True
            chosen.append(Arrow(i, j, "L"))
            yield from place(k + 1)
            chosen.pop()
            row_used[i] = False
            col_used[j] = before
        # An up arrow points at the cells above it in its column.
        if not col_used[j]:
            col_used[j] = True
            before = row_used[i]
            row_used[i] = True
            chosen.append(Arrow(i, j, "U"))
            yield from place(k + 1)
            chosen.pop()
            col_used[j] = False
            row_used[i] = before
        return

    yield from place(0)


def all_tableaux(n: int, cap: int | None = None) -> Iterator[AltTableau]:
    """Every alternative tableau of length n with standard labels, exactly once."""
    _check_cap(n, cap, "exhaustive generation")
    labels = tuple(range(1, n + 1))
    for word in shape_words(n):
        for arrows in fillings(word):
            yield AltTableau(labels, word, arrows)


def all_via_perm(n: int, cap: int | None = None) -> Iterator[AltTableau]:
    """The same set, produced from all (n+1)! permutations of 0..n."""
    _check_cap(n, cap, "permutation-driven generation")
    for word in iter_permutations(range(n + 1)):
        yield from_permutation(word)


def all_perm_tableaux(n: int, cap: int | None = None) -> Iterator[PermTableau]:
    """Every permutation tableau of length n with standard labels.

    Independent of the alternative-tableau generator: a 0/1 backtracking with
    the column and blocked-zero rules checked as cells are placed.
    """
    _check_cap(n, cap, "permutation-tableau generation")
    labels = tuple(range(1, n + 1))
    for word in shape_words(n):
        rows = [l for l, c in zip(labels, word) if c == "D"]
        cols = [l for l, c in zip(labels, word) if c == "E"]
        if any(not any(i < j for i in rows) for j in cols):
            continue  # a column without cells can never contain a 1
        by_col = [[(i, j) for i in rows if i < j] for j in sorted(cols, reverse=True)]
        cells = [c for col in by_col for c in col]
        ones: set[tuple[int, int]] = set()

        def place(k: int) -> Iterator[PermTableau]:
            if k == len(cells):
                yield PermTableau(labels, word, tuple(sorted(ones)))
                return
            i, j = cells[k]
            one_above = any((i2, j) in ones for i2 in rows if i2 < i)
            one_left = any((i, j2) in ones for j2 in cols if j2 > j)
            last_of_col = k + 1 == len(cells) or cells[k + 1][1] != j
            # 0 is allowed unless blocked; a column must not finish all-zero.
            if not (one_above and one_left) and not (last_of_col and not one_above):
                yield from place(k + 1)
            ones.add((i, j))
            yield from place(k + 1)
            ones.discard((i, j))

        yield from place(0)


# ---------------------------------------------------------------------------
# Refined counts


@dataclass(frozen=True)
class CountTable:
    """Counts of tableaux of length n by (free rows, free columns, rows)."""

    n: int
    counts: dict[tuple[int, int, int], int]

    def total(self) -> int:
        return sum(self.counts.values())

    def by_free(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for (i, j, _), c in self.counts.items():
            out[(i, j)] = out.get((i, j), 0) + c
        return out

    def free_poly(self) -> Poly3:
        """The polynomial summing x^(free rows) y^(free cols) over all tableaux."""
        return Poly3({(0, i, j): c for (i, j), c in self.by_free().items()})

    def weighted_sum(self, u: Fraction, x: Fraction, y: Fraction) -> Fraction:
        total = Fraction(0)
        for (i, j, k), c in self.counts.items():
            total += c * x**i * y**j * u**k
        return total

    def rows_sum_no_free_rows(self, u: Fraction) -> Fraction:
        return sum(
            (c * u**k for (i, _, k), c in self.counts.items() if i == 0), Fraction(0)
        )


def count_shapes(n: int, words: Iterable[str]) -> dict[tuple[int, int, int], int]:
    """Count fillings of the given shapes by (frow, fcol, rows); associative piece."""
    counts: dict[tuple[int, int, int], int] = {}
    labels = tuple(range(1, n + 1))
    for word in words:
        k = word.count("D")
        for arrows in fillings(word):
            stats = free_stats(AltTableau(labels, word, arrows))
            key = (stats.frow, stats.fcol, k)
            counts[key] = counts.get(key, 0) + 1
    return counts


def merge_counts(parts: Iterable[dict[tuple[int, int, int], int]]) -> dict[tuple[int, int, int], int]:
    out: dict[tuple[int, int, int], int] = {}
    for part in parts:
        for key, c in part.items():
            out[key] = out.get(key, 0) + c
    return out


def count_table(n: int, cap: int | None = None, jobs: int = 1) -> CountTable:
    """Exact count table; ``jobs`` partitions the shapes and combines by addition."""
    _check_cap(n, cap, "counting")
    words = list(shape_words(n))
    if jobs <= 1:
        return CountTable(n, count_shapes(n, words))
    chunks = [words[k::jobs] for k in range(jobs)]
    try:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(count_shapes, [n] * len(chunks), chunks))
    except OSError:
        parts = [count_shapes(n, chunk) for chunk in chunks]
    return CountTable(n, merge_counts(parts))


def product_formula(n: int) -> Poly3:
    """The closed product (x+y)(x+y+1)...(x+y+n-1) as an exact polynomial."""
    out = Poly3.constant(1)
    base = Poly3.var("x") + Poly3.var("y")
    for i in range(n):
        out = out * (base + i)
    return out


# ---------------------------------------------------------------------------
# Weights and the exclusion process


def weight_poly(word: str) -> Poly3:
    """Sum of q^fcell x^fcol y^frow over all fillings of the shape."""
    labels = tuple(range(1, len(word) + 1))
    total = Poly3()
    for arrows in fillings(word):
        stats = free_stats(AltTableau(labels, word, arrows))
        total = total + Poly3.monomial(stats.fcell, stats.fcol, stats.frow)
    return total


@dataclass(frozen=True)
class AsepParams:
    """Open exclusion process on n sites with entry rate alpha, exit rate beta,
    forward hop rate 1 and backward hop rate q (all scaled by 1/(n+1))."""

    n: int
    q: Fraction
    alpha: Fraction
    beta: Fraction

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError("bad-size", f"negative site count {self.n}")
        for name in ("q", "alpha", "beta"):
            v = getattr(self, name)
            if not 0 <= v <= 1:
                raise DomainError("bad-params", f"{name}={v} outside [0, 1]")


def states(n: int) -> Iterator[str]:
    for bits in product((HOLE, PARTICLE), repeat=n):
        yield "".join(bits)


def shape_of_state(state: str) -> str:
    """Particles are row steps, holes are column steps."""
    return "".join("D" if c == PARTICLE else "E" for c in state)


def asep_distribution(p: AsepParams, cap: int | None = None) -> dict[str, Fraction]:
    """Stationary law from tableau weights: P(s) proportional to the weight
    polynomial of the state's shape at x=1/alpha, y=1/beta."""
    _check_cap(p.n, cap, "stationary distribution")
    if p.alpha == 0 or p.beta == 0:
        raise DomainError("degenerate-params", "alpha and beta must be positive")
    x, y = 1 / p.alpha, 1 / p.beta
    weights = {s: weight_poly(shape_of_state(s)).evaluate(p.q, x, y) for s in states(p.n)}
    z = sum(weights.values())
    return {s: w / z for s, w in weights.items()}


def transition_matrix(p: AsepParams) -> list[list[Fraction]]:
    n = p.n
    scale = Fraction(1, n + 1)
    names = list(states(n))
    index = {s: k for k, s in enumerate(names)}
    size = len(names)
    m = [[Fraction(0)] * size for _ in range(size)]
    for s in names:
        k = index[s]
        out = Fraction(0)

        def hop(target: str, rate: Fraction) -> None:
            nonlocal out
            m[k][index[target]] += rate
            out += rate

        for i in range(n - 1):
            pair = s[i : i + 2]
            if pair == PARTICLE + HOLE:
                hop(s[:i] + HOLE + PARTICLE + s[i + 2 :], scale)
            elif pair == HOLE + PARTICLE:
                hop(s[:i] + PARTICLE + HOLE + s[i + 2 :], p.q * scale)
        if n and s[0] == HOLE:
            hop(PARTICLE + s[1:], p.alpha * scale)
        if n and s[-1] == PARTICLE:
            hop(s[:-1] + HOLE, p.beta * scale)
        m[k][k] = 1 - out
    return m


def solve_stationary(m: list[list[Fraction]]) -> list[Fraction]:
    """Exact solution of pi M = pi with sum(pi) = 1 by Gaussian elimination."""
    size = len(m)
    # Rows of A are the balance equations (M^T - I) pi = 0, last one replaced
    # by the normalization.
    a = [[m[j][i] - (1 if i == j else 0) for j in range(size)] for i in range(size)]
    a[-1] = [Fraction(1)] * size
    rhs = [Fraction(0)] * (size - 1) + [Fraction(1)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            raise DomainError("singular-system", "no pivot; the chain matrix is malformed")
        a[col], a[pivot] = a[pivot], a[col]
        rhs[col], rhs[pivot] = rhs[pivot], rhs[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        rhs[col] *= inv
        for r in range(size):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
                rhs[r] -= f * rhs[col]
    return rhs


def chain_stationary(p: AsepParams, cap: int | None = None) -> dict[str, Fraction]:
    """Independent oracle: build the chain and solve it exactly."""
    limit = cap if cap is not None else int(os.environ.get("ALTAB_MAX_N", DEFAULT_MAX_CHAIN_N))
    if p.n > limit:
        raise ResourceLimitError(f"chain solve for n={p.n} exceeds the cap {limit}")
    pi = solve_stationary(transition_matrix(p))
    return dict(zip(states(p.n), pi))


# ---------------------------------------------------------------------------
# Decorated and symmetric tableaux


def decorated_count(n: int, cap: int | None = None) -> int:
    """Number of tableaux of length n with each arrow independently marked."""
    _check_cap(n, cap, "decorated counting")
    return sum(2 ** len(t.arrows) for t in all_tableaux(n, cap))


@dataclass(frozen=True)
class MarkedTableau:
    """A tableau with a set of marked line labels."""

    tableau: AltTableau
    marked: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        extra = self.marked - set(self.tableau.labels)
        if extra:
            raise DomainError("bad-mark", f"marks {sorted(extra)} not on any line")


def _non_free_labels(t: AltTableau) -> frozenset[int]:
    stats = free_stats(t)
    return frozenset(set(t.labels) - stats.free_rows - stats.free_cols)


def is_decorated(mt: MarkedTableau) -> bool:
    """Decorated tableaux only mark non-free lines (equivalently, arrows)."""
    return mt.marked <= _non_free_labels(mt.tableau)


def _reversal(labels: Sequence[int]) -> dict[int, int]:
    return {labels[k]: labels[len(labels) - 1 - k] for k in range(len(labels))}


def decorated_bijection(mt: MarkedTableau) -> MarkedTableau:
    """Map a decorated tableau to a freely marked tableau with no free rows.

    The rows part of the divide is transposed (marks follow their lines) and
    its newly free columns are all marked; the columns part rides along.
    """
    if not is_decorated(mt):
        raise DomainError("mark-on-free-line", "decorated tableaux cannot mark free lines")
    p, q = divide(mt.tableau)
    rev = _reversal(p.labels)
    p_stats = free_stats(p)
    p_marks = {rev[l] for l in mt.marked if l in rev} | {rev[i] for i in p_stats.free_rows}
    q_marks = {l for l in mt.marked if l in set(q.labels)}
    return MarkedTableau(merge(transpose(p), q), frozenset(p_marks | q_marks))


def decorated_bijection_inv(mt: MarkedTableau) -> MarkedTableau:
    """Inverse: split the free columns by mark, transpose the marked part back."""
    from .decomposition import closure, restrict

    u = mt.tableau
    stats = free_stats(u)
    if stats.frow:
        raise DomainError("wrong-class", "image tableaux have no free rows")
    marked_free = sorted(j for j in stats.free_cols if j in mt.marked)
    plain_free = sorted(j for j in stats.free_cols if j not in mt.marked)
    r_labels: set[int] = set()
    for j in marked_free:
        r_labels |= closure(u, j)
    s_labels: set[int] = set()
    for j in plain_free:
        s_labels |= closure(u, j)
    r, s = restrict(u, r_labels), restrict(u, s_labels)
    rev = _reversal(r.labels)
    r_marks = {rev[l] for l in mt.marked if l in rev and l not in marked_free}
    s_marks = {l for l in mt.marked if l in s_labels}
    out = MarkedTableau(merge(transpose(r), s), frozenset(r_marks | s_marks))
    if not is_decorated(out):
        raise DomainError("mark-on-free-line", "inverse produced a mark on a free line")
    return out


def symmetric_tableaux(size: int, cap: int | None = None) -> Iterator[AltTableau]:
    """All transpose-fixed tableaux of even length, built constructively.

    Pick a tableau with no free columns on half the labels (one from each
    pair {i, size+1-i}), then merge it with its mirrored transpose.
    """
    if size % 2:
        raise DomainError("bad-size", f"symmetric tableaux have even length, got {size}")
    n = size // 2
    _check_cap(n, cap, "symmetric generation")  # the work scales with the halves
    halves = [t for t in all_tableaux(n, cap) if free_stats(t).fcol == 0]
    for choice in product(*[(i, size + 1 - i) for i in range(1, n + 1)]):
        chosen = sorted(choice)
        mirror = sorted(size + 1 - l for l in chosen)
        for u in halves:
            half = relabel(u, chosen)
            t = merge(half, relabel(transpose(half), mirror))
            assert transpose(t) == t
            yield t


def no_free_cell_count(n: int, cap: int | None = None) -> int:
    _check_cap(n, cap, "free-cell filtering")
    return sum(1 for t in all_tableaux(n, cap) if free_stats(t).fcell == 0)


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


# ---------------------------------------------------------------------------
# Formula verification


@dataclass(frozen=True)
class FormulaCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class FormulaReport:
    checks: tuple[FormulaCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        return [
            f"{c.name} {'PASS' if c.passed else 'FAIL'}{(' ' + c.detail) if c.detail else ''}"
            for c in self.checks
        ]


def _compare_counts(name: str, series: Series, counts: Sequence[int], n_max: int) -> FormulaCheck:
    for n in range(n_max + 1):
        expected = series.egf_count(n)
        if expected != counts[n]:
            return FormulaCheck(name, False, f"first failing coefficient n={n}: series {expected}, count {counts[n]}")
    return FormulaCheck(name, True)


def formula_report(n_max: int = 7, cap: int | None = None) -> FormulaReport:
    """Check every counting identity coefficientwise up to ``n_max``, exactly."""
    _check_cap(n_max, cap, "formula verification")
    order = n_max + 2
    tables = [count_table(n, cap) for n in range(n_max + 1)]
    totals = [t.total() for t in tables]
    no_free_rows = [sum(c for (i, _, _), c in t.counts.items() if i == 0) for t in tables]
    col_packed = [
        sum(c for (i, j, _), c in t.counts.items() if (i, j) == (0, 1)) for t in tables
    ]
    checks: list[FormulaCheck] = []

    total_series = geometric(order) * geometric(order)  # 1/(1-z)^2
    b_series = geometric(order)
    c_series = neg_log_one_minus_z(order)
    checks.append(_compare_counts("all tableaux vs 1/(1-z)^2", total_series, totals, n_max))
    checks.append(_compare_counts("no free rows vs 1/(1-z)", b_series, no_free_rows, n_max))
    checks.append(_compare_counts("column-packed vs -log(1-z)", c_series, col_packed, n_max))

    # Row-count refinement at fixed rational u: (1-u)/(exp(z(u-1)) - u).
    for u in (Fraction(2), Fraction(1, 2)):
        refined = (Series.z(order, u - 1).exp() - u).inverse() * (1 - u)
        name = f"no-free-row row counts at u={u}"
        ok = True
        detail = ""
        for n in range(n_max + 1):
            got = tables[n].rows_sum_no_free_rows(u)
            expected = refined.egf_count(n)
            if got != expected:
                ok, detail = False, f"first failing coefficient n={n}: series {expected}, count {got}"
                break
        checks.append(FormulaCheck(name, ok, detail))

    # Full refinement at fixed rational points; u=1 uses the limit form.
    for u, x, y in ((Fraction(2), Fraction(1), Fraction(1)),
                    (Fraction(1), Fraction(2), Fraction(3)),
                    (Fraction(3), Fraction(2), Fraction(5))):
        if u == 1:
            closed = geometric(order).pow_fraction(x + y)
        else:
            inner = (1 - u) * (1 - Series.z(order, 1 - u).exp() * u).inverse()
            closed = (Series.z(order, y * (1 - u)) + inner.log() * (x + y)).exp()
        name = f"refined counts at (u,x,y)=({u},{x},{y})"
        ok = True
        detail = ""
        for n in range(n_max + 1):
            got = tables[n].weighted_sum(u, x, y)
            expected = closed.egf_count(n)
            if got != expected:
                ok, detail = False, f"first failing coefficient n={n}: series {expected}, count {got}"
                break
        checks.append(FormulaCheck(name, ok, detail))

    # Product formula, as an exact polynomial identity.
    ok = True
    detail = ""
    for n in range(n_max + 1):
        if tables[n].free_poly() != product_formula(n):
            ok, detail = False, f"first failing degree n={n}"
            break
    checks.append(FormulaCheck("free-line polynomial equals rising product", ok, detail))

    # Differential relations: B' = A and C'' = A as coefficient shifts.
    checks.append(
        FormulaCheck(
            "derivative of no-free-row series equals full series",
            b_series.derivative().truncate(n_max) == total_series.truncate(n_max),
        )
    )
    checks.append(
        FormulaCheck(
            "second derivative of packed series equals full series",
            c_series.derivative().derivative().truncate(n_max) == total_series.truncate(n_max),
        )
    )
    return FormulaReport(tuple(checks))
