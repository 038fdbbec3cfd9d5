"""Exhaustive verification batteries behind the ``verify`` command.

Each suite runs the corresponding identities over every tableau up to the
requested size and reports one named PASS/FAIL result per check; everything
is exact, so there are no tolerances anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable

from .core import (
    free_stats,
    from_perm_tableau,
    parse_tableau,
    perm_tableau_stats,
    render_tableau,
    to_perm_tableau,
    transpose,
)
from .decomposition import merge_all, split
from .enumeration import (
    AsepParams,
    FormulaCheck,
    all_tableaux,
    all_via_perm,
    asep_distribution,
    catalan,
    chain_stationary,
    count_table,
    decorated_count,
    formula_report,
    no_free_cell_count,
    symmetric_tableaux,
)
from .permutations import (
    from_permutation,
    perm_stats,
    to_permutation,
    to_permutation_by_insertion,
)
from .trees import (
    arc_diagram,
    arcs_to_forest,
    binary_pair,
    binary_pair_inv,
    crossings,
    forest_to_arcs,
    from_forest,
    out_crossings,
    to_forest,
    validate_forest,
)

ASEP_TRIPLES = (
    (Fraction(1), Fraction(1, 2), Fraction(1, 3)),
    (Fraction(1, 2), Fraction(1), Fraction(1)),
    (Fraction(1, 3), Fraction(2, 3), Fraction(1, 2)),
)


def _all_hold(name: str, pairs: Iterable[tuple[bool, str]]) -> FormulaCheck:
    for ok, detail in pairs:
        if not ok:
            return FormulaCheck(name, False, detail)
    return FormulaCheck(name, True)


def _per_tableau(name: str, n_max: int, prop: Callable) -> FormulaCheck:
    def run():
        for n in range(n_max + 1):
            for t in all_tableaux(n):
                yield prop(t), f"fails on {render_tableau(t)}"

    return _all_hold(name, run())


def bijection_checks(n_max: int) -> list[FormulaCheck]:
    checks = [
        _per_tableau(
            "merge of split components restores the tableau",
            n_max,
            lambda t: merge_all(split(t)) == t,
        ),
        _per_tableau(
            "forest encoding round trip",
            n_max,
            lambda t: from_forest(to_forest(t)) == t,
        ),
        _per_tableau(
            "arc diagram agrees with the forest route",
            n_max,
            lambda t: arc_diagram(t) == forest_to_arcs(to_forest(t)),
        ),
        _per_tableau(
            "arc diagram decodes back to the forest",
            n_max,
            lambda t: arcs_to_forest(arc_diagram(t)) == to_forest(t),
        ),
        _per_tableau(
            "permutation-tableau round trip",
            n_max,
            lambda t: from_perm_tableau(to_perm_tableau(t)) == t,
        ),
        _per_tableau(
            "parse of render is the identity",
            n_max,
            lambda t: parse_tableau(render_tableau(t)) == t,
        ),
        _per_tableau(
            "permutation encoding round trip",
            n_max,
            lambda t: from_permutation(to_permutation(t)) == t,
        ),
        _per_tableau(
            "insertion algorithm matches the forest bijection",
            n_max,
            lambda t: to_permutation_by_insertion(t) == to_permutation(t),
        ),
        _per_tableau(
            "transposition is an involution",
            n_max,
            lambda t: transpose(transpose(t)) == t,
        ),
        _per_tableau(
            "binary-tree pair round trip",
            min(n_max, 5),
            lambda t: binary_pair_inv(binary_pair(t)) == t,
        ),
        _per_tableau(
            "free cells equal arc out-crossings",
            n_max,
            lambda t: out_crossings(arc_diagram(t)) == free_stats(t).free_cells,
        ),
        _per_tableau("forests validate", n_max, _forest_valid),
    ]
    checks.append(
        _per_tableau("letter statistics transport", n_max, _statistics_transport)
    )
    checks.append(
        _per_tableau("permutation-tableau statistics transport", n_max, _perm_transport)
    )
    return checks


def _forest_valid(t) -> bool:
    validate_forest(to_forest(t))
    return True


def _statistics_transport(t) -> bool:
    stats = free_stats(t)
    word_stats = perm_stats(to_permutation(t))
    keep = set(t.labels)
    return (
        set(t.rows) == word_stats.ascent_letters & keep
        and set(t.columns) == word_stats.descent_letters & keep
        and stats.free_rows == word_stats.rl_minima & keep
        and stats.free_cols == word_stats.shifted_rl_maxima & keep
    )


def _perm_transport(t) -> bool:
    stats = free_stats(t)
    p = perm_tableau_stats(to_perm_tableau(t))
    return (
        p.top_one_cols == stats.free_cols
        and p.unrestricted_rows == stats.free_rows
        and p.superfluous_cells == stats.free_cells
    )


def count_checks(n_max: int) -> list[FormulaCheck]:
    checks: list[FormulaCheck] = []
    tables = {n: count_table(n) for n in range(n_max + 1)}
    counts = {n: tables[n].total() for n in range(n_max + 1)}
    for n in range(n_max + 1):
        checks.append(
            FormulaCheck(
                f"A({n})={counts[n]}",
                counts[n] == math.factorial(n + 1),
                "" if counts[n] == math.factorial(n + 1) else f"expected {math.factorial(n + 1)}",
            )
        )
    for n in range(min(n_max, 5) + 1):
        same = set(all_tableaux(n)) == set(all_via_perm(n))
        checks.append(FormulaCheck(f"generator sets agree at n={n}", same))
    for n in range(n_max + 1):
        distinct = len({(t.word, t.arrows) for t in all_via_perm(n)})
        checks.append(
            FormulaCheck(
                f"permutation generator count at n={n}",
                distinct == counts[n],
                "" if distinct == counts[n] else f"{distinct} != {counts[n]}",
            )
        )
    for n in range(n_max + 1):
        got = no_free_cell_count(n)
        want = catalan(n + 1)
        checks.append(FormulaCheck(f"free-cell-free count at n={n} is {want}", got == want))
    crossing_free = _all_hold(
        "free-cell-free diagrams have no crossings",
        (
            (not crossings(arc_diagram(t)), f"fails on {render_tableau(t)}")
            for n in range(min(n_max, 6) + 1)
            for t in all_tableaux(n)
            if free_stats(t).fcell == 0
        ),
    )
    checks.append(crossing_free)
    for n in range(n_max + 1):
        got = decorated_count(n)
        want = 2**n * math.factorial(n)
        checks.append(FormulaCheck(f"decorated count at n={n} is {want}", got == want))
    for size in range(0, n_max + 1, 2):
        want = 2 ** (size // 2) * math.factorial(size // 2)
        built = {(t.word, t.arrows) for t in symmetric_tableaux(size)}
        filtered = sum(1 for t in all_tableaux(size) if transpose(t) == t)
        checks.append(
            FormulaCheck(
                f"symmetric tableaux of size {size}: {want}",
                len(built) == want and filtered == want,
            )
        )
    for n in range(max(0, n_max - 1)):
        mid = tables[n + 1].by_free()
        far = tables[n + 2].by_free()
        chain_ok = (
            counts[n]
            == sum(c for (i, j), c in mid.items() if j == 0)
            == sum(c for (i, j), c in mid.items() if i == 0)
            == far.get((0, 1), 0)
            == far.get((1, 0), 0)
        )
        checks.append(FormulaCheck(f"cut/block cardinality chain at n={n}", chain_ok))
    return checks


def series_checks(n_max: int) -> list[FormulaCheck]:
    return list(formula_report(n_max).checks)


def asep_checks(n_max: int) -> list[FormulaCheck]:
    checks = []
    for n in range(n_max + 1):
        for q, alpha, beta in ASEP_TRIPLES:
            p = AsepParams(n, q, alpha, beta)
            weights = asep_distribution(p)
            solved = chain_stationary(p)
            name = f"stationary law at n={n}, (q,a,b)=({q},{alpha},{beta})"
            ok = (
                weights == solved
                and sum(weights.values()) == 1
                and sum(solved.values()) == 1
            )
            checks.append(FormulaCheck(name, ok))
    return checks


SUITES = {
    "bijections": bijection_checks,
    "counts": count_checks,
    "series": series_checks,
    "asep": asep_checks,
}


def run_suite(suite: str, n_max: int) -> list[FormulaCheck]:
    if suite == "all":
        out = []
        for fn in SUITES.values():
            out.extend(fn(n_max))
        return out
    return SUITES[suite](n_max)
