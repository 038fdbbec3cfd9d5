"""Command-line front end; a thin layer over the library modules.

Input comes from a file argument or standard input, output goes to standard
output.  Exit codes: 0 on success, 1 on validation or domain failures, 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import checks as checks_mod
from .core import (
    AltTableau,
    empty_tableau,
    free_stats,
    from_perm_tableau,
    parse_perm_tableau,
    parse_tableau,
    perm_tableau_stats,
    render_perm_tableau,
    render_tableau,
    to_perm_tableau,
)
from .decomposition import format_split, merge_all, split
from .enumeration import (
    AsepParams,
    all_tableaux,
    asep_distribution,
    count_table,
)
from .errors import TableauError
from .permutations import (
    from_permutation,
    from_signed_permutation,
    insertion_steps,
    parse_signed,
    parse_word,
    render_signed,
    render_word,
    to_permutation,
    to_signed_permutation,
)
from .trees import (
    arc_diagram,
    arcs_to_forest,
    binary_pair,
    binary_pair_inv,
    from_forest,
    parse_arcs,
    parse_bin_pair,
    parse_forest,
    render_arcs,
    render_bin_pair,
    render_forest,
    render_tree,
    to_forest,
)

REPS = ("alt", "permtab", "forest", "arcs", "bintrees", "perm", "signedperm")


def _read_input(path: str | None) -> str:
    if path and path != "-":
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _parse_alt(text: str) -> AltTableau:
    # Empty input denotes the empty tableau at the CLI level; the strict
    # library format for it is "|".
    if not text.strip():
        return empty_tableau()
    return parse_tableau(text)


def _render_alt(t: AltTableau) -> str:
    return "" if not t.labels else render_tableau(t)


def _to_alt(rep: str, text: str) -> AltTableau:
    if rep == "alt":
        return _parse_alt(text)
    if rep == "permtab":
        return from_perm_tableau(parse_perm_tableau(text))
    if rep == "forest":
        return from_forest(parse_forest(text))
    if rep == "arcs":
        return from_forest(arcs_to_forest(parse_arcs(text)))
    if rep == "bintrees":
        return binary_pair_inv(parse_bin_pair(text))
    if rep == "perm":
        return from_permutation(parse_word(text))
    if rep == "signedperm":
        return from_signed_permutation(parse_signed(text))
    raise TableauError(f"unknown representation {rep!r}")


def _from_alt(rep: str, t: AltTableau, algo: str, separator: int) -> str:
    if rep == "alt":
        return _render_alt(t)
    if rep == "permtab":
        return render_perm_tableau(to_perm_tableau(t))
    if rep == "forest":
        return render_forest(to_forest(t))
    if rep == "arcs":
        return render_arcs(arc_diagram(t))
    if rep == "bintrees":
        return render_bin_pair(binary_pair(t))
    if rep == "perm":
        if algo == "cn":
            return render_word(insertion_steps(t)[-1])
        return render_word(to_permutation(t, separator))
    if rep == "signedperm":
        return render_signed(to_signed_permutation(t))
    raise TableauError(f"unknown representation {rep!r}")


def cmd_validate(args) -> int:
    text = _read_input(args.file)
    if args.format == "alt":
        t = parse_tableau(text)
        print(f"valid alternative tableau of length {len(t)}")
    else:
        p = parse_perm_tableau(text)
        print(f"valid permutation tableau of length {len(p)}")
    return 0


def cmd_stats(args) -> int:
    text = _read_input(args.file)
    if args.format == "alt":
        stats = free_stats(_parse_alt(text))
        print(f"frow={stats.frow} fcol={stats.fcol} fcell={stats.fcell}")
        print("free_rows=" + ",".join(map(str, sorted(stats.free_rows))))
        print("free_cols=" + ",".join(map(str, sorted(stats.free_cols))))
        print("free_cells=" + ";".join(f"({i},{j})" for i, j in sorted(stats.free_cells)))
    else:
        stats = perm_tableau_stats(parse_perm_tableau(text))
        print("unrestricted_rows=" + ",".join(map(str, sorted(stats.unrestricted_rows))))
        print("top_one_cols=" + ",".join(map(str, sorted(stats.top_one_cols))))
        print(
            "superfluous_cells="
            + ";".join(f"({i},{j})" for i, j in sorted(stats.superfluous_cells))
        )
    return 0


def cmd_convert(args) -> int:
    if args.trace and not (args.to == "perm" and args.algo == "cn"):
        print("--trace is only available with --to perm --algo cn", file=sys.stderr)
        return 2
    t = _to_alt(getattr(args, "from"), _read_input(args.file))
    if args.trace:
        for step in insertion_steps(t):
            print(render_word(step))
        return 0
    print(_from_alt(args.to, t, args.algo, args.separator))
    return 0


def cmd_split(args) -> int:
    t = _parse_alt(_read_input(args.file))
    out = format_split(split(t))
    if out:
        print(out)
    return 0


def cmd_merge(args) -> int:
    parts = []
    for line in _read_input(args.file).splitlines():
        line = line.strip()
        if not line:
            continue
        if " :: " in line:
            line = line.split(" :: ", 1)[1]
        parts.append(parse_tableau(line))
    print(_render_alt(merge_all(parts)))
    return 0


def cmd_enumerate(args) -> int:
    for t in all_tableaux(args.n):
        print(render_tableau(t))
    return 0


def cmd_count(args) -> int:
    table = count_table(args.n, jobs=args.jobs)
    for (i, j, k), c in sorted(table.counts.items()):
        print(f"{args.n}\t{i}\t{j}\t{k}\t{c}")
    for (i, j), c in sorted(table.by_free().items()):
        print(f"#by_free\t{args.n}\t{i}\t{j}\t{c}")
    print(f"#total\t{args.n}\t{table.total()}")
    return 0


def cmd_verify(args) -> int:
    results = checks_mod.run_suite(args.suite, args.n)
    failed = 0
    for c in results:
        line = f"{c.name} {'PASS' if c.passed else 'FAIL'}"
        if c.detail:
            line += f" {c.detail}"
        print(line)
        failed += 0 if c.passed else 1
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def cmd_asep(args) -> int:
    params = AsepParams(args.n, Fraction(args.q), Fraction(args.alpha), Fraction(args.beta))
    dist = asep_distribution(params)
    for state, prob in dist.items():
        print(f"{state} {prob} [{float(prob):.6f}]")
    return 0


def cmd_render(args) -> int:
    t = _parse_alt(_read_input(args.file))
    if args.style == "grid":
        print(render_tableau(t, "grid"))
    elif args.style == "forest":
        for tree in to_forest(t).trees:
            print(render_tree(tree))
    else:
        print(render_arcs(arc_diagram(t)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alttab",
        description="Alternative-tableau toolkit: validate, convert, enumerate, verify.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("validate", cmd_validate, help="check a tableau and report every violation")
    p.add_argument("--format", choices=("alt", "permtab"), default="alt")
    p.add_argument("file", nargs="?", help="input file, defaults to stdin")

    p = add("stats", cmd_stats, help="free-line statistics of a tableau")
    p.add_argument("--format", choices=("alt", "permtab"), default="alt")
    p.add_argument("file", nargs="?")

    p = add("convert", cmd_convert, help="convert between representations")
    p.add_argument("--from", dest="from", choices=REPS, required=True)
    p.add_argument("--to", choices=REPS, required=True)
    p.add_argument("--algo", choices=("forest", "cn"), default="forest",
                   help="permutation encoding: forest bijection or column insertion")
    p.add_argument("--trace", action="store_true",
                   help="print the insertion steps (only with --to perm --algo cn)")
    p.add_argument("--separator", type=int, default=0,
                   help="letter placed below all labels in the permutation word")
    p.add_argument("file", nargs="?")

    p = add("split", cmd_split, help="packed components, one per line")
    p.add_argument("file", nargs="?")

    p = add("merge", cmd_merge, help="merge disjointly labeled tableaux, one per line")
    p.add_argument("file", nargs="?")

    p = add("enumerate", cmd_enumerate, help="all tableaux of a given length")
    p.add_argument("--n", type=int, required=True)

    p = add("count", cmd_count, help="counts by free rows, free columns and rows")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1, help="partition the shapes for counting")

    p = add("verify", cmd_verify, help="run a verification suite")
    p.add_argument("--suite", choices=("bijections", "counts", "series", "asep", "all"),
                   required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("asep", cmd_asep, help="exact stationary distribution on n sites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", default="1")
    p.add_argument("--alpha", default="1")
    p.add_argument("--beta", default="1")

    p = add("render", cmd_render, help="ASCII rendering of a tableau")
    p.add_argument("--style", choices=("grid", "forest", "arcs"), default="grid")
    p.add_argument("file", nargs="?")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except TableauError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
