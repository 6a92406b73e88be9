"""Command-line front end: compute invariants, print reference tables, verify formulas.

Exit codes: 0 success, 1 usage or parameter error, 2 bad or disconnected
input graph, 3 verification mismatch (including cross-method disagreement
under `compute --method all`).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import numpy as np

from . import closed_form, exact, graphs, spectral

SPECTRAL_RTOL = 1e-6  # exact-vs-spectral agreement budget
SPECTRUM_ATOL = 1e-8  # per-entry eigenvalue multiset tolerance

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BAD_INPUT = 2
EXIT_MISMATCH = 3


class _UsageError(Exception):
    pass


class _BadInputError(Exception):
    pass


def format_fraction(q, places: int = 2) -> str:
    """Fixed-point decimal rendering of an exact rational, round-half-even."""
    scaled = Fraction(q) * 10**places
    units = round(scaled)
    sign = "-" if units < 0 else ""
    whole, frac = divmod(abs(units), 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


def render_exact(q) -> str:
    """Integer or p/q string for an exact value."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# compute


def _parse_deleted(text: str, n: int) -> frozenset[int]:
    try:
        positions = frozenset(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise _UsageError(f"--deleted expects comma-separated integers, got {text!r}") from None
    bad = [i for i in positions if not 1 <= i <= n]
    if bad:
        raise _UsageError(f"--deleted positions {sorted(bad)} outside 1..{n}")
    return positions


def _build_family_graph(args) -> tuple[graphs.Graph, str, int, int | None]:
    """Return (graph, family, n, r) for a --family invocation."""
    if args.n is None:
        raise _UsageError("--family requires --n")
    n = args.n
    fam = args.family
    if fam in ("gn", "grn"):
        deleted: frozenset[int] = frozenset()
        if fam == "grn":
            if args.deleted is not None and args.r is not None:
                raise _UsageError("give either --deleted or --r, not both")
            if args.deleted is not None:
                deleted = _parse_deleted(args.deleted, n)
            elif args.r is not None:
                if not 0 <= args.r <= n:
                    raise _UsageError(f"--r must lie in 0..{n}")
                rng = random.Random(args.seed)
                deleted = frozenset(rng.sample(range(1, n + 1), args.r))
        elif args.deleted is not None or args.r is not None:
            raise _UsageError("--deleted/--r apply only to --family grn")
        try:
            spec = graphs.PrismSpec(n, deleted)
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
        return graphs.prism_family(spec), fam, n, spec.r
    if fam == "cycle":
        try:
            return graphs.cycle(n), fam, n, None
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
    if fam == "path":
        try:
            return graphs.path(n), fam, n, None
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
    raise _UsageError(f"unknown family {fam!r}")


def _load_input_graph(path: str) -> graphs.Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _BadInputError(f"cannot read {path}: {exc}") from None
    try:
        return graphs.parse_edge_list(text)
    except graphs.EdgeListParseError as exc:
        raise _BadInputError(f"{path}: {exc}") from None
    except ValueError as exc:
        raise _BadInputError(f"{path}: {exc}") from None


def _closed_form_fields(family: str, n: int, r: int | None) -> dict:
    if family == "gn":
        rep = closed_form.family_report(n, 0)
        return {
            "kf": rep.kf,
            "kf_star": rep.kf_star,
            "tau": rep.tau,
            "wiener": rep.wiener,
            "gutman": rep.gutman,
        }
    if family == "grn":
        rep = closed_form.family_report(n, r or 0)
        return {
            "kf": rep.kf,
            "kf_star": None,
            "tau": rep.tau,
            "wiener": rep.wiener,
            "gutman": None,
        }
    if family == "cycle":
        return {
            "kf": closed_form.kf_cycle(n),
            "kf_star": None,
            "tau": None,
            "wiener": None,
            "gutman": None,
        }
    raise _UsageError(f"closed-form method is not available for family {family!r}")


def _spectral_fields(g: graphs.Graph) -> dict:
    eigs_l = spectral.eigenvalues_sym(spectral.laplacian(g))
    eigs_nl = spectral.eigenvalues_sym(spectral.normalized_laplacian(g))
    tc = spectral.spectral_tree_count(eigs_l, g.vertex_count)
    return {
        "kf": spectral.spectral_kf(eigs_l, g.vertex_count),
        "kf_star": spectral.spectral_kf_star(eigs_nl, g.edge_count),
        "tau": tc.value if tc.fits else tc.log_value,
        "tau_is_log": not tc.fits,
        "wiener": exact.wiener(g),
        "gutman": exact.gutman(g),
    }


def _rel_err(approx: float, truth) -> float:
    t = float(truth)
    if t == 0:
        return abs(approx)
    return abs(approx - t) / abs(t)


def _emit_record(record: dict, fmt: str) -> None:
    keys = ("family", "n", "r", "kf", "kf_star", "tau", "wiener", "gutman", "method")
    if fmt == "json":
        obj = {"family": record["family"], "n": record["n"], "r": record["r"]}
        for name in ("kf", "kf_star"):
            val = record[name]
            if val is None:
                num = den = None
            elif isinstance(val, float):
                num, den = val.as_integer_ratio()
            else:
                frac = Fraction(val)
                num, den = frac.numerator, frac.denominator
            obj[f"{name}_num"] = num
            obj[f"{name}_den"] = den
        for name in ("tau", "wiener", "gutman"):
            obj[name] = record[name]
        obj["method"] = record["method"]
        print(json.dumps(obj))
        return

    def cell(val) -> str:
        if val is None:
            return ""
        if isinstance(val, float):
            return repr(val)
        if isinstance(val, Fraction):
            return render_exact(val)
        return str(val)

    cells = [cell(record[k]) for k in keys]
    if fmt == "csv":
        print(",".join(keys))
        print(",".join(cells))
    else:  # markdown
        print("| " + " | ".join(keys) + " |")
        print("|" + "---|" * len(keys))
        print("| " + " | ".join(c or "-" for c in cells) + " |")


def cmd_compute(args) -> int:
    if (args.input is None) == (args.family is None):
        raise _UsageError("give exactly one of --family or --input")
    if args.input is not None:
        g = _load_input_graph(args.input)
        family, n, r = "file", g.vertex_count, None
    else:
        g, family, n, r = _build_family_graph(args)

    method = args.method
    if not graphs.is_connected(g):
        raise _BadInputError("input graph is disconnected")

    record = {"family": family, "n": n, "r": r, "method": method}
    mismatches: list[str] = []

    exact_rep = None
    if method in ("exact", "all"):
        exact_rep = exact.full_report(g)
        record.update(
            kf=exact_rep.kf,
            kf_star=exact_rep.kf_star,
            tau=exact_rep.tree_count,
            wiener=exact_rep.wiener,
            gutman=exact_rep.gutman,
        )
    if method in ("closed-form", "all"):
        if family == "file" or family == "path":
            if method == "closed-form":
                raise _UsageError("closed-form method needs --family gn, grn, or cycle")
        else:
            cf = _closed_form_fields(family, n, r)
            if method == "closed-form":
                record.update(cf)
            else:
                for name, val in cf.items():
                    if val is not None and record.get(name) != val:
                        mismatches.append(
                            f"closed-form {name}: expected {val}, exact gave {record.get(name)}"
                        )
    if method in ("spectral", "all"):
        sp = _spectral_fields(g)
        if method == "spectral":
            record.update(
                kf=sp["kf"],
                kf_star=sp["kf_star"],
                tau=sp["tau"] if not sp["tau_is_log"] else None,
                wiener=sp["wiener"],
                gutman=sp["gutman"],
            )
        else:
            assert exact_rep is not None
            if _rel_err(sp["kf"], exact_rep.kf) > SPECTRAL_RTOL:
                mismatches.append(f"spectral kf {sp['kf']} vs exact {exact_rep.kf}")
            if _rel_err(sp["kf_star"], exact_rep.kf_star) > SPECTRAL_RTOL:
                mismatches.append(f"spectral kf_star {sp['kf_star']} vs exact {exact_rep.kf_star}")
            log_exact = math.log(exact_rep.tree_count)
            log_spec = math.log(sp["tau"]) if not sp["tau_is_log"] else sp["tau"]
            if abs(log_spec - log_exact) > SPECTRAL_RTOL:
                mismatches.append(f"spectral tau log {log_spec} vs exact log {log_exact}")

    _emit_record(record, args.format)
    if mismatches:
        for m in mismatches:
            print(f"MISMATCH: {m}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


# ---------------------------------------------------------------------------
# table

TABLE1_RANGE = range(3, 12)
TABLE2_RANGE = range(3, 16)

_COLUMN_FUNCS = {
    "kf": lambda n: format_fraction(closed_form.kf_gn(n), 2),
    "tau": lambda n: str(closed_form.tau_gn(n)),
    "kfstar": lambda n: format_fraction(closed_form.kf_star_gn(n), 2),
}


def _parse_range(text: str) -> range:
    parts = text.split("..")
    if len(parts) != 2:
        raise _UsageError(f"--range expects A..B, got {text!r}")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise _UsageError(f"--range expects integers, got {text!r}") from None
    if a < 3 or b < a:
        raise _UsageError(f"--range needs 3 <= A <= B, got {text!r}")
    return range(a, b + 1)


def cmd_table(args) -> int:
    if args.table is not None:
        if args.table == 1:
            print("graph,kf,tau")
            for n in TABLE1_RANGE:
                print(f"G_{n},{format_fraction(closed_form.kf_gn(n), 2)},{closed_form.tau_gn(n)}")
        else:
            print("graph,kf_star")
            for n in TABLE2_RANGE:
                print(f"G_{n},{format_fraction(closed_form.kf_star_gn(n), 2)}")
        return EXIT_OK

    if args.family != "gn":
        raise _UsageError("table mode supports --family gn")
    if args.range is None:
        raise _UsageError("give --table 1|2 or --family gn --range A..B")
    ns = _parse_range(args.range)
    columns = [c.strip() for c in (args.columns or "kf,tau").split(",") if c.strip()]
    unknown = [c for c in columns if c not in _COLUMN_FUNCS]
    if unknown:
        raise _UsageError(f"unknown columns {unknown}; choose from kf, tau, kfstar")
    print("graph," + ",".join(columns))
    for n in ns:
        print(f"G_{n}," + ",".join(_COLUMN_FUNCS[c](n) for c in columns))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _exact_triple(case: tuple[int, tuple[int, ...]]) -> tuple[Fraction, int, int]:
    """kf, tau, wiener of one deleted-edge family member (worker-safe)."""
    n, dset = case
    g = graphs.prism_family(graphs.PrismSpec(n, frozenset(dset)))
    rm = exact.resistance_matrix(g)
    return rm.pairs_sum(), rm.den, exact.wiener(g)


def _verify_cases(n_max: int, exhaustive_max: int, rng: random.Random):
    cases: list[tuple[int, tuple[int, ...]]] = []
    for n in range(3, n_max + 1):
        if n <= exhaustive_max:
            for mask in range(2**n):
                dset = tuple(i + 1 for i in range(n) if mask >> i & 1)
                cases.append((n, dset))
        else:
            for r in range(n + 1):
                seen = set()
                for _ in range(5):
                    dset = tuple(sorted(rng.sample(range(1, n + 1), r)))
                    if dset not in seen:
                        seen.add(dset)
                        cases.append((n, dset))
    return cases


def _thread_count() -> int:
    raw = os.environ.get("INVKIT_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    mismatches: list[str] = []

    # closed form vs exact oracle on the intact family
    checked = 0
    for n in range(3, args.n_max + 1):
        g = graphs.prism_family(graphs.PrismSpec(n))
        rep = exact.full_report(g)
        expected = {
            "kf": closed_form.kf_gn(n),
            "kf_star": closed_form.kf_star_gn(n),
            "tau": closed_form.tau_gn(n),
            "wiener": closed_form.wiener_gn(n),
            "gutman": closed_form.gutman_gn(n),
        }
        got = {
            "kf": rep.kf,
            "kf_star": rep.kf_star,
            "tau": rep.tree_count,
            "wiener": rep.wiener,
            "gutman": rep.gutman,
        }
        for name in expected:
            checked += 1
            if expected[name] != got[name]:
                mismatches.append(
                    f"n={n} D=() invariant={name} expected={expected[name]} got={got[name]}"
                )
    print(f"intact family, closed form vs exact: {checked} checks")

    # deleted-edge sweep, exhaustive below the cutoff, sampled above
    cases = _verify_cases(args.n_max, args.exhaustive_d_max, rng)
    threads = _thread_count()
    if threads > 1:
        try:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(_exact_triple, cases, chunksize=16))
        except OSError:
            results = [_exact_triple(c) for c in cases]
    else:
        results = [_exact_triple(c) for c in cases]
    for (n, dset), (kf, tau, w) in zip(cases, results):
        r = len(dset)
        if kf != closed_form.kf_grn(n, r):
            mismatches.append(
                f"n={n} D={dset} invariant=kf expected={closed_form.kf_grn(n, r)} got={kf}"
            )
        if tau != closed_form.tau_grn(n, r):
            mismatches.append(
                f"n={n} D={dset} invariant=tau expected={closed_form.tau_grn(n, r)} got={tau}"
            )
        if w != closed_form.wiener_grn(n, r):
            mismatches.append(
                f"n={n} D={dset} invariant=wiener expected={closed_form.wiener_grn(n, r)} got={w}"
            )
    print(f"deleted-edge sweep: {len(cases)} members, 3 invariants each")

    # spectrum split checks
    split_checks = 0
    for n in range(3, args.n_max + 1):
        for r in sorted({0, n // 2, n}):
            dset = frozenset(rng.sample(range(1, n + 1), r))
            g = graphs.prism_family(graphs.PrismSpec(n, dset))
            split = spectral.involution_split(g, graphs.rim_swap(n))
            full = spectral.eigenvalues_sym(spectral.laplacian(g))
            where = f"n={n} D={tuple(sorted(dset))}"
            gap = float(np.max(np.abs(split.combined() - full)))
            if gap > SPECTRUM_ATOL:
                mismatches.append(
                    f"{where} invariant=split-spectrum expected=gap<={SPECTRUM_ATOL} got={gap:.3e}"
                )
            predicted = np.sort(
                np.concatenate([2.0 * spectral.cycle_spectrum(n), np.diag(split.block_s)])
            )
            gap = float(np.max(np.abs(predicted - full)))
            if gap > SPECTRUM_ATOL:
                mismatches.append(
                    f"{where} invariant=predicted-spectrum expected=gap<={SPECTRUM_ATOL} got={gap:.3e}"
                )
            if not np.array_equal(split.block_a, 2 * spectral.laplacian(graphs.cycle(n))):
                mismatches.append(
                    f"{where} invariant=block-a expected=2*cycle-laplacian got={split.block_a.tolist()}"
                )
            diag = np.diag(split.block_s)
            if not (
                np.array_equal(split.block_s, np.diag(diag))
                and sorted(set(diag.tolist())) in ([4], [6], [4, 6])
                and int(np.count_nonzero(diag == 4)) == r
            ):
                mismatches.append(
                    f"{where} invariant=block-s expected=diag of 4s({r}) and 6s got={diag.tolist()}"
                )
            split_checks += 1
    print(f"spectrum split: {split_checks} members")

    if mismatches:
        for m in mismatches:
            print(f"MISMATCH: {m}")
        print(f"FAIL: {len(mismatches)} mismatches")
        return EXIT_MISMATCH
    print("PASS: all checks agree")
    return EXIT_OK


# ---------------------------------------------------------------------------
# ratio


def cmd_ratio(args) -> int:
    if args.family not in ("gn", "grn"):
        raise _UsageError("ratio supports --family gn or grn")
    given = [x for x in (args.n, args.n_list, args.n_range) if x is not None]
    if len(given) != 1:
        raise _UsageError("give exactly one of --n, --n-list, --n-range")
    if args.n is not None:
        ns = [args.n]
    elif args.n_list is not None:
        try:
            ns = [int(tok) for tok in args.n_list.split(",") if tok.strip()]
        except ValueError:
            raise _UsageError(f"--n-list expects integers, got {args.n_list!r}") from None
    else:
        if args.step < 1:
            raise _UsageError(f"--step must be >= 1, got {args.step}")
        ns = list(_parse_range(args.n_range))[:: args.step]
    r = args.r if args.family == "grn" else 0
    print("n,r,ratio,deviation")
    for n in ns:
        try:
            ratio, dev = closed_form.ratio_report(n, r)
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
        print(f"{n},{r},{format_fraction(ratio, 6)},{format_fraction(dev, 6)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser and entry points


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invkit",
        description="Exact resistance-distance invariants for graphs and the doubled-cycle family.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="invariants of one graph or family member")
    p.add_argument("--family", choices=("gn", "grn", "cycle", "path"))
    p.add_argument("--n", type=int)
    p.add_argument("--deleted", help="comma-separated vertical-edge positions, 1-based")
    p.add_argument("--r", type=int, help="delete this many random vertical edges")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--input", help="edge-list file")
    p.add_argument("--method", choices=("exact", "spectral", "closed-form", "all"), default="exact")
    p.add_argument("--format", choices=("csv", "json", "markdown"), default="csv")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="reference tables of closed-form values")
    p.add_argument("--table", type=int, choices=(1, 2))
    p.add_argument("--family", choices=("gn",))
    p.add_argument("--range", help="A..B rim lengths")
    p.add_argument("--columns", help="comma list from kf, tau, kfstar")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="closed forms vs the exact oracle, plus spectrum checks")
    p.add_argument("--n-max", type=int, default=20, dest="n_max")
    p.add_argument("--exhaustive-d-max", type=int, default=8, dest="exhaustive_d_max")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ratio", help="Kf/Wiener ratio and its distance from 1/6")
    p.add_argument("--family", choices=("gn", "grn"), default="gn")
    p.add_argument("--n", type=int)
    p.add_argument("--n-list", dest="n_list")
    p.add_argument("--n-range", dest="n_range")
    p.add_argument("--step", type=int, default=1)
    p.add_argument("--r", type=int, default=0)
    p.set_defaults(func=cmd_ratio)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _BadInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except graphs.DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
