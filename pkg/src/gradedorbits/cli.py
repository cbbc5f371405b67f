"""Command-line front end: enumeration listings, counting tables, catalogs
and verification reports, in text, CSV or JSON form.

Exit codes: 0 success/verified, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .diagrams import (
    MINUS,
    canonicalize,
    diagram_to_json,
    enumerate_by_size,
    enumerate_diagrams,
    partitions,
)
from .orbits import (
    CASES,
    GradingSpec,
    StratumAI,
    TYPE_II_CASES,
    admissible_for_case,
    component_group_order,
    duality,
    is_distinguished_ai,
    is_distinguished_ii,
)
from .oracle import (
    build_representative,
    is_distinguished_oracle,
    matrix_to_strings,
    orbit_dim,
)
from .series import (
    COUNT_FAMILIES,
    gf_distinguished_ai,
    gf_distinguished_ii,
    gf_orbit_count,
    weight_count,
)
from .sheaves import catalog_ai, catalog_ii, cuspidal_ai, verify_bijection

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

FAMILY_CASE = {"A": "AII", "C": "CII", "D": "DII"}


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise ValueError(f"--dims must be a comma-separated integer list, got {text!r}")


def _grading_from_args(args) -> GradingSpec:
    if args.case == "AII":
        if args.m0 is None:
            raise ValueError("case AII requires --m0")
        modulus = args.m0
    else:
        if args.m is None:
            raise ValueError(f"case {args.case} requires --m")
        modulus = args.m
    if args.dims is None:
        raise ValueError("this command requires --dims")
    return GradingSpec(args.case, modulus, _parse_dims(args.dims))


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _render_table(header, rows, fmt: str) -> str:
    cells = [[str(v) for v in row] for row in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(cells)
        return buf.getvalue()
    widths = [len(h) for h in header]
    for row in cells:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(header)).rstrip()]
    for row in cells:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines)


def _bool(v: bool) -> str:
    return "true" if v else "false"


def psi_to_json(psi) -> dict:
    return {"mod": psi.modulus, "idx": psi.index, "order": psi.order}


def stratum_to_json(stratum) -> dict:
    if isinstance(stratum, StratumAI):
        return {
            "a": stratum.a,
            "l": stratum.rank,
            "mu": diagram_to_json(stratum.mu),
            "d_check": stratum.d_check,
            "braid_rank": stratum.rank,
        }
    return {"k": stratum.rank, "mu": diagram_to_json(stratum.mu)}


def label_to_json(label) -> dict:
    return {
        "type": label.case,
        "stratum": stratum_to_json(label.stratum),
        "psi": psi_to_json(label.psi),
        "tau": [list(component) for component in label.tau],
        "flags": {
            "nilp": label.nilpotent_support,
            "full": label.full_support,
            "cuspidal_conj": label.cuspidal_conjectural,
        },
    }


def _tau_str(tau) -> str:
    return json.dumps([list(c) for c in tau], separators=(",", ":"))


# ---------------------------------------------------------------------------
# subcommands


def cmd_orbits(args) -> int:
    grading = _grading_from_args(args)
    diagrams = enumerate_diagrams(grading.modulus, MINUS, grading.dims)
    if grading.case != "AI":
        diagrams = [d for d in diagrams if admissible_for_case(d, grading.case)]
    entries = []
    for lam in diagrams:
        if grading.case == "AI":
            entries.append(
                {
                    "diagram": lam,
                    "d_lambda": lam.part_gcd,
                    "distinguished": is_distinguished_ai(lam, 1),
                    "orbit_dim": orbit_dim(lam, grading),
                }
            )
        else:
            entries.append(
                {
                    "diagram": lam,
                    "component_group": component_group_order(lam, grading),
                    "distinguished": is_distinguished_ii(lam),
                }
            )
    if args.format == "json":
        payload = {
            "case": grading.case,
            "modulus": grading.modulus,
            "dims": list(grading.dims),
            "orbits": [
                {**e, "diagram": diagram_to_json(e["diagram"])} for e in entries
            ],
        }
        _emit(args, json.dumps(payload, indent=2))
        return EXIT_OK
    if grading.case == "AI":
        header = ["diagram", "d_lambda", "distinguished", "orbit_dim"]
        rows = [
            (str(e["diagram"]), e["d_lambda"], _bool(e["distinguished"]), e["orbit_dim"])
            for e in entries
        ]
    else:
        header = ["diagram", "component_group", "distinguished"]
        rows = [
            (str(e["diagram"]), e["component_group"], _bool(e["distinguished"]))
            for e in entries
        ]
    _emit(args, _render_table(header, rows, args.format))
    return EXIT_OK


def _count_rows(args):
    family = args.family
    n_max = args.n
    if n_max < 0:
        raise ValueError("--n must be nonnegative")
    rows = []
    if family == "dist-AI":
        if args.m is None or args.a is None:
            raise ValueError("family dist-AI requires --m and --a")
        m, a = args.m, args.a
        gf = gf_distinguished_ai(m, a, n_max)
        for n in range(n_max + 1):
            coeff = gf.coefficient(n)
            weights = sum(
                weight_count(mu, family, m=m, a=a) for mu in partitions(n)
            )
            enum = 0
            for small in enumerate_by_size(m, MINUS, n):
                scaled = canonicalize(
                    [(r.length * a, r.start) for r in small.rows], m, MINUS
                )
                if is_distinguished_ai(scaled, a):
                    enum += 1
            rows.append((n, coeff, weights, enum))
        return rows
    if args.l is None:
        raise ValueError(f"family {family} requires --l")
    l = args.l
    base = family.removeprefix("dist-")
    modulus = 2 * l + 1 if base == "A" else 2 * l
    case = FAMILY_CASE[base]
    distinguished = family.startswith("dist-")
    gf = (
        gf_distinguished_ii(base, l, n_max)
        if distinguished
        else gf_orbit_count(base, l, n_max)
    )
    for n in range(n_max + 1):
        coeff = gf.coefficient(n)
        weights = sum(weight_count(mu, family, l=l) for mu in partitions(n))
        enum = 0
        for lam in enumerate_by_size(modulus, MINUS, 2 * n):
            if not admissible_for_case(lam, case):
                continue
            if distinguished and not is_distinguished_ii(lam):
                continue
            enum += 1
        rows.append((n, coeff, weights, enum))
    return rows


def cmd_count(args) -> int:
    rows = _count_rows(args)
    table = [
        (n, coeff, weights, enum, _bool(coeff == weights == enum))
        for n, coeff, weights, enum in rows
    ]
    all_match = all(coeff == weights == enum for _, coeff, weights, enum in rows)
    header = ["n", "gf_coeff", "weight_sum", "enum_count", "match"]
    if args.format == "json":
        payload = {
            "family": args.family,
            "rows": [
                {
                    "n": n,
                    "gf_coeff": c,
                    "weight_sum": w,
                    "enum_count": e,
                    "match": c == w == e,
                }
                for n, c, w, e in rows
            ],
        }
        _emit(args, json.dumps(payload, indent=2))
    else:
        _emit(args, _render_table(header, table, args.format))
    return EXIT_OK if all_match else EXIT_VERIFY_FAILED


def _labels_output(args, labels, context) -> None:
    if args.format == "json":
        payload = {**context, "labels": [label_to_json(lab) for lab in labels]}
        _emit(args, json.dumps(payload, indent=2))
        return
    if context.get("case") == "AI":
        header = ["a", "l", "mu", "d_check", "psi", "tau", "nilp", "full", "cuspidal_conj"]
        rows = [
            (
                lab.stratum.a,
                lab.stratum.rank,
                str(lab.stratum.mu),
                lab.stratum.d_check,
                f"{lab.psi.index}/{lab.psi.modulus}",
                _tau_str(lab.tau),
                _bool(lab.nilpotent_support),
                _bool(lab.full_support),
                _bool(lab.cuspidal_conjectural),
            )
            for lab in labels
        ]
    else:
        header = ["k", "mu", "rho", "nilp", "full"]
        rows = [
            (
                lab.stratum.rank,
                str(lab.stratum.mu),
                json.dumps(list(lab.tau[0]), separators=(",", ":")),
                _bool(lab.nilpotent_support),
                _bool(lab.full_support),
            )
            for lab in labels
        ]
    _emit(args, _render_table(header, rows, args.format))


def cmd_sheaves(args) -> int:
    grading = _grading_from_args(args)
    if grading.case == "AI":
        if args.a is None:
            raise ValueError("case AI requires --a")
        labels = catalog_ai(grading, args.a)
        context = {"case": "AI", "modulus": grading.modulus, "dims": list(grading.dims), "a": args.a}
    else:
        labels = catalog_ii(grading)
        context = {"case": grading.case, "modulus": grading.modulus, "dims": list(grading.dims)}
    _labels_output(args, labels, context)
    return EXIT_OK


def cmd_verify(args) -> int:
    grading = _grading_from_args(args)
    if grading.case == "AI":
        if args.a is None:
            raise ValueError("case AI requires --a")
        report = verify_bijection(grading, args.a)
    else:
        report = verify_bijection(grading)
    if args.format == "json":
        payload = {
            "case": report.case,
            "a": report.a,
            "orbital_complexes": report.complexes,
            "catalog_labels": report.labels,
            "counts_equal": report.counts_equal,
            "injective": report.injective,
            "surjective": report.surjective,
            "ok": report.ok,
        }
        _emit(args, json.dumps(payload, indent=2))
    else:
        lines = [
            f"case={report.case}",
            f"a={report.a}",
            f"orbital_complexes={report.complexes}",
            f"catalog_labels={report.labels}",
            f"counts_equal={_bool(report.counts_equal)}",
            f"injective={_bool(report.injective)}",
            f"surjective={_bool(report.surjective)}",
            f"result={'PASS' if report.ok else 'FAIL'}",
        ]
        _emit(args, "\n".join(lines))
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def cmd_cuspidal(args) -> int:
    grading = _grading_from_args(args)
    if grading.case != "AI":
        raise ValueError("the cuspidal catalog is available for case AI only")
    labels = cuspidal_ai(grading)
    context = {"case": "AI", "modulus": grading.modulus, "dims": list(grading.dims)}
    _labels_output(args, labels, context)
    return EXIT_OK


def cmd_distinguished(args) -> int:
    if (args.dims is None) == (args.size is None):
        raise ValueError("give exactly one of --dims or --N")
    if args.case == "AII":
        if args.m0 is None:
            raise ValueError("case AII requires --m0")
        modulus = args.m0
    else:
        if args.m is None:
            raise ValueError(f"case {args.case} requires --m")
        modulus = args.m
    if args.oracle and args.case != "AI":
        raise ValueError("--oracle applies to case AI only")
    if args.oracle and args.a != 1:
        raise ValueError("the nilpotency oracle tests order 1 distinguishedness only")
    if args.dump_matrices and args.format != "json":
        raise ValueError("--dump-matrices requires --format json")
    if args.dims is not None:
        diagrams = enumerate_diagrams(modulus, MINUS, _parse_dims(args.dims))
    else:
        diagrams = enumerate_by_size(modulus, MINUS, args.size)
    if args.case in TYPE_II_CASES:
        diagrams = [d for d in diagrams if admissible_for_case(d, args.case)]
    entries = []
    all_agree = True
    for lam in diagrams:
        if args.case == "AI":
            pred = is_distinguished_ai(lam, args.a)
        else:
            pred = is_distinguished_ii(lam)
        entry = {"diagram": lam, "distinguished": pred}
        if args.oracle:
            verdict = is_distinguished_oracle(lam, trials=args.trials, seed=args.seed)
            entry["oracle"] = verdict
            entry["agrees"] = verdict == pred
            all_agree = all_agree and entry["agrees"]
        entries.append(entry)
    if args.format == "json":
        payload_rows = []
        for e in entries:
            row = {**e, "diagram": diagram_to_json(e["diagram"])}
            if args.dump_matrices:
                lam = e["diagram"]
                x = build_representative(lam if lam.sign == "+" else duality(lam))
                row["blocks"] = [matrix_to_strings(b) for b in x.blocks]
            payload_rows.append(row)
        payload = {
            "case": args.case,
            "modulus": modulus,
            "a": args.a if args.case == "AI" else None,
            "seed": args.seed if args.oracle else None,
            "trials": args.trials if args.oracle else None,
            "diagrams": payload_rows,
        }
        _emit(args, json.dumps(payload, indent=2))
    else:
        header = ["diagram", "distinguished"] + (["oracle", "agrees"] if args.oracle else [])
        rows = []
        for e in entries:
            row = [str(e["diagram"]), _bool(e["distinguished"])]
            if args.oracle:
                row += [_bool(e["oracle"]), _bool(e["agrees"])]
            rows.append(tuple(row))
        _emit(args, _render_table(header, rows, args.format))
    return EXIT_OK if all_agree else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# parser


def _add_io_options(parser) -> None:
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--output", default=None, help="write to this path instead of stdout")


def _add_grading_options(parser) -> None:
    parser.add_argument("--case", required=True, choices=CASES)
    parser.add_argument("--m", type=int, default=None, help="modulus (AI, CII, DII)")
    parser.add_argument("--m0", type=int, default=None, help="odd modulus (AII)")
    parser.add_argument("--dims", default=None, help="comma-separated box counts per label")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradedorbits",
        description="Enumerate graded nilpotent orbits, verify counting series "
        "and catalog sheaf labels.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbits", help="list orbit diagrams for a grading")
    _add_grading_options(p)
    _add_io_options(p)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("count", help="counting table: series vs weights vs enumeration")
    p.add_argument("--family", required=True, choices=COUNT_FAMILIES)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--n", type=int, required=True, help="largest table degree")
    _add_io_options(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("sheaves", help="sheaf-label catalog for a grading")
    _add_grading_options(p)
    p.add_argument("--a", type=int, default=None, help="central character order (AI)")
    _add_io_options(p)
    p.set_defaults(func=cmd_sheaves)

    p = sub.add_parser("verify", help="check the orbit-to-label bijection")
    _add_grading_options(p)
    p.add_argument("--a", type=int, default=None, help="central character order (AI)")
    _add_io_options(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cuspidal", help="conjectural cuspidal labels (AI)")
    _add_grading_options(p)
    _add_io_options(p)
    p.set_defaults(func=cmd_cuspidal)

    p = sub.add_parser("distinguished", help="distinguished orbits, optionally oracle-checked")
    p.add_argument("--case", required=True, choices=CASES)
    p.add_argument("--m", type=int, default=None, help="modulus (AI, CII, DII)")
    p.add_argument("--m0", type=int, default=None, help="odd modulus (AII)")
    p.add_argument("--dims", default=None, help="comma-separated box counts per label")
    p.add_argument("--N", dest="size", type=int, default=None, help="sweep all box-count vectors of this total size")
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--oracle", action="store_true", help="cross-check with the nilpotency oracle (AI)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--dump-matrices", action="store_true", help="include representative blocks (JSON only)")
    _add_io_options(p)
    p.set_defaults(func=cmd_distinguished)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())
