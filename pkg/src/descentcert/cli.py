"""Batch command-line front end.

Exit codes: 0 success or all checks pass, 1 a check found a mathematical
mismatch, 2 usage or input error.  Rationals are always emitted as exact
strings so outputs are diff-stable.  ``DESCENTCERT_WORKERS`` controls how
many processes the threshold table command may use (default: available
parallelism).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import hurwitz as hw
from . import stacksort as ss
from . import tangent as tg
from .errors import DescentCertError
from .eulerian import (
    DEFAULT_ENUMERATION_CUTOFF,
    eulerian,
    k_family,
    k_polynomial,
    refined_eulerian,
)
from .polynomial import Poly, format_rat, parse_rat
from .rootcert import interlaces, is_real_rooted, pairwise_interlacing

MAX_PLAIN_CUTOFF = 12


def _emit(text: str, output):
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _add_io_flags(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", default=None, help="write to a file instead of stdout")


def _poly_csv(poly: Poly) -> str:
    return "".join(f"{i},{format_rat(c)}\n" for i, c in enumerate(poly.coeffs))


def _parse_perm(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise DescentCertError(f"cannot parse permutation {text!r}; expected e.g. '2,3,1'")


def _check_cutoff(args, parser):
    if args.cutoff > MAX_PLAIN_CUTOFF and not args.unsafe_cutoff:
        parser.error(
            f"--cutoff {args.cutoff} exceeds {MAX_PLAIN_CUTOFF}; "
            "pass --unsafe-cutoff to confirm"
        )


# -- euler -------------------------------------------------------------------


def _cmd_euler_poly(args) -> int:
    poly = eulerian(args.n)
    if args.format == "csv":
        _emit(_poly_csv(poly), args.output)
    else:
        _emit(_json({"n": args.n, "poly": poly.to_json_dict()}), args.output)
    return 0


def _cmd_euler_refined(args) -> int:
    fam = refined_eulerian(args.n)
    if args.format == "csv":
        lines = []
        for i, poly in enumerate(fam.polys):
            for power, c in enumerate(poly.coeffs):
                lines.append(f"{i},{power},{format_rat(c)}")
        _emit("".join(line + "\n" for line in lines), args.output)
    else:
        _emit(_json(fam.to_json_dict()), args.output)
    return 0


def _cmd_euler_kpoly(args) -> int:
    k = parse_rat(args.k)
    if args.n > 3:
        poly = k_polynomial(k_family(args.n), k)
    else:
        poly = hw.family_poly_at(args.n, k)
    if args.certify:
        if args.format == "csv":
            raise DescentCertError("--certify output is JSON only")
        cert = is_real_rooted(poly)
        _emit(
            _json(
                {
                    "n": args.n,
                    "k": format_rat(k),
                    "poly": poly.to_json_dict(),
                    "certificate": cert.to_json_dict(),
                }
            ),
            args.output,
        )
        return 0
    if args.format == "csv":
        _emit(_poly_csv(poly), args.output)
    else:
        _emit(
            _json({"n": args.n, "k": format_rat(k), "poly": poly.to_json_dict()}),
            args.output,
        )
    return 0


# -- sort --------------------------------------------------------------------


def _cmd_sort_apply(args) -> int:
    word = _parse_perm(args.perm)
    result = word
    for _ in range(args.times):
        result = ss.stack_sort_once(result)
    if args.format == "csv":
        _emit(",".join(str(v) for v in result) + "\n", args.output)
    else:
        _emit(
            _json({"perm": list(word), "times": args.times, "result": list(result)}),
            args.output,
        )
    return 0


def _cmd_sort_wtable(args) -> int:
    table = ss.descent_table(args.n, args.t, cutoff=args.cutoff)
    if args.format == "csv":
        _emit("".join(row + "\n" for row in table.csv_rows()), args.output)
    else:
        _emit(_json(table.to_json_dict()), args.output)
    return 0


def _cmd_sort_check(args) -> int:
    checks = []
    for n in range(1, args.n_max + 1):
        counts = ss.sortable_descent_counts(n, 2, cutoff=args.cutoff)
        ok = all(ss.w2_closed_form(n, k) == counts[k] for k in range(n))
        checks.append({"name": "two_pass_closed_form", "n": n, "pass": ok})
        one_pass = ss.sortable_descent_counts(n, 1, cutoff=args.cutoff)
        checks.append(
            {
                "name": "one_pass_is_narayana",
                "n": n,
                "pass": Poly.of(*one_pass) == ss.narayana_poly(n),
            }
        )
        full = ss.sortable_descent_counts(n, max(n - 1, 1), cutoff=args.cutoff)
        checks.append(
            {"name": "full_depth_is_eulerian", "n": n, "pass": Poly.of(*full) == eulerian(n)}
        )
        if n >= 4:
            checks.append(
                {
                    "name": "n_minus_2_identity",
                    "n": n,
                    "pass": ss.wn_n_minus_2_identity_check(n, cutoff=args.cutoff),
                }
            )
    all_pass = all(c["pass"] for c in checks)
    if args.format == "csv":
        lines = [f"{c['name']},{c['n']},{str(c['pass']).lower()}" for c in checks]
        _emit("".join(line + "\n" for line in lines), args.output)
    else:
        _emit(_json({"checks": checks, "all_pass": all_pass}), args.output)
    return 0 if all_pass else 1


# -- cert ----------------------------------------------------------------------


def _cmd_cert_interlace(args) -> int:
    with open(args.input) as fh:
        data = json.load(fh)
    try:
        g = Poly.from_json_dict(data["g"])
        f = Poly.from_json_dict(data["f"])
    except (KeyError, TypeError) as exc:
        raise DescentCertError(f"input must be JSON with 'g' and 'f' polynomials: {exc}")
    result = interlaces(g, f)
    _emit(
        _json({"g": g.to_json_dict(), "f": f.to_json_dict(), "interlaces": result}),
        args.output,
    )
    return 0


def _cmd_cert_pairwise(args) -> int:
    fam = refined_eulerian(args.n)
    ok = pairwise_interlacing(fam.polys)
    pairs = args.n * (args.n - 1) // 2
    _emit(
        _json({"n": args.n, "pairs_checked": pairs, "pairwise_interlacing": ok}),
        args.output,
    )
    return 0 if ok else 1


# -- hurwitz -------------------------------------------------------------------


def _threshold_row(n: int) -> tuple[int, str, str]:
    result = hw.thresholds(n)
    return n, str(result.omega), str(result.Omega)


def _worker_count(rows: int) -> int:
    env = os.environ.get("DESCENTCERT_WORKERS", "")
    if env.strip():
        return max(1, int(env))
    return min(os.cpu_count() or 1, rows)


def _cmd_hurwitz_table(args) -> int:
    ns = list(range(args.n_min, args.n_max + 1))
    if not ns:
        raise DescentCertError("empty range: --n-min must not exceed --n-max")
    workers = _worker_count(len(ns))
    if workers > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_threshold_row, ns))
    else:
        rows = [_threshold_row(n) for n in ns]
    if args.format == "csv":
        _emit("".join(f"{n},{om},{Om}\n" for n, om, Om in rows), args.output)
    else:
        _emit(
            _json({"rows": [{"n": n, "omega": om, "Omega": Om} for n, om, Om in rows]}),
            args.output,
        )
    return 0


# -- tangent ---------------------------------------------------------------------


def _cmd_tangent_conjecture(args) -> int:
    rows = []
    for n in range(3, args.n_max + 1):
        result = hw.thresholds(n)
        omega_c = str(result.omega)
        Omega_c = str(result.Omega)
        omega_f = format_rat(tg.omega_formula(n))
        Omega_conj = format_rat(tg.conjectured_Omega(n))
        rows.append(
            {
                "n": n,
                "omega_computed": omega_c,
                "omega_formula": omega_f,
                "Omega_computed": Omega_c,
                "Omega_conjectured": Omega_conj,
                "match": omega_c == omega_f and Omega_c == Omega_conj,
            }
        )
    all_match = all(r["match"] for r in rows)
    if args.format == "csv":
        lines = [
            f"{r['n']},{r['omega_computed']},{r['omega_formula']},"
            f"{r['Omega_computed']},{r['Omega_conjectured']},{str(r['match']).lower()}"
            for r in rows
        ]
        _emit("".join(line + "\n" for line in lines), args.output)
    else:
        _emit(_json({"rows": rows, "all_match": all_match}), args.output)
    return 0 if all_match else 1


# -- wiring --------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="descentcert",
        description="Exact descent-polynomial computations and root certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    euler = sub.add_parser("euler", help="Eulerian polynomials and the bump family")
    esub = euler.add_subparsers(dest="subcommand", required=True)
    p = esub.add_parser("poly", help="the descent polynomial of S_n")
    p.add_argument("--n", type=int, required=True)
    _add_io_flags(p)
    p.set_defaults(func=_cmd_euler_poly)
    p = esub.add_parser("refined", help="the last-letter refinement of S_n")
    p.add_argument("--n", type=int, required=True)
    _add_io_flags(p)
    p.set_defaults(func=_cmd_euler_refined)
    p = esub.add_parser("kpoly", help="A_n + k x A_{n-2} at a rational k")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=str, required=True, help="rational, e.g. -4 or -496/17")
    p.add_argument("--certify", action="store_true", help="attach a real-rootedness certificate")
    _add_io_flags(p)
    p.set_defaults(func=_cmd_euler_kpoly)

    sort = sub.add_parser("sort", help="stack sorting and descent tables")
    ssub = sort.add_subparsers(dest="subcommand", required=True)
    p = ssub.add_parser("apply", help="apply the sorting operator")
    p.add_argument("--perm", type=str, required=True, help="comma-separated word, e.g. 2,3,1")
    p.add_argument("--times", type=int, default=1)
    _add_io_flags(p)
    p.set_defaults(func=_cmd_sort_apply)
    p = ssub.add_parser("wtable", help="descent table of the t-sortable permutations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--cutoff", type=int, default=DEFAULT_ENUMERATION_CUTOFF)
    p.add_argument("--unsafe-cutoff", action="store_true")
    _add_io_flags(p)
    p.set_defaults(func=_cmd_sort_wtable, needs_cutoff_check=True)
    p = ssub.add_parser("check", help="closed-form and identity checks")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--cutoff", type=int, default=DEFAULT_ENUMERATION_CUTOFF)
    p.add_argument("--unsafe-cutoff", action="store_true")
    _add_io_flags(p)
    p.set_defaults(func=_cmd_sort_check, needs_cutoff_check=True)

    cert = sub.add_parser("cert", help="interlacing certificates")
    csub = cert.add_subparsers(dest="subcommand", required=True)
    p = csub.add_parser("interlace", help="certify g interlaces f from a JSON file")
    p.add_argument("--input", type=str, required=True)
    _add_io_flags(p)
    p.set_defaults(func=_cmd_cert_interlace)
    p = csub.add_parser("pairwise", help="certify the refined family interlaces pairwise")
    p.add_argument("--n", type=int, required=True)
    _add_io_flags(p)
    p.set_defaults(func=_cmd_cert_pairwise)

    hur = sub.add_parser("hurwitz", help="distinct-real-rootedness thresholds")
    hsub = hur.add_subparsers(dest="subcommand", required=True)
    p = hsub.add_parser("table", help="threshold table across a range of n")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    _add_io_flags(p)
    p.set_defaults(func=_cmd_hurwitz_table)

    tan = sub.add_parser("tangent", help="tangent-number conjecture report")
    tsub = tan.add_subparsers(dest="subcommand", required=True)
    p = tsub.add_parser("conjecture", help="compare thresholds with the tangent ratios")
    p.add_argument("--n-max", type=int, required=True)
    _add_io_flags(p)
    p.set_defaults(func=_cmd_tangent_conjecture)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "needs_cutoff_check", False):
        _check_cutoff(args, parser)
    try:
        return args.func(args)
    except DescentCertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
