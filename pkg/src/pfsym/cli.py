"""Command-line front end.

Subcommands: expand, matchings, eval, det, sym, verify.  Output is text
or JSON lines (--format); all randomness is seeded and the seed is echoed
in every report, so verify runs are reproducible byte for byte.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
from fractions import Fraction

from .matchings import enumerate_pfaff, matching_count
from .models import (
    COSINE,
    SQUARE_DIFF,
    VerificationReport,
    position_polys,
    verify_theorem2,
    verify_theorem3,
    verify_theorem4,
    verify_trig_lemma1,
    verify_trig_lemma2,
)
from .pfaffian import (
    SKEW,
    SYMMETRIC,
    TriangularArray,
    completed_determinant,
    determinant,
    generic_pfaffian,
    hook_expand_skew,
    hook_expand_symmetric,
    parse_square_json,
    pfaffian_direct,
    scalar_to_json,
    upper_pairs,
)
from .permutations import classify_runs, enumerate_sym
from .polyring import Poly, x
from .symmetry import (
    SKEW_GENS,
    SYMMETRIC_GENS,
    act,
    dihedral_group,
    is_dihedral,
    pfaffian_symmetry_group,
    sym_of_g,
    symmetry_group,
)


def _emit(args, text: str, obj) -> None:
    if args.format == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


# -- plain subcommands ---------------------------------------------------------


def _cmd_expand(args) -> int:
    poly = generic_pfaffian(args.two_n)
    _emit(args, str(poly), {"two_n": args.two_n, "pfaffian": poly.to_json_obj()})
    return 0


def _cmd_matchings(args) -> int:
    for m, s in enumerate_pfaff(args.two_n, first_partner=args.first_partner):
        text = "".join(f"({i},{j})" for i, j in m.pairs) + (" +1" if s == 1 else " -1")
        _emit(args, text, {"pairs": m.to_json(), "sign": s})
    return 0


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _cmd_eval(args) -> int:
    arr = TriangularArray.from_json_obj(_load_json(args.file))
    if args.hook is None:
        value = pfaffian_direct(arr)
    elif arr.mode == SYMMETRIC:
        value = hook_expand_symmetric(arr, args.hook)
    elif arr.mode == SKEW:
        value = hook_expand_skew(arr, args.hook)
    else:
        raise ValueError("hook expansion needs a symmetric or skew array, not plain")
    _emit(args, str(value), {"two_n": arr.two_n, "mode": arr.mode, "pfaffian": scalar_to_json(value)})
    return 0


def _cmd_det(args) -> int:
    size, mode, entries = parse_square_json(_load_json(args.file))
    value = completed_determinant(size, mode, entries)
    _emit(args, str(value), {"size": size, "mode": mode, "determinant": scalar_to_json(value)})
    return 0


def _cmd_sym(args) -> int:
    if (args.pfaffian is None) == (args.poly_file is None):
        raise ValueError("sym needs exactly one of --pfaffian TWO_N or a polynomial file")
    processes = os.cpu_count() if args.parallel else None
    if args.pfaffian is not None:
        m = args.pfaffian
        report = pfaffian_symmetry_group(m, args.gens, signed=args.signed)
    else:
        if args.m is None:
            raise ValueError("--m is required with a polynomial file")
        m = args.m
        poly = Poly.from_json_obj(_load_json(args.poly_file))
        report = symmetry_group(poly, m, args.gens, signed=args.signed, processes=processes)
    obj = report.to_json_obj()
    obj.update({"m": m, "gens": args.gens, "signed": args.signed})
    if not args.elements:
        obj.pop("elements")
    lines = [
        f"order {report.order}",
        f"equals dihedral subgroup: {report.equals_dihedral}",
    ]
    if report.witness is not None:
        lines.append(f"witness in symmetric difference: {list(report.witness.images)}")
    if args.elements:
        lines += [str(list(p.images)) for p in report.elements]
    _emit(args, "\n".join(lines), obj)
    return 0


# -- the verify registry --------------------------------------------------------


def _with_seed(reports: list[VerificationReport], seed) -> list[VerificationReport]:
    return [
        VerificationReport(r.check, r.n, r.mode, r.passed, r.residual, r.lhs, r.rhs, seed)
        for r in reports
    ]


def _run_matchings(ns, rng, tol, expensive, processes):
    counts_ok = True
    detail = []
    for n in ns:
        if n > 5:
            continue
        two_n = 2 * n
        got = sum(1 for _ in enumerate_pfaff(two_n))
        counts_ok &= got == matching_count(two_n)
        detail.append(got)
        if two_n <= 8:
            canon = {m.flatten() for m, _ in enumerate_pfaff(two_n)}
            brute = set()
            for p in enumerate_sym(two_n, cap=max(9, two_n)):
                pairs = [(p.images[2 * k], p.images[2 * k + 1]) for k in range(n)]
                if all(i < j for i, j in pairs) and all(
                    pairs[k][0] < pairs[k + 1][0] for k in range(n - 1)
                ):
                    brute.add(p.images)
            counts_ok &= canon == brute
    return [
        VerificationReport(
            "matchings", None, "exact", counts_ok, 0.0,
            f"counts {detail}", "double factorials + brute-force filter",
        )
    ]


def _run_theorem1(ns, rng, tol, expensive, processes):
    reports = []
    for n in ns:
        if n > 4:
            continue
        two_n = 2 * n
        if n <= 3:
            rep = symmetry_group(
                generic_pfaffian(two_n), two_n, SYMMETRIC_GENS, processes=processes
            )
            route = "polynomial-action"
        else:
            rep = pfaffian_symmetry_group(two_n, SYMMETRIC_GENS)
            route = "matching-classifier"
        expected = 4 * n if n >= 2 else 2
        ok = is_dihedral(rep, two_n) and rep.order == expected
        reports.append(
            VerificationReport(
                "theorem1", n, f"symmetric-gens/{route}", ok, 0.0,
                f"order {rep.order}", f"dihedral subgroup, order {expected}",
            )
        )
    return reports


def _run_dihedral_invariance(ns, rng, tol, expensive, processes):
    reports = []
    for n in ns:
        if n > 5:
            continue
        two_n = 2 * n
        pf = generic_pfaffian(two_n)
        bad = [d for d in dihedral_group(two_n) if act(d, pf, SYMMETRIC_GENS) != pf]
        reports.append(
            VerificationReport(
                "dihedral-invariance", n, "symmetric-gens", not bad, 0.0,
                f"{len(bad)} violations", "0 violations",
            )
        )
    return reports


def _run_ssym_skew(ns, rng, tol, expensive, processes):
    reports = []
    for n in ns:
        if n > 3:
            continue
        two_n = 2 * n
        pf = generic_pfaffian(two_n)
        ok = all(
            act(p, pf, SKEW_GENS) == (pf if p.sign == 1 else -pf)
            for p in enumerate_sym(two_n, cap=max(9, two_n))
        )
        reports.append(
            VerificationReport(
                "ssym-skew", n, "skew-gens", ok, 0.0,
                "sign character" if ok else "violation found", "sign character",
            )
        )
    return reports


def _run_theorem2(ns, rng, tol, expensive, processes):
    reports = []
    for n in ns:
        if not 2 <= n <= 4:
            continue
        two_n = 2 * n
        xs = position_polys(two_n)
        sub = [verify_theorem2(SQUARE_DIFF, xs, s) for s in range(1, two_n + 1)]
        reports.append(
            VerificationReport(
                "theorem2", n, "square-diff/exact,all s", all(r.passed for r in sub),
                0.0, "collapsed pfaffian", "c * reduced pfaffian",
            )
        )
        numeric_tol = tol if tol is not None else 1e-12
        xs_num = [rng.uniform(-math.pi, math.pi) for _ in range(two_n)]
        sub = [
            verify_theorem2(COSINE, xs_num, s, tol=numeric_tol)
            for s in range(1, two_n + 1)
        ]
        reports.append(
            VerificationReport(
                "theorem2", n, "cosine/numeric,all s", all(r.passed for r in sub),
                max(r.residual for r in sub), "collapsed pfaffian", "c * reduced pfaffian",
            )
        )
    return reports


def _run_theorem3(ns, rng, tol, expensive, processes):
    symbolic_top = 4 if expensive else 3
    reports = []
    for n in ns:
        if n > 8:
            continue
        reports.append(verify_theorem3(n, include_symbolic=n <= symbolic_top))
    return reports


def _run_theorem4(ns, rng, tol, expensive, processes):
    reports = []
    for n in ns:
        if n > 8:
            continue
        n_tol = tol if tol is not None else (1e-12 if n <= 5 else 1e-10)
        worst = 0.0
        ok = True
        for _ in range(100):
            xs = [rng.uniform(-math.pi, math.pi) for _ in range(2 * n)]
            r = verify_theorem4(n, xs, tol=n_tol)
            worst = max(worst, r.residual)
            ok &= r.passed
        reports.append(
            VerificationReport(
                "theorem4", n, "cosine/numeric,100 draws", ok, worst,
                "pfaffian of cos(x_i - x_j)", "cos(alternating sum)",
            )
        )
    return reports


def _run_g_symmetry(ns, rng, tol, expensive, processes):
    reports = []
    for n in ns:
        if 2 <= n <= 3:
            rep = sym_of_g(2 * n)
            ok = is_dihedral(rep, 2 * n) and rep.order == 4 * n
            reports.append(
                VerificationReport(
                    "g-symmetry", n, "group", ok, 0.0,
                    f"order {rep.order}", f"dihedral subgroup, order {4 * n}",
                )
            )
        if 2 <= n <= 4:
            two_n = 2 * n
            members = {p.images for p in dihedral_group(two_n)}
            ok = all(
                classify_runs(p).is_dihedral == (p.images in members)
                for p in enumerate_sym(two_n, cap=max(9, two_n))
            )
            reports.append(
                VerificationReport(
                    "g-symmetry", n, "run-classifier", ok, 0.0,
                    "run shapes", "subgroup membership",
                )
            )
    return reports


def _run_trig1(ns, rng, tol, expensive, processes):
    t = tol if tol is not None else 1e-13
    worst = 0.0
    ok = True
    for _ in range(1000):
        r = verify_trig_lemma1(
            rng.uniform(-math.pi, math.pi),
            rng.uniform(-math.pi, math.pi),
            rng.uniform(-math.pi, math.pi),
            tol=t,
        )
        worst = max(worst, r.residual)
        ok &= r.passed
    return [
        VerificationReport(
            "trig1", None, "numeric,1000 draws", ok, worst,
            "cosine product difference", "sine product",
        )
    ]


def _run_trig2(ns, rng, tol, expensive, processes):
    t = tol if tol is not None else 1e-12
    worst = 0.0
    ok = True
    for _ in range(1000):
        k = rng.randint(1, 8)
        r = verify_trig_lemma2(
            [rng.uniform(-math.pi, math.pi) for _ in range(k)], tol=t
        )
        worst = max(worst, r.residual)
        ok &= r.passed
    return [
        VerificationReport(
            "trig2", None, "numeric,1000 draws", ok, worst,
            "alternating sine/cosine sums", "closed forms",
        )
    ]


def _square_diff_entries(size: int) -> dict:
    return {(i, j): (x(i) - x(j)) ** 2 for i, j in upper_pairs(size)}


def _run_det_examples(ns, rng, tol, expensive, processes):
    d2 = completed_determinant(2, SYMMETRIC, _square_diff_entries(2))
    d3 = completed_determinant(3, SYMMETRIC, _square_diff_entries(3))
    d4 = completed_determinant(4, SYMMETRIC, _square_diff_entries(4))
    d5 = completed_determinant(5, SYMMETRIC, _square_diff_entries(5))
    # sizes 2 and 3 against their cofactor expansions: det [[0,c],[c,0]] = -c^2
    # with c = (x1-x2)^2, and 2abc for the zero-diagonal symmetric 3x3
    ok = (
        d2 == -((x(1) - x(2)) ** 4)
        and d3 == 2 * ((x(1) - x(2)) * (x(2) - x(3)) * (x(3) - x(1))) ** 2
        and d4 == Poly.zero()
        and d5 == Poly.zero()
    )
    return [
        VerificationReport(
            "det-examples", None, "symbolic", ok, 0.0,
            "determinants of squared-difference matrices, sizes 2..5",
            "-(x1-x2)^4, 2((x1-x2)(x2-x3)(x3-x1))^2, 0, 0",
        )
    ]


def _random_fraction(rng) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _run_hook_oracle(ns, rng, tol, expensive, processes):
    reports = []
    for n in ns:
        if not 2 <= n <= 4:
            continue
        two_n = 2 * n
        ok = True
        for mode, expand in ((SYMMETRIC, hook_expand_symmetric), (SKEW, hook_expand_skew)):
            for _ in range(50):
                arr = TriangularArray(
                    two_n, mode,
                    {p: _random_fraction(rng) for p in upper_pairs(two_n)},
                )
                direct = pfaffian_direct(arr)
                ok &= all(expand(arr, s) == direct for s in range(1, two_n + 1))
        reports.append(
            VerificationReport(
                "hook-oracle", n, "exact,both modes,50 arrays", ok, 0.0,
                "hook expansions", "direct pfaffian",
            )
        )
    return reports


def _run_skew_det(ns, rng, tol, expensive, processes):
    reports = []
    for n in ns:
        if n > 3:
            continue
        two_n = 2 * n
        ok = True
        for _ in range(50):
            arr = TriangularArray(
                two_n, SKEW,
                {p: Fraction(rng.randint(-9, 9)) for p in upper_pairs(two_n)},
            )
            ok &= determinant(arr) == pfaffian_direct(arr) ** 2
        reports.append(
            VerificationReport(
                "skew-det", n, "exact,50 arrays", ok, 0.0,
                "determinant", "pfaffian squared",
            )
        )
    return reports


CHECKS = {
    "matchings": (_run_matchings, [1, 2, 3, 4, 5]),
    "theorem1": (_run_theorem1, [1, 2, 3]),
    "dihedral-invariance": (_run_dihedral_invariance, [1, 2, 3, 4]),
    "ssym-skew": (_run_ssym_skew, [1, 2, 3]),
    "theorem2": (_run_theorem2, [2, 3]),
    "theorem3": (_run_theorem3, [1, 2, 3, 4, 5]),
    "theorem4": (_run_theorem4, [1, 2, 3, 4, 5, 6, 7]),
    "g-symmetry": (_run_g_symmetry, [2, 3, 4]),
    "trig1": (_run_trig1, [None]),
    "trig2": (_run_trig2, [None]),
    "det-examples": (_run_det_examples, [None]),
    "hook-oracle": (_run_hook_oracle, [2, 3, 4]),
    "skew-det": (_run_skew_det, [1, 2, 3]),
}

_EXPENSIVE_EXTRA = {"theorem1": [4]}


def _parse_n_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            lo, hi = int(lo), int(hi)
            if lo > hi:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise ValueError(f"--n expects N or LO..HI, got {text!r}") from None


def _cmd_verify(args) -> int:
    names = args.checks or ["all"]
    if names == ["all"]:
        names = list(CHECKS)
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown check {unknown[0]!r}; available: {', '.join(CHECKS)}, all")
    requested = _parse_n_range(args.n) if args.n else None
    processes = os.cpu_count() if args.parallel else None
    all_ok = True
    for name in names:
        runner, default_ns = CHECKS[name]
        ns = requested if requested is not None else list(default_ns)
        if requested is None and args.expensive:
            ns += _EXPENSIVE_EXTRA.get(name, [])
        rng = random.Random(f"{args.seed}:{name}")
        for report in _with_seed(runner(ns, rng, args.tol, args.expensive, processes), args.seed):
            all_ok &= report.passed
            status = "PASS" if report.passed else "FAIL"
            text = f"{status} {report.check}" + (f" n={report.n}" if report.n is not None else "")
            text += f" [{report.mode}] residual={report.residual:.3g}"
            if not report.passed:
                text += f"\n  lhs: {report.lhs}\n  rhs: {report.rhs}"
            _emit(args, text, report.to_json_obj())
    return 0 if all_ok else 1


# -- argument parsing ------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--parallel", action="store_true", help="use the parallel scan paths")
    common.add_argument("--expensive", action="store_true", help="include the expensive tiers")

    parser = argparse.ArgumentParser(
        prog="pfsym",
        description="Pfaffians of triangular arrays and symmetry groups of pfaffian polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="symbolic pfaffian of order TWO_N")
    p.add_argument("two_n", type=int)
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("matchings", parents=[common], help="perfect matchings with signs, one per line")
    p.add_argument("two_n", type=int)
    p.add_argument("--first-partner", type=int, default=None, help="only matchings pairing 1 with this index")
    p.set_defaults(func=_cmd_matchings)

    p = sub.add_parser("eval", parents=[common], help="pfaffian of a triangular array file")
    p.add_argument("file")
    p.add_argument("--hook", type=int, default=None, help="use the hook expansion along this index")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("det", parents=[common], help="determinant of the completed matrix (size may be odd)")
    p.add_argument("file")
    p.set_defaults(func=_cmd_det)

    p = sub.add_parser("sym", parents=[common], help="brute-force symmetry group of a polynomial")
    p.add_argument("poly_file", nargs="?", default=None, help="polynomial JSON file")
    p.add_argument("--pfaffian", type=int, default=None, metavar="TWO_N",
                   help="use the built-in generic pfaffian of this order")
    p.add_argument("--m", type=int, default=None, help="degree of the acting symmetric group")
    p.add_argument("--gens", choices=(SYMMETRIC_GENS, SKEW_GENS), default=SYMMETRIC_GENS)
    p.add_argument("--signed", action="store_true", help="skew-symmetry group (fix up to sign)")
    p.add_argument("--elements", action="store_true", help="print the full element list")
    p.set_defaults(func=_cmd_sym)

    p = sub.add_parser("verify", parents=[common], help="run identity checks (default: all)")
    p.add_argument("checks", nargs="*", metavar="CHECK",
                   help=f"any of: {', '.join(CHECKS)}, all")
    p.add_argument("--n", default=None, help="half-order range, e.g. 2 or 1..3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=None, help="override the numeric tolerance")
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        raise
    except (ValueError, IndexError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    try:
        code = run()
        sys.stdout.flush()
    except BrokenPipeError:
        # downstream closed the pipe (e.g. | head); die quietly
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        code = 1
    sys.exit(code)


if __name__ == "__main__":
    main()
