"""Command line front end.

Three subcommands:

* ``verify``  -- run the built-in self-check suites and print one
  deterministic PASS/FAIL line per check.
* ``table``   -- sweep computed values against sharp bounds over grids of
  pole locations, radii and lambda values, emitting CSV.
* ``check``   -- read functions from a CSV file (rows as produced by
  ``to_csv_row``) and test an asserted class membership.  Exit code 1 is
  reserved for genuine disproofs of univalence (a coefficient-sum
  violation or a detected collision); failed class inequalities only warn.
"""

from __future__ import annotations

import argparse
import csv
import sys

from .bounds import (
    BoundQuantity,
    build_report,
    check_bound,
    gronwall_check,
    jenkins_bound,
    l1_bound,
    lemma1_check,
    max_dirichlet_f,
    max_dirichlet_f_over_z,
    max_dirichlet_zf_sigma_p,
    max_dirichlet_zf_up_lambda,
    s_class_dirichlet_f_max,
    s_class_dirichlet_f_over_z_max,
    s_class_dirichlet_zf_max,
)
from .criteria import (
    disk_subordination_check,
    injectivity_oracle,
    univalence_criterion,
    up_lambda_membership,
)
from .errors import BadParameter, MeroboundsError
from .functions import (
    ClassKind,
    ClassSpec,
    build_fp,
    build_koebe_rotation,
    build_kp,
    f_over_z_series,
    from_csv_row,
    from_inverse_coefficients,
    mu,
)
from .integrals import (
    QuadratureConfig,
    dirichlet_f_over_z_series,
    dirichlet_f_series,
    dirichlet_quadrature,
    dirichlet_series,
    l1_mean_quadrature,
    l1_mean_series,
)
from .series import DEFAULT_ORDER, TruncatedSeries

P_GRID = (0.2, 0.35, 0.5, 0.65, 0.8)
R_GRID = tuple(k / 20.0 for k in range(1, 21))
LAMBDA_GRID = (0.25, 0.5, 1.0)

_TABLE_HEADER = "quantity,class,p,lambda,r,computed,bound,slack,sharp"
_POLE_MATCH_TOL = 1e-12


def _fmt(x) -> str:
    """12 significant digits; scientific notation once |x| drops under 1e-4."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return "%.12g" % x


def _fmtc(z: complex) -> str:
    return "%.6g%+.6gi" % (z.real, z.imag)


def _rel(value: float, reference: float) -> float:
    return abs(value - reference) / abs(reference)


# ---- verify suites -------------------------------------------------------------

def _suite_sharpness():
    checks = []
    for p in P_GRID:
        f = build_kp(p)
        worst = max(
            _rel(dirichlet_series(f.inv_series, r).value, max_dirichlet_zf_sigma_p(r, p))
            for r in R_GRID)
        checks.append((f"sharpness/zf-kp p={_fmt(p)}", worst <= 1e-9,
                       f"max rel slack {_fmt(worst)}"))
    for p in P_GRID:
        worst = max(
            _rel(dirichlet_series(build_fp(p, lam).inv_series, r).value,
                 max_dirichlet_zf_up_lambda(r, p, lam))
            for lam in LAMBDA_GRID for r in R_GRID)
        checks.append((f"sharpness/zf-fp p={_fmt(p)}", worst <= 1e-9,
                       f"max rel slack over lambda {_fmt(worst)}"))
    for p in P_GRID:
        f = build_kp(p)
        spec = ClassSpec(ClassKind.SIGMA_P, p=p)
        worst = max(_rel(l1_mean_series(f, r).value, l1_bound(spec, r)) for r in R_GRID)
        checks.append((f"sharpness/l1-kp p={_fmt(p)}", worst <= 1e-9,
                       f"max rel slack {_fmt(worst)}"))
    for p in P_GRID:
        worst = max(
            _rel(l1_mean_series(build_fp(p, lam), r).value,
                 l1_bound(ClassSpec(ClassKind.U_P_LAMBDA, p=p, lam=lam), r))
            for lam in LAMBDA_GRID for r in R_GRID)
        checks.append((f"sharpness/l1-fp p={_fmt(p)}", worst <= 1e-9,
                       f"max rel slack over lambda {_fmt(worst)}"))
    koebe = build_koebe_rotation(0.0)
    worst = max(
        _rel(l1_mean_series(koebe, r).value, l1_bound(ClassSpec(ClassKind.S), r))
        for r in R_GRID)
    checks.append(("sharpness/l1-koebe", worst <= 1e-9, f"max rel slack {_fmt(worst)}"))
    for p in P_GRID:
        f = build_kp(p, order=128)
        worst = max(
            _rel(dirichlet_f_over_z_series(f, c * p).value, max_dirichlet_f_over_z(c * p, p))
            for c in (0.2, 0.5, 0.8))
        checks.append((f"sharpness/f-over-z-kp p={_fmt(p)}", worst <= 1e-8,
                       f"max rel slack {_fmt(worst)}"))
    for p in P_GRID:
        f = build_kp(p, order=128)
        worst = max(
            _rel(dirichlet_f_series(f, c * p).value, max_dirichlet_f(c * p, p))
            for c in (0.2, 0.5, 0.8))
        checks.append((f"sharpness/f-kp p={_fmt(p)}", worst <= 1e-8,
                       f"max rel slack {_fmt(worst)}"))
    margin = min(
        max_dirichlet_zf_sigma_p(r, p) - max_dirichlet_zf_up_lambda(r, p, 1.0)
        for p in P_GRID for r in R_GRID)
    checks.append(("sharpness/class-nesting", margin > 1e-12,
                   f"min bound gap {_fmt(margin)}"))
    return checks


def _suite_oracles():
    checks = []
    radii = (0.25, 0.5, 0.75, 0.95)
    for p in P_GRID:
        f = build_kp(p)
        worst = max(
            _rel(dirichlet_quadrature(f.inv_series, r).value,
                 dirichlet_series(f.inv_series, r).value)
            for r in radii)
        checks.append((f"oracles/zf-quadrature-kp p={_fmt(p)}", worst <= 1e-8,
                       f"max rel gap {_fmt(worst)}"))
    for p in P_GRID:
        f = build_kp(p)
        worst = max(
            _rel(l1_mean_quadrature(f, r).value, l1_mean_series(f, r).value)
            for r in radii)
        checks.append((f"oracles/l1-quadrature-kp p={_fmt(p)}", worst <= 1e-10,
                       f"max rel gap {_fmt(worst)}"))
    koebe = build_koebe_rotation(0.0)
    worst = max(
        _rel(l1_mean_quadrature(koebe, r).value, l1_mean_series(koebe, r).value)
        for r in radii)
    checks.append(("oracles/l1-quadrature-koebe", worst <= 1e-10,
                   f"max rel gap {_fmt(worst)}"))
    dense = QuadratureConfig(radial_nodes=160, angular_nodes=256)
    for p in P_GRID:
        f = build_kp(p, order=128)
        r = 0.5 * p
        quad = dirichlet_quadrature(f_over_z_series(f, 128), r, dense, pole=f.pole).value
        gap = _rel(quad, max_dirichlet_f_over_z(r, p))
        checks.append((f"oracles/f-over-z-quadrature-kp p={_fmt(p)}", gap <= 1e-8,
                       f"rel gap {_fmt(gap)} at r={_fmt(r)}"))
    for p in P_GRID:
        report = gronwall_check(build_kp(p))
        checks.append((f"oracles/gronwall-kp p={_fmt(p)}", report.sharp,
                       f"weighted sum {_fmt(report.computed)}"))
    for p in P_GRID:
        g = f_over_z_series(build_kp(p))
        worst = max(
            _rel(abs(g.coefficients[n - 1]), jenkins_bound(n, p))
            for n in range(2, 9))
        checks.append((f"oracles/coefficient-bound-kp p={_fmt(p)}", worst <= 1e-10,
                       f"max rel gap for n <= 8: {_fmt(worst)}"))
    return checks


def _suite_criteria():
    checks = []
    for p in P_GRID:
        verdict = up_lambda_membership(build_fp(p, 1.0), 1.0)
        ok = verdict.holds and abs(verdict.value - mu(p)) <= 1e-9
        checks.append((f"criteria/membership-fp p={_fmt(p)}", ok,
                       f"sup ratio {_fmt(verdict.value)} vs {_fmt(verdict.threshold)}"))
    verdict = up_lambda_membership(build_kp(0.5), 1.0)
    checks.append(("criteria/membership-rejects-kp", not verdict.holds,
                   f"sup ratio {_fmt(verdict.value)} above {_fmt(verdict.threshold)}"))
    low = univalence_criterion(build_fp(0.5, 0.49))
    checks.append(("criteria/second-derivative-lambda-0.49", low.holds,
                   f"sup {_fmt(low.value)} vs {_fmt(low.threshold)}"))
    mid = univalence_criterion(build_fp(0.5, 0.5))
    checks.append(("criteria/second-derivative-lambda-0.50",
                   mid.holds and abs(mid.value - mid.threshold) <= 1e-12,
                   f"sup {_fmt(mid.value)} meets {_fmt(mid.threshold)}"))
    high = univalence_criterion(build_fp(0.5, 0.51))
    checks.append(("criteria/second-derivative-lambda-0.51", not high.holds,
                   f"sup {_fmt(high.value)} vs {_fmt(high.threshold)}"))
    kp = build_kp(0.5)
    crit = univalence_criterion(kp)
    checks.append(("criteria/kp-fails-second-derivative", not crit.holds,
                   f"sup {_fmt(crit.value)} vs {_fmt(crit.threshold)}"))
    inj = injectivity_oracle(kp)
    gron = gronwall_check(kp)
    checks.append(("criteria/kp-still-injective", inj.holds and gron.sharp,
                   f"quotient floor {_fmt(inj.value)}, coefficient sum {_fmt(gron.computed)}"))
    folded = injectivity_oracle(from_inverse_coefficients([0.0, 5.0]))
    checks.append(("criteria/collision-detected", not folded.holds,
                   f"quotient floor {_fmt(folded.value)} below {_fmt(folded.threshold)}"))
    m = mu(0.5)
    series = TruncatedSeries([1.0, 0.0, -m])
    checks.append(("criteria/subordination-at-scale",
                   disk_subordination_check(series, m).holds, f"scale {_fmt(m)}"))
    checks.append(("criteria/subordination-below-scale",
                   not disk_subordination_check(series, m / 2.0).holds,
                   f"scale {_fmt(m / 2.0)}"))
    for p in P_GRID:
        verdict = injectivity_oracle(build_fp(p, 1.0))
        checks.append((f"criteria/injectivity-fp p={_fmt(p)}", verdict.holds,
                       f"quotient floor {_fmt(verdict.value)}"))
    return checks


def _suite_limits():
    p, r = 0.999, 0.5
    checks = []
    gap = _rel(max_dirichlet_zf_sigma_p(r, p), s_class_dirichlet_zf_max(r))
    checks.append(("limits/zf-approaches-analytic-class", gap <= 2e-3,
                   f"rel gap {_fmt(gap)} at p={_fmt(p)}"))
    gap = _rel(max_dirichlet_f_over_z(r, p), s_class_dirichlet_f_over_z_max(r))
    checks.append(("limits/f-over-z-approaches-analytic-class", gap <= 1e-2,
                   f"rel gap {_fmt(gap)} at p={_fmt(p)}"))
    gap = _rel(max_dirichlet_f(r, p), s_class_dirichlet_f_max(r))
    checks.append(("limits/f-approaches-analytic-class", gap <= 1e-2,
                   f"rel gap {_fmt(gap)} at p={_fmt(p)}"))
    gap = _rel(l1_bound(ClassSpec(ClassKind.SIGMA_P, p=p), r),
               l1_bound(ClassSpec(ClassKind.S), r))
    checks.append(("limits/l1-approaches-analytic-class", gap <= 1e-5,
                   f"rel gap {_fmt(gap)} at p={_fmt(p)}"))
    return checks


_SUITES = {
    "sharpness": _suite_sharpness,
    "oracles": _suite_oracles,
    "criteria": _suite_criteria,
    "limits": _suite_limits,
}


def _cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    failures = 0
    total = 0
    for name in names:
        for check, ok, detail in _SUITES[name]():
            total += 1
            if not ok:
                failures += 1
            print(f"{'PASS' if ok else 'FAIL'} {check}: {detail}")
    print(f"verify: {total} checks, {failures} failed")
    return 0 if failures == 0 else 1


# ---- table ---------------------------------------------------------------------

def _cmd_table(args) -> int:
    quantities = [BoundQuantity(q.upper()) for q in args.quantity]
    for p in args.p:
        if not 0.0 < p < 1.0:
            print(f"error: pole {p!r} outside (0, 1)", file=sys.stderr)
            return 2
    for r in args.r:
        if not 0.0 < r <= 1.0:
            print(f"error: radius {r!r} outside (0, 1]", file=sys.stderr)
            return 2
    for lam in args.lam:
        if not 0.0 < lam <= 1.0:
            print(f"error: lambda {lam!r} outside (0, 1]", file=sys.stderr)
            return 2
    if args.order < 2:
        print("error: order must be at least 2", file=sys.stderr)
        return 2

    rows = []
    skipped: dict[str, int] = {}
    for quantity in quantities:
        if quantity in (BoundQuantity.DIRICHLET_ZF, BoundQuantity.L1):
            for p in args.p:
                kp = build_kp(p, args.order)
                spec = ClassSpec(ClassKind.SIGMA_P, p=p)
                for r in args.r:
                    rows.append((quantity.value, ClassKind.SIGMA_P.value, p, None, r,
                                 check_bound(kp, spec, quantity, r)))
                for lam in args.lam:
                    fp = build_fp(p, lam, args.order)
                    spec_l = ClassSpec(ClassKind.U_P_LAMBDA, p=p, lam=lam)
                    for r in args.r:
                        rows.append((quantity.value, ClassKind.U_P_LAMBDA.value, p, lam, r,
                                     check_bound(fp, spec_l, quantity, r)))
            if quantity is BoundQuantity.L1:
                koebe = build_koebe_rotation(0.0, args.order)
                spec_s = ClassSpec(ClassKind.S)
                for r in args.r:
                    rows.append((quantity.value, ClassKind.S.value, None, None, r,
                                 check_bound(koebe, spec_s, quantity, r)))
        else:
            # f-route integrals only make sense strictly inside the pole
            for p in args.p:
                kp = build_kp(p, args.order)
                spec = ClassSpec(ClassKind.SIGMA_P, p=p)
                for r in args.r:
                    if r >= p:
                        skipped[quantity.value] = skipped.get(quantity.value, 0) + 1
                        continue
                    if quantity is BoundQuantity.DIRICHLET_F:
                        computed = dirichlet_f_series(kp, r).value
                        bound = max_dirichlet_f(r, p)
                    else:
                        computed = dirichlet_f_over_z_series(kp, r).value
                        bound = max_dirichlet_f_over_z(r, p)
                    rows.append((quantity.value, ClassKind.SIGMA_P.value, p, None, r,
                                 build_report(quantity.value, computed, bound, r, spec)))

    for name in sorted(skipped):
        print(f"note: {name} requires r < p; skipped {skipped[name]} combinations",
              file=sys.stderr)
    if not rows:
        print("error: the sweep produced no rows", file=sys.stderr)
        return 2

    rows.sort(key=lambda row: (row[0], row[1],
                               -1.0 if row[2] is None else row[2],
                               -1.0 if row[3] is None else row[3], row[4]))
    lines = [_TABLE_HEADER]
    for quantity, kind, p, lam, r, report in rows:
        lines.append(",".join([
            quantity, kind, _fmt(p), _fmt(lam), _fmt(r),
            _fmt(report.computed), _fmt(report.bound), _fmt(report.slack),
            _fmt(report.sharp),
        ]))
    text = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(args.out, "w") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    return 0


# ---- check ---------------------------------------------------------------------

_POLE_KINDS = (ClassKind.SIGMA_P, ClassKind.U_P_LAMBDA, ClassKind.CO_P,
               ClassKind.SIGMA_STAR_P)


def _cmd_check(args) -> int:
    try:
        spec = ClassSpec(ClassKind(args.klass.upper()), p=args.p, lam=args.lam, w0=args.w0)
    except (ValueError, MeroboundsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        with open(args.infile, newline="") as fh:
            raw = [row for row in csv.reader(fh) if row]
    except OSError as exc:
        print(f"error: cannot read {args.infile}: {exc}", file=sys.stderr)
        return 2
    if not raw:
        print("error: no function rows in input", file=sys.stderr)
        return 2

    functions = []
    for i, row in enumerate(raw, start=1):
        try:
            functions.append(from_csv_row(row))
        except MeroboundsError as exc:
            print(f"error: row {i}: {exc}", file=sys.stderr)
            return 2
    for i, f in enumerate(functions, start=1):
        if spec.kind is ClassKind.S:
            if f.pole is not None:
                print(f"error: row {i} declares a pole but class S forbids one",
                      file=sys.stderr)
                return 2
        elif f.pole is None or abs(f.pole - spec.p) > _POLE_MATCH_TOL:
            print(f"error: row {i} pole {f.pole!r} does not match class pole {spec.p!r}",
                  file=sys.stderr)
            return 2

    disproved = False
    for i, f in enumerate(functions, start=1):
        report = gronwall_check(f)
        if report.satisfied:
            sharp_note = " (sharp)" if report.sharp else ""
            print(f"row {i} PASS coefficient-sum: {_fmt(report.computed)} <= 1{sharp_note}")
        else:
            disproved = True
            print(f"row {i} FAIL coefficient-sum: {_fmt(report.computed)} > 1, "
                  "f cannot be univalent")
        if spec.kind is ClassKind.U_P_LAMBDA:
            lemma = lemma1_check(f, spec.lam, t=2.0, r=1.0)
            if lemma.satisfied:
                print(f"row {i} PASS tail-inequality: {_fmt(lemma.computed)} <= "
                      f"{_fmt(lemma.bound)}")
            else:
                print(f"row {i} WARN tail-inequality: {_fmt(lemma.computed)} > "
                      f"{_fmt(lemma.bound)}, class claim dubious")
            member = up_lambda_membership(f, spec.lam)
            if member.holds:
                print(f"row {i} PASS membership: sup ratio {_fmt(member.value)} <= "
                      f"{_fmt(member.threshold)}")
            else:
                print(f"row {i} WARN membership: sup ratio {_fmt(member.value)} > "
                      f"{_fmt(member.threshold)} near {_fmtc(member.witness)}")
        if spec.kind in _POLE_KINDS:
            try:
                crit = univalence_criterion(f)
            except BadParameter as exc:
                print(f"row {i} WARN univalence-criterion: {exc}")
            else:
                if crit.holds:
                    near = (" [at-threshold]"
                            if abs(crit.value - crit.threshold) <= 1e-12 else "")
                    print(f"row {i} PASS univalence-criterion: sup {_fmt(crit.value)} <= "
                          f"{_fmt(crit.threshold)}{near}")
                else:
                    print(f"row {i} INCONCLUSIVE univalence-criterion: sup "
                          f"{_fmt(crit.value)} > {_fmt(crit.threshold)}, "
                          "proves nothing either way")
        collision = injectivity_oracle(f)
        if collision.holds:
            print(f"row {i} PASS injectivity: quotient floor {_fmt(collision.value)}")
        else:
            disproved = True
            print(f"row {i} FAIL injectivity: collision between "
                  f"{_fmtc(collision.witness)} and {_fmtc(collision.witness_partner)}")
    return 1 if disproved else 0


# ---- parser --------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="merobounds",
        description="Verify sharp integral and coefficient bounds for disk "
                    "functions with one simple pole.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the built-in check suites")
    verify.add_argument("--suite", choices=[*_SUITES, "all"], default="all")
    verify.set_defaults(func=_cmd_verify)

    table = sub.add_parser("table", help="sweep computed values against bounds")
    table.add_argument("--p", nargs="+", type=float, default=list(P_GRID))
    table.add_argument("--r", nargs="+", type=float, default=list(R_GRID))
    table.add_argument("--lambda", dest="lam", nargs="+", type=float,
                       default=list(LAMBDA_GRID))
    table.add_argument("--quantity", nargs="+",
                       choices=[q.value.lower() for q in BoundQuantity],
                       default=[q.value.lower() for q in BoundQuantity])
    table.add_argument("--order", type=int, default=DEFAULT_ORDER)
    table.add_argument("--out", default=None)
    table.set_defaults(func=_cmd_table)

    check = sub.add_parser("check", help="check functions from CSV rows")
    check.add_argument("--in", dest="infile", required=True)
    check.add_argument("--class", dest="klass", required=True,
                       choices=[k.value.lower() for k in ClassKind])
    check.add_argument("--p", type=float, default=None)
    check.add_argument("--lambda", dest="lam", type=float, default=None)
    check.add_argument("--w0", type=float, default=None)
    check.set_defaults(func=_cmd_check)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return 0 if code in (0, None) else 2
    return args.func(args)


def entry() -> None:
    raise SystemExit(main())
