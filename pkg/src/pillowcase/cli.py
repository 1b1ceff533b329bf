"""Command-line front end.

Every subcommand prints plain text by default and a single JSON document
(sorted keys) under --json.  Exit status: 0 success, 1 domain error,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .characters import (SkewShape, character, lr_coefficient, skew_character)
from .hurwitz import (HurwitzQuery, hurwitz_brute_force, hurwitz_number,
                      pillowcase_cover_series)
from .partitions import (Partition, core_size, dimension, hook_lengths,
                         is_balanced, parse_partition, two_quotient)
from .qseries import (RationalSeries, TailBoundError, eisenstein_at,
                      eval_at_h, format_fraction)
from .quasimodular import InsufficientOrder, asymptotics, quasimodular_fit
from .report import format_report, report
from .shifted import p_bar_k, p_k, shifted_schur
from .stats import (DEFAULT_FIXED_BUDGET, DEFAULT_QSERIES_BUDGET, BudgetExceeded,
                    ExpectationQuery, concentration_stat, expectation, g_nu_direct,
                    g_nu_formula, measure_size_count, meinardus_ratio,
                    next_term_prefactor, next_term_sum, pillowcase_weight,
                    sobolev_norm_sq, vanishing_sum, z_series, z_series_enumeration,
                    z_series_product)

DOMAIN_ERRORS = (ValueError, ZeroDivisionError, ArithmeticError, SyntaxError,
                 BudgetExceeded, TailBoundError, InsufficientOrder)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n"
                     f"hint: run '{self.prog} --help' for the accepted arguments\n")


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _jsonable(x):
    if isinstance(x, Fraction):
        return format_fraction(x)
    if isinstance(x, int) and not isinstance(x, bool):
        return x
    if hasattr(x, "to_json"):
        return _jsonable(x.to_json())
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _emit(args, data: dict, text: str):
    if args.json:
        print(json.dumps(_jsonable(data), sort_keys=True))
    else:
        print(text)


def _announce(args, measure: str, top: int):
    """Explicit budget overrides print the enumeration size first."""
    if args.max_n is not None:
        est = sum(measure_size_count(measure, k) for k in range(top + 1))
        print(f"enumerating about {est} partitions", file=sys.stderr)


# ---------------------------------------------------------------- partition commands

def cmd_info(args):
    lam = args.partition
    tq = two_quotient(lam)
    w = pillowcase_weight(lam).value
    data = {"partition": lam, "hooks": hook_lengths(lam), "dimension": dimension(lam),
            "two_quotient": {"alpha": tq.alpha, "beta": tq.beta},
            "core_size": core_size(lam), "balanced": is_balanced(lam), "w": w}
    text = "\n".join([
        f"partition:    {lam}",
        f"hooks:        {' / '.join(' '.join(map(str, r)) for r in hook_lengths(lam)) or '-'}",
        f"dimension:    {dimension(lam)}",
        f"2-quotient:   ({tq.alpha}), ({tq.beta})",
        f"core size:    {core_size(lam)}",
        f"balanced:     {str(is_balanced(lam)).lower()}",
        f"w:            {format_fraction(w)}",
    ])
    _emit(args, data, text)


def cmd_char(args):
    x = character(args.lam, args.mu)
    _emit(args, {"chi": x}, str(x))


def cmd_skewchar(args):
    x = skew_character(SkewShape(args.outer, args.inner), args.eta)
    _emit(args, {"chi": x}, str(x))


def cmd_lr(args):
    x = lr_coefficient(args.a, args.b, args.eta)
    _emit(args, {"c": x}, str(x))


def cmd_sstar(args):
    x = shifted_schur(args.mu, args.lam)
    _emit(args, {"value": x}, format_fraction(x))


def cmd_pk(args):
    x = p_k(args.lam, args.k)
    _emit(args, {"value": x}, format_fraction(x))


def cmd_pbark(args):
    x = p_bar_k(args.lam, args.k)
    _emit(args, {"value": x}, format_fraction(x))


def cmd_weight(args):
    w = pillowcase_weight(args.partition).value
    _emit(args, {"w": w}, format_fraction(w))


def cmd_gnu(args):
    direct = g_nu_direct(args.nu, args.lam)
    data = {"g": direct}
    text = format_fraction(direct)
    if args.both:
        formula = g_nu_formula(args.nu, args.lam)
        data = {"direct": direct, "formula": formula, "agree": direct == formula}
        text = f"direct:  {format_fraction(direct)}\nformula: {format_fraction(formula)}"
    _emit(args, data, text)


# ---------------------------------------------------------------- series commands

def _series_text(s: RationalSeries) -> str:
    return " ".join(format_fraction(c) for c in s.coeffs)


def cmd_expect(args):
    if (args.qseries is None) == (args.fixed_n is None):
        raise ValueError("give exactly one of --qseries N and --fixed-n n")
    if args.qseries is not None:
        query = ExpectationQuery(args.obs, args.measure, "qseries", args.qseries,
                                 args.threads, args.max_n)
        _announce(args, args.measure, args.qseries)
        s = expectation(query)
        _emit(args, {"series": s}, _series_text(s))
    else:
        query = ExpectationQuery(args.obs, args.measure, "fixed_n", args.fixed_n,
                                 args.threads, args.max_n)
        _announce(args, args.measure, args.fixed_n)
        x = expectation(query)
        _emit(args, {"value": x}, format_fraction(x))


def cmd_zseries(args):
    s = z_series(args.order, check_up_to=None)
    data = {"series": s}
    text = _series_text(s)
    if args.check:
        ok = z_series_enumeration(args.order).agrees_with(z_series_product(args.order))
        data["check"] = ok
        text += f"\nenumeration equals product: {str(ok).lower()}"
    _emit(args, data, text)


def _load_series(args) -> RationalSeries:
    sources = [args.obs is not None, args.series is not None, args.eisenstein is not None]
    if sum(sources) != 1:
        raise ValueError("give exactly one of --obs, --series and --eisenstein")
    order = args.order if args.order is not None else DEFAULT_QSERIES_BUDGET
    if args.obs is not None:
        return expectation(ExpectationQuery(args.obs, args.measure, "qseries", order,
                                            args.threads, args.max_n))
    if args.series is not None:
        with open(args.series) as fh:
            return RationalSeries.from_json(json.load(fh))
    weight, _, m = args.eisenstein.partition(":")
    return eisenstein_at(int(weight), int(m or 1), order)


def _fit(args):
    s = _load_series(args)
    fit = quasimodular_fit(s, args.weight, args.step)
    if not fit:
        raise ValueError(f"no quasimodular fit of weight ≤ {args.weight}: "
                         f"coefficient {fit.residual_index} is inconsistent")
    return fit


def cmd_fit(args):
    fit = _fit(args)
    _emit(args, {"fit": fit}, str(fit))


def cmd_asympt(args):
    a = asymptotics(_fit(args))
    _emit(args, {"asymptotics": a}, str(a))


def cmd_eval(args):
    est = eval_at_h(_load_series(args), args.h, tol=args.tol)
    _emit(args, {"estimate": est}, str(est))


# ---------------------------------------------------------------- covers

def cmd_hurwitz(args):
    q = HurwitzQuery(args.degree, tuple(args.profile))
    h = hurwitz_number(q)
    data = {"H": h}
    text = format_fraction(h)
    if args.brute:
        b = hurwitz_brute_force(q)
        data.update(brute_force=b, agree=b == h)
        text += f"\nbrute force: {format_fraction(b)}"
    _emit(args, data, text)


def cmd_coverseries(args):
    order = args.order if args.order is not None else 10
    s = pillowcase_cover_series(args.nu, args.mu, order)
    _emit(args, {"series": s}, _series_text(s))


# ---------------------------------------------------------------- diagnostics

def cmd_meinardus(args):
    r = meinardus_ratio(args.n)
    _emit(args, {"ratio": r}, f"{r:.12g}")


def cmd_sobolev(args):
    est = sobolev_norm_sq(args.partition)
    _emit(args, {"norm_sq": est}, str(est))


def cmd_concentration(args):
    budget = args.max_n if args.max_n is not None else DEFAULT_FIXED_BUDGET
    _announce(args, "pillowcase", args.n)
    x = concentration_stat(args.n, Fraction(args.eps), budget)
    _emit(args, {"value": x, "decimal": float(x)}, f"{format_fraction(x)} ≈ {float(x):.6g}")


def cmd_vanish(args):
    x = vanishing_sum(args.nu)
    _emit(args, {"sum": x}, format_fraction(x))


def cmd_nextterm(args):
    order = args.order if args.order is not None else DEFAULT_QSERIES_BUDGET
    total = next_term_sum(args.nu)
    pref = next_term_prefactor(args.nu, order)
    _emit(args, {"sum": total, "prefactor": pref},
          f"sum:       {format_fraction(total)}\nprefactor: {_series_text(pref)}")


def cmd_report(args):
    order = args.order if args.order is not None else DEFAULT_QSERIES_BUDGET
    rows = report(order=order)
    _emit(args, {"rows": rows}, format_report(rows))


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker processes for enumeration (default: all cores)")
    common.add_argument("--max-n", type=int, default=None,
                        help="override the enumeration budget")
    common.add_argument("--order", type=int, default=None,
                        help="q-series truncation order")

    parser = _Parser(prog="pillowcase", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    add("info", cmd_info, "hooks, 2-quotient, core and weight").add_argument(
        "partition", type=_partition)
    p = add("char", cmd_char, "χ^λ(μ)")
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition)
    p = add("skewchar", cmd_skewchar, "χ^{λ/μ}(η)")
    p.add_argument("outer", type=_partition)
    p.add_argument("inner", type=_partition)
    p.add_argument("eta", type=_partition)
    p = add("lr", cmd_lr, "Littlewood-Richardson coefficient c^η_{a,b}")
    for name in ("a", "b", "eta"):
        p.add_argument(name, type=_partition)
    p = add("sstar", cmd_sstar, "shifted Schur s*_μ(λ)")
    p.add_argument("mu", type=_partition)
    p.add_argument("lam", type=_partition)
    for name, func in (("pk", cmd_pk), ("pbark", cmd_pbark)):
        p = add(name, func, f"shifted power sum {name[:-1]}_k(λ)")
        p.add_argument("lam", type=_partition)
        p.add_argument("k", type=int)
    add("weight", cmd_weight, "pillowcase weight w(λ)").add_argument(
        "partition", type=_partition)
    p = add("gnu", cmd_gnu, "g_ν(λ)")
    p.add_argument("nu", type=_partition)
    p.add_argument("lam", type=_partition)
    p.add_argument("--both", action="store_true", help="also evaluate the formula side")

    p = add("expect", cmd_expect, "expectation of an observable")
    p.add_argument("--obs", required=True)
    p.add_argument("--measure", choices=("pillowcase", "uniform"), default="pillowcase")
    p.add_argument("--qseries", type=int, metavar="N")
    p.add_argument("--fixed-n", type=int, metavar="n")
    p = add("zseries", cmd_zseries, "Z(q) coefficients")
    p.add_argument("order", type=int)
    p.add_argument("--check", action="store_true", help="compare with enumeration")

    for name, func, help_text in (("fit", cmd_fit, "quasimodular fit"),
                                  ("asympt", cmd_asympt, "h -> 0 asymptotics of the fit"),
                                  ("eval", cmd_eval, "numeric value at q = e^{-h}")):
        p = add(name, func, help_text)
        p.add_argument("--obs", help="observable; its pillowcase expectation is used")
        p.add_argument("--measure", choices=("pillowcase", "uniform"), default="pillowcase")
        p.add_argument("--series", help="JSON file with {order, coeffs}")
        p.add_argument("--eisenstein", metavar="W[:m]", help="E_W(q^m)")
        if name == "eval":
            p.add_argument("--h", type=float, required=True)
            p.add_argument("--tol", type=float, default=None)
        else:
            p.add_argument("--weight", type=int, required=True)
            p.add_argument("--step", type=int, default=None)

    p = add("hurwitz", cmd_hurwitz, "Hurwitz number by characters")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--profile", type=_partition, action="append", required=True)
    p.add_argument("--brute", action="store_true", help="also count tuples")
    p = add("coverseries", cmd_coverseries, "pillowcase cover series")
    p.add_argument("--nu", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, default=Partition())

    add("meinardus", cmd_meinardus, "normalized Z_n").add_argument("n", type=int)
    add("sobolev", cmd_sobolev, "‖Δ‖² at scale 1/√|λ|").add_argument(
        "partition", type=_partition)
    p = add("concentration", cmd_concentration, "mass of {‖Δ‖ > ε} at size n")
    p.add_argument("n", type=int)
    p.add_argument("eps", type=str)
    add("vanish", cmd_vanish, "first-term sum for ν").add_argument("nu", type=_partition)
    add("nextterm", cmd_nextterm, "next-term sum and prefactor").add_argument(
        "nu", type=_partition)
    add("report", cmd_report, "recomputed values next to the published ones")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())
