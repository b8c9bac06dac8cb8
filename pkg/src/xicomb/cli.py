"""Command-line front end.

Subcommands::

    xicomb eval {xi,xi2,gamma,gamma2,abel,hurwitz} --m M [--mode exact|float]
    xicomb verify --range A:B [--cross-check] [--jobs N]
    xicomb table --m 1,2,4
    xicomb abel --m 2 --x 1 --y 1 --p 0 --q -1
    xicomb hurwitz --m 2 --xs 0,0,0 [--ps 0,0,0]

``--m`` takes an integer, a comma list, or an inclusive range ``A:B``.
Rationals are written ``p/q``; a value starting with ``-`` must be attached
with ``=``, e.g. ``--xs=-1/2,3``.

Exit codes: 0 ok, 1 verification failure, 2 usage, 3 domain, 4 singular term.
"""

import argparse
import csv
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import abel_hurwitz, exact_core, float_eval
from .errors import DomainError, ResourceError, SingularTermError

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_SINGULAR = 4

QUANTITIES = ("xi", "xi2", "gamma", "gamma2", "abel", "hurwitz")


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    m: int
    quantity: str
    mode: str
    value: str
    extras: dict = field(default_factory=dict)

    def as_row(self):
        row = {"m": self.m, "quantity": self.quantity, "mode": self.mode,
               "value": self.value}
        row.update(self.extras)
        return row


@dataclass
class ComparatorRow:
    m: int
    langford_bound: float
    maurer_bound: float
    xi_value: float

    def as_row(self):
        return {
            "m": self.m,
            "langford_bound": format_float(self.langford_bound),
            "maurer_bound": format_float(self.maurer_bound),
            "xi_value": format_float(self.xi_value),
        }


def format_float(v: float) -> str:
    """17 significant digits; positional for moderate magnitudes."""
    if not math.isfinite(v):
        return repr(v)
    if v == 0.0:
        return ("-" if math.copysign(1.0, v) < 0 else "") + "0.0000000000000000"
    sci = f"{v:.16e}"
    if not 1e-5 <= abs(v) < 1e17:
        return sci
    mantissa, exp = sci.split("e")
    exp = int(exp)
    sign = "-" if mantissa.startswith("-") else ""
    digits = mantissa.lstrip("-").replace(".", "")
    if exp >= 0:
        return f"{sign}{digits[: exp + 1]}.{digits[exp + 1:]}"
    return f"{sign}0.{'0' * (-exp - 1)}{digits}"


def format_rational(v) -> str:
    return str(Fraction(v))


# -- argument parsing -------------------------------------------------------

def _parse_m_values(text):
    try:
        if ":" in text:
            lo, hi = text.split(":")
            lo, hi = int(lo), int(hi)
            if lo > hi:
                raise argparse.ArgumentTypeError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid m list {text!r}") from None


def _parse_range(text):
    try:
        lo, hi = (int(t) for t in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A:B, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _parse_rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid rational {text!r}") from None


def _parse_rational_list(text):
    return [_parse_rational(tok) for tok in text.split(",")]


def _parse_int_list(text):
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "tsv", "json"), default="tsv")
    common.add_argument("--mode", choices=("exact", "float"), default="exact")
    common.add_argument("--tol", type=float, default=float_eval.DEFAULT_REL_CUTOFF,
                        help="relative cutoff for float-mode series")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--timing", action="store_true",
                        help="add elapsed seconds to each record")

    parser = argparse.ArgumentParser(
        prog="xicomb",
        description="Exact and floating-point evaluation of xi, xi2 and "
                    "Abel/Hurwitz sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def abel_args(p, required):
        p.add_argument("--x", type=_parse_rational, required=required)
        p.add_argument("--y", type=_parse_rational, required=required)
        p.add_argument("--p", type=int, default=0)
        p.add_argument("--q", type=int, default=0)

    def hurwitz_args(p, required):
        p.add_argument("--xs", type=_parse_rational_list, required=required)
        p.add_argument("--ps", type=_parse_int_list, default=None)

    p = sub.add_parser("eval", parents=[common], help="evaluate a quantity")
    p.add_argument("quantity", choices=QUANTITIES)
    p.add_argument("--m", type=_parse_m_values, required=True)
    abel_args(p, required=False)
    hurwitz_args(p, required=False)

    p = sub.add_parser("verify", parents=[common],
                       help="check xi2 = xi + m exactly over a range")
    p.add_argument("--range", dest="m_range", type=_parse_range, required=True)
    p.add_argument("--cross-check", action="store_true",
                   help="also evaluate the definitional sums")
    p.add_argument("--cross-cap", type=int,
                   default=exact_core.DEFAULT_CROSS_CHECK_CAP)
    p.add_argument("--cap", type=int, default=exact_core.DEFAULT_SIMPLIFIED_CAP)
    p.add_argument("--values", action="store_true",
                   help="include gamma and gamma2 in each report")

    p = sub.add_parser("table", parents=[common],
                       help="compare xi(m) with m+1 and 2*sqrt(m)")
    p.add_argument("--m", type=_parse_m_values, required=True)

    p = sub.add_parser("abel", parents=[common], help="Abel sum A_m(x,y;p,q)")
    p.add_argument("--m", type=_parse_m_values, required=True)
    abel_args(p, required=True)

    p = sub.add_parser("hurwitz", parents=[common],
                       help="Hurwitz sum B_m(x_1..x_n;p_1..p_n)")
    p.add_argument("--m", type=_parse_m_values, required=True)
    hurwitz_args(p, required=True)
    return parser


# -- output -----------------------------------------------------------------

def _emit(rows, fmt, out):
    writer = None
    for row in rows:
        if fmt == "json":
            out.write(json.dumps(row) + "\n")
            continue
        if writer is None:
            writer = csv.DictWriter(
                out, fieldnames=list(row),
                delimiter="\t" if fmt == "tsv" else ",",
                lineterminator="\n",
            )
            writer.writeheader()
        writer.writerow({k: _cell(v) for k, v in row.items()})
    out.flush()


def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "na"
    return v


# -- commands ---------------------------------------------------------------

def _timed(args, fn, *a):
    start = time.perf_counter()
    rec = fn(*a)
    if args.timing:
        rec.extras["elapsed"] = format_float(time.perf_counter() - start)
    return rec


def _scalar_record(quantity, m, mode, tol):
    if mode == "exact":
        value = {
            "xi": exact_core.xi_exact,
            "xi2": exact_core.xi2_exact,
            "gamma": exact_core.gamma_simplified,
            "gamma2": exact_core.gamma2_simplified,
        }[quantity](m)
        return OutputRecord(m, quantity, mode, format_rational(value))
    if quantity in ("xi", "xi2"):
        fn = float_eval.xi_float if quantity == "xi" else float_eval.xi2_float
        ev = fn(m, tol)
        return OutputRecord(m, quantity, mode, format_float(ev.value), {
            "terms_used": ev.terms_used,
            "truncation_bound": format_float(ev.truncation_bound),
        })
    exact = (exact_core.gamma_simplified if quantity == "gamma"
             else exact_core.gamma2_simplified)(m)
    try:
        value = float(exact)
    except OverflowError:
        raise DomainError(
            f"{quantity}({m}) overflows double precision; use --mode exact"
        ) from None
    return OutputRecord(m, quantity, mode, format_float(value))


def _abel_record(m, args):
    value = abel_hurwitz.abel_sum(m, args.x, args.y, args.p, args.q)
    return OutputRecord(m, "abel", "exact", format_rational(value), {
        "x": format_rational(args.x), "y": format_rational(args.y),
        "p": args.p, "q": args.q,
    })


def _hurwitz_record(m, args):
    value = abel_hurwitz.hurwitz_sum(m, args.xs, args.ps)
    ps = args.ps if args.ps is not None else [0] * len(args.xs)
    return OutputRecord(m, "hurwitz", "exact", format_rational(value), {
        "xs": ",".join(format_rational(x) for x in args.xs),
        "ps": ",".join(str(p) for p in ps),
    })


def _require_exact(args, quantity):
    if args.mode != "exact":
        raise UsageError(f"{quantity} supports --mode exact only")


def cmd_eval(args, out):
    q = args.quantity
    if q == "abel":
        return cmd_abel(args, out)
    if q == "hurwitz":
        return cmd_hurwitz(args, out)
    rows = (_timed(args, _scalar_record, q, m, args.mode, args.tol).as_row()
            for m in args.m)
    _emit(rows, args.format, out)
    return EXIT_OK


def cmd_abel(args, out):
    _require_exact(args, "abel")
    if args.x is None or args.y is None:
        raise UsageError("abel needs --x and --y")
    rows = (_timed(args, _abel_record, m, args).as_row() for m in args.m)
    _emit(rows, args.format, out)
    return EXIT_OK


def cmd_hurwitz(args, out):
    _require_exact(args, "hurwitz")
    if args.xs is None:
        raise UsageError("hurwitz needs --xs")
    rows = (_timed(args, _hurwitz_record, m, args).as_row() for m in args.m)
    _emit(rows, args.format, out)
    return EXIT_OK


def _verify_one(job):
    m, cross_check, cross_cap, cap = job
    return exact_core.verify_identity(m, cross_check, cross_cap, cap)


def _report_row(report, values, timing):
    row = {
        "m": report.m,
        "identity_holds": report.identity_holds,
        "telescope_holds": report.telescope_holds,
        "lemma_holds": report.lemma_holds,
        "passed": report.passed,
    }
    if values:
        row["gamma"] = str(report.gamma_simplified)
        row["gamma2"] = str(report.gamma2_simplified)
    if timing:
        row["elapsed"] = format_float(report.elapsed)
    return row


def cmd_verify(args, out):
    lo, hi = args.m_range
    exact_core.check_m(lo)
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    # Fail fast on caps before emitting anything.
    if hi > args.cap:
        raise ResourceError(f"m={hi} exceeds the verification cap {args.cap}")
    if args.cross_check and hi > args.cross_cap:
        raise ResourceError(
            f"cross-check requested up to m={hi} above cap {args.cross_cap}"
        )
    jobs = [(m, args.cross_check, args.cross_cap, args.cap)
            for m in range(lo, hi + 1)]
    counts = {"passed": 0, "failed": 0}

    def rows(reports):
        for report in reports:
            counts["passed" if report.passed else "failed"] += 1
            yield _report_row(report, args.values, args.timing)

    if args.jobs == 1:
        _emit(rows(map(_verify_one, jobs)), args.format, out)
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            # map() preserves input order regardless of completion order
            _emit(rows(pool.map(_verify_one, jobs, chunksize=8)),
                  args.format, out)
    total = counts["passed"] + counts["failed"]
    print(f"verify {lo}:{hi}: {counts['passed']}/{total} passed, "
          f"{counts['failed']} failed", file=sys.stderr)
    return EXIT_OK if counts["failed"] == 0 else EXIT_VERIFY_FAILED


def comparator_row(m: int, mode: str = "exact", tol: float = float_eval.DEFAULT_REL_CUTOFF):
    """Build a row and check xi(m) against both bounds."""
    exact_core.check_m(m)
    langford = float(m + 1)
    maurer = 2.0 * math.sqrt(m)
    if mode == "exact":
        g = exact_core.gamma_simplified(m)
        mm = m**m
        ok = g <= (m + 1) * mm and g * g <= 4 * m * mm * mm
        xi = float(Fraction(g, mm))
    else:
        xi = float_eval.xi_float(m, tol).value
        ok = xi <= langford and xi <= maurer
    if not ok:
        raise RuntimeError(f"xi({m}) = {xi!r} exceeds a comparator bound")
    return ComparatorRow(m, langford, maurer, xi)


def cmd_table(args, out):
    rows = (comparator_row(m, args.mode, args.tol).as_row() for m in args.m)
    _emit(rows, args.format, out)
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "verify": cmd_verify,
    "table": cmd_table,
    "abel": cmd_abel,
    "hurwitz": cmd_hurwitz,
}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"xicomb: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"xicomb: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        # comparator violation: a computation bug, not a user error
        print(f"xicomb: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except SingularTermError as exc:
        print(f"xicomb: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except DomainError as exc:
        print(f"xicomb: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        # e.g. --tol outside (0, 1)
        print(f"xicomb: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
