"""Command-line front end.

Subcommands
-----------
``eval``     one function value, printed with 15 significant digits and the
             evaluation route.
``table``    CSV table of the forward (``x,arcsin,arccos,arsinh``) or inverse
             (``x,sin,cos,sinh``) functions, rounded half-even to 4 decimals
             unless ``--full-precision`` is given.
``figure1``  CSV ``p,low,pi,up``: bounds on ``pi_{p,p'}`` and the value itself
             on a uniform p grid.
``check``    predicate sweeps.  ``--format records`` writes one JSON object per
             line with keys ``id, class, grid_points, worst_slack,
             worst_location, status``; status is one of ``PASS``, ``FAIL``,
             ``VACUOUS``, ``NO_COUNTEREXAMPLE`` or ``FINDING``.

Lines starting with ``#`` are comments.  Exit codes: 0 ok, 2 domain error,
3 convergence failure, 4 predicate failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from decimal import ROUND_HALF_EVEN, Decimal

from .errors import ConvergenceError, DomainError, UnknownPredicate
from .inversion import cos_pq, sin_pq, sinh_pq
from .pqtrig import PqParams, arccos_eval, arcsin_eval, arsinh_eval, m_pq, pi_pq
from .bounds import pi_conj_envelope
from .propcheck import GridSpec, PredicateClass, run_all

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3
EXIT_PREDICATE = 4

DEFAULT_XS = (0.0, 0.25, 0.5, 0.75, 1.0)
FUNCTIONS = ("arcsin", "arccos", "arsinh", "sin", "cos", "sinh", "pi", "m")

# Published reference values that disagree with a recomputation: (kind, p, q, x, column).
_KNOWN_MISPRINTS = {
    ("inverse", 2.5, 3.0, 1.0, "sinh"): (
        "0.1003",
        "inconsistent with arsinh(1) = 0.9262 < 1, so sinh(1) must exceed 1",
    ),
}


def _parse_xs(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")


def _common() -> argparse.ArgumentParser:
    c = argparse.ArgumentParser(add_help=False)
    c.add_argument("--p", type=float, default=None, help="first exponent, > 1")
    c.add_argument("--q", type=float, default=None, help="second exponent, > 1")
    c.add_argument("--x", type=float, default=None, help="argument")
    c.add_argument("--xs", type=_parse_xs, default=None, help="comma-separated arguments")
    c.add_argument("--format", choices=("csv", "text", "records"), default=None)
    c.add_argument("--full-precision", action="store_true")
    c.add_argument("--eps", type=float, default=1e-9, help="relative slack tolerance")
    c.add_argument("--grid", choices=("default", "fine", "coarse"), default="default")
    return c


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="gentrig",
        description="Generalized (p,q)-trigonometric functions, bounds and predicate checks.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", parents=[common], help="evaluate one function")
    ev.add_argument("--fn", choices=FUNCTIONS, required=True)

    tb = sub.add_parser("table", parents=[common], help="forward or inverse value table")
    tb.add_argument("--kind", choices=("forward", "inverse"), default="forward")

    fg = sub.add_parser("figure1", parents=[common], help="bounds on pi_{p,p'} as CSV")
    fg.add_argument("--p-min", type=float, default=1.1)
    fg.add_argument("--p-max", type=float, default=10.0)
    fg.add_argument("--n", type=int, default=50)

    ck = sub.add_parser("check", parents=[common], help="run predicate sweeps")
    ck.add_argument("--suite", nargs="+", default=["all"])
    return parser


def _pq(args) -> PqParams:
    if args.p is None or args.q is None:
        raise DomainError("--p and --q are required")
    return PqParams(args.p, args.q)


def _round4(v: float) -> str:
    return str(Decimal(repr(v)).quantize(Decimal("0.0001"), rounding=ROUND_HALF_EVEN))


def _fmt(v: float, full: bool) -> str:
    return repr(v) if full else _round4(v)


def _evaluate(fn: str, pq: PqParams, x: float | None) -> tuple[float, str]:
    if fn == "pi":
        return pi_pq(pq), "Beta"
    if fn == "m":
        return m_pq(pq), "DirectSeries"
    if x is None:
        raise DomainError(f"--x is required for {fn}")
    if fn in ("arcsin", "arccos", "arsinh"):
        r = {"arcsin": arcsin_eval, "arccos": arccos_eval, "arsinh": arsinh_eval}[fn](pq, x)
        return r.value, str(r.method)
    return {"sin": sin_pq, "cos": cos_pq, "sinh": sinh_pq}[fn](pq, x), "Inversion"


def cmd_eval(args, out) -> int:
    pq = _pq(args)
    value, method = _evaluate(args.fn, pq, args.x)
    if args.format == "csv":
        out.write("fn,p,q,x,value,method\n")
        x = "" if args.x is None else repr(args.x)
        out.write(f"{args.fn},{pq.p!r},{pq.q!r},{x},{value:.15g},{method}\n")
    else:
        out.write(f"{value:.15g} {method}\n")
    return EXIT_OK


def cmd_table(args, out) -> int:
    pq = _pq(args)
    xs = args.xs if args.xs is not None else list(DEFAULT_XS)
    if args.x is not None and args.xs is None:
        xs = [args.x]
    if args.kind == "forward":
        cols = ("arcsin", "arccos", "arsinh")
        fns = (lambda x: arcsin_eval(pq, x).value, lambda x: arccos_eval(pq, x).value,
               lambda x: arsinh_eval(pq, x).value)
    else:
        cols = ("sin", "cos", "sinh")
        fns = (lambda y: sin_pq(pq, y), lambda y: cos_pq(pq, y), lambda y: sinh_pq(pq, y))
    rows = [[x] + [f(x) for f in fns] for x in xs]
    notes = []
    for x in xs:
        for col in cols:
            hit = _KNOWN_MISPRINTS.get((args.kind, pq.p, pq.q, x, col))
            if hit:
                printed, why = hit
                notes.append(
                    f"# NOTE: reference table prints {col}({_round4(x)}) = {printed} for "
                    f"p={pq.p:g}, q={pq.q:g}; {why}; the computed value is shown"
                )
    out.write("x," + ",".join(cols) + "\n")
    for row in rows:
        out.write(",".join(_fmt(v, args.full_precision) for v in row) + "\n")
    for n in notes:
        out.write(n + "\n")
    return EXIT_OK


def cmd_figure1(args, out) -> int:
    lo, hi, n = args.p_min, args.p_max, args.n
    if not (1.0 < lo < hi and math.isfinite(hi)) or n < 2:
        raise DomainError(f"need 1 < p_min < p_max and n >= 2, got ({lo}, {hi}, {n})")
    out.write("p,low,pi,up\n")
    for i in range(n):
        p = lo + (hi - lo) * i / (n - 1)
        env = pi_conj_envelope(p)
        v = pi_pq(PqParams(p, p / (p - 1.0)))
        out.write(f"{p:.12g},{env.lower:.12g},{v:.12g},{env.upper:.12g}\n")
    return EXIT_OK


def _json_num(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def cmd_check(args, out) -> int:
    grid = GridSpec.preset(args.grid)
    ids = None if args.suite == ["all"] else args.suite
    reports = run_all(grid, args.eps, ids)
    fmt = args.format or "text"
    failed = False
    for r in reports:
        if r.klass is not PredicateClass.CONJECTURE and not r.passed:
            failed = True
        if fmt == "records":
            rec = r.as_record()
            rec["worst_slack"] = _json_num(rec["worst_slack"])
            rec["worst_location"] = [_json_num(v) for v in rec["worst_location"]]
            out.write(json.dumps(rec, sort_keys=False) + "\n")
        else:
            loc = ", ".join(repr(v) for v in r.worst_location)
            out.write(
                f"{r.status:<17} {r.id:<16} {r.klass.value:<10} points={r.grid_points:<6d} "
                f"worst_slack={r.worst_slack:.6g} at ({loc})\n"
            )
    return EXIT_PREDICATE if failed else EXIT_OK


_COMMANDS = {"eval": cmd_eval, "table": cmd_table, "figure1": cmd_figure1, "check": cmd_check}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args, out)
    except (DomainError, UnknownPredicate) as e:
        msg = e.args[0] if isinstance(e, UnknownPredicate) else e
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
