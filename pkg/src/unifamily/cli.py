"""Command-line front end.

Examples::

    unifamily numbers --k 0 --a 1 --b 1 --beta 2 --n-max 2 --format json
    unifamily verify symmetry --k 1 --beta 1 --x 0 --n-max 6
    unifamily zeta --beta 1/2 --h 2 --s -1 --M 80
    unifamily verify all --jobs 4

Exit status: 0 success, 1 an exact identity failed, 2 bad input, 3 pole or
singular operator, 4 convergence precondition, 5 tolerance failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import grid
from .errors import (
    ConvergenceError,
    ExpressionParseError,
    InsufficientTruncationError,
    PoleError,
    RegularityError,
    SeriesZeroDivisionError,
    SingularOperatorError,
)
from .exactnum import Cyclotomic, RootOfUnity, complex_embed
from .padic import PAPER, STANDARD, fermionic_partial_sums, verify_functional_equation, witt_cross_check
from .report import FAIL, PASS, cyclo_to_dict
from .twisted import (
    TwistedParams,
    multiple_twisted_polys,
    twisted_values,
    verify_multinomial_convolution,
    verify_sum_of_powers,
)
from .unified import (
    DirichletCharacter,
    UnifiedParams,
    appell_polynomials,
    char_values,
    unified_numbers,
    verify_binomial_convolution,
    verify_char_distribution,
    verify_distribution,
    verify_symmetry,
)
from .zeta import ZetaQuery, interpolation_check, zeta_eval

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_POLE = 3
EXIT_CONVERGENCE = 4
EXIT_TOLERANCE = 5


# ---------------------------------------------------------------------------
# value expressions


@dataclass(frozen=True)
class ValueExpr:
    """q * zeta_m^e, or just q when ``root`` is None."""

    rational: Fraction
    root: RootOfUnity | None = None

    @property
    def value(self):
        v = Cyclotomic.rational(self.rational)
        if self.root is not None:
            v = v * self.root.value
        return v

    def __str__(self):
        if self.root is None:
            return str(self.rational)
        z = f"zeta({self.root.order},{self.root.exponent})"
        return z if self.rational == 1 else f"{self.rational}*{z}"


_INT = re.compile(r"[+-]?\d+")
_POSINT = re.compile(r"\d+")


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def fail(self, msg):
        raise ExpressionParseError(f"{msg} in {self.text!r}", self.pos)

    def eat(self, literal):
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal):
        if not self.eat(literal):
            self.fail(f"expected {literal!r}")

    def match(self, pattern, what):
        m = pattern.match(self.text, self.pos)
        if not m:
            self.fail(f"expected {what}")
        self.pos = m.end()
        return int(m.group())

    def done(self):
        return self.pos == len(self.text)


def _rational(sc):
    num = sc.match(_INT, "an integer")
    if sc.eat("/"):
        den = sc.match(_POSINT, "a positive denominator")
        if den == 0:
            sc.fail("zero denominator")
        return Fraction(num, den)
    return Fraction(num)


def _zeta_call(sc):
    sc.expect("zeta(")
    m = sc.match(_INT, "root order")
    sc.expect(",")
    e = sc.match(_INT, "exponent")
    sc.expect(")")
    if m < 1:
        sc.fail("root order must be positive")
    return RootOfUnity(m, e)


def parse_value_expr(text):
    """Parse ``RATIONAL``, ``RATIONAL*zeta(m,e)`` or ``zeta(m,e)``."""
    text = text.strip()
    if re.search(r"\d\.\d*|\.\d|[eE][+-]?\d", text) and "zeta" not in text:
        raise ExpressionParseError(
            f"{text!r}: decimal and floating-point values are not supported; only exact "
            "rationals times roots of unity (e.g. 1/2, 3*zeta(4,1)) can be verified exactly",
            text.find("."),
        )
    sc = _Scanner(text)
    if text.startswith("zeta("):
        root = _zeta_call(sc)
        q = Fraction(1)
    else:
        q = _rational(sc)
        root = None
        if sc.eat("*"):
            root = _zeta_call(sc)
    if not sc.done():
        sc.fail("unexpected trailing input")
    return ValueExpr(q, root)


def _rational_arg(text):
    expr = parse_value_expr(text)
    if expr.root is not None:
        raise ExpressionParseError(f"{text!r}: a rational number is required here")
    return expr.rational


def _root_arg(text):
    m = re.fullmatch(r"\s*(\d+)\s*:\s*([+-]?\d+)\s*", text)
    if not m or int(m.group(1)) < 1:
        raise ExpressionParseError(f"{text!r}: expected m:e with m >= 1")
    return RootOfUnity(int(m.group(1)), int(m.group(2)))


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _emit_error("usage", EXIT_PARSE, message)
        sys.exit(EXIT_PARSE)


def _add_params(p):
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--a", default="1", help="positive rational")
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--beta", default="1", help="value expression, e.g. 2, 1/2, zeta(3,1)")
    p.add_argument("--w", default="1:0", help="twist root of unity as m:e")
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--x", default="0", help="rational evaluation point")
    p.add_argument("--d", type=int, default=2, help="distribution modulus")
    p.add_argument("--chi", help="character table file")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--trunc", type=int, help="override the series truncation order")
    p.add_argument("--p", type=int, default=3)
    p.add_argument("--N", type=int, default=5)
    p.add_argument("--r", default="1", help="ratio value expression (padic, funceq)")
    p.add_argument("--n", type=int, default=0, help="moment index for padic")
    p.add_argument("--mode", choices=(PAPER, STANDARD), default=PAPER)
    p.add_argument("--s", default="0", help="zeta argument, Python complex syntax")
    p.add_argument("--M", type=int, default=200)
    p.add_argument("--precision", type=int, default=30)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--strict-paper", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv"), default="json")


VERIFY_TARGETS = (
    "symmetry",
    "distribution",
    "binomial",
    "char-dist",
    "multinomial",
    "sum-powers",
    "witt",
    "funceq",
    "zeta-interp",
    "all",
)


def build_parser():
    parser = _Parser(prog="unifamily", description="Unified Bernoulli/Euler/Genocchi family")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("numbers", "poly", "char", "twisted", "multi", "zeta", "padic"):
        _add_params(sub.add_parser(name))
    verify = sub.add_parser("verify")
    verify.add_argument("identity", choices=VERIFY_TARGETS)
    _add_params(verify)
    return parser


@dataclass
class RunConfig:
    command: str
    identity: str | None
    params: UnifiedParams
    twist: TwistedParams
    x: Fraction
    d: int
    chi: DirichletCharacter | None
    n_max: int
    trunc: int | None
    p: int
    N: int
    r: Cyclotomic
    n: int
    mode: str
    s: complex
    M: int
    precision: int
    tol: float
    strict_paper: bool
    jobs: int
    fmt: str
    raw: dict

    @classmethod
    def from_args(cls, args):
        for name in ("n_max", "N", "M", "precision", "jobs", "d", "h", "b", "p"):
            if getattr(args, name) is None:
                continue
            if getattr(args, name) < (0 if name == "n_max" else 1):
                raise ValueError(f"--{name.replace('_', '-')} must be positive")
        if args.k < 0 or args.n < 0:
            raise ValueError("--k and --n must be non-negative")
        if args.tol <= 0:
            raise ValueError("--tol must be positive")
        a = _rational_arg(args.a)
        if a <= 0:
            raise ValueError("--a must be a positive rational")
        beta = parse_value_expr(args.beta)
        if beta.rational == 0:
            raise ValueError("--beta must be nonzero")
        params = UnifiedParams(args.k, a, args.b, beta.value)
        w = _root_arg(args.w)
        try:
            s = complex(args.s.replace(" ", ""))
        except ValueError:
            raise ExpressionParseError(f"{args.s!r} is not a complex number") from None
        chi = DirichletCharacter.from_file(args.chi) if args.chi else None
        raw = {
            "k": args.k,
            "a": str(a),
            "b": args.b,
            "beta": str(beta),
            "w": str(w),
            "h": args.h,
            "x": str(_rational_arg(args.x)),
            "n_max": args.n_max,
        }
        return cls(
            command=args.command,
            identity=getattr(args, "identity", None),
            params=params,
            twist=TwistedParams(params, w, args.h),
            x=_rational_arg(args.x),
            d=args.d,
            chi=chi,
            n_max=args.n_max,
            trunc=args.trunc,
            p=args.p,
            N=args.N,
            r=parse_value_expr(args.r).value,
            n=args.n,
            mode=args.mode,
            s=s,
            M=args.M,
            precision=args.precision,
            tol=args.tol,
            strict_paper=args.strict_paper,
            jobs=args.jobs,
            fmt=args.format,
            raw=raw,
        )


# ---------------------------------------------------------------------------
# output


def approx_string(z, digits=17):
    val = complex_embed(z, digits + 10)
    with mpmath.workdps(digits + 10):
        val = mpmath.chop(val, tol=mpmath.mpf(10) ** -(digits + 5))
    with mpmath.workdps(digits):
        re_s = mpmath.nstr(val.real, digits)
        if val.imag == 0:
            return re_s
        sign = "-" if val.imag < 0 else "+"
        return f"{re_s}{sign}{mpmath.nstr(abs(val.imag), digits)}j"


def _result_row(n, value, **extra):
    row = {"n": n, "value": cyclo_to_dict(value), "approx": approx_string(value)}
    row.update(extra)
    return row


def _emit_error(kind, code, message):
    line = json.dumps({"error": kind, "exit_code": code, "message": " ".join(str(message).split())})
    print(line, file=sys.stderr)


def _emit(doc, fmt, out):
    if fmt == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if "reports" in doc:
        writer.writerow(["identity", "status", "params", "checked", "first_failure", "notes"])
        for rep in doc["reports"]:
            writer.writerow([
                rep["identity"],
                rep["status"],
                json.dumps(rep["params"], sort_keys=True),
                rep["checked"],
                json.dumps(rep["first_failure"], sort_keys=True),
                " | ".join(rep["notes"]),
            ])
    else:
        rows = doc["results"]
        keys = []
        for row in rows:
            for key in row:
                if key not in keys:
                    keys.append(key)
        writer.writerow(keys)
        for row in rows:
            cells = []
            for key in keys:
                v = row.get(key, "")
                if key == "value" and isinstance(v, dict):
                    v = f"{v['order']}:" + " ".join(v["coeffs"])
                elif isinstance(v, (dict, list)):
                    v = json.dumps(v, sort_keys=True)
                cells.append(v)
            writer.writerow(cells)
        if "report" in doc and doc["report"]:
            rep = doc["report"]
            writer.writerow([])
            writer.writerow(["identity", "status", "first_failure"])
            writer.writerow([rep["identity"], rep["status"], json.dumps(rep["first_failure"], sort_keys=True)])
    out.write(buf.getvalue())


# ---------------------------------------------------------------------------
# dispatch


def _compute(cfg):
    """Return (document, exit status) for a non-verify command."""
    params, tp, n_max = cfg.params, cfg.twist, cfg.n_max
    doc = {"params": cfg.raw, "results": [], "report": None}
    if cfg.command == "numbers":
        vals = unified_numbers(params, n_max, cfg.trunc)
        doc["results"] = [_result_row(n, v) for n, v in enumerate(vals)]
    elif cfg.command == "poly":
        polys = appell_polynomials(unified_numbers(params, n_max, cfg.trunc))
        doc["results"] = [
            _result_row(n, p(cfg.x), poly=[cyclo_to_dict(c) for c in p.coeffs], poly_text=str(p))
            for n, p in enumerate(polys)
        ]
    elif cfg.command == "char":
        if cfg.chi is None:
            raise ValueError("char needs --chi <table file>")
        doc["params"]["chi"] = cfg.chi.as_dict()
        vals = char_values(cfg.chi, params, cfg.x, n_max, cfg.trunc)
        doc["results"] = [_result_row(n, v) for n, v in enumerate(vals)]
    elif cfg.command == "twisted":
        vals = twisted_values(tp, cfg.x, n_max, cfg.trunc)
        doc["results"] = [_result_row(n, v) for n, v in enumerate(vals)]
    elif cfg.command == "multi":
        vals = multiple_twisted_polys(tp, cfg.x, n_max, cfg.trunc)
        doc["results"] = [_result_row(n, v) for n, v in enumerate(vals)]
    elif cfg.command == "zeta":
        res = zeta_eval(ZetaQuery(cfg.s, tp, cfg.M, cfg.precision, cfg.strict_paper))
        doc["params"].update({"s": str(cfg.s), "M": cfg.M, "strict_paper": cfg.strict_paper})
        with mpmath.workdps(cfg.precision):
            doc["results"] = [{
                "s": str(cfg.s),
                "re": mpmath.nstr(res.value.real, cfg.precision),
                "im": mpmath.nstr(res.value.imag, cfg.precision),
                "tail_bound": res.tail_bound,
                "terms_used": res.terms_used,
            }]
    elif cfg.command == "padic":
        r = cfg.r.to_rational() if cfg.r.is_rational() else None
        if r is None:
            raise ValueError("padic partial sums need a rational --r")
        trace = fermionic_partial_sums(cfg.p, cfg.N, r, cfg.n)
        doc["params"] = {"p": cfg.p, "N": cfg.N, "r": str(r), "n": cfg.n}
        doc["results"] = [
            {"N": N, "sum": str(S), "valuation": v if v != float("inf") else "inf"}
            for N, S, v in zip(trace.depths, trace.sums, trace.valuations)
        ]
        doc["report"] = {
            "identity": "padic-convergence",
            "status": PASS if trace.is_monotone() else FAIL,
            "first_failure": None,
            "limit": str(trace.limit),
            "offset": trace.offset,
        }
    return doc, EXIT_OK


def _verify_single(cfg):
    ident = cfg.identity
    params, tp, x, n_max = cfg.params, cfg.twist, cfg.x, cfg.n_max
    if ident == "symmetry":
        return verify_symmetry(params, x, n_max)
    if ident == "distribution":
        return verify_distribution(params, cfg.d, x, n_max)
    if ident == "binomial":
        return verify_binomial_convolution(params, x, n_max)
    if ident == "char-dist":
        if cfg.chi is None:
            raise ValueError("char-dist needs --chi <table file>")
        return verify_char_distribution(cfg.chi, params, x, n_max)
    if ident == "multinomial":
        return verify_multinomial_convolution(tp, n_max)
    if ident == "sum-powers":
        return verify_sum_of_powers(tp, x, n_max)
    if ident == "witt":
        return witt_cross_check(tp, x, n_max)
    if ident == "funceq":
        return verify_functional_equation(cfg.r, range(n_max + 1), (1, 2, 3), cfg.mode)
    if ident == "zeta-interp":
        return interpolation_check(
            tp, range(0, n_max + 1), cfg.M, cfg.tol, cfg.precision, cfg.strict_paper
        )
    raise ValueError(f"unknown identity {ident}")


def _status_code(reports):
    failed = [r for r in reports if r.status == FAIL]
    if not failed:
        return EXIT_OK
    if all(r.identity == "zeta-interp" for r in failed):
        return EXIT_TOLERANCE
    return EXIT_FAILED


def _verify(cfg):
    if cfg.identity == "all":
        reports = grid.run_grid(n_max=cfg.n_max, jobs=cfg.jobs)
        counts = {}
        for rep in reports:
            key = (rep.identity, rep.status)
            counts[key] = counts.get(key, 0) + 1
        summary = [
            {"identity": i, "status": s, "count": c} for (i, s), c in sorted(counts.items())
        ]
        code = _status_code(reports)
        doc = {
            "params": {"grid": "default", "n_max": cfg.n_max},
            "results": summary,
            "reports": [r.to_dict(include_instances=False) for r in reports],
            "report": {
                "identity": "all",
                "status": PASS if code == EXIT_OK else FAIL,
                "first_failure": next(
                    (r.to_dict(include_instances=False) for r in reports if r.status == FAIL), None
                ),
            },
        }
        return doc, code
    rep = _verify_single(cfg)
    doc = {"params": {**cfg.raw, **rep.params}, "results": [], "report": rep.to_dict()}
    return doc, _status_code([rep])


_ERROR_CODES = (
    (ExpressionParseError, "parse", EXIT_PARSE),
    (PoleError, "pole", EXIT_POLE),
    (SingularOperatorError, "singular", EXIT_POLE),
    (RegularityError, "regularity", EXIT_POLE),
    (SeriesZeroDivisionError, "zero-division", EXIT_POLE),
    (InsufficientTruncationError, "truncation", EXIT_POLE),
    (ConvergenceError, "convergence", EXIT_CONVERGENCE),
    (OSError, "io", EXIT_PARSE),
    (ValueError, "invalid", EXIT_PARSE),
)


def run(argv=None, out=None):
    """Parse ``argv``, execute, write the document to ``out``; return the exit status."""
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors (already reported) and --help
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        cfg = RunConfig.from_args(args)
        if cfg.command == "verify":
            doc, code = _verify(cfg)
        else:
            doc, code = _compute(cfg)
    except tuple(e for e, _, _ in _ERROR_CODES) as exc:
        for etype, kind, code in _ERROR_CODES:
            if isinstance(exc, etype):
                _emit_error(kind, code, exc)
                return code
        raise  # pragma: no cover
    _emit(doc, cfg.fmt, out)
    if code == EXIT_FAILED:
        _emit_error("verification-failed", code, doc["report"]["first_failure"])
    elif code == EXIT_TOLERANCE:
        _emit_error("tolerance", code, doc["report"]["first_failure"])
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
