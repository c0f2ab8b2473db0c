"""Default verification grid and a runner that skips points outside preconditions."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .errors import (
    ConvergenceError,
    InsufficientTruncationError,
    PoleError,
    RegularityError,
    SingularOperatorError,
)
from .exactnum import Cyclotomic, RootOfUnity, make_root_of_unity
from .padic import PAPER, STANDARD, verify_functional_equation, witt_cross_check
from .report import VerificationReport
from .twisted import TwistedParams, verify_multinomial_convolution, verify_sum_of_powers
from .unified import (
    DirichletCharacter,
    UnifiedParams,
    verify_binomial_convolution,
    verify_char_distribution,
    verify_distribution,
    verify_symmetry,
)
from .zeta import interpolation_check

__all__ = [
    "GRID_K",
    "GRID_B",
    "GRID_A",
    "grid_betas",
    "grid_twists",
    "grid_characters",
    "unified_points",
    "twisted_points",
    "run_identity",
    "run_grid",
    "IDENTITIES",
]

GRID_K = (0, 1, 2)
GRID_B = (1, 2)
GRID_A = (Fraction(1), Fraction(2))
GRID_H = (1, 2, 3)
GRID_D = (1, 2, 3)
GRID_X = (Fraction(0), Fraction(1, 3))
DEFAULT_N_MAX = 10

PRECONDITION_ERRORS = (
    PoleError,
    RegularityError,
    SingularOperatorError,
    ConvergenceError,
    InsufficientTruncationError,
)


def grid_betas():
    return (
        Cyclotomic.rational(2),
        Cyclotomic.rational(Fraction(1, 2)),
        make_root_of_unity(3, 1),
        Cyclotomic.rational(-1),
    )


def grid_twists():
    return (RootOfUnity(1, 0), RootOfUnity(2, 1), RootOfUnity(3, 1))


def grid_characters():
    """Characters with modulus in {1, 2, 3}: the principal ones and the quadratic one mod 3."""
    return (
        DirichletCharacter.principal(1),
        DirichletCharacter.principal(2),
        DirichletCharacter.principal(3),
        DirichletCharacter(3, 2, {1: 0, 2: 1}),
    )


def unified_points():
    for k, b, a, beta in itertools.product(GRID_K, GRID_B, GRID_A, grid_betas()):
        yield UnifiedParams(k, a, b, beta)


def twisted_points(hs=GRID_H):
    for params in unified_points():
        for w in grid_twists():
            for h in hs:
                yield TwistedParams(params, w, h)


def _distinct(values):
    out = []
    for v in values:
        if not any(v == u for u in out):
            out.append(v)
    return out


def _guarded(identity, params, fn, *args):
    try:
        return fn(*args)
    except PRECONDITION_ERRORS as exc:
        return VerificationReport.skip(identity, params, f"{type(exc).__name__}: {exc}")


def _task_symmetry(p, x, n_max):
    return _guarded("symmetry", {**p.as_dict(), "x": str(x)}, verify_symmetry, p, x, n_max)


def _task_distribution(p, d, x, n_max):
    return _guarded(
        "distribution", {**p.as_dict(), "d": d, "x": str(x)}, verify_distribution, p, d, x, n_max
    )


def _task_binomial(p, x, n_max):
    return _guarded(
        "binomial", {**p.as_dict(), "x": str(x)}, verify_binomial_convolution, p, x, n_max
    )


def _task_char(chi, p, x, n_max):
    return _guarded(
        "char-dist",
        {**p.as_dict(), "x": str(x), "chi": chi.as_dict()},
        verify_char_distribution,
        chi,
        p,
        x,
        n_max,
    )


def _task_witt(tp, x, n_max):
    return _guarded("witt", {**tp.as_dict(), "x": str(x)}, witt_cross_check, tp, x, n_max)


def _task_multinomial(tp, n_max):
    return _guarded("multinomial", tp.as_dict(), verify_multinomial_convolution, tp, n_max)


def _task_sum_powers(tp, x, n_max):
    return _guarded(
        "sum-powers", {**tp.as_dict(), "x": str(x)}, verify_sum_of_powers, tp, x, n_max
    )


def _task_funceq(r, mode, n_max):
    return _guarded(
        "funceq", {"r": str(r), "mode": mode}, verify_functional_equation, r, range(n_max + 1),
        (1, 2, 3), mode,
    )


def _task_zeta(tp, n_max, M, tol):
    return _guarded(
        "zeta-interp", tp.as_dict(), interpolation_check, tp, range(0, n_max + 1), M, tol
    )


def _tasks(identity, n_max, xs=GRID_X, ds=GRID_D, hs=GRID_H, M=200, tol=1e-9):
    if identity == "symmetry":
        return [(_task_symmetry, (p, x, n_max)) for p in unified_points() for x in xs]
    if identity == "distribution":
        return [
            (_task_distribution, (p, d, x, n_max)) for p in unified_points() for d in ds for x in xs
        ]
    if identity == "binomial":
        return [(_task_binomial, (p, x, n_max)) for p in unified_points() for x in xs]
    if identity == "char-dist":
        return [
            (_task_char, (chi, p, x, n_max))
            for chi in grid_characters()
            if chi.modulus in ds
            for p in unified_points()
            for x in xs
        ]
    if identity == "witt":
        return [(_task_witt, (tp, x, n_max)) for tp in twisted_points(hs) for x in xs]
    if identity == "multinomial":
        return [(_task_multinomial, (tp, n_max)) for tp in twisted_points(hs)]
    if identity == "sum-powers":
        return [(_task_sum_powers, (tp, x, n_max)) for tp in twisted_points(hs) for x in xs]
    if identity == "funceq":
        ratios = _distinct(tp.ratio for tp in twisted_points((1,)))
        return [(_task_funceq, (r, mode, n_max)) for r in ratios for mode in (PAPER, STANDARD)]
    if identity == "zeta-interp":
        return [(_task_zeta, (tp, min(n_max, 6), M, tol)) for tp in twisted_points(hs)]
    raise ValueError(f"unknown identity {identity!r}")


IDENTITIES = (
    "symmetry",
    "distribution",
    "binomial",
    "char-dist",
    "multinomial",
    "sum-powers",
    "witt",
    "funceq",
    "zeta-interp",
)


def _call(task):
    fn, args = task
    return fn(*args)


def run_identity(identity, n_max=DEFAULT_N_MAX, jobs=1, **grid_options):
    """Run one identity over the grid; reports come back in grid order."""
    tasks = _tasks(identity, n_max, **grid_options)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_call, tasks, chunksize=4))
    return [_call(t) for t in tasks]


def run_grid(identities=IDENTITIES, n_max=DEFAULT_N_MAX, jobs=1, **grid_options):
    out = []
    for identity in identities:
        out.extend(run_identity(identity, n_max, jobs, **grid_options))
    return out
