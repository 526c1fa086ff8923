"""Bracketed scalar root finding."""

from __future__ import annotations

import logging
from typing import Callable

import numpy as np
from scipy.optimize import brentq

from src.numerics.errors import MaxIterations, NoBracket
from src.numerics.tolerances import ToleranceConfig

LOGGER = logging.getLogger(__name__)

# brentq rejects rtol below four machine epsilons and a non-positive xtol.
_MIN_RTOL = 4 * np.finfo(float).eps
_MIN_XTOL = np.finfo(float).tiny


def find_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: ToleranceConfig | None = None,
) -> float:
    """Return a root of the continuous, monotone function ``f`` on ``[lo, hi]``.

    Uses Brent's method, which keeps a valid bracket at every iteration and
    falls back to bisection whenever interpolation stalls, so convergence is
    guaranteed once the endpoints bracket a sign change. The search stops when
    the bracket is narrower than ``abs_tol + rel_tol * |x|``.

    Raises:
        NoBracket: ``f(lo)`` and ``f(hi)`` are non-zero and share a sign.
        MaxIterations: the bracket did not shrink enough in ``max_iterations``.
    """

    tol = tol or ToleranceConfig.for_root_finding()
    lo, hi = (float(lo), float(hi)) if lo <= hi else (float(hi), float(lo))

    f_lo = f(lo)
    if f_lo == 0:
        return lo
    f_hi = f(hi)
    if f_hi == 0:
        return hi
    if np.sign(f_lo) == np.sign(f_hi):
        raise NoBracket(f"no sign change on [{lo!r}, {hi!r}]: f(lo)={f_lo!r}, f(hi)={f_hi!r}")

    root, result = brentq(
        f,
        lo,
        hi,
        xtol=max(tol.abs_tol, _MIN_XTOL),
        rtol=max(tol.rel_tol, _MIN_RTOL),
        maxiter=tol.max_iterations,
        full_output=True,
        disp=False,
    )
    if not result.converged:
        LOGGER.warning(
            "Root search on [%r, %r] stopped after %d iterations (flag=%s)",
            lo,
            hi,
            result.iterations,
            result.flag,
        )
        raise MaxIterations(
            f"root search did not converge within {tol.max_iterations} iterations; last estimate {root!r}"
        )

    LOGGER.debug("Root %r found in %d iterations", root, result.iterations)
    return float(root)
