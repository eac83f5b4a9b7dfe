"""Floating-point checks of the N -> infinity limits.

Pochhammer quotients are evaluated as log-gamma differences; the products
themselves overflow doubles long before N = 10^4.
"""

from __future__ import annotations

import math
from typing import Sequence

from .reports import LimitReport

DEFAULT_GRID = (100, 1000, 10000)
DEFAULT_TOL = 1e-2


def _gamma_sign(x: float) -> int:
    if x > 0:
        return 1
    if x == math.floor(x):
        raise ZeroDivisionError(f"gamma pole at {x}")
    return -1 if math.ceil(-x) % 2 else 1


def log_poch(x: float, m: int) -> tuple[int, float]:
    """(sign, log|(x)_m|) for real x."""
    if m == 0:
        return 1, 0.0
    if x > 0:
        return 1, math.lgamma(x + m) - math.lgamma(x)
    if x + m - 1 < 0:
        # every factor negative: (x)_m = (-1)^m (1-x-m)_m
        s, v = log_poch(1 - x - m, m)
        return s * (-1) ** m, v
    if x == math.floor(x):
        return 0, -math.inf
    sign = _gamma_sign(x + m) * _gamma_sign(x)
    return sign, math.lgamma(x + m) - math.lgamma(x)


def poch_ratio(top: float, bottom: float, m: int) -> float:
    st, lt = log_poch(top, m)
    sb, lb = log_poch(bottom, m)
    if sb == 0:
        raise ZeroDivisionError("vanishing Pochhammer denominator")
    return st * sb * math.exp(lt - lb)


def _report(limit_id, params, grid, f, target, tol) -> LimitReport:
    points = []
    for N in grid:
        v = f(N)
        points.append((N, v, abs(v - target)))
    return LimitReport(limit_id, {k: repr(v) for k, v in params.items()}, points, target, tol)


def limit_disc_power(a: float, t: float, N_grid: Sequence[int] = DEFAULT_GRID,
                     tol: float = DEFAULT_TOL, complement: bool = False) -> LimitReport:
    """(1+n)_{N-n}/(a+n)_{N-n} -> t^{a-1} with n = round(tN).

    ``complement`` checks the mirrored factor (1+N-n)_n/(a+N-n)_n -> (1-t)^{a-1}.
    """
    if not 0 < t < 1:
        raise ValueError("t must lie in (0, 1)")
    if a <= 0:
        raise ValueError("a must be positive")

    def value(N):
        n = round(t * N)
        if complement:
            return poch_ratio(1 + N - n, a + N - n, n)
        return poch_ratio(1 + n, a + n, N - n)

    target = (1 - t) ** (a - 1) if complement else t ** (a - 1)
    name = "disc-power-complement" if complement else "disc-power"
    return _report(name, {"a": a, "t": t}, N_grid, value, target, tol)


def limit_t1F0(a: float, z: float, N_grid: Sequence[int] = DEFAULT_GRID,
               tol: float = DEFAULT_TOL) -> LimitReport:
    """(a + N/z - N)_N / (N/z - N)_N -> (1 - z)^{-a}."""
    if not z < 1 or z == 0:
        raise ValueError("need z < 1, z != 0")

    def value(N):
        w = N / z
        return poch_ratio(a + w - N, w - N, N)

    return _report("t1f0", {"a": a, "z": z}, N_grid, value, (1 - z) ** (-a), tol)


def limit_aar_beta(a: float, b: float, N_grid: Sequence[int] = DEFAULT_GRID,
                   tol: float = DEFAULT_TOL) -> LimitReport:
    """Float discretized beta sum (1/N) sum_n wt_a(n) wt_b(N-n) -> B(a, b)."""
    if a <= 0 or b <= 0:
        raise ValueError("a and b must be positive")

    def value(N):
        s = math.fsum(poch_ratio(1 + n, a + n, N - n) * poch_ratio(1 + N - n, b + N - n, n)
                      for n in range(N + 1))
        return s / N

    target = math.exp(math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b))
    return _report("aar-beta", {"a": a, "b": b}, N_grid, value, target, tol)


def default_limit_suite(N_grid: Sequence[int] = DEFAULT_GRID, tol: float = DEFAULT_TOL) -> list[LimitReport]:
    return [
        limit_disc_power(1.0, 0.3, N_grid, tol),
        limit_disc_power(2.0, 0.5, N_grid, tol),
        limit_disc_power(0.5, 0.25, N_grid, tol),
        limit_disc_power(1.5, 0.25, N_grid, tol, complement=True),
        limit_t1F0(0.0, 0.5, N_grid, tol),
        limit_t1F0(1.0, 0.5, N_grid, tol),
        limit_t1F0(2.0, -1.0, N_grid, tol),
        limit_t1F0(0.5, 1 / 3, N_grid, tol),
        limit_aar_beta(1.0, 1.0, N_grid, tol),
        limit_aar_beta(2.0, 1.0, N_grid, tol),
        limit_aar_beta(0.5, 0.5, N_grid, tol),
    ]
