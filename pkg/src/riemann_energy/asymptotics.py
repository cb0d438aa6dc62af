"""Closed-form expected energies of degree-``N`` Kostlan zeros.

``abs_formula`` is the log-chordal (unordered pair) expectation
``N^2/4 - N log N / 4 - N/4``.  ``zhong_formula`` is the Green-energy
expectation ``-N log N/(4pi) - N/(4pi) - N * robin_integral`` with its
``o(N)`` remainder taken as zero; for the round metric ``robin_integral`` is
the Robin constant ``F_HALF`` and the last two terms cancel.

The two are related by ``pi * (zhong + C_HALF N (N - 1)) = abs``.
:func:`reconciliation_gap` evaluates both sides in 50-digit arithmetic,
because near ``N = 10^6`` the terms are ~1e11 and a single double rounding is
already ~1e-5.
"""

import enum
import math
from dataclasses import dataclass

import mpmath

from .kernels import C_HALF, F_HALF


class Formula(enum.Enum):
    ABS = "abs"
    ZHONG = "zhong"
    ZHONG_ROUND_EXACT = "zhong_round_exact"


@dataclass(frozen=True)
class FormulaValue:
    N: int
    value: float
    formula: Formula


def _check_degree(N):
    if int(N) != N or N < 1:
        raise ValueError(f"N must be a positive integer, got {N!r}")
    return int(N)


# shared by the double and multiprecision evaluations
def _abs_expr(n, log):
    return n * n / 4 - n * log(n) / 4 - n / 4


def _zhong_expr(n, log, pi, robin_integral):
    return -n * log(n) / (4 * pi) - n / (4 * pi) - n * robin_integral


def abs_formula(N):
    N = _check_degree(N)
    return FormulaValue(N, float(_abs_expr(N, math.log)), Formula.ABS)


def zhong_formula(N, robin_integral=F_HALF):
    """Green-energy asymptotics with the ``o(N)`` term dropped.

    ``robin_integral`` stands for the average of the Robin function over the
    area form normalised to mass one; on S(1/2) it is ``F_HALF``.
    """
    N = _check_degree(N)
    value = float(_zhong_expr(N, math.log, math.pi, robin_integral))
    return FormulaValue(N, value, Formula.ZHONG)


def zhong_round_exact(N):
    """``-N log N / (4pi)``: :func:`zhong_formula` after the round-metric cancellation."""
    N = _check_degree(N)
    return FormulaValue(N, -N * math.log(N) / (4.0 * math.pi), Formula.ZHONG_ROUND_EXACT)


def reconciliation_gap(N, dps=50):
    """``pi * (zhong(N) + C_HALF N (N - 1)) - abs(N)`` with ``robin_integral = F_HALF``.

    Evaluated with ``dps`` significant digits and returned as a float.
    """
    N = _check_degree(N)
    with mpmath.workdps(dps):
        pi = +mpmath.pi
        n = mpmath.mpf(N)
        c_half = 1 / (4 * pi)
        zhong = _zhong_expr(n, mpmath.log, pi, -c_half)
        abs_ = _abs_expr(n, mpmath.log)
        return float(pi * (zhong + c_half * n * (n - 1)) - abs_)


def reconciliation_gap_double(N):
    """The same gap from the double-precision evaluators, for comparison."""
    N = _check_degree(N)
    return math.pi * (zhong_formula(N).value + C_HALF * N * (N - 1)) - abs_formula(N).value
