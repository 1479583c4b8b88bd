"""Binary64 evaluation of the chase's step-time series, audited exactly.

The step time t_n is the partial sum of (x0/sa)*r^k for k = 0..n. This
module evaluates it the way a float implementation would: inputs rounded
to binary64, terms generated by iterated multiplication
term_{k+1} = term_k * r, accumulated either naively left to right or
with Kahan compensation. Every finite double is itself a rational, so
each result is converted back exactly and compared against the exact
closed form; the error fields carry no rounding of their own. The input
conversion error is charged to the float side, not the oracle.

CPython floats are strict IEEE-754 binary64 with no fused multiply-add
and no reassociation, so all values here reproduce bit for bit. With
r < 1 every partial sum is bounded by the catch-up time, so overflow is
impossible whenever t_inf itself is finite in binary64.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivergenceError
from .race import MAX_STEPS, RaceConfig, t_n_closed

__all__ = ["NAIVE", "COMPENSATED", "FloatReport", "sum_naive", "sum_compensated", "error_sweep"]

NAIVE = "naive"
COMPENSATED = "compensated"


@dataclass(frozen=True)
class FloatReport:
    """One float evaluation of t_n next to its exact value.

    abs_error is |value - exact| computed in exact rational arithmetic
    after converting the float back to a rational; rel_error divides by
    the exact value (always positive here, since t_n >= x0/sa > 0).
    """

    n: int
    method: str
    value: float
    exact: Fraction
    abs_error: Fraction
    rel_error: Fraction


def _float_inputs(config: RaceConfig) -> tuple[float, float]:
    # float() on a Fraction divides the integer parts, which CPython rounds
    # correctly to nearest/even.
    r = config.ratio
    if r >= 1:
        raise DivergenceError("no catch-up: ratio >= 1")
    return float(config.x0 / config.sa), float(r)


def _check_last_index(n: int) -> None:
    if n < 0:
        raise ValueError("last term index must be >= 0")
    if n > MAX_STEPS:
        raise ValueError(f"last term index {n} exceeds the cap of {MAX_STEPS}")


def _report(n: int, method: str, value: float, exact: Fraction) -> FloatReport:
    err = abs(Fraction(value) - exact)
    return FloatReport(
        n=n, method=method, value=value, exact=exact, abs_error=err, rel_error=err / exact
    )


def sum_naive(config: RaceConfig, n: int) -> FloatReport:
    """Left-to-right float accumulation of the first n+1 terms."""
    _check_last_index(n)
    term, ratio = _float_inputs(config)
    total = 0.0
    for _ in range(n + 1):
        total += term
        term *= ratio
    return _report(n, NAIVE, total, t_n_closed(config, n))


def sum_compensated(config: RaceConfig, n: int) -> FloatReport:
    """Kahan-compensated accumulation of the same terms as sum_naive."""
    _check_last_index(n)
    term, ratio = _float_inputs(config)
    total = 0.0
    carry = 0.0
    for _ in range(n + 1):
        y = term - carry
        t = total + y
        carry = (t - total) - y  # the low bits the addition just dropped
        total = t
        term *= ratio
    return _report(n, COMPENSATED, total, t_n_closed(config, n))


def error_sweep(config: RaceConfig, n_max: int) -> list[tuple[FloatReport, FloatReport]]:
    """Reports (naive, compensated) for every n = 0..n_max in one pass.

    The exact partial sums accumulate incrementally alongside the float
    state, so the sweep costs O(n_max) summations rather than O(n_max^2).
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if n_max > MAX_STEPS:
        raise ValueError(f"n_max {n_max} exceeds the cap of {MAX_STEPS}")
    term, ratio = _float_inputs(config)
    naive = 0.0
    comp = 0.0
    carry = 0.0
    exact = Fraction(0)
    exact_term = config.x0 / config.sa
    exact_ratio = config.ratio
    pairs = []
    for n in range(n_max + 1):
        naive += term

        y = term - carry
        t = comp + y
        carry = (t - comp) - y
        comp = t

        exact += exact_term
        pairs.append((_report(n, NAIVE, naive, exact), _report(n, COMPENSATED, comp, exact)))

        term *= ratio
        exact_term *= exact_ratio
    return pairs
