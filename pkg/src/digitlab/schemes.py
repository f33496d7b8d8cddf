"""Deterministic integer averaging schemes: simple, iterated, Benford's twist.

All results are exact (no sampling).  interval_ld counts digit blocks in
closed form, so upper bounds up to 1e15 stay exact integer arithmetic.
The scheme averages use cumulative-sum reuse so iterated schemes cost
near-linear time in the outermost range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .digits import DigitDistribution
from .errors import BadIntervalError, DepthUnsupportedError, TooLargeError

__all__ = [
    "SchemeResult",
    "interval_ld",
    "interval_ld_counts",
    "simple_scheme",
    "iterated_scheme",
    "benford_twist_scheme",
    "scheme_dataset",
    "fixed_width_scheme",
]

_DIGITS = range(1, 10)


@dataclass(frozen=True)
class SchemeResult:
    """Exact first-digit distribution of an averaging scheme."""

    ld: DigitDistribution
    exact: bool = True
    meta: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "exact": self.exact,
            "ld_probs": {str(d): p for d, p in sorted(self.ld.probs.items())},
            **self.meta,
        }


def _count_leading(n: int, d: int) -> int:
    """Number of integers in [1, n] whose first decimal digit is d."""
    if n <= 0:
        return 0
    total = 0
    p = 1
    while p <= n:
        block_lo = d * p
        block_hi = (d + 1) * p - 1
        if n >= block_hi:
            total += p
        elif n >= block_lo:
            total += n - block_lo + 1
        p *= 10
    return total


def interval_ld_counts(lb: int, ub: int) -> dict[int, int]:
    """Exact per-digit leader counts over the integers [lb, ub]."""
    if not (isinstance(lb, int) and isinstance(ub, int)):
        raise BadIntervalError("interval bounds must be integers")
    if not 1 <= lb <= ub:
        raise BadIntervalError(f"need 1 <= lb <= ub, got ({lb}, {ub})")
    return {d: _count_leading(ub, d) - _count_leading(lb - 1, d) for d in _DIGITS}


def interval_ld(lb: int, ub: int) -> DigitDistribution:
    """First-digit distribution of the discrete uniform on [lb, ub]."""
    counts = interval_ld_counts(lb, ub)
    size = ub - lb + 1
    return DigitDistribution(base=10, order=1, probs={d: counts[d] / size for d in _DIGITS})


def _first_digits_upto(n: int) -> np.ndarray:
    """First digits of 1..n as an int8 array (index 0 unused)."""
    idx = np.arange(n + 1, dtype=np.int64)
    fd = np.zeros(n + 1, dtype=np.int64)
    if n >= 1:
        vals = idx[1:]
        e = np.floor(np.log10(vals.astype(np.float64))).astype(np.int64)
        p = 10 ** e.astype(object)  # exact integer powers
        p = np.array(p, dtype=np.int64) if n < 10**15 else p
        d = vals // p
        # log10 rounding guard at decade edges
        low = d < 1
        if low.any():
            d[low] = vals[low] // (10 ** (e[low] - 1))
        high = d > 9
        if high.any():
            d[high] = vals[high] // (10 ** (e[high] + 1))
        fd[1:] = d
    return fd


def _share_matrix(lb: int, ub_max: int) -> np.ndarray:
    """Row N = per-digit share vector of interval [lb, N], N in [lb, ub_max].

    Returned as a (ub_max+1) x 9 float array with rows < lb zeroed; built
    from one cumulative count pass.
    """
    fd = _first_digits_upto(ub_max)
    onehot = np.zeros((ub_max + 1, 9), dtype=np.int64)
    rows = np.arange(1, ub_max + 1)
    onehot[rows, fd[1:] - 1] = 1
    cum = np.cumsum(onehot, axis=0)
    shares = np.zeros((ub_max + 1, 9), dtype=np.float64)
    ns = np.arange(lb, ub_max + 1)
    sizes = (ns - lb + 1).astype(np.float64)
    base = cum[lb - 1]
    shares[lb:] = (cum[lb:] - base) / sizes[:, None]
    return shares


def simple_scheme(lb: int, ub_min: int, ub_max: int) -> SchemeResult:
    """Unweighted average of interval_ld(lb, N) for N = ub_min..ub_max."""
    if not 1 <= lb <= ub_min <= ub_max:
        raise BadIntervalError(f"need 1 <= lb <= ub_min <= ub_max, got ({lb}, {ub_min}, {ub_max})")
    shares = _share_matrix(lb, ub_max)
    avg = shares[ub_min : ub_max + 1].mean(axis=0)
    probs = {d: float(avg[d - 1]) for d in _DIGITS}
    return SchemeResult(
        ld=DigitDistribution(base=10, order=1, probs=probs),
        meta={"scheme": "simple", "lb": lb, "ub_min": ub_min, "ub_max": ub_max},
    )


def iterated_scheme(
    lb: int,
    inner_ub_min: int,
    top_range: tuple[int, int],
    depth: int,
    mid_min: int | None = None,
) -> SchemeResult:
    """Average-of-averages schemes.

    depth 2: average over T in top_range of simple_scheme(lb, inner_ub_min, T).
    depth 3: average over W in top_range of
             [average over T in [mid_min, W] of simple_scheme(lb, inner_ub_min, T)];
             mid_min defaults to inner_ub_min.
    """
    top_lo, top_hi = top_range
    if depth not in (2, 3):
        raise DepthUnsupportedError(f"iterated_scheme supports depths 2 and 3, got {depth}")
    if mid_min is None:
        mid_min = inner_ub_min
    if not 1 <= lb <= inner_ub_min <= top_lo <= top_hi:
        raise BadIntervalError(
            f"need 1 <= lb <= inner_ub_min <= top_lo <= top_hi, got ({lb}, {inner_ub_min}, {top_lo}, {top_hi})"
        )
    shares = _share_matrix(lb, top_hi)
    # level-2 value at T: mean of share rows inner_ub_min..T
    cum_shares = np.cumsum(shares, axis=0)
    t_vals = np.arange(inner_ub_min, top_hi + 1)
    level2 = (cum_shares[inner_ub_min:] - cum_shares[inner_ub_min - 1]) / (
        (t_vals - inner_ub_min + 1).astype(np.float64)[:, None]
    )
    if depth == 2:
        avg = level2[top_lo - inner_ub_min : top_hi - inner_ub_min + 1].mean(axis=0)
    else:
        if mid_min < inner_ub_min or mid_min > top_lo:
            raise BadIntervalError(f"need inner_ub_min <= mid_min <= top_lo, got mid_min={mid_min}")
        cum_l2 = np.cumsum(level2, axis=0)
        w_vals = np.arange(top_lo, top_hi + 1)
        i_w = w_vals - inner_ub_min
        i_lo = mid_min - inner_ub_min
        base = cum_l2[i_lo - 1] if i_lo > 0 else 0.0
        level3 = (cum_l2[i_w] - base) / ((w_vals - mid_min + 1).astype(np.float64)[:, None])
        avg = level3.mean(axis=0)
    probs = {d: float(avg[d - 1]) for d in _DIGITS}
    return SchemeResult(
        ld=DigitDistribution(base=10, order=1, probs=probs),
        meta={
            "scheme": "iterated",
            "lb": lb,
            "inner_ub_min": inner_ub_min,
            "mid_min": mid_min,
            "top_range": list(top_range),
            "depth": depth,
        },
    )


def geometric_upper_bounds(growth_percent: float, ub_start: int, ub_end: int) -> list[int]:
    """Floor of ub_start*(1+g)**j up to ub_end, consecutive duplicates collapsed."""
    if growth_percent <= 0:
        raise BadIntervalError(f"growth_percent must be > 0, got {growth_percent}")
    f = 1.0 + growth_percent / 100.0
    bounds: list[int] = []
    ub = float(ub_start)
    while True:
        b = math.floor(ub)
        if b > ub_end:
            break
        if not bounds or b != bounds[-1]:
            bounds.append(b)
        ub *= f
    return bounds


def benford_twist_scheme(
    growth_percent: float, ub_start: int, ub_end: int, lb: int = 1
) -> SchemeResult:
    """Average of interval_ld over geometrically growing upper bounds."""
    if ub_start > ub_end:
        raise BadIntervalError(f"need ub_start <= ub_end, got ({ub_start}, {ub_end})")
    if ub_start == ub_end:
        bounds = [ub_start]
    else:
        bounds = geometric_upper_bounds(growth_percent, ub_start, ub_end)
    if lb > min(bounds):
        raise BadIntervalError(f"lb={lb} exceeds the smallest upper bound {min(bounds)}")
    acc = np.zeros(9)
    for b in bounds:
        counts = interval_ld_counts(lb, b)
        size = b - lb + 1
        acc += np.array([counts[d] / size for d in _DIGITS])
    avg = acc / len(bounds)
    probs = {d: float(avg[d - 1]) for d in _DIGITS}
    return SchemeResult(
        ld=DigitDistribution(base=10, order=1, probs=probs),
        meta={
            "scheme": "benford_twist",
            "growth_percent": growth_percent,
            "lb": lb,
            "ub_start": ub_start,
            "ub_end": ub_end,
            "n_bounds": len(bounds),
        },
    )


def fixed_width_scheme(width: int, a_min: int, a_max: int) -> SchemeResult:
    """Average of interval_ld over fixed-width windows [a, a+width-1].

    The counterexample scheme: upper and lower bounds move in unison, so
    nothing close to the logarithmic emerges.
    """
    if width < 1 or a_min < 1 or a_min > a_max:
        raise BadIntervalError("need width >= 1 and 1 <= a_min <= a_max")
    acc = np.zeros(9)
    for a in range(a_min, a_max + 1):
        counts = interval_ld_counts(a, a + width - 1)
        acc += np.array([counts[d] / width for d in _DIGITS])
    avg = acc / (a_max - a_min + 1)
    probs = {d: float(avg[d - 1]) for d in _DIGITS}
    return SchemeResult(
        ld=DigitDistribution(base=10, order=1, probs=probs),
        meta={"scheme": "fixed_width", "width": width, "a_min": a_min, "a_max": a_max},
    )


def scheme_dataset(
    lb: int,
    ub_min: int,
    ub_max: int,
    duplication: str = "pad_random",
    seed: int | None = 0,
    count_cap: int = 10**7,
):
    """Expand a simple scheme into one grand dataset with duplication.

    Every interval [lb, N] is replicated so each contributes the same number
    of elements as the longest interval (duplication factor max_len/len):

    - ``factor_weighted``: round(factor) whole copies of the interval.
    - ``pad_random``: floor(factor) whole copies, remainder filled by seeded
      random picks from the interval.

    Returns (values, histogram) where histogram[v] is the frequency of the
    integer v (the unadjusted per-unit-length density table).
    """
    if not 1 <= lb <= ub_min <= ub_max:
        raise BadIntervalError(f"need 1 <= lb <= ub_min <= ub_max, got ({lb}, {ub_min}, {ub_max})")
    max_len = ub_max - lb + 1
    est_total = max_len * (ub_max - ub_min + 1)
    if est_total > count_cap:
        raise TooLargeError(f"dataset would hold ~{est_total} values, cap is {count_cap}")
    rng = np.random.default_rng(seed)
    chunks = []
    for n in range(ub_min, ub_max + 1):
        interval = np.arange(lb, n + 1, dtype=np.int64)
        size = n - lb + 1
        if duplication == "factor_weighted":
            copies = max(1, round(max_len / size))
            chunks.append(np.tile(interval, copies))
        elif duplication == "pad_random":
            copies = max_len // size
            rem = max_len - copies * size
            chunks.append(np.tile(interval, copies))
            if rem:
                chunks.append(rng.choice(interval, size=rem, replace=True))
        else:
            raise BadIntervalError(f"unknown duplication mode {duplication!r}")
    values = np.concatenate(chunks)
    hist = np.bincount(values, minlength=ub_max + 1)
    return values, hist
