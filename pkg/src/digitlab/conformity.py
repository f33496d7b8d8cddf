"""Goodness-of-fit machinery for digit laws: chi-square and distance
metrics, mantissa uniformity (KS), compartmental allotment, the scale
invariance probe, and an aggregate ConformityReport.

Critical values come from the asymptotic formulas (chi-square(8) and the
Kolmogorov distribution), not table lookups.  Default significance 0.01.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from .digits import (
    DigitDistribution,
    benford_distribution,
    compartment_boundaries,
    digit_pattern,
    first_digit,
)
from .errors import BadExpectedError, EmptyInputError

__all__ = [
    "ConformityReport",
    "chi_sqr",
    "chi_sqr_vs_benford",
    "chi_sqr_critical",
    "ks_critical",
    "mantissa_uniformity_test",
    "compartmental_allotment_test",
    "scale_invariance_probe",
    "report",
    "reshuffle_within_compartments",
]

SIGNIFICANCE = 0.01
_DIGITS = range(1, 10)


def chi_sqr_vs_benford(counts) -> float:
    """Pearson chi-square of per-digit counts (digits 1..9) against Benford."""
    counts = np.asarray(counts, dtype=np.float64)
    n = counts.sum()
    if n <= 0:
        raise EmptyInputError("no digits to test")
    expected = n * np.array([benford_distribution().probs[d] for d in _DIGITS])
    return float(((counts - expected) ** 2 / expected).sum())


def chi_sqr(observed, expected: DigitDistribution) -> float:
    """Pearson chi-square of per-digit counts against an expected digit law.

    ``observed`` maps digits to counts (dict or sequence over 1..base-1).
    """
    if not isinstance(observed, dict):
        observed = {d: c for d, c in zip(range(1, expected.base), observed)}
    n = sum(observed.values())
    if n <= 0:
        raise EmptyInputError("chi_sqr needs a positive total count")
    total = 0.0
    for d in range(1, expected.base):
        p = expected.probs.get(d, 0.0)
        o = observed.get(d, 0)
        if p <= 0.0:
            if o > 0:
                raise BadExpectedError(f"expected probability 0 for digit {d} with count {o}")
            continue
        total += (o - n * p) ** 2 / (n * p)
    return total


def chi_sqr_critical(significance: float = SIGNIFICANCE, dof: int = 8) -> float:
    """Upper critical value of the chi-square(dof) distribution."""
    return float(stats.chi2.isf(significance, dof))


def ks_critical(n: int, significance: float = SIGNIFICANCE) -> float:
    """Asymptotic one-sample KS critical distance sqrt(-ln(a/2)/2)/sqrt(n)."""
    return math.sqrt(-0.5 * math.log(significance / 2.0)) / math.sqrt(n)


def _clean(values) -> tuple[np.ndarray, int]:
    vals = np.asarray(values, dtype=np.float64).ravel()
    finite = vals[np.isfinite(vals)]
    nonzero = finite[finite != 0.0]
    return np.abs(nonzero), vals.size - nonzero.size


def _mantissas(vals: np.ndarray) -> np.ndarray:
    return np.log10(vals) % 1.0


@dataclass(frozen=True)
class KSResult:
    statistic: float
    critical: float
    passed: bool
    n: int


def mantissa_uniformity_test(values, significance: float = SIGNIFICANCE) -> KSResult:
    """KS distance of empirical mantissae from the uniform on [0, 1)."""
    vals, _ = _clean(values)
    if vals.size == 0:
        raise EmptyInputError("mantissa test needs nonzero values")
    m = np.sort(_mantissas(vals))
    n = m.size
    i = np.arange(1, n + 1)
    d_plus = np.max(i / n - m)
    d_minus = np.max(m - (i - 1) / n)
    stat = float(max(d_plus, d_minus))
    crit = ks_critical(n, significance)
    return KSResult(statistic=stat, critical=crit, passed=stat < crit, n=n)


@dataclass(frozen=True)
class AllotmentResult:
    masses: dict[int, float]
    max_deviation: float
    n: int


def compartmental_allotment_test(values) -> AllotmentResult:
    """Mantissa mass per LD compartment against the Benford widths.

    By construction this equals the empirical first-digit shares (the
    compartment of mantissa10(x) is the first digit of x); it is reported
    in mantissa space.
    """
    vals, _ = _clean(values)
    if vals.size == 0:
        raise EmptyInputError("compartment test needs nonzero values")
    digs = np.array([first_digit(float(v)) for v in vals])
    counts = np.bincount(digs, minlength=10)[1:10]
    n = vals.size
    benford = benford_distribution()
    masses = {d: counts[d - 1] / n for d in _DIGITS}
    max_dev = max(abs(masses[d] - benford.probs[d]) for d in _DIGITS)
    return AllotmentResult(masses=masses, max_deviation=max_dev, n=n)


def reshuffle_within_compartments(values, seed=0) -> np.ndarray:
    """Redistribute each value's mantissa uniformly inside its own compartment.

    First digits (hence compartment masses) are preserved exactly while
    mantissa uniformity is destroyed: mass piles into compartment-local
    uniform blocks instead of the global uniform.
    """
    vals, _ = _clean(values)
    rng = np.random.default_rng(seed)
    bounds = np.array(compartment_boundaries(10))
    digs = np.array([first_digit(float(v)) for v in vals])
    lo = bounds[digs - 1]
    hi = bounds[digs]
    # squeeze each compartment's mass into its lower half: masses intact,
    # within-compartment distribution visibly non-uniform
    new_mant = lo + rng.random(vals.size) * 0.5 * (hi - lo)
    exponents = np.floor(np.log10(vals))
    return 10.0 ** (new_mant + exponents)


def scale_invariance_probe(values, factors, expected: DigitDistribution | None = None):
    """Chi-square deltas under multiplication by each factor.

    Returns {factor: chi_sqr(factor * x) - chi_sqr(x)}; powers of ten give
    exactly zero since they never change leading digits.
    """
    vals, _ = _clean(values)
    if vals.size == 0:
        raise EmptyInputError("probe needs nonzero values")
    if expected is None:
        expected = benford_distribution()

    def chi_of(arr: np.ndarray) -> float:
        digs = np.searchsorted(np.array(compartment_boundaries(10)), _mantissas(arr), side="right")
        counts = np.bincount(digs.clip(1, 9), minlength=10)[1:10]
        return chi_sqr({d: int(counts[d - 1]) for d in _DIGITS}, expected)

    base_chi = chi_of(vals)
    out = {}
    for c in factors:
        if c <= 0:
            raise BadExpectedError(f"factors must be positive, got {c}")
        out[c] = chi_of(vals * c) - base_chi
    return out


@dataclass(frozen=True)
class ConformityReport:
    """Aggregate digit-law conformity statistics for one dataset."""

    n: int
    skipped_zeros: int
    observed_first: dict[int, int]
    observed_second: dict[int, int]
    observed_third: dict[int, int]
    excluded_second: int
    excluded_third: int
    chi_sqr_first: float | None
    chi_sqr_critical_001: float
    l_inf: float | None
    l1: float | None
    mantissa_ks: float | None
    mantissa_ks_critical: float | None
    compartment_masses: dict[int, float] | None
    annotations: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "n": self.n,
            "skipped_zeros": self.skipped_zeros,
            "observed_first": {str(k): v for k, v in self.observed_first.items()},
            "observed_second": {str(k): v for k, v in self.observed_second.items()},
            "observed_third": {str(k): v for k, v in self.observed_third.items()},
            "excluded_second": self.excluded_second,
            "excluded_third": self.excluded_third,
            "chi_sqr_first": self.chi_sqr_first,
            "chi_sqr_critical_001": self.chi_sqr_critical_001,
            "l_inf": self.l_inf,
            "l1": self.l1,
            "mantissa_ks": self.mantissa_ks,
            "mantissa_ks_critical": self.mantissa_ks_critical,
            "compartment_masses": (
                {str(k): v for k, v in self.compartment_masses.items()}
                if self.compartment_masses is not None
                else None
            ),
            "annotations": list(self.annotations),
        }


def _significant_digits_available(x: float) -> int:
    """Significant decimal digits of x's shortest representation.

    Trailing zeros do not count ('50' carries one significant digit here),
    so integers like 5 are excluded from 2nd/3rd-order tallies.
    """
    s = repr(abs(float(x)))
    if "e" in s or "E" in s:
        s = s.split("e")[0].split("E")[0]
    s = s.replace(".", "").lstrip("0").rstrip("0")
    return max(1, len(s))


def report(values) -> ConformityReport:
    """Fully populated conformity report; zeros counted and skipped."""
    vals, skipped = _clean(values)
    n = int(vals.size)
    crit = chi_sqr_critical()
    if n == 0:
        return ConformityReport(
            n=0,
            skipped_zeros=int(skipped),
            observed_first={},
            observed_second={},
            observed_third={},
            excluded_second=0,
            excluded_third=0,
            chi_sqr_first=None,
            chi_sqr_critical_001=crit,
            l_inf=None,
            l1=None,
            mantissa_ks=None,
            mantissa_ks_critical=None,
            compartment_masses=None,
            annotations=["empty input"],
        )

    first_counts = {d: 0 for d in _DIGITS}
    second_counts = {d: 0 for d in range(10)}
    third_counts = {d: 0 for d in range(10)}
    excluded2 = excluded3 = 0
    for v in vals:
        x = float(v)
        avail = _significant_digits_available(x)
        pat = digit_pattern(x, 3)
        first_counts[pat[0]] += 1
        if avail >= 2:
            second_counts[pat[1]] += 1
        else:
            excluded2 += 1
        if avail >= 3:
            third_counts[pat[2]] += 1
        else:
            excluded3 += 1

    benford = benford_distribution()
    chi = chi_sqr(first_counts, benford)
    shares = {d: first_counts[d] / n for d in _DIGITS}
    l_inf = max(abs(shares[d] - benford.probs[d]) for d in _DIGITS)
    l1 = sum(abs(shares[d] - benford.probs[d]) for d in _DIGITS)
    ks = mantissa_uniformity_test(vals)
    allot = compartmental_allotment_test(vals)

    annotations = []
    if n < 1000:
        annotations.append(
            "small sample (n < 1000): chi-square verdicts on subsets of data are unreliable"
        )
    span = math.log10(vals.max()) - math.log10(vals.min())
    if span < 2.0:
        annotations.append(
            f"narrow range ({span:.2f} decades < 2): digit laws need not apply to such subsets"
        )

    return ConformityReport(
        n=n,
        skipped_zeros=int(skipped),
        observed_first=first_counts,
        observed_second=second_counts,
        observed_third=third_counts,
        excluded_second=excluded2,
        excluded_third=excluded3,
        chi_sqr_first=chi,
        chi_sqr_critical_001=crit,
        l_inf=l_inf,
        l1=l1,
        mantissa_ks=ks.statistic,
        mantissa_ks_critical=ks.critical,
        compartment_masses=allot.masses,
        annotations=annotations,
    )
