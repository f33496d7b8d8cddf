"""Tests for the parametric distribution families.

Oracles: adaptive quadrature of each pdf over its support must give 1;
empirical means of large samples must sit within 5 standard errors of the
closed-form mean; samples must stay inside the support.
"""

import math

import numpy as np
import pytest
from scipy import integrate

from digitlab import distributions as dm
from digitlab.errors import BadParamsError, UnknownFamilyError

# One representative parameterization per family.  Infinite supports are
# truncated at 40 scale-lengths for the normalization quadrature.
MODELS = [
    dm.Uniform(0.0, 7.0),
    dm.Normal(3.0, 2.0),
    dm.OriginNormal(1.5),
    dm.Exponential(2.0),
    dm.Exp2(10.0),
    dm.Exp3(4.0),
    dm.Exp4(1.3),
    dm.Exp5(1.2),
    dm.Exp6(5.0),
    dm.GeneralizedExp1(2.0, 1.0),
    dm.GeneralizedExp2(2.0, 1.0),
    dm.Gamma(3.0, 2.0),
    dm.Weibull(1.5, 2.0),
    dm.Rayleigh(2.0),
    dm.Wald(5.0, 2.0),
    dm.LogNormal(1.0, 0.8),
    dm.Gompertz(1.0, 2.0),
    dm.Nakagami(2.0, 3.0),
    dm.GuptaKundu(2.5, 1.5),
    dm.Pareto(2.0, 3.0),
    dm.FisherTippett(1.0, 2.0),
    dm.Logistic(1.0, 2.0),
    dm.CauchyLorentz(0.0, 1.0),
    dm.ChiSqr(4),
    dm.Triangular(0.0, 1.0, 2.0),
    dm.PowerLaw(1.0, 1.0, 1000.0),
    dm.Die(6),
]

_SCALE_LENGTH = {
    # rough per-model scale used to truncate infinite supports
    dm.Normal: lambda m: m.sigma,
    dm.OriginNormal: lambda m: m.sigma,
    dm.Exponential: lambda m: 1.0 / m.rho,
    dm.Exp2: lambda m: m.rho,
    dm.Exp3: lambda m: math.sqrt(m.rho),
    dm.Exp4: lambda m: m.rho**7.5,
    dm.Exp5: lambda m: m.rho**8,
    dm.Exp6: lambda m: math.log(m.rho),
    dm.GeneralizedExp1: lambda m: 1.0 / m.rho,
    dm.GeneralizedExp2: lambda m: m.rho,
    dm.Gamma: lambda m: m.k * m.theta,
    dm.Weibull: lambda m: m.lam,
    dm.Rayleigh: lambda m: m.sigma,
    dm.Wald: lambda m: max(m.mu, 2.0 * m.mu**2 / m.lam),
    dm.LogNormal: lambda m: math.exp(m.location + 2 * m.shape),
    dm.Gompertz: lambda m: 1.0 / m.b,
    dm.Nakagami: lambda m: math.sqrt(m.omega),
    dm.GuptaKundu: lambda m: 1.0 / m.lam,
    dm.Pareto: lambda m: m.a * 10.0 ** (7.0 / m.theta) / 40.0,
    dm.FisherTippett: lambda m: m.lam,
    dm.Logistic: lambda m: m.s,
    dm.ChiSqr: lambda m: float(m.dof),
}


def _quad_bounds(model):
    sup = model.support()
    scale = _SCALE_LENGTH.get(type(model), lambda m: 1.0)(model)
    lo = sup.lo if math.isfinite(sup.lo) else -40.0 * scale
    hi = sup.hi if math.isfinite(sup.hi) else max(40.0 * scale, lo + 40.0 * scale)
    return lo, hi


@pytest.mark.parametrize("model", MODELS, ids=lambda m: type(m).__name__)
def test_pdf_normalizes(model):
    if type(model) is dm.Die:
        total = sum(model.pdf(float(k)) for k in range(1, model.faces + 1))
        assert total == pytest.approx(1.0, abs=1e-12)
        return
    if type(model) is dm.CauchyLorentz:
        # slowly decaying tails: check the captured mass against the
        # analytic arctan value instead of full normalization
        total, _ = integrate.quad(model.pdf, -40.0, 40.0, limit=400, epsabs=1e-10)
        expected = 2.0 * math.atan(40.0 / model.gamma) / math.pi
        assert total == pytest.approx(expected, abs=1e-6)
        return
    lo, hi = _quad_bounds(model)
    total, _ = integrate.quad(model.pdf, lo, hi, limit=400, epsabs=1e-10)
    assert total == pytest.approx(1.0, abs=1e-6)


@pytest.mark.parametrize("model", MODELS, ids=lambda m: type(m).__name__)
def test_samples_in_support(model):
    rng = np.random.default_rng(7)
    x = model.sample_n(10_000, rng)
    sup = model.support()
    assert np.all(x >= sup.lo) and np.all(x <= sup.hi)


@pytest.mark.parametrize("model", MODELS, ids=lambda m: type(m).__name__)
def test_empirical_mean_within_5_se(model):
    if type(model) is dm.CauchyLorentz:
        pytest.skip("infinite mean marker; no LLN check")
    rng = np.random.default_rng(11)
    x = model.sample_n(1_000_000, rng)
    se = x.std() / math.sqrt(x.size)
    assert abs(x.mean() - model.mean()) < 5.0 * max(se, 1e-12)


class TestSpotValues:
    def test_exponential_pdf_at_zero(self):
        assert dm.Exponential(2.0).pdf(0.0) == pytest.approx(2.0)

    def test_power_law_normalization_constant(self):
        k = dm.PowerLaw(1.0, 1.0, 1000.0).k
        assert k == pytest.approx(1.0 / (3.0 * math.log(10)), abs=1e-10)
        assert k == pytest.approx(0.14476, abs=1e-5)

    def test_uniform_pdf(self):
        assert dm.Uniform(0.0, 5.0).pdf(2.0) == pytest.approx(0.2)
        assert dm.Uniform(0.0, 5.0).pdf(9.0) == 0.0

    def test_means(self):
        assert dm.Wald(5.0, 2.0).mean() == 5.0
        assert dm.CauchyLorentz(0.0, 1.0).mean() == math.inf
        assert dm.Gamma(3.0, 2.0).mean() == pytest.approx(6.0)
        assert dm.Weibull(1.5, 2.0).mean() == pytest.approx(2.0 * math.gamma(1 + 1 / 1.5))
        assert dm.Pareto(2.0, 0.5).mean() == math.inf
        assert dm.FisherTippett(1.0, 2.0).mean() == pytest.approx(1.0 + 0.57721 * 2.0, abs=1e-4)

    def test_gompertz_mean_flagged_numeric(self):
        g = dm.Gompertz(1.0, 2.0)
        assert not g.closed_form_mean
        val, _ = integrate.quad(lambda x: x * g.pdf(x), 0, 60, limit=300)
        assert g.mean() == pytest.approx(val, rel=1e-6)

    def test_supports(self):
        assert dm.Normal(0, 1).support().kind == "(-inf,+inf)"
        assert dm.Pareto(2.0, 3.0).support().lo == 2.0
        assert dm.Pareto(2.0, 3.0).support().hi == math.inf
        s = dm.PowerLaw(1.0, 1.0, 1000.0).support()
        assert (s.lo, s.hi) == (1.0, 1000.0)
        assert s.kind == "bounded(1.0,1000.0)"


class TestExponentialVariants:
    def test_variant_means(self):
        rho = 3.0
        assert dm.Exponential(rho).mean() == pytest.approx(1 / rho)
        assert dm.Exp2(rho).mean() == pytest.approx(rho)
        assert dm.Exp3(rho).mean() == pytest.approx(math.sqrt(rho))
        assert dm.Exp4(rho).mean() == pytest.approx(rho**7.5)
        assert dm.Exp5(rho).mean() == pytest.approx(rho**8)
        assert dm.Exp6(rho).mean() == pytest.approx(math.log(rho))

    def test_variant2_lln(self):
        rng = np.random.default_rng(3)
        x = dm.Exp2(10.0).sample_n(100_000, rng)
        assert x.mean() == pytest.approx(10.0, abs=0.3)


class TestTriangular:
    def test_apex_from_both_branches(self):
        t = dm.Triangular(0.0, 1.0, 2.0)
        assert t.sample_from_cumulative(0.5) == pytest.approx(1.0)
        assert t.sample_from_cumulative(0.5 - 1e-12) == pytest.approx(1.0, abs=1e-5)

    def test_cdf_at_apex(self):
        t = dm.Triangular(1.0, 4.0, 5.0)
        rng = np.random.default_rng(23)
        x = t.sample_n(100_000, rng)
        frac = np.mean(x <= 4.0)
        assert abs(frac - (4.0 - 1.0) / (5.0 - 1.0)) < 3.0 / math.sqrt(x.size)

    def test_asymmetric_branch_formula(self):
        t = dm.Triangular(2.0, 3.0, 7.0)
        # rd below the split lands on the rising branch
        assert t.sample_from_cumulative(0.1) == pytest.approx(
            2.0 + math.sqrt(0.1 * (3.0 - 2.0) * (7.0 - 2.0))
        )
        assert t.sample_from_cumulative(0.9) == pytest.approx(
            7.0 - math.sqrt((1.0 - 0.9) * (7.0 - 3.0) * (7.0 - 2.0))
        )


class TestValidation:
    def test_bad_params(self):
        with pytest.raises(BadParamsError):
            dm.Uniform(3.0, 3.0)
        with pytest.raises(BadParamsError):
            dm.Normal(0.0, -1.0)
        with pytest.raises(BadParamsError):
            dm.Triangular(0.0, 5.0, 2.0)
        with pytest.raises(BadParamsError):
            dm.PowerLaw(1.0, -1.0, 10.0)
        with pytest.raises(BadParamsError):
            dm.ChiSqr(2.5)  # type: ignore[arg-type]
        with pytest.raises(BadParamsError):
            dm.Exp6(0.5)

    def test_family_lookup(self):
        assert dm.family_by_name("WEIBULL") is dm.Weibull
        assert dm.family_by_name("chi-sqr") is dm.ChiSqr
        assert dm.family_by_name("Cauchy") is dm.CauchyLorentz
        with pytest.raises(UnknownFamilyError):
            dm.family_by_name("frobnitz")


class TestGompertzSampler:
    def test_matches_cdf(self):
        g = dm.Gompertz(1.5, 2.0)
        rng = np.random.default_rng(31)
        x = g.sample_n(50_000, rng)
        for q in (0.5, 2.0):
            assert abs(np.mean(x <= q) - g.cdf(q)) < 4.0 / math.sqrt(x.size)


class TestPowerOfTenScaling:
    def test_scale_forms(self):
        assert dm.Exponential(0.3).scaled_by_power_of_ten(1) == dm.Exponential(3.0)
        assert dm.Normal(5.0, 2.0).scaled_by_power_of_ten(1) == dm.Normal(50.0, 20.0)
        # shapes are never scaled by default
        assert dm.Weibull(2.0, 5.0).scaled_by_power_of_ten(1) == dm.Weibull(2.0, 50.0)

    def test_subset(self):
        m = dm.GeneralizedExp2(1.0, 3.0).scaled_by_power_of_ten(1, subset=["rho"])
        assert m == dm.GeneralizedExp2(10.0, 3.0)

    def test_no_form(self):
        from digitlab.errors import UnsupportedFormError

        with pytest.raises(UnsupportedFormError):
            dm.Die(6).scaled_by_power_of_ten(1)
