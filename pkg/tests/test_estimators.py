# -*- coding: utf-8 -*-

import csv
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from libs.common import ValidationError, NumericalError, ResourceLimitError
from libs.model import ModelParams
from libs.exact import exact_summary
from libs.mcmc import SamplerConfig
from libs.theory import beta_H, delta_sq_prediction
from libs.estimators import NuEstimate, nu_estimate, jackknife
from libs.estimators import RunsTest, inverse_n_fit, log_log_slope
from libs.estimators import draw_disorder
from libs.estimators import nu_overlap_moments, delta_sq_estimate, nu_overlap_power
from libs.estimators import overlap_moment_table, kurtosis_estimate, MAX_CLT_MOMENT
from libs.estimators import CSV_HEADER, write_scan_csv
from libs.estimators import self_averaging_scan, clt_moment_check, pn_vs_phi_scan, variance_components_check
from libs.estimators import CavitySystem, cavity_derivative_check
from libs.estimators import set_partitions, overlap_sum_moment
from libs.estimators import product_measure_delta_sq, product_measure_central_moment


Q_HALF = math.tanh(0.5) ** 2


def _free(n: int, p: int = 3) -> ModelParams:
    return ModelParams(n=n, p=p, beta=0.0, h=0.5)


class TestJackknife:

    @settings(max_examples=30, deadline=None)
    @given(values=st.lists(st.floats(min_value=-100, max_value=100), min_size=2, max_size=40))
    def test_mean_error_is_standard_error(self, values):
        x = np.array(values)
        mean, std_err = jackknife(samples=x)
        assert mean == pytest.approx(x.mean(), abs=1e-9)
        assert std_err == pytest.approx(x.std(ddof=1) / math.sqrt(x.size), abs=1e-7)

    def test_statistic_of_means(self):
        rng = np.random.default_rng(3)
        x = np.column_stack([rng.normal(2.0, 0.1, 500), rng.normal(4.0, 0.1, 500)])
        ratio, std_err = jackknife(samples=x, statistic=lambda m: m[0] / m[1])
        assert ratio == pytest.approx(0.5, abs=0.01)
        assert 0.0 < std_err < 0.01

    def test_degenerate_samples(self):
        assert jackknife(samples=[1.5]) == (1.5, float('inf'))
        with pytest.raises(ValidationError):
            jackknife(samples=[])

    def test_estimate(self):
        estimate = nu_estimate(values=[1.0, 2.0, 3.0], provenance='exact')
        assert estimate.mean == 2.0
        assert estimate.n_disorder == 3
        assert estimate.within(value=2.5, sigmas=1.0)
        assert not estimate.within(value=5.0)
        assert estimate.scaled(-2.0).mean == -4.0
        assert estimate.scaled(-2.0).std_err == pytest.approx(2.0 * estimate.std_err)
        single = nu_estimate(values=[1.0], provenance='mcmc')
        assert single.to_dict()['std_err'] is None
        with pytest.raises(ValidationError):
            NuEstimate(mean=1.0, std_err=0.1, n_disorder=1, provenance='guess')
        with pytest.raises(NumericalError):
            NuEstimate(mean=float('nan'), std_err=0.1, n_disorder=1, provenance='exact')


    def test_chain_variance_widens_error(self):
        values = [1.0, 2.0, 3.0, 4.0]
        plain = nu_estimate(values=values, provenance='mcmc')
        widened = nu_estimate(values=values, provenance='mcmc', chain_var=[0.4, 0.4, 0.4, 0.4])
        assert widened.mean == plain.mean
        assert widened.std_err == pytest.approx(math.sqrt(plain.std_err ** 2 + 0.1))
        assert nu_estimate(values=values, provenance='mcmc', chain_var=[0.0] * 4).std_err == plain.std_err
        with pytest.raises(ValidationError):
            nu_estimate(values=values, provenance='mcmc', chain_var=[0.1, 0.1])
        with pytest.raises(NumericalError):
            nu_estimate(values=values, provenance='mcmc', chain_var=[0.1, -0.1, 0.1, 0.1])


class TestFits:

    def test_runs(self):
        alternating = RunsTest(residuals=[1, -1] * 10)
        assert alternating.runs == 20
        assert alternating.z > 0.0
        blocks = RunsTest(residuals=[1] * 10 + [-1] * 10)
        assert blocks.runs == 2
        assert blocks.p_value < 0.01
        assert RunsTest(residuals=[1.0, 2.0, 3.0]).p_value == 1.0
        assert RunsTest(residuals=[0.0, 0.0]).runs == 0

    def test_inverse_n_line(self):
        ns = [8, 10, 12, 14]
        means = [0.8 + 0.3 / n for n in ns]
        fit = inverse_n_fit(ns=ns, means=means, std_errs=[0.01] * 4)
        assert fit['weighted']
        assert fit['intercept'] == pytest.approx(0.8, abs=1e-12)
        assert fit['slope'] == pytest.approx(0.3, abs=1e-10)
        assert fit['intercept_err'] > 0.0
        assert max(abs(r) for r in fit['residuals']) < 1e-12

    def test_inverse_n_unweighted(self):
        fit = inverse_n_fit(ns=[4, 8], means=[1.25, 1.125], std_errs=[0.0, 0.0])
        assert not fit['weighted']
        assert fit['intercept'] == pytest.approx(1.0)
        assert fit['intercept_err'] == 0.0
        with pytest.raises(ValidationError):
            inverse_n_fit(ns=[4], means=[1.0], std_errs=[0.1])

    def test_log_log(self):
        ns = [8, 16, 32]
        assert log_log_slope(ns=ns, values=[3.0 / n for n in ns]) == pytest.approx(-1.0)
        assert log_log_slope(ns=ns, values=[1.0, 0.0, 2.0]) is None


class TestReference:

    def test_bell_numbers(self):
        counts = [sum(1 for _ in set_partitions(range(k))) for k in range(7)]
        assert counts == [1, 1, 2, 5, 15, 52, 203]
        for partition in set_partitions(range(4)):
            assert sorted(i for block in partition for i in block) == [0, 1, 2, 3]

    @pytest.mark.parametrize('n', [1, 5, 30])
    def test_overlap_sums(self, n):
        m2 = math.tanh(0.5) ** 2
        assert overlap_sum_moment(n=n, h=0.5, pairs=[(0, 1)]) == pytest.approx(n * m2)
        assert overlap_sum_moment(n=n, h=0.5, pairs=[(0, 1)] * 2) == pytest.approx(n + n * (n - 1) * m2 * m2)
        assert overlap_sum_moment(n=n, h=0.5, pairs=[]) == 1.0

    @pytest.mark.parametrize('n', [4, 10, 100])
    def test_central_moments(self, n):
        assert product_measure_central_moment(n=n, h=0.5, k=0) == pytest.approx(1.0)
        assert product_measure_central_moment(n=n, h=0.5, k=1) == pytest.approx(0.0, abs=1e-12)
        assert product_measure_central_moment(n=n, h=0.5, k=2) == pytest.approx((1.0 - Q_HALF ** 2) / n, rel=1e-10)

    @pytest.mark.parametrize('n', [3, 10, 50])
    def test_delta_sq_pairs(self, n):
        assert product_measure_delta_sq(n=n, p=2, h=0.5) == pytest.approx(4.0 * (1.0 - Q_HALF) ** 2 / n, rel=1e-10)

    def test_delta_sq_approaches_leading_order(self):
        n = 5000
        leading = delta_sq_prediction(n=n, params=_free(n=n), q=Q_HALF, q4=Q_HALF ** 2, margin=1.0)
        assert product_measure_delta_sq(n=n, p=3, h=0.5) == pytest.approx(leading, rel=0.05)
        with pytest.raises(ValidationError):
            product_measure_delta_sq(n=10, p=5, h=0.5)


class TestMoments:

    def test_draws_are_reproducible(self):
        params = ModelParams(n=8, p=3, beta=0.5, h=0.5)
        first = draw_disorder(params=params, seed=11, index=3)
        assert np.array_equal(first.couplings, draw_disorder(params=params, seed=11, index=3).couplings)
        assert not np.array_equal(first.couplings, draw_disorder(params=params, seed=11, index=4).couplings)

    def test_free_moments_exact(self, pool):
        params = _free(n=8)
        moments = nu_overlap_moments(params=params, ks=[1, 2], n_disorder=3, seed=5, q=Q_HALF, pool=pool)
        assert moments[1].mean == pytest.approx(0.0, abs=1e-12)
        assert moments[2].mean == pytest.approx((1.0 - Q_HALF ** 2) / 8, abs=1e-12)
        assert moments[2].provenance == 'exact'

    def test_free_sampled_moment(self, pool):
        params = _free(n=8)
        moments = nu_overlap_moments(params=params, ks=[3, 4], n_disorder=10, seed=5, q=Q_HALF, pool=pool)
        assert moments[3].provenance == 'exact-replicas'
        for k in [3, 4]:
            expected = product_measure_central_moment(n=8, h=0.5, k=k)
            assert moments[k].within(value=expected, sigmas=5.0, slack=1e-4)

    def test_free_moments_by_chains(self, pool):
        params = _free(n=6)
        sampler = SamplerConfig(kind='glauber', sweeps=2000, seed=0, burn_in_sweeps=10)
        moments = nu_overlap_moments(params=params, ks=[2], n_disorder=8, seed=5, engine='mcmc', q=Q_HALF,
                                     sampler=sampler, pool=pool)
        assert moments[2].provenance == 'mcmc'
        assert moments[2].within(value=(1.0 - Q_HALF ** 2) / 6, sigmas=5.0, slack=2e-3)

    def test_chain_errors_enter(self, pool):
        params = _free(n=6)
        sampler = SamplerConfig(kind='glauber', sweeps=1500, seed=0, burn_in_sweeps=10)
        table = overlap_moment_table(params=params, ks=[1, 2], n_disorder=5, seed=3, engine='mcmc', q=Q_HALF,
                                     sampler=sampler, pool=pool)
        assert table.chain_var.shape == (5, 2)
        assert np.all(table.chain_var > 0.0)
        for k in [1, 2]:
            column = table.values[:, table.column(k=k)]
            _, plain = jackknife(samples=column)
            assert table.estimate(k=k).std_err > plain
            assert table.estimate(k=k).provenance == 'mcmc'

    def test_free_delta_sq(self, pool):
        params = _free(n=8)
        estimate = delta_sq_estimate(params=params, n_disorder=20, seed=9, quadruples=2000, pool=pool)
        assert estimate.within(value=product_measure_delta_sq(n=8, p=3, h=0.5), sigmas=5.0)

    def test_free_overlap_power(self, pool):
        estimate = nu_overlap_power(params=_free(n=8), power=1, n_disorder=10, seed=2, pairs=2000, pool=pool)
        assert estimate.within(value=Q_HALF, sigmas=5.0)

    def test_bad_arguments(self, gates):
        with pytest.raises(ValidationError):
            nu_overlap_moments(params=_free(n=8), ks=[1], n_disorder=2, seed=1, engine='guess')
        with pytest.raises(ValidationError):
            nu_overlap_moments(params=_free(n=8), ks=[1], n_disorder=0, seed=1)
        gates.max_n_sampling = 6
        with pytest.raises(ResourceLimitError):
            delta_sq_estimate(params=_free(n=8), n_disorder=2, seed=1)


class TestScans:

    def test_self_averaging_free(self, pool):
        result = self_averaging_scan(params=_free(n=8), ns=[6, 8], n_disorder=3, seed=1, pool=pool)
        assert len(result.rows) == 4
        assert [row.n for row in result.select('nu_R_minus_q_sq')] == [6, 8]
        for row in result.select('nu_R_minus_q_sq'):
            assert row.estimate.mean == pytest.approx(row.prediction, rel=1e-6)
        assert result.fit['scaled_first_max'] < 1e-9
        assert result.fit['slope_sq'] == pytest.approx(-1.0, abs=1e-6)
        assert result.tags['rigorous_regime']

    def test_clt_rows(self, pool):
        result = clt_moment_check(params=_free(n=6), ks=[2, 3], ns=[6], n_disorder=4, seed=2, pool=pool, pairs=500)
        assert sorted(row.stat for row in result.rows) == ['kurtosis_ratio', 'nu_R_minus_q_pow_2',
                                                           'nu_R_minus_q_pow_3']
        assert result.select('nu_R_minus_q_pow_3')[0].prediction == 0.0
        kurtosis = result.select('kurtosis_ratio')[0]
        assert kurtosis.prediction == 3.0
        assert kurtosis.estimate.provenance == 'exact-replicas'
        assert 0.0 < kurtosis.estimate.std_err < math.inf

    def test_free_kurtosis(self, pool):
        table = overlap_moment_table(params=_free(n=10), ks=[2, 4], n_disorder=20, seed=6, q=Q_HALF,
                                     pairs=4000, pool=pool)
        ratio = kurtosis_estimate(table=table)
        second = product_measure_central_moment(n=10, h=0.5, k=2)
        fourth = product_measure_central_moment(n=10, h=0.5, k=4)
        assert ratio.mean == pytest.approx(np.mean(table.values[:, 1]) / np.mean(table.values[:, 0]) ** 2)
        assert ratio.within(value=fourth / second ** 2, sigmas=5.0, slack=0.05)

    @pytest.mark.parametrize('ks', [[2, 7], [0, 2], []])
    def test_clt_orders(self, ks):
        with pytest.raises(ValidationError):
            clt_moment_check(params=_free(n=6), ks=ks, ns=[6], n_disorder=2, seed=2)
        assert MAX_CLT_MOMENT == 6

    def test_pn_free(self, pool):
        result = pn_vs_phi_scan(params=_free(n=6), ns=[6, 8, 10], n_disorder=2, seed=4, pool=pool)
        phi = math.log(2.0) + math.log(math.cosh(0.5))
        for row in result.rows:
            assert row.estimate.mean == pytest.approx(phi, abs=1e-12)
        assert result.fit['intercept'] == pytest.approx(phi, abs=1e-10)
        assert result.fit['phi'] == pytest.approx(phi, abs=1e-10)
        assert 'runs' in result.fit

    def test_bad_sizes(self):
        with pytest.raises(ValidationError):
            pn_vs_phi_scan(params=_free(n=6), ns=[], n_disorder=2, seed=4)
        with pytest.raises(ValidationError):
            pn_vs_phi_scan(params=_free(n=6), ns=[2, 6], n_disorder=2, seed=4)

    def test_decomposition_closes(self, pool):
        params = ModelParams(n=6, p=3, beta=0.8 * beta_H(3), h=0.5)
        result = variance_components_check(params=params, ns=[6], n_disorder=2, seed=3, pairs=200, pool=pool)
        assert result.fit['closure_residual'] < 1e-10
        assert {row.stat for row in result.rows} == {'T_pair_sq', 'T_single_sq', 'T_const_sq', 'R_power_dev_sq'}

    def test_csv(self, pool, tmp_path):
        result = pn_vs_phi_scan(params=_free(n=6), ns=[6, 8], n_disorder=2, seed=4, pool=pool)
        path = tmp_path / 'scan.csv'
        write_scan_csv(rows=result.rows, path=str(path))
        with open(path, newline='') as file:
            lines = list(csv.reader(file))
        assert lines[0] == CSV_HEADER
        assert len(lines) == 3
        assert lines[1][0] == '6' and lines[1][1] == 'p_N'
        assert float(lines[1][2]) == result.rows[0].estimate.mean


class TestCavity:

    def test_free_cavity_is_flat(self, pool):
        rows = cavity_derivative_check(params=_free(n=6), t_grid=[0.0, 0.5, 1.0], n_disorder=3, seed=1,
                                       q=Q_HALF, pool=pool)
        for row in rows:
            assert row.value.mean == pytest.approx(Q_HALF, abs=1e-12)
            assert row.rhs.mean == 0.0
            assert row.derivative.mean == pytest.approx(0.0, abs=1e-10)
        assert set(rows[0].to_dict().keys()) == {'t', 'derivative', 'rhs', 'difference', 'value'}

    @pytest.mark.parametrize('p, beta', [(2, 0.6), (3, 0.5), (3, 1.2)])
    def test_coupled_end_is_the_model(self, pool, p, beta):
        params = ModelParams(n=7, p=p, beta=beta, h=0.3)
        q = 0.4
        for index in range(4):
            system = CavitySystem(params=params, seed=21, index=index)
            summary = exact_summary(d=draw_disorder(params=params, seed=21, index=index), params=params)
            assert system.value(t=1.0, q=q, p=p) == pytest.approx(summary.one_point[-1] ** 2, abs=1e-12)
        rows = cavity_derivative_check(params=params, t_grid=[1.0], n_disorder=4, seed=21, q=q, pool=pool)
        direct = [exact_summary(d=draw_disorder(params=params, seed=21, index=i), params=params).one_point[-1] ** 2
                  for i in range(4)]
        assert rows[0].value.mean == pytest.approx(np.mean(direct), abs=1e-12)

    def test_derivative_matches(self, pool):
        params = ModelParams(n=6, p=3, beta=0.8 * beta_H(3), h=0.5)
        rows = cavity_derivative_check(params=params, t_grid=[0.5], n_disorder=200, seed=8, pool=pool)
        assert rows[0].consistent(sigmas=5.0)

    @pytest.mark.parametrize('t_grid, delta', [([1.5], 0.02), ([0.5], 0.0), ([0.5], 0.7)])
    def test_bad_grid(self, t_grid, delta):
        with pytest.raises(ValidationError):
            cavity_derivative_check(params=_free(n=6), t_grid=t_grid, n_disorder=1, seed=1, delta=delta, q=Q_HALF)

    def test_gate(self, gates):
        gates.max_n_cavity = 5
        with pytest.raises(ResourceLimitError):
            cavity_derivative_check(params=_free(n=6), t_grid=[0.5], n_disorder=1, seed=1, q=Q_HALF)
