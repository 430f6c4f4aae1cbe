# -*- coding: utf-8 -*-

import csv
import math

import numpy as np
import pytest
from scipy import stats

from libs.common import ValidationError, QualityError
from libs.model import ModelParams, SpinConfig, sample_disorder
from libs.exact import exact_summary, overlap_moment_exact
from libs.mcmc import SamplerConfig, ChainState, ReplicaEnsemble, accept_flips, sweep
from libs.mcmc import OverlapSeries, autocorrelation, dump_series_csv
from libs.mcmc import all_pairs, run_replicas, empirical_state_law
from libs.utils import derive_rng


class TestSamplerConfig:

    @pytest.mark.parametrize('kwargs', [
        {'kind': 'gibbs', 'sweeps': 10, 'seed': 1},
        {'kind': 'glauber', 'sweeps': 0, 'seed': 1},
        {'kind': 'glauber', 'sweeps': 10, 'seed': None},
        {'kind': 'glauber', 'sweeps': 10, 'seed': 1, 'thin': 0},
        {'kind': 'glauber', 'sweeps': 10, 'seed': 1, 'burn_in_sweeps': -5},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ValidationError):
            SamplerConfig(**kwargs)

    def test_defaults_and_dict(self):
        cfg = SamplerConfig(kind='metropolis', sweeps=500, seed=3, thin=2)
        assert cfg.burn_in(n=12) == 1200
        assert cfg.total_sweeps(n=12) == 1700
        assert SamplerConfig(kind='glauber', sweeps=1, seed=3, burn_in_sweeps=40).total_sweeps(n=12) == 41
        again = SamplerConfig.from_dict(info=cfg.to_dict(), seed=3)
        assert again.to_dict() == cfg.to_dict()


class TestAcceptance:

    def test_glauber_half_at_zero_gain(self):
        uniforms = np.linspace(0.0, 1.0, 1001, endpoint=False)
        accepted = accept_flips(kind='glauber', gains=np.zeros_like(uniforms), uniforms=uniforms)
        assert np.mean(accepted) == pytest.approx(0.5, abs=1e-3)

    def test_metropolis_accepts_gains(self):
        uniforms = np.full(4, 0.999)
        assert np.all(accept_flips(kind='metropolis', gains=np.array([0.0, 0.5, 3.0, 1e9]), uniforms=uniforms))
        assert not accept_flips(kind='metropolis', gains=np.array([-1e9]), uniforms=np.array([0.0]))[0]


class TestChains:

    def test_chain_state_keeps_fields(self):
        params = ModelParams(n=9, p=3, beta=0.8, h=0.2)
        d = sample_disorder(params=params, seed=4)
        state = ChainState(config=SpinConfig(bits=0, n=9), d=d)
        cfg = SamplerConfig(kind='glauber', sweeps=1, seed=4, random_scan=True)
        rng = derive_rng(4, 1, 0)
        flips = sum(sweep(state=state, params=params, cfg=cfg, rng=rng) for _ in range(200))
        assert flips > 0
        state.cache.check(config=state.config)
        assert state.cache.drift() < 1e-10

    @pytest.mark.parametrize('random_scan', [False, True])
    def test_replicas_are_deterministic(self, random_scan):
        params = ModelParams(n=8, p=3, beta=0.5, h=0.3)
        d = sample_disorder(params=params, seed=2)
        cfg = SamplerConfig(kind='glauber', sweeps=300, seed=2, burn_in_sweeps=10, random_scan=random_scan)
        first = run_replicas(d=d, params=params, n_replicas=3, cfg=cfg)
        second = run_replicas(d=d, params=params, n_replicas=3, cfg=cfg)
        assert sorted(first.keys()) == all_pairs(3) == [(0, 1), (0, 2), (1, 2)]
        for pair in first:
            assert np.array_equal(first[pair].values, second[pair].values)
            assert len(first[pair]) == 300
            assert np.all(np.abs(first[pair].values) <= 1.0)

    def test_pair_labels(self):
        params = ModelParams(n=6, p=2, beta=0.3, h=0.3)
        d = sample_disorder(params=params, seed=5)
        cfg = SamplerConfig(kind='metropolis', sweeps=120, seed=5, burn_in_sweeps=0)
        forward = run_replicas(d=d, params=params, n_replicas=3, cfg=cfg, pairs=[(0, 2), (2, 0)])
        assert np.array_equal(forward[(0, 2)].values, forward[(2, 0)].values)
        with pytest.raises(ValidationError):
            run_replicas(d=d, params=params, n_replicas=3, cfg=cfg, pairs=[(1, 1)])
        with pytest.raises(ValidationError):
            run_replicas(d=d, params=params, n_replicas=1, cfg=cfg)

    @pytest.mark.parametrize('random_scan', [False, True])
    def test_ensemble_fields_stay_exact(self, random_scan):
        params = ModelParams(n=10, p=3, beta=1.0, h=0.2)
        d = sample_disorder(params=params, seed=7)
        cfg = SamplerConfig(kind='glauber', sweeps=1, seed=7, random_scan=random_scan)
        ensemble = ReplicaEnsemble(d=d, params=params, cfg=cfg, count=4)
        before = ensemble.states().copy()
        for _ in range(100):
            ensemble.sweep()
        assert ensemble.sweeps_done == 100
        assert not np.array_equal(before, ensemble.states())
        assert ensemble.drift() < 1e-10

    def test_zero_beta_site_mean(self):
        params = ModelParams(n=16, p=3, beta=0.0, h=0.5)
        d = sample_disorder(params=params, seed=1)
        cfg = SamplerConfig(kind='glauber', sweeps=4000, seed=1, burn_in_sweeps=20)
        ensemble = ReplicaEnsemble(d=d, params=params, cfg=cfg, count=8)
        total = np.zeros(16)
        for _ in range(cfg.sweeps):
            ensemble.sweep()
            total += ensemble.spins().sum(axis=0)
        means = total / (cfg.sweeps * 8)
        # at beta = 0 heat-bath sweeps give independent draws
        se = math.sqrt((1 - math.tanh(0.5) ** 2) / (cfg.sweeps * 8))
        assert np.all(np.abs(means - math.tanh(0.5)) < 5 * se)

    def test_overlap_matches_exact(self):
        params = ModelParams(n=10, p=3, beta=0.5, h=0.3)
        d = sample_disorder(params=params, seed=13)
        cfg = SamplerConfig(kind='glauber', sweeps=8000, seed=13, burn_in_sweeps=200)
        series = run_replicas(d=d, params=params, n_replicas=2, cfg=cfg)[(0, 1)]
        exact = overlap_moment_exact(exact_summary(d=d, params=params), 1)
        assert abs(series.mean() - exact) < 4 * series.std_err()
        assert series.ess > 50

    def test_stationary_law(self):
        params = ModelParams(n=3, p=2, beta=1.0, h=0.3)
        d = sample_disorder(params=params, seed=3)
        cfg = SamplerConfig(kind='glauber', sweeps=2000, seed=3, burn_in_sweeps=20)
        law = empirical_state_law(d=d, params=params, cfg=cfg, chains=256)
        gibbs = exact_summary(d=d, params=params).weights()
        assert law.sum() == pytest.approx(1.0)
        assert 0.5 * np.sum(np.abs(law - gibbs)) < 0.01

    def test_random_scan_law(self):
        params = ModelParams(n=4, p=2, beta=1.0, h=0.3)
        d = sample_disorder(params=params, seed=11)
        cfg = SamplerConfig(kind='glauber', sweeps=1, seed=11, random_scan=True)
        ensemble = ReplicaEnsemble(d=d, params=params, cfg=cfg, count=3000)
        for _ in range(30):
            ensemble.sweep()
        # one state per independent chain
        counts = np.bincount(ensemble.states().astype(np.int64), minlength=16)
        gibbs = exact_summary(d=d, params=params).weights()
        _, p_value = stats.chisquare(f_obs=counts, f_exp=gibbs * counts.sum())
        assert p_value > 1e-4

    def test_kinds_agree(self):
        params = ModelParams(n=12, p=3, beta=0.5, h=0.3)
        d = sample_disorder(params=params, seed=17)
        means = []
        for kind in ('glauber', 'metropolis'):
            cfg = SamplerConfig(kind=kind, sweeps=6000, seed=17, burn_in_sweeps=200)
            series = run_replicas(d=d, params=params, n_replicas=2, cfg=cfg)[(0, 1)]
            means.append((series.mean(), series.std_err()))
        (a, sa), (b, sb) = means
        assert abs(a - b) < 4 * math.sqrt(sa ** 2 + sb ** 2)

    @pytest.mark.parametrize('thin', [1, 2, 5])
    def test_thinning(self, thin):
        params = ModelParams(n=8, p=3, beta=0.5, h=0.3)
        d = sample_disorder(params=params, seed=19)
        cfg = SamplerConfig(kind='glauber', sweeps=5000, seed=19, burn_in_sweeps=100, thin=thin)
        series = run_replicas(d=d, params=params, n_replicas=2, cfg=cfg)[(0, 1)]
        assert len(series) == len(range(0, 5000, thin))
        assert np.array_equal(series.sweeps, 101 + thin * np.arange(len(series)))
        assert series.sweeps[-1] <= cfg.total_sweeps(n=8)
        exact = overlap_moment_exact(exact_summary(d=d, params=params), 1)
        assert abs(series.mean() - exact) < 4 * series.std_err()

    def test_series_csv_carries_sweeps(self, tmp_path):
        params = ModelParams(n=6, p=3, beta=0.4, h=0.3)
        d = sample_disorder(params=params, seed=23)
        cfg = SamplerConfig(kind='metropolis', sweeps=300, seed=23, burn_in_sweeps=50, thin=3)
        series = run_replicas(d=d, params=params, n_replicas=3, cfg=cfg, pairs=[(0, 1), (1, 2)])
        path = tmp_path / 'series.csv'
        dump_series_csv(series=series, path=str(path))
        with open(path) as file:
            rows = list(csv.reader(file))
        assert rows[0] == ['sweep_index', 'pair_id', 'overlap']
        assert len(rows) == 1 + 2 * 100
        assert rows[1][:2] == ['51', '0_1']
        assert rows[2][:2] == ['51', '1_2']
        assert rows[3][:2] == ['54', '0_1']
        assert float(rows[4][2]) == series[(1, 2)].values[1]


class TestSeries:

    def test_iid_signs(self):
        values = np.where(derive_rng(1, 0).random(20000) < 0.5, -1.0, 1.0)
        tau, ess = autocorrelation(values)
        assert 0.4 <= tau <= 0.7
        assert ess == pytest.approx(values.size / (2 * tau))

    def test_ar1(self):
        rng = derive_rng(2, 0)
        noise = rng.standard_normal(200000)
        values = np.empty_like(noise)
        values[0] = noise[0]
        for t in range(1, noise.size):
            values[t] = 0.9 * values[t - 1] + noise[t]
        tau, _ = autocorrelation(values)
        assert tau == pytest.approx(9.5, rel=0.2)

    def test_degenerate(self):
        with pytest.raises(QualityError):
            autocorrelation(np.ones(500))
        with pytest.raises(ValidationError):
            autocorrelation(np.arange(50.0))

    def test_series_moments_and_csv(self, tmp_path):
        values = np.tile([0.5, -0.5, 0.25, 0.0], 50)
        series = OverlapSeries(pair=(0, 1), values=values)
        assert series.mean() == pytest.approx(0.0625)
        assert series.central_moment(q=0.0625, k=1) == pytest.approx(0.0, abs=1e-15)
        path = tmp_path / 'series.csv'
        dump_series_csv(series={(0, 1): series}, path=str(path))
        with open(path) as file:
            rows = list(csv.reader(file))
        assert rows[0] == ['sweep_index', 'pair_id', 'overlap']
        assert len(rows) == 201
        assert rows[2][:2] == ['1', '0_1']
        assert float(rows[2][2]) == -0.5
