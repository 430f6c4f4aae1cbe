# -*- coding: utf-8 -*-

import math

import numpy as np
import pytest
from scipy.special import logsumexp

from libs.common import ValidationError, ResourceLimitError
from libs.model import ModelParams, Disorder, sample_disorder, neg_hamiltonian_batch, spins_from_bits
from libs.exact import energy_table, gray_energy_table, gray_code_sweep
from libs.exact import exact_summary, overlap_moment_exact, sample_states, exact_replica_sample
from libs.exact import energy_derivative, pn_sample
from libs.exact import t_decomposition, correlation_tensor, t_terms
from libs.utils import derive_rng


Q_HALF = math.tanh(0.5) ** 2


class TestEnumeration:

    @pytest.mark.parametrize('n, p', [(3, 2), (6, 3), (9, 4), (10, 3)])
    def test_table_matches_direct(self, n, p):
        params = ModelParams(n=n, p=p, beta=0.8, h=0.3)
        d = sample_disorder(params=params, seed=n * 10 + p)
        states = np.arange(1 << n, dtype=np.uint64)
        direct = neg_hamiltonian_batch(states=states, d=d, params=params)
        assert np.allclose(energy_table(d=d, params=params), direct, atol=1e-10)
        assert np.allclose(gray_energy_table(d=d, params=params), direct, atol=1e-10)

    def test_gray_visits_every_state_once(self):
        params = ModelParams(n=6, p=3, beta=0.3, h=0.5)
        d = sample_disorder(params=params, seed=3)
        visited = [bits for bits, _ in gray_code_sweep(d=d, params=params)]
        assert sorted(visited) == list(range(64))
        for a, b in zip(visited, visited[1:]):
            assert bin(a ^ b).count('1') == 1

    def test_gate(self, gates):
        gates.max_n = 8
        params = ModelParams(n=9, p=2, beta=0.1, h=0.5)
        with pytest.raises(ResourceLimitError):
            energy_table(d=sample_disorder(params=params, seed=1), params=params)


class TestSummary:

    @pytest.mark.parametrize('n', [2, 5, 10])
    def test_zero_disorder(self, n):
        params = ModelParams(n=n, p=2, beta=0.7, h=0.5)
        summary = exact_summary(d=Disorder.zeros(n=n, p=2), params=params, want_two_point=True)
        assert summary.log_z == pytest.approx(n * math.log(2 * math.cosh(0.5)), abs=1e-10)
        assert np.allclose(summary.one_point, math.tanh(0.5), atol=1e-12)
        assert overlap_moment_exact(summary, 1) == pytest.approx(Q_HALF, abs=1e-12)

    def test_two_spins(self):
        params = ModelParams(n=2, p=2, beta=0.0, h=0.5)
        summary = exact_summary(d=Disorder.zeros(n=2, p=2), params=params)
        assert math.exp(summary.log_z) == pytest.approx(5.08616, abs=1e-5)

    def test_second_moment_product_measure(self):
        params = ModelParams(n=10, p=3, beta=0.0, h=0.5)
        summary = exact_summary(d=sample_disorder(params=params, seed=1), params=params, want_two_point=True)
        assert overlap_moment_exact(summary, 2) == pytest.approx(0.141044, abs=1e-6)
        assert overlap_moment_exact(summary, 2) == pytest.approx(Q_HALF ** 2 + (1 - Q_HALF ** 2) / 10, abs=1e-12)

    @pytest.mark.parametrize('method', ['table', 'gray'])
    def test_matches_naive_summation(self, method):
        params = ModelParams(n=8, p=3, beta=1.2, h=0.2)
        d = sample_disorder(params=params, seed=17)
        states = np.arange(256, dtype=np.uint64)
        energies = neg_hamiltonian_batch(states=states, d=d, params=params)
        weights = np.exp(energies - logsumexp(energies))
        spins = spins_from_bits(bits=states, n=8).astype(np.float64)
        summary = exact_summary(d=d, params=params, want_two_point=True, method=method)
        assert summary.log_z == pytest.approx(float(logsumexp(energies)), abs=1e-10)
        assert np.allclose(summary.one_point, weights @ spins, atol=1e-12)
        assert np.allclose(summary.two_point, (spins * weights[:, None]).T @ spins, atol=1e-12)
        assert np.allclose(summary.weights(), weights, atol=1e-14)

    def test_gray_streams_without_table(self, monkeypatch):
        params = ModelParams(n=9, p=3, beta=4.0, h=0.3)
        d = sample_disorder(params=params, seed=29)
        expected = exact_summary(d=d, params=params, want_two_point=True)

        def no_table(**kwargs):
            raise AssertionError('energy table built')

        monkeypatch.setattr('libs.exact.summary.energy_table', no_table)
        streamed = exact_summary(d=d, params=params, want_two_point=True, method='gray', keep_weights=False)
        assert streamed.log_weights is None
        assert streamed.log_z == pytest.approx(expected.log_z, abs=1e-10)
        assert np.allclose(streamed.one_point, expected.one_point, atol=1e-12)
        assert np.allclose(streamed.two_point, expected.two_point, atol=1e-12)
        with pytest.raises(ValidationError):
            streamed.weights()

    def test_moment_bounds(self):
        params = ModelParams(n=9, p=2, beta=1.5, h=0.1)
        for seed in range(5):
            summary = exact_summary(d=sample_disorder(params=params, seed=seed), params=params, want_two_point=True)
            r1 = overlap_moment_exact(summary, 1)
            r2 = overlap_moment_exact(summary, 2)
            assert 0.0 <= r2 <= 1.0
            assert r2 >= r1 * r1 - 1e-12

    def test_missing_two_point(self):
        params = ModelParams(n=5, p=2, beta=0.1, h=0.5)
        summary = exact_summary(d=Disorder.zeros(n=5, p=2), params=params)
        with pytest.raises(ValidationError):
            overlap_moment_exact(summary, 2)
        with pytest.raises(ValidationError):
            overlap_moment_exact(summary, 3)
        with pytest.raises(ValidationError):
            exact_summary(d=Disorder.zeros(n=5, p=2), params=params, method='fast')


class TestSampling:

    def test_zero_beta_site_means(self):
        params = ModelParams(n=6, p=2, beta=0.0, h=0.5)
        summary = exact_summary(d=sample_disorder(params=params, seed=2), params=params)
        states = sample_states(summary=summary, count=10000, rng=derive_rng(2, 2, 0))
        spins = spins_from_bits(bits=states, n=6).astype(np.float64)
        se = math.sqrt((1 - math.tanh(0.5) ** 2) / 10000)
        assert np.all(np.abs(spins.mean(axis=0) - math.tanh(0.5)) < 4 * se)

    def test_overlap_mean_matches_exact(self):
        params = ModelParams(n=10, p=3, beta=0.9, h=0.3)
        summary = exact_summary(d=sample_disorder(params=params, seed=6), params=params)
        replicas = exact_replica_sample(summary=summary, count=20000, seed=6)
        values = np.array([np.dot(a.spins(), b.spins()) / 10.0 for a, b in zip(replicas[0::2], replicas[1::2])])
        se = values.std() / math.sqrt(values.size)
        assert abs(values.mean() - overlap_moment_exact(summary, 1)) < 4 * se

    def test_empty_and_deterministic(self):
        params = ModelParams(n=5, p=2, beta=0.5, h=0.5)
        summary = exact_summary(d=sample_disorder(params=params, seed=1), params=params)
        assert exact_replica_sample(summary=summary, count=0, seed=1) == []
        assert exact_replica_sample(summary=summary, count=5, seed=1) == exact_replica_sample(summary=summary, count=5, seed=1)


class TestFreeEnergy:

    def test_zero_beta_is_exact(self):
        for seed in range(3):
            params = ModelParams(n=8, p=3, beta=0.0, h=0.5)
            assert pn_sample(params=params, seed=seed) == pytest.approx(math.log(2 * math.cosh(0.5)), abs=1e-12)

    def test_two_spin_closed_form(self):
        params = ModelParams(n=2, p=2, beta=0.6, h=0.4)
        d = sample_disorder(params=params, seed=31)
        a = params.beta * params.u * d.couplings[0]
        expected = 0.5 * math.log(math.exp(a) * 2 * math.cosh(2 * 0.4) + 2 * math.exp(-a))
        assert pn_sample(params=params, seed=31) == pytest.approx(expected, abs=1e-12)

    def test_variance_shrinks_with_beta(self):
        cold = [pn_sample(params=ModelParams(n=10, p=3, beta=0.1, h=0.5), seed=s) for s in range(60)]
        warm = [pn_sample(params=ModelParams(n=10, p=3, beta=0.01, h=0.5), seed=s) for s in range(60)]
        assert np.var(warm) < np.var(cold)

    def test_energy_derivative_by_difference(self):
        params = ModelParams(n=8, p=3, beta=0.4, h=0.3)
        d = sample_disorder(params=params, seed=12)
        step = 1e-5
        up = exact_summary(d=d, params=params.with_beta(params.beta + step)).log_z
        down = exact_summary(d=d, params=params.with_beta(params.beta - step)).log_z
        summary = exact_summary(d=d, params=params)
        derivative = energy_derivative(d=d, params=params, summary=summary)
        assert derivative == pytest.approx((up - down) / (2 * step) / params.n, abs=1e-8)


class TestDecomposition:

    @pytest.mark.parametrize('p', [2, 3])
    def test_identity_closes(self, p):
        params = ModelParams(n=8, p=p, beta=0.6, h=0.4)
        for seed in range(5):
            d = sample_disorder(params=params, seed=seed)
            summary = exact_summary(d=d, params=params, want_two_point=True)
            c1, c2 = exact_replica_sample(summary=summary, count=2, seed=seed)
            result = t_decomposition(d=d, params=params, c1=c1, c2=c2, q=0.2, summary=summary)
            assert result.residual < 1e-10

    def test_zero_beta_constant_term(self):
        n = 8
        params = ModelParams(n=n, p=3, beta=0.0, h=0.5)
        d = sample_disorder(params=params, seed=4)
        summary = exact_summary(d=d, params=params, want_two_point=True)
        c1, c2 = exact_replica_sample(summary=summary, count=2, seed=4)
        result = t_decomposition(d=d, params=params, c1=c1, c2=c2, q=Q_HALF, summary=summary)
        # b_ij = tanh^2 h off the diagonal, 1 on it
        assert result.t_const == pytest.approx((1 - Q_HALF ** 2) / n, abs=1e-12)

    def test_swap_replicas(self):
        params = ModelParams(n=7, p=3, beta=0.5, h=0.3)
        d = sample_disorder(params=params, seed=9)
        summary = exact_summary(d=d, params=params, want_two_point=True)
        c1, c2 = exact_replica_sample(summary=summary, count=2, seed=9)
        forward = t_decomposition(d=d, params=params, c1=c1, c2=c2, q=0.3, summary=summary)
        backward = t_decomposition(d=d, params=params, c1=c2, c2=c1, q=0.3, summary=summary)
        assert forward.t_single == pytest.approx(backward.t_single[::-1])
        assert forward.t_pair == pytest.approx(backward.t_pair)
        assert forward.t_const == pytest.approx(backward.t_const)

    def test_batched_terms_agree(self):
        params = ModelParams(n=7, p=3, beta=0.5, h=0.3)
        d = sample_disorder(params=params, seed=10)
        summary = exact_summary(d=d, params=params, want_two_point=True)
        replicas = exact_replica_sample(summary=summary, count=6, seed=10)
        spins = np.array([c.spins() for c in replicas])
        terms = t_terms(tensor=correlation_tensor(summary=summary, r=2), spins1=spins[0::2], spins2=spins[1::2], q=0.3)
        for row, (a, b) in enumerate(zip(replicas[0::2], replicas[1::2])):
            single = t_decomposition(d=d, params=params, c1=a, c2=b, q=0.3, summary=summary)
            assert terms['pair'][row] == pytest.approx(single.t_pair, abs=1e-12)
            assert terms['lhs'][row] == pytest.approx(single.lhs, abs=1e-12)

    def test_tensor_from_weights(self):
        params = ModelParams(n=6, p=4, beta=0.5, h=0.3)
        summary = exact_summary(d=sample_disorder(params=params, seed=3), params=params, want_two_point=True)
        tensor = correlation_tensor(summary=summary, r=3)
        assert tensor.shape == (6, 6, 6)
        assert tensor[1, 2, 2] == pytest.approx(summary.one_point[1], abs=1e-12)

    def test_gate(self):
        params = ModelParams(n=13, p=3, beta=0.1, h=0.5)
        d = sample_disorder(params=params, seed=1)
        with pytest.raises(ResourceLimitError):
            t_decomposition(d=d, params=params, c1=None, c2=None, q=0.2)
