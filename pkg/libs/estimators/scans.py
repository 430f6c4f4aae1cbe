# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Size scans
    ~~~~~~~~~~

    Each scan evaluates one quenched statistic over a list of N and lines
    it up against the N-independent theory, one ScanRow per (N, stat).
"""

import csv
from typing import Iterable, List, Optional

import numpy as np

from dimples.utils import Log

from ..common import ValidationError, ResourceGates
from ..model import ModelParams
from ..exact import exact_summary, energy_derivative, sample_states, pn_sample
from ..exact import correlation_tensor, t_terms
from ..model import spins_from_bits
from ..theory import QuadratureRule, TheorySolution, solve_theory
from ..theory import clt_moment_prediction, free_energy_beta_derivative
from ..utils import TaskPool, derive_seed

from .stats import NuEstimate, nu_estimate, jackknife, inverse_n_fit, log_log_slope, RunsTest
from .moments import MomentTable, overlap_moment_table, nu_overlap_moments, DEFAULT_PAIRS
from .draws import check_draws, draw_disorder, replica_rng, DISORDER_STREAM


CSV_HEADER = ['N', 'stat', 'estimate', 'std_err', 'prediction', 'scaled']

MAX_CLT_MOMENT = 6


class ScanRow:

    def __init__(self, n: int, stat: str, estimate: NuEstimate, prediction: Optional[float], scaled: float):
        super().__init__()
        self.__n = n
        self.__stat = stat
        self.__estimate = estimate
        self.__prediction = prediction
        self.__scaled = scaled

    @property
    def n(self) -> int:
        return self.__n

    @property
    def stat(self) -> str:
        return self.__stat

    @property
    def estimate(self) -> NuEstimate:
        return self.__estimate

    @property
    def prediction(self) -> Optional[float]:
        return self.__prediction

    @property
    def scaled(self) -> float:
        return self.__scaled

    def csv_row(self) -> list:
        prediction = '' if self.__prediction is None else repr(float(self.__prediction))
        return [self.__n, self.__stat, repr(self.__estimate.mean), repr(self.__estimate.std_err),
                prediction, repr(float(self.__scaled))]

    def to_dict(self) -> dict:
        return {
            'N': self.__n,
            'stat': self.__stat,
            'estimate': self.__estimate.to_dict(),
            'prediction': self.__prediction,
            'scaled': self.__scaled,
        }

    # Override
    def __str__(self) -> str:
        return '<%s N=%d stat=%s estimate=%s prediction=%s />' % (
            self.__class__.__name__, self.__n, self.__stat, self.__estimate, self.__prediction
        )

    # Override
    def __repr__(self) -> str:
        return self.__str__()


class ScanResult:
    """ rows plus whatever fit the scan performs """

    def __init__(self, rows: List[ScanRow], fit: dict = None, tags: dict = None):
        super().__init__()
        self.__rows = rows
        self.__fit = {} if fit is None else fit
        self.__tags = {} if tags is None else tags

    @property
    def rows(self) -> List[ScanRow]:
        return self.__rows

    @property
    def fit(self) -> dict:
        return self.__fit

    @property
    def tags(self) -> dict:
        return self.__tags

    def select(self, stat: str) -> List[ScanRow]:
        return [row for row in self.__rows if row.stat == stat]

    def to_dict(self) -> dict:
        return {
            'rows': [row.to_dict() for row in self.__rows],
            'fit': self.__fit,
            'tags': self.__tags,
        }


def write_scan_csv(rows: Iterable[ScanRow], path: str):
    with open(path, 'w', newline='') as file:
        writer = csv.writer(file)
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(row.csv_row())


def regime_tags(params: ModelParams, solution: TheorySolution) -> dict:
    return {
        'rigorous_regime': bool(solution.inside_H),
        'at_region': bool(solution.at_margin > 0.0),
        'beta': params.beta,
        'beta_H': solution.beta_H,
    }


def _check_sizes(ns: Iterable[int], p: int) -> List[int]:
    ns = sorted(set(int(n) for n in ns))
    if len(ns) == 0:
        raise ValidationError('scan needs at least one N')
    if ns[0] < max(p, 2):
        raise ValidationError('scan sizes must be >= p = %d: %s' % (p, ns))
    return ns


def self_averaging_scan(params: ModelParams, ns: Iterable[int], n_disorder: int, seed: int, engine: str = 'exact',
                        rule: QuadratureRule = None, pool: TaskPool = None, **kwargs) -> ScanResult:
    """ nu(R - q) and nu((R - q)^2) against N """
    ns = _check_sizes(ns, params.p)
    rule = rule or QuadratureRule()
    solution = solve_theory(params=params, rule=rule, strict=False)
    rows = []
    for n in ns:
        sized = params.with_n(n)
        moments = nu_overlap_moments(params=sized, ks=[1, 2], n_disorder=n_disorder, seed=seed, engine=engine,
                                     q=solution.q, rule=rule, pool=pool, **kwargs)
        first = moments[1]
        second = moments[2]
        rows.append(ScanRow(n=n, stat='nu_R_minus_q', estimate=first, prediction=0.0,
                            scaled=n * abs(first.mean)))
        prediction = None if solution.clt_var is None else solution.clt_var / n
        rows.append(ScanRow(n=n, stat='nu_R_minus_q_sq', estimate=second, prediction=prediction,
                            scaled=n * second.mean))
    result = ScanResult(rows=rows, tags=regime_tags(params=params, solution=solution))
    result.fit['slope_sq'] = log_log_slope(ns=ns, values=[row.estimate.mean for row in result.select('nu_R_minus_q_sq')])
    scaled = [row.scaled for row in result.select('nu_R_minus_q')]
    result.fit['scaled_first_max'] = max(scaled)
    result.fit['scaled_first_min'] = min(scaled)
    return result


def kurtosis_estimate(table: MomentTable) -> NuEstimate:
    """ nu((R - q)^4) / nu((R - q)^2)^2 with its jackknife error over draws """
    pair = table.values[:, [table.column(k=2), table.column(k=4)]]
    ratio, std_err = jackknife(samples=pair, statistic=lambda m: m[1] / (m[0] * m[0]))
    if table.chain_var is not None:
        second, fourth = pair.mean(axis=0)
        count = pair.shape[0]
        var_2 = float(np.mean(table.chain_var[:, table.column(k=2)])) / count
        var_4 = float(np.mean(table.chain_var[:, table.column(k=4)])) / count
        std_err = float(np.sqrt(std_err ** 2 + var_4 / second ** 4 + 4.0 * fourth ** 2 * var_2 / second ** 6))
    return NuEstimate(mean=ratio, std_err=std_err, n_disorder=pair.shape[0], provenance=table.provenance(k=4))


def clt_moment_check(params: ModelParams, ks: Iterable[int], ns: Iterable[int], n_disorder: int, seed: int,
                     engine: str = 'exact', rule: QuadratureRule = None, pool: TaskPool = None,
                     **kwargs) -> ScanResult:
    """
        nu((R - q)^k) against N^(-k/2) a(k) clt_var^(k/2) for 1 <= k <= 6,
        plus one 'kurtosis_ratio' row per N compared with 3.
    """
    ns = _check_sizes(ns, params.p)
    ks = sorted(set(int(k) for k in ks))
    if len(ks) == 0 or ks[0] < 1 or ks[-1] > MAX_CLT_MOMENT:
        raise ValidationError('moment orders must lie in 1..%d: %s' % (MAX_CLT_MOMENT, ks))
    rule = rule or QuadratureRule()
    solution = solve_theory(params=params, rule=rule)
    rows = []
    for n in ns:
        table = overlap_moment_table(params=params.with_n(n), ks=set(ks) | {2, 4}, n_disorder=n_disorder,
                                     seed=seed, engine=engine, q=solution.q, rule=rule, pool=pool, **kwargs)
        for k in ks:
            estimate = table.estimate(k=k)
            rows.append(ScanRow(n=n, stat='nu_R_minus_q_pow_%d' % k, estimate=estimate,
                                prediction=clt_moment_prediction(k=k, n=n, variance=solution.clt_var),
                                scaled=n ** (k / 2.0) * estimate.mean))
        kurtosis = kurtosis_estimate(table=table)
        rows.append(ScanRow(n=n, stat='kurtosis_ratio', estimate=kurtosis, prediction=3.0, scaled=kurtosis.mean))
    Log.info(msg='CLT moments %s at N = %s: %s' % (ks, ns, params))
    return ScanResult(rows=rows, tags=regime_tags(params=params, solution=solution))


def pn_vs_phi_scan(params: ModelParams, ns: Iterable[int], n_disorder: int, seed: int,
                   rule: QuadratureRule = None, pool: TaskPool = None) -> ScanResult:
    """ E (1/N) log Z against Phi, with p_N = Phi_hat + c / N fitted over N """
    ns = _check_sizes(ns, params.p)
    check_draws(n_disorder)
    rule = rule or QuadratureRule()
    solution = solve_theory(params=params, rule=rule, strict=False)
    pool = pool or TaskPool()
    rows = []
    for n in ns:
        sized = params.with_n(n)
        ResourceGates().check_exact(n=n)

        def task(index: int) -> float:
            return pn_sample(params=sized, seed=derive_seed(seed, DISORDER_STREAM, index))

        estimate = nu_estimate(values=pool.map(task, n_disorder), provenance='exact')
        rows.append(ScanRow(n=n, stat='p_N', estimate=estimate, prediction=solution.phi,
                            scaled=n * (estimate.mean - solution.phi)))
    result = ScanResult(rows=rows, tags=regime_tags(params=params, solution=solution))
    if len(ns) >= 2:
        fit = inverse_n_fit(ns=ns, means=[row.estimate.mean for row in rows],
                            std_errs=[row.estimate.std_err for row in rows])
        fit['phi'] = solution.phi
        fit['runs'] = RunsTest(residuals=fit['residuals']).to_dict()
        result.fit.update(fit)
    Log.info(msg='p_N scan over N = %s: %s' % (ns, result.fit.get('intercept')))
    return result


def energy_derivative_scan(params: ModelParams, ns: Iterable[int], n_disorder: int, seed: int,
                           pairs: int = DEFAULT_PAIRS, rule: QuadratureRule = None,
                           pool: TaskPool = None) -> ScanResult:
    """
        (1/N) E d log Z / d beta beside beta/2 (1 - nu(R^p)), both against
        the derivative of Phi, beta/2 (1 - q^p).
    """
    ns = _check_sizes(ns, params.p)
    check_draws(n_disorder)
    rule = rule or QuadratureRule()
    solution = solve_theory(params=params, rule=rule, strict=False)
    prediction = free_energy_beta_derivative(params=params, q=solution.q)
    pool = pool or TaskPool()
    rows = []
    for n in ns:
        sized = params.with_n(n)
        ResourceGates().check_sampling(n=n)

        def task(index: int) -> List[float]:
            d = draw_disorder(params=sized, seed=seed, index=index)
            summary = exact_summary(d=d, params=sized)
            states = sample_states(summary=summary, count=2 * pairs, rng=replica_rng(seed=seed, index=index))
            spins = spins_from_bits(bits=states, n=n).astype(np.float64)
            power = np.mean((np.sum(spins[0::2] * spins[1::2], axis=1) / n) ** sized.p)
            return [energy_derivative(d=d, params=sized, summary=summary), float(power)]

        table = np.array(pool.map(task, n_disorder)).reshape(n_disorder, 2)
        derivative = nu_estimate(values=table[:, 0], provenance='exact')
        half_beta = nu_estimate(values=params.beta / 2.0 * (1.0 - table[:, 1]), provenance='exact-replicas')
        rows.append(ScanRow(n=n, stat='dlogZ_dbeta', estimate=derivative, prediction=prediction,
                            scaled=n * (derivative.mean - prediction)))
        rows.append(ScanRow(n=n, stat='half_beta_one_minus_nu_Rp', estimate=half_beta, prediction=prediction,
                            scaled=n * (half_beta.mean - prediction)))
    return ScanResult(rows=rows, tags=regime_tags(params=params, solution=solution))


def variance_components_check(params: ModelParams, ns: Iterable[int], n_disorder: int, seed: int,
                              pairs: int = DEFAULT_PAIRS, rule: QuadratureRule = None,
                              pool: TaskPool = None) -> ScanResult:
    """
        N nu(T_pair^2), N nu(T_single^2), N nu(T^2) and N nu((R^r - q^r)^2)
        against A^2, B^2, C^2 and A^2 + 2 B^2 + C^2.
    """
    ns = _check_sizes(ns, params.p)
    check_draws(n_disorder)
    rule = rule or QuadratureRule()
    solution = solve_theory(params=params, rule=rule)
    q = solution.q
    pool = pool or TaskPool()
    predictions = {
        'T_pair_sq': solution.a2,
        'T_single_sq': solution.b2,
        'T_const_sq': solution.c2,
        'R_power_dev_sq': solution.overlap_power_var,
    }
    closure = 0.0
    rows = []
    for n in ns:
        sized = params.with_n(n)
        ResourceGates().check_decomposition(n=n, p=params.p)

        def task(index: int) -> List[float]:
            d = draw_disorder(params=sized, seed=seed, index=index)
            summary = exact_summary(d=d, params=sized, want_two_point=sized.p == 3)
            tensor = correlation_tensor(summary=summary, r=sized.p - 1)
            states = sample_states(summary=summary, count=2 * pairs, rng=replica_rng(seed=seed, index=index))
            spins = spins_from_bits(bits=states, n=n)
            terms = t_terms(tensor=tensor, spins1=spins[0::2], spins2=spins[1::2], q=q)
            total = terms['pair'] + terms['single_1'] + terms['single_2'] + terms['const']
            return [
                float(np.mean(terms['pair'] ** 2)),
                float(np.mean(terms['single_1'] ** 2 + terms['single_2'] ** 2) / 2.0),
                float(terms['const'] ** 2),
                float(np.mean(terms['lhs'] ** 2)),
                float(np.max(np.abs(total - terms['lhs']))),
            ]

        table = np.array(pool.map(task, n_disorder)).reshape(n_disorder, 5)
        closure = max(closure, float(np.max(table[:, 4])))
        for column, stat in enumerate(['T_pair_sq', 'T_single_sq', 'T_const_sq', 'R_power_dev_sq']):
            estimate = nu_estimate(values=table[:, column], provenance='exact-replicas')
            limit = predictions[stat]
            rows.append(ScanRow(n=n, stat=stat, estimate=estimate,
                                prediction=None if limit is None else limit / n, scaled=n * estimate.mean))
    return ScanResult(rows=rows, fit={'closure_residual': closure}, tags=regime_tags(params=params, solution=solution))
