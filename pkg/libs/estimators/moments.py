# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Quenched overlap moments
    ~~~~~~~~~~~~~~~~~~~~~~~~

    nu(f) = E <f>, E over disorder draws and <.> the Gibbs average over
    independent replicas. Each draw yields one number per statistic; the
    jackknife over draws gives the error bar.

    The exact engine reads k <= 2 straight off the correlation tables and
    samples replicas for k >= 3 and for Delta^2; the MCMC engine uses
    time averages of overlap series and adds their ESS-scaled variance
    to the error.
"""

from typing import Dict, Iterable, List, Optional

import numpy as np

from dimples.utils import Log

from ..common import ResourceGates
from ..model import ModelParams
from ..model import overlaps
from ..exact import exact_summary, overlap_moment_exact, sample_states
from ..mcmc import SamplerConfig, run_replicas
from ..theory import QuadratureRule
from ..utils import TaskPool

from .stats import NuEstimate, nu_estimate
from .draws import check_engine, check_draws, draw_disorder, replica_rng, chain_config
from .draws import principal_q, check_ess


DEFAULT_PAIRS = 4000


def _exact_moments(params: ModelParams, ks: List[int], q: float, seed: int, index: int, pairs: int) -> List[float]:
    d = draw_disorder(params=params, seed=seed, index=index)
    need_two = 2 in ks
    need_samples = any(k >= 3 for k in ks)
    summary = exact_summary(d=d, params=params, want_two_point=need_two, keep_weights=need_samples)
    r1 = overlap_moment_exact(summary=summary, k=1)
    r2 = overlap_moment_exact(summary=summary, k=2) if need_two else None
    sampled = None
    if need_samples:
        states = sample_states(summary=summary, count=2 * pairs, rng=replica_rng(seed=seed, index=index))
        sampled = overlaps(states[0::2], states[1::2], n=params.n) - q
    values = []
    for k in ks:
        if k == 1:
            values.append(r1 - q)
        elif k == 2:
            values.append(r2 - 2.0 * q * r1 + q * q)
        else:
            values.append(float(np.mean(sampled ** k)))
    return values


def _mcmc_moments(params: ModelParams, ks: List[int], q: float, seed: int, index: int,
                  sampler: Optional[SamplerConfig]) -> List[float]:
    """ per-k time averages followed by their within-chain variances """
    d = draw_disorder(params=params, seed=seed, index=index)
    cfg = chain_config(template=sampler, seed=seed, index=index)
    series = run_replicas(d=d, params=params, n_replicas=2, cfg=cfg)[(0, 1)]
    check_ess(series_list=[series], label='overlap moments')
    values = [series.central_moment(q=q, k=k) for k in ks]
    return values + [series.central_moment_var(q=q, k=k) for k in ks]


class MomentTable:
    """ Per-draw values of (R - q)^k, one row per disorder draw """

    def __init__(self, ks: List[int], values: np.ndarray, chain_var: Optional[np.ndarray], engine: str):
        super().__init__()
        self.__ks = ks
        self.__values = values
        self.__chain_var = chain_var
        self.__engine = engine

    @property
    def ks(self) -> List[int]:
        return self.__ks

    @property
    def values(self) -> np.ndarray:
        return self.__values

    @property
    def chain_var(self) -> Optional[np.ndarray]:
        """ within-chain variance of each entry, None for the exact engine """
        return self.__chain_var

    def provenance(self, k: int) -> str:
        if self.__engine == 'mcmc':
            return 'mcmc'
        return 'exact' if k <= 2 else 'exact-replicas'

    def column(self, k: int) -> int:
        return self.__ks.index(k)

    def estimate(self, k: int) -> NuEstimate:
        column = self.column(k=k)
        chain_var = None if self.__chain_var is None else self.__chain_var[:, column]
        return nu_estimate(values=self.__values[:, column], provenance=self.provenance(k=k), chain_var=chain_var)


def overlap_moment_table(params: ModelParams, ks: Iterable[int], n_disorder: int, seed: int, engine: str = 'exact',
                         q: float = None, pairs: int = DEFAULT_PAIRS, sampler: SamplerConfig = None,
                         rule: QuadratureRule = None, pool: TaskPool = None) -> MomentTable:
    check_engine(engine)
    check_draws(n_disorder)
    ks = sorted(set(int(k) for k in ks))
    gates = ResourceGates()
    if engine == 'exact':
        gates.check_exact(n=params.n, two_point=2 in ks)
        if any(k >= 3 for k in ks):
            gates.check_sampling(n=params.n)
    q = principal_q(params=params, q=q, rule=rule)
    pool = pool or TaskPool()

    def task(index: int) -> List[float]:
        if engine == 'exact':
            return _exact_moments(params=params, ks=ks, q=q, seed=seed, index=index, pairs=pairs)
        return _mcmc_moments(params=params, ks=ks, q=q, seed=seed, index=index, sampler=sampler)

    width = len(ks)
    if engine == 'exact':
        table = np.array(pool.map(task, n_disorder)).reshape(n_disorder, width)
        return MomentTable(ks=ks, values=table, chain_var=None, engine=engine)
    table = np.array(pool.map(task, n_disorder)).reshape(n_disorder, 2 * width)
    return MomentTable(ks=ks, values=table[:, :width], chain_var=table[:, width:], engine=engine)


def nu_overlap_moments(params: ModelParams, ks: Iterable[int], n_disorder: int, seed: int, engine: str = 'exact',
                       q: float = None, pairs: int = DEFAULT_PAIRS, sampler: SamplerConfig = None,
                       rule: QuadratureRule = None, pool: TaskPool = None) -> Dict[int, NuEstimate]:
    """ nu((R - q)^k) for each k """
    table = overlap_moment_table(params=params, ks=ks, n_disorder=n_disorder, seed=seed, engine=engine, q=q,
                                 pairs=pairs, sampler=sampler, rule=rule, pool=pool)
    result = {k: table.estimate(k=k) for k in table.ks}
    Log.info(msg='overlap moments %s over %d draw(s): %s' % (table.ks, n_disorder, params))
    return result


def _delta(overlap_13, overlap_14, overlap_23, overlap_24, r: int):
    return overlap_13 ** r - overlap_14 ** r - overlap_23 ** r + overlap_24 ** r


def delta_sq_estimate(params: ModelParams, n_disorder: int, seed: int, engine: str = 'exact',
                      quadruples: int = DEFAULT_PAIRS, sampler: SamplerConfig = None,
                      pool: TaskPool = None) -> NuEstimate:
    """ nu(Delta^2), Delta = R13^r - R14^r - R23^r + R24^r with r = p - 1 """
    check_engine(engine)
    check_draws(n_disorder)
    r = params.p - 1
    if engine == 'exact':
        ResourceGates().check_sampling(n=params.n)
    pool = pool or TaskPool()

    def task(index: int) -> List[float]:
        d = draw_disorder(params=params, seed=seed, index=index)
        if engine == 'exact':
            summary = exact_summary(d=d, params=params)
            states = sample_states(summary=summary, count=4 * quadruples, rng=replica_rng(seed=seed, index=index))
            s1, s2, s3, s4 = (states[i::4] for i in range(4))
            n = params.n
            delta = _delta(overlaps(s1, s3, n), overlaps(s1, s4, n), overlaps(s2, s3, n), overlaps(s2, s4, n), r)
            return [float(np.mean(delta ** 2)), 0.0]
        cfg = chain_config(template=sampler, seed=seed, index=index)
        series = run_replicas(d=d, params=params, n_replicas=4, cfg=cfg, pairs=[(0, 2), (0, 3), (1, 2), (1, 3)])
        check_ess(series_list=series.values(), label='Delta^2')
        delta = _delta(series[(0, 2)].values, series[(0, 3)].values, series[(1, 2)].values, series[(1, 3)].values, r)
        ess = min(item.ess for item in series.values())
        return [float(np.mean(delta ** 2)), float(np.var(delta ** 2) / ess)]

    table = np.array(pool.map(task, n_disorder)).reshape(n_disorder, 2)
    if engine == 'mcmc':
        return nu_estimate(values=table[:, 0], provenance='mcmc', chain_var=table[:, 1])
    return nu_estimate(values=table[:, 0], provenance='exact-replicas')


def nu_overlap_power(params: ModelParams, power: int, n_disorder: int, seed: int, pairs: int = DEFAULT_PAIRS,
                     pool: TaskPool = None) -> NuEstimate:
    """ nu(R^power) from exact replica draws """
    check_draws(n_disorder)
    ResourceGates().check_sampling(n=params.n)
    pool = pool or TaskPool()

    def task(index: int) -> float:
        d = draw_disorder(params=params, seed=seed, index=index)
        summary = exact_summary(d=d, params=params)
        states = sample_states(summary=summary, count=2 * pairs, rng=replica_rng(seed=seed, index=index))
        return float(np.mean(overlaps(states[0::2], states[1::2], n=params.n) ** power))

    return nu_estimate(values=pool.map(task, n_disorder), provenance='exact-replicas')
