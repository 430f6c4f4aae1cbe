# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

import itertools
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from dimples.utils import Logging

from ..common import ValidationError
from ..model import ModelParams, Disorder, SpinConfig
from ..model import coupling_graph, local_fields, bits_from_spins
from ..utils import derive_rng

from .sampler import SamplerConfig, ChainState, accept_flips, sweep
from .series import OverlapSeries


# stream path of replica r is (seed, CHAIN_STREAM, r)
CHAIN_STREAM = 1


class ReplicaEnsemble(Logging):
    """
        R independent chains over the same disorder, updated together:
        sites are visited in order 1..N and each replica draws its own
        uniform from its own stream.
    """

    def __init__(self, d: Disorder, params: ModelParams, cfg: SamplerConfig, count: int):
        super().__init__()
        d.check_params(params=params)
        if count < 1:
            raise ValidationError('need at least one replica: %d' % count)
        self.__disorder = d
        self.__params = params
        self.__cfg = cfg
        self.__graph = coupling_graph(n=params.n, p=params.p)
        self.__rngs = [derive_rng(cfg.seed, CHAIN_STREAM, r) for r in range(count)]
        starts = [np.where(rng.random(params.n) < 0.5, -1.0, 1.0) for rng in self.__rngs]
        self.__spins = np.array(starts, dtype=np.float64).reshape(count, params.n)
        if cfg.random_scan:
            self.__chains = [ChainState(config=SpinConfig.from_spins(row.astype(np.int8)), d=d)
                             for row in self.__spins]
            self.__fields = None
        else:
            self.__chains = None
            self.__fields = local_fields(spins=self.__spins, d=d)
        self.__sweeps = 0

    @property
    def count(self) -> int:
        return len(self.__rngs)

    @property
    def sweeps_done(self) -> int:
        return self.__sweeps

    def spins(self) -> np.ndarray:
        """ (R, N) array of +1/-1 """
        if self.__chains is not None:
            return np.array([chain.config.spins() for chain in self.__chains], dtype=np.float64)
        return self.__spins

    def states(self) -> np.ndarray:
        return bits_from_spins(spins=self.spins())

    def sweep(self):
        if self.__chains is not None:
            for chain, rng in zip(self.__chains, self.__rngs):
                sweep(state=chain, params=self.__params, cfg=self.__cfg, rng=rng)
        else:
            self.__ordered_sweep()
        self.__sweeps += 1

    def __ordered_sweep(self):
        params = self.__params
        graph = self.__graph
        couplings = self.__disorder.couplings
        spins = self.__spins
        fields = self.__fields
        scale = params.beta * params.u
        uniforms = np.stack([rng.random(params.n) for rng in self.__rngs])
        for s in range(params.n):
            gains = -2.0 * spins[:, s] * (scale * fields[:, s] + params.h)
            accept = accept_flips(kind=self.__cfg.kind, gains=gains, uniforms=uniforms[:, s])
            if not np.any(accept):
                continue
            rows = np.nonzero(accept)[0]
            products = np.prod(spins[np.ix_(rows, graph.others(s).reshape(-1))].reshape(
                rows.size, -1, params.p - 1), axis=2) * couplings[graph.ranks(s)]
            change = (graph.spread(s).T @ products.T).T
            change *= -2.0 * spins[rows, s][:, None] * spins[rows]
            change[:, s] = 0.0
            fields[rows] += change
            spins[rows, s] = -spins[rows, s]

    def overlap(self, a: int, b: int) -> float:
        spins = self.spins()
        return float(spins[a] @ spins[b]) / self.__params.n

    def drift(self) -> float:
        """ largest deviation of the tracked fields from a fresh recomputation """
        if self.__chains is not None:
            return max(chain.cache.drift() for chain in self.__chains)
        fresh = local_fields(spins=self.__spins, d=self.__disorder)
        return float(np.max(np.abs(fresh - self.__fields)))


def all_pairs(count: int) -> List[Tuple[int, int]]:
    return list(itertools.combinations(range(count), 2))


def run_replicas(d: Disorder, params: ModelParams, n_replicas: int, cfg: SamplerConfig,
                 pairs: Optional[Iterable[Tuple[int, int]]] = None) -> Dict[Tuple[int, int], OverlapSeries]:
    """ overlap series for each replica pair, recorded after burn-in """
    if n_replicas < 2:
        raise ValidationError('overlaps need at least two replicas: %d' % n_replicas)
    pairs = all_pairs(count=n_replicas) if pairs is None else [tuple(pair) for pair in pairs]
    for a, b in pairs:
        if not (0 <= a < n_replicas and 0 <= b < n_replicas) or a == b:
            raise ValidationError('bad replica pair: (%d, %d)' % (a, b))
    ensemble = ReplicaEnsemble(d=d, params=params, cfg=cfg, count=n_replicas)
    for _ in range(cfg.burn_in(n=params.n)):
        ensemble.sweep()
    left = np.array([a for a, _ in pairs])
    right = np.array([b for _, b in pairs])
    records = []
    stamps = []
    for t in range(cfg.sweeps):
        ensemble.sweep()
        if t % cfg.thin == 0:
            spins = ensemble.spins()
            records.append(np.sum(spins[left] * spins[right], axis=1) / params.n)
            stamps.append(ensemble.sweeps_done)
    table = np.array(records).reshape(len(records), len(pairs))
    stamps = np.array(stamps, dtype=np.int64)
    ensemble.debug(msg='%d replica(s), %d sweep(s) after %d burn-in: %s' % (
        n_replicas, cfg.sweeps, cfg.burn_in(n=params.n), params
    ))
    return {pair: OverlapSeries(pair=pair, values=table[:, i], sweeps=stamps) for i, pair in enumerate(pairs)}


def empirical_state_law(d: Disorder, params: ModelParams, cfg: SamplerConfig, chains: int) -> np.ndarray:
    """ visit frequencies over all 2^N states, pooled over chains and sweeps """
    if params.n > 16:
        raise ValidationError('state law is tabulated for N <= 16, got N = %d' % params.n)
    ensemble = ReplicaEnsemble(d=d, params=params, cfg=cfg, count=chains)
    for _ in range(cfg.burn_in(n=params.n)):
        ensemble.sweep()
    counts = np.zeros(1 << params.n, dtype=np.int64)
    for _ in range(cfg.sweeps):
        ensemble.sweep()
        counts += np.bincount(ensemble.states().astype(np.int64), minlength=counts.size)
    return counts / counts.sum()
