# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Single-site samplers
    ~~~~~~~~~~~~~~~~~~~~

    Both rules act on the flip gain d = -2 sigma_s (beta u_N field_s + h):

        glauber:     flip with probability 1 / (1 + exp(-d))
        metropolis:  flip with probability min(1, exp(d))
"""

from typing import Optional

import numpy as np
from scipy.special import expit

from ..common import ValidationError
from ..model import ModelParams, Disorder, SpinConfig
from ..model import LocalFieldCache, delta_neg_h_flip
from ..utils import check_seed


KINDS = ('glauber', 'metropolis')


class SamplerConfig:
    """
        Chain schedule: `burn_in(n)` discarded sweeps, then `sweeps` more,
        of which every `thin`-th is recorded. `sweeps` counts only the
        sweeps after burn-in, so a chain always runs burn_in + sweeps
        in total and the total exceeds the burn-in for any sweeps >= 1.
    """

    def __init__(self, kind: str, sweeps: int, seed: int, burn_in_sweeps: Optional[int] = None,
                 thin: int = 1, random_scan: bool = False):
        super().__init__()
        if kind not in KINDS:
            raise ValidationError('sampler kind must be one of %s, got %r' % (KINDS, kind))
        if sweeps < 1:
            raise ValidationError('sweeps must be >= 1: %d' % sweeps)
        if burn_in_sweeps is not None and burn_in_sweeps < 0:
            raise ValidationError('burn-in must be >= 0: %d' % burn_in_sweeps)
        if thin < 1:
            raise ValidationError('thin must be >= 1: %d' % thin)
        self.__kind = kind
        self.__sweeps = int(sweeps)
        self.__burn_in = burn_in_sweeps
        self.__thin = int(thin)
        self.__seed = check_seed(seed)
        self.__random_scan = bool(random_scan)

    @property
    def kind(self) -> str:
        return self.__kind

    @property
    def sweeps(self) -> int:
        return self.__sweeps

    def burn_in(self, n: int) -> int:
        """ configured burn-in, else 100 N sweeps """
        return 100 * n if self.__burn_in is None else self.__burn_in

    def total_sweeps(self, n: int) -> int:
        return self.burn_in(n=n) + self.__sweeps

    @property
    def thin(self) -> int:
        return self.__thin

    @property
    def seed(self) -> int:
        return self.__seed

    @property
    def random_scan(self) -> bool:
        return self.__random_scan

    def to_dict(self) -> dict:
        return {
            'kind': self.__kind,
            'sweeps': self.__sweeps,
            'burn_in_sweeps': self.__burn_in,
            'thin': self.__thin,
            'seed': self.__seed,
            'random_scan': self.__random_scan,
        }

    @classmethod
    def from_dict(cls, info: dict, seed: int):
        if not isinstance(info, dict):
            raise ValidationError('sampler section must be an object')
        return cls(kind=info.get('kind', 'glauber'), sweeps=int(info.get('sweeps', 1000)), seed=seed,
                   burn_in_sweeps=info.get('burn_in_sweeps'), thin=int(info.get('thin', 1)),
                   random_scan=bool(info.get('random_scan', False)))

    # Override
    def __str__(self) -> str:
        return '<%s kind=%s sweeps=%d thin=%d random_scan=%s />' % (
            self.__class__.__name__, self.__kind, self.__sweeps, self.__thin, self.__random_scan
        )

    # Override
    def __repr__(self) -> str:
        return self.__str__()


def accept_flips(kind: str, gains, uniforms):
    """ vectorized acceptance for flip gains d = Delta(-H) """
    if kind == 'glauber':
        return uniforms < expit(gains)
    return uniforms < np.exp(np.minimum(gains, 0.0))


class ChainState:
    """ One Markov chain: configuration plus its local fields """

    def __init__(self, config: SpinConfig, d: Disorder):
        super().__init__()
        self.__config = config
        self.__cache = LocalFieldCache(config=config, d=d)

    @property
    def config(self) -> SpinConfig:
        return self.__config

    @property
    def cache(self) -> LocalFieldCache:
        return self.__cache

    def update(self, site: int, params: ModelParams, kind: str, uniform: float) -> bool:
        gain = delta_neg_h_flip(config=self.__config, site=site, cache=self.__cache, params=params)
        if not accept_flips(kind=kind, gains=gain, uniforms=uniform):
            return False
        self.__cache.apply_flip(site=site)
        self.__config = self.__config.flipped(site=site)
        return True


def sweep(state: ChainState, params: ModelParams, cfg: SamplerConfig, rng: np.random.Generator) -> int:
    """ N single-site updates; returns the number of flips """
    n = params.n
    if cfg.random_scan:
        sites = rng.integers(1, n + 1, size=n)
    else:
        sites = range(1, n + 1)
    uniforms = rng.random(n)
    flips = 0
    for site, uniform in zip(sites, uniforms):
        if state.update(site=int(site), params=params, kind=cfg.kind, uniform=float(uniform)):
            flips += 1
    return flips
