# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Per-draw streams
    ~~~~~~~~~~~~~~~~

    Draw i of a run seeded with s uses

        disorder        seed derive_seed(s, 0, i)
        mcmc chains     seed derive_seed(s, 1, i)
        exact replicas  derive_rng(s, 2, i)
        cavity field z  derive_rng(s, 3, i)

    so results do not depend on how draws are spread over workers.
"""

from typing import Optional

import numpy as np

from ..common import ValidationError, QualityError, ResourceGates
from ..model import ModelParams, Disorder, sample_disorder
from ..mcmc import SamplerConfig
from ..theory import QuadratureRule, solve_q
from ..utils import derive_seed, derive_rng


DISORDER_STREAM = 0
CHAIN_STREAM = 1
REPLICA_STREAM = 2
CAVITY_STREAM = 3

ENGINES = ('exact', 'mcmc')


def check_engine(engine: str):
    if engine not in ENGINES:
        raise ValidationError('engine must be one of %s, got %r' % (ENGINES, engine))


def check_draws(n_disorder: int):
    if n_disorder < 1:
        raise ValidationError('need at least one disorder draw: %d' % n_disorder)


def draw_disorder(params: ModelParams, seed: int, index: int) -> Disorder:
    return sample_disorder(params=params, seed=derive_seed(seed, DISORDER_STREAM, index))


def replica_rng(seed: int, index: int) -> np.random.Generator:
    return derive_rng(seed, REPLICA_STREAM, index)


def cavity_rng(seed: int, index: int) -> np.random.Generator:
    return derive_rng(seed, CAVITY_STREAM, index)


def chain_config(template: Optional[SamplerConfig], seed: int, index: int) -> SamplerConfig:
    chain_seed = derive_seed(seed, CHAIN_STREAM, index)
    if template is None:
        return SamplerConfig(kind='glauber', sweeps=4000, seed=chain_seed)
    info = template.to_dict()
    return SamplerConfig.from_dict(info=info, seed=chain_seed)


def principal_q(params: ModelParams, q: Optional[float], rule: Optional[QuadratureRule]) -> float:
    if q is not None:
        return q
    return solve_q(params=params, rule=rule or QuadratureRule()).principal


def check_ess(series_list, label: str):
    gates = ResourceGates()
    for series in series_list:
        if series.ess < gates.min_ess:
            raise QualityError('%s: effective sample size %.1f below %d for pair %s' % (
                label, series.ess, gates.min_ess, series.pair
            ))
