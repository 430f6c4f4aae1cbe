# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

import math
from typing import Optional, List

import numpy as np
from scipy.special import logsumexp

from dimples.utils import Log

from ..common import ValidationError, NumericalError, InternalError, ResourceGates
from ..model import ModelParams, Disorder, SpinConfig, sample_disorder
from ..model import spins_from_bits
from ..utils import derive_rng

from .enumeration import energy_table, gray_code_sweep


_CHUNK = 1 << 16

METHODS = ('table', 'gray')


class ExactSummary:
    """ log Z and Gibbs correlations of one disorder draw """

    def __init__(self, params: ModelParams, log_z: float, one_point: np.ndarray,
                 two_point: Optional[np.ndarray] = None, log_weights: Optional[np.ndarray] = None):
        super().__init__()
        self.__params = params
        self.__log_z = log_z
        self.__one_point = one_point
        self.__two_point = two_point
        self.__log_weights = log_weights

    @property
    def params(self) -> ModelParams:
        return self.__params

    @property
    def n(self) -> int:
        return self.__params.n

    @property
    def log_z(self) -> float:
        return self.__log_z

    @property
    def one_point(self) -> np.ndarray:
        """ <sigma_i> """
        return self.__one_point

    @property
    def two_point(self) -> Optional[np.ndarray]:
        """ <sigma_i sigma_j> """
        return self.__two_point

    @property
    def log_weights(self) -> Optional[np.ndarray]:
        return self.__log_weights

    def weights(self) -> np.ndarray:
        if self.__log_weights is None:
            raise ValidationError('summary was built without the weight table')
        return np.exp(self.__log_weights)

    def to_dict(self) -> dict:
        return {
            'log_Z': self.__log_z,
            'one_point': self.__one_point.tolist(),
            'two_point': None if self.__two_point is None else self.__two_point.tolist(),
        }

    # Override
    def __str__(self) -> str:
        return '<%s N=%d log_Z=%.12g two_point=%s />' % (
            self.__class__.__name__, self.n, self.__log_z, self.__two_point is not None
        )

    # Override
    def __repr__(self) -> str:
        return self.__str__()


def exact_summary(d: Disorder, params: ModelParams, want_two_point: bool = False,
                  method: str = 'table', keep_weights: bool = True) -> ExactSummary:
    """
        'table' fills the 2^N energy table and reduces it in chunks; 'gray'
        walks the Gray-code sweep once, streaming log Z and the spin sums
        with a running maximum, and keeps the table only for `keep_weights`.
    """
    gates = ResourceGates()
    gates.check_exact(n=params.n, two_point=want_two_point)
    if method == 'table':
        table = energy_table(d=d, params=params)
        log_z = float(logsumexp(table))
        _check_log_z(log_z=log_z, params=params)
        log_weights = table - log_z
        del table
        one_point, two_point, total = _correlations(log_weights=log_weights, n=params.n, two_point=want_two_point)
        if abs(total - 1.0) > 1e-10:
            raise InternalError('Gibbs weights sum to %.17g' % total)
    elif method == 'gray':
        table = np.empty(1 << params.n, dtype=np.float64) if keep_weights else None
        log_z, one_point, two_point = _gray_stream(d=d, params=params, two_point=want_two_point, table=table)
        _check_log_z(log_z=log_z, params=params)
        log_weights = None if table is None else table - log_z
    else:
        raise ValidationError('unknown enumeration method: %s' % method)
    Log.debug(msg='exact summary (%s): %s log Z = %.12g' % (method, params, log_z))
    return ExactSummary(params=params, log_z=log_z, one_point=one_point, two_point=two_point,
                        log_weights=log_weights if keep_weights else None)


def _check_log_z(log_z: float, params: ModelParams):
    if not np.isfinite(log_z):
        raise NumericalError('log Z is not finite for %s' % params)


def _gray_stream(d: Disorder, params: ModelParams, two_point: bool, table: Optional[np.ndarray]):
    n = params.n
    spins = -np.ones(n)
    previous = 0
    top = -math.inf
    total = 0.0
    one = np.zeros(n)
    two = np.zeros((n, n)) if two_point else None
    for bits, value in gray_code_sweep(d=d, params=params):
        if table is not None:
            table[bits] = value
        changed = bits ^ previous
        if changed:
            site = changed.bit_length() - 1
            spins[site] = -spins[site]
        previous = bits
        if value > top:
            scale = math.exp(top - value) if math.isfinite(top) else 0.0
            total *= scale
            one *= scale
            if two is not None:
                two *= scale
            top = value
        w = math.exp(value - top)
        total += w
        one += w * spins
        if two is not None:
            two += w * np.outer(spins, spins)
    one /= total
    if two is not None:
        two /= total
        np.fill_diagonal(two, 1.0)
    return top + math.log(total), one, two


def _correlations(log_weights: np.ndarray, n: int, two_point: bool):
    one = np.zeros(n)
    two = np.zeros((n, n)) if two_point else None
    total = 0.0
    for start in range(0, log_weights.size, _CHUNK):
        stop = min(log_weights.size, start + _CHUNK)
        w = np.exp(log_weights[start:stop])
        spins = spins_from_bits(bits=np.arange(start, stop, dtype=np.uint64), n=n).astype(np.float64)
        total += float(w.sum())
        one += w @ spins
        if two is not None:
            two += (spins * w[:, None]).T @ spins
    if two is not None:
        np.fill_diagonal(two, 1.0)
    return one, two, total


def overlap_moment_exact(summary: ExactSummary, k: int) -> float:
    """ <R> (k = 1) or <R^2> (k = 2) from the correlation tables """
    n = summary.n
    if k == 1:
        return float(np.sum(summary.one_point ** 2) / n)
    if k == 2:
        if summary.two_point is None:
            raise ValidationError('<R^2> needs the two-point table')
        return float(np.sum(summary.two_point ** 2) / n ** 2)
    raise ValidationError('exact overlap moments cover k = 1, 2; got k = %d' % k)


def sample_states(summary: ExactSummary, count: int, rng: np.random.Generator) -> np.ndarray:
    """ `count` independent Gibbs draws as a uint64 array """
    ResourceGates().check_sampling(n=summary.n)
    if count < 0:
        raise ValidationError('sample count must be >= 0: %d' % count)
    cumulative = np.cumsum(summary.weights())
    uniforms = rng.random(count) * cumulative[-1]
    index = np.searchsorted(cumulative, uniforms, side='right')
    np.minimum(index, cumulative.size - 1, out=index)
    return index.astype(np.uint64)


def exact_replica_sample(summary: ExactSummary, count: int, seed: int) -> List[SpinConfig]:
    rng = derive_rng(seed, 2)
    states = sample_states(summary=summary, count=count, rng=rng)
    return [SpinConfig(bits=int(x), n=summary.n) for x in states]


def energy_derivative(d: Disorder, params: ModelParams, summary: ExactSummary) -> float:
    """ (1/N) d log Z / d beta = (u_N / N) <sum_J g_J sigma_J> """
    if params.beta > 0.0:
        field_part = energy_table(d=d, params=params.with_beta(0.0))
        coupling_part = (energy_table(d=d, params=params) - field_part) / params.beta
    else:
        field_part = energy_table(d=d, params=params)
        coupling_part = energy_table(d=d, params=params.with_beta(1.0)) - field_part
    return float(summary.weights() @ coupling_part) / params.n


def pn_sample(params: ModelParams, seed: int) -> float:
    """ (1/N) log Z for the disorder drawn from `seed` """
    d = sample_disorder(params=params, seed=seed)
    summary = exact_summary(d=d, params=params, keep_weights=False)
    return summary.log_z / params.n
