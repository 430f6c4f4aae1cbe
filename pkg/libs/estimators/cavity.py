# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Cavity interpolation check
    ~~~~~~~~~~~~~~~~~~~~~~~~~~

    Spin N is detached from the rest (rho, the first N-1 spins) and
    re-coupled along t in [0, 1] through the field

        X_t(rho) = sqrt(t) beta u_N sum_J g_J eta_J(rho)
                   + sqrt(1 - t) beta u_N q^((p-1)/2) sum_J z_J + h,

    J running over the p-tuples that contain N and eta_J the product of its
    other p-1 spins. With eps = sigma_N and f = eps^1 eps^2, nu_t(f) is
    E <eps>_t^2, and its t-derivative equals, per draw in expectation,

        beta^2 u_N^2 sum_J [ (<eta_J>^2 - Q) - 4 (<eta_J><eps><eta_J eps> - Q <eps>^2)
                             + 3 (<eps>^2 <eta_J eps>^2 - Q <eps>^4) ],   Q = q^(p-1).

    The derivative is taken by central differences on common random numbers
    and compared with the right-hand side draw by draw.
"""

import math
from typing import Iterable, List, Optional

import numpy as np
from scipy.special import logsumexp

from dimples.utils import Log

from ..common import ValidationError, ResourceGates
from ..combinatorics import card_A, colex_array
from ..model import ModelParams
from ..model import parity_signs
from ..exact import energy_table
from ..theory import QuadratureRule
from ..utils import TaskPool

from .stats import NuEstimate, nu_estimate
from .draws import check_draws, draw_disorder, cavity_rng, principal_q


DEFAULT_DELTA = 0.02


class CavityRow:

    def __init__(self, t: float, derivative: NuEstimate, rhs: NuEstimate, difference: NuEstimate,
                 value: NuEstimate):
        super().__init__()
        self.__t = t
        self.__derivative = derivative
        self.__rhs = rhs
        self.__difference = difference
        self.__value = value

    @property
    def t(self) -> float:
        return self.__t

    @property
    def derivative(self) -> NuEstimate:
        """ finite-difference d/dt nu_t(f) """
        return self.__derivative

    @property
    def rhs(self) -> NuEstimate:
        return self.__rhs

    @property
    def difference(self) -> NuEstimate:
        """ derivative - rhs, with the joint per-draw error """
        return self.__difference

    @property
    def value(self) -> NuEstimate:
        """ nu_t(f) itself """
        return self.__value

    def consistent(self, sigmas: float = 4.0) -> bool:
        return self.__difference.within(value=0.0, sigmas=sigmas)

    def to_dict(self) -> dict:
        return {
            't': self.__t,
            'derivative': self.__derivative.to_dict(),
            'rhs': self.__rhs.to_dict(),
            'difference': self.__difference.to_dict(),
            'value': self.__value.to_dict(),
        }


class CavitySystem:
    """ One disorder draw seen from the last spin """

    def __init__(self, params: ModelParams, seed: int, index: int):
        super().__init__()
        n = params.n
        p = params.p
        d = draw_disorder(params=params, seed=seed, index=index)
        reduced = params.reduced()
        split = card_A(w=n - 1, r=p)
        table = energy_table(d=d.prefix(n - 1), params=reduced)
        self.__log_weights = table - logsumexp(table)
        tuples = colex_array(w=n - 1, r=p - 1)
        masks = np.bitwise_or.reduce(np.left_shift(np.uint64(1), tuples.astype(np.uint64)), axis=1)
        states = np.arange(1 << (n - 1), dtype=np.uint64)
        self.__eta = parity_signs(states=states, masks=masks, size=p - 1)
        self.__strength = params.beta * params.u
        self.__coupled = self.__strength * (self.__eta @ d.couplings[split:])
        z = cavity_rng(seed=seed, index=index).standard_normal(tuples.shape[0])
        self.__z_sum = float(np.sum(z))
        self.__h = params.h

    def averages(self, t: float, q: float, p: int):
        """ (<eps>, <eta_J>, <eta_J eps>) under the t-measure """
        field = math.sqrt(t) * self.__coupled + self.__h
        field += math.sqrt(1.0 - t) * self.__strength * q ** ((p - 1) / 2.0) * self.__z_sum
        log_w = self.__log_weights + np.logaddexp(field, -field)
        w = np.exp(log_w - logsumexp(log_w))
        tanh = np.tanh(field)
        eps = float(w @ tanh)
        eta = w @ self.__eta
        eta_eps = (w * tanh) @ self.__eta
        return eps, eta, eta_eps

    def value(self, t: float, q: float, p: int) -> float:
        eps, _, _ = self.averages(t=t, q=q, p=p)
        return eps * eps

    def rhs(self, t: float, q: float, p: int) -> float:
        eps, eta, eta_eps = self.averages(t=t, q=q, p=p)
        big_q = q ** (p - 1)
        total = np.sum(eta ** 2 - big_q)
        total -= 4.0 * np.sum(eta * eps * eta_eps - big_q * eps ** 2)
        total += 3.0 * np.sum(eps ** 2 * eta_eps ** 2 - big_q * eps ** 4)
        return float(self.__strength ** 2 * total)


def _difference_points(t: float, delta: float):
    low = max(0.0, t - delta)
    high = min(1.0, t + delta)
    return low, high


def cavity_derivative_check(params: ModelParams, t_grid: Iterable[float], n_disorder: int, seed: int,
                            delta: float = DEFAULT_DELTA, q: Optional[float] = None, rule: QuadratureRule = None,
                            pool: TaskPool = None) -> List[CavityRow]:
    ResourceGates().check_cavity(n=params.n)
    check_draws(n_disorder)
    if not 0.0 < delta < 0.5:
        raise ValidationError('difference step must lie in (0, 0.5): %g' % delta)
    t_grid = [float(t) for t in t_grid]
    for t in t_grid:
        if t < 0.0 or t > 1.0:
            raise ValidationError('t must lie in [0, 1]: %g' % t)
    q = principal_q(params=params, q=q, rule=rule)
    p = params.p
    pool = pool or TaskPool()

    def task(index: int) -> np.ndarray:
        system = CavitySystem(params=params, seed=seed, index=index)
        out = np.empty((len(t_grid), 3))
        for row, t in enumerate(t_grid):
            low, high = _difference_points(t=t, delta=delta)
            slope = (system.value(t=high, q=q, p=p) - system.value(t=low, q=q, p=p)) / (high - low)
            out[row] = [slope, system.rhs(t=t, q=q, p=p), system.value(t=t, q=q, p=p)]
        return out

    table = np.array(pool.map(task, n_disorder))
    rows = []
    for i, t in enumerate(t_grid):
        derivative = table[:, i, 0]
        rhs = table[:, i, 1]
        rows.append(CavityRow(t=t,
                              derivative=nu_estimate(values=derivative, provenance='exact'),
                              rhs=nu_estimate(values=rhs, provenance='exact'),
                              difference=nu_estimate(values=derivative - rhs, provenance='exact'),
                              value=nu_estimate(values=table[:, i, 2], provenance='exact')))
    Log.info(msg='cavity check at %d point(s), %d draw(s): %s' % (len(t_grid), n_disorder, params))
    return rows
