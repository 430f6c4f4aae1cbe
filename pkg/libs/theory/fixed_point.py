# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Replica-symmetric fixed point
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

        phi_p(q) = E tanh^2(beta sqrt(p/2) q^((p-1)/2) Y + h),    q = phi_p(q)

    Roots are bracketed by sign changes of q - phi_p(q) on a uniform grid
    over [0, 1] and refined with Brent's method.
"""

import math
from typing import List, Tuple

import numpy as np
from scipy.optimize import brentq
from scipy.special import lambertw

from ..common import ValidationError, NumericalError, InternalError

from .quadrature import QuadratureRule, gauss_expectation


GRID_POINTS = 1024

ROOT_XTOL = 1e-15

RESIDUAL_LIMIT = 1e-12


def field_scale(beta: float, p: int, q):
    """ beta sqrt(p/2) q^((p-1)/2) """
    q = np.clip(np.asarray(q, dtype=np.float64), 0.0, None)
    return beta * math.sqrt(p / 2.0) * q ** ((p - 1) / 2.0)


def _tanh_sq(x):
    return np.tanh(x) ** 2


def _sech_4(x):
    return 1.0 / np.cosh(x) ** 4


def _psi(x):
    """ half the second derivative of tanh^2 """
    t = np.tanh(x)
    return (1.0 - t ** 2) * (1.0 - 3.0 * t ** 2)


def phi_p(q, params, rule: QuadratureRule):
    _check_q(q)
    return gauss_expectation(fn=_tanh_sq, scale=field_scale(params.beta, params.p, q), shift=params.h, rule=rule)


def phi_p_derivative(q: float, params, rule: QuadratureRule) -> float:
    """
        d phi_p / d q = beta^2 p (p - 1)/2 q^(p-2) E[(1 - tanh^2)(1 - 3 tanh^2)];
        by Gaussian integration by parts, valid for q > 0 (and p = 2 at q = 0).
    """
    _check_q(q)
    p = params.p
    expectation = gauss_expectation(fn=_psi, scale=field_scale(params.beta, p, q), shift=params.h, rule=rule)
    return params.beta ** 2 * p * (p - 1) / 2.0 * q ** (p - 2) * expectation


def q_hat(n: int, q: float, params, rule: QuadratureRule) -> float:
    """ E tanh^n(field); q_hat(2) = q at a fixed point """
    if n < 1:
        raise ValidationError('q_hat order must be >= 1: %d' % n)
    _check_q(q)
    return gauss_expectation(fn=lambda x: np.tanh(x) ** n, scale=field_scale(params.beta, params.p, q),
                             shift=params.h, rule=rule)


def sech4_expectation(q: float, params, rule: QuadratureRule) -> float:
    """ E cosh^-4(field) = 1 - 2 q_hat_2 + q_hat_4 """
    _check_q(q)
    return gauss_expectation(fn=_sech_4, scale=field_scale(params.beta, params.p, q), shift=params.h, rule=rule)


def beta_H(p: int) -> float:
    """ the beta solving 8 p^2 beta^2 exp(16 beta^2 p) = 1/2 """
    if p < 2:
        raise ValidationError('p must be >= 2: %d' % p)
    w = float(lambertw(1.0 / p).real)
    return math.sqrt(w / (16.0 * p))


def condition_H(beta: float, p: int) -> float:
    """ 8 p^2 beta^2 exp(16 beta^2 p); the rigorous regime is where this is <= 1/2 """
    return 8.0 * p * p * beta * beta * math.exp(16.0 * beta * beta * p)


class RootReport:
    """ All fixed points of q = phi_p(q) on [0, 1] """

    def __init__(self, roots: List[float], residuals: List[float], inside_h: bool):
        super().__init__()
        self.__roots = tuple(roots)
        self.__residuals = tuple(residuals)
        self.__inside_h = inside_h

    @property
    def roots(self) -> Tuple[float, ...]:
        return self.__roots

    @property
    def residuals(self) -> Tuple[float, ...]:
        return self.__residuals

    @property
    def principal(self) -> float:
        """ the smallest root """
        return self.__roots[0]

    @property
    def unique(self) -> bool:
        return len(self.__roots) == 1

    @property
    def inside_h(self) -> bool:
        return self.__inside_h

    def to_dict(self) -> dict:
        return {
            'roots': list(self.__roots),
            'residuals': list(self.__residuals),
            'principal': self.principal,
            'inside_H': self.__inside_h,
        }

    # Override
    def __str__(self) -> str:
        return '<%s roots=%s inside_H=%s />' % (self.__class__.__name__, list(self.__roots), self.__inside_h)

    # Override
    def __repr__(self) -> str:
        return self.__str__()


def solve_q(params, rule: QuadratureRule) -> RootReport:
    grid = np.linspace(0.0, 1.0, GRID_POINTS + 1)
    gap = grid - phi_p(grid, params=params, rule=rule)

    def residual(q: float) -> float:
        return q - phi_p(q, params=params, rule=rule)

    roots = []
    for i in range(GRID_POINTS):
        left, right = gap[i], gap[i + 1]
        if left == 0.0:
            roots.append(float(grid[i]))
        elif left * right < 0.0:
            root = brentq(residual, grid[i], grid[i + 1], xtol=ROOT_XTOL, rtol=4 * np.finfo(float).eps)
            roots.append(float(root))
    if gap[-1] == 0.0:
        roots.append(1.0)
    if len(roots) == 0:
        raise NumericalError('no fixed point of phi_p found for %s' % params)
    residuals = [abs(residual(q)) for q in roots]
    worst = max(residuals)
    if worst > RESIDUAL_LIMIT:
        raise NumericalError('fixed point residual %.3g exceeds %.1g' % (worst, RESIDUAL_LIMIT))
    inside_h = params.beta <= beta_H(p=params.p)
    if inside_h and len(roots) > 1:
        raise InternalError('%d fixed points found inside the rigorous regime: %s' % (len(roots), roots))
    return RootReport(roots=roots, residuals=residuals, inside_h=inside_h)


def _check_q(q):
    q = np.asarray(q, dtype=np.float64)
    if np.any(q < 0.0) or np.any(q > 1.0) or not np.all(np.isfinite(q)):
        raise ValidationError('q must lie in [0, 1]')
