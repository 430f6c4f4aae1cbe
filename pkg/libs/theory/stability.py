# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    de Almeida-Thouless margin

        margin = 1 - beta^2 p (p-1)/2 q^(p-2) E cosh^-4(field)

    with E cosh^-4 = 1 - 2q + q_hat_4 at a fixed point.
"""

import math

import numpy as np
from scipy.optimize import brentq

from dimples.utils import Log

from .quadrature import QuadratureRule
from .fixed_point import q_hat, solve_q


BETA_MAX = 20.0

BETA_STEP = 0.05


def at_factor(q: float, params, rule: QuadratureRule) -> float:
    """ 1 - 2q + q_hat_4 """
    return 1.0 - 2.0 * q + q_hat(4, q=q, params=params, rule=rule)


def at_margin(params, q: float, rule: QuadratureRule) -> float:
    p = params.p
    return 1.0 - params.beta ** 2 * p * (p - 1) / 2.0 * q ** (p - 2) * at_factor(q=q, params=params, rule=rule)


def _principal_margin(beta: float, params, rule: QuadratureRule) -> float:
    trial = params.with_beta(beta)
    q = solve_q(params=trial, rule=rule).principal
    return at_margin(params=trial, q=q, rule=rule)


def beta_at(p: int, h: float, rule: QuadratureRule, beta_max: float = BETA_MAX):
    """
        First beta where the margin at the principal fixed point reaches 0,
        scanning upward from beta = 0; math.inf when none is found below
        `beta_max`.
    """
    from ..model import ModelParams
    params = ModelParams.theory_only(p=p, beta=0.0, h=h)
    betas = np.arange(BETA_STEP, beta_max + BETA_STEP / 2, BETA_STEP)
    previous_beta = 0.0
    for beta in betas:
        margin = _principal_margin(beta=float(beta), params=params, rule=rule)
        if margin <= 0.0:
            root = brentq(lambda b: _principal_margin(beta=b, params=params, rule=rule),
                          previous_beta, float(beta), xtol=1e-12)
            Log.debug(msg='AT line at p=%d, h=%g: beta = %.10g' % (p, h, root))
            return float(root)
        previous_beta = float(beta)
    return math.inf
