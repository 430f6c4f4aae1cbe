# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Central limit predictions for R - q
"""

import math

from ..common import ValidationError, RegimeError


def gaussian_moment(k: int) -> int:
    """ E[Y^k] for a standard normal: (k-1)!! for even k, 0 for odd k """
    if k < 0:
        raise ValidationError('moment order must be >= 0: %d' % k)
    if k % 2 == 1:
        return 0
    half = k // 2
    return math.factorial(k) // (2 ** half * math.factorial(half))


def overlap_power_variance(a2: float, b2: float, c2: float) -> float:
    """ limiting N Var(R^(p-1) - q^(p-1)) = A^2 + 2 B^2 + C^2 """
    return a2 + 2.0 * b2 + c2


def clt_variance(p: int, q: float, a2: float, b2: float, c2: float) -> float:
    """ limiting N Var(R - q), by the delta method through x -> x^(p-1) """
    slope = (p - 1) * q ** (p - 2)
    if slope == 0.0:
        raise RegimeError('clt variance undefined at q = 0 for p = %d' % p)
    return overlap_power_variance(a2=a2, b2=b2, c2=c2) / slope ** 2


def clt_moment_prediction(k: int, n: int, variance: float) -> float:
    """ E[(R - q)^k] ~ N^(-k/2) a(k) variance^(k/2) """
    if n < 1:
        raise ValidationError('N must be >= 1: %d' % n)
    return gaussian_moment(k) * variance ** (k / 2.0) / n ** (k / 2.0)


def delta_sq_prediction(n: int, params, q: float, q4: float, margin: float) -> float:
    """ 4 (p-1)^2 q^(2(p-2)) (1 - 2q + q_hat_4) / (N margin) """
    if margin <= 0.0:
        raise RegimeError('Delta^2 prediction needs a positive AT margin, got %.6g' % margin)
    p = params.p
    return 4.0 * (p - 1) ** 2 * q ** (2 * (p - 2)) * (1.0 - 2.0 * q + q4) / (n * margin)
