# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Replica-symmetric free energy

        F(beta, h, q) = beta^2/4 (1 - p q^(p-1) + (p-1) q^p) + log 2
                        + E log cosh(beta sqrt(p/2) q^((p-1)/2) Y + h)
"""

import math

import numpy as np

from .quadrature import QuadratureRule, gauss_expectation
from .fixed_point import field_scale, _check_q


def _log_cosh(x):
    return np.logaddexp(x, -x) - math.log(2.0)


def free_energy_F(beta: float, h: float, q: float, p: int, rule: QuadratureRule) -> float:
    _check_q(q)
    energy = beta * beta / 4.0 * (1.0 - p * q ** (p - 1) + (p - 1) * q ** p)
    entropy = gauss_expectation(fn=_log_cosh, scale=field_scale(beta, p, q), shift=h, rule=rule)
    return energy + math.log(2.0) + entropy


def rs_free_energy(params, q: float, rule: QuadratureRule) -> float:
    """ Phi(beta, h) = F evaluated at the given fixed point """
    return free_energy_F(beta=params.beta, h=params.h, q=q, p=params.p, rule=rule)


def free_energy_beta_derivative(params, q: float) -> float:
    """ d Phi / d beta = beta/2 (1 - q^p), using the stationarity of F in q """
    return params.beta / 2.0 * (1.0 - q ** params.p)
