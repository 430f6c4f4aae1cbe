# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Variance constants of the overlap-power components
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    With m = 1 - 2q + q_hat_4 and Q = q^(p-2):

        A^2 = (p-1)^2 Q^2 m / (1 - beta^2 p(p-1)/2 Q m)
        B^2 = (p-1) Q (q - q_hat_4) [(p-1) Q + beta^2 p/2 A^2] / D
        C^2 = (p-1) Q [(q_hat_4 - q^2)((p-1) Q + beta^2 p/2 A^2)
                       + beta^2 p (2q + q^2 - 3 q_hat_4) B^2] / D
        D   = 1 - beta^2 p(p-1)/2 Q (1 - 4q + 3 q_hat_4)

    The 'printed' variant of A^2 uses q^(2(p-1)) in place of Q^2; it is
    kept for comparison only.
"""

from ..common import ValidationError, RegimeError

from .quadrature import QuadratureRule
from .fixed_point import q_hat


A2_VARIANTS = ('proof', 'printed')


def _check_variant(variant: str):
    if variant not in A2_VARIANTS:
        raise ValidationError('A^2 variant must be one of %s, got %r' % (A2_VARIANTS, variant))


def first_denominator(params, q: float, q4: float) -> float:
    p = params.p
    return 1.0 - params.beta ** 2 * p * (p - 1) / 2.0 * q ** (p - 2) * (1.0 - 2.0 * q + q4)


def second_denominator(params, q: float, q4: float) -> float:
    p = params.p
    return 1.0 - params.beta ** 2 * p * (p - 1) / 2.0 * q ** (p - 2) * (1.0 - 4.0 * q + 3.0 * q4)


def _q4(params, q: float, rule: QuadratureRule, q4: float = None) -> float:
    return q_hat(4, q=q, params=params, rule=rule) if q4 is None else q4


def variance_A2(params, q: float, rule: QuadratureRule, variant: str = 'proof', q4: float = None) -> float:
    _check_variant(variant)
    p = params.p
    q4 = _q4(params, q, rule, q4)
    denominator = first_denominator(params=params, q=q, q4=q4)
    if denominator <= 0.0:
        raise RegimeError('A^2 undefined: denominator %.6g <= 0 at %s, q = %.6g' % (denominator, params, q))
    power = 2 * (p - 2) if variant == 'proof' else 2 * (p - 1)
    return (p - 1) ** 2 * q ** power * (1.0 - 2.0 * q + q4) / denominator


def variance_B2(params, q: float, rule: QuadratureRule, variant: str = 'proof', q4: float = None,
                a2: float = None) -> float:
    p = params.p
    q4 = _q4(params, q, rule, q4)
    if a2 is None:
        a2 = variance_A2(params=params, q=q, rule=rule, variant=variant, q4=q4)
    denominator = second_denominator(params=params, q=q, q4=q4)
    if denominator <= 0.0:
        raise RegimeError('B^2 undefined: denominator %.6g <= 0 at %s, q = %.6g' % (denominator, params, q))
    base = (p - 1) * q ** (p - 2)
    return base * (q - q4) * (base + params.beta ** 2 * p / 2.0 * a2) / denominator


def variance_C2(params, q: float, rule: QuadratureRule, variant: str = 'proof', q4: float = None,
                a2: float = None, b2: float = None) -> float:
    p = params.p
    q4 = _q4(params, q, rule, q4)
    if a2 is None:
        a2 = variance_A2(params=params, q=q, rule=rule, variant=variant, q4=q4)
    if b2 is None:
        b2 = variance_B2(params=params, q=q, rule=rule, variant=variant, q4=q4, a2=a2)
    denominator = second_denominator(params=params, q=q, q4=q4)
    if denominator <= 0.0:
        raise RegimeError('C^2 undefined: denominator %.6g <= 0 at %s, q = %.6g' % (denominator, params, q))
    base = (p - 1) * q ** (p - 2)
    beta_sq = params.beta ** 2
    numerator = (q4 - q * q) * (base + beta_sq * p / 2.0 * a2) + beta_sq * p * (2.0 * q + q * q - 3.0 * q4) * b2
    return base * numerator / denominator
