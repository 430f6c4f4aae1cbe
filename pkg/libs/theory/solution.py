# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

import math
from typing import Optional, List

from dimples import Dictionary
from dimples.utils import Log

from ..common import RegimeError

from .quadrature import QuadratureRule
from .fixed_point import solve_q, q_hat, beta_H, phi_p
from .free_energy import rs_free_energy
from .stability import at_margin, beta_at
from .variances import variance_A2, variance_B2, variance_C2
from .clt import clt_variance, overlap_power_variance


class TheorySolution(Dictionary):
    """
        Every closed-form quantity at one (p, beta, h):

            {
                "p": 3, "beta": 0.0, "h": 0.5,
                "q": 0.2135..., "roots": [...],
                "q_hat": [q_hat_1, q_hat_2, q_hat_3, q_hat_4],
                "phi": 0.8132...,
                "at_margin": 1.0,
                "beta_H": 0.0733..., "inside_H": true,
                "a2_variant": "proof",
                "a2": ..., "b2": ..., "c2": ..., "clt_var": ...
            }

        a2, b2, c2 and clt_var are null where their denominators vanish
        (non-strict solves only).
    """

    @property
    def p(self) -> int:
        return self.get(key='p')

    @property
    def beta(self) -> float:
        return self.get(key='beta')

    @property
    def h(self) -> float:
        return self.get(key='h')

    @property
    def q(self) -> float:
        return self.get(key='q')

    @property
    def roots(self) -> List[float]:
        return self.get(key='roots', default=[])

    def q_hat(self, n: int) -> float:
        """ E tanh^n, n = 1..4 """
        return self.get(key='q_hat')[n - 1]

    @property
    def phi(self) -> float:
        return self.get(key='phi')

    @property
    def at_margin(self) -> float:
        return self.get(key='at_margin')

    @property
    def beta_H(self) -> float:
        return self.get(key='beta_H')

    @property
    def inside_H(self) -> bool:
        return self.get(key='inside_H')

    @property
    def a2(self) -> Optional[float]:
        return self.get(key='a2')

    @property
    def b2(self) -> Optional[float]:
        return self.get(key='b2')

    @property
    def c2(self) -> Optional[float]:
        return self.get(key='c2')

    @property
    def clt_var(self) -> Optional[float]:
        return self.get(key='clt_var')

    @property
    def overlap_power_var(self) -> Optional[float]:
        a2, b2, c2 = self.a2, self.b2, self.c2
        if a2 is None or b2 is None or c2 is None:
            return None
        return overlap_power_variance(a2=a2, b2=b2, c2=c2)

    @property
    def beta_at(self) -> Optional[float]:
        """ null when not computed or when no AT crossing exists """
        return self.get(key='beta_at')

    @property
    def at_region(self) -> bool:
        return self.at_margin > 0.0


def solve_theory(params, rule: QuadratureRule, variant: str = 'proof', strict: bool = True,
                 with_beta_at: bool = False) -> TheorySolution:
    report = solve_q(params=params, rule=rule)
    q = report.principal
    hats = [q_hat(n, q=q, params=params, rule=rule) for n in range(1, 5)]
    info = {
        'p': params.p,
        'beta': params.beta,
        'h': params.h,
        'quad_order': rule.order,
        'q': q,
        'roots': list(report.roots),
        'q_hat': hats,
        'phi': rs_free_energy(params=params, q=q, rule=rule),
        'at_margin': at_margin(params=params, q=q, rule=rule),
        'beta_H': beta_H(p=params.p),
        'inside_H': report.inside_h,
        'a2_variant': variant,
    }
    try:
        a2 = variance_A2(params=params, q=q, rule=rule, variant=variant, q4=hats[3])
        b2 = variance_B2(params=params, q=q, rule=rule, variant=variant, q4=hats[3], a2=a2)
        c2 = variance_C2(params=params, q=q, rule=rule, variant=variant, q4=hats[3], a2=a2, b2=b2)
        info['a2'] = a2
        info['b2'] = b2
        info['c2'] = c2
        info['clt_var'] = clt_variance(p=params.p, q=q, a2=a2, b2=b2, c2=c2)
    except RegimeError as error:
        if strict:
            raise
        Log.warning(msg='variance constants undefined: %s' % error)
        info['a2'] = info['b2'] = info['c2'] = info['clt_var'] = None
    if with_beta_at:
        value = beta_at(p=params.p, h=params.h, rule=rule)
        info['beta_at'] = None if math.isinf(value) else value
    # phi_p(q) is re-evaluated once as a final consistency figure
    info['fixed_point_residual'] = abs(q - phi_p(q, params=params, rule=rule))
    return TheorySolution(dictionary=info)
