# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Gauss-Hermite expectations over a standard normal Y
"""

from functools import lru_cache
from typing import Callable

import numpy as np
from numpy.polynomial.hermite_e import hermegauss

from ..common import ValidationError, NumericalError


class QuadratureRule:
    """ probabilists' Hermite nodes with weights summing to 1 """

    DEFAULT_ORDER = 64  # config.ini [theory] quad_order

    def __init__(self, order: int = None):
        super().__init__()
        if order is None:
            order = self.DEFAULT_ORDER
        if order < 2 or order > 256:
            raise ValidationError('quadrature order must lie in 2..256: %d' % order)
        nodes, weights = hermegauss(order)
        weights = weights / np.sqrt(2.0 * np.pi)
        weights /= weights.sum()
        nodes.setflags(write=False)
        weights.setflags(write=False)
        self.__order = order
        self.__nodes = nodes
        self.__weights = weights

    @property
    def order(self) -> int:
        return self.__order

    @property
    def nodes(self) -> np.ndarray:
        return self.__nodes

    @property
    def weights(self) -> np.ndarray:
        return self.__weights

    # Override
    def __str__(self) -> str:
        return '<%s order=%d />' % (self.__class__.__name__, self.__order)

    # Override
    def __repr__(self) -> str:
        return self.__str__()


@lru_cache(maxsize=8)
def default_rule(order: int = None) -> QuadratureRule:
    return QuadratureRule(order=order)


def gauss_expectation(fn: Callable[[np.ndarray], np.ndarray], scale, shift: float,
                      rule: QuadratureRule) -> np.ndarray:
    """
        E[fn(scale Y + shift)], Y ~ N(0, 1); `scale` may be an array,
        giving one expectation per entry.
    """
    scale = np.asarray(scale, dtype=np.float64)
    points = scale[..., None] * rule.nodes + shift
    values = fn(points)
    if not np.all(np.isfinite(values)):
        raise NumericalError('non-finite integrand in Gaussian expectation')
    result = values @ rule.weights
    return float(result) if result.ndim == 0 else result
