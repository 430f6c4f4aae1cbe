# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

from dimples.utils import Singleton

from .errors import ResourceLimitError


@Singleton
class ResourceGates:
    """ Size limits for the exponential-cost engines, loaded from config.ini """

    def __init__(self):
        super().__init__()
        self.max_n = 24                # exact log Z and one-point table
        self.max_n_two_point = 20      # exact two-point table
        self.max_n_sampling = 20       # exact replica sampling
        self.max_n_decomposition = 12  # T-decomposition
        self.max_p_decomposition = 3
        self.max_n_cavity = 14         # reduced system of the cavity check
        self.min_ess = 50              # MCMC effective sample size floor

    # Override
    def __str__(self) -> str:
        return '<%s max_n=%d two_point=%d sampling=%d decomposition=%d/%d cavity=%d min_ess=%d />' % (
            self.__class__.__name__, self.max_n, self.max_n_two_point, self.max_n_sampling,
            self.max_n_decomposition, self.max_p_decomposition, self.max_n_cavity, self.min_ess
        )

    def check_exact(self, n: int, two_point: bool = False):
        if n > self.max_n:
            raise ResourceLimitError('exact enumeration needs N <= %d, got N = %d' % (self.max_n, n))
        if two_point and n > self.max_n_two_point:
            raise ResourceLimitError('exact two-point table needs N <= %d, got N = %d' % (self.max_n_two_point, n))

    def check_sampling(self, n: int):
        if n > self.max_n_sampling:
            raise ResourceLimitError('exact replica sampling needs N <= %d, got N = %d' % (self.max_n_sampling, n))

    def check_decomposition(self, n: int, p: int):
        if n > self.max_n_decomposition or p > self.max_p_decomposition:
            raise ResourceLimitError('T-decomposition needs N <= %d and p <= %d, got N = %d, p = %d' % (
                self.max_n_decomposition, self.max_p_decomposition, n, p
            ))

    def check_cavity(self, n: int):
        if n > self.max_n_cavity:
            raise ResourceLimitError('cavity check needs N <= %d, got N = %d' % (self.max_n_cavity, n))
