# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Replica-Symmetric Theory
    ~~~~~~~~~~~~~~~~~~~~~~~~

    Fixed point, free energy, AT margin and the limiting variances that the
    finite-N estimators are checked against.
"""

from .quadrature import QuadratureRule, default_rule, gauss_expectation
from .fixed_point import RootReport, field_scale
from .fixed_point import phi_p, phi_p_derivative, q_hat, sech4_expectation
from .fixed_point import beta_H, condition_H, solve_q
from .free_energy import free_energy_F, rs_free_energy, free_energy_beta_derivative
from .stability import at_factor, at_margin, beta_at
from .variances import A2_VARIANTS, variance_A2, variance_B2, variance_C2
from .variances import first_denominator, second_denominator
from .clt import gaussian_moment, overlap_power_variance, clt_variance
from .clt import clt_moment_prediction, delta_sq_prediction
from .solution import TheorySolution, solve_theory


__all__ = [

    'QuadratureRule', 'default_rule', 'gauss_expectation',

    #
    #   Fixed point
    #
    'RootReport', 'field_scale',
    'phi_p', 'phi_p_derivative', 'q_hat', 'sech4_expectation',
    'beta_H', 'condition_H', 'solve_q',

    'free_energy_F', 'rs_free_energy', 'free_energy_beta_derivative',
    'at_factor', 'at_margin', 'beta_at',

    #
    #   Fluctuations
    #
    'A2_VARIANTS', 'variance_A2', 'variance_B2', 'variance_C2',
    'first_denominator', 'second_denominator',
    'gaussian_moment', 'overlap_power_variance', 'clt_variance',
    'clt_moment_prediction', 'delta_sq_prediction',

    'TheorySolution', 'solve_theory',

]
