# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Quenched Estimators
    ~~~~~~~~~~~~~~~~~~~

    Disorder averages of overlap statistics, size scans against the theory
    and the cavity interpolation check.
"""

from .stats import PROVENANCES, NuEstimate, nu_estimate, jackknife
from .stats import RunsTest, inverse_n_fit, log_log_slope
from .draws import ENGINES, draw_disorder
from .moments import DEFAULT_PAIRS, MomentTable, overlap_moment_table
from .moments import nu_overlap_moments, delta_sq_estimate, nu_overlap_power
from .scans import CSV_HEADER, ScanRow, ScanResult, write_scan_csv, regime_tags
from .scans import MAX_CLT_MOMENT, kurtosis_estimate
from .scans import self_averaging_scan, clt_moment_check, pn_vs_phi_scan
from .scans import energy_derivative_scan, variance_components_check
from .cavity import CavityRow, CavitySystem, cavity_derivative_check
from .reference import set_partitions, overlap_sum_moment
from .reference import product_measure_delta_sq, product_measure_central_moment


__all__ = [

    'PROVENANCES', 'NuEstimate', 'nu_estimate', 'jackknife',
    'RunsTest', 'inverse_n_fit', 'log_log_slope',
    'ENGINES', 'draw_disorder',

    #
    #   Moments
    #
    'DEFAULT_PAIRS', 'MomentTable', 'overlap_moment_table',
    'nu_overlap_moments', 'delta_sq_estimate', 'nu_overlap_power',

    #
    #   Scans
    #
    'CSV_HEADER', 'ScanRow', 'ScanResult', 'write_scan_csv', 'regime_tags',
    'MAX_CLT_MOMENT', 'kurtosis_estimate',
    'self_averaging_scan', 'clt_moment_check', 'pn_vs_phi_scan',
    'energy_derivative_scan', 'variance_components_check',

    #
    #   Cavity
    #
    'CavityRow', 'CavitySystem', 'cavity_derivative_check',

    #
    #   Product-measure references
    #
    'set_partitions', 'overlap_sum_moment',
    'product_measure_delta_sq', 'product_measure_central_moment',

]
