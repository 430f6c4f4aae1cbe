# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Batch Runner
    ~~~~~~~~~~~~

    Config files in, reproducible result records out.
"""

from .settings import LOG_LEVELS, apply_settings
from .records import SCHEMA_VERSION, OUTPUT_FORMATS
from .records import RunConfig, ResultRecord
from .records import parse_int_list, parse_float_list
from .commands import VERSION, SCANS, OPERATIONS
from .commands import theory_solution, cmd_theory, cmd_exact, cmd_mcmc, cmd_scan
from .commands import execute, cmd_run, replay
from .acceptance import LEVELS, CriterionResult, AcceptanceSuite, cmd_verify


__all__ = [

    'LOG_LEVELS', 'apply_settings',

    #
    #   Records
    #
    'SCHEMA_VERSION', 'OUTPUT_FORMATS',
    'RunConfig', 'ResultRecord',
    'parse_int_list', 'parse_float_list',

    #
    #   Commands
    #
    'VERSION', 'SCANS', 'OPERATIONS',
    'theory_solution', 'cmd_theory', 'cmd_exact', 'cmd_mcmc', 'cmd_scan',
    'execute', 'cmd_run', 'replay',

    #
    #   Acceptance
    #
    'LEVELS', 'CriterionResult', 'AcceptanceSuite', 'cmd_verify',

]
