# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    p-spin toolkit
    ~~~~~~~~~~~~~~

    High-temperature p-spin spin glass: fixed-point theory, exact
    enumeration, Monte Carlo replicas and disorder-averaged estimators.
"""

__version__ = '1.0.0'

# the <dimples> JSON helpers need their coders registered before first use
from dimples.common.compat import CommonLoader

CommonLoader().run()
