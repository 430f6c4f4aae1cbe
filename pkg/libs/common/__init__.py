# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Common module
    ~~~~~~~~~~~~~

    Error kinds and resource gates shared by every engine.
"""

from .errors import ToolkitError
from .errors import ValidationError, NumericalError, RegimeError
from .errors import QualityError, InternalError, ResourceLimitError
from .gates import ResourceGates


__all__ = [

    #
    #   Errors
    #
    'ToolkitError',
    'ValidationError', 'NumericalError', 'RegimeError',
    'QualityError', 'InternalError', 'ResourceLimitError',

    #
    #   Gates
    #
    'ResourceGates',

]
