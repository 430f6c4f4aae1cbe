# -*- coding: utf-8 -*-
#
#   p-spin toolkit: released under the MIT License (see LICENSE)
#

"""
    Error Kinds
    ~~~~~~~~~~~

    Each failure kind maps to one process exit code.
"""


class ToolkitError(Exception):
    """ Base of all toolkit failures """

    EXIT_CODE = 2

    def __init__(self, msg: str):
        super().__init__(msg)
        self.__msg = msg

    @property
    def msg(self) -> str:
        return self.__msg

    @property
    def exit_code(self) -> int:
        return self.EXIT_CODE

    @property
    def kind(self) -> str:
        return self.__class__.__name__


class ValidationError(ToolkitError, ValueError):
    """ bad parameters, config or index tuples """
    EXIT_CODE = 1


class NumericalError(ToolkitError, ArithmeticError):
    """ non-finite values, overflow, root-finder failures """
    EXIT_CODE = 2


class RegimeError(ToolkitError):
    """ a closed-form quantity is undefined at this (beta, h, q) """
    EXIT_CODE = 2


class QualityError(ToolkitError):
    """ sampled data too poor to support an estimate """
    EXIT_CODE = 2


class InternalError(ToolkitError):
    """ an internal consistency check failed """
    EXIT_CODE = 2


class ResourceLimitError(ToolkitError):
    """ the requested work is beyond a configured size gate """
    EXIT_CODE = 3
