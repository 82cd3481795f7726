# Copyright 2026 (C) The mahler developers
#
# This file is part of mahler.
#
# mahler is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# mahler is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with mahler.  If not, see <http://www.gnu.org/licenses/>.

"""Quick traceback module shortcuts for logging"""

import sys
import traceback


def oneline(exc_value=None):
    """
    Return a single line describing 'exc_value'

    *exc_value* should be an exception instance, or None for the exception
    currently being handled.

    The string is the last line of Python's normal traceback, for example
    'ConvergenceFailure: quadrature error 0.002 above target 1e-06'.
    """
    if exc_value is None:
        exc_value = sys.exc_info()[1]
    lines = traceback.format_exception_only(type(exc_value), exc_value)
    return lines[-1].strip()


def log_failure(logger, context, exc_value=None):
    """
    Log *context* and the one line summary of *exc_value* as a warning,
    keeping the full traceback for the debug level.
    """
    logger.warning("{0}: {1}".format(context, oneline(exc_value)))
    logger.debug("traceback for {0}".format(context),
                 exc_info=exc_value or True)
