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

"""
The top level mahler package.

mahler computes Mahler measures of a few families of polynomials in many
variables, both numerically on the torus and through closed forms in
multiple polylogarithms and Dirichlet L-values, and checks the one
against the other.

.. autosummary::
    :toctree: mahler

    mahler.numerics_core
    mahler.polylog
    mahler.hyperlog
    mahler.script_l
    mahler.dirichlet
    mahler.mahler_numeric
    mahler.formulas
    mahler.identities
    mahler.loadable_manager
    mahler.report
    mahler.cli_verify
    mahler.utils
"""

__name__ = "mahler"
__version__ = "0.1.0"
__authors__ = "The mahler developers"
__short_copyright__ = "2026 " + __authors__
__copyright__ = "Copyright " + __short_copyright__

from . import numerics_core
from . import polylog
from . import hyperlog
from . import script_l
from . import dirichlet
from . import mahler_numeric
from . import formulas
from . import identities
from . import loadable_manager
from . import report
from . import cli_verify
from . import utils
