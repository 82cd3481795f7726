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
Load the configured identity suites for the verification harness.

The manager is configured with modules to use and exposes the functions
listed in each module's ``__all__``, under a shorthand name for the
module. Nothing outside ``__all__`` can be reached, so a configuration
file cannot name arbitrary code.

Configuration
=============

The ``suites`` list of the configuration::

    suites:
        - name: "identities"
          class: "mahler.identities"

A suite function takes no arguments, or the configuration dict, and
returns a list of :class:`~mahler.formulas.IdentityCase`. With the
configuration above, ``identities.z5`` names :func:`mahler.identities.z5`.
"""

import logging

from .utils import dynamicloader

logger = logging.getLogger("mahler.loadable_manager")

__all__ = ["LoadableManager"]


class LoadableManager(object):
    """
    The suite manager.

    On construction, all modules listed in ``config["suites"]`` are loaded
    with :meth:`load`.
    """

    def __init__(self, config):
        self.config = config
        self.libraries = {}

        for loadable in config.get("suites", []):
            self.load(loadable["class"], loadable["name"])

    def load(self, module, shorthand):
        """Loads *module* as a library and assigns it to *shorthand*."""
        module = dynamicloader.load(module)
        self.libraries[shorthand] = module
        logger.debug("suite library {0} => {1}".format(
            shorthand, dynamicloader.fullname(module)))

    def names(self):
        """Every ``library.function`` that :meth:`run` accepts, sorted."""
        return sorted(shorthand + "." + name
                      for shorthand, library in self.libraries.items()
                      for name in library.__all__)

    def resolve(self, name):
        """
        The full name for *name*: either ``library.function`` already, or
        a bare function name found in exactly one library.
        """
        if "." in name:
            return name
        found = [full for full in self.names()
                 if full.rsplit(".", 1)[1] == name]
        if len(found) != 1:
            raise ValueError("Ambiguous or unknown suite: " + name)
        return found[0]

    def run(self, name):
        """
        Run the suite *name* and return its cases. The configuration is
        passed if the suite function takes an argument.
        """
        name = self.resolve(name)
        library_name, function_name = name.rsplit(".", 1)

        if library_name not in self.libraries:
            raise ValueError("Invalid library name: " + library_name)

        library = self.libraries[library_name]

        if function_name not in library.__all__:
            raise ValueError("Invalid suite name: " + function_name)

        func = getattr(library, function_name)

        if dynamicloader.hasnumargs(func, 0):
            return func()
        else:
            return func(self.config)

    _repr_format = "<mahler.LoadableManager: {l} libraries loaded>"

    def __repr__(self):
        return self._repr_format.format(l=len(self.libraries))
