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
A small dynamic loader for the modules named in the configuration.

The main function is :func:`load`, which resolves a dotted name to a
module, class or function. :func:`hasnumargs` lets callers check how a
loaded function wants to be called.

Example use::

    suite = dynamicloader.load("mahler.identities.z5")
    if dynamicloader.hasnumargs(suite, 0):
        cases = suite()
"""

import inspect
import importlib
import logging

logger = logging.getLogger("mahler.utils.dynamicloader")

__all__ = ["load", "fullname", "hasnumargs"]


def load(loadable):
    """
    Attempts to dynamically load *loadable*

    *loadable*: a class, a function, a module, or a string that is a
    dotted path to one of those::

        load("mahler.identities")       # the module
        load("mahler.identities.z5")    # a function in it
    """
    if isinstance(loadable, str):
        components = loadable.split(".")
        if not loadable or "" in components:
            raise ValueError("loadable(str) contains empty components")

        try:
            loaded = importlib.import_module(loadable)
        except ImportError:
            if len(components) < 2:
                raise
            module = importlib.import_module(".".join(components[:-1]))
            try:
                loaded = getattr(module, components[-1])
            except AttributeError:
                raise ImportError("Couldn't import " + loadable)

        if fullname(loaded) != loadable:
            logger.debug("loaded {0} => {1}".format(loadable,
                                                    fullname(loaded)))
        else:
            logger.debug("loaded {0}".format(loadable))
        loadable = loaded

    if not (inspect.isclass(loadable) or inspect.isfunction(loadable) or
            inspect.ismodule(loadable)):
        raise TypeError("load() takes a string, class, function or module")

    return loadable


def fullname(loadable):
    """
    Determines the full name in ``module.module.function`` form

    A string is :func:`load` ed first, so that two names for the same
    object give the same answer.
    """
    if isinstance(loadable, str):
        loadable = load(loadable)

    if inspect.isclass(loadable) or inspect.isfunction(loadable):
        return loadable.__module__ + "." + loadable.__name__
    elif inspect.ismodule(loadable):
        return loadable.__name__
    else:
        raise TypeError("loadable isn't class, function, or module")


def hasnumargs(thing, num):
    """
    does *thing* take *num* positional arguments?

    For a class, the arguments of ``__call__`` on its objects are counted.
    """
    if inspect.isclass(thing):
        thing = thing.__call__
        offset = 1
    elif inspect.isfunction(thing) or inspect.ismethod(thing):
        offset = 0
    else:
        return False

    kinds = (inspect.Parameter.POSITIONAL_ONLY,
             inspect.Parameter.POSITIONAL_OR_KEYWORD)
    parameters = [p for p in inspect.signature(thing).parameters.values()
                  if p.kind in kinds]
    return len(parameters) - offset == num
