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

"""Configuration and logging setup for the command line tools"""

import os
import sys
import copy
import logging
import logging.handlers

import yaml

from .quick_traceback import oneline

logger = logging.getLogger("mahler.utils.startup")

__all__ = ["DEFAULT_CONFIG", "load_config", "setup_logging", "thread_count",
           "null_logger", "main"]

DEFAULT_PATH = "./mahler.yml"

DEFAULT_CONFIG = {
    "log_levels": {"stderr": "WARNING", "file": "NONE"},
    "cli_verify": {"log_file": "mahler-verify.log"},
    "tolerances": {"d1": 1e-8, "d2": 1e-6, "d3": 1e-4, "d4": 5e-3},
    "quadrature": {"method": "gauss_legendre_tensor", "points_per_dim": 24,
                   "total_points": 2 ** 16, "target_tol": 5e-3, "seed": 0,
                   "grading_ratio": 0.5, "grading_levels": 8},
    "series": {"max_terms": 2 ** 20, "tol": 1e-14},
    "hyperlog": {"clearance_min": 1e-3, "local_tol": 1e-12,
                 "cache_size": 4096},
    "statsd": {"enabled": False, "host": "localhost", "port": 8125,
               "prefix": "mahler"},
    "suites": [{"name": "identities", "class": "mahler.identities"}],
    "threads": 1,
}


def load_config(filename=None):
    """
    Loads the mahler config.

    *filename* defaults to ``./mahler.yml``; if that file does not exist
    the built in :data:`DEFAULT_CONFIG` is used. Sections present in the
    file replace or update the defaults one level deep.
    """
    config = copy.deepcopy(DEFAULT_CONFIG)

    if filename is None:
        if not os.path.exists(DEFAULT_PATH):
            return config
        filename = DEFAULT_PATH

    with open(filename) as f:
        loaded = yaml.safe_load(f) or {}

    if not isinstance(loaded, dict):
        raise ValueError("{0} does not contain a mapping".format(filename))

    for key, value in loaded.items():
        if isinstance(value, dict) and isinstance(config.get(key), dict):
            config[key].update(value)
        else:
            config[key] = value

    return config


def thread_count(config):
    """The worker count: ``MAHLER_THREADS`` if set, else ``threads``."""
    value = os.environ.get("MAHLER_THREADS", config.get("threads", 1))
    count = int(value)
    if count < 1:
        raise ValueError("thread count must be positive, got {0}"
                         .format(value))
    return count


def _get_logging_level(value):
    value = value.upper()

    if value == "NONE":
        return None
    else:
        return getattr(logging, value)


class null_logger(logging.Handler):
    """A python logging handler that discards log messages silently."""
    def emit(self, record):
        pass


_format_string = \
    "[%(asctime)s] %(levelname)s %(name)s %(threadName)s: %(message)s"


def setup_logging(config, tool_name):
    """
    **setup_logging** initialises the :py:mod:`Python logging module
    <logging>`.

    The root logger passes everything; a stderr handler and a file
    handler (``config[tool_name]["log_file"]``) filter at the levels in
    ``config["log_levels"]``. With neither, a :class:`null_logger` is
    installed.
    """
    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG)

    have_handlers = False
    levels = config["log_levels"]

    stderr_level = _get_logging_level(levels.get("stderr", "NONE"))
    file_level = _get_logging_level(levels.get("file", "NONE"))

    if stderr_level is not None:
        stderr_handler = logging.StreamHandler()
        stderr_handler.setFormatter(logging.Formatter(_format_string))
        stderr_handler.setLevel(stderr_level)
        root_logger.addHandler(stderr_handler)
        have_handlers = True

    if file_level is not None:
        file_name = config[tool_name]["log_file"]
        file_handler = logging.handlers.WatchedFileHandler(file_name)
        file_handler.setFormatter(logging.Formatter(_format_string))
        file_handler.setLevel(file_level)
        root_logger.addHandler(file_handler)
        have_handlers = True

    if not have_handlers:
        root_logger.addHandler(null_logger())

    logger.info("Log initialised")


def main(main_class, argv=None):
    """
    Main function for mahler tools. Parses arguments, loads config, sets
    up logging, and runs.

    ``main_class.parse_args(argv)`` parses the command line; its
    ``config`` attribute, if set, names the config file. An object is then
    created with arguments (config, tool_name), ``tool_name`` being
    ``main_class.tool_name``, and the return value of its ``run(args)`` is
    the exit code. Usage and config errors give 2.
    """
    try:
        args = main_class.parse_args(argv)
    except SystemExit as e:
        return e.code

    try:
        config = load_config(getattr(args, "config", None))
    except (EnvironmentError, ValueError, yaml.YAMLError) as e:
        sys.stderr.write("mahler: bad config: {0}\n".format(oneline(e)))
        return 2

    tool_name = main_class.tool_name
    setup_logging(config, tool_name)
    return main_class(config, tool_name).run(args)
