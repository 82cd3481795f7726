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

import logging

from ...numerics_core import ConvergenceFailure
from ...utils.quick_traceback import oneline, log_failure


class TestOneline:
    def test_exception_without_value(self):
        try:
            raise ValueError
        except Exception as e:
            assert oneline(e) == oneline() == "ValueError"

    def test_exception_with_value(self):
        try:
            raise ValueError("something weird")
        except Exception as e:
            assert oneline(e) == oneline() == "ValueError: something weird"

    def test_wacky_exception(self):
        class CrazyException(Exception):
            def __str__(self):
                return "Custom stuff"

        try:
            raise CrazyException
        except Exception as e:
            assert oneline(e) == oneline()
            assert oneline(e).endswith("CrazyException: Custom stuff")

    def test_numerical_failure(self):
        e = ConvergenceFailure("quadrature stalled", 0.5)
        assert oneline(e).endswith("ConvergenceFailure: quadrature stalled")


class TestLogFailure:
    def test_warns_with_context(self, caplog):
        logger = logging.getLogger("mahler.tests.quick_traceback")
        with caplog.at_level(logging.DEBUG, logger=logger.name):
            try:
                raise ValueError("bad a")
            except ValueError:
                log_failure(logger, "case first_n1")

        levels = [r.levelno for r in caplog.records]
        assert levels == [logging.WARNING, logging.DEBUG]
        assert caplog.records[0].getMessage() == \
            "case first_n1: ValueError: bad a"
        assert caplog.records[1].exc_info is not None
