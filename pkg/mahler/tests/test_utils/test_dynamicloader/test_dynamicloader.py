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
Tests the Dynamic Loader module, ../dynamicloader.py
"""

import sys
import datetime

import pytest

from ....utils import dynamicloader

from . import example_module
from .example_module import CallableSuite

modname = example_module.__name__


class TestLoad:
    """dynamicloader.load():"""

    @pytest.mark.parametrize("item", [example_module.plain_suite,
                                      example_module.configured_suite,
                                      example_module.CallableSuite,
                                      example_module.NotCallable])
    def test_load_gets_correct_object(self, item):
        assert dynamicloader.load(item) is item
        realitem = getattr(sys.modules[item.__module__], item.__name__)
        assert dynamicloader.load(modname + "." + item.__name__) is realitem

    def test_can_load_module(self):
        assert dynamicloader.load("datetime") is datetime
        assert dynamicloader.load(modname) is example_module

    def test_can_load_suite_module(self):
        identities = dynamicloader.load("mahler.identities")
        assert "z5" in identities.__all__

    def test_can_load_suite_function(self):
        z5 = dynamicloader.load("mahler.identities.z5")
        assert [case.id for case in z5()] == ["z5"]

    def test_can_use_loaded_class(self):
        c = dynamicloader.load(modname + ".InheritedSuite")
        assert issubclass(c, CallableSuite)
        assert c()(1, 2) == [1, 2]

    def test_can_load_generator(self):
        g = dynamicloader.load(modname + ".generated_suite")
        assert list(g()) == ["first", "second"]

    def test_load_rejects_garbage_target(self):
        with pytest.raises(TypeError):
            dynamicloader.load(modname + ".avariable")

    def test_load_rejects_garbage_argument(self):
        with pytest.raises(TypeError):
            dynamicloader.load(1234)

    def test_load_rejects_nonexistent_module(self):
        with pytest.raises(ImportError):
            dynamicloader.load("nonexistant_module_asdf.apath.aclass")

    def test_load_rejects_nonexistent_attribute(self):
        with pytest.raises(ImportError):
            dynamicloader.load(modname + ".nothingasdf")

    def test_load_does_not_recurse_into_classes(self):
        with pytest.raises(ImportError):
            dynamicloader.load(modname + ".NotCallable.a_method")

    @pytest.mark.parametrize("name", ["", "asdf.", ".", "asdf..asdf"])
    def test_refuses_to_load_str_with_empty_components(self, name):
        with pytest.raises(ValueError):
            dynamicloader.load(name)


class TestFullname:
    def test_fullname(self):
        assert dynamicloader.fullname(example_module.CallableSuite) == \
            modname + ".CallableSuite"
        assert dynamicloader.fullname(example_module.plain_suite) == \
            modname + ".plain_suite"
        assert dynamicloader.fullname(example_module) == modname

        # a string is loaded first
        assert dynamicloader.fullname(modname) == modname
        assert dynamicloader.fullname(__name__ + ".CallableSuite") == \
            modname + ".CallableSuite"

    def test_fullname_rejects_garbage(self):
        with pytest.raises(TypeError):
            dynamicloader.fullname(1234)


class TestInspectors:
    @pytest.mark.parametrize("func, val", [
        (example_module.plain_suite, 0),
        (example_module.configured_suite, 1),
        (example_module.CallableSuite, 2),
        (example_module.InheritedSuite, 2),
        (example_module.NotCallable().a_method, 0)])
    def test_hasnumargs(self, func, val):
        assert dynamicloader.hasnumargs(func, val)
        assert not dynamicloader.hasnumargs(func, val + 1)

    def test_hasnumargs_rejects_non_functions(self):
        assert not dynamicloader.hasnumargs("asdf", 0)
