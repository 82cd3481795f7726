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
Tests for mahler.cli_verify
"""

import copy
import json
import math

import pytest

from .. import cli_verify, report
from ..cli_verify import parse_args, run_verify, parse_grid
from ..identities import table_values
from ..numerics_core import ConvergenceFailure, ValueWithError
from ..utils import startup

_catalan = 0.9159655941772190


class FakeStatsClient(object):
    instances = []

    def __init__(self, host, port, prefix=None):
        self.prefix = prefix
        self.counts = {}
        self.timers = []
        FakeStatsClient.instances.append(self)

    def incr(self, name):
        self.counts[name] = self.counts.get(name, 0) + 1

    def timer(self, name):
        self.timers.append(name)
        return cli_verify.contextlib.nullcontext()


class TestParseGrid(object):
    def test_inclusive(self):
        assert parse_grid("0.5:2:0.5") == [0.5, 1.0, 1.5, 2.0]
        assert parse_grid("1:1:0.1") == [1.0]

    @pytest.mark.parametrize("text", ["1:2", "a:b:c", "1:2:0", "2:1:0.5"])
    def test_rejects(self, text):
        with pytest.raises(ValueError):
            parse_grid(text)


class TestDefaultTolerance(object):
    @pytest.mark.parametrize("dimension, tol", [(0, 1e-8), (1, 1e-8),
                                                (2, 1e-6), (3, 1e-4),
                                                (4, 5e-3)])
    def test_table(self, dimension, tol):
        config = startup.DEFAULT_CONFIG
        assert cli_verify.default_tolerance(dimension, config) == tol


class TestRunVerify(object):
    def setup_method(self):
        self.config = copy.deepcopy(startup.DEFAULT_CONFIG)

    def run(self, tmp_path, *argv):
        out = tmp_path / "report.json"
        code = run_verify(parse_args(list(argv) + ["--out", str(out)]),
                          self.config)
        records = json.loads(out.read_text()) if out.exists() else None
        return code, records

    def test_constant_family_exact(self, tmp_path):
        code, records = self.run(tmp_path, "verify", "family",
                                 "--kind", "first", "--n", "0", "--a", "2")
        assert code == 0
        assert len(records) == 1
        assert records[0]["lhs"] == records[0]["rhs"] == math.log(2)
        assert records[0]["abs_err"] == 0
        assert records[0]["case_id"] == "first_kind_n0"
        assert records[0]["params"] == {"n": 0, "a": 2.0}

    def test_first_kind_n1(self, tmp_path):
        code, records = self.run(tmp_path, "verify", "family",
                                 "--kind", "first_kind", "--n", "1")
        assert code == 0
        assert records[0]["tol"] == 1e-8
        assert records[0]["lhs"] == pytest.approx(2 * _catalan / math.pi,
                                                  abs=1e-8)

    def test_first_kind_n2(self, tmp_path):
        code, records = self.run(tmp_path, "verify", "family",
                                 "--kind", "first", "--n", "2", "--a", "1",
                                 "--tol", "1e-6")
        assert code == 0
        assert records[0]["rhs"] == pytest.approx(0.852557, abs=1e-6)
        assert records[0]["lhs"] == pytest.approx(0.852557, abs=1e-6)

    def test_grid(self, tmp_path):
        code, records = self.run(tmp_path, "verify", "family", "--kind",
                                 "second", "--n", "0", "--a-grid",
                                 "0.5:1.5:0.5", "--tol", "1e-5")
        assert code == 0
        assert [r["params"]["a"] for r in records] == [0.5, 1.0, 1.5]

    def test_forced_failure(self, tmp_path):
        code, records = self.run(tmp_path, "verify", "family",
                                 "--kind", "first", "--n", "1", "--a", "0.5",
                                 "--tol", "0")
        assert code == 1
        assert records[0]["pass"] is False
        assert records[0]["abs_err"] < 1e-8

    def test_monte_carlo(self, tmp_path):
        code, records = self.run(tmp_path, "verify", "family",
                                 "--kind", "first", "--n", "1",
                                 "--method", "mc", "--seed", "3",
                                 "--tol", "0.05")
        assert code == 0
        assert records[0]["lhs"] == pytest.approx(2 * _catalan / math.pi,
                                                  abs=0.05)

    def test_deterministic(self, tmp_path):
        argv = ["verify", "family", "--kind", "second", "--n", "0",
                "--a-grid", "0.5:1:0.25", "--tol", "1e-5"]
        _, first = self.run(tmp_path, *argv)
        _, second = self.run(tmp_path, *argv)
        for records in (first, second):
            for record in records:
                del record["runtime_ms"]
        assert first == second

    def test_digest_tracks_config(self, tmp_path):
        argv = ["verify", "family", "--kind", "first", "--n", "0"]
        _, first = self.run(tmp_path, *argv)
        _, seeded = self.run(tmp_path, *(argv + ["--seed", "9"]))
        assert first[0]["config_digest"] != seeded[0]["config_digest"]

    def test_identities_suite(self, tmp_path):
        code, records = self.run(tmp_path, "verify", "identities",
                                 "--suite", "z5")
        assert code == 0
        assert [r["case_id"] for r in records] == ["z5"]
        assert records[0]["abs_err"] < 1e-8

    def test_identities_with_params(self, tmp_path):
        code, records = self.run(tmp_path, "verify", "identities",
                                 "--suite", "identities.falsity")
        assert code == 0
        assert len(records) == 4
        assert {r["params"]["param"] for r in records} == {2.0, 3.0}

    def test_table_a1(self, tmp_path, monkeypatch):
        expected = dict(table_values())
        monkeypatch.setattr(
            cli_verify, "mahler_quadrature",
            lambda family, config: ValueWithError(expected[family.label]))
        code, records = self.run(tmp_path, "verify", "table-a1")
        assert code == 0
        assert len(records) == 7
        assert records[0]["case_id"] == "table_a1_first_kind_n1"
        tolerances = dict((r["case_id"], r["tol"]) for r in records)
        assert tolerances["table_a1_first_kind_n3"] == 1e-4
        assert tolerances["table_a1_second_kind_n2"] == 5e-3

    def test_numerical_failure(self, tmp_path, monkeypatch):
        def fail(family, config):
            raise ConvergenceFailure("stalled", ValueWithError(0.5, 1.0))
        monkeypatch.setattr(cli_verify, "mahler_quadrature", fail)
        code, records = self.run(tmp_path, "verify", "family",
                                 "--kind", "first", "--n", "1")
        assert code == 3
        assert records is None

    def test_unwritable_sink(self, tmp_path):
        args = parse_args(["verify", "family", "--kind", "first", "--n", "0",
                           "--out", str(tmp_path / "missing" / "r.json")])
        assert run_verify(args, self.config) == 3

    def test_bad_family(self, tmp_path):
        code, records = self.run(tmp_path, "verify", "family",
                                 "--kind", "first", "--n", "7")
        assert code == 2
        assert records is None

    def test_unknown_suite(self, tmp_path):
        code, _ = self.run(tmp_path, "verify", "identities",
                           "--suite", "nonexistent")
        assert code == 2

    def test_statsd(self, tmp_path, monkeypatch):
        FakeStatsClient.instances = []
        monkeypatch.setattr(cli_verify.statsd, "StatsClient",
                            FakeStatsClient)
        self.config["statsd"]["enabled"] = True
        code, _ = self.run(tmp_path, "verify", "family", "--kind", "first",
                           "--n", "0", "--a-grid", "1:3:1")
        assert code == 0
        stats, = FakeStatsClient.instances
        assert stats.prefix == "mahler"
        assert stats.counts == {"verify.pass": 3}
        assert stats.timers == ["verify.family"]

    def test_threads(self, tmp_path, monkeypatch):
        monkeypatch.setenv("MAHLER_THREADS", "3")
        code, records = self.run(tmp_path, "verify", "family", "--kind",
                                 "first", "--n", "0", "--a-grid", "1:4:1")
        assert code == 0
        assert [r["params"]["a"] for r in records] == [1.0, 2.0, 3.0, 4.0]

    @pytest.mark.parametrize("fmt", ["csv", "md"])
    def test_other_formats(self, tmp_path, fmt):
        out = tmp_path / ("report." + fmt)
        args = parse_args(["verify", "family", "--kind", "first", "--n", "0",
                           "--format", fmt, "--out", str(out)])
        assert run_verify(args, self.config) == 0
        assert "first_kind_n0" in out.read_text()


class TestEval(object):
    def setup_method(self):
        self.config = copy.deepcopy(startup.DEFAULT_CONFIG)

    def evaluate(self, tmp_path, *argv):
        out = tmp_path / "value.json"
        code = run_verify(parse_args(["eval"] + list(argv) +
                                     ["--out", str(out)]), self.config)
        assert code == 0
        data = json.loads(out.read_text())
        return complex(data["value"]["real"], data["value"]["imag"])

    def test_li(self, tmp_path):
        value = self.evaluate(tmp_path, "li", "--indices", "2",
                              "--args", "1")
        assert value == pytest.approx(math.pi ** 2 / 6, abs=1e-10)

    def test_li_on_the_cut(self, tmp_path):
        value = self.evaluate(tmp_path, "li", "--indices", "1",
                              "--args", "2", "--branch", "lower")
        assert value == pytest.approx(-1j * math.pi, abs=1e-10)

    def test_li_outside_disc_continues(self, tmp_path):
        value = self.evaluate(tmp_path, "li", "--indices", "2",
                              "--args", "-3")
        assert value.real == pytest.approx(-1.9393754207667089, abs=1e-9)

    def test_l_series(self, tmp_path):
        value = self.evaluate(tmp_path, "l-series", "--chars", "chi_minus4",
                              "--exps", "2")
        assert value == pytest.approx(_catalan, abs=1e-12)

    def test_script_l(self, tmp_path):
        value = self.evaluate(tmp_path, "script-l", "--a", "1", "--r", "1",
                              "--x", "0.5")
        assert value == pytest.approx(math.log(3), abs=1e-10)

    def test_script_l_needs_s(self, tmp_path):
        args = parse_args(["eval", "script-l", "--variant", "rs", "--a", "1",
                           "--r", "2"])
        assert run_verify(args, self.config) == 2

    def test_bad_character(self):
        args = parse_args(["eval", "l-series", "--chars", "nope",
                           "--exps", "2"])
        assert run_verify(args, self.config) == 2


class TestReport(object):
    def test_reemit(self, tmp_path):
        config = copy.deepcopy(startup.DEFAULT_CONFIG)
        first = tmp_path / "first.json"
        run_verify(parse_args(["verify", "family", "--kind", "first",
                               "--n", "1", "--a", "0.5", "--tol", "0",
                               "--out", str(first)]), config)

        out = tmp_path / "again.csv"
        code = run_verify(parse_args(["report", str(first), "--format",
                                      "csv", "--out", str(out)]), config)
        assert code == 1
        assert out.read_text().startswith(",".join(report.FIELDS))

    def test_invalid_report(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('[{"case_id": "z5"}]')
        args = parse_args(["report", str(path)])
        assert run_verify(args, startup.DEFAULT_CONFIG) == 2

    def test_missing_report(self, tmp_path):
        args = parse_args(["report", str(tmp_path / "absent.json")])
        assert run_verify(args, startup.DEFAULT_CONFIG) == 2


class TestMain(object):
    def setup_method(self):
        self.logging_calls = []

    def patch(self, monkeypatch, tmp_path):
        monkeypatch.chdir(tmp_path)
        monkeypatch.setattr(cli_verify.startup, "setup_logging",
                            lambda config, name:
                            self.logging_calls.append(name))

    def test_usage_error(self, monkeypatch, tmp_path):
        self.patch(monkeypatch, tmp_path)
        assert cli_verify.main(["verify", "family"]) == 2
        assert cli_verify.main(["frobnicate"]) == 2
        assert self.logging_calls == []

    def test_bad_config(self, monkeypatch, tmp_path):
        self.patch(monkeypatch, tmp_path)
        (tmp_path / "list.yml").write_text("- 1\n")
        assert cli_verify.main(["verify", "family", "--kind", "first",
                                "--config", "list.yml"]) == 2

    def test_runs_with_config(self, monkeypatch, tmp_path):
        self.patch(monkeypatch, tmp_path)
        (tmp_path / "mahler.yml").write_text("tolerances:\n    d1: 1.0e-3\n")
        code = cli_verify.main(["verify", "family", "--kind", "first",
                                "--n", "1", "--out", "r.json"])
        assert code == 0
        assert self.logging_calls == ["cli_verify"]
        records = json.loads((tmp_path / "r.json").read_text())
        assert records[0]["tol"] == 1e-3
