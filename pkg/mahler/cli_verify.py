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
The ``mahler-verify`` command line harness.

Subcommands::

    verify family --kind first --n 2 --a 1 [--a-grid lo:hi:step]
    verify identities [--suite z5 ...]
    verify table-a1
    eval li --indices 3,2 --args 1,-1
    eval hyperlog --word 1,-1 --endpoint 2 --branch lower
    eval script-l --a 0.5 --r 2 --x 1
    eval l-series --chars chi_minus4 --exps 2
    report old.json --format md

Every subcommand takes ``--config``, ``--format json|csv|md``, ``--out``,
``--tol``, ``--seed`` and ``--method quad|qmc|mc``. Without ``--tol`` a
family is held to the ``tolerances`` entry for its torus dimension and an
identity case to its own tolerance.

Exit codes: 0 when every record passes, 1 when any fails, 2 for usage or
config errors, 3 for a numerical failure or an unwritable report.
"""

import sys
import time
import json
import logging
import argparse
import contextlib
from concurrent.futures import ThreadPoolExecutor

import statsd

from . import hyperlog, polylog, script_l, dirichlet, identities, report
from .formulas import closed_form
from .loadable_manager import LoadableManager
from .mahler_numeric import (FamilySpec, KINDS, mahler_quadrature,
                             mahler_monte_carlo)
from .numerics_core import (NumericalFailure, QuadratureConfig,
                            ValueWithError)
from .utils import startup
from .utils.quick_traceback import log_failure

logger = logging.getLogger("mahler.cli_verify")

__all__ = ["Verifier", "parse_args", "run_verify", "main", "parse_grid",
           "default_tolerance"]

METHODS = {"quad": "gauss_legendre_tensor", "qmc": "qmc_sobol_like",
           "mc": "monte_carlo"}

BRANCHES = {"default": hyperlog.DEFAULT, "real": hyperlog.REAL_SEGMENT,
            "lower": hyperlog.LOWER_SEMICIRCLE,
            "upper": hyperlog.UPPER_SEMICIRCLE}

_KIND_ALIASES = {"first": "first_kind", "second": "second_kind"}

_SCRIPT_L = {"r": script_l.script_l_r, "r1": script_l.script_l_r1,
             "rs": script_l.script_l_rs, "rs1": script_l.script_l_rs1}


def parse_grid(text):
    """``"lo:hi:step"`` to the list lo, lo + step, ..., hi (inclusive)."""
    try:
        lo, hi, step = [float(part) for part in text.split(":")]
    except ValueError:
        raise ValueError("expected lo:hi:step, got {0!r}".format(text))
    if not step > 0 or hi < lo:
        raise ValueError("need step > 0 and lo <= hi")
    count = int(round((hi - lo) / step)) + 1
    return [round(lo + i * step, 12) for i in range(count)]


def _int_list(text):
    return [int(part) for part in text.split(",")]


def _complex_list(text):
    return [complex(part.replace(" ", "")) for part in text.split(",")]


def default_tolerance(dimension, config):
    """The ``tolerances`` entry for a torus *dimension* (d <= 1 uses d1)."""
    key = "d{0}".format(min(max(dimension, 1), 4))
    return float(config["tolerances"][key])


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML config (./mahler.yml)")
    common.add_argument("--format", choices=report.FORMATS, default="json")
    common.add_argument("--out", help="report file (stdout)")
    common.add_argument("--tol", type=float, help="override tolerance")
    common.add_argument("--seed", type=int)
    common.add_argument("--method", choices=sorted(METHODS), default="quad")
    return common


def _build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="mahler-verify",
        description="Verify Mahler measure closed forms numerically.")
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    verify = commands.add_parser("verify", help="run verifications")
    targets = verify.add_subparsers(dest="target")
    targets.required = True

    family = targets.add_parser("family", parents=[common])
    family.add_argument("--kind", required=True,
                        choices=sorted(set(KINDS) | set(_KIND_ALIASES)))
    family.add_argument("--n", type=int, default=0)
    grid = family.add_mutually_exclusive_group()
    grid.add_argument("--a", type=float, default=1.0)
    grid.add_argument("--a-grid", type=parse_grid, dest="a_grid")
    family.add_argument("--b", type=float)
    family.add_argument("--c", type=float)
    family.add_argument("--alpha", type=complex)

    suites = targets.add_parser("identities", parents=[common])
    suites.add_argument("--suite", action="append",
                        help="suite name (repeatable; all by default)")

    targets.add_parser("table-a1", parents=[common])

    evaluate = commands.add_parser("eval", help="evaluate one function")
    functions = evaluate.add_subparsers(dest="function")
    functions.required = True

    li = functions.add_parser("li", parents=[common])
    li.add_argument("--indices", type=_int_list, required=True)
    li.add_argument("--args", type=_complex_list, required=True)
    li.add_argument("--branch", choices=sorted(BRANCHES),
                    default="default")

    word = functions.add_parser("hyperlog", parents=[common])
    word.add_argument("--word", type=_complex_list, required=True)
    word.add_argument("--endpoint", type=complex, default=1.0)
    word.add_argument("--branch", choices=sorted(BRANCHES),
                      default="default")

    sl = functions.add_parser("script-l", parents=[common])
    sl.add_argument("--variant", choices=sorted(_SCRIPT_L), default="r")
    sl.add_argument("--a", type=float, required=True)
    sl.add_argument("--r", type=int, required=True)
    sl.add_argument("--s", type=int)
    sl.add_argument("--x", type=complex, default=1.0)
    sl.add_argument("--y", type=complex, default=1.0)
    sl.add_argument("--branch", choices=sorted(BRANCHES),
                    default="default")

    ls = functions.add_parser("l-series", parents=[common])
    ls.add_argument("--chars", type=lambda t: t.split(","), required=True)
    ls.add_argument("--exps", type=_int_list, required=True)

    rereport = commands.add_parser("report", parents=[common],
                                   help="re-emit a JSON report")
    rereport.add_argument("input")

    return parser


def parse_args(argv=None):
    """Parse *argv*; usage errors raise ``SystemExit(2)``."""
    return _build_parser().parse_args(argv)


class _NoStats(object):
    def incr(self, name):
        pass

    def timer(self, name):
        return contextlib.nullcontext()


class Verifier(object):
    """
    Runs one parsed ``mahler-verify`` invocation against a loaded config.
    :meth:`run` returns the exit code.
    """

    tool_name = "cli_verify"
    parse_args = staticmethod(parse_args)

    def __init__(self, config, tool_name=tool_name):
        self.config = config
        self.tool_name = tool_name

        section = config.get("statsd", {})
        if section.get("enabled"):
            self.stats = statsd.StatsClient(section.get("host", "localhost"),
                                            section.get("port", 8125),
                                            prefix=section.get("prefix",
                                                               "mahler"))
        else:
            self.stats = _NoStats()

    def run(self, args):
        hyperlog.configure(self.config)

        try:
            if args.command == "report":
                return self._report(args)
            if args.command == "eval":
                return self._eval(args)
            suites = self._plan(args)
        except NumericalFailure:
            log_failure(logger, args.command)
            return 3
        except (ValueError, EnvironmentError) as e:
            log_failure(logger, "usage")
            sys.stderr.write("mahler-verify: {0}\n".format(e))
            return 2

        records = []
        try:
            for suite, jobs in suites:
                with self.stats.timer("verify." + suite):
                    records.extend(self._execute(jobs))
        except (NumericalFailure, ValueError):
            log_failure(logger, "verify " + args.target)
            return 3

        return self._emit(records, args)

    def _emit(self, records, args):
        for record in records:
            self.stats.incr("verify.pass" if record.passed else "verify.fail")
        try:
            report.emit_report(records, args.format, args.out)
        except (report.UnwritableSink, report.InvalidRecord):
            log_failure(logger, "report")
            return 3
        return report.exit_code(records)

    def _execute(self, jobs):
        workers = startup.thread_count(self.config)
        with ThreadPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(self._timed, jobs))

    def _timed(self, job):
        case_id, params, tol, digest, lhs_fn, rhs_fn = job
        start = time.perf_counter()
        lhs = lhs_fn()
        rhs = rhs_fn()
        runtime_ms = (time.perf_counter() - start) * 1000
        record = report.make_record(case_id, params, lhs, rhs, tol,
                                    runtime_ms, digest)

        message = "case {0} {1}: |lhs - rhs| = {2:.3e} (tol {3:.1e})".format(
            case_id, json.dumps(params, sort_keys=True), record.abs_err, tol)
        if record.passed:
            logger.info(message + " pass")
        else:
            logger.warning(message + " FAIL")
        return record

    # planning: each suite is a name and a list of jobs

    def _plan(self, args):
        if args.target == "family":
            return [("family", self._family_jobs(args))]
        if args.target == "table-a1":
            return [("table_a1", self._table_jobs(args))]
        return self._identity_suites(args)

    def _quadrature(self, family, args):
        # the record tolerance decides pass; target_tol only bounds the
        # integrator's own error estimate
        qconfig = QuadratureConfig.from_config(
            self.config, method=METHODS[args.method], seed=args.seed)
        if qconfig.method == "monte_carlo":
            compute = lambda: mahler_monte_carlo(
                family, qconfig.total_points, qconfig.seed)
        else:
            compute = lambda: mahler_quadrature(family, qconfig)
        return qconfig, compute

    def _family_job(self, family, params, args, case_id=None, rhs_fn=None):
        tol = args.tol
        if tol is None:
            tol = default_tolerance(family.dimension, self.config)
        qconfig, lhs_fn = self._quadrature(family, args)
        case_id = case_id or family.label
        if rhs_fn is None:
            rhs_fn = lambda: closed_form(family)

        settings = dict(qconfig._asdict(), case_id=case_id, tol=tol,
                        params=params)
        return (case_id, params, tol, report.config_digest(settings),
                lhs_fn, rhs_fn)

    def _family_jobs(self, args):
        kind = _KIND_ALIASES.get(args.kind, args.kind)
        grid = args.a_grid or [args.a]
        jobs = []
        for a in grid:
            family = FamilySpec(kind, args.n, a, args.b, args.c, args.alpha)
            params = {"n": family.n, "a": family.a}
            if kind == "maillot_general":
                params.update(b=family.b, c=family.c)
            if kind == "maillot_special":
                params["alpha"] = str(family.alpha)
            jobs.append(self._family_job(family, params, args))
        return jobs

    def _table_jobs(self, args):
        jobs = []
        for label, expected in identities.table_values():
            if label == "maillot_variant":
                family = FamilySpec(label)
            else:
                kind, n = label.rsplit("_n", 1)
                family = FamilySpec(kind, int(n))
            jobs.append(self._family_job(
                family, {"a": 1.0}, args, "table_a1_" + label,
                lambda value=expected: value))
        return jobs

    def _identity_suites(self, args):
        manager = LoadableManager(self.config)
        names = args.suite or manager.names()
        suites = []
        for name in names:
            name = manager.resolve(name)
            jobs = []
            for case in manager.run(name):
                tol = case.tol if args.tol is None else args.tol
                for param in case.params:
                    params = {} if param is None else {"param": param}
                    settings = {"case_id": case.id, "suite": name,
                                "tol": tol, "params": params}
                    jobs.append((case.id, params, tol,
                                 report.config_digest(settings),
                                 lambda f=case.lhs_fn, p=param: f(p),
                                 lambda f=case.rhs_fn, p=param: f(p)))
            suites.append((name.rsplit(".", 1)[1], jobs))
        return suites

    # eval and report

    def _eval(self, args):
        name, value = self._evaluate(args)
        if not isinstance(value, ValueWithError):
            value = ValueWithError(value)
        text = json.dumps({"expression": name,
                           "value": {"real": value.real, "imag": value.imag},
                           "abs_error": value.abs_error},
                          indent=2, sort_keys=True) + "\n"
        try:
            report.write_text(text, args.out)
        except report.UnwritableSink:
            log_failure(logger, "eval")
            return 3
        return 0

    def _evaluate(self, args):
        branch = BRANCHES[getattr(args, "branch", "default")]
        if args.function == "li":
            name = "Li_{0}({1})".format(args.indices, args.args)
            if branch is hyperlog.DEFAULT:
                try:
                    return name, polylog.li_multi(args.indices, args.args)
                except polylog.DomainError:
                    pass
            return name, hyperlog.li_continued(args.indices, args.args,
                                               branch)
        if args.function == "hyperlog":
            name = "I(0; {0}; {1})".format(args.word, args.endpoint)
            return name, hyperlog.eval_hyperlog(args.word, args.endpoint,
                                                branch)
        if args.function == "script-l":
            func = _SCRIPT_L[args.variant]
            if args.variant in ("r", "r1"):
                values = (args.a, args.r, args.x)
            else:
                if args.s is None:
                    raise ValueError("--s is needed for " + args.variant)
                values = (args.a, args.r, args.s, args.x, args.y)
            name = "L_{0}{1}".format(args.variant, values)
            return name, func(*values, branch=branch)

        spec = dirichlet.MultiLSpec(args.chars, args.exps)
        name = "L({0}; {1})".format(",".join(args.chars), args.exps)
        if spec.depth == 1:
            return name, dirichlet.l_single(spec.characters[0],
                                            spec.exponents[0])
        return name, dirichlet.l_multi(spec)

    def _report(self, args):
        try:
            records = report.load_report(args.input)
        except report.InvalidRecord:
            log_failure(logger, "report " + args.input)
            return 2
        return self._emit(records, args)


def run_verify(args, config=None):
    """
    Run parsed *args* with *config* (loaded from ``args.config`` when
    None) and return the exit code.
    """
    if config is None:
        config = startup.load_config(args.config)
    return Verifier(config).run(args)


def main(argv=None):
    return startup.main(Verifier, argv)
