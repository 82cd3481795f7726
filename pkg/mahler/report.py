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
Verification records and the reports they are written to.

A :class:`VerificationRecord` is one compared case: the two sides, their
distance and the tolerance it was held to. Records serialize to plain
dicts with exactly the fields of ``schemas/verification_record.json``;
note the ``pass`` field is :attr:`VerificationRecord.passed` in Python.

Reports are JSON (an array of records), CSV (same columns, ``params`` as
compact JSON) or a markdown table, always ordered by ``case_id``.
"""

import io
import os
import sys
import csv
import json
import hashlib
import logging
from collections import namedtuple

import jsonschema

from .numerics_core import ValueWithError

logger = logging.getLogger("mahler.report")

__all__ = ["VerificationRecord", "FIELDS", "FORMATS", "make_record",
           "config_digest", "read_json_schema", "validate_records",
           "emit_report", "write_text", "load_report", "exit_code",
           "InvalidRecord",
           "UnwritableSink"]

FIELDS = ("case_id", "params", "lhs", "rhs", "abs_err", "tol", "pass",
          "runtime_ms", "config_digest")
FORMATS = ("json", "csv", "md")


class VerificationRecord(namedtuple("VerificationRecord",
        ["case_id", "params", "lhs", "rhs", "abs_err", "tol", "passed",
         "runtime_ms", "config_digest"])):
    """One compared case; ``passed`` holds exactly when abs_err <= tol."""

    __slots__ = ()

    def to_dict(self):
        return {"case_id": self.case_id, "params": dict(self.params),
                "lhs": self.lhs, "rhs": self.rhs, "abs_err": self.abs_err,
                "tol": self.tol, "pass": self.passed,
                "runtime_ms": self.runtime_ms,
                "config_digest": self.config_digest}

    @classmethod
    def from_dict(cls, data):
        return cls(data["case_id"], data["params"], data["lhs"], data["rhs"],
                   data["abs_err"], data["tol"], data["pass"],
                   data["runtime_ms"], data["config_digest"])

    @property
    def sort_key(self):
        return (self.case_id, _canonical(self.params))


def _canonical(data):
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def config_digest(config):
    """
    sha256 hex digest of the canonical JSON of a case configuration.
    A ``runtime_ms`` key, if present, is left out.
    """
    config = dict((k, v) for k, v in config.items() if k != "runtime_ms")
    return hashlib.sha256(_canonical(config).encode("utf-8")).hexdigest()


def make_record(case_id, params, lhs, rhs, tol, runtime_ms, digest):
    """
    Build a record from two computed sides (numbers or
    :class:`~mahler.numerics_core.ValueWithError`). The error is the
    modulus of the complex difference; the sides are stored as their real
    parts.
    """
    lhs = _value(lhs)
    rhs = _value(rhs)
    abs_err = abs(lhs - rhs)
    tol = float(tol)
    return VerificationRecord(str(case_id), dict(params), lhs.real,
                              rhs.real, abs_err, tol, abs_err <= tol,
                              int(round(runtime_ms)), digest)


def _value(x):
    if isinstance(x, ValueWithError):
        return x.value
    return complex(x)


def read_json_schema(schemaname):
    path = os.path.join(os.path.dirname(__file__), "schemas", schemaname)
    with open(path) as f:
        schema = json.load(f)
    return schema


_schema = None


def validate_records(records):
    """
    Validate each serialized record against the record schema.

    :raises InvalidRecord: listing every schema violation found
    """
    global _schema
    if _schema is None:
        _schema = read_json_schema("verification_record.json")

    validator = jsonschema.Draft7Validator(_schema)
    errors = []
    for index, record in enumerate(records):
        if isinstance(record, VerificationRecord):
            record = record.to_dict()
        found = ["record {0}: {1}".format(index, error.message)
                 for error in validator.iter_errors(record)]
        if not found and record["pass"] != (record["abs_err"] <=
                                            record["tol"]):
            found.append("record {0}: pass disagrees with abs_err <= tol"
                         .format(index))
        errors.extend(found)
    if errors:
        raise InvalidRecord("Validation errors: {0}".format(", ".join(errors)))


def _sorted(records):
    return sorted(records, key=lambda r: r.sort_key)


def _json_text(records):
    return json.dumps([r.to_dict() for r in records], indent=2,
                      sort_keys=True, allow_nan=False) + "\n"


def _csv_text(records):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FIELDS)
    for record in records:
        row = record.to_dict()
        row["params"] = _canonical(row["params"])
        row["pass"] = "true" if row["pass"] else "false"
        writer.writerow([row[field] for field in FIELDS])
    return buf.getvalue()


def _md_text(records):
    lines = ["| " + " | ".join(FIELDS) + " |",
             "|" + "---|" * len(FIELDS)]
    for record in records:
        row = record.to_dict()
        cells = [row["case_id"], _canonical(row["params"]),
                 "{0:.15g}".format(row["lhs"]), "{0:.15g}".format(row["rhs"]),
                 "{0:.3e}".format(row["abs_err"]),
                 "{0:.3e}".format(row["tol"]),
                 "PASS" if row["pass"] else "FAIL",
                 str(row["runtime_ms"]), row["config_digest"][:12]]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


_writers = {"json": _json_text, "csv": _csv_text, "md": _md_text}


def emit_report(records, format="json", out=None):
    """
    Serialize *records*, ordered by case_id, and write them to *out*: a
    path, a writable file object, or stdout when None. JSON output is
    schema-validated first. Returns the text written.

    :raises ValueError: for an unknown format
    :raises InvalidRecord: if a record does not match the schema
    :raises UnwritableSink: if *out* cannot be written
    """
    if format not in _writers:
        raise ValueError("unknown report format {0!r}".format(format))

    records = _sorted(records)
    if format == "json":
        validate_records(records)
    text = _writers[format](records)

    write_text(text, out)
    logger.debug("wrote {0} records as {1}".format(len(records), format))
    return text


def write_text(text, out=None):
    """
    Write *text* to a path, a writable file object, or stdout when *out*
    is None.

    :raises UnwritableSink: if *out* cannot be written
    """
    try:
        if out is None:
            sys.stdout.write(text)
        elif hasattr(out, "write"):
            out.write(text)
        else:
            with open(out, "w", newline="", encoding="utf-8") as f:
                f.write(text)
    except OSError as e:
        raise UnwritableSink("cannot write to {0}: {1}".format(out, e))


def load_report(source):
    """
    Read a JSON report from a path or file object and validate it.

    :raises InvalidRecord: if the document is not an array of valid records
    """
    if hasattr(source, "read"):
        data = json.load(source)
    else:
        with open(source, encoding="utf-8") as f:
            data = json.load(f)

    if not isinstance(data, list):
        raise InvalidRecord("a report is a JSON array of records")
    validate_records(data)
    return [VerificationRecord.from_dict(item) for item in data]


def exit_code(records):
    """0 if every record passed, else 1."""
    return 0 if all(r.passed for r in records) else 1


class InvalidRecord(ValueError):
    """A record does not match the verification record schema."""
    pass


class UnwritableSink(IOError):
    """The report destination could not be written."""
    pass
