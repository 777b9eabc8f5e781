# file: report.py
# vim:fileencoding=utf-8:fdm=marker:ft=python
#
# Copyright © 2025 The brauertools authors. All rights reserved.
# SPDX-License-Identifier: BSD-2-Clause
# Created: 2025-09-28T20:15:02+0200
# Last modified: 2025-11-01T10:48:59+0100
"""Verification reports and their text and JSON forms."""

from dataclasses import dataclass, field
import json


@dataclass
class Check:
    identity: str
    lhs: object
    rhs: object
    passed: bool
    witness: str = ""


@dataclass
class VerificationReport:
    """A list of checks; passes when every check passes."""

    title: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    verdict: str = ""

    def add(self, identity, lhs, rhs, passed=None, witness=""):
        if passed is None:
            passed = lhs == rhs
        self.checks.append(Check(identity, lhs, rhs, bool(passed), witness))
        return passed

    def extend(self, other):
        self.checks += other.checks
        self.notes += other.notes

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]


def text(report):
    """
    Render a report as a table with the columns identity, lhs, rhs and pass.

    Arguments:
        report: VerificationReport.

    Returns:
        A string.
    """
    rows = [("identity", "lhs", "rhs", "pass")]
    for c in report.checks:
        ident = c.identity + (f" [{c.witness}]" if c.witness else "")
        rows.append((ident, str(c.lhs), str(c.rhs), "yes" if c.passed else "NO"))
    widths = [max(len(r[k]) for r in rows) for k in range(4)]
    lines = [f"# {report.title}"]
    for r in rows:
        lines.append(" | ".join(s.ljust(w) for s, w in zip(r, widths)).rstrip())
    for n in report.notes:
        lines.append(f"note: {n}")
    verdict = report.verdict or ("pass" if report.passed else "FAIL")
    lines.append(f"verdict: {verdict}")
    return "\n".join(lines)


def as_dict(report):
    return {
        "title": report.title,
        "passed": report.passed,
        "verdict": report.verdict or ("pass" if report.passed else "fail"),
        "checks": [
            {
                "identity": c.identity,
                "lhs": c.lhs if isinstance(c.lhs, (int, str, list)) else str(c.lhs),
                "rhs": c.rhs if isinstance(c.rhs, (int, str, list)) else str(c.rhs),
                "pass": c.passed,
                "witness": c.witness,
            }
            for c in report.checks
        ],
        "notes": list(report.notes),
    }


def as_json(report):
    return json.dumps(as_dict(report), indent=2)
