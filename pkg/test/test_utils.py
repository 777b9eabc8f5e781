# file: test_utils.py
# vim:fileencoding=utf-8:ft=python
#
# Copyright © 2025 The brauertools authors. All rights reserved.
# SPDX-License-Identifier: BSD-2-Clause
# Created: 2025-09-14T10:20:11+0200
# Last modified: 2025-10-30T21:15:37+0100
"""Tests for the utils module.

Run this test only with py.test -v test_utils.py
Run all tests with: py.test -v test_*
"""

import argparse

import pytest

import brauertools.utils as utils


def test_outnames():
    assert utils.outname("foo", "bcf") == "foo.bcf"
    assert utils.outname("../foo", "bcf") == "foo.bcf"
    assert utils.outname("/../foo", ".bcf", addenum="-U1") == "foo-U1.bcf"
    assert utils.outname(".foo", "bcf") == "foo.bcf"
    assert utils.outname("foo ", "bcf") == "foo.bcf"
    assert utils.outname("/home/bla/foo bar.bcf", "bcf") == "foo_bar.bcf"


def test_cycle_from():
    assert utils.cycle_from(("a", "b", "c"), "b") == ("b", "c", "a")
    assert utils.cycle_from(["a"], "a") == ("a",)
    with pytest.raises(ValueError):
        utils.cycle_from(("a", "b"), "c")


def test_step_action():
    p = argparse.ArgumentParser()
    p.add_argument("-l", "--left", action=utils.StepAction, dest="steps")
    p.add_argument("-r", "--right", action=utils.StepAction, dest="steps")
    args = p.parse_args(["-l", "U1", "--right", "U2", "-l", "U1"])
    assert args.steps == [("U1", "left"), ("U2", "right"), ("U1", "left")]
    assert p.parse_args([]).steps is None
    with pytest.raises(ValueError):
        p.add_argument("-x", action=utils.StepAction, nargs=2)
