# file: utils.py
# vim:fileencoding=utf-8:fdm=marker:ft=python
#
# Copyright © 2025 The brauertools authors. All rights reserved.
# SPDX-License-Identifier: BSD-2-Clause
# Created: 2025-09-14T10:05:40+0200
# Last modified: 2025-10-30T21:12:03+0100
"""Utilities for brauertools."""

import argparse
import os.path
import re


class StepAction(argparse.Action):
    """Gather flip steps in command line order."""

    def __init__(self, option_strings, dest, nargs=None, **kwargs):
        """Create StepAction object."""
        if nargs is not None:
            raise ValueError("nargs not allowed")
        super(StepAction, self).__init__(option_strings, dest, **kwargs)

    def __call__(self, parser, namespace, values, option_string=None):
        """Implement the -l/--left and -r/--right options."""
        steps = getattr(namespace, "steps", None)
        if not steps:
            steps = []
        direction = "left" if option_string in ("-l", "--left") else "right"
        steps += [(values, direction)]
        setattr(namespace, "steps", steps)


def outname(inname, extension, addenum=""):
    """
    Create the name of the output filename based on the input filename.

    Arguments:
        inname: Name + path of the input file.
        extension: Extension of the output file.
        addenum: String to append to filename.

    Returns:
        Output file name.
    """
    rv = os.path.splitext(os.path.basename(inname))[0]
    rv = re.sub(r"^[\s\.]+|\s+$", "", rv)
    rv = re.sub(r"\s+", "_", rv)
    if not extension.startswith("."):
        extension = "." + extension
    return rv + addenum + extension


def cycle_from(seq, start):
    """
    Rotate a cyclic sequence so that it starts with a given element.

    Arguments:
        seq: Sequence representing a cyclic order.
        start: Element of seq that becomes the first one.

    Returns:
        A tuple with the same cyclic order, starting at start.
    """
    k = seq.index(start)
    return tuple(seq[k:]) + tuple(seq[:k])
