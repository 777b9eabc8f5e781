#! /usr/bin/env python
# file: brauer.py
# vim:fileencoding=utf-8:fdm=marker:ft=python
#
# Copyright © 2025 The brauertools authors. All rights reserved.
# SPDX-License-Identifier: BSD-2-Clause
# Created: 2025-10-12T11:20:33+0200
# Last modified: 2025-10-19T20:04:51+0200
"""
Work with Brauer configuration files (.bcf).

Run ``brauer.py -h`` for the list of subcommands.
"""

import sys
from brauertools.cli import main

if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
