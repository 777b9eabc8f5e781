# file: __init__.py
# vim:fileencoding=utf-8:fdm=marker:ft=python
#
# Copyright © 2025 The brauertools authors. All rights reserved.
# SPDX-License-Identifier: BSD-2-Clause
# Created: 2025-09-14T10:02:11+0200
# Last modified: 2025-11-02T16:40:27+0100
"""Brauer configurations, their algebras, flips and tilting mutation."""

from .version import __version__
