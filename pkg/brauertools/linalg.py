# file: linalg.py
# vim:fileencoding=utf-8:fdm=marker:ft=python
#
# Copyright © 2025 The brauertools authors. All rights reserved.
# SPDX-License-Identifier: BSD-2-Clause
# Created: 2025-09-27T14:20:48+0200
# Last modified: 2025-10-25T11:03:36+0200
"""Exact ranks of sparse vector families over QQ or a prime field."""

from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix


def field(prime=None):
    """Return QQ, or the prime field GF(prime)."""
    if prime is None:
        return QQ
    return GF(prime)


def rank(vectors, ncols, domain=QQ):
    """
    Return the rank of a family of sparse vectors.

    Arguments:
        vectors: Sequence of dicts index → nonzero domain element.
        ncols: Dimension of the ambient space.
        domain: Field the entries live in.

    Returns:
        The dimension of the span.
    """
    nonzero = [v for v in vectors if v]
    rows = {k: dict(v) for k, v in enumerate(nonzero)}
    if not rows or ncols == 0:
        return 0
    return DomainMatrix(rows, (len(rows), ncols), domain).rank()


def in_span(vectors, vector, ncols, domain=QQ):
    """Check whether vector lies in the span of vectors."""
    if not vector:
        return True
    return rank(list(vectors) + [vector], ncols, domain) == rank(vectors, ncols, domain)
