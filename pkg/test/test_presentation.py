# file: test_presentation.py
# vim:fileencoding=utf-8:ft=python
#
# Copyright © 2025 The brauertools authors. All rights reserved.
# SPDX-License-Identifier: BSD-2-Clause
# Created: 2025-09-16T21:04:38+0200
# Last modified: 2025-11-01T15:20:10+0100
"""
Tests for the presentation module.

Run this test only with py.test -v test_presentation.py
Run all tests with: py.test -v test_*
"""

import os

from hypothesis import given, settings
from hypothesis.strategies import integers
import pytest

import brauertools.configuration as bc
import brauertools.oracle as orc
import brauertools.presentation as pr

DATA = os.path.join(os.path.dirname(__file__), "data")


def load(name):
    return bc.readbcf(os.path.join(DATA, name))


def test_cartan_spot_values():
    cfg = load("ex2_7.bcf")
    assert pr.hom_dim(cfg, "U1", "U1") == 9
    assert pr.hom_dim(cfg, "U1", "U4") == 2
    assert pr.hom_dim(cfg, "U4", "U1") == 2
    assert pr.hom_dim(cfg, "U2", "U6") == 0
    assert pr.projective_dimension(cfg, "U1") == 21


def test_cartan_small_examples():
    assert pr.cartan_matrix(load("kx2.bcf")) == [[2]]
    assert pr.total_dimension(load("kx2.bcf")) == 2
    assert pr.cartan_matrix(load("two_3gons.bcf")) == [[2, 3], [3, 2]]
    assert pr.total_dimension(load("ex2_12_d4.bcf")) == 14


def test_cartan_matches_path_count():
    for name in ("ex2_7.bcf", "ex2_7_flipped.bcf", "ex2_12_d4.bcf", "two_3gons.bcf", "kx2.bcf"):
        cfg = load(name)
        assert pr.cartan_matrix(cfg) == orc.brute_force_cartan(cfg)


@settings(max_examples=500, deadline=None)
@given(integers(2, 24), integers(0, 2**32), integers(1, 3))
def test_cartan_matches_path_count_random(n, seed, mult):
    cfg = bc.random_configuration(n, 2, 5, mult, seed)
    assert pr.cartan_matrix(cfg) == orc.brute_force_cartan(cfg)


def test_special_path():
    cfg = load("ex2_7.bcf")
    p = pr.special_path(cfg, "f", 3)
    assert pr.arrows_of(cfg, p) == ("f", "g", "a7")
    assert p.source == p.target == "U6"
    p = pr.special_path(cfg, "a3", 2)
    assert pr.arrows_of(cfg, p) == ("a3", "a4")
    assert p.target == "U1"
    with pytest.raises(ValueError):
        pr.special_path(cfg, "f", 4)


def test_relations():
    cfg = load("ex2_7.bcf")
    q = pr.quiver(cfg)
    assert len(q.nodes) == 7
    assert len(q.arrows) == 19
    bc1 = {(pr.path_text(cfg, a), pr.path_text(cfg, b)) for a, b in q.bc1}
    assert ("a1·c·e~·d~·e·d", "a2·b·c~") in bc1
    assert ("f·g·a7", "f~") in bc1
    assert ("a6·a6", "a7·f·g") in bc1
    assert ("a6", "a6") not in {(a, b) for a, b in q.bc2}
    assert ("a3", "a5") in q.bc2
    text = pr.relations_text(cfg)
    assert "a1·c·e~·d~·e·d = a2·b·c~" in text


def test_truncated_edge_relations():
    cfg = load("kx2.bcf")
    q = pr.quiver(cfg)
    assert sorted(q.bc2) == [("h", "h"), ("h", "h~"), ("h~", "h"), ("h~", "h~")]


def test_length_two_dichotomy():
    cfg = load("ex2_7.bcf")
    q = pr.quiver(cfg)
    zero = set(q.bc2)
    for a in cfg.angles:
        target = bc.polygon_of(cfg, bc.sigma(cfg, a))
        for b in cfg.polygon_by_id[target].angles:
            assert pr.is_subpath_pair(cfg, a, b) != ((a, b) in zero)


def test_multiply():
    cfg = load("ex2_7.bcf")
    a1, c, ct = pr.arrow(cfg, "a1"), pr.arrow(cfg, "c"), pr.arrow(cfg, "c~")
    assert pr.multiply(cfg, a1, c) == pr.path(cfg, "a1", 2)
    assert pr.multiply(cfg, a1, ct) is None
    assert pr.multiply(cfg, pr.identity("U1"), a1) == a1
    assert pr.multiply(cfg, a1, pr.identity("U3")) == a1
    with pytest.raises(ValueError):
        pr.multiply(cfg, c, a1)
    soc = pr.socle(cfg, "U1")
    assert pr.multiply(cfg, soc, a1) is None
    # w4 has multiplicity 2: a6·a6 is the socle of U1.
    a6 = pr.arrow(cfg, "a6")
    assert pr.multiply(cfg, a6, a6) == soc


def test_full_cycles_are_one_socle():
    cfg = load("ex2_7.bcf")
    for p in cfg.polygons:
        for h in p.angles:
            full = pr.full_cycle(cfg, h)
            assert pr.normalize(cfg, full) == pr.socle(cfg, p.polygon_id)


def check_associative(cfg):
    """Compare (p·q)·r with p·(q·r) for all composable basis triples."""
    paths = [x for U in cfg.polygon_by_id for W in cfg.polygon_by_id for x in pr.hom_basis(cfg, U, W)]
    starting = {}
    for x in paths:
        starting.setdefault(x.source, []).append(x)

    def times(p, q):
        if p is None or q is None:
            return None
        return pr.multiply(cfg, p, q)

    count = 0
    for p in paths:
        for q in starting.get(p.target, []):
            for r in starting.get(q.target, []):
                assert times(times(p, q), r) == times(p, times(q, r))
                count += 1
    return count


def test_multiplication_is_associative():
    cfg = load("ex2_7.bcf")
    assert check_associative(cfg) > 0
    for name in ("ex2_7_flipped.bcf", "ex2_12_d4.bcf", "two_3gons.bcf", "kx2.bcf"):
        check_associative(load(name))


@settings(max_examples=60, deadline=None)
@given(integers(2, 20), integers(0, 2**32), integers(1, 2))
def test_multiplication_is_associative_random(n, seed, mult):
    check_associative(bc.random_configuration(n, 2, 4, mult, seed))


def test_hom_basis():
    cfg = load("ex2_7.bcf")
    for U in cfg.polygon_by_id:
        for W in cfg.polygon_by_id:
            basis = pr.hom_basis(cfg, U, W)
            assert len(basis) == pr.hom_dim(cfg, U, W)
            assert len(set(basis)) == len(basis)
            for p in basis:
                assert p.source == W and p.target == U
    basis = pr.hom_basis(cfg, "U1", "U1")
    assert basis[-1] == pr.identity("U1")
    assert pr.socle(cfg, "U1") in basis


def test_quiver_dot():
    dot = pr.quiver_dot(load("kx2.bcf"))
    assert dot.startswith("digraph quiver {")
    assert '"E" -> "E" [label="h~"];' in dot


def test_hom_dim_unknown_polygon():
    cfg = load("ex2_7.bcf")
    for U, W in (("U9", "U1"), ("U1", "U9"), ("U9", "U9")):
        with pytest.raises(bc.ConfigurationError) as e:
            pr.hom_dim(cfg, U, W)
        assert "'U9'" in str(e.value)
