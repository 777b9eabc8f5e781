# file: test_flip.py
# vim:fileencoding=utf-8:ft=python
#
# Copyright © 2025 The brauertools authors. All rights reserved.
# SPDX-License-Identifier: BSD-2-Clause
# Created: 2025-09-21T10:12:40+0200
# Last modified: 2025-11-01T18:30:02+0100
"""
Tests for the flip module.

Run this test only with py.test -v test_flip.py
Run all tests with: py.test -v test_*
"""

import os

from hypothesis import given, settings
from hypothesis.strategies import integers
import pytest

import brauertools.configuration as bc
import brauertools.flip as fl
import brauertools.presentation as pr

DATA = os.path.join(os.path.dirname(__file__), "data")


def load(name):
    return bc.readbcf(os.path.join(DATA, name))


def test_condition_E_holds():
    cfg = load("ex2_7.bcf")
    assert fl.satisfies_condition_E(cfg, "U1")
    assert fl.satisfies_condition_E(cfg, "U1", fl.RIGHT)
    assert fl.satisfies_condition_E(load("kx2.bcf"), "E")
    assert fl.satisfies_condition_E(load("ex2_12_d4.bcf"), "V1")


def test_condition_E_fails():
    d4 = load("ex2_12_d4.bcf")
    for V in ("V2", "V3", "V4"):
        res = fl.satisfies_condition_E(d4, V)
        assert not res
        assert res.offending == "V1"
    res = fl.satisfies_condition_E(d4, "V2")
    assert res.angle == "y1"
    two = load("two_3gons.bcf")
    for V in ("U", "V"):
        for direction in (fl.LEFT, fl.RIGHT):
            assert not fl.satisfies_condition_E(two, V, direction)


def test_bad_direction():
    with pytest.raises(ValueError):
        fl.satisfies_condition_E(load("kx2.bcf"), "E", "up")


def test_unknown_polygon():
    with pytest.raises(bc.ConfigurationError):
        fl.satisfies_condition_E(load("kx2.bcf"), "X")


def test_angle_classes_without_condition():
    assert fl.angle_classes(load("two_3gons.bcf"), "U") == ((), (), ("u1", "u2", "u3"))


def test_decomposition():
    dec = fl.angle_decomposition(load("ex2_7.bcf"), "U1")
    assert dec.h1 == ("a6",)
    assert dec.h2 == ("a3", "a4")
    assert dec.h3 == ("a1", "a2", "a5", "a7")
    assert set(dec.h4) == {"c~", "d", "e~", "g~"}
    assert set(dec.h5) == {"b", "b~", "c", "d~", "e", "f", "f~", "g"}
    assert dec.x_map == {"c~": "a3", "d": "a2", "e~": "a1", "g~": "a7"}
    assert dec.p_map["a4"] == "b~"
    assert dec.p_steps["a4"] == 2
    assert dec.p_map["a5"] == "b~"
    assert dec.p_steps["a5"] == 3
    assert dec.p_map["a1"] == "d"
    assert dec.n_map["b~"] == "b~"
    assert dec.n_steps["b~"] == 4
    text = fl.decomposition_text(dec)
    assert "H1: [a6]" in text
    assert "H2: [a3, a4]" in text


def test_decomposition_needs_condition_E():
    with pytest.raises(fl.ConditionEError) as e:
        fl.angle_decomposition(load("two_3gons.bcf"), "U")
    assert e.value.polygon == "U"
    assert e.value.offending == "V"


def test_left_flip_golden():
    cfg = load("ex2_7.bcf")
    res = fl.flip(cfg, "U1")
    assert res.configuration == load("ex2_7_flipped.bcf")
    assert res.gamma == {v.vertex_id: v.vertex_id for v in cfg.vertices}


def test_right_flip_undoes_left_flip():
    cfg = load("ex2_7.bcf")
    flipped = fl.flip(cfg, "U1").configuration
    back = fl.flip(flipped, "U1", fl.RIGHT).configuration
    assert back == cfg
    assert bc.are_isomorphic(back, cfg) is not None


def test_flip_keeps_invariants():
    cfg = load("ex2_7.bcf")
    flipped = fl.flip(cfg, "U1").configuration
    assert bc.validate(flipped).ok
    assert flipped.polygons == cfg.polygons
    assert sorted(flipped.angles) == sorted(cfg.angles)
    for v in cfg.vertices:
        assert bc.multiplicity(flipped, v.vertex_id) == v.multiplicity
    assert bc.valency(flipped, "w1") == 7
    assert bc.valency(flipped, "w3") == 1


def test_flip_changes_total_dimension():
    cfg = load("ex2_7.bcf")
    flipped = fl.flip(cfg, "U1").configuration
    assert pr.total_dimension(cfg) == 69
    assert pr.total_dimension(flipped) == 81
    assert pr.total_dimension(load("ex2_7_flipped.bcf")) == 81


def test_d4_flip():
    cfg = load("ex2_12_d4.bcf")
    flipped = fl.flip(cfg, "V1").configuration
    assert flipped.vertex_by_id["z1"].cycle == ("x1", "y1~")
    assert flipped.vertex_by_id["u1"].cycle == ("y1",)
    assert bc.are_isomorphic(flipped, cfg) is not None
    assert fl.period(cfg, [("V1", fl.LEFT)]) == 1
    back = fl.flip(flipped, "V1", fl.RIGHT).configuration
    assert bc.validate(back).ok
    assert bc.are_isomorphic(back, cfg) is not None


def test_d4_flip_fails_at_edge():
    with pytest.raises(fl.ConditionEError) as e:
        fl.flip(load("ex2_12_d4.bcf"), "V2")
    assert e.value.angle == "y1"
    assert e.value.offending == "V1"
    assert e.value.index is None


def test_flip_of_single_edge():
    cfg = load("kx2.bcf")
    assert fl.flip(cfg, "E").configuration == cfg
    assert fl.flip(cfg, "E", fl.RIGHT).configuration == cfg


def test_flip_sequence():
    cfg = load("ex2_12_d4.bcf")
    assert fl.flip_sequence(cfg, []) == cfg
    with pytest.raises(fl.ConditionEError) as e:
        fl.flip_sequence(cfg, [("V1", fl.LEFT), ("V2", fl.LEFT)])
    assert e.value.index == 1
    assert "step 1" in str(e.value)
    ex = load("ex2_7.bcf")
    assert fl.flip_sequence(ex, [("U1", fl.LEFT), ("U1", fl.RIGHT)]) == ex


@settings(max_examples=60, deadline=None)
@given(integers(1, 12), integers(0, 2**32), integers(1, 3))
def test_brauer_graphs_flip_everywhere(edges, seed, mult):
    cfg = bc.random_configuration(2 * edges, 2, 2, mult, seed)
    for p in cfg.polygons:
        assert fl.satisfies_condition_E(cfg, p.polygon_id)
        assert fl.satisfies_condition_E(cfg, p.polygon_id, fl.RIGHT)
        dec = fl.angle_decomposition(cfg, p.polygon_id)
        rows = dec.h1 + dec.h2 + dec.h3 + dec.h4 + dec.h5
        assert sorted(rows) == sorted(cfg.angles)
        flipped = fl.flip(cfg, p.polygon_id).configuration
        assert bc.validate(flipped).ok
        assert bc.is_brauer_graph(flipped)
        assert len(flipped.vertices) == len(cfg.vertices)
