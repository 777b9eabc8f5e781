# file: test_configuration.py
# vim:fileencoding=utf-8:ft=python
#
# Copyright © 2025 The brauertools authors. All rights reserved.
# SPDX-License-Identifier: BSD-2-Clause
# Created: 2025-09-14T15:30:12+0200
# Last modified: 2025-11-01T13:02:55+0100
"""
Tests for the configuration module.

Run this test only with py.test -v test_configuration.py
Run all tests with: py.test -v test_*
"""

import os

from hypothesis import given, settings
from hypothesis.strategies import integers
import pytest

import brauertools.configuration as bc

DATA = os.path.join(os.path.dirname(__file__), "data")


def load(name):
    return bc.readbcf(os.path.join(DATA, name))


def test_read_example():
    cfg = load("ex2_7.bcf")
    assert len(cfg.angles) == 19
    assert len(cfg.vertices) == 7
    assert len(cfg.polygons) == 7
    assert bc.valency(cfg, "w1") == 6
    assert bc.multiplicity(cfg, "w4") == 2
    assert bc.occurrences(cfg, "w3", "U1") == 3
    assert bc.occurrences(cfg, "w1", "U4") == 2
    assert bc.occurrences(cfg, "w6", "U1") == 0
    assert bc.vertex_of(cfg, "d~") == "w1"
    assert bc.polygon_of(cfg, "a5") == "U1"
    assert bc.sigma(cfg, "d") == "a1"
    assert bc.sigma_inverse(cfg, "a1") == "d"
    assert bc.sigma_power(cfg, "a3", 3) == "b~"
    assert bc.sigma_power(cfg, "a3", -1) == "b~"


def test_round_trip():
    cfg = load("ex2_7.bcf")
    assert bc.parse_configuration(bc.text(cfg)) == cfg
    assert bc.parse_configuration(bc.text(cfg, "with a comment")) == cfg


def test_occurrences_add_up():
    cfg = load("ex2_7.bcf")
    for v in cfg.vertices:
        total = sum(bc.occurrences(cfg, v.vertex_id, p.polygon_id) for p in cfg.polygons)
        assert total == len(v.cycle)
    assert sum(len(v.cycle) for v in cfg.vertices) == len(cfg.angles)


def test_angle_in_two_polygons():
    text = """vertex v multiplicity 1 cycle a1 b
vertex w multiplicity 1 cycle c
polygon U a1 b
polygon W a1 c
"""
    with pytest.raises(bc.ConfigurationError) as e:
        bc.parse_configuration(text)
    rules = {(p.rule, p.token) for p in e.value.problems}
    assert ("psi-partition", "a1") in rules


def test_missing_from_cycles():
    text = """vertex v multiplicity 1 cycle a b
polygon U a b c
"""
    with pytest.raises(bc.ConfigurationError) as e:
        bc.parse_configuration(text)
    assert [p.rule for p in e.value.problems] == ["sigma-totality"]
    assert e.value.problems[0].token == "c"


def test_validate_reports_everything():
    cfg = bc.BrauerConfiguration(
        (bc.VertexCycle("v", 0, ("a", "b")), bc.VertexCycle("w", 1, ("a",))),
        (bc.Polygon("U", ("a",)), bc.Polygon("W", ("b", "x"))),
    )
    report = bc.validate(cfg)
    assert not report.ok
    rules = {p.rule for p in report.problems}
    assert rules == {
        "multiplicity",
        "polygon-size",
        "sigma-permutation",
        "sigma-totality",
    }


def test_parse_errors():
    with pytest.raises(bc.ParseError) as e:
        bc.parse_configuration("vertex v multiplicity two cycle a\n")
    assert e.value.line == 1
    assert e.value.column == 23
    assert e.value.token == "two"
    with pytest.raises(bc.ParseError) as e:
        bc.parse_configuration("# comment\nvertex v multiplicity 1 cycle\n")
    assert e.value.line == 2
    with pytest.raises(bc.ParseError) as e:
        bc.parse_configuration("edge U a b\n")
    assert e.value.token == "edge"


def test_classification():
    cfg = load("ex2_7.bcf")
    assert bc.classify_vertex(cfg, "w6") == bc.TRUNCATED
    assert bc.classify_vertex(cfg, "w4") == bc.EXTERNAL
    assert bc.classify_vertex(cfg, "w1") == bc.ORDINARY
    assert bc.classify_polygon(cfg, "U1") == (7, False, True)
    assert bc.classify_polygon(cfg, "U2") == (2, True, False)
    assert bc.classify_polygon(cfg, "U3") == (2, True, False)
    assert bc.classify_polygon(cfg, "U4") == (2, True, True)
    assert bc.is_multiplicity_free(cfg) is False
    assert bc.is_brauer_graph(cfg) is False
    loop = bc.parse_configuration("vertex v multiplicity 1 cycle a b\npolygon L a b\n")
    assert bc.classify_polygon(loop, "L").is_self_folded
    single = bc.parse_configuration(
        "vertex v multiplicity 1 cycle a b\nvertex w multiplicity 1 cycle c\npolygon T a b c\n"
    )
    assert bc.classify_vertex(single, "w") == bc.TRUNCATED
    assert bc.classify_polygon(single, "T") == (3, False, True)
    ext = bc.parse_configuration(
        "vertex v multiplicity 1 cycle a\nvertex w multiplicity 2 cycle b\n"
        "vertex x multiplicity 1 cycle c\npolygon T a b c\n"
    )
    assert bc.classify_vertex(ext, "w") == bc.EXTERNAL
    assert bc.classify_vertex(ext, "v") == bc.TRUNCATED
    assert bc.classify_polygon(ext, "T") == (3, False, False)
    assert "polygon U1: size 7, self-folded polygon" in bc.summary(cfg)
    assert "vertex w4: valency 1, multiplicity 2, external" in bc.summary(cfg)


def test_unknown_ids():
    cfg = load("ex2_7.bcf")
    calls = [
        (bc.valency, ("w9",), "w9"),
        (bc.multiplicity, ("w9",), "w9"),
        (bc.occurrences, ("w9", "U1"), "w9"),
        (bc.occurrences, ("w1", "U9"), "U9"),
        (bc.classify_vertex, ("w9",), "w9"),
        (bc.classify_polygon, ("U9",), "U9"),
        (bc.bar, ("zz",), "zz"),
        (bc.vertex_of, ("zz",), "zz"),
        (bc.polygon_of, ("zz",), "zz"),
    ]
    for func, args, token in calls:
        with pytest.raises(bc.ConfigurationError) as e:
            func(cfg, *args)
        assert f"'{token}'" in str(e.value)


def test_bar():
    cfg = load("ex2_7.bcf")
    assert bc.bar(cfg, "d") == "d~"
    assert bc.bar(cfg, "d~") == "d"
    assert bc.bar(cfg, bc.bar(cfg, "g")) == "g"
    with pytest.raises(bc.ConfigurationError):
        bc.bar(cfg, "a1")


def test_reverse():
    cfg = load("ex2_7.bcf")
    rev = bc.reverse(cfg)
    assert rev.vertex_by_id["w2"].cycle == ("a2", "c~", "b")
    assert bc.reverse(rev) == cfg
    for v in cfg.vertices:
        assert bc.valency(rev, v.vertex_id) == bc.valency(cfg, v.vertex_id)
        assert bc.classify_vertex(rev, v.vertex_id) == bc.classify_vertex(cfg, v.vertex_id)
        for p in cfg.polygons:
            assert bc.occurrences(rev, v.vertex_id, p.polygon_id) == bc.occurrences(
                cfg, v.vertex_id, p.polygon_id
            )


def renamed(cfg, prefix="r"):
    """Rename every angle and rotate every cycle by one step."""
    name = {h: prefix + h for h in cfg.angles}
    vertices = tuple(
        bc.VertexCycle(
            "n" + v.vertex_id,
            v.multiplicity,
            tuple(name[h] for h in v.cycle[1:] + v.cycle[:1]),
        )
        for v in reversed(cfg.vertices)
    )
    polygons = tuple(
        bc.Polygon("n" + p.polygon_id, tuple(name[h] for h in reversed(p.angles)))
        for p in cfg.polygons
    )
    return bc.BrauerConfiguration(vertices, polygons)


def check_bijection(first, second, beta):
    assert sorted(beta) == sorted(first.angles)
    assert sorted(beta.values()) == sorted(second.angles)
    for h in first.angles:
        assert beta[bc.sigma(first, h)] == bc.sigma(second, beta[h])
        assert bc.multiplicity(first, bc.vertex_of(first, h)) == bc.multiplicity(
            second, bc.vertex_of(second, beta[h])
        )
    for p in first.polygons:
        images = {bc.polygon_of(second, beta[h]) for h in p.angles}
        assert len(images) == 1


def test_isomorphic_to_itself():
    cfg = load("ex2_7.bcf")
    beta = bc.are_isomorphic(cfg, cfg)
    assert beta is not None
    check_bijection(cfg, cfg, beta)


def test_isomorphic_to_renamed_copy():
    for name in ("ex2_7.bcf", "ex2_12_d4.bcf", "two_3gons.bcf"):
        cfg = load(name)
        other = renamed(cfg)
        assert bc.validate(other).ok
        beta = bc.are_isomorphic(cfg, other)
        assert beta is not None
        check_bijection(cfg, other, beta)
        check_bijection(other, cfg, bc.are_isomorphic(other, cfg))


def test_not_isomorphic():
    cfg = load("ex2_7.bcf")
    assert bc.are_isomorphic(cfg, load("ex2_7_flipped.bcf")) is None
    assert bc.are_isomorphic(load("two_3gons.bcf"), load("kx2.bcf")) is None
    # Same counts, different multiplicity.
    other = bc.parse_configuration(bc.text(cfg).replace("multiplicity 2", "multiplicity 3"))
    assert bc.are_isomorphic(cfg, other) is None


def test_is_isomorphism():
    cfg = load("ex2_7.bcf")
    ident = {h: h for h in cfg.angles}
    assert bc.is_isomorphism(cfg, cfg, ident)
    swapped = dict(ident, d="d~", **{"d~": "d"})
    assert not bc.is_isomorphism(cfg, cfg, swapped)
    assert not bc.is_isomorphism(cfg, cfg, dict(ident, d="a1"))
    other = renamed(cfg)
    assert bc.is_isomorphism(cfg, other, bc.are_isomorphic(cfg, other))
    assert bc.is_isomorphism(other, cfg, bc.are_isomorphic(other, cfg))
    assert bc.is_isomorphism(cfg, other, {h: "r" + h for h in cfg.angles})


def test_short_cycles_isomorphic_to_reverse():
    cfg = load("ex2_12_d4.bcf")
    assert bc.are_isomorphic(cfg, bc.reverse(cfg)) is not None


def test_random_single_edge():
    cfg = bc.random_configuration(2, 2, 2, 1, seed=7)
    assert len(cfg.polygons) == 1
    assert bc.classify_polygon(cfg, "P1").is_edge


def test_random_deterministic():
    assert bc.random_configuration(19, seed=11) == bc.random_configuration(19, seed=11)


def test_random_infeasible():
    with pytest.raises(bc.ConfigurationError):
        bc.random_configuration(5, 2, 2)
    with pytest.raises(bc.ConfigurationError):
        bc.random_configuration(1)


@settings(max_examples=60, deadline=None)
@given(integers(2, 24), integers(0, 2**32), integers(1, 3))
def test_random_is_valid(n, seed, mult):
    cfg = bc.random_configuration(n, 2, 4, mult, seed)
    assert bc.validate(cfg).ok
    assert sum(len(v.cycle) for v in cfg.vertices) == n
    assert bc.parse_configuration(bc.text(cfg)) == cfg
    for p in cfg.polygons:
        assert 2 <= len(p.angles) <= 4
        if len(p.angles) == 2:
            a, b = p.angles
            assert bc.bar(cfg, a) == b and bc.bar(cfg, b) == a
