# file: flip.py
# vim:fileencoding=utf-8:fdm=marker:ft=python
#
# Copyright © 2025 The brauertools authors. All rights reserved.
# SPDX-License-Identifier: BSD-2-Clause
# Created: 2025-09-20T09:31:15+0200
# Last modified: 2025-11-01T17:55:30+0100
"""Condition (E) and left/right flips of a Brauer configuration at a polygon."""

from dataclasses import dataclass, field
from typing import NamedTuple
import logging

from . import configuration as bc

LEFT = "left"
RIGHT = "right"


class ConditionEError(ValueError):
    """A polygon does not satisfy condition (E)."""

    def __init__(self, polygon, direction, angle, offending, index=None):
        self.polygon = polygon
        self.direction = direction
        self.angle = angle
        self.offending = offending
        self.index = index
        step = f"step {index}: " if index is not None else ""
        super(ConditionEError, self).__init__(
            f"{step}polygon '{polygon}' violates condition (E) for a {direction} flip: "
            f"the neighbour of angle '{angle}' lies in '{offending}', "
            "which is neither an edge nor the polygon itself"
        )


class ConditionE(NamedTuple):
    holds: bool
    angle: object = None
    offending: object = None

    def __bool__(self):
        return self.holds


class FlipResult(NamedTuple):
    configuration: object
    gamma: dict


@dataclass
class FlipDecomposition:
    """The angle classes H1 … H5 of a polygon together with p, n and x."""

    polygon: str
    h1: tuple = ()
    h2: tuple = ()
    h3: tuple = ()
    h4: tuple = ()
    h5: tuple = ()
    p_map: dict = field(default_factory=dict)
    p_steps: dict = field(default_factory=dict)
    n_map: dict = field(default_factory=dict)
    n_steps: dict = field(default_factory=dict)
    x_map: dict = field(default_factory=dict)


def _check_direction(direction):
    if direction not in (LEFT, RIGHT):
        raise ValueError(f"direction must be '{LEFT}' or '{RIGHT}', not '{direction}'")


def _polygon(cfg, V):
    try:
        return cfg.polygon_by_id[V]
    except KeyError:
        raise bc.ConfigurationError(f"unknown polygon '{V}'")


def satisfies_condition_E(cfg, V, direction=LEFT):
    """
    Decide condition (E) for a polygon.

    For a left flip every angle e of V must have its σ-predecessor in an edge
    or in V itself. For a right flip the σ-successor is used instead.

    Arguments:
        cfg: BrauerConfiguration.
        V: Polygon id.
        direction: LEFT or RIGHT.

    Returns:
        A ConditionE; on failure it holds the angle and the offending polygon.
    """
    _check_direction(direction)
    step = bc.sigma_inverse if direction == LEFT else bc.sigma
    for e in _polygon(cfg, V).angles:
        P = bc.polygon_of(cfg, step(cfg, e))
        if P != V and len(cfg.polygon_by_id[P].angles) != 2:
            return ConditionE(False, e, P)
    return ConditionE(True)


def require_condition_E(cfg, V, direction=LEFT):
    """Raise ConditionEError if condition (E) fails."""
    res = satisfies_condition_E(cfg, V, direction)
    if not res:
        raise ConditionEError(V, direction, res.angle, res.offending)


def predecessor_outside(cfg, V, f):
    """
    Walk backwards along σ from f to the first angle outside V.

    Returns:
        A pair (p_V(f), c), or None if every other angle at the vertex is in V.
    """
    members = set(cfg.polygon_by_id[V].angles)
    h = f
    for c in range(1, len(cfg.vertex_by_id[bc.vertex_of(cfg, f)].cycle) + 1):
        h = bc.sigma_inverse(cfg, h)
        if h not in members:
            return h, c
    return None


def successor_outside(cfg, V, f):
    """
    Walk forwards along σ from f to the first angle outside V.

    Returns:
        A pair (n_V(f), d), or None if every angle at the vertex is in V.
    """
    members = set(cfg.polygon_by_id[V].angles)
    h = f
    for d in range(1, len(cfg.vertex_by_id[bc.vertex_of(cfg, f)].cycle) + 1):
        h = bc.sigma(cfg, h)
        if h not in members:
            return h, d
    return None


def angle_classes(cfg, V):
    """
    Split the angles of V in H1, H2 and H3.

    This does not need condition (E). Each class is in canonical order.

    Returns:
        A tuple (h1, h2, h3).
    """
    members = set(_polygon(cfg, V).angles)
    h1, h2, h3 = [], [], []
    for e in cfg.angles:
        if e not in members:
            continue
        cycle = cfg.vertex_by_id[bc.vertex_of(cfg, e)].cycle
        if all(h in members for h in cycle):
            h1.append(e)
        elif bc.sigma(cfg, e) in members:
            h2.append(e)
        else:
            h3.append(e)
    return tuple(h1), tuple(h2), tuple(h3)


def angle_decomposition(cfg, V):
    """
    Compute the decomposition H1 … H5 of a polygon with the maps p, n, x.

    Arguments:
        cfg: BrauerConfiguration.
        V: Polygon id satisfying condition (E) for a left flip.

    Returns:
        A FlipDecomposition.

    Raises:
        ConditionEError if condition (E) fails.
    """
    require_condition_E(cfg, V, LEFT)
    members = set(cfg.polygon_by_id[V].angles)
    h1, h2, h3 = angle_classes(cfg, V)
    dec = FlipDecomposition(V, h1, h2, h3)
    for e in h2 + h3:
        dec.p_map[e], dec.p_steps[e] = predecessor_outside(cfg, V, e)
    # n(f) = bar(σ⁻¹(e)) determines e uniquely.
    owner = {}
    for e in cfg.polygon_by_id[V].angles:
        g = bc.sigma_inverse(cfg, e)
        if g not in members:
            owner[bc.bar(cfg, g)] = e
    h4, h5 = [], []
    for f in cfg.angles:
        if f in members:
            continue
        dec.n_map[f], dec.n_steps[f] = successor_outside(cfg, V, f)
        if dec.n_map[f] in owner:
            h4.append(f)
            dec.x_map[f] = owner[dec.n_map[f]]
        else:
            h5.append(f)
    for e in h2 + h3:
        dec.n_map[e], dec.n_steps[e] = successor_outside(cfg, V, e)
    dec.h4, dec.h5 = tuple(h4), tuple(h5)
    return dec


def decomposition_text(dec):
    """Return a decomposition as key/value lines."""

    def seq(xs):
        return "[" + ", ".join(xs) + "]"

    def mapping(m, keys):
        return "{" + ", ".join(f"{k}: {m[k]}" for k in keys) + "}"

    lines = [
        f"polygon: {dec.polygon}",
        f"H1: {seq(dec.h1)}",
        f"H2: {seq(dec.h2)}",
        f"H3: {seq(dec.h3)}",
        f"H4: {seq(dec.h4)}",
        f"H5: {seq(dec.h5)}",
        f"p: {mapping(dec.p_map, dec.h2 + dec.h3)}",
        f"n: {mapping(dec.n_map, [k for k in dec.h2 + dec.h3 + dec.h4 + dec.h5 if k in dec.n_map])}",
        f"x: {mapping(dec.x_map, dec.h4)}",
    ]
    return "\n".join(lines)


def _left_flip(cfg, V):
    dec = angle_decomposition(cfg, V)
    if not dec.h2 and not dec.h3:
        logging.info(f"polygon '{V}' covers its vertices; flip is the identity")
        return FlipResult(cfg, {v.vertex_id: v.vertex_id for v in cfg.vertices})
    nxt, where = {}, {}
    for e in dec.h1:
        nxt[e], where[e] = bc.sigma(cfg, e), bc.vertex_of(cfg, e)
    for e in dec.h2:
        nxt[e] = bc.sigma(cfg, e)
        where[e] = bc.vertex_of(cfg, bc.bar(cfg, dec.p_map[e]))
    for e in dec.h3:
        nxt[e] = bc.bar(cfg, dec.p_map[e])
        where[e] = bc.vertex_of(cfg, nxt[e])
    for f in dec.h4:
        nxt[f], where[f] = dec.x_map[f], bc.vertex_of(cfg, f)
    for f in dec.h5:
        nxt[f], where[f] = dec.n_map[f], bc.vertex_of(cfg, f)
    if sorted(nxt.values()) != sorted(nxt.keys()):
        raise RuntimeError(f"flip at '{V}': new successor map is not a permutation")
    cycles, seen = {}, set()
    for h in cfg.angles:
        if h in seen:
            continue
        orbit = [h]
        seen.add(h)
        while nxt[orbit[-1]] != h:
            orbit.append(nxt[orbit[-1]])
            seen.add(orbit[-1])
        owners = {where[a] for a in orbit}
        if len(owners) != 1:
            raise RuntimeError(f"flip at '{V}': new cycle {orbit} has vertices {owners}")
        v = owners.pop()
        if v in cycles:
            raise RuntimeError(f"flip at '{V}': vertex '{v}' gets two cycles")
        cycles[v] = bc.anchor(tuple(orbit))
    if set(cycles) != set(cfg.vertex_by_id):
        raise RuntimeError(f"flip at '{V}': vertex count changed")
    vertices = tuple(
        bc.VertexCycle(v.vertex_id, v.multiplicity, cycles[v.vertex_id]) for v in cfg.vertices
    )
    gamma = {v.vertex_id: v.vertex_id for v in cfg.vertices}
    return FlipResult(bc.BrauerConfiguration(vertices, cfg.polygons), gamma)


def flip(cfg, V, direction=LEFT):
    """
    Flip a configuration at a polygon.

    The angles and polygons stay the same. New cycles start at their smallest
    angle id and keep the id and multiplicity of the old vertex they
    correspond to.

    Arguments:
        cfg: BrauerConfiguration.
        V: Polygon id.
        direction: LEFT or RIGHT.

    Returns:
        A FlipResult (configuration, gamma); gamma maps new vertex ids to old ones.

    Raises:
        ConditionEError if V violates condition (E) for the direction.
    """
    _check_direction(direction)
    require_condition_E(cfg, V, direction)
    if direction == LEFT:
        return _left_flip(cfg, V)
    res = _left_flip(bc.reverse(cfg), V)
    return FlipResult(bc.reverse(res.configuration), res.gamma)


def flip_sequence(cfg, steps):
    """
    Apply flips from left to right.

    Arguments:
        cfg: BrauerConfiguration.
        steps: Sequence of (polygon, direction) pairs.

    Returns:
        The resulting BrauerConfiguration.

    Raises:
        ConditionEError for the first failing step, with its index set.
    """
    for k, (V, direction) in enumerate(steps):
        try:
            cfg = flip(cfg, V, direction).configuration
        except ConditionEError as e:
            raise ConditionEError(e.polygon, e.direction, e.angle, e.offending, k)
        logging.debug(f"step {k}: {direction} flip at '{V}'")
    return cfg


def period(cfg, steps, limit=12):
    """
    Repeat a flip sequence until the result is isomorphic to the start.

    Returns:
        The number of repetitions, or None if it exceeds limit.
    """
    current = cfg
    for n in range(1, limit + 1):
        current = flip_sequence(current, steps)
        if bc.are_isomorphic(current, cfg) is not None:
            return n
    return None
