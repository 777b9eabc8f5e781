# file: configuration.py
# vim:fileencoding=utf-8:fdm=marker:ft=python
#
# Copyright © 2025 The brauertools authors. All rights reserved.
# SPDX-License-Identifier: BSD-2-Clause
# Created: 2025-09-14T10:11:52+0200
# Last modified: 2025-11-01T12:37:18+0100
"""Reading, writing and inspecting Brauer configurations.

A configuration is stored as a list of vertex cycles and a list of polygons,
both in the order they were read. The cycles define the permutation σ on the
angles, the polygons partition the angles.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple
import logging
import random
import re

from .utils import cycle_from

TRUNCATED = "truncated"
EXTERNAL = "external"
ORDINARY = "ordinary"

_TOKEN = re.compile(r"\S+")


class ParseError(ValueError):
    """Syntax error in a configuration file."""

    def __init__(self, message, line=None, column=None, token=None):
        self.line = line
        self.column = column
        self.token = token
        where = ""
        if line is not None:
            where = f"line {line}, column {column}: "
        super(ParseError, self).__init__(where + message)


class ConfigurationError(ValueError):
    """A configuration violates one of the structural rules."""

    def __init__(self, message, problems=()):
        self.problems = tuple(problems)
        super(ConfigurationError, self).__init__(message)


@dataclass(frozen=True)
class VertexCycle:
    vertex_id: str
    multiplicity: int
    cycle: tuple


@dataclass(frozen=True)
class Polygon:
    polygon_id: str
    angles: tuple


@dataclass(frozen=True)
class BrauerConfiguration:
    """
    A Brauer configuration.

    Equality is structural and includes the order of statements and the
    anchor of every cycle. Use are_isomorphic for comparison up to renaming.
    """

    vertices: tuple
    polygons: tuple

    @cached_property
    def angles(self):
        return tuple(h for v in self.vertices for h in v.cycle)

    @cached_property
    def _sigma(self):
        rv = {}
        for v in self.vertices:
            c = v.cycle
            for k, h in enumerate(c):
                rv[h] = c[(k + 1) % len(c)]
        return rv

    @cached_property
    def _sigma_inverse(self):
        return {b: a for a, b in self._sigma.items()}

    @cached_property
    def _vertex_of(self):
        return {h: v.vertex_id for v in self.vertices for h in v.cycle}

    @cached_property
    def _polygon_of(self):
        return {h: p.polygon_id for p in self.polygons for h in p.angles}

    @cached_property
    def vertex_by_id(self):
        return {v.vertex_id: v for v in self.vertices}

    @cached_property
    def polygon_by_id(self):
        return {p.polygon_id: p for p in self.polygons}


@dataclass(frozen=True)
class Problem:
    rule: str
    token: str
    message: str


@dataclass
class ValidationReport:
    """Structural problems found in a configuration; empty when valid."""

    problems: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.problems

    def add(self, rule, token, message):
        self.problems.append(Problem(rule, token, message))

    def __bool__(self):
        return self.ok


class PolygonClass(NamedTuple):
    size: int
    is_edge: bool
    is_self_folded: bool


def parse_configuration(text):
    """
    Parse the text of a configuration file.

    Arguments:
        text: Contents of a .bcf file.

    Returns:
        A validated BrauerConfiguration.

    Raises:
        ParseError for syntax errors, ConfigurationError for violations of
        the structural rules.
    """
    vertices, polygons = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        if not tokens:
            continue
        keyword, column = tokens[0]
        if keyword == "vertex":
            vertices.append(_parse_vertex(tokens, lineno))
        elif keyword == "polygon":
            if len(tokens) < 2:
                raise ParseError("polygon without identifier", lineno, column, keyword)
            angles = tuple(t for t, _ in tokens[2:])
            polygons.append(Polygon(tokens[1][0], angles))
        else:
            raise ParseError(f"unknown statement '{keyword}'", lineno, column, keyword)
    cfg = BrauerConfiguration(tuple(vertices), tuple(polygons))
    report = validate(cfg)
    if not report.ok:
        msg = "; ".join(f"{p.rule}: {p.message}" for p in report.problems)
        raise ConfigurationError(msg, report.problems)
    logging.debug(
        f"parsed {len(cfg.vertices)} vertices, {len(cfg.polygons)} polygons, "
        f"{len(cfg.angles)} angles"
    )
    return cfg


def _parse_vertex(tokens, lineno):
    """Parse the tokens of a ``vertex`` statement."""
    names = [t for t, _ in tokens]
    if len(tokens) < 2:
        raise ParseError("vertex without identifier", lineno, tokens[0][1], names[0])
    if len(tokens) < 4 or names[2] != "multiplicity":
        tok, col = tokens[min(2, len(tokens) - 1)]
        raise ParseError("expected 'multiplicity <int>'", lineno, col, tok)
    try:
        mult = int(names[3])
    except ValueError:
        raise ParseError(
            f"multiplicity '{names[3]}' is not an integer", lineno, tokens[3][1], names[3]
        )
    if len(tokens) < 5 or names[4] != "cycle":
        tok, col = tokens[min(4, len(tokens) - 1)]
        raise ParseError("expected 'cycle <angles>'", lineno, col, tok)
    if len(tokens) < 6:
        raise ParseError("empty cycle", lineno, tokens[4][1], names[4])
    return VertexCycle(names[1], mult, tuple(names[5:]))


def readbcf(name, encoding="utf-8"):
    """
    Read a configuration file.

    Arguments:
        name: Path of the .bcf file to read.
        encoding: Encoding of the file (defaults to UTF-8).

    Returns:
        A validated BrauerConfiguration.
    """
    with open(name, encoding=encoding) as f:
        return parse_configuration(f.read())


def text(cfg, comment=None):
    """
    Write a configuration in .bcf format.

    Arguments:
        cfg: BrauerConfiguration.
        comment: Optional comment placed on the first line.

    Returns:
        A string that parses back to cfg.
    """
    lines = []
    if comment:
        lines.append(f"# {comment}")
    for v in cfg.vertices:
        lines.append(
            f"vertex {v.vertex_id} multiplicity {v.multiplicity} cycle " + " ".join(v.cycle)
        )
    for p in cfg.polygons:
        lines.append(f"polygon {p.polygon_id} " + " ".join(p.angles))
    return "\n".join(lines) + "\n"


def validate(cfg):
    """
    Check the structural rules of a configuration.

    Arguments:
        cfg: BrauerConfiguration, possibly malformed.

    Returns:
        A ValidationReport. It is empty if the configuration is valid.
    """
    rv = ValidationReport()
    seen = set()
    for v in cfg.vertices:
        if v.vertex_id in seen:
            rv.add("duplicate-id", v.vertex_id, f"vertex '{v.vertex_id}' defined twice")
        seen.add(v.vertex_id)
        if v.multiplicity < 1:
            rv.add(
                "multiplicity",
                v.vertex_id,
                f"vertex '{v.vertex_id}' has multiplicity {v.multiplicity} < 1",
            )
        if not v.cycle:
            rv.add("empty-cycle", v.vertex_id, f"vertex '{v.vertex_id}' has no angles")
    seen = set()
    for p in cfg.polygons:
        if p.polygon_id in seen:
            rv.add("duplicate-id", p.polygon_id, f"polygon '{p.polygon_id}' defined twice")
        seen.add(p.polygon_id)
        if len(p.angles) < 2:
            rv.add(
                "polygon-size",
                p.polygon_id,
                f"polygon '{p.polygon_id}' has {len(p.angles)} angle(s), needs at least 2",
            )
    in_cycles = set()
    for v in cfg.vertices:
        for h in v.cycle:
            if h in in_cycles:
                rv.add("sigma-permutation", h, f"angle '{h}' occurs twice in the vertex cycles")
            in_cycles.add(h)
    in_polygons = set()
    for p in cfg.polygons:
        for h in p.angles:
            if h in in_polygons:
                rv.add("psi-partition", h, f"angle '{h}' occurs in more than one polygon slot")
            in_polygons.add(h)
    for h in sorted(in_cycles - in_polygons):
        rv.add("psi-totality", h, f"angle '{h}' is in a cycle but in no polygon")
    for h in sorted(in_polygons - in_cycles):
        rv.add("sigma-totality", h, f"angle '{h}' is in a polygon but in no cycle")
    if rv.ok:
        for v in cfg.vertices:
            total = sum(occurrences(cfg, v.vertex_id, p.polygon_id) for p in cfg.polygons)
            if total != len(v.cycle):
                rv.add(
                    "occurrence-sum",
                    v.vertex_id,
                    f"occurrences at '{v.vertex_id}' add up to {total}, not {len(v.cycle)}",
                )
    return rv


def sigma(cfg, angle):
    """Return the successor of angle in its vertex cycle."""
    return cfg._sigma[angle]


def sigma_inverse(cfg, angle):
    """Return the predecessor of angle in its vertex cycle."""
    return cfg._sigma_inverse[angle]


def sigma_power(cfg, angle, n):
    """Apply σ n times to angle; n may be negative."""
    table = cfg._sigma if n >= 0 else cfg._sigma_inverse
    for _ in range(abs(n)):
        angle = table[angle]
    return angle


def _vertex(cfg, vertex):
    try:
        return cfg.vertex_by_id[vertex]
    except KeyError:
        raise ConfigurationError(f"unknown vertex '{vertex}'") from None


def _polygon(cfg, polygon):
    try:
        return cfg.polygon_by_id[polygon]
    except KeyError:
        raise ConfigurationError(f"unknown polygon '{polygon}'") from None


def vertex_of(cfg, angle):
    """Return the id of the vertex that angle belongs to."""
    try:
        return cfg._vertex_of[angle]
    except KeyError:
        raise ConfigurationError(f"unknown angle '{angle}'") from None


def polygon_of(cfg, angle):
    """Return the id of the polygon that angle belongs to."""
    try:
        return cfg._polygon_of[angle]
    except KeyError:
        raise ConfigurationError(f"unknown angle '{angle}'") from None


def multiplicity(cfg, vertex):
    return _vertex(cfg, vertex).multiplicity


def valency(cfg, vertex):
    """Return the number of angles at a vertex."""
    return len(_vertex(cfg, vertex).cycle)


def cycle_length(cfg, angle):
    """Return 𝔪(v)·val(v) for the vertex v of angle."""
    v = cfg.vertex_by_id[vertex_of(cfg, angle)]
    return v.multiplicity * len(v.cycle)


def occurrences(cfg, vertex, polygon):
    """
    Count the angles of polygon that lie on vertex.

    Arguments:
        cfg: BrauerConfiguration.
        vertex: Vertex id.
        polygon: Polygon id.

    Returns:
        The number of occurrences; 0 if they do not meet.

    Raises:
        ConfigurationError for an unknown vertex or polygon.
    """
    angles = set(_polygon(cfg, polygon).angles)
    return sum(1 for h in _vertex(cfg, vertex).cycle if h in angles)


def classify_vertex(cfg, vertex):
    """
    Return TRUNCATED, EXTERNAL or ORDINARY.

    A vertex of valency 1 is external. It is truncated when its
    multiplicity is 1 as well.
    """
    v = _vertex(cfg, vertex)
    if len(v.cycle) != 1:
        return ORDINARY
    return TRUNCATED if v.multiplicity == 1 else EXTERNAL


def classify_polygon(cfg, polygon):
    """
    Return the size of a polygon, whether it is an edge and whether it is
    self-folded, that is some vertex carries more than one of its angles.
    """
    angles = _polygon(cfg, polygon).angles
    vertices = [vertex_of(cfg, h) for h in angles]
    folded = len(set(vertices)) < len(vertices)
    return PolygonClass(len(angles), len(angles) == 2, folded)


def bar(cfg, angle):
    """
    Return the other angle of the edge containing angle.

    Raises:
        ConfigurationError if angle is unknown or its polygon is not an edge.
    """
    p = cfg.polygon_by_id[polygon_of(cfg, angle)]
    if len(p.angles) != 2:
        raise ConfigurationError(
            f"angle '{angle}' lies in polygon '{p.polygon_id}' of size {len(p.angles)}, "
            "not in an edge"
        )
    a, b = p.angles
    return b if angle == a else a


def reverse(cfg):
    """Return the configuration with every vertex cycle reversed."""
    vertices = tuple(
        VertexCycle(v.vertex_id, v.multiplicity, (v.cycle[0],) + tuple(reversed(v.cycle[1:])))
        for v in cfg.vertices
    )
    return BrauerConfiguration(vertices, cfg.polygons)


def is_multiplicity_free(cfg):
    return all(v.multiplicity == 1 for v in cfg.vertices)


def is_brauer_graph(cfg):
    """A configuration is a Brauer graph if all its polygons are edges."""
    return all(len(p.angles) == 2 for p in cfg.polygons)


def _vertex_signature(cfg, v):
    sizes = sorted(len(cfg.polygon_by_id[polygon_of(cfg, h)].angles) for h in v.cycle)
    return (len(v.cycle), v.multiplicity, tuple(sizes))


def are_isomorphic(first, second):
    """
    Search for an isomorphism between two configurations.

    An isomorphism is a bijection of the angles that commutes with σ, maps
    polygons onto polygons and preserves multiplicities.

    Arguments:
        first: BrauerConfiguration.
        second: BrauerConfiguration.

    Returns:
        A dict mapping angles of first to angles of second, or None.
    """
    if len(first.angles) != len(second.angles):
        return None
    if len(first.vertices) != len(second.vertices):
        return None
    if sorted(len(p.angles) for p in first.polygons) != sorted(
        len(p.angles) for p in second.polygons
    ):
        return None
    sig1 = {v.vertex_id: _vertex_signature(first, v) for v in first.vertices}
    sig2 = {v.vertex_id: _vertex_signature(second, v) for v in second.vertices}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None
    order = _search_order(first)
    beta, used, p12, p21 = {}, set(), {}, {}

    def candidates(v1):
        """Yield (vertex, rotation) pairs compatible with what is mapped so far."""
        c1 = first.vertex_by_id[v1].cycle
        for k, h in enumerate(c1):
            P2 = p12.get(polygon_of(first, h))
            if P2 is None:
                continue
            for h2 in second.polygon_by_id[P2].angles:
                v2 = vertex_of(second, h2)
                if v2 in used or sig2[v2] != sig1[v1]:
                    continue
                c2 = second.vertex_by_id[v2].cycle
                yield v2, (c2.index(h2) - k) % len(c2)
            return
        for v2, s in sig2.items():
            if v2 in used or s != sig1[v1]:
                continue
            for r in range(len(second.vertex_by_id[v2].cycle)):
                yield v2, r

    def extend(n):
        if n == len(order):
            return True
        v1 = order[n]
        c1 = first.vertex_by_id[v1].cycle
        for v2, r in candidates(v1):
            c2 = second.vertex_by_id[v2].cycle
            added, ok = [], True
            for k, h in enumerate(c1):
                h2 = c2[(r + k) % len(c2)]
                P1, P2 = polygon_of(first, h), polygon_of(second, h2)
                if len(first.polygon_by_id[P1].angles) != len(second.polygon_by_id[P2].angles):
                    ok = False
                    break
                if p12.get(P1, P2) != P2 or p21.get(P2, P1) != P1:
                    ok = False
                    break
                if P1 not in p12:
                    p12[P1], p21[P2] = P2, P1
                    added.append(P1)
                beta[h] = h2
            if ok:
                used.add(v2)
                if extend(n + 1):
                    return True
                used.discard(v2)
            for h in c1:
                beta.pop(h, None)
            for P1 in added:
                del p21[p12.pop(P1)]
        return False

    if extend(0):
        logging.debug(f"isomorphism found for {len(beta)} angles")
        return dict(beta)
    return None


def is_isomorphism(first, second, beta):
    """
    Check that beta is an isomorphism from first to second.

    Arguments:
        first: BrauerConfiguration.
        second: BrauerConfiguration.
        beta: dict mapping the angles of first to those of second.

    Returns:
        True if beta is a bijection that commutes with σ, maps polygons onto
        polygons and preserves multiplicities.
    """
    if sorted(beta) != sorted(first.angles) or sorted(beta.values()) != sorted(second.angles):
        return False
    for h, h2 in beta.items():
        if beta[sigma(first, h)] != sigma(second, h2):
            return False
        if multiplicity(first, vertex_of(first, h)) != multiplicity(second, vertex_of(second, h2)):
            return False
    for p in first.polygons:
        image = {polygon_of(second, beta[h]) for h in p.angles}
        if len(image) != 1:
            return False
        (P2,) = image
        if len(second.polygon_by_id[P2].angles) != len(p.angles):
            return False
    return True


def _search_order(cfg):
    """Order vertices breadth first through shared polygons."""
    order, seen = [], set()
    for start in cfg.vertices:
        if start.vertex_id in seen:
            continue
        queue = [start.vertex_id]
        seen.add(start.vertex_id)
        while queue:
            v = queue.pop(0)
            order.append(v)
            for h in cfg.vertex_by_id[v].cycle:
                for g in cfg.polygon_by_id[polygon_of(cfg, h)].angles:
                    w = vertex_of(cfg, g)
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
    return order


def random_configuration(
    n_angles, min_size=2, max_size=None, max_multiplicity=1, seed=None
):
    """
    Generate a random valid configuration.

    Arguments:
        n_angles: Total number of angles, at least 2.
        min_size: Smallest polygon size, at least 2.
        max_size: Largest polygon size; defaults to n_angles.
        max_multiplicity: Largest vertex multiplicity.
        seed: Seed for the random generator; equal seeds give equal results.

    Returns:
        A BrauerConfiguration with angles h1 … hn.

    Raises:
        ConfigurationError if the bounds admit no configuration.
    """
    if max_size is None:
        max_size = n_angles
    if min_size < 2 or max_size < min_size or n_angles < min_size or max_multiplicity < 1:
        raise ConfigurationError(
            f"no configuration with {n_angles} angles and polygon sizes "
            f"{min_size}..{max_size}"
        )
    rng = random.Random(seed)
    sizes = _polygon_sizes(n_angles, min_size, max_size, rng)
    if sizes is None:
        raise ConfigurationError(
            f"{n_angles} angles cannot be split in polygons of size {min_size}..{max_size}"
        )
    names = [f"h{k}" for k in range(1, n_angles + 1)]
    polygons, k = [], 0
    for j, s in enumerate(sizes, start=1):
        polygons.append(Polygon(f"P{j}", tuple(names[k : k + s])))
        k += s
    image = names[:]
    rng.shuffle(image)
    succ = dict(zip(names, image))
    vertices, seen = [], set()
    for h in names:
        if h in seen:
            continue
        cycle = [h]
        while succ[cycle[-1]] != h:
            cycle.append(succ[cycle[-1]])
        seen.update(cycle)
        mult = rng.randint(1, max_multiplicity)
        vertices.append(VertexCycle(f"v{len(vertices) + 1}", mult, tuple(cycle)))
    return BrauerConfiguration(tuple(vertices), tuple(polygons))


def _polygon_sizes(n, lo, hi, rng):
    """Split n in random parts within [lo, hi], or None if that is impossible."""
    possible = [False] * (n + 1)
    possible[0] = True
    for k in range(1, n + 1):
        possible[k] = any(possible[k - s] for s in range(lo, min(hi, k) + 1))
    if not possible[n]:
        return None
    rv, rest = [], n
    while rest:
        choices = [s for s in range(lo, min(hi, rest) + 1) if possible[rest - s]]
        s = rng.choice(choices)
        rv.append(s)
        rest -= s
    return rv


def anchor(cycle):
    """Rotate a cycle to start at its smallest angle id."""
    return cycle_from(cycle, min(cycle)) if cycle else tuple(cycle)


def summary(cfg):
    """Return a short human readable description of a configuration."""
    lines = [
        f"angles: {len(cfg.angles)}",
        f"vertices: {len(cfg.vertices)}",
        f"polygons: {len(cfg.polygons)}",
        f"multiplicity free: {'yes' if is_multiplicity_free(cfg) else 'no'}",
        f"Brauer graph: {'yes' if is_brauer_graph(cfg) else 'no'}",
    ]
    for v in cfg.vertices:
        kind = classify_vertex(cfg, v.vertex_id)
        lines.append(
            f"vertex {v.vertex_id}: valency {len(v.cycle)}, "
            f"multiplicity {v.multiplicity}, {kind}"
        )
    for p in cfg.polygons:
        c = classify_polygon(cfg, p.polygon_id)
        kind = "edge" if c.is_edge else "polygon"
        if c.is_self_folded:
            kind = "self-folded " + kind
        lines.append(f"polygon {p.polygon_id}: size {c.size}, {kind}")
    return "\n".join(lines)
