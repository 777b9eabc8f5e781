# file: presentation.py
# vim:fileencoding=utf-8:fdm=marker:ft=python
#
# Copyright © 2025 The brauertools authors. All rights reserved.
# SPDX-License-Identifier: BSD-2-Clause
# Created: 2025-09-15T19:47:03+0200
# Last modified: 2025-11-01T15:02:44+0100
"""Quiver, relations and path basis of a Brauer configuration algebra.

Every angle h gives an arrow from the polygon of h to the polygon of σ(h).
Paths are written left to right. A nonzero path that is not an idempotent is
a piece of a power of a special cycle: it is stored by the angle it starts
at, the number r of full turns and the number t of steps of the last
partial turn, so that its length is r·val + t with 1 ≤ t ≤ val.

A path P from W to U gives the map P_U → P_W, x ↦ P·x. With that
convention multiply(p, q), p followed by q, is the composition ρ_p ∘ ρ_q.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple, Optional
import itertools as it

from sympy.polys.domains import QQ

from . import configuration as bc


@dataclass(frozen=True)
class CanonicalPath:
    """
    A basis path.

    For the idempotent at a polygon, start is None and power, steps are 0.
    """

    source: str
    target: str
    start: Optional[str] = None
    power: int = 0
    steps: int = 0

    @property
    def is_identity(self):
        return self.start is None


class QuiverPresentation(NamedTuple):
    nodes: tuple
    arrows: tuple
    bc1: tuple
    bc2: tuple


def identity(polygon):
    """Return the idempotent path at polygon."""
    return CanonicalPath(polygon, polygon)


def path_length(cfg, p):
    if p.is_identity:
        return 0
    return p.power * bc.valency(cfg, bc.vertex_of(cfg, p.start)) + p.steps


def end_angle(cfg, p):
    """Return the angle at which a path continues along its vertex."""
    return bc.sigma_power(cfg, p.start, p.steps)


def socle(cfg, polygon):
    """
    Return the representative of the socle class of a polygon.

    All full cycles C_h^𝔪 with h in the polygon are equal in the algebra. The
    one starting at the smallest angle id represents them.
    """
    h = min(cfg.polygon_by_id[polygon].angles)
    v = bc.vertex_of(cfg, h)
    return CanonicalPath(
        polygon, polygon, h, bc.multiplicity(cfg, v) - 1, bc.valency(cfg, v)
    )


def is_socle(cfg, p):
    if p.is_identity:
        return False
    v = bc.vertex_of(cfg, p.start)
    return p.power == bc.multiplicity(cfg, v) - 1 and p.steps == bc.valency(cfg, v)


def path(cfg, h, length):
    """
    Return the normalized path of a given length along σ, starting at h.

    Arguments:
        cfg: BrauerConfiguration.
        h: Starting angle.
        length: Number of arrows, 1 ≤ length ≤ 𝔪·val at the vertex of h.

    Returns:
        A CanonicalPath. Full cycles are replaced by the socle representative.

    Raises:
        ValueError if the length is out of range.
    """
    v = bc.vertex_of(cfg, h)
    val = bc.valency(cfg, v)
    top = bc.multiplicity(cfg, v) * val
    if not 1 <= length <= top:
        raise ValueError(f"path of length {length} at '{h}' is zero or not a path")
    if length == top:
        return socle(cfg, bc.polygon_of(cfg, h))
    r = (length - 1) // val
    t = length - r * val
    return CanonicalPath(
        bc.polygon_of(cfg, h), bc.polygon_of(cfg, bc.sigma_power(cfg, h, t)), h, r, t
    )


def arrow(cfg, h):
    """Return the arrow of angle h as a normalized path."""
    return path(cfg, h, 1)


def special_path(cfg, h, t):
    """
    Return the special path C_{h,σ^t(h)}, written literally.

    The result is not normalized: for t = val it is the special cycle C_h
    starting at h.

    Raises:
        ValueError unless 1 ≤ t ≤ val.
    """
    val = bc.valency(cfg, bc.vertex_of(cfg, h))
    if not 1 <= t <= val:
        raise ValueError(f"special path from '{h}' needs 1 ≤ t ≤ {val}, got {t}")
    return CanonicalPath(
        bc.polygon_of(cfg, h), bc.polygon_of(cfg, bc.sigma_power(cfg, h, t)), h, 0, t
    )


def full_cycle(cfg, h):
    """Return C_h^𝔪 starting at h, not normalized."""
    v = bc.vertex_of(cfg, h)
    return CanonicalPath(
        bc.polygon_of(cfg, h),
        bc.polygon_of(cfg, h),
        h,
        bc.multiplicity(cfg, v) - 1,
        bc.valency(cfg, v),
    )


def normalize(cfg, p):
    if p.is_identity:
        return p
    return path(cfg, p.start, path_length(cfg, p))


def arrows_of(cfg, p):
    """Return the angles of the arrows of a path, in order."""
    if p.is_identity:
        return ()
    rv, h = [], p.start
    for _ in range(path_length(cfg, p)):
        rv.append(h)
        h = bc.sigma(cfg, h)
    return tuple(rv)


def path_text(cfg, p):
    if p.is_identity:
        return f"e_{p.source}"
    return "·".join(arrows_of(cfg, p))


def quiver(cfg):
    """
    Build the quiver with relations of a configuration.

    Returns:
        A QuiverPresentation. Its bc1 entries are pairs of full cycles at
        angles of the same polygon, its bc2 entries are pairs of composable
        arrows whose product is zero.
    """
    nodes = tuple(p.polygon_id for p in cfg.polygons)
    arrows = tuple(
        (h, bc.polygon_of(cfg, h), bc.polygon_of(cfg, bc.sigma(cfg, h))) for h in cfg.angles
    )
    bc1 = tuple(
        (full_cycle(cfg, a), full_cycle(cfg, b))
        for p in cfg.polygons
        for a, b in it.combinations(p.angles, 2)
    )
    bc2 = []
    for a in cfg.angles:
        target = bc.polygon_of(cfg, bc.sigma(cfg, a))
        for b in cfg.polygon_by_id[target].angles:
            if not is_subpath_pair(cfg, a, b):
                bc2.append((a, b))
    return QuiverPresentation(nodes, arrows, bc1, tuple(bc2))


def is_subpath_pair(cfg, a, b):
    """Check if arrow a followed by arrow b lies on a power of a special cycle."""
    return bc.sigma(cfg, a) == b and bc.cycle_length(cfg, a) >= 2


def relations_text(cfg):
    """Return the relations of the algebra, one per line."""
    q = quiver(cfg)
    lines = [f"{path_text(cfg, a)} = {path_text(cfg, b)}" for a, b in q.bc1]
    lines += [f"{a}·{b} = 0" for a, b in q.bc2]
    return "\n".join(lines)


def quiver_text(cfg):
    q = quiver(cfg)
    lines = [f"node {n}" for n in q.nodes]
    lines += [f"arrow {h}: {s} -> {t}" for h, s, t in q.arrows]
    return "\n".join(lines)


def quiver_dot(cfg):
    """Return the quiver in graphviz DOT format."""
    q = quiver(cfg)
    lines = ["digraph quiver {"]
    lines += [f'    "{n}";' for n in q.nodes]
    lines += [f'    "{s}" -> "{t}" [label="{h}"];' for h, s, t in q.arrows]
    lines.append("}")
    return "\n".join(lines) + "\n"


def multiply(cfg, p, q):
    """
    Multiply two basis paths.

    Arguments:
        cfg: BrauerConfiguration.
        p: CanonicalPath.
        q: CanonicalPath starting where p ends.

    Returns:
        The normalized path p·q, or None if the product is zero.

    Raises:
        ValueError if the target of p is not the source of q.
    """
    if p.target != q.source:
        raise ValueError(
            f"cannot compose a path ending at {p.target} with one starting at {q.source}"
        )
    if p.is_identity:
        return q
    if q.is_identity:
        return p
    if is_socle(cfg, p) or is_socle(cfg, q):
        return None
    if q.start != end_angle(cfg, p):
        return None
    length = path_length(cfg, p) + path_length(cfg, q)
    if length > bc.cycle_length(cfg, p.start):
        return None
    return path(cfg, p.start, length)


@lru_cache(maxsize=8192)
def hom_basis(cfg, U, W):
    """
    Return a basis of Hom(P_U, P_W), i.e. of the paths from W to U.

    Vertices are taken in file order and angles in cycle order, then by the
    number of turns and the steps. For U = W the full cycles are replaced by
    one socle representative and the idempotent comes last.

    Returns:
        A tuple of CanonicalPath.
    """
    rv = []
    for v in cfg.vertices:
        val = len(v.cycle)
        for h in v.cycle:
            if bc.polygon_of(cfg, h) != W:
                continue
            for r in range(v.multiplicity):
                for t in range(1, val + 1):
                    if bc.polygon_of(cfg, bc.sigma_power(cfg, h, t)) != U:
                        continue
                    p = path(cfg, h, r * val + t)
                    if p.start == h:
                        rv.append(p)
    if U == W:
        rv.append(identity(U))
    return tuple(rv)


def hom_dim(cfg, U, W):
    """
    Return dim Hom(P_U, P_W) by the closed formula.

    For U ≠ W this is Σ 𝔪(v)·occ(v,U)·occ(v,W); for U = W add 2 − |U|.

    Raises:
        ConfigurationError if U or W is not a polygon of cfg.
    """
    for X in (U, W):
        if X not in cfg.polygon_by_id:
            raise bc.ConfigurationError(f"unknown polygon '{X}'")
    total = sum(
        v.multiplicity * bc.occurrences(cfg, v.vertex_id, U) * bc.occurrences(cfg, v.vertex_id, W)
        for v in cfg.vertices
    )
    if U == W:
        total += 2 - len(cfg.polygon_by_id[U].angles)
    return total


def cartan_matrix(cfg):
    """Return the matrix of hom_dim for polygons in file order."""
    ids = [p.polygon_id for p in cfg.polygons]
    return [[hom_dim(cfg, a, b) for b in ids] for a in ids]


def projective_dimension(cfg, U):
    """Return the dimension of the indecomposable projective P_U."""
    return sum(hom_dim(cfg, p.polygon_id, U) for p in cfg.polygons)


def total_dimension(cfg):
    return sum(sum(row) for row in cartan_matrix(cfg))


@dataclass(frozen=True)
class ModuleMap:
    """
    A map between direct sums of indecomposable projectives.

    The entry blocks[(j, i)] is the component P_{source[i]} → P_{target[j]},
    a dict from paths (from target[j] to source[i]) to nonzero scalars.
    """

    source: tuple
    target: tuple
    blocks: dict = field(default_factory=dict)
    domain: object = QQ

    def is_zero(self):
        return not self.blocks


def zero_map(source, target, domain=QQ):
    return ModuleMap(tuple(source), tuple(target), {}, domain)


def single(source, target, j, i, p, coeff=None, domain=QQ):
    """Return the map with one nonzero entry, coeff·ρ_p at block (j, i)."""
    if coeff is None:
        coeff = domain.one
    coeff = domain.convert(coeff)
    if domain.is_zero(coeff):
        return zero_map(source, target, domain)
    return ModuleMap(tuple(source), tuple(target), {(j, i): {p: coeff}}, domain)


def _clean(blocks, domain):
    rv = {}
    for key, comb in blocks.items():
        comb = {p: c for p, c in comb.items() if not domain.is_zero(c)}
        if comb:
            rv[key] = comb
    return rv


def add(f, g):
    if f.source != g.source or f.target != g.target:
        raise ValueError("cannot add maps between different modules")
    K = f.domain
    blocks = {key: dict(comb) for key, comb in f.blocks.items()}
    for key, comb in g.blocks.items():
        b = blocks.setdefault(key, {})
        for p, c in comb.items():
            b[p] = b.get(p, K.zero) + c
    return ModuleMap(f.source, f.target, _clean(blocks, K), K)


def scale(f, c):
    K = f.domain
    c = K.convert(c)
    blocks = {key: {p: c * x for p, x in comb.items()} for key, comb in f.blocks.items()}
    return ModuleMap(f.source, f.target, _clean(blocks, K), K)


def subtract(f, g):
    return add(f, scale(g, -1))


def compose(cfg, g, f):
    """
    Return g ∘ f.

    Arguments:
        cfg: BrauerConfiguration.
        g: ModuleMap M → T.
        f: ModuleMap S → M.

    Raises:
        ValueError if the target of f is not the source of g.
    """
    if g.source != f.target:
        raise ValueError("maps are not composable")
    K = f.domain
    by_row = {}
    for (j, i), comb in f.blocks.items():
        by_row.setdefault(j, []).append((i, comb))
    blocks = {}
    for (k, j), gcomb in g.blocks.items():
        for i, fcomb in by_row.get(j, ()):
            b = blocks.setdefault((k, i), {})
            for beta, x in gcomb.items():
                for alpha, y in fcomb.items():
                    prod = multiply(cfg, beta, alpha)
                    if prod is not None:
                        b[prod] = b.get(prod, K.zero) + x * y
    return ModuleMap(f.source, g.target, _clean(blocks, K), K)


class HomSpace:
    """
    The space of maps between two direct sums of projectives, with a basis.

    Basis elements are triples (j, i, path) with path in the basis of
    Hom(P_{source[i]}, P_{target[j]}).
    """

    def __init__(self, cfg, source, target, domain=QQ):
        self.cfg = cfg
        self.source = tuple(source)
        self.target = tuple(target)
        self.domain = domain
        self.basis = [
            (j, i, p)
            for j, W in enumerate(self.target)
            for i, U in enumerate(self.source)
            for p in hom_basis(cfg, U, W)
        ]
        self.index = {b: k for k, b in enumerate(self.basis)}

    def __len__(self):
        return len(self.basis)

    def coords(self, f, offset=0):
        """Return the coordinates of a map as a sparse dict index → scalar."""
        rv = {}
        for (j, i), comb in f.blocks.items():
            for p, c in comb.items():
                rv[self.index[(j, i, p)] + offset] = c
        return rv

    def element(self, k):
        j, i, p = self.basis[k]
        return single(self.source, self.target, j, i, p, domain=self.domain)
