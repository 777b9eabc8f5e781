# file: mutation.py
# vim:fileencoding=utf-8:fdm=marker:ft=python
#
# Copyright © 2025 The brauertools authors. All rights reserved.
# SPDX-License-Identifier: BSD-2-Clause
# Created: 2025-09-29T08:40:26+0200
# Last modified: 2025-11-01T19:21:07+0100
"""Two-term complexes, the left mutation of A_Γ at a polygon and its dimensions.

The complex T_V has P_V in degree −1 and one summand P_[p(e)] in degree 0
for every angle e in H2 ⊔ H3. The component of the differential for e is
the special path from p(e) to e.
"""

from dataclasses import dataclass
import logging

from sympy.polys.domains import QQ

from . import configuration as bc
from . import flip as fl
from . import presentation as pr
from .report import VerificationReport

EULER = "euler"
DISPLAYED = "displayed"


@dataclass(frozen=True)
class TwoTermComplex:
    """
    A complex T⁻¹ → T⁰ of projectives.

    For T_V, labels holds the angle e of each degree 0 summand.
    """

    neg: tuple
    zero: tuple
    differential: pr.ModuleMap
    labels: tuple = ()


def stalk(cfg, U, domain=QQ):
    """Return P_U as a complex concentrated in degree 0."""
    if U not in cfg.polygon_by_id:
        raise bc.ConfigurationError(f"unknown polygon '{U}'")
    return TwoTermComplex((), (U,), pr.zero_map((), (U,), domain))


def mutation_complex(cfg, V, domain=QQ):
    """
    Build the complex T_V.

    Condition (E) is not needed.

    Arguments:
        cfg: BrauerConfiguration.
        V: Polygon id.
        domain: Field of the coefficients.

    Returns:
        A TwoTermComplex with neg = (V,).
    """
    _, h2, h3 = fl.angle_classes(cfg, V)
    labels = tuple(e for e in cfg.angles if e in set(h2 + h3))
    zero, blocks = [], {}
    for k, e in enumerate(labels):
        p, c = fl.predecessor_outside(cfg, V, e)
        zero.append(bc.polygon_of(cfg, p))
        blocks[(k, 0)] = {pr.path(cfg, p, c): domain.one}
    d = pr.ModuleMap((V,), tuple(zero), blocks, domain)
    logging.debug(f"T_{V}: {len(zero)} summand(s) in degree 0")
    return TwoTermComplex((V,), tuple(zero), d, labels)


def chi(cfg, V):
    """Return the multiplicity of every P_U as a summand of the degree 0 part of T_V."""
    rv = {p.polygon_id: 0 for p in cfg.polygons}
    for U in mutation_complex(cfg, V).zero:
        rv[U] += 1
    return rv


def summands(cfg, V, domain=QQ):
    """Return the indecomposable summands of the tilting complex, by polygon."""
    return {
        p.polygon_id: (
            mutation_complex(cfg, V, domain) if p.polygon_id == V else stalk(cfg, p.polygon_id, domain)
        )
        for p in cfg.polygons
    }


def direct_sum(complexes, domain=QQ):
    """Return the direct sum of two-term complexes."""
    neg, zero, blocks, labels = [], [], {}, []
    for T in complexes:
        rn, rz = len(neg), len(zero)
        for (j, i), comb in T.differential.blocks.items():
            blocks[(rz + j, rn + i)] = dict(comb)
        neg += T.neg
        zero += T.zero
        labels += T.labels if T.labels else [None] * len(T.zero)
    d = pr.ModuleMap(tuple(neg), tuple(zero), blocks, domain)
    return TwoTermComplex(tuple(neg), tuple(zero), d, tuple(labels))


def tilting_complex(cfg, V, domain=QQ):
    """Return T = T_V ⊕ ⊕_{U≠V} P_U as one complex."""
    parts = summands(cfg, V, domain)
    return direct_sum([parts[p.polygon_id] for p in cfg.polygons], domain)


def occ_prime(cfg, V, vertex):
    """
    Count the angles e in H2 ⊔ H3 whose bar(p(e)) lies at vertex.

    Raises:
        ConditionEError if V violates condition (E).
    """
    dec = fl.angle_decomposition(cfg, V)
    return sum(
        1 for e in dec.h2 + dec.h3 if bc.vertex_of(cfg, bc.bar(cfg, dec.p_map[e])) == vertex
    )


def verify_occ_lemma(cfg, V):
    """
    Check Σ_U χ(U)·occ(v,U) = occ(v,V) + occ′(v,V) at every vertex not inside V.

    Returns:
        A VerificationReport.
    """
    rv = VerificationReport(f"occurrence identity at {V}")
    counts = chi(cfg, V)
    members = set(cfg.polygon_by_id[V].angles)
    for v in cfg.vertices:
        if all(h in members for h in v.cycle):
            continue
        lhs = sum(n * bc.occurrences(cfg, v.vertex_id, U) for U, n in counts.items() if n)
        rhs = bc.occurrences(cfg, v.vertex_id, V) + occ_prime(cfg, V, v.vertex_id)
        rv.add(f"Σχ(U)·occ({v.vertex_id},U) = occ + occ′", lhs, rhs)
    return rv


def _pair(cfg, A, B):
    return sum(pr.hom_dim(cfg, a, b) for a in A for b in B)


def two_term_hom_dim(cfg, T, U, form=EULER):
    """
    Evaluate the Euler form of two two-term complexes.

    Arguments:
        cfg: BrauerConfiguration.
        T: TwoTermComplex.
        U: TwoTermComplex.
        form: EULER for (T⁰,U⁰) − (T⁻¹,U⁰) − (T⁰,U⁻¹) + (T⁻¹,U⁻¹); DISPLAYED
            for the variant (T⁰,U⁰) − 2(T⁻¹,U⁰) + (T⁻¹,U⁻¹).

    Returns:
        An integer. For summands of a tilting complex the Euler form is
        dim Hom(T, U) in the homotopy category.
    """
    if form == DISPLAYED:
        return (
            _pair(cfg, T.zero, U.zero)
            - 2 * _pair(cfg, T.neg, U.zero)
            + _pair(cfg, T.neg, U.neg)
        )
    if form != EULER:
        raise ValueError(f"unknown form '{form}'")
    return (
        _pair(cfg, T.zero, U.zero)
        - _pair(cfg, T.neg, U.zero)
        - _pair(cfg, T.zero, U.neg)
        + _pair(cfg, T.neg, U.neg)
    )


def endomorphism_grid(cfg, V):
    """
    Return the dimension grid of the endomorphism algebra of the mutation at V.

    Entry [a][b] is dim Hom(T_a, T_b) for polygons in file order.
    """
    parts = summands(cfg, V)
    ids = [p.polygon_id for p in cfg.polygons]
    return [[two_term_hom_dim(cfg, parts[a], parts[b]) for b in ids] for a in ids]


def verify_dim_equalities(cfg, V):
    """
    Compare Hom dimensions of the mutation with the Cartan matrix of the flip.

    Arguments:
        cfg: BrauerConfiguration.
        V: Polygon id satisfying condition (E).

    Returns:
        A VerificationReport.

    Raises:
        ConditionEError if V violates condition (E).
    """
    flipped = fl.flip(cfg, V, fl.LEFT).configuration
    rv = VerificationReport(f"dimension identities for the flip at {V}")
    parts = summands(cfg, V)
    TV = parts[V]
    others = [p.polygon_id for p in cfg.polygons if p.polygon_id != V]
    X = direct_sum([parts[U] for U in others])
    rv.add("(T_V, T_V) = (P′_V, P′_V)", two_term_hom_dim(cfg, TV, TV), pr.hom_dim(flipped, V, V))
    rv.add(
        "(T_V, X) = (P′_V, Y)",
        two_term_hom_dim(cfg, TV, X),
        sum(pr.hom_dim(flipped, V, U) for U in others),
    )
    rv.add(
        "(X, T_V) = (Y, P′_V)",
        two_term_hom_dim(cfg, X, TV),
        sum(pr.hom_dim(flipped, U, V) for U in others),
    )
    rv.add(
        "(X, X) = (Y, Y)",
        two_term_hom_dim(cfg, X, X),
        sum(pr.hom_dim(flipped, U, W) for U in others for W in others),
    )
    grid, cartan = endomorphism_grid(cfg, V), pr.cartan_matrix(flipped)
    ids = [p.polygon_id for p in cfg.polygons]
    bad = [
        f"({ids[a]},{ids[b]}): {grid[a][b]} ≠ {cartan[a][b]}"
        for a in range(len(ids))
        for b in range(len(ids))
        if grid[a][b] != cartan[a][b]
    ]
    rv.add(
        "End(T) grid = Cartan matrix of the flip",
        sum(map(sum, grid)),
        sum(map(sum, cartan)),
        not bad,
        "; ".join(bad[:3]),
    )
    h1, h2, h3 = fl.angle_classes(cfg, V)
    rv.add("Σχ(U) = #H2 + #H3", sum(chi(cfg, V).values()), len(h2) + len(h3))
    for v in cfg.vertices:
        fixed = sum(1 for e in h1 if bc.vertex_of(cfg, e) == v.vertex_id)
        rv.add(
            f"occ′({v.vertex_id},{V}) + #H1 at {v.vertex_id} = occ in the flip",
            occ_prime(cfg, V, v.vertex_id) + fixed,
            bc.occurrences(flipped, v.vertex_id, V),
        )
    rv.extend(verify_occ_lemma(cfg, V))
    return rv


def complex_text(cfg, T):
    """Return a readable description of a two-term complex."""

    def summand_list(ids):
        return " ⊕ ".join(f"P_{U}" for U in ids) if ids else "0"

    lines = [f"degree -1: {summand_list(T.neg)}", f"degree 0: {summand_list(T.zero)}"]
    for (j, i), comb in sorted(T.differential.blocks.items()):
        label = T.labels[j] if j < len(T.labels) and T.labels[j] else str(j)
        terms = " + ".join(
            (f"{c}·" if c != T.differential.domain.one else "") + pr.path_text(cfg, p)
            for p, c in comb.items()
        )
        lines.append(f"d[{label}]: P_{T.neg[i]} -> P_{T.zero[j]}: {terms}")
    return "\n".join(lines)
