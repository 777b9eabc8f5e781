# file: corpus.py
# vim:fileencoding=utf-8:fdm=marker:ft=python
#
# Copyright © 2025 The brauertools authors. All rights reserved.
# SPDX-License-Identifier: BSD-2-Clause
# Created: 2025-10-11T16:52:20+0200
# Last modified: 2025-11-02T10:31:44+0100
"""Run the invariant checks over seeded random configurations."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import logging
import os
import random

from . import configuration as bc
from . import flip as fl
from . import linalg as la
from . import mutation as mu
from . import oracle as orc
from . import presentation as pr
from .utils import outname

DEFAULT_SAMPLES = 200
DEFAULT_MAX_ANGLES = 24
ORACLE_MAX_ANGLES = 12
# Reported, but not required to pass.
INFORMATIONAL = {"right flip undoes left flip"}


@dataclass
class CorpusResult:
    """Counts of passed and run checks, by check name."""

    counts: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)

    def record(self, name, passed):
        done = self.counts.setdefault(name, [0, 0])
        done[0] += bool(passed)
        done[1] += 1

    def merge(self, other):
        for name, (p, t) in other.counts.items():
            done = self.counts.setdefault(name, [0, 0])
            done[0] += p
            done[1] += t
        self.counterexamples += other.counterexamples

    @property
    def passed(self):
        return all(p == t for n, (p, t) in self.counts.items() if n not in INFORMATIONAL)


def sample(seed, max_angles=DEFAULT_MAX_ANGLES):
    """
    Generate the configuration for one corpus seed.

    Every fourth seed gives a Brauer graph.
    """
    rng = random.Random(seed)
    if seed % 4 == 0:
        n = 2 * rng.randint(1, max(1, max_angles // 2))
        return bc.random_configuration(n, 2, 2, 1, seed)
    n = rng.randint(2, max_angles)
    # Only an even number of angles splits into edges.
    choices = [3, 4, n] + ([2] if n % 2 == 0 else [])
    max_size = min(rng.choice(choices), n)
    return bc.random_configuration(n, 2, max_size, rng.randint(1, 2), seed)


def _structure_checks(cfg, rv):
    """Checks that only need the configuration and its Cartan matrix."""
    rev = bc.reverse(cfg)
    rv.record(
        "reverse keeps val, occ, 𝔪 and classes",
        all(
            bc.valency(rev, v.vertex_id) == len(v.cycle)
            and bc.multiplicity(rev, v.vertex_id) == v.multiplicity
            and bc.classify_vertex(rev, v.vertex_id) == bc.classify_vertex(cfg, v.vertex_id)
            and all(
                bc.occurrences(rev, v.vertex_id, p.polygon_id)
                == bc.occurrences(cfg, v.vertex_id, p.polygon_id)
                for p in cfg.polygons
            )
            for v in cfg.vertices
        )
        and all(
            bc.classify_polygon(rev, p.polygon_id) == bc.classify_polygon(cfg, p.polygon_id)
            for p in cfg.polygons
        ),
    )
    edge_angles = [h for p in cfg.polygons if len(p.angles) == 2 for h in p.angles]
    rv.record(
        "bar is an involution without fixed points",
        all(bc.bar(cfg, h) != h and bc.bar(cfg, bc.bar(cfg, h)) == h for h in edge_angles),
    )
    rev_iso = bc.are_isomorphic(cfg, rev)
    back_iso = bc.are_isomorphic(rev, cfg)
    rv.record(
        "isomorphism search is symmetric",
        (rev_iso is None) == (back_iso is None)
        and (rev_iso is None or bc.is_isomorphism(cfg, rev, rev_iso))
        and (back_iso is None or bc.is_isomorphism(rev, cfg, back_iso)),
    )
    self_iso = bc.are_isomorphic(cfg, cfg)
    rv.record(
        "isomorphic to itself",
        self_iso is not None and bc.is_isomorphism(cfg, cfg, self_iso),
    )
    cartan = pr.cartan_matrix(cfg)
    n = len(cartan)
    rv.record(
        "Cartan matrix symmetric with diagonal ≥ 2",
        all(cartan[i][j] == cartan[j][i] for i in range(n) for j in range(n))
        and all(cartan[i][i] >= 2 for i in range(n)),
    )
    zero = set(pr.quiver(cfg).bc2)
    ok = True
    for a in cfg.angles:
        target = bc.polygon_of(cfg, bc.sigma(cfg, a))
        for b in cfg.polygon_by_id[target].angles:
            nonzero = pr.multiply(cfg, pr.arrow(cfg, a), pr.arrow(cfg, b)) is not None
            if pr.is_subpath_pair(cfg, a, b) == ((a, b) in zero) or nonzero != ((a, b) not in zero):
                ok = False
    rv.record("length two paths are special or zero", ok)


def _prime_field_check(cfg, V, rv):
    prime = orc.select_prime(cfg)[0]
    K = la.field(prime)
    TQ = mu.mutation_complex(cfg, V)
    TK = mu.mutation_complex(cfg, V, K)
    rv.record(
        "dimensions over GF(p) = dimensions over QQ",
        all(
            orc.hom_chain_dim(cfg, TQ, TQ, s) == orc.hom_chain_dim(cfg, TK, TK, s, K)
            for s in (-1, 0, 1)
        ),
    )


def check_configuration(cfg, oracle=True):
    """
    Run all invariant checks on one configuration.

    Arguments:
        cfg: BrauerConfiguration.
        oracle: Also run the homotopy oracle checks.

    Returns:
        A CorpusResult.
    """
    rv = CorpusResult()
    rv.record("validate", bc.validate(cfg).ok)
    rv.record("Σ val = #H", sum(len(v.cycle) for v in cfg.vertices) == len(cfg.angles))
    rv.record("Cartan matrix = basis count", pr.cartan_matrix(cfg) == orc.brute_force_cartan(cfg))
    _structure_checks(cfg, rv)
    for p in cfg.polygons:
        V = p.polygon_id
        if oracle:
            rv.record("pretilting", orc.verify_pretilting(cfg, V).passed)
            _prime_field_check(cfg, V, rv)
        if not fl.satisfies_condition_E(cfg, V):
            if bc.is_brauer_graph(cfg):
                rv.record("condition (E) for Brauer graphs", False)
            continue
        if bc.is_brauer_graph(cfg):
            rv.record("condition (E) for Brauer graphs", True)
        dec = fl.angle_decomposition(cfg, V)
        rows = dec.h1 + dec.h2 + dec.h3 + dec.h4 + dec.h5
        rv.record("flip rows cover every angle once", sorted(rows) == sorted(cfg.angles))
        flipped = fl.flip(cfg, V).configuration
        rv.record("flip is valid", bc.validate(flipped).ok)
        rv.record("dimension identities", mu.verify_dim_equalities(cfg, V).passed)
        if oracle:
            rv.record("Euler form = homotopy dimension", orc.verify_oracle_agreement(cfg, V).passed)
            try:
                verdict = orc.verify_phi(cfg, V).verdict
            except orc.OracleError as e:
                logging.error(f"φ at {V}: {e}")
                verdict = "FAIL"
            rv.record("φ is an isomorphism", verdict == "isomorphism")
        if fl.satisfies_condition_E(flipped, V, fl.RIGHT):
            back = fl.flip(flipped, V, fl.RIGHT).configuration
            same = bc.are_isomorphic(back, cfg) is not None
            rv.record("right flip undoes left flip", same)
            if not same:
                rv.counterexamples.append((cfg, V))
        else:
            rv.record("right flip undoes left flip", False)
            rv.counterexamples.append((cfg, V))
    return rv


def run_corpus(
    samples=DEFAULT_SAMPLES,
    max_angles=DEFAULT_MAX_ANGLES,
    seed=0,
    jobs=1,
    artifacts=None,
    oracle_max_angles=ORACLE_MAX_ANGLES,
):
    """
    Check the invariants on a seeded corpus.

    Arguments:
        samples: Number of configurations.
        max_angles: Largest number of angles.
        seed: Seed of the corpus.
        jobs: Number of worker threads.
        artifacts: Directory to save counterexamples in, or None.
        oracle_max_angles: Only run the oracle on configurations this small.

    Returns:
        A CorpusResult, merged in seed order.
    """
    master = random.Random(seed)
    seeds = [master.getrandbits(64) for _ in range(samples)]

    def work(s):
        cfg = sample(s, max_angles)
        logging.debug(f"seed {s}: {len(cfg.angles)} angles")
        return check_configuration(cfg, len(cfg.angles) <= oracle_max_angles)

    rv = CorpusResult()
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        for k, res in enumerate(pool.map(work, seeds)):
            rv.merge(res)
            if (k + 1) % 50 == 0:
                logging.info(f"checked {k + 1} of {samples} configurations")
    if artifacts and rv.counterexamples:
        os.makedirs(artifacts, exist_ok=True)
        for n, (cfg, V) in enumerate(rv.counterexamples):
            name = os.path.join(artifacts, outname(f"counterexample-{n}", ".bcf", f"-{V}"))
            with open(name, "w") as f:
                f.write(bc.text(cfg, f"right flip does not undo left flip at {V}"))
            logging.warning(f"counterexample saved as {name}")
    return rv


def summary_text(result):
    """Return one line per check."""
    lines = [
        f"{name}: {p}/{t} {'ok' if p == t else 'FAILED'}" for name, (p, t) in result.counts.items()
    ]
    lines.append(f"counterexamples: {len(result.counterexamples)}")
    return "\n".join(lines)
