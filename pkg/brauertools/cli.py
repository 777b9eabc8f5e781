# file: cli.py
# vim:fileencoding=utf-8:fdm=marker:ft=python
#
# Copyright © 2025 The brauertools authors. All rights reserved.
# SPDX-License-Identifier: BSD-2-Clause
# Created: 2025-10-12T11:24:09+0200
# Last modified: 2025-11-02T16:38:50+0100
"""
Work with Brauer configuration files (.bcf).

Validate and inspect configurations, flip them at polygons, build the
mutation complex and verify that its endomorphism algebra is the algebra of
the flipped configuration.
"""

import argparse
import json
import logging
import sys

from . import __version__
from . import configuration as bc
from . import corpus
from . import flip as fl
from . import mutation as mu
from . import oracle as orc
from . import presentation as pr
from . import report
from .utils import StepAction

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _write(text, out=None):
    if out:
        with open(out, "w") as f:
            f.write(text)
        logging.info(f"wrote {out}")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _matrix_text(ids, rows):
    width = max([len(str(x)) for r in rows for x in r] + [len(i) for i in ids])
    lines = [" " * width + " " + " ".join(i.rjust(width) for i in ids)]
    for i, r in zip(ids, rows):
        lines.append(i.rjust(width) + " " + " ".join(str(x).rjust(width) for x in r))
    return "\n".join(lines)


def cmd_validate(args):
    rv = EXIT_OK
    for fn in args.file:
        try:
            bc.readbcf(fn)
        except (ValueError, OSError) as e:
            logging.error(f"{fn}: {e}")
            rv = EXIT_FAIL
            continue
        print(f"{fn}: valid")
    return rv


def cmd_info(args):
    cfg = bc.readbcf(args.file)
    ids = [p.polygon_id for p in cfg.polygons]
    print(f"# Information for: {args.file}")
    print(f"# Generated by brauer {__version__}")
    print(bc.summary(cfg))
    print("Cartan matrix:")
    print(_matrix_text(ids, pr.cartan_matrix(cfg)))
    for U in ids:
        left = "yes" if fl.satisfies_condition_E(cfg, U, fl.LEFT) else "no"
        right = "yes" if fl.satisfies_condition_E(cfg, U, fl.RIGHT) else "no"
        print(
            f"P_{U}: dimension {pr.projective_dimension(cfg, U)}, "
            f"condition (E) left {left}, right {right}"
        )
    print(f"total dimension: {pr.total_dimension(cfg)}")
    return EXIT_OK


def cmd_quiver(args):
    cfg = bc.readbcf(args.file)
    _write(pr.quiver_dot(cfg) if args.format == "dot" else pr.quiver_text(cfg))
    return EXIT_OK


def cmd_relations(args):
    _write(pr.relations_text(bc.readbcf(args.file)))
    return EXIT_OK


def cmd_check_e(args):
    cfg = bc.readbcf(args.file)
    res = fl.satisfies_condition_E(cfg, args.polygon, args.direction)
    if res:
        print(f"{args.polygon}: condition (E) holds for a {args.direction} flip")
        return EXIT_OK
    print(
        f"{args.polygon}: condition (E) fails for a {args.direction} flip; "
        f"witness angle {res.angle} in polygon {res.offending}"
    )
    return EXIT_FAIL


def cmd_flip(args):
    cfg = bc.readbcf(args.file)
    steps = list(getattr(args, "steps", None) or [])
    if args.polygon:
        steps.insert(0, (args.polygon, args.direction))
    if not steps:
        logging.error("no flip requested; use --polygon or -l/-r")
        return EXIT_USAGE
    if args.dump:
        for V, direction in steps[:1]:
            base = cfg if direction == fl.LEFT else bc.reverse(cfg)
            print(fl.decomposition_text(fl.angle_decomposition(base, V)))
    result = fl.flip_sequence(cfg, steps)
    desc = ", ".join(f"{d} flip at {V}" for V, d in steps)
    _write(bc.text(result, f"{desc} of {args.file}"), args.output)
    return EXIT_OK


def cmd_mutate(args):
    cfg = bc.readbcf(args.file)
    T = mu.mutation_complex(cfg, args.polygon)
    summands = " ⊕ ".join(f"P_{U}" for U in T.zero) or "0"
    print(f"T_{args.polygon}: P_{args.polygon} -> {summands}")
    chi = mu.chi(cfg, args.polygon)
    print("multiplicities: " + ", ".join(f"{U}:{n}" for U, n in chi.items() if n))
    if args.dump_complex:
        print(mu.complex_text(cfg, T))
    ids = [p.polygon_id for p in cfg.polygons]
    print("dimension grid of End(T):")
    print(_matrix_text(ids, mu.endomorphism_grid(cfg, args.polygon)))
    return EXIT_OK


def cmd_verify(args):
    cfg = bc.readbcf(args.file)
    if args.level == "dims":
        rep = mu.verify_dim_equalities(cfg, args.polygon)
    elif args.level == "homotopy":
        rep = orc.verify_pretilting(cfg, args.polygon)
        rep.extend(orc.verify_oracle_agreement(cfg, args.polygon))
        rep.title = f"homotopy checks for the mutation at {args.polygon}"
    else:
        rep = orc.verify_phi(cfg, args.polygon, args.prime)
    if args.json:
        print(report.as_json(rep))
    else:
        print(report.text(rep))
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_iso(args):
    first, second = bc.readbcf(args.file[0]), bc.readbcf(args.file[1])
    beta = bc.are_isomorphic(first, second)
    if beta is None:
        print("not isomorphic")
        return EXIT_FAIL
    print("isomorphic")
    for h in first.angles:
        print(f"{h} -> {beta[h]}")
    return EXIT_OK


def cmd_random(args):
    cfg = bc.random_configuration(
        args.angles, args.min_size, args.max_size, args.max_mult, args.seed
    )
    _write(bc.text(cfg, f"random configuration, seed {args.seed}"), args.output)
    return EXIT_OK


def cmd_corpus(args):
    result = corpus.run_corpus(
        args.samples, args.max_angles, args.seed, args.jobs, args.artifacts
    )
    if args.json:
        print(json.dumps({"counts": result.counts, "passed": result.passed}, indent=2))
    else:
        print(corpus.summary_text(result))
    return EXIT_OK if result.passed else EXIT_FAIL


def parser():
    """Build the argument parser."""
    p = argparse.ArgumentParser(prog="brauer", description=__doc__)
    p.add_argument("-v", "--version", action="version", version=__version__)
    p.add_argument(
        "--log",
        default="warning",
        choices=["debug", "info", "warning", "error"],
        help="logging level (defaults to 'warning')",
    )
    sub = p.add_subparsers(dest="command", metavar="command")
    s = sub.add_parser("validate", help="check configuration files")
    s.add_argument("file", nargs="+", help="one or more file names")
    s.set_defaults(func=cmd_validate)
    s = sub.add_parser("info", help="statistics and Cartan matrix")
    s.add_argument("file")
    s.set_defaults(func=cmd_info)
    s = sub.add_parser("quiver", help="print the quiver")
    s.add_argument("--format", choices=["dot", "text"], default="text")
    s.add_argument("file")
    s.set_defaults(func=cmd_quiver)
    s = sub.add_parser("relations", help="print the relations")
    s.add_argument("file")
    s.set_defaults(func=cmd_relations)
    s = sub.add_parser("check-e", help="decide condition (E) at a polygon")
    s.add_argument("--polygon", required=True)
    s.add_argument("--direction", choices=[fl.LEFT, fl.RIGHT], default=fl.LEFT)
    s.add_argument("file")
    s.set_defaults(func=cmd_check_e)
    s = sub.add_parser("flip", help="flip at one or more polygons")
    s.add_argument("--polygon", help="polygon to flip at")
    s.add_argument("--direction", choices=[fl.LEFT, fl.RIGHT], default=fl.LEFT)
    s.add_argument("-l", "--left", action=StepAction, dest="steps", help="left flip at polygon")
    s.add_argument("-r", "--right", action=StepAction, dest="steps", help="right flip at polygon")
    s.add_argument("-o", "--output", help="output file (defaults to standard output)")
    s.add_argument("--dump", action="store_true", help="print the angle decomposition")
    s.add_argument("file")
    s.set_defaults(func=cmd_flip)
    s = sub.add_parser("mutate", help="build the mutation complex")
    s.add_argument("--polygon", required=True)
    s.add_argument("--dump-complex", action="store_true", help="print the differential")
    s.add_argument("file")
    s.set_defaults(func=cmd_mutate)
    s = sub.add_parser("verify", help="verify the flip against the mutation")
    s.add_argument("--polygon", required=True)
    s.add_argument("--level", choices=["dims", "homotopy", "phi"], default="dims")
    s.add_argument("--prime", type=int, help="prime for the coefficient field")
    s.add_argument("--json", action="store_true", help="write the report as JSON")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)
    s = sub.add_parser("iso", help="test two configurations for isomorphism")
    s.add_argument("file", nargs=2)
    s.set_defaults(func=cmd_iso)
    s = sub.add_parser("random", help="generate a random configuration")
    s.add_argument("--angles", type=int, required=True)
    s.add_argument("--min-size", type=int, default=2)
    s.add_argument("--max-size", type=int)
    s.add_argument("--max-mult", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_random)
    s = sub.add_parser("corpus", help="check invariants on random configurations")
    s.add_argument("--samples", type=int, default=corpus.DEFAULT_SAMPLES)
    s.add_argument("--max-angles", type=int, default=corpus.DEFAULT_MAX_ANGLES)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--artifacts", help="directory for counterexamples")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_corpus)
    return p


def main(argv):
    """
    Entry point for brauer.

    Arguments:
        argv: command line arguments (without program name!)

    Returns:
        The exit code.
    """
    p = parser()
    try:
        args = p.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    logging.basicConfig(
        level=getattr(logging, args.log.upper(), None),
        format="%(levelname)s: %(message)s",
    )
    if not getattr(args, "command", None):
        p.print_help()
        return EXIT_OK
    try:
        return args.func(args)
    except fl.ConditionEError as e:
        logging.error(f"{e}")
        return EXIT_FAIL
    except (ValueError, OSError) as e:
        fn = getattr(args, "file", "")
        logging.error(f"{fn}: {e}")
        return EXIT_USAGE
