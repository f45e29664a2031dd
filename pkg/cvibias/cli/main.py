#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Command line front end: compare label files, predict bias from a
distribution, run audit scenarios and parameter sweeps. All tables
are written as CSV.
"""

import argparse
import io
import logging
import os
import sys

from slugify import slugify

from cvibias.__version__ import __version__
from cvibias.audit.runner import ExperimentRunner
from cvibias.audit.scenarios import gt2_configs, ratio_configs, scenario, scenario_names
from cvibias.audit.trend import TrendThresholds, assess_trend, detect_gt_bias
from cvibias.audit.agreement import RI_FAMILY
from cvibias.audit.enums import GroundTruthKind
from cvibias.codecs.csv_codec import (DEGENERATE_CELL, CurvesCsvCodec, GtBiasCsvCodec, PredictionCsvCodec,
                                      PStarCsvCodec, ScoresCsvCodec, VerdictCsvCodec)
from cvibias.codecs.json_codec import JsonCodec
from cvibias.exceptions import CviBiasException, InsufficientPoints, InvalidArgument
from cvibias.indices.enums import ExtraIndexId
from cvibias.indices.registry import ids as index_ids
from cvibias.indices.scores import evaluate_all
from cvibias.paircounts.contingency import contingency
from cvibias.paircounts.counts import pair_counts
from cvibias.partition.crisp import ClusterDistribution, cluster_distribution
from cvibias.partition.io import read_label_file
from cvibias.support import DEFAULT_SEED, default_object_count
from cvibias.theory.entropy import quadratic_entropy, vi2_from_contingency
from cvibias.theory.enums import VerdictSource
from cvibias.theory.predictors import gt1_verdict, gt2_threshold, gt2_verdict, predict_nc_bias
from cvibias.utils.utils import parse_float_list, parse_id_list

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1

GT2_SHAPE_TOLERANCE = 1e-9
INSUFFICIENT_STATUS = "insufficient"

CURVES_FILE = "curves.csv"
VERDICTS_FILE = "verdicts.csv"
GT_BIAS_FILE = "gt_bias.csv"
MANIFEST_FILE = "run.json"


class OutputSet(object):
    """Tracks the files and directories created by a command so they can be removed if it fails."""

    def __init__(self):
        self._paths = []
        self._dirs = []

    def makedirs(self, path):
        """Creates a directory and its missing parents, remembering the ones that did not exist."""

        missing = []
        current = os.path.abspath(path)

        while not os.path.isdir(current):
            missing.append(current)
            parent = os.path.dirname(current)

            if parent == current:
                break

            current = parent

        os.makedirs(path, exist_ok=True)
        self._dirs.extend(missing)

    def write(self, path, content):
        """Writes bytes to a path, or to stdout when the path is None."""

        if path is None:
            sys.stdout.write(content.decode("utf8"))
            sys.stdout.flush()
            return

        self._paths.append(path)

        with io.open(path, "wb") as fh:
            fh.write(content)

        logger.info("Wrote %s", path)

    def discard(self):
        """Removes every file written so far, then the directories created for them if empty."""

        for path in self._paths:
            try:
                os.remove(path)
                logger.info("Removed partial output %s", path)
            except OSError:
                pass

        for path in self._dirs:
            try:
                os.rmdir(path)
                logger.info("Removed directory %s", path)
            except OSError:
                pass

        self._paths = []
        self._dirs = []


def _thresholds(args):
    return TrendThresholds(rho=args.rho_threshold, flat=args.flat_threshold, noise=args.noise_factor)


def _curve_rows(curves, seed):
    for curve in curves:
        for point in curve.points:
            yield {
                "scenario": slugify(curve.label),
                "index": curve.index_id,
                "c": point.c,
                "mean": point.mean,
                "stderr": point.stderr,
                "trials": curve.trials_per_c,
                "degenerate": point.degenerate,
                "seed": seed
            }


def _run_configs(configs, args):
    """Runs every config; returns (config, runner, curves) triples."""

    results = []

    for cfg in configs:
        if args.indices:
            cfg = cfg.replace(indices=parse_id_list(args.indices))

        runner = ExperimentRunner(cfg, workers=args.workers)
        results.append((cfg, runner, runner.run()))

    return results


def _is_gt2_shaped(dist):
    rest = dist.sorted().probs[1:]
    return bool(rest) and max(rest) - min(rest) <= GT2_SHAPE_TOLERANCE


def cmd_compare(args, outputs):
    """Evaluates the indices on two label files."""

    part_u = read_label_file(args.file_u)
    part_v = read_label_file(args.file_v)
    table = contingency(part_u, part_v)
    scores = evaluate_all(pair_counts(table))
    requested = parse_id_list(args.indices) if args.indices else index_ids()
    rows = []

    for index_id in requested:
        if index_id == ExtraIndexId.VI2:
            continue

        score = scores.get(index_id)

        if score is None:
            raise InvalidArgument("Unknown index: {}".format(index_id))

        rows.append({"index": index_id, "value": DEGENERATE_CELL if score.is_degenerate else score.value})

    if args.vi2 or ExtraIndexId.VI2 in requested:
        rows.append({"index": ExtraIndexId.VI2, "value": vi2_from_contingency(table)})

    outputs.write(args.out, ScoresCsvCodec().to_bytes(rows))


def cmd_predict(args, outputs):
    """Predicts the bias status of the Rand index family for a ground truth distribution."""

    if args.labels:
        dist = cluster_distribution(read_label_file(args.labels))
    else:
        try:
            dist = ClusterDistribution(parse_float_list(args.dist))
        except ValueError as ex:
            raise InvalidArgument(str(ex))

    verdict = predict_nc_bias(dist)
    pstar = gt2_threshold(dist.r) if dist.r >= 2 and _is_gt2_shaped(dist) else None

    row = {
        "status": verdict.status,
        "source": verdict.source,
        "discriminant": verdict.discriminant,
        "h2": verdict.h2,
        "pstar": pstar
    }

    outputs.write(args.out, PredictionCsvCodec().to_bytes([row]))


def _analytic_verdicts(cfg, runner):
    verdicts = [predict_nc_bias(runner.ground_truth_distribution())]
    spec = cfg.gt_spec

    if spec.kind == GroundTruthKind.UNIFORM and spec.r >= 2:
        verdicts.append(gt1_verdict(spec.r))
    elif spec.kind == GroundTruthKind.SKEWED:
        verdicts.append(gt2_verdict(spec.r, spec.p1))

    return verdicts


def _verdict_rows(cfg, runner, curves, thresholds):
    name = slugify(cfg.label)
    rows = []
    statuses = {}

    for curve in curves:
        try:
            status = assess_trend(curve, thresholds=thresholds).status
        except InsufficientPoints:
            status = INSUFFICIENT_STATUS

        statuses[curve.index_id] = status
        rows.append({"scenario": name, "index": curve.index_id, "status": status,
                     "source": VerdictSource.EMPIRICAL})

    for verdict in _analytic_verdicts(cfg, runner):
        for index_id in RI_FAMILY:
            rows.append({"scenario": name, "index": index_id, "status": verdict.status,
                         "source": verdict.source, "discriminant": verdict.discriminant, "h2": verdict.h2})

    return rows, statuses


def cmd_audit(args, outputs):
    """Runs a preset scenario and writes curves, verdicts, GT bias report and manifest."""

    preset = scenario(args.name, n=args.n, trials=args.trials, seed=args.seed, full_scale=args.full_scale)
    thresholds = _thresholds(args)
    results = _run_configs(preset.configs, args)
    by_label = {cfg.label: curves for cfg, _, curves in results}
    seed = results[0][0].master_seed

    curve_rows = []
    verdict_rows = []

    for cfg, runner, curves in results:
        curve_rows.extend(_curve_rows(curves, cfg.master_seed))
        rows, statuses = _verdict_rows(cfg, runner, curves, thresholds)
        verdict_rows.extend(rows)

        for index_id, status in statuses.items():
            print("{} {} {}".format(slugify(cfg.label), index_id, status))

    bias_rows = []

    for label_a, label_b in preset.comparisons:
        report = detect_gt_bias(by_label[label_a], by_label[label_b], thresholds=thresholds)
        name = "{}--{}".format(slugify(label_a), slugify(label_b))

        for row in report.rows():
            row["scenario"] = name
            bias_rows.append(row)

        print("{} gt_bias {}".format(name, ",".join(report.flagged()) or "none"))

    if not args.out:
        return

    outputs.makedirs(args.out)

    manifest = {
        "scenario": preset.name,
        "version": __version__,
        "seed": seed,
        "thresholds": thresholds.to_dict(),
        "configs": [cfg.to_dict() for cfg, _, _ in results],
        "fingerprints": {cfg.label: cfg.fingerprint() for cfg, _, _ in results},
        "comparisons": [list(pair) for pair in preset.comparisons]
    }

    outputs.write(os.path.join(args.out, CURVES_FILE), CurvesCsvCodec().to_bytes(curve_rows))
    outputs.write(os.path.join(args.out, VERDICTS_FILE), VerdictCsvCodec().to_bytes(verdict_rows))
    outputs.write(os.path.join(args.out, GT_BIAS_FILE), GtBiasCsvCodec().to_bytes(bias_rows))
    outputs.write(os.path.join(args.out, MANIFEST_FILE), JsonCodec().to_bytes(manifest))


def _parse_ratios(raw):
    ratios = []

    for item in raw.split(","):
        item = item.strip()

        if not item:
            continue

        try:
            ratios.append([int(part) for part in item.split(":")])
        except ValueError:
            raise InvalidArgument("Invalid ratio: {}".format(item))

    if not ratios:
        raise InvalidArgument("No ratios given")

    return ratios


def cmd_sweep(args, outputs):
    """Runs one of the parameter sweeps."""

    n = args.n or default_object_count(args.full_scale)
    seed = DEFAULT_SEED if args.seed is None else args.seed

    if args.kind == "pstar_vs_r":
        if args.r_min < 2 or args.r_max < args.r_min:
            raise InvalidArgument("Invalid range of r: {}..{}".format(args.r_min, args.r_max))

        rows = [{"r": r, "pstar": gt2_threshold(r)} for r in range(args.r_min, args.r_max + 1)]
        outputs.write(args.out, PStarCsvCodec().to_bytes(rows))
        return

    if args.kind == "gt2_p1":
        p1_values = parse_float_list(args.p1) if args.p1 else None
        configs = gt2_configs(args.r or 4, p1_values or [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9],
                              n, trials=args.trials, seed=seed)
        results = _run_configs(configs, args)
        rows = [row for _, _, curves in results for row in _curve_rows(curves, seed)]
        outputs.write(args.out, CurvesCsvCodec().to_bytes(rows))
        return

    if args.kind == "h2_ratio":
        ratios = _parse_ratios(args.ratios or "1:1:1,2:1:1,4:1:1,7:2:1,8:1:1")
        configs = ratio_configs(ratios, n, trials=args.trials, seed=seed)
        results = _run_configs(configs, args)
        rows = []

        for _, runner, curves in results:
            h2 = quadratic_entropy(runner.ground_truth_distribution())

            for row in _curve_rows(curves, seed):
                row["h2"] = h2
                rows.append(row)

        outputs.write(args.out, CurvesCsvCodec(extra_fields=["h2"]).to_bytes(rows))
        return

    raise InvalidArgument("Unknown sweep: {}".format(args.kind))


def _add_run_flags(parser):
    parser.add_argument("--n", type=int, default=None, help="Number of objects (overrides the preset)")
    parser.add_argument("--seed", type=int, default=None,
                        help="Master seed (default {})".format(DEFAULT_SEED))
    parser.add_argument("--trials", type=int, default=None, help="Trials per cluster count (default 100)")
    parser.add_argument("--indices", default=None, help="Comma separated index ids (default: all 26)")
    parser.add_argument("--workers", type=int, default=None, help="Threads used to run trials")
    parser.add_argument("--full-scale", action="store_true", default=None,
                        help="Use N=100000 in the presets that follow that protocol")
    parser.add_argument("--rho-threshold", type=float, default=TrendThresholds.DEFAULT_RHO,
                        help="Spearman correlation needed for a monotone trend")
    parser.add_argument("--flat-threshold", type=float, default=TrendThresholds.DEFAULT_FLAT,
                        help="Relative range below which a trend is flat")
    parser.add_argument("--noise-factor", type=float, default=TrendThresholds.DEFAULT_NOISE,
                        help="Ranges within this many standard errors count as noise")


def build_parser():
    """Builds the argument parser."""

    parser = argparse.ArgumentParser(
        prog="cvibias",
        description="Number-of-clusters and ground truth bias of pair-counting cluster validity indices. "
                    "The default master seed is {}.".format(DEFAULT_SEED))

    parser.add_argument("--version", action="version", version="%(prog)s {}".format(__version__))
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    compare = subparsers.add_parser("compare", help="Evaluate the indices on two label files")
    compare.add_argument("file_u", help="Label file of the first partition (contingency rows)")
    compare.add_argument("file_v", help="Label file of the second partition (contingency columns)")
    compare.add_argument("--indices", default=None, help="Comma separated index ids (default: all 26)")
    compare.add_argument("--vi2", action="store_true", help="Also emit the quadratic variation of information")
    compare.add_argument("--out", default=None, help="Output CSV file (default: stdout)")
    compare.set_defaults(func=cmd_compare)

    predict = subparsers.add_parser("predict", help="Predict the Rand index bias from a ground truth")
    source = predict.add_mutually_exclusive_group(required=True)
    source.add_argument("--dist", help="Comma separated cluster probabilities")
    source.add_argument("--labels", help="Label file of the ground truth")
    predict.add_argument("--out", default=None, help="Output CSV file (default: stdout)")
    predict.set_defaults(func=cmd_predict)

    audit = subparsers.add_parser("audit", help="Run a preset scenario")
    audit.add_argument("name", help="Scenario name: {}".format(", ".join(scenario_names())))
    audit.add_argument("--out", default=None, help="Output directory for the CSV tables and run.json")
    _add_run_flags(audit)
    audit.set_defaults(func=cmd_audit)

    sweep = subparsers.add_parser("sweep", help="Run a parameter sweep")
    sweep.add_argument("kind", choices=["gt2_p1", "pstar_vs_r", "h2_ratio"])
    sweep.add_argument("--r", type=int, default=None, help="Ground truth clusters for gt2_p1 (default 4)")
    sweep.add_argument("--p1", default=None, help="Comma separated first cluster fractions for gt2_p1")
    sweep.add_argument("--r-min", type=int, default=2, help="Smallest r for pstar_vs_r")
    sweep.add_argument("--r-max", type=int, default=50, help="Largest r for pstar_vs_r")
    sweep.add_argument("--ratios", default=None, help="Comma separated size ratios such as 1:1:1,8:1:1")
    sweep.add_argument("--out", default=None, help="Output CSV file (default: stdout)")
    _add_run_flags(sweep)
    sweep.set_defaults(func=cmd_sweep)

    return parser


def _configure_logging(verbosity):
    level = logging.WARNING

    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG

    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def main(argv=None):
    """Entry point. Returns the process exit code."""

    parser = build_parser()
    args = parser.parse_args(argv)

    _configure_logging(args.verbose)

    outputs = OutputSet()

    try:
        args.func(args, outputs)
    except (CviBiasException, OSError) as ex:
        outputs.discard()
        sys.stderr.write("cvibias: error: {}\n".format(ex))
        return EXIT_ERROR
    except BaseException:
        outputs.discard()
        raise

    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
