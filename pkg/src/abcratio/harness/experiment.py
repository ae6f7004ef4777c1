"""
Ratio experiments over uniform or PrefLib data.

An experiment builds a list of instances, keeps those on which no committee
is a good compromise between AV and CC (AV-ratio of CC and CC-ratio of AV
both at most the threshold), and records both ratios of every configured
rule on every kept instance.

Config files are flat ``key = value`` text; ``#`` starts a comment::

    dataset = uniform          # or preflib
    paths = a.soi, b.soc       # preflib only
    k = 5                      # single value, list "3,4" or range "3-7"
    rules = AV, CC, seq-CC, PAV, seq-PAV, seq-Phragmen, Monroe, 1.5-Geometric, 2-Geometric, 5-Geometric
    seed = 1
    num_profiles = 500
    m = 20
    n = 50
    ballot_sizes = 2-5
    threshold = 0.9
    budget = 10000000
    workers = 1
"""

import csv
import io
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from abcratio.core import (
    BudgetExceeded,
    DegenerateProfileError,
    DomainError,
    InfeasibleError,
    ParameterError,
    enumeration_budget,
)
from abcratio.exact import thiele_scan
from abcratio.guarantees import av_ratio, cc_ratio
from abcratio.harness.datasets import uniform_dataset
from abcratio.harness.preflib import read_preflib, top_i_approvals
from abcratio.harness.profile_io import ParseError
from abcratio.rules import EXPERIMENT_RULES, Rule, compute, parse_rule

log = logging.getLogger(__name__)

CSV_HEADER = ["instance", "rule", "k", "av_ratio_exact", "av_ratio", "cc_ratio_exact", "cc_ratio"]
SUMMARY_HEADER = ["rule", "ratio", "count", "min", "q1", "median", "q3", "max"]


@dataclass
class ExperimentConfig:
    dataset: str = "uniform"
    paths: tuple = ()
    ks: tuple = (5,)
    rules: tuple = EXPERIMENT_RULES
    seed: int = 0
    num_profiles: int = 500
    m: int = 20
    n: int = 50
    ballot_sizes: tuple = (2, 5)
    threshold: float = 0.9
    budget: int = None
    workers: int = 1

    def __post_init__(self):
        if self.dataset not in ("uniform", "preflib"):
            raise ParameterError(f"dataset must be 'uniform' or 'preflib', got {self.dataset!r}")
        if self.dataset == "preflib" and not self.paths:
            raise ParameterError("a preflib experiment needs at least one path")
        self.ks = tuple(self.ks)
        if not self.ks or any(k < 1 for k in self.ks):
            raise ParameterError("committee sizes must be a nonempty set of positive integers")
        self.rules = tuple(parse_rule(r) for r in self.rules)
        if not self.rules:
            raise ParameterError("at least one rule is required")
        threshold = Fraction(str(self.threshold)) if isinstance(self.threshold, float) else Fraction(self.threshold)
        if not 0 < threshold <= 1:
            raise ParameterError(f"threshold must lie in (0, 1], got {self.threshold}")
        self.threshold = threshold
        if self.num_profiles < 1 or self.workers < 1:
            raise ParameterError("num_profiles and workers must be positive")
        if self.seed < 0 or self.seed >= 1 << 64:
            raise ParameterError("seed must be a 64-bit unsigned integer")
        if self.budget is None:
            self.budget = enumeration_budget()


def _int_list(value):
    out = []
    for part in value.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return tuple(out)


def parse_config(text):
    """Parse the key=value config format into an :class:`ExperimentConfig`."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ParseError(f"expected 'key = value', got {raw.strip()!r}", lineno)
        key, value = key.strip().lower(), value.strip()
        try:
            if key == "dataset":
                values["dataset"] = value.lower()
            elif key == "paths":
                values["paths"] = tuple(p.strip() for p in value.split(",") if p.strip())
            elif key in ("k", "ks"):
                values["ks"] = _int_list(value)
            elif key == "rules":
                values["rules"] = tuple(r.strip() for r in value.split(",") if r.strip())
            elif key == "ballot_sizes":
                sizes = _int_list(value)
                values["ballot_sizes"] = (min(sizes), max(sizes))
            elif key == "threshold":
                values["threshold"] = Fraction(value)
            elif key in ("seed", "num_profiles", "m", "n", "budget", "workers"):
                values[key] = int(value)
            else:
                raise ParseError(f"unknown key {key!r}", lineno)
        except (ValueError, DomainError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"bad value for {key}: {exc}", lineno) from None
    return ExperimentConfig(**values)


def load_config(path):
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())


@dataclass(frozen=True)
class ExperimentRow:
    instance: str
    rule: Rule
    k: int
    av_ratio: Fraction
    cc_ratio: Fraction

    def csv_fields(self):
        return [
            self.instance,
            str(self.rule),
            self.k,
            f"{self.av_ratio.numerator}/{self.av_ratio.denominator}",
            f"{float(self.av_ratio):.12f}",
            f"{self.cc_ratio.numerator}/{self.cc_ratio.denominator}",
            f"{float(self.cc_ratio):.12f}",
        ]


@dataclass(frozen=True)
class Stats:
    count: int
    min: float
    q1: float
    median: float
    q3: float
    max: float


@dataclass
class ExperimentResult:
    rows: list
    summary: dict
    total: int = 0
    kept: int = 0
    skipped: list = field(default_factory=list)

    def to_csv(self):
        return rows_to_csv(self.rows)

    def summary_csv(self):
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(SUMMARY_HEADER)
        for rule, per_ratio in self.summary.items():
            for ratio, s in per_ratio.items():
                writer.writerow(
                    [rule, ratio, s.count] + [f"{v:.12f}" for v in (s.min, s.q1, s.median, s.q3, s.max)]
                )
        return out.getvalue()


def rows_to_csv(rows):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_fields())
    return out.getvalue()


def _filter_ratios(profile, k, budget):
    """(AV-ratio of CC, CC-ratio of AV) plus both optima."""
    scan = thiele_scan(profile, k, [Rule("AV"), Rule("CC")], budget)
    av_opt, av_winners = scan[Rule("AV")]
    cc_opt, cc_winners = scan[Rule("CC")]
    return (
        av_ratio(profile, k, cc_winners, av_opt),
        cc_ratio(profile, k, av_winners, cc_opt),
        (av_opt, cc_opt),
    )


def compromise_filter(profile, k, threshold=0.9, budget=None):
    """
    Keep the profile iff the AV-ratio of CC and the CC-ratio of AV are both
    at most ``threshold``. Degenerate profiles are dropped.
    """
    threshold = Fraction(str(threshold)) if isinstance(threshold, float) else Fraction(threshold)
    try:
        av_of_cc, cc_of_av, _ = _filter_ratios(profile, k, budget)
    except DegenerateProfileError as exc:
        log.info("profile filtered out: %s", exc)
        return False
    return av_of_cc <= threshold and cc_of_av <= threshold


def _evaluate(task):
    """Worker: filter one instance and compute its rows. Returns (rows, notes, kept)."""
    instance, profile, k, rules, threshold, budget = task
    notes = []
    if k > profile.num_candidates:
        return [], [f"{instance}: k={k} exceeds m={profile.num_candidates}"], False
    try:
        av_of_cc, cc_of_av, optimal = _filter_ratios(profile, k, budget)
    except DegenerateProfileError as exc:
        return [], [f"{instance}: degenerate ({exc})"], False
    except BudgetExceeded as exc:
        return [], [f"{instance}: skipped ({exc})"], False
    if av_of_cc > threshold or cc_of_av > threshold:
        return [], [], False
    av_opt, cc_opt = optimal
    rows = []
    for rule in rules:
        try:
            result = compute(rule, profile, k, budget=budget)
        except (BudgetExceeded, InfeasibleError) as exc:
            notes.append(f"{instance}: {rule} skipped ({exc})")
            continue
        rows.append(
            ExperimentRow(
                instance,
                rule,
                k,
                av_ratio(profile, k, result.winners, av_opt),
                cc_ratio(profile, k, result.winners, cc_opt),
            )
        )
    return rows, notes, True


def build_instances(config):
    """List of (instance id, profile, k) triples before filtering."""
    out = []
    if config.dataset == "uniform":
        profiles = uniform_dataset(
            config.seed, config.num_profiles, config.m, config.n, config.ballot_sizes
        )
        for k in config.ks:
            for idx, profile in enumerate(profiles):
                out.append((f"uniform-{idx}", profile, k))
        return out
    for path in config.paths:
        ballots, m = read_preflib(path)
        for k in config.ks:
            for i in range(1, k):
                out.append((f"{path}:i={i}", top_i_approvals(ballots, i, m), k))
    return out


def summarize(rows):
    """Per-rule min/quartiles/max of both ratios, in order of first appearance."""
    grouped = {}
    for row in rows:
        entry = grouped.setdefault(str(row.rule), {"av": [], "cc": []})
        entry["av"].append(float(row.av_ratio))
        entry["cc"].append(float(row.cc_ratio))
    summary = {}
    for rule, per_ratio in grouped.items():
        summary[rule] = {}
        for ratio, values in per_ratio.items():
            q = np.percentile(values, [0, 25, 50, 75, 100])
            summary[rule][ratio] = Stats(len(values), *(float(v) for v in q))
    return summary


def run_experiment(config):
    """
    Run an experiment.

    Returns
    -------
    ExperimentResult
        Rows ordered by instance then rule, per-rule summary statistics,
        instance counts and the reasons for skipped work.
    """
    instances = build_instances(config)
    tasks = [
        (inst, profile, k, config.rules, config.threshold, config.budget)
        for inst, profile, k in instances
    ]
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_evaluate, tasks, chunksize=4))
    else:
        results = [_evaluate(task) for task in tasks]
    rows, skipped, kept = [], [], 0
    for instance_rows, notes, was_kept in results:
        rows.extend(instance_rows)
        kept += was_kept
        for note in notes:
            log.warning(note)
        skipped.extend(notes)
    log.info("kept %d of %d instances", kept, len(tasks))
    return ExperimentResult(rows, summarize(rows), len(tasks), kept, skipped)
