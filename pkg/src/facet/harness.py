"""Simulated labeling runs against a corpus with known ground truth.

A manifest file names groups of methods that are structurally equivalent;
everything else in the factbase counts as a distractor.  Each simulated
run picks a seed method from a group, annotates k random features, then
plays an oracle that labels n random results per round (in-group positive,
out-group negative, optionally flipped with some error rate) until nothing
is left to inspect.  Metrics are taken against the group membership.
"""

import json
import logging
import random
import statistics
from dataclasses import dataclass, field
from pathlib import Path

from .errors import FactFileError, InconsistencyError
from .factbase import FactBase
from .learner import BIASES, initial_query
from .evaluate import evaluate
from .session import (
    STATUS_ACTIVE,
    STATUS_CONVERGED,
    STATUS_INFEASIBLE,
    apply_labels,
    start_session,
)

log = logging.getLogger("facet.harness")

# node kinds a user can tag as a feature
SAMPLE_KINDS = ("if", "loop", "call", "var")

LABEL_BOTH = "both"
LABEL_POSITIVES_ONLY = "positives-only"
LABEL_NEGATIVES_ONLY = "negatives-only"
LABEL_POLICIES = (LABEL_BOTH, LABEL_POSITIVES_ONLY, LABEL_NEGATIVES_ONLY)


@dataclass(frozen=True)
class GroundTruthGroup:
    name: str
    members: tuple


def load_manifest(path):
    """Read a groups.json manifest; returns (corpus name, groups)."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise FactFileError(f"cannot read manifest: {exc}") from exc
    except ValueError as exc:
        raise FactFileError(f"manifest is not valid JSON: {exc}") from exc
    groups = []
    for grp in data.get("groups", []):
        name = grp.get("name")
        members = grp.get("members", [])
        if not name or not members:
            raise FactFileError("manifest groups need a name and members")
        groups.append(GroundTruthGroup(name, tuple(members)))
    if not groups:
        raise FactFileError("manifest has no groups")
    return data.get("name", "corpus"), groups


def check_manifest(fb: FactBase, groups) -> None:
    missing = [m for g in groups for m in g.members if m not in fb.method_nodes]
    if missing:
        raise FactFileError(
            "manifest members missing from factbase: " + ", ".join(missing))


@dataclass
class SimulationConfig:
    k: int = 2                    # features annotated on the seed
    n: int = 3                    # results labeled per round
    bias: str = "nested"
    label_policy: str = LABEL_BOTH
    error_rate: float = 0.0
    runs: int = 10
    random_seed: int = 0
    max_iterations: int = 10

    def __post_init__(self):
        if self.k < 1 or self.n < 1 or self.runs < 1 or self.max_iterations < 1:
            raise ValueError("k, n, runs and max_iterations must be >= 1")
        if self.bias not in BIASES:
            raise ValueError(f"unknown bias {self.bias!r}")
        if self.label_policy not in LABEL_POLICIES:
            raise ValueError(f"unknown label policy {self.label_policy!r}")
        if not 0.0 <= self.error_rate <= 1.0:
            raise ValueError("error_rate must be within [0, 1]")


@dataclass
class RoundSnapshot:
    round_index: int
    precision: float
    recall: float
    result_count: int


@dataclass
class RunMetrics:
    group: str
    run_index: int
    seed_method: str
    annotated: tuple
    bias: str
    label_policy: str
    k: int
    n: int
    error_rate: float
    status: str = STATUS_ACTIVE
    flagged: bool = False
    flag_reason: str = ""
    completed: bool = False
    iterations: int = 1
    precision: float = 0.0
    recall: float = 0.0
    f1: float = 0.0
    query_atoms: int = 0
    specializations: int = 0
    violations: list = field(default_factory=list)
    history: list = field(default_factory=list)

    def row(self):
        return [
            self.group, str(self.run_index), self.bias, self.label_policy,
            str(self.k), str(self.n), f"{self.error_rate:g}",
            str(self.iterations), f"{self.precision:.3f}",
            f"{self.recall:.3f}", f"{self.f1:.3f}", self.status,
            "yes" if self.flagged else "no",
            "yes" if self.completed else "no", self.seed_method,
        ]


REPORT_COLUMNS = ["group", "run", "bias", "policy", "k", "n", "errorRate",
                  "iterations", "precision", "recall", "f1", "status",
                  "flagged", "completed", "seed"]


def feature_pool(fb: FactBase, method: str) -> list:
    """Annotatable nodes of a method, in source order."""
    return [rec.id for rec in fb.method_nodes[method]
            if rec.kind in SAMPLE_KINDS]


def pick_annotations(fb: FactBase, method: str, k: int, rng) -> list:
    """First k of a random walk over the feature pool.

    Using a prefix of one permutation keeps annotation sets for growing k
    nested inside each other, which the k sweep relies on.
    """
    pool = feature_pool(fb, method)
    if k > len(pool):
        log.warning("method %s has %d features, clamping k=%d",
                    method, len(pool), k)
        k = len(pool)
    order = list(pool)
    rng.shuffle(order)
    return order[:k]


def result_metrics(results, members) -> tuple:
    hits = len(set(results) & set(members))
    precision = hits / len(results) if results else 0.0
    recall = hits / len(members) if members else 0.0
    f1 = (2 * precision * recall / (precision + recall)
          if precision + recall else 0.0)
    return precision, recall, f1


def _oracle_labels(sample, members, policy, error_rate, rng):
    positives, negatives = [], []
    for mid in sample:
        truth = mid in members
        if error_rate and rng.random() < error_rate:
            truth = not truth
        if truth and policy != LABEL_NEGATIVES_ONLY:
            positives.append(mid)
        elif not truth and policy != LABEL_POSITIVES_ONLY:
            negatives.append(mid)
    return positives, negatives


def simulate_run(fb: FactBase, group: GroundTruthGroup, cfg: SimulationConfig,
                 run_index: int) -> RunMetrics:
    rng = random.Random(f"{cfg.random_seed}:{group.name}:{run_index}")
    seed_method = group.members[rng.randrange(len(group.members))]
    annotated = pick_annotations(fb, seed_method, cfg.k, rng)
    first, _, last, _ = fb.method_spans[seed_method]
    session = start_session(fb, seed_method, first, last, annotated,
                            bias=cfg.bias)
    run = RunMetrics(group=group.name, run_index=run_index,
                     seed_method=seed_method, annotated=tuple(annotated),
                     bias=cfg.bias, label_policy=cfg.label_policy,
                     k=len(annotated), n=cfg.n, error_rate=cfg.error_rate)

    members = set(group.members)
    inspected = {seed_method}
    rounds = 0

    def snapshot():
        p, r, _ = result_metrics(session.current.results, members)
        run.history.append(RoundSnapshot(rounds, p, r,
                                         len(session.current.results)))

    snapshot()
    while session.status == STATUS_ACTIVE:
        if rounds >= cfg.max_iterations:
            break
        candidates = sorted(set(session.current.results) - inspected
                            - session.positives() - session.negatives())
        if not candidates:
            run.completed = True
            break
        sample = rng.sample(candidates, min(cfg.n, len(candidates)))
        inspected.update(sample)
        rounds += 1
        positives, negatives = _oracle_labels(
            sample, members, cfg.label_policy, cfg.error_rate, rng)
        if not positives and not negatives:
            snapshot()
            continue
        before_iters = len(session.iterations)
        before_results = set(session.current.results)
        try:
            apply_labels(fb, session, positives, negatives, rng=rng)
        except InconsistencyError as exc:
            run.flagged = True
            run.flag_reason = "; ".join(exc.report.lines())
            break
        after_results = set(session.current.results)
        if len(session.iterations) > before_iters:
            run.specializations += 1
            if not after_results <= before_results:
                run.violations.append("result set grew on refinement")
            leak = after_results & session.negatives()
            if leak:
                run.violations.append(
                    "labeled negatives retained: " + ", ".join(sorted(leak)))
        if session.status == STATUS_INFEASIBLE:
            run.flagged = True
            run.flag_reason = "specialization infeasible"
            break
        if session.report is not None and session.report.stale_positives:
            run.flagged = True
            run.flag_reason = ("stale positives: "
                               + ", ".join(session.report.stale_positives))
            break
        snapshot()
    else:
        run.completed = True

    if session.status == STATUS_CONVERGED:
        run.completed = True
    run.status = session.status
    run.iterations = rounds + 1
    results = session.current.results
    run.precision, run.recall, run.f1 = result_metrics(results, members)
    run.query_atoms = len(session.current.query.body)
    return run


def simulate_group(fb: FactBase, group: GroundTruthGroup,
                   cfg: SimulationConfig) -> list:
    return [simulate_run(fb, group, cfg, i) for i in range(cfg.runs)]


def sweep(fb: FactBase, groups, configs) -> list:
    rows = []
    for cfg in configs:
        for group in groups:
            rows.extend(simulate_group(fb, group, cfg))
    return rows


def k_sweep(fb: FactBase, groups, ks=(1, 2, 3, 4), runs=10,
            random_seed=0) -> list:
    """First-iteration metrics as the annotation count grows.

    The same per-run permutation feeds every k, so each run's annotation
    sets are nested and the metrics move monotonically.
    """
    rows = []
    for group in groups:
        members = set(group.members)
        for run_index in range(runs):
            rng = random.Random(f"{random_seed}:{group.name}:{run_index}")
            seed_method = group.members[rng.randrange(len(group.members))]
            pool = feature_pool(fb, seed_method)
            order = list(pool)
            rng.shuffle(order)
            for k in ks:
                use = order[:min(k, len(order))]
                query = initial_query(fb, seed_method, use)
                results = evaluate(query, fb)
                p, r, f1 = result_metrics(results, members)
                rows.append({"group": group.name, "run": run_index, "k": k,
                             "precision": p, "recall": r, "f1": f1,
                             "results": len(results)})
    return rows


def report_lines(rows, sep="\t") -> list:
    lines = [sep.join(REPORT_COLUMNS)]
    lines.extend(sep.join(r.row()) for r in rows)
    return lines


def summary_lines(rows) -> list:
    """Per-configuration means, one line each, plus a flag tally."""
    buckets = {}
    for r in rows:
        key = (r.group, r.bias, r.label_policy, r.k, r.n, r.error_rate)
        buckets.setdefault(key, []).append(r)
    lines = []
    for key in sorted(buckets, key=str):
        group, bias, policy, k, n, err = key
        runs = buckets[key]
        flagged = sum(1 for r in runs if r.flagged)
        lines.append(
            f"{group} bias={bias} policy={policy} k={k} n={n} err={err:g}: "
            f"{len(runs)} runs, mean precision "
            f"{statistics.fmean(r.precision for r in runs):.3f}, "
            f"mean recall {statistics.fmean(r.recall for r in runs):.3f}, "
            f"mean iterations "
            f"{statistics.fmean(r.iterations for r in runs):.2f}, "
            f"flagged {flagged}")
    return lines
