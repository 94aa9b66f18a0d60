"""
Sampling Pipeline
=================

This module orchestrates the repeated-sampling experiment: for every sampling
method, draw `runs` sampled networks, extract groups from each, and average
the per-run statistics.

Workflow Stages:
1. Load the original network (and check it against the catalog if named).
2. Optionally extract groups from the original network itself.
3. For each method and run:
   a. Derive the run seed from (master seed, method, run index)
   b. Sample the network
   c. Extract groups (seeded by the run seed)
   d. Summarize groups and coverage against the sampled network
4. Aggregate successful runs per method and write tables and histograms.

Runs are independent and may execute in worker processes. Each run carries
its own seed and results are collected in run order, so the outputs are a
pure function of the input file and the configuration.

Output Layout:
--------------
    <output>/config.json
    <output>/runs/<method>/run_000.json (+ run_000.background.edges)
    <output>/runs.csv
    <output>/table_groups.csv
    <output>/table_coverage.csv
    <output>/hist_tau_<method>.csv
    <output>/hist_w_<method>.csv        (W divided by the sampling fraction)
"""

import logging
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from tqdm import tqdm

try:
    import psutil

    _PSUTIL_AVAILABLE = True
except ImportError:
    psutil = None
    _PSUTIL_AVAILABLE = False

from src.core.analysis import (
    CoverageReport,
    SummaryReport,
    aggregate_runs,
    collect_values,
    coverage,
    graph_profile,
    histogram,
    rescale_w,
    summarize,
)
from src.core.config import (
    DEFAULT_RUNS,
    DEFAULT_SAMPLE_FRACTION,
    DEFAULT_SEED,
    DEFAULT_TAU_BINS,
    DEFAULT_W_BINS,
    KNOWN_NETWORKS,
    SAMPLING_METHODS,
    check_against_catalog,
)
from src.core.errors import ContractViolation
from src.core.graph import Graph, read_edge_list
from src.core.groups import ExtractionConfig, ExtractionResult, extract_all, save_result
from src.core.reports import write_coverage_table, write_histogram, write_summary_table, write_table
from src.core.sampling import SamplerConfig, sample
from src.utils.concurrency import ordered_map
from src.utils.config_manager import save_effective_config
from src.utils.logger import log_timed
from src.utils.seeding import derive_seed

logger = logging.getLogger(__name__)

ORIGINAL = "original"

RUN_COLUMNS = [
    "method", "run", "seed", "status", "error",
    "nodes", "links", "mean_degree", "components", "largest_component_fraction", "average_clustering",
    "groups", "mean_s", "mean_t", "mean_tau", "communities", "mixtures", "modules",
]


@dataclass
class PipelineConfig:
    """
    Settings of a pipeline invocation.

    Attributes:
        input_path: Edge list of the original network.
        output_dir: Directory receiving all outputs.
        methods: Sampling methods to run, in order.
        fraction: Fraction of nodes kept by each sample.
        runs: Sampling runs per method.
        extraction: Search, null model and significance settings. Its seed
            is replaced per run by the derived run seed.
        seed: Master seed.
        network: Label used in the tables (defaults to the input file stem).
        with_original: Also extract groups from the unsampled network.
        workers: Worker processes for runs (1 = serial).
        tau_bins / w_bins: Histogram resolution.
        treat_directed_as_undirected: Passed to the edge-list loader.
    """

    input_path: str
    output_dir: str
    methods: Tuple[str, ...] = SAMPLING_METHODS
    fraction: float = DEFAULT_SAMPLE_FRACTION
    runs: int = DEFAULT_RUNS
    extraction: ExtractionConfig = field(default_factory=ExtractionConfig)
    seed: int = DEFAULT_SEED
    network: Optional[str] = None
    with_original: bool = False
    workers: int = 1
    tau_bins: int = DEFAULT_TAU_BINS
    w_bins: int = DEFAULT_W_BINS
    treat_directed_as_undirected: bool = True

    @property
    def network_name(self) -> str:
        return self.network or Path(self.input_path).stem

    def validate(self) -> "PipelineConfig":
        if self.runs < 1:
            raise ContractViolation(f"runs must be >= 1, got {self.runs}")
        if not self.methods:
            raise ContractViolation("at least one sampling method is required")
        for method in self.methods:
            SamplerConfig(method=method, fraction=self.fraction, seed=self.seed).validate()
        if self.workers < 1:
            raise ContractViolation(f"workers must be >= 1, got {self.workers}")
        if self.tau_bins < 1 or self.w_bins < 1:
            raise ContractViolation("histogram bins must be >= 1")
        self.extraction.validate()
        return self

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["methods"] = list(self.methods)
        data["extraction"] = self.extraction.to_dict()
        data["network"] = self.network_name
        # Parallelism and output location never change the results
        data.pop("workers")
        data.pop("output_dir")
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any], **overrides) -> "PipelineConfig":
        """Rebuild a configuration saved by `to_dict` (e.g. from config.json)."""
        values = dict(data)
        values.update(overrides)
        extraction = values.pop("extraction", {}) or {}
        values["methods"] = tuple(values.get("methods", SAMPLING_METHODS))
        known = {f for f in cls.__dataclass_fields__}
        return cls(extraction=ExtractionConfig(**extraction), **{k: v for k, v in values.items() if k in known})


@dataclass
class RunJob:
    method: str
    run: int
    seed: int
    fraction: float
    extraction: ExtractionConfig
    graph: Graph


@dataclass
class RunOutcome:
    """Result of one sampling run; `result` is None when the run failed."""

    method: str
    run: int
    seed: int
    status: str
    error: str = ""
    profile: Dict[str, Any] = field(default_factory=dict)
    result: Optional[ExtractionResult] = None
    summary: Optional[SummaryReport] = None
    coverage: Optional[CoverageReport] = None

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def to_row(self) -> Dict[str, Any]:
        row: Dict[str, Any] = {
            "method": self.method,
            "run": self.run,
            "seed": self.seed,
            "status": self.status,
            "error": self.error,
        }
        row.update(self.profile)
        if self.summary is not None:
            summary_row = self.summary.to_row("")
            for key in ("groups", "mean_s", "mean_t", "mean_tau", "communities", "mixtures", "modules"):
                row[key] = summary_row[key]
        return row


@dataclass
class MethodAggregate:
    method: str
    runs: int
    successful: int
    summary: Optional[SummaryReport]
    coverage: Optional[CoverageReport]


@dataclass
class PipelineReport:
    network: str
    aggregates: List[MethodAggregate]
    outcomes: List[RunOutcome]
    original: Optional[RunOutcome] = None

    @property
    def failures(self) -> int:
        return sum(1 for o in self.outcomes if not o.ok)


def run_single(job: RunJob) -> RunOutcome:
    """Sample, extract and summarize one run. Failures are captured, not raised."""
    try:
        if job.method == ORIGINAL:
            sampled = job.graph
        else:
            sampled = sample(job.graph, SamplerConfig(method=job.method, fraction=job.fraction, seed=job.seed))
        cfg = replace(job.extraction, seed=job.seed, workers=1)
        result = extract_all(sampled, cfg)
        outcome = RunOutcome(
            method=job.method,
            run=job.run,
            seed=job.seed,
            status="ok",
            profile=graph_profile(sampled).to_dict(),
            result=result,
            summary=summarize(result),
            coverage=coverage(result, sampled),
        )
    except Exception as e:
        logger.debug(f"[PIPELINE] {job.method} run {job.run} failed", exc_info=True)
        return RunOutcome(method=job.method, run=job.run, seed=job.seed, status="failed",
                          error=f"{type(e).__name__}: {e}")

    if _PSUTIL_AVAILABLE:
        mem_mb = psutil.Process().memory_info().rss / (1024 * 1024)
        logger.debug(f"[PIPELINE] memory after {job.method} run {job.run}: {mem_mb:.2f} MB")
    return outcome


def _aggregate(method: str, outcomes: List[RunOutcome]) -> MethodAggregate:
    good = [o for o in outcomes if o.ok]
    return MethodAggregate(
        method=method,
        runs=len(outcomes),
        successful=len(good),
        summary=aggregate_runs([o.summary for o in good]) if good else None,
        coverage=aggregate_runs([o.coverage for o in good]) if good else None,
    )


@log_timed(stage="PIPELINE")
def run_pipeline(cfg: PipelineConfig, show_progress: bool = True) -> PipelineReport:
    """
    Run the full sampling experiment and write every output file.

    Raises:
        ContractViolation: On invalid configuration.
        OSError / EdgeListParseError / EmptyGraphError: If the input cannot be loaded.
    """
    cfg.validate()
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    save_effective_config(out / "config.json", cfg.to_dict(), name="pipeline")

    graph, load_report = read_edge_list(cfg.input_path, cfg.treat_directed_as_undirected)
    name = cfg.network_name
    if name in KNOWN_NETWORKS:
        for problem in check_against_catalog(name, graph.node_count, graph.link_count):
            logger.warning(f"[PIPELINE] {problem}")

    original_outcome = None
    if cfg.with_original:
        logger.info(f"[PIPELINE] extracting groups from the original network ({graph!r})")
        original_outcome = run_single(RunJob(
            method=ORIGINAL, run=0, seed=derive_seed(cfg.seed, ORIGINAL),
            fraction=1.0, extraction=cfg.extraction, graph=graph,
        ))
        _store_outcome(out, original_outcome)

    outcomes: List[RunOutcome] = []
    aggregates: List[MethodAggregate] = []
    for method in cfg.methods:
        jobs = [
            RunJob(method=method, run=i, seed=derive_seed(cfg.seed, method, i),
                   fraction=cfg.fraction, extraction=cfg.extraction, graph=graph)
            for i in range(cfg.runs)
        ]
        with tqdm(total=len(jobs), desc=f"{name} {method}", unit="run", disable=not show_progress) as bar:
            method_outcomes = ordered_map(
                run_single, jobs, max_workers=cfg.workers, use_processes=True,
                on_result=lambda _index, _outcome: bar.update(1),
            )

        for outcome in method_outcomes:
            _store_outcome(out, outcome)
            if not outcome.ok:
                logger.error(f"[PIPELINE] {method} run {outcome.run} failed: {outcome.error}")

        aggregate = _aggregate(method, method_outcomes)
        logger.info(f"[PIPELINE] {method}: {aggregate.successful}/{aggregate.runs} runs succeeded")
        outcomes.extend(method_outcomes)
        aggregates.append(aggregate)

        pooled = [o.result for o in method_outcomes if o.ok]
        write_histogram(out / f"hist_tau_{method}.csv",
                        histogram(collect_values(pooled, "tau"), cfg.tau_bins, (0.0, 1.0)))
        write_histogram(out / f"hist_w_{method}.csv",
                        histogram(rescale_w(collect_values(pooled, "W"), cfg.fraction), cfg.w_bins))

    report = PipelineReport(network=name, aggregates=aggregates, outcomes=outcomes, original=original_outcome)
    _write_tables(out, report)
    return report


def _store_outcome(out: Path, outcome: RunOutcome):
    if outcome.result is not None:
        save_result(outcome.result, out / "runs" / outcome.method / f"run_{outcome.run:03d}.json")


def _write_tables(out: Path, report: PipelineReport):
    rows = [o.to_row() for o in ([report.original] if report.original else []) + report.outcomes]
    write_table(out / "runs.csv", rows, RUN_COLUMNS)

    group_entries = []
    coverage_entries = []
    if report.original is not None and report.original.ok:
        leading = {"network": report.network, "method": ORIGINAL, "runs": 1, "successful_runs": 1}
        group_entries.append((leading, report.original.summary))
        coverage_entries.append((leading, report.original.coverage))
    for aggregate in report.aggregates:
        if aggregate.summary is None:
            logger.warning(f"[PIPELINE] no successful {aggregate.method} runs; omitted from the tables")
            continue
        leading = {"network": report.network, "method": aggregate.method,
                   "runs": aggregate.runs, "successful_runs": aggregate.successful}
        group_entries.append((leading, aggregate.summary))
        coverage_entries.append((leading, aggregate.coverage))

    write_summary_table(out / "table_groups.csv", group_entries)
    write_coverage_table(out / "table_coverage.csv", coverage_entries)
    logger.info(f"[PIPELINE] tables written to {out}")
