"""Pipeline orchestration: run a configuration over instances, collect
per-instance records, and aggregate metrics."""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Mapping, Optional, Sequence

from ..oracle import (
    HttpChatBackend,
    OracleClient,
    OracleTask,
    ScriptedOracleBackend,
    TransportError,
    UnconfiguredError,
)
from ..reasoning import ProofTrace, Verdict, backward_prove, forward_prove, mark_essential
from ..translation import (
    HybridContext,
    OfflineVerifier,
    OracleTranslationBackend,
    OracleVerifier,
    SentenceSpan,
    TemplateTranslationBackend,
    TranslationMode,
    TranslationPipeline,
    build_hybrid_context,
)
from .dataset import ProblemInstance


class Strategy(Enum):
    BACKWARD = "backward"
    FORWARD = "forward"

    @classmethod
    def parse(cls, label: str) -> "Strategy":
        for strategy in cls:
            if strategy.value == label:
                return strategy
        raise ValueError(f"unknown strategy: {label!r}")


class ConfigError(ValueError):
    pass


class EmptyRunError(ValueError):
    pass


class BackendUnavailableError(Exception):
    pass


BACKEND_CHOICES = ("template", "stub", "oracle")


@dataclass(frozen=True)
class RunConfig:
    mode: TranslationMode = TranslationMode.SELECTIVE
    strategy: Strategy = Strategy.BACKWARD
    budget: int = 20
    backend: str = "template"
    seed: int = 0
    include_unknown_in_ratios: bool = False
    prompt_version: str = "v1"
    oracle_base_url: str = ""
    oracle_model: str = ""

    def __post_init__(self) -> None:
        if self.budget < 1:
            raise ConfigError("budget must be at least 1")
        if self.backend not in BACKEND_CHOICES:
            raise ConfigError(f"backend must be one of {BACKEND_CHOICES}")

    @property
    def label(self) -> str:
        return f"{self.mode.value}+{self.strategy.value}"


@dataclass(frozen=True)
class InstanceRecord:
    instance_id: str
    depth: Optional[int]
    gold: str
    verdict: str
    predicted: Optional[str]
    correct: bool
    abstained: bool
    steps_used: int
    essential_ratio: float
    retention_ratio: float
    error: Optional[str] = None


@dataclass(frozen=True)
class Aggregates:
    instances: int
    correct: int
    accuracy: float
    mean_essential_ratio: float
    mean_retention_ratio: float
    per_depth_accuracy: tuple[tuple[str, float], ...]


@dataclass(frozen=True)
class RunReport:
    config: RunConfig
    records: tuple[InstanceRecord, ...]
    aggregates: Aggregates


@dataclass(frozen=True)
class ComparisonReport:
    base_label: str
    reports: tuple[RunReport, ...]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(r.config.label for r in self.reports)


def aggregates_from_records(
    records: Sequence[InstanceRecord], include_unknown_in_ratios: bool = False
) -> Aggregates:
    """Recompute every aggregate from per-instance records."""
    if not records:
        raise EmptyRunError("no records to aggregate")
    n = len(records)
    n_correct = sum(1 for r in records if r.correct)
    ratio_rows = [
        r for r in records if include_unknown_in_ratios or r.verdict != "Unknown"
    ]
    mean_essential = (
        sum(r.essential_ratio for r in ratio_rows) / len(ratio_rows)
        if ratio_rows
        else 0.0
    )
    mean_retention = sum(r.retention_ratio for r in records) / n
    by_depth: dict[str, list[InstanceRecord]] = {}
    for record in records:
        key = "?" if record.depth is None else str(record.depth)
        by_depth.setdefault(key, []).append(record)
    per_depth = tuple(
        (key, sum(1 for r in rows if r.correct) / len(rows))
        for key, rows in sorted(by_depth.items())
    )
    return Aggregates(
        instances=n,
        correct=n_correct,
        accuracy=n_correct / n,
        mean_essential_ratio=mean_essential,
        mean_retention_ratio=mean_retention,
        per_depth_accuracy=per_depth,
    )


def default_stub_oracle() -> OracleClient:
    """Deterministic do-nothing oracle: unscripted reasoning steps come back
    malformed (inconclusive); step verification confirms by default."""
    backend = ScriptedOracleBackend(
        defaults={OracleTask.VERIFY_STEP: "VERDICT: valid"}
    )
    return OracleClient(backend)


def build_pipeline(
    config: RunConfig, oracle: OracleClient | None = None
) -> tuple[TranslationPipeline, OracleClient]:
    """Translation pipeline plus the reasoning oracle for one configuration."""
    if config.backend == "template":
        client = oracle if oracle is not None else default_stub_oracle()
        return TranslationPipeline(TemplateTranslationBackend(), OfflineVerifier()), client
    if config.backend == "stub":
        client = oracle if oracle is not None else default_stub_oracle()
        pipeline = TranslationPipeline(
            OracleTranslationBackend(client, config.prompt_version),
            OracleVerifier(client, config.prompt_version),
        )
        return pipeline, client
    # live HTTP backend
    if oracle is not None:
        client = oracle
    else:
        if not config.oracle_base_url or not config.oracle_model:
            raise BackendUnavailableError(
                "oracle backend needs oracle_base_url and oracle_model"
            )
        try:
            client = OracleClient(
                HttpChatBackend(config.oracle_base_url, config.oracle_model)
            )
        except UnconfiguredError as exc:
            raise BackendUnavailableError(str(exc)) from exc
    pipeline = TranslationPipeline(
        OracleTranslationBackend(client, config.prompt_version),
        OracleVerifier(client, config.prompt_version),
    )
    return pipeline, client


def _spans(instance: ProblemInstance, conclusion_text: str) -> tuple[list[SentenceSpan], SentenceSpan]:
    premises = [
        SentenceSpan(text, index, "premise")
        for index, text in enumerate(instance.premises)
    ]
    return premises, SentenceSpan(conclusion_text, 0, "conclusion")


def prove_with_config(ctx: HybridContext, config: RunConfig, oracle: OracleClient) -> ProofTrace:
    if config.strategy is Strategy.FORWARD:
        return forward_prove(ctx, config.budget, oracle)
    return backward_prove(ctx, config.budget, oracle)


def _evaluate_entailment(
    instance: ProblemInstance,
    config: RunConfig,
    pipeline: TranslationPipeline,
    oracle: OracleClient,
) -> InstanceRecord:
    premises, conclusion = _spans(instance, instance.conclusion)
    ctx = build_hybrid_context(premises, conclusion, config.mode, pipeline)
    trace = mark_essential(prove_with_config(ctx, config, oracle))
    predicted = trace.verdict.value
    return InstanceRecord(
        instance_id=instance.id,
        depth=instance.depth,
        gold=instance.gold,
        verdict=trace.verdict.value,
        predicted=predicted,
        correct=predicted == instance.gold,
        abstained=False,
        steps_used=trace.steps_used,
        essential_ratio=trace.essential_ratio or 0.0,
        retention_ratio=ctx.retention_ratio,
        error=None,
    )


def _evaluate_options(
    instance: ProblemInstance,
    config: RunConfig,
    pipeline: TranslationPipeline,
    oracle: OracleClient,
) -> InstanceRecord:
    """Prove each option as its own hypothesis; exactly one True wins,
    anything else abstains (counted incorrect)."""
    assert instance.options is not None
    winners: list[str] = []
    total_steps = 0
    winning_trace: Optional[ProofTrace] = None
    retention = 0.0
    for option in instance.options:
        premises, conclusion = _spans(instance, option.text)
        ctx = build_hybrid_context(premises, conclusion, config.mode, pipeline)
        trace = mark_essential(prove_with_config(ctx, config, oracle))
        total_steps += trace.steps_used
        retention = ctx.retention_ratio
        if trace.verdict is Verdict.TRUE:
            winners.append(option.label)
            winning_trace = trace
    if len(winners) == 1:
        predicted: Optional[str] = winners[0]
        verdict = "True"
        abstained = False
        essential = (winning_trace.essential_ratio or 0.0) if winning_trace else 0.0
    else:
        predicted = None
        verdict = "Unknown"
        abstained = True
        essential = 0.0
    return InstanceRecord(
        instance_id=instance.id,
        depth=instance.depth,
        gold=instance.gold,
        verdict=verdict,
        predicted=predicted,
        correct=predicted == instance.gold,
        abstained=abstained,
        steps_used=total_steps,
        essential_ratio=essential,
        retention_ratio=retention,
        error=None,
    )


def run_eval(
    instances: Sequence[ProblemInstance],
    config: RunConfig,
    oracle: OracleClient | None = None,
) -> RunReport:
    """Evaluate every instance under one configuration.

    Individual instance failures become error records; the run continues."""
    if not instances:
        raise EmptyRunError("no instances to evaluate")
    pipeline, client = build_pipeline(config, oracle)
    records: list[InstanceRecord] = []
    for instance in instances:
        try:
            if instance.options is not None:
                records.append(_evaluate_options(instance, config, pipeline, client))
            else:
                records.append(_evaluate_entailment(instance, config, pipeline, client))
        except (TransportError, UnconfiguredError) as exc:
            records.append(
                InstanceRecord(
                    instance_id=instance.id,
                    depth=instance.depth,
                    gold=instance.gold,
                    verdict="Unknown",
                    predicted=None,
                    correct=False,
                    abstained=True,
                    steps_used=0,
                    essential_ratio=0.0,
                    retention_ratio=0.0,
                    error=f"{type(exc).__name__}: {exc}",
                )
            )
    aggregates = aggregates_from_records(records, config.include_unknown_in_ratios)
    return RunReport(config, tuple(records), aggregates)


def compare_modes(
    instances: Sequence[ProblemInstance],
    base: RunConfig,
    overrides: Sequence[Mapping[str, object]],
    oracle: OracleClient | None = None,
) -> ComparisonReport:
    """Run the base configuration plus each override on identical instances."""
    configs: list[RunConfig] = [base]
    for override in overrides:
        candidate = replace(base, **override)
        if candidate not in configs:
            configs.append(candidate)
    if len(configs) < 2:
        raise ConfigError("comparison needs at least two distinct configurations")
    reports = tuple(run_eval(instances, config, oracle) for config in configs)
    return ComparisonReport(base.label, reports)
