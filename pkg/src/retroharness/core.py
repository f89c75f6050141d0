"""Core round-trip testing pipeline.

A trial runs five stages in order: generate an input datum, map it through
the forward program, optionally mutate the intermediate datum, map it back
through the backward program, and evaluate a relation between the original
and the returned datum.  Each trial is a pure function of the suite, the
run configuration and the trial index, so whole runs replay bit for bit
from a single master seed.

Trials are independent of each other and may in principle be executed
concurrently; this runner executes them sequentially and reports are always
ordered by trial index.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping

from .generators import Rng

__all__ = [
    "ConfigError",
    "StepCapExceeded",
    "Mode",
    "Stage",
    "Outcome",
    "Verdict",
    "MutationDescriptor",
    "Mutator",
    "IDENTITY_MUTATOR",
    "TrialContext",
    "Transcript",
    "Variant",
    "SuiteDefinition",
    "SuiteConfig",
    "TrialReport",
    "SuiteSummary",
    "derive_trial_seed",
    "run_trial",
    "replay_trial",
    "run_suite",
    "register_suite",
    "get_suite",
    "list_suites",
]


class ConfigError(ValueError):
    """Raised for invalid run configuration (bad suite, variant, counts)."""


class StepCapExceeded(RuntimeError):
    """Raised by a program that exhausted its per-execution work bound."""


class Mode(enum.Enum):
    """Which side of the pipeline the system under test occupies."""

    FORWARD = "forward"
    BACKWARD = "backward"
    INTEGRATED = "integrated"


class Stage(enum.Enum):
    GENERATE = "generate"
    FORWARD_EXEC = "forward_exec"
    MUTATE = "mutate"
    BACKWARD_EXEC = "backward_exec"
    RELATION_EVAL = "relation_eval"


class Outcome(enum.Enum):
    PASS = "pass"
    VIOLATION = "violation"
    PROGRAM_ERROR = "program_error"


@dataclass(frozen=True)
class Verdict:
    """Result of one trial: exactly one of pass / violation / program error.

    A violation always carries a human-readable rendering of the original
    and round-tripped data; a program error records the stage that failed.
    """

    outcome: Outcome
    stage: Stage | None = None
    detail: str = ""

    @classmethod
    def passed(cls) -> "Verdict":
        return cls(Outcome.PASS)

    @classmethod
    def violation(cls, detail: str) -> "Verdict":
        return cls(Outcome.VIOLATION, detail=detail)

    @classmethod
    def program_error(cls, stage: Stage, message: str) -> "Verdict":
        return cls(Outcome.PROGRAM_ERROR, stage=stage, detail=message)

    @property
    def is_pass(self) -> bool:
        return self.outcome is Outcome.PASS


@dataclass(frozen=True)
class MutationDescriptor:
    """Name and drawn parameters of the mutation applied to one trial."""

    name: str
    parameters: Mapping[str, Any] = field(default_factory=dict)

    @classmethod
    def identity(cls) -> "MutationDescriptor":
        return cls("identity", {})


@dataclass
class TrialContext:
    """Per-trial execution context handed to programs and relations.

    ``rng`` is the trial's own deterministic stream.  ``eps`` and
    ``step_cap`` come from the run configuration; programs with unbounded
    loops are expected to enforce ``step_cap`` themselves by raising
    :class:`StepCapExceeded`.  During relation evaluation the intermediate
    data are available as ``m2`` and ``m2_mutated`` for relations that
    constrain the intermediate modality as well.
    """

    rng: Rng
    eps: float
    step_cap: int
    m2: Any = None
    m2_mutated: Any = None


# Programs map a datum to a datum: forward M1 -> M2, backward M2 -> M1.
Program = Callable[[Any, TrialContext], Any]
Generator = Callable[[TrialContext], Any]
Relation = Callable[[Any, Any, MutationDescriptor, TrialContext], bool]
MutateFn = Callable[[Any, TrialContext], "tuple[Any, dict[str, Any]]"]


@dataclass(frozen=True)
class Mutator:
    """A named intermediate-datum transformation with a selection weight.

    ``apply(m2, ctx)`` returns the mutated datum and the parameter map for
    the mutation descriptor.  The identity mutator returns its argument
    unchanged (the same object, so identity trials are bit-identical).
    """

    name: str
    apply: MutateFn
    weight: float = 1.0


IDENTITY_MUTATOR = Mutator("identity", lambda value, ctx: (value, {}))


@dataclass(frozen=True)
class Transcript:
    """Full data trail of one trial.

    Stages that were never reached hold ``None``; the pipeline order
    guarantees ``m1_prime`` is only present when ``m2_mutated`` is, and
    ``m2_mutated`` only when ``m2`` is.
    """

    trial_index: int
    trial_seed: int
    m1: Any = None
    m2: Any = None
    m2_mutated: Any = None
    m1_prime: Any = None
    mutation: MutationDescriptor | None = None


@dataclass(frozen=True)
class Variant:
    """Program substitution: replaces the forward and/or backward program.

    ``None`` keeps the suite's default program for that role.
    """

    forward: Program | None = None
    backward: Program | None = None


@dataclass(frozen=True)
class SuiteDefinition:
    """A named bundle of generator, programs, mutators and relation.

    ``variants`` maps a variant id to a program substitution and must
    contain the id ``"correct"`` (usually an empty substitution).  The
    relation must be pure: equal arguments, including the context's RNG
    state, give an equal answer.
    """

    name: str
    mode: Mode
    generator: Generator
    forward: Program
    backward: Program
    relation: Relation
    mutators: tuple[Mutator, ...] = (IDENTITY_MUTATOR,)
    variants: Mapping[str, Variant] = field(default_factory=lambda: {"correct": Variant()})

    def __post_init__(self) -> None:
        if "correct" not in self.variants:
            raise ConfigError(f"suite {self.name!r} must define a 'correct' variant")
        if not self.mutators:
            raise ConfigError(f"suite {self.name!r} needs at least one mutator")

    def variant_ids(self) -> list[str]:
        return list(self.variants)

    def resolve(self, variant_id: str) -> tuple[Program, Program]:
        """Forward and backward programs with the variant's substitutions."""
        try:
            variant = self.variants[variant_id]
        except KeyError:
            raise ConfigError(
                f"suite {self.name!r} has no variant {variant_id!r}; "
                f"known: {', '.join(self.variants)}"
            ) from None
        return (variant.forward or self.forward, variant.backward or self.backward)


@dataclass(frozen=True)
class SuiteConfig:
    """Run parameters: trial count, master seed, tolerance, work bound."""

    iterations: int = 1000
    master_seed: int = 42
    eps: float = 1e-10
    step_cap: int = 10_000_000
    variant_id: str = "correct"

    def validate(self, suite: SuiteDefinition) -> None:
        if self.iterations < 1:
            raise ConfigError(f"iterations must be >= 1, got {self.iterations}")
        if not 0 <= self.master_seed < 2**64:
            raise ConfigError("master_seed must be an unsigned 64-bit integer")
        if self.eps < 0:
            raise ConfigError(f"eps must be >= 0, got {self.eps}")
        if self.step_cap < 1:
            raise ConfigError(f"step_cap must be >= 1, got {self.step_cap}")
        suite.resolve(self.variant_id)


@dataclass(frozen=True)
class TrialReport:
    suite: str
    variant_id: str
    trial_index: int
    trial_seed: int
    verdict: Verdict
    transcript: Transcript


@dataclass(frozen=True)
class SuiteSummary:
    """Verdict counts for one run; the counts sum to the iteration count.

    Wall time is informational only and excluded from equality so that
    identical runs compare equal.
    """

    suite: str
    variant_id: str
    iterations: int
    passes: int
    violations: int
    program_errors: int
    first_failure_index: int | None
    first_failure_seed: int | None
    wall_time: float = field(compare=False, default=0.0)


_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    """SplitMix64 finalizer: a bijective 64-bit avalanche mix."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_trial_seed(master_seed: int, trial_index: int) -> int:
    """Deterministic per-trial seed; distinct indices decorrelate fully."""
    return _mix64(master_seed ^ ((trial_index + 1) * _GAMMA & _MASK64))


def _select_mutator(mutators: tuple[Mutator, ...], rng: Rng) -> Mutator:
    # Single-mutator suites consume no randomness here, so their program
    # streams are unaffected by mutator bookkeeping.
    if len(mutators) == 1:
        return mutators[0]
    total = sum(m.weight for m in mutators)
    pick = rng.random() * total
    acc = 0.0
    for mutator in mutators:
        acc += mutator.weight
        if pick < acc:
            return mutator
    return mutators[-1]


def _render_violation(m1: Any, m1_prime: Any) -> str:
    return f"relation violated: m1={m1!r} m1_prime={m1_prime!r}"


def _execute(
    suite: SuiteDefinition,
    config: SuiteConfig,
    trial_index: int,
    trial_seed: int,
) -> TrialReport:
    forward, backward = suite.resolve(config.variant_id)
    ctx = TrialContext(rng=Rng(trial_seed), eps=config.eps, step_cap=config.step_cap)

    m1 = m2 = m2_mutated = m1_prime = None
    mutation: MutationDescriptor | None = None
    verdict: Verdict | None = None

    stage = Stage.GENERATE
    try:
        m1 = suite.generator(ctx)
        mutator = _select_mutator(suite.mutators, ctx.rng)

        stage = Stage.FORWARD_EXEC
        m2 = forward(m1, ctx)
        ctx.m2 = m2

        stage = Stage.MUTATE
        m2_mutated, parameters = mutator.apply(m2, ctx)
        mutation = MutationDescriptor(mutator.name, parameters)
        ctx.m2_mutated = m2_mutated

        stage = Stage.BACKWARD_EXEC
        m1_prime = backward(m2_mutated, ctx)

        stage = Stage.RELATION_EVAL
        if suite.relation(m1, m1_prime, mutation, ctx):
            verdict = Verdict.passed()
        else:
            verdict = Verdict.violation(_render_violation(m1, m1_prime))
    except Exception as exc:  # noqa: BLE001 - program failures become verdicts
        verdict = Verdict.program_error(stage, f"{type(exc).__name__}: {exc}")

    transcript = Transcript(
        trial_index=trial_index,
        trial_seed=trial_seed,
        m1=m1,
        m2=m2,
        m2_mutated=m2_mutated,
        m1_prime=m1_prime,
        mutation=mutation,
    )
    return TrialReport(
        suite=suite.name,
        variant_id=config.variant_id,
        trial_index=trial_index,
        trial_seed=trial_seed,
        verdict=verdict,
        transcript=transcript,
    )


def run_trial(suite: SuiteDefinition, config: SuiteConfig, trial_index: int) -> TrialReport:
    """Run one trial; failures in any stage yield a program-error verdict.

    Never raises for failures of the programs under test; only invalid
    configuration (unknown variant, negative index) raises.
    """
    if trial_index < 0:
        raise ConfigError(f"trial_index must be >= 0, got {trial_index}")
    seed = derive_trial_seed(config.master_seed, trial_index)
    return _execute(suite, config, trial_index, seed)


def replay_trial(suite: SuiteDefinition, config: SuiteConfig, trial_seed: int) -> TrialReport:
    """Re-run a single trial directly from a previously reported seed."""
    if not 0 <= trial_seed < 2**64:
        raise ConfigError("trial_seed must be an unsigned 64-bit integer")
    return _execute(suite, config, trial_index=0, trial_seed=trial_seed)


def run_suite(
    suite: SuiteDefinition, config: SuiteConfig
) -> tuple[SuiteSummary, list[TrialReport]]:
    """Run ``config.iterations`` trials and summarise the verdicts.

    Configuration problems are raised before any trial executes.  Reports
    come back ordered by trial index and a repeated run with an equal
    configuration produces equal reports.
    """
    config.validate(suite)
    started = time.perf_counter()

    reports = [run_trial(suite, config, index) for index in range(config.iterations)]

    counts = {Outcome.PASS: 0, Outcome.VIOLATION: 0, Outcome.PROGRAM_ERROR: 0}
    first_failure: TrialReport | None = None
    for report in reports:
        counts[report.verdict.outcome] += 1
        if first_failure is None and not report.verdict.is_pass:
            first_failure = report

    summary = SuiteSummary(
        suite=suite.name,
        variant_id=config.variant_id,
        iterations=config.iterations,
        passes=counts[Outcome.PASS],
        violations=counts[Outcome.VIOLATION],
        program_errors=counts[Outcome.PROGRAM_ERROR],
        first_failure_index=first_failure.trial_index if first_failure else None,
        first_failure_seed=first_failure.trial_seed if first_failure else None,
        wall_time=time.perf_counter() - started,
    )
    return summary, reports


# --- Suite registry -------------------------------------------------------

_REGISTRY: dict[str, SuiteDefinition] = {}


def register_suite(suite: SuiteDefinition) -> SuiteDefinition:
    """Add a suite to the global registry; names must be unique."""
    if suite.name in _REGISTRY:
        raise ConfigError(f"suite {suite.name!r} is already registered")
    _REGISTRY[suite.name] = suite
    return suite


def get_suite(name: str) -> SuiteDefinition:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise ConfigError(
            f"unknown suite {name!r}; known: {', '.join(sorted(_REGISTRY))}"
        ) from None


def list_suites() -> list[SuiteDefinition]:
    return [_REGISTRY[name] for name in sorted(_REGISTRY)]
