"""Minimal suites demonstrating the three testing modes.

Forward mode: a sine implementation under test, checked through a trusted
arcsine.  Backward mode: a trusted arcsine feeding the sine under test,
with the intermediate angle shifted by whole turns.  Integrated mode: the
reciprocal function checked against itself, 1/(1/x) = x.

The seeded bugs are a truncated Taylor series for sine and a constant
offset for the reciprocal.
"""

from __future__ import annotations

import math

from ..core import IDENTITY_MUTATOR, Mode, Mutator, SuiteDefinition, Variant, TrialContext

__all__ = [
    "sine_forward_suite",
    "sine_backward_suite",
    "reciprocal_integrated_suite",
]

# Whole-turn shifts amplify argument-reduction error, so the backward-mode
# relation uses its own absolute tolerance instead of the configured eps.
EPS_TRIG = 1e-9


def _sin(x: float, ctx: TrialContext) -> float:
    return math.sin(x)


def _taylor3_sin(x: float, ctx: TrialContext) -> float:
    # Three-term Taylor series, accurate only near zero.
    return x - x**3 / 6 + x**5 / 120


def _arcsin_trusted(t: float, ctx: TrialContext) -> float:
    # Clamp so that slightly out-of-range forward outputs surface as
    # relation violations rather than math-domain crashes.
    return math.asin(min(1.0, max(-1.0, t)))


def sine_forward_suite() -> SuiteDefinition:
    """Forward mode: arcsin(sin(x)) = x on [-pi/2, pi/2]."""

    def generate(ctx: TrialContext) -> float:
        return ctx.rng.uniform(-math.pi / 2, math.pi / 2)

    def relation(x, x_prime, mutation, ctx) -> bool:
        return abs(x - x_prime) <= ctx.eps * max(1.0, abs(x))

    return SuiteDefinition(
        name="sine_forward",
        mode=Mode.FORWARD,
        generator=generate,
        forward=_sin,
        backward=_arcsin_trusted,
        relation=relation,
        variants={
            "correct": Variant(),
            "taylor3": Variant(forward=_taylor3_sin),
        },
    )


def sine_backward_suite() -> SuiteDefinition:
    """Backward mode: sin(arcsin(t) + 2k*pi) = t on [-1, 1]."""

    def generate(ctx: TrialContext) -> float:
        return ctx.rng.uniform(-1.0, 1.0)

    def add_whole_turns(angle: float, ctx: TrialContext):
        k = ctx.rng.randint(-3, 3)
        return angle + 2.0 * math.pi * k, {"k": k}

    def relation(t, t_prime, mutation, ctx) -> bool:
        return abs(t - t_prime) <= EPS_TRIG

    return SuiteDefinition(
        name="sine_backward",
        mode=Mode.BACKWARD,
        generator=generate,
        forward=_arcsin_trusted,
        backward=_sin,
        relation=relation,
        mutators=(Mutator("add_2kpi", add_whole_turns),),
        variants={
            "correct": Variant(),
            "taylor3": Variant(backward=_taylor3_sin),
        },
    )


def _reciprocal(x: float, ctx: TrialContext) -> float:
    return 1.0 / x


def _reciprocal_off(x: float, ctx: TrialContext) -> float:
    return 1.0 / x + 1e-6


def reciprocal_integrated_suite() -> SuiteDefinition:
    """Integrated mode: 1/(1/x) = x for x away from zero.

    The tolerance scales with x squared because the double reciprocal
    amplifies absolute error for large magnitudes.
    """

    def generate(ctx: TrialContext) -> float:
        while True:
            x = ctx.rng.uniform(-10.0, 10.0)
            if abs(x) >= 1e-3:
                return x

    def relation(x, x_prime, mutation, ctx) -> bool:
        return abs(x - x_prime) <= ctx.eps * max(1.0, x * x)

    return SuiteDefinition(
        name="reciprocal",
        mode=Mode.INTEGRATED,
        generator=generate,
        forward=_reciprocal,
        backward=_reciprocal,
        relation=relation,
        mutators=(IDENTITY_MUTATOR,),
        variants={
            "correct": Variant(),
            "off_by_eps": Variant(forward=_reciprocal_off, backward=_reciprocal_off),
        },
    )
