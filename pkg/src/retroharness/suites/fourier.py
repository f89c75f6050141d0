"""Discrete Fourier transform suite with metamorphic and differential
baselines.

The transform pair is the direct O(N^2) summation

    X_k = sum_n x_n * exp(-2j*pi*k*n/N)        (forward)
    x_n = (1/N) * sum_k X_k * exp(+2j*pi*k*n/N) (inverse)

The seeded bug ("coef_minus_1j") types the exponent coefficient as -1j
instead of -2j in both directions, mirroring a shared-implementation
transform selected by an option flag.  Relations compare real parts; the
generated inputs are real sequences, so the identity round trip keeps the
imaginary parts at rounding level.

Besides the round-trip suite, two baseline checks over the same inputs are
provided for methodology comparison: a metamorphic relation (adding c to
x_0 shifts every spectrum entry by c) that the seeded bug satisfies
identically, and a differential check against a radix-2 FFT.
"""

from __future__ import annotations

import cmath

import numpy as np

from ..core import (
    IDENTITY_MUTATOR,
    Mode,
    Mutator,
    SuiteDefinition,
    TrialContext,
    Variant,
    Verdict,
)
from ..generators import gen_real_sequence

__all__ = [
    "VARIANTS",
    "dft",
    "idft",
    "fft",
    "pad_to_pow2",
    "fourier_suite",
    "metamorphic_baseline",
    "differential_baseline",
    "manual_fixture_check",
]

VARIANTS = ("correct", "coef_minus_1j")

# Exponent coefficient per variant; the buggy one is -1j where -2j belongs.
_COEF = {"correct": -2j, "coef_minus_1j": -1j}


def _coef(variant: str) -> complex:
    try:
        return _COEF[variant]
    except KeyError:
        raise ValueError(f"unknown transform variant {variant!r}") from None


def _transform_matrix(n: int, coef: complex) -> np.ndarray:
    k = np.arange(n)
    return np.exp(coef * np.pi / n * np.outer(k, k))


def dft(x, variant: str = "correct") -> list[complex]:
    """Direct-summation transform; O(N^2)."""
    coef = _coef(variant)
    a = np.asarray(list(x), dtype=complex)
    if a.size == 0:
        raise ValueError("empty sequence")
    return [complex(v) for v in _transform_matrix(a.size, coef) @ a]


def idft(x, variant: str = "correct") -> list[complex]:
    """Inverse transform: conjugated exponent and 1/N scaling."""
    coef = _coef(variant)
    a = np.asarray(list(x), dtype=complex)
    if a.size == 0:
        raise ValueError("empty sequence")
    return [complex(v) for v in (_transform_matrix(a.size, -coef) @ a) / a.size]


def fft(x) -> list[complex]:
    """Radix-2 Cooley-Tukey transform; the length must be a power of two."""
    xs = [complex(v) for v in x]
    n = len(xs)
    if n == 0 or n & (n - 1):
        raise ValueError(f"fft length must be a power of two, got {n}")
    return _fft(xs)


def _fft(xs: list[complex]) -> list[complex]:
    n = len(xs)
    if n == 1:
        return xs
    even = _fft(xs[0::2])
    odd = _fft(xs[1::2])
    twiddled = [cmath.exp(-2j * cmath.pi * k / n) * odd[k] for k in range(n // 2)]
    return [even[k] + twiddled[k] for k in range(n // 2)] + [
        even[k] - twiddled[k] for k in range(n // 2)
    ]


def pad_to_pow2(x) -> list:
    """Zero-pad a sequence up to the next power-of-two length."""
    xs = list(x)
    n = max(1, len(xs))
    target = 1
    while target < n:
        target *= 2
    return xs + [0.0] * (target - len(xs))


def fourier_suite() -> SuiteDefinition:
    """Integrated round trip: inverse(transform(x)) = x on real parts.

    Mutators: identity, and adding a constant c in [0, 1) to every
    spectrum entry, which must land entirely on x_0.
    """

    def generate(ctx: TrialContext) -> list[float]:
        return gen_real_sequence(ctx.rng, 1, 64, -1.0, 1.0)

    def forward_correct(x, ctx: TrialContext):
        return dft(x, "correct")

    def backward_correct(x, ctx: TrialContext):
        return idft(x, "correct")

    def forward_buggy(x, ctx: TrialContext):
        return dft(x, "coef_minus_1j")

    def backward_buggy(x, ctx: TrialContext):
        return idft(x, "coef_minus_1j")

    def add_constant(spectrum, ctx: TrialContext):
        c = ctx.rng.random()
        return [value + c for value in spectrum], {"c": c}

    def relation(x, x_prime, mutation, ctx) -> bool:
        shift = mutation.parameters.get("c", 0.0)
        if abs(x_prime[0].real - (x[0] + shift)) > ctx.eps:
            return False
        return all(
            abs(x_prime[i].real - x[i]) <= ctx.eps for i in range(1, len(x))
        )

    return SuiteDefinition(
        name="fourier",
        mode=Mode.INTEGRATED,
        generator=generate,
        forward=forward_correct,
        backward=backward_correct,
        relation=relation,
        mutators=(IDENTITY_MUTATOR, Mutator("add_constant", add_constant)),
        variants={
            "correct": Variant(),
            "coef_minus_1j": Variant(forward=forward_buggy, backward=backward_buggy),
        },
    )


def metamorphic_baseline(x, c: float, variant: str = "correct", eps: float = 1e-10) -> Verdict:
    """Single-program check: adding c to x_0 must add c to every X_k.

    The seeded exponent bug still maps the first input sample with weight
    exp(0) = 1, so this relation holds for it identically and the check
    passes on the buggy variant.
    """
    xs = list(x)
    base = dft(xs, variant)
    shifted_input = [xs[0] + c] + xs[1:]
    shifted = dft(shifted_input, variant)
    for i in range(len(xs)):
        if abs(shifted[i].real - base[i].real - c) > eps:
            return Verdict.violation(
                f"metamorphic relation violated at index {i}: "
                f"base={base[i].real!r} shifted={shifted[i].real!r} c={c!r}"
            )
    return Verdict.passed()


def differential_baseline(x, variant: str = "correct", eps: float = 1e-10) -> Verdict:
    """Compare the direct transform against the radix-2 FFT on real parts.

    The input length must already be a power of two; use
    :func:`pad_to_pow2` on generated sequences first.
    """
    xs = list(x)
    n = len(xs)
    if n == 0 or n & (n - 1):
        raise ValueError(f"differential baseline needs a power-of-two length, got {n}")
    direct = dft(xs, variant)
    reference = fft(xs)
    for i in range(n):
        if abs(direct[i].real - reference[i].real) > eps:
            return Verdict.violation(
                f"implementations disagree at index {i}: "
                f"direct={direct[i].real!r} fft={reference[i].real!r}"
            )
    return Verdict.passed()


def manual_fixture_check(variant: str = "correct", eps: float = 1e-10) -> Verdict:
    """The classic hand-written fixture: [1, 0, 1, 0] transforms to
    [2, 0, 2, 0]."""
    expected = [2.0, 0.0, 2.0, 0.0]
    actual = dft([1.0, 0.0, 1.0, 0.0], variant)
    for i in range(4):
        if abs(actual[i].real - expected[i]) > eps:
            return Verdict.violation(
                f"expected real parts {expected}, got {[v.real for v in actual]!r}"
            )
    return Verdict.passed()
