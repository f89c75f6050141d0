"""Integer factorization suite (forward mode).

Pollard's rho plays the forward program under test; trusted integer
multiplication plays the backward program.  The relation checks that the
returned factors multiply back to the input, and the strict profile
additionally requires every factor to be prime.

The seeded bug ("gcd_x") computes the candidate divisor as
gcd(|x - y|, x) instead of gcd(|x - y|, n).  The extracted "divisor" then
need not divide n, so the recursion can split n incorrectly (12 famously
factors to [2, 2, 2]), stall at d = 1 until the step cap trips, or crash
in gcd; all three outcomes are observable verdicts.
"""

from __future__ import annotations

import math

from ..core import Mode, StepCapExceeded, SuiteDefinition, TrialContext, Variant
from ..generators import Rng, gen_integer

__all__ = [
    "gcd",
    "is_prime",
    "pollards_rho",
    "multiply_product",
    "factorization_suite",
]

# Witnesses making Miller-Rabin deterministic for all 64-bit integers.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_MAX_RESTARTS = 20


def gcd(a: int, b: int) -> int:
    """Euclidean greatest common divisor of two nonnegative integers."""
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return a


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every 64-bit integer."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class _StepBudget:
    """Shared count of remaining polynomial evaluations."""

    __slots__ = ("remaining",)

    def __init__(self, cap: int) -> None:
        self.remaining = cap


def pollards_rho(
    n: int,
    variant: str = "correct",
    rng: Rng | None = None,
    step_cap: int = 10_000_000,
) -> list[int]:
    """Factor n with Pollard's rho; the total number of polynomial
    iterations across the whole recursion is bounded by step_cap.

    The correct variant strips twos, short-circuits on primes, retries a
    failed split with fresh random parameters, and therefore only returns
    prime factors.  The "gcd_x" variant reproduces the seeded bug with
    neither safeguard.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if variant not in ("correct", "gcd_x"):
        raise ValueError(f"unknown variant {variant!r}")
    if rng is None:
        rng = Rng(0)
    budget = _StepBudget(step_cap)
    buggy = variant == "gcd_x"

    def try_split(m: int) -> int:
        """One rho walk; returns a divisor d > 1 (possibly m itself).

        Each loop turn advances x once and y twice, three polynomial
        evaluations, debited from the shared budget before the turn runs.
        """
        x = rng.randint(1, m - 1)
        y = x
        c = rng.randint(1, m - 1)
        d = 1
        remaining = budget.remaining
        try:
            while d <= 1:
                if remaining < 3:
                    remaining -= 3
                    raise StepCapExceeded("polynomial-iteration budget exhausted")
                remaining -= 3
                x = (x * x + c) % m
                t = (y * y + c) % m
                y = (t * t + c) % m
                d = gcd(abs(x - y), x if buggy else m)
        finally:
            budget.remaining = remaining
        return d

    def factor(m: int) -> list[int]:
        if m == 1:
            return []
        if m % 2 == 0:
            return [2] + factor(m // 2)
        if not buggy and is_prime(m):
            return [m]
        d = try_split(m)
        if not buggy:
            restarts = 0
            while d == m and restarts < _MAX_RESTARTS:
                restarts += 1
                d = try_split(m)
        if d == m:
            return [m]
        return factor(d) + factor(m // d)

    return factor(n)


def multiply_product(factors) -> int:
    """Product of all factors; the empty list multiplies to 1."""
    return math.prod(factors)


def factorization_suite(strict: bool = False) -> SuiteDefinition:
    """Forward-mode suite over n in [2, 10^12].

    The plain relation checks the product alone; the strict profile also
    requires every returned factor to pass the primality test.
    """

    def generate(ctx: TrialContext) -> int:
        return gen_integer(ctx.rng, 2, 10**12)

    def forward_correct(n: int, ctx: TrialContext) -> list[int]:
        return pollards_rho(n, "correct", ctx.rng, ctx.step_cap)

    def forward_buggy(n: int, ctx: TrialContext) -> list[int]:
        return pollards_rho(n, "gcd_x", ctx.rng, ctx.step_cap)

    def backward(factors, ctx: TrialContext) -> int:
        return multiply_product(factors)

    def relation(n, n_prime, mutation, ctx) -> bool:
        return n_prime == n

    def relation_strict(n, n_prime, mutation, ctx) -> bool:
        return n_prime == n and all(is_prime(f) for f in ctx.m2_mutated)

    return SuiteDefinition(
        name="factorization_strict" if strict else "factorization",
        mode=Mode.FORWARD,
        generator=generate,
        forward=forward_correct,
        backward=backward,
        relation=relation_strict if strict else relation,
        variants={
            "correct": Variant(),
            "gcd_x": Variant(forward=forward_buggy),
        },
    )
