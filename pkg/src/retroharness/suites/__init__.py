"""Built-in suites and their registry entries."""

from ..core import register_suite
from .elementary import (
    reciprocal_integrated_suite,
    sine_backward_suite,
    sine_forward_suite,
)
from .factorization import factorization_suite
from .fourier import fourier_suite
from .notation import notation_suite
from .vm import vm_suite

__all__ = [
    "sine_forward_suite",
    "sine_backward_suite",
    "reciprocal_integrated_suite",
    "fourier_suite",
    "factorization_suite",
    "notation_suite",
    "vm_suite",
]

for _suite in (
    fourier_suite(),
    factorization_suite(),
    factorization_suite(strict=True),
    notation_suite(),
    vm_suite(),
    sine_forward_suite(),
    sine_backward_suite(),
    reciprocal_integrated_suite(),
):
    register_suite(_suite)
del _suite
