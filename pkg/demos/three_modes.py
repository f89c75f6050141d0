"""The three testing modes on elementary functions.

Forward mode: the program under test maps the data out of its home
modality and a trusted auxiliary maps it back (sine checked through
arcsine).  Backward mode: a trusted auxiliary produces the intermediate
datum, optionally mutated, and the program under test maps it back (sine
fed shifted angles).  Integrated mode: the program under test plays both
roles (the reciprocal is its own inverse).
"""

from retroharness import SuiteConfig, get_suite, run_suite

CASES = [
    ("sine_forward", "taylor3",
     "arcsin(sin(x)) = x on [-pi/2, pi/2]"),
    ("sine_backward", "taylor3",
     "sin(arcsin(t) + 2k*pi) = t, with the angle shifted k whole turns"),
    ("reciprocal", "off_by_eps",
     "1/(1/x) = x for x away from zero"),
]

for name, buggy_variant, relation_text in CASES:
    suite = get_suite(name)
    print(f"{name} ({suite.mode.value} mode): {relation_text}")
    for variant in ("correct", buggy_variant):
        summary, _ = run_suite(
            suite, SuiteConfig(iterations=2000, master_seed=42, variant_id=variant)
        )
        print(f"  variant {variant!r}: {summary.violations} violations in 2000 trials")
    print()

# Every failure is replayable: the summary records the first failing seed.
summary, _ = run_suite(
    get_suite("sine_backward"),
    SuiteConfig(iterations=2000, master_seed=42, variant_id="taylor3"),
)
print("replay the first sine_backward failure with:")
print(f"  retroharness replay --suite sine_backward --variant taylor3 "
      f"--trial-seed {summary.first_failure_seed}")
