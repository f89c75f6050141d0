import sys

import pytest

from retroharness.adapter import ExternalProgram, ExternalProgramError
from retroharness.core import (
    ConfigError,
    Mode,
    Stage,
    SuiteConfig,
    SuiteDefinition,
    TrialContext,
    run_suite,
)
from retroharness.generators import Rng

ECHO = """
import json, sys
for line in sys.stdin:
    req = json.loads(line)
    print(json.dumps({"id": req["id"], "data": req["data"]}), flush=True)
"""

ERROR = """
import json, sys
for line in sys.stdin:
    req = json.loads(line)
    print(json.dumps({"id": req["id"], "error": "boom"}), flush=True)
"""

STALL = """
import sys, time
sys.stdin.readline()
time.sleep(60)
"""

CRASH_AFTER_ONE = """
import json, sys
line = sys.stdin.readline()
req = json.loads(line)
print(json.dumps({"id": req["id"], "data": req["data"]}), flush=True)
sys.exit(3)
"""

MALFORMED = """
import sys
sys.stdin.readline()
print("not json", flush=True)
"""


def fixture_command(body: str) -> list[str]:
    return [sys.executable, "-u", "-c", body]


def make_ctx() -> TrialContext:
    return TrialContext(rng=Rng(0), eps=1e-10, step_cap=1)


def external_suite(program: ExternalProgram) -> SuiteDefinition:
    return SuiteDefinition(
        name="external_echo",
        mode=Mode.INTEGRATED,
        generator=lambda ctx: ctx.rng.randint(0, 10**6),
        forward=program,
        backward=program,
        relation=lambda m1, m1p, mutation, ctx: m1 == m1p,
    )


class TestExternalProgram:
    def test_loopback_round_trip(self):
        with ExternalProgram(fixture_command(ECHO)) as program:
            assert program({"x": [1, 2, 3]}, make_ctx()) == {"x": [1, 2, 3]}
            assert program("text", make_ctx()) == "text"

    def test_loopback_suite_100_trials_pass(self):
        with ExternalProgram(fixture_command(ECHO)) as program:
            summary, _ = run_suite(external_suite(program), SuiteConfig(iterations=100))
        assert summary.passes == 100

    def test_reported_error_becomes_program_error_and_suite_continues(self):
        with ExternalProgram(fixture_command(ERROR)) as program:
            summary, reports = run_suite(external_suite(program), SuiteConfig(iterations=5))
        assert summary.program_errors == 5
        assert all(r.verdict.stage is Stage.FORWARD_EXEC for r in reports)
        assert all("boom" in r.verdict.detail for r in reports)

    def test_stall_times_out_without_harness_failure(self):
        with ExternalProgram(fixture_command(STALL), timeout=0.5) as program:
            summary, reports = run_suite(external_suite(program), SuiteConfig(iterations=2))
        assert summary.program_errors == 2
        assert all("timed out" in r.verdict.detail for r in reports)

    def test_crashing_child_is_restarted(self):
        with ExternalProgram(fixture_command(CRASH_AFTER_ONE), timeout=2.0) as program:
            ctx = make_ctx()
            assert program(1, ctx) == 1
            # The child exits after answering.  Depending on how quickly the
            # exit is observed, the next call either hits one error (and is
            # restarted) or already talks to a fresh child; either way the
            # harness keeps serving requests.
            try:
                assert program(2, ctx) == 2
            except ExternalProgramError:
                assert program(3, ctx) == 3

    def test_malformed_response_is_program_error(self):
        with ExternalProgram(fixture_command(MALFORMED), timeout=2.0) as program:
            with pytest.raises(ExternalProgramError):
                program(1, make_ctx())

    def test_spawn_failure_is_config_error(self):
        with pytest.raises(ConfigError):
            ExternalProgram(["/nonexistent/binary"])

    def test_role_validation(self):
        with pytest.raises(ConfigError):
            ExternalProgram(fixture_command(ECHO), role="sideways")

    def test_errors_do_not_poison_later_trials(self):
        # A sentinel datum stalls the child; other data echo normally even
        # after the stalled child was killed and replaced.
        mixed = """
import json, sys, time
for line in sys.stdin:
    req = json.loads(line)
    if req["data"] == "stall":
        time.sleep(60)
    print(json.dumps({"id": req["id"], "data": req["data"]}), flush=True)
"""
        with ExternalProgram(fixture_command(mixed), timeout=0.5) as program:
            ctx = make_ctx()
            with pytest.raises(ExternalProgramError):
                program("stall", ctx)
            assert program("ok", ctx) == "ok"
