import dataclasses

import pytest

from retroharness.core import SuiteConfig, SuiteDefinition, run_trial


@pytest.fixture
def force_input():
    """Run one trial of a suite with the generator pinned to a fixed datum."""

    def _force(suite: SuiteDefinition, value, variant="correct", seed=42, **config_kwargs):
        pinned = dataclasses.replace(suite, generator=lambda ctx: value)
        config = SuiteConfig(master_seed=seed, variant_id=variant, **config_kwargs)
        return run_trial(pinned, config, 0)

    return _force
