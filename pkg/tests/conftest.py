"""Shared fixtures and hypothesis configuration."""
import sys

import hypothesis
import pytest

from isospec.models import SHOWCASE
from isospec.susy import build_family

# The eigensolver kernels are JIT-compiled on first use, which would trip
# hypothesis' per-example deadline; shrink counts a little for CI friendliness.
hypothesis.settings.register_profile("suite", deadline=None, max_examples=40)
hypothesis.settings.load_profile("suite")


@pytest.fixture(scope="session")
def showcase():
    """The three model instances exercised throughout: one per family."""
    return SHOWCASE


@pytest.fixture(scope="session")
def families(showcase):
    """Moderately fine deformation families keyed by family name (read-only)."""
    return {spec.family: build_family(spec, n=2001) for spec in showcase}


def pytest_terminal_summary(terminalreporter, exitstatus):
    """Replay the acceptance scorecard after the run so the one-line verdicts
    survive output capture."""
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "SCORECARD", None) if mod is not None else None
    if lines:
        terminalreporter.section("acceptance scorecard")
        for line in lines:
            terminalreporter.write_line(line)
