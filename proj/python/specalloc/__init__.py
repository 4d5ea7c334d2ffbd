"""Admission control and channel selection under SINR requirements.

Scenarios, problems and results are plain dicts with the same layout as the
``specalloc`` command line tool's JSON.
"""

import json

from . import _core
from ._core import BudgetExceeded

__all__ = [
    "BudgetExceeded",
    "admit",
    "build_problem",
    "evaluate",
    "generate",
    "solve",
    "solve_exact",
    "verify",
]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def generate(config=None, **overrides):
    """Draw a random scenario. Keyword overrides take GenConfig field names."""
    cfg = dict(config or {})
    cfg.update(overrides)
    return json.loads(_core.generate(json.dumps(cfg) if cfg else ""))


def build_problem(scenario, transform="unequal", density=1.0 / 800.0):
    return json.loads(_core.build_problem(_dump(scenario), transform, density))


def admit(problem):
    return json.loads(_core.admit(_dump(problem)))


def solve(scenario, transform="unequal", seed=1, density=1.0 / 800.0):
    """Run transform, admission and channel selection on a scenario."""
    return json.loads(_core.solve(_dump(scenario), transform, seed, density))


def evaluate(scenario, allocation):
    """Success report for an allocation given as a list of channels (None or 0 for silent)."""
    channels = [0 if c is None else int(c) for c in allocation]
    return json.loads(_core.evaluate(_dump(scenario), channels))


def solve_exact(scenario, budget=100_000_000):
    return json.loads(_core.solve_exact(_dump(scenario), budget))


def verify(scenario, seed=1):
    return json.loads(_core.verify(_dump(scenario), seed))
