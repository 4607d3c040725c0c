"""Python interface to the reactsim C++ library.

Configurations may be given as a JSON string, a dict, or a preset name.
"""

import json

from . import _core
from ._core import (
    ReactsimError,
    adaptive_beats_fixed_threshold,
    derived,
    limit_agent_utility,
    limit_opinion,
    preset_names,
    step,
    upsilon_adaptive,
    upsilon_decreasing,
    upsilon_fixed,
    wasserstein_samples,
)

__all__ = [
    "ReactsimError",
    "adaptive_beats_fixed_threshold",
    "derived",
    "limit_agent_utility",
    "limit_opinion",
    "population",
    "preset",
    "preset_names",
    "resolve",
    "run",
    "step",
    "sweep",
    "upsilon_adaptive",
    "upsilon_decreasing",
    "upsilon_fixed",
    "verify",
    "wasserstein_samples",
]


def _text(config):
    if isinstance(config, dict):
        return json.dumps(config)
    if config in _core.preset_names():
        return _core.preset_text(config)
    return config


def preset(name):
    """Preset configuration as a dict."""
    return json.loads(_core.preset_text(name))


def resolve(config):
    """Fully resolved configuration with every default filled in."""
    return json.loads(_core.resolve_config(_text(config)))


def run(config):
    """One trace dict per configured agent policy."""
    return _core.run_config(_text(config))


def sweep(config, jobs=0):
    return _core.sweep_config(_text(config), jobs)


def population(config, jobs=0):
    return _core.population_config(_text(config), jobs)


def verify(suite="all", jobs=0):
    return _core.verify(suite, jobs)
