"""Information measures and complexities of D-dimensional hydrogenic states."""

import json

from ._core import (
    AccuracyError,
    DomainError,
    HyperState,
    StateError,
    circular_lmc,
    circular_state,
    complexities,
    derived_params,
    enumerate_states,
    ground_state_lmc,
    measures,
    momentum_density,
    oracle_measures,
    oracle_moment,
    position_density,
    sweep_csv,
)
from ._core import _compute_json, _validate_json


def compute(state, Z=1.0, space="both"):
    """Same report as `hydrocx compute --out json`, as a dict."""
    return json.loads(_compute_json(state, Z, space))


def validate(dims=(2, 3, 4, 6), n_max=4, tol=1e-6, threads=1):
    """Closed-form versus oracle rows, as a list of dicts."""
    return json.loads(_validate_json(list(dims), n_max, tol, threads))


__all__ = [
    "AccuracyError",
    "DomainError",
    "HyperState",
    "StateError",
    "circular_lmc",
    "circular_state",
    "complexities",
    "compute",
    "derived_params",
    "enumerate_states",
    "ground_state_lmc",
    "measures",
    "momentum_density",
    "oracle_measures",
    "oracle_moment",
    "position_density",
    "sweep_csv",
    "validate",
]
