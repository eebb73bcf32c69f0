# Copyright 2026 The vtqg Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Virtual two-qubit gate decomposition and TFIM experiment harness."""

import json as _json

from ._vtqg import (
    InvalidArgument,
    InvalidCircuit,
    ResourceLimit,
    UnsupportedOperation,
    UnsupportedTopology,
    __version__,
    decompose_vrzz,
    exact_reference,
    gamma,
    grouped_weights,
    normalize_circuit,
    swap_count,
)
from . import _vtqg


def run_experiment(config=None):
    """Run an experiment; `config` is a dict with ExperimentConfig fields."""
    return _vtqg.run_experiment(_json.dumps(config or {}))


def results_csv(config=None):
    return _vtqg.results_csv(_json.dumps(config or {}))


__all__ = [
    "InvalidArgument",
    "InvalidCircuit",
    "ResourceLimit",
    "UnsupportedOperation",
    "UnsupportedTopology",
    "__version__",
    "decompose_vrzz",
    "exact_reference",
    "gamma",
    "grouped_weights",
    "normalize_circuit",
    "results_csv",
    "run_experiment",
    "swap_count",
]
