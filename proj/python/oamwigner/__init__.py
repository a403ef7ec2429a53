# Copyright 2026 The oamwigner Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http:#www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Wigner functions for orbital-angular-momentum states."""

import json as _json

from ._core import (  # noqa: F401
    BlochDensity,
    Error,
    InvalidArgument,
    NumericalError,
    QubitSpec,
    State,
    TwoModeState,
    bell_state,
    bell_wigner,
    density_overlap,
    density_wigner,
    kernel_element,
    marginal_angle,
    marginal_momentum,
    oracle_wigner,
    qubit_state,
    qubit_wigner,
    sinc_pi,
    transition_probability,
    transition_probability_phase_space,
    wigner,
)
from . import _core

__version__ = "0.1.0"


def evaluate_grid(kind, state, grid, path="bilinear", scale="raw"):
    """Evaluate on a grid string such as "theta=-pi:pi:64,p=-3:3:121".

    ``kind`` is one of qubit, bell, two-qubit, density or json, with ``state``
    in the matching CLI shorthand (or a JSON document).
    """
    return _json.loads(_core._eval(kind, state, grid, path, scale))


def probabilities(kind, state, method="analytic"):
    return _json.loads(_core._probs(kind, state, method))


def negativity(kind, state, grid):
    return _json.loads(_core._negativity(kind, state, grid))


def verify(radius=1000, seed=20240601):
    return _json.loads(_core._verify(radius, seed))
