# Copyright 2026 The noisyot Authors
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

"""Oblivious transfer in the noisy-quantum-storage model.

Thin python layer over the C++ core: states and entropies, the
depolarizing-storage uncertainty bound, security-parameter calculators,
and the protocol Monte Carlo.
"""

from ._core import (  # noqa: F401
    CqState,
    DensityMatrix,
    MeasurementOperator,
    ParameterError,
    UnsupportedError,
    ValidationError,
    abort_interval,
    aep_lower_bound,
    bb84_state,
    binary_entropy,
    binary_entropy_inv,
    c_distance,
    chernoff_tail,
    cost_B_orbit,
    cost_C,
    depolarize,
    ell_ideal,
    ell_robust,
    fidelity,
    guess_prob_cq,
    guess_prob_dual_sdp,
    helstrom_guess_prob,
    ident_security,
    min_entropy_cq,
    non_uniformity,
    pa_bound,
    qber_threshold,
    r_hat,
    secure_predicate,
    simulate,
    split_index,
    t_closed_form,
    t_numeric,
    toeplitz_hash,
    trace_distance,
    von_neumann_entropy,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
