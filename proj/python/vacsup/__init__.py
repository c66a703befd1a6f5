# Copyright 2026 The vacsup Authors
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

"""Simulator for coherent superpositions of vacuum-extended quantum channels."""

from vacsup._core import (
    Family,
    OutcomePolicy,
    ScenarioSpec,
    VacsupError,
    VacuumConfig,
    builtin,
    builtin_names,
    concurrence,
    evaluate_point,
    fid_closed_bitphase,
    fid_closed_depolarizing,
    fidelity_pure,
    fidelity_uhlmann,
    linspace,
    optimize_amplitudes,
    step_operator,
    sweep,
    verify_embedding,
    verify_propositions,
    walk,
)

__all__ = [
    "Family",
    "OutcomePolicy",
    "ScenarioSpec",
    "VacsupError",
    "VacuumConfig",
    "builtin",
    "builtin_names",
    "concurrence",
    "evaluate_point",
    "fid_closed_bitphase",
    "fid_closed_depolarizing",
    "fidelity_pure",
    "fidelity_uhlmann",
    "linspace",
    "optimize_amplitudes",
    "step_operator",
    "sweep",
    "verify_embedding",
    "verify_propositions",
    "walk",
]
