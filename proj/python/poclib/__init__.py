# Copyright 2026 The poclib Authors
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

"""Collision probability estimation for circle-approximated vehicles."""

from ._core import (
    BoundsResult,
    CoverArrangement,
    DiagGaussian2,
    MultiCircleBreakdown,
    PocResult,
    QuadratureError,
    QuadratureSpec,
    ScenarioConfig,
    TimeSeriesRow,
    cover_arrangement,
    erf,
    inscribed_two_circles,
    lens_overlap_counts,
    logistic_sigma,
    pdf,
    poc_bounds,
    poc_global_double,
    poc_global_single,
    poc_local_double,
    poc_local_single,
    poc_mcs,
    poc_multi_circle,
    poc_polar,
    run_scenario,
    sample,
    scenario_a,
    scenario_b,
    scenario_config_from_json,
)

__all__ = [
    "BoundsResult",
    "CoverArrangement",
    "DiagGaussian2",
    "MultiCircleBreakdown",
    "PocResult",
    "QuadratureError",
    "QuadratureSpec",
    "ScenarioConfig",
    "TimeSeriesRow",
    "cover_arrangement",
    "erf",
    "inscribed_two_circles",
    "lens_overlap_counts",
    "logistic_sigma",
    "pdf",
    "poc_bounds",
    "poc_global_double",
    "poc_global_single",
    "poc_local_double",
    "poc_local_single",
    "poc_mcs",
    "poc_multi_circle",
    "poc_polar",
    "run_scenario",
    "sample",
    "scenario_a",
    "scenario_b",
    "scenario_config_from_json",
]

__version__ = "0.1.0"
