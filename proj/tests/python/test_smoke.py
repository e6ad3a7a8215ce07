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

import math

import pytest

import poclib


RAYLEIGH_UNIT = 1.0 - math.exp(-0.5)


def test_rayleigh_closed_form():
    g = poclib.DiagGaussian2((0.0, 0.0), 1.0, 1.0)
    for fn in (poclib.poc_local_single, poclib.poc_local_double, poclib.poc_polar):
        assert fn(1.0, g).value == pytest.approx(RAYLEIGH_UNIT, abs=1e-6)
    assert poclib.poc_global_single(1.0, (0, 0), (0, 0), 1.0, 1.0).value == pytest.approx(
        RAYLEIGH_UNIT, abs=1e-6
    )
    assert poclib.poc_global_double(1.0, (0, 0), (0, 0), 1.0, 1.0).value == pytest.approx(
        RAYLEIGH_UNIT, abs=1e-6
    )


def test_mcs_determinism_and_error_estimate():
    g = poclib.DiagGaussian2((0.5, -0.5), 1.0, 2.0)
    a = poclib.poc_mcs(2.0, g, n_samples=20000, seed=42)
    b = poclib.poc_mcs(2.0, g, n_samples=20000, seed=42)
    assert a.value == b.value
    assert a.samples_used == 20000
    assert a.error_estimate == pytest.approx(
        math.sqrt(a.value * (1 - a.value) / 20000), abs=1e-12
    )


def test_sampling_reproducible():
    g = poclib.DiagGaussian2((1.0, 2.0), 0.5, 0.25)
    assert poclib.sample(g, seed=7, n=100) == poclib.sample(g, seed=7, n=100)


def test_cover_arrangement_and_counts():
    arr = poclib.cover_arrangement(4.5, 2.0, 6, n_axes=2)
    assert arr.n_circles == 6
    assert len(arr.centers) == 6
    assert arr.axial_spacing == pytest.approx(1.5)
    assert poclib.lens_overlap_counts(6, 2) == (7, 2)

    inscribed = poclib.inscribed_two_circles(4.5, 2.0)
    assert inscribed.inscribed
    assert inscribed.radius == pytest.approx(1.0)


def test_multi_circle_breakdown_identity():
    arr = poclib.cover_arrangement(4.5, 2.0, 6, n_axes=2)
    g = poclib.DiagGaussian2((1.0, 0.5), 1.5, 2.0)
    breakdown = poclib.poc_multi_circle(arr, 2.0, g)
    recomputed = (
        sum(breakdown.circle_terms) - sum(breakdown.lens_terms) + sum(breakdown.overlap_terms)
    )
    assert breakdown.total == pytest.approx(recomputed, abs=1e-9)
    assert 0.0 <= breakdown.total <= 1.0


def test_bounds_order():
    g = poclib.DiagGaussian2((2.0, 3.0), 1.5, 2.5)
    b = poclib.poc_bounds(4.5, 2.0, 2.0, g)
    assert 0.0 <= b.lower <= b.upper <= 1.0
    assert b.delta == pytest.approx(b.upper - b.lower)


def test_invalid_inputs_raise():
    with pytest.raises(ValueError):
        poclib.DiagGaussian2((0, 0), 0.0, 1.0)
    with pytest.raises(ValueError):
        poclib.cover_arrangement(4.5, 2.0, 5, n_axes=2)


def test_scenario_presets_and_run():
    cfg = poclib.scenario_a()
    assert cfg.mcs_samples == 100000
    cfg.mcs_samples = 2000
    cfg.horizon = 1.0
    rows = poclib.run_scenario(cfg)
    assert len(rows) == 11
    assert rows[0].t == 0.0
    for row in rows:
        assert row.poc_lower <= row.poc_upper
        assert row.delta == pytest.approx(row.poc_upper - row.poc_lower)

    b = poclib.scenario_b()
    parsed = poclib.scenario_config_from_json(b.to_json())
    assert parsed.mcs_samples == b.mcs_samples


def test_logistic_sigma_midpoint():
    assert poclib.logistic_sigma(6.0, 1.0, 2.0, 5.0, 1.0) == pytest.approx((1.0, 2.5))
