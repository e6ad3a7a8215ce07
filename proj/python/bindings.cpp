// Copyright 2026 The poclib Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "poc/bench.hpp"
#include "poc/io.hpp"
#include "poc/poc_circle.hpp"
#include "poc/poc_multicircle.hpp"
#include "poc/scenario.hpp"

namespace py = pybind11;
using namespace poc;

namespace {

Vec2 to_vec2(const std::pair<double, double>& p) { return {p.first, p.second}; }
std::pair<double, double> from_vec2(Vec2 v) { return {v.x, v.y}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Collision probability estimation for circle-approximated vehicles";

  py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_ArithmeticError);

  py::class_<DiagGaussian2>(m, "DiagGaussian2")
      .def(py::init([](std::pair<double, double> mean, double sigma1, double sigma2) {
             const DiagGaussian2 g{to_vec2(mean), sigma1, sigma2};
             validate(g);
             return g;
           }),
           py::arg("mean"), py::arg("sigma1"), py::arg("sigma2"))
      .def_property_readonly("mean", [](const DiagGaussian2& g) { return from_vec2(g.mean); })
      .def_readonly("sigma1", &DiagGaussian2::sigma1)
      .def_readonly("sigma2", &DiagGaussian2::sigma2);

  py::class_<QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init<double, double, int>(), py::arg("abs_tol") = 1e-6,
           py::arg("rel_tol") = 1e-6, py::arg("max_subdivisions") = 50)
      .def_readonly("abs_tol", &QuadratureSpec::abs_tol)
      .def_readonly("rel_tol", &QuadratureSpec::rel_tol)
      .def_readonly("max_subdivisions", &QuadratureSpec::max_subdivisions);

  py::class_<PocResult>(m, "PocResult")
      .def_readonly("value", &PocResult::value)
      .def_property_readonly("method", [](const PocResult& r) { return to_string(r.method); })
      .def_readonly("error_estimate", &PocResult::error_estimate)
      .def_readonly("samples_used", &PocResult::samples_used)
      .def("__repr__", [](const PocResult& r) {
        return "PocResult(value=" + std::to_string(r.value) + ", method='" + to_string(r.method) +
               "')";
      });

  py::class_<CoverArrangement>(m, "CoverArrangement")
      .def_readonly("n_circles", &CoverArrangement::n_circles)
      .def_readonly("n_axes", &CoverArrangement::n_axes)
      .def_readonly("radius", &CoverArrangement::radius)
      .def_readonly("axial_spacing", &CoverArrangement::axial_spacing)
      .def_readonly("axis_spacing", &CoverArrangement::axis_spacing)
      .def_property_readonly("centers",
                             [](const CoverArrangement& arr) {
                               std::vector<std::pair<double, double>> out;
                               out.reserve(arr.centers.size());
                               for (const Vec2& c : arr.centers) out.push_back(from_vec2(c));
                               return out;
                             })
      .def_property_readonly("inscribed", [](const CoverArrangement& arr) {
        return arr.mode == CoverMode::kInscribed;
      });

  py::class_<MultiCircleBreakdown>(m, "MultiCircleBreakdown")
      .def_readonly("circle_terms", &MultiCircleBreakdown::circle_terms)
      .def_readonly("lens_terms", &MultiCircleBreakdown::lens_terms)
      .def_readonly("overlap_terms", &MultiCircleBreakdown::overlap_terms)
      .def_readonly("total", &MultiCircleBreakdown::total);

  py::class_<BoundsResult>(m, "BoundsResult")
      .def_readonly("lower", &BoundsResult::lower)
      .def_readonly("upper", &BoundsResult::upper)
      .def_readonly("delta", &BoundsResult::delta)
      .def("__repr__", [](const BoundsResult& b) {
        return "BoundsResult(lower=" + std::to_string(b.lower) +
               ", upper=" + std::to_string(b.upper) + ")";
      });

  py::class_<TimeSeriesRow>(m, "TimeSeriesRow")
      .def_readonly("t", &TimeSeriesRow::t)
      .def_property_readonly("ego_position",
                             [](const TimeSeriesRow& r) { return from_vec2(r.ego_pose.position); })
      .def_property_readonly("ego_heading",
                             [](const TimeSeriesRow& r) { return r.ego_pose.heading; })
      .def_property_readonly("object_position",
                             [](const TimeSeriesRow& r) { return from_vec2(r.object_position); })
      .def_readonly("distance", &TimeSeriesRow::distance)
      .def_readonly("sigma1", &TimeSeriesRow::sigma1)
      .def_readonly("sigma2", &TimeSeriesRow::sigma2)
      .def_readonly("poc_lower", &TimeSeriesRow::poc_lower)
      .def_readonly("poc_upper", &TimeSeriesRow::poc_upper)
      .def_readonly("delta", &TimeSeriesRow::delta)
      .def_readonly("poc_mcs_rect", &TimeSeriesRow::poc_mcs_rect);

  py::class_<ScenarioConfig>(m, "ScenarioConfig")
      .def_property("mcs_samples",
                    [](const ScenarioConfig& c) { return c.mcs_samples; },
                    [](ScenarioConfig& c, std::size_t n) { c.mcs_samples = n; })
      .def_property("mcs_seed",
                    [](const ScenarioConfig& c) { return c.mcs_seed.value; },
                    [](ScenarioConfig& c, std::uint64_t s) { c.mcs_seed = RandomSeed{s}; })
      .def_property("dt",
                    [](const ScenarioConfig& c) { return c.dt; },
                    [](ScenarioConfig& c, double dt) { c.dt = dt; })
      .def_property("horizon",
                    [](const ScenarioConfig& c) { return c.horizon; },
                    [](ScenarioConfig& c, double h) { c.horizon = h; })
      .def_property_readonly("object_radius",
                             [](const ScenarioConfig& c) { return c.object_radius; })
      .def("to_json", &scenario_config_to_json);

  m.def("scenario_config_from_json", &scenario_config_from_json, py::arg("text"));

  m.def("erf", &poc::erf, py::arg("x"), "Error function");
  m.def(
      "pdf",
      [](const DiagGaussian2& g, std::pair<double, double> q) { return pdf(g, to_vec2(q)); },
      py::arg("gaussian"), py::arg("q"));
  m.def(
      "sample",
      [](const DiagGaussian2& g, std::uint64_t seed, std::size_t n) {
        std::vector<std::pair<double, double>> out;
        out.reserve(n);
        for (const Vec2& v : sample(g, RandomSeed{seed}, n)) out.push_back(from_vec2(v));
        return out;
      },
      py::arg("gaussian"), py::arg("seed"), py::arg("n"));

  m.def(
      "poc_mcs",
      [](double collision_radius, const DiagGaussian2& g, std::size_t n, std::uint64_t seed) {
        return poc_mcs(CollisionDisc{collision_radius}, g, n, RandomSeed{seed});
      },
      py::arg("collision_radius"), py::arg("gaussian"), py::arg("n_samples") = 10000,
      py::arg("seed") = 0);

  auto bind_local = [&m](const char* name, PocResult (*fn)(const CollisionDisc&,
                                                           const DiagGaussian2&,
                                                           const QuadratureSpec&)) {
    m.def(
        name,
        [fn](double collision_radius, const DiagGaussian2& g, const QuadratureSpec& spec) {
          return fn(CollisionDisc{collision_radius}, g, spec);
        },
        py::arg("collision_radius"), py::arg("gaussian"), py::arg("spec") = QuadratureSpec{});
  };
  bind_local("poc_local_single", &poc_local_single);
  bind_local("poc_local_double", &poc_local_double);
  bind_local("poc_polar", &poc_polar);

  auto bind_global = [&m](const char* name,
                          PocResult (*fn)(const CollisionDisc&, Vec2, Vec2, double, double,
                                          const QuadratureSpec&)) {
    m.def(
        name,
        [fn](double collision_radius, std::pair<double, double> ego_pos,
             std::pair<double, double> obj_mean_global, double sigma1, double sigma2,
             const QuadratureSpec& spec) {
          return fn(CollisionDisc{collision_radius}, to_vec2(ego_pos), to_vec2(obj_mean_global),
                    sigma1, sigma2, spec);
        },
        py::arg("collision_radius"), py::arg("ego_pos"), py::arg("obj_mean_global"),
        py::arg("sigma1"), py::arg("sigma2"), py::arg("spec") = QuadratureSpec{});
  };
  bind_global("poc_global_single", &poc_global_single);
  bind_global("poc_global_double", &poc_global_double);

  m.def(
      "cover_arrangement",
      [](double length, double width, int n_circles, int n_axes) {
        return cover_arrangement(RectangleFootprint{length, width}, n_circles, n_axes);
      },
      py::arg("length"), py::arg("width"), py::arg("n_circles"), py::arg("n_axes") = 1);
  m.def(
      "inscribed_two_circles",
      [](double length, double width) {
        return inscribed_two_circles(RectangleFootprint{length, width});
      },
      py::arg("length"), py::arg("width"));
  m.def(
      "lens_overlap_counts",
      [](int n_circles, int n_axes) {
        const auto counts = lens_overlap_counts(n_circles, n_axes);
        return std::pair{counts.n_lenses, counts.n_overlaps};
      },
      py::arg("n_circles"), py::arg("n_axes"));

  m.def(
      "poc_multi_circle",
      [](const CoverArrangement& arr, double r_o, const DiagGaussian2& g,
         const QuadratureSpec& spec) { return poc_multi_axis(arr, r_o, g, spec); },
      py::arg("arrangement"), py::arg("object_radius"), py::arg("gaussian"),
      py::arg("spec") = QuadratureSpec{},
      "Inclusion-exclusion POC of a cover arrangement against a circular object");
  m.def(
      "poc_bounds",
      [](double length, double width, double r_o, const DiagGaussian2& g,
         const QuadratureSpec& spec) {
        return poc_bounds(RectangleFootprint{length, width}, r_o, g, spec);
      },
      py::arg("length"), py::arg("width"), py::arg("object_radius"), py::arg("gaussian"),
      py::arg("spec") = QuadratureSpec{},
      "Upper/lower POC bounds for a rectangular ego footprint");

  m.def(
      "logistic_sigma",
      [](double lambda, double d0, double sigma_max_1, double sigma_max_2, double d) {
        return logistic_sigma(UncertaintyModel{lambda, d0, sigma_max_1, sigma_max_2}, d);
      },
      py::arg("lambda_"), py::arg("d0"), py::arg("sigma_max_1"), py::arg("sigma_max_2"),
      py::arg("d"));

  m.def("scenario_a", &scenario_a);
  m.def("scenario_b", &scenario_b);
  m.def("run_scenario", &run_scenario, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());

  m.attr("__version__") = "0.1.0";
}
