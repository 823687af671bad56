// Copyright 2026 The mosfit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "mosfit/errors.hpp"
#include "mosfit/latent_fit.hpp"
#include "mosfit/metrics.hpp"
#include "mosfit/normal.hpp"
#include "mosfit/ratings.hpp"
#include "mosfit/synth.hpp"

namespace py = pybind11;

namespace {

mosfit::RatingSet make_rs(const std::vector<int>& ratings,
                          const std::string& sample_id) {
  return mosfit::RatingSet{sample_id, ratings};
}

std::vector<mosfit::ScoredSample> to_scored(
    const std::vector<std::pair<std::string, double>>& items) {
  std::vector<mosfit::ScoredSample> out;
  out.reserve(items.size());
  for (const auto& [id, score] : items) out.push_back({id, score});
  return out;
}

}  // namespace

PYBIND11_MODULE(mosfit, m) {
  m.doc() =
      "Opinion-rating aggregation: latent-Gaussian quantization fit, MOS "
      "baselines, correlation/preference metrics, and a rating simulator";

  py::register_exception<mosfit::InputError>(m, "InputError",
                                             PyExc_ValueError);
  py::register_exception<mosfit::UndefinedMetricError>(m, "UndefinedMetric",
                                                       PyExc_ArithmeticError);

  py::class_<mosfit::FitConfig>(m, "FitConfig")
      .def(py::init<>())
      .def(py::init([](double beta, int max_iters, double sigma_min,
                       int scale_max) {
             return mosfit::FitConfig{beta, max_iters, sigma_min, scale_max};
           }),
           py::arg("beta") = 0.03, py::arg("max_iters") = 100,
           py::arg("sigma_min") = 1e-5, py::arg("scale_max") = 5)
      .def_readwrite("beta", &mosfit::FitConfig::beta)
      .def_readwrite("max_iters", &mosfit::FitConfig::max_iters)
      .def_readwrite("sigma_min", &mosfit::FitConfig::sigma_min)
      .def_readwrite("scale_max", &mosfit::FitConfig::scale_max);

  py::class_<mosfit::FitResult>(m, "FitResult")
      .def_property_readonly(
          "mu", [](const mosfit::FitResult& r) { return r.params.mu; })
      .def_property_readonly(
          "sigma", [](const mosfit::FitResult& r) { return r.params.sigma; })
      .def_readonly("loss", &mosfit::FitResult::loss)
      .def_readonly("initial_loss", &mosfit::FitResult::initial_loss)
      .def_readonly("iterations_run", &mosfit::FitResult::iterations_run)
      .def_readonly("fell_back", &mosfit::FitResult::fell_back)
      .def_readonly("representative", &mosfit::FitResult::representative)
      .def("__repr__", [](const mosfit::FitResult& r) {
        return "FitResult(representative=" + std::to_string(r.representative) +
               ", fell_back=" + (r.fell_back ? std::string("True") : "False") +
               ")";
      });

  m.def(
      "mos",
      [](const std::vector<int>& ratings) { return mosfit::mos(make_rs(ratings, "py")); },
      py::arg("ratings"), "Arithmetic mean of a rating list");
  m.def(
      "n_low_mos",
      [](const std::vector<int>& ratings, std::size_t n) {
        return mosfit::n_low_mos(make_rs(ratings, "py"), n);
      },
      py::arg("ratings"), py::arg("n"), "Mean of the n smallest ratings");
  m.def(
      "rel_freq",
      [](const std::vector<int>& ratings, int scale_max) {
        return mosfit::rel_freq(make_rs(ratings, "py"), scale_max).mass;
      },
      py::arg("ratings"), py::arg("scale_max") = 5,
      "Relative rating frequencies over 1..K");
  m.def(
      "empirical_stats",
      [](const std::vector<int>& ratings) {
        auto st = mosfit::empirical_stats(make_rs(ratings, "py"));
        return std::make_pair(st.mean, st.stddev);
      },
      py::arg("ratings"),
      "(mean, population stddev) of a rating list");

  m.def(
      "quantized_pmf",
      [](double mu, double sigma, int scale_max) {
        return mosfit::quantized_pmf({mu, sigma}, scale_max).mass;
      },
      py::arg("mu"), py::arg("sigma"), py::arg("scale_max") = 5,
      "PMF of the quantized latent Gaussian");
  m.def("cdf_l1_distance",
        [](const std::vector<double>& a, const std::vector<double>& b) {
          return mosfit::cdf_l1_distance(a, b);
        },
        py::arg("a"), py::arg("b"),
        "L1 distance between cumulative distributions (1-D EMD)");
  m.def(
      "loss",
      [](double mu, double sigma, const std::vector<double>& rel_freq,
         double sigma0, const mosfit::FitConfig& cfg) {
        mosfit::RelFreq r{rel_freq};
        mosfit::EmpiricalStats st{0.0, sigma0};
        return mosfit::loss({mu, sigma}, r, st, cfg);
      },
      py::arg("mu"), py::arg("sigma"), py::arg("rel_freq"), py::arg("sigma0"),
      py::arg("config") = mosfit::FitConfig{}, "Regularized fitting objective");
  m.def(
      "fit",
      [](const std::vector<int>& ratings, const mosfit::FitConfig& cfg) {
        return mosfit::fit(make_rs(ratings, "py"), cfg);
      },
      py::arg("ratings"), py::arg("config") = mosfit::FitConfig{},
      "Fit the latent Gaussian to a rating list");
  m.def(
      "fit_histogram",
      [](const std::vector<double>& rel_freq, double mean, double stddev,
         const mosfit::FitConfig& cfg) {
        return mosfit::fit_histogram({rel_freq}, {mean, stddev}, cfg);
      },
      py::arg("rel_freq"), py::arg("mean"), py::arg("stddev"),
      py::arg("config") = mosfit::FitConfig{},
      "Fit the latent Gaussian to a histogram from an explicit start");

  m.def("standard_normal_cdf", &mosfit::standard_normal_cdf, py::arg("z"));
  m.def("standard_normal_quantile", &mosfit::standard_normal_quantile,
        py::arg("p"));

  using Scored = std::vector<std::pair<std::string, double>>;
  m.def(
      "lcc",
      [](const Scored& pred, const Scored& truth) {
        return mosfit::lcc(to_scored(pred), to_scored(truth));
      },
      py::arg("pred"), py::arg("truth"),
      "Pearson correlation of id-aligned (id, score) lists");
  m.def(
      "srcc",
      [](const Scored& pred, const Scored& truth) {
        return mosfit::srcc(to_scored(pred), to_scored(truth));
      },
      py::arg("pred"), py::arg("truth"),
      "Spearman rank correlation of id-aligned (id, score) lists");
  m.def(
      "screen_preferences",
      [](const std::vector<std::tuple<std::string, std::string, std::string,
                                      std::vector<std::string>>>& annotations,
         int min_agree) {
        std::vector<mosfit::PreferenceAnnotation> anns;
        for (const auto& [pair_id, id_a, id_b, votes] : annotations) {
          mosfit::PreferenceAnnotation ann{pair_id, id_a, id_b, {}};
          for (const auto& v : votes) ann.votes.push_back(mosfit::parse_vote(v));
          anns.push_back(std::move(ann));
        }
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const auto& p : mosfit::screen_preferences(anns, min_agree)) {
          out.emplace_back(
              p.id_a, p.id_b,
              p.label == mosfit::PrefLabel::kAPreferred ? "A" : "B");
        }
        return out;
      },
      py::arg("annotations"), py::arg("min_agree") = 3,
      "Screen (pair_id, id_a, id_b, votes) annotations into binary pairs");
  m.def(
      "ppref",
      [](const Scored& pred,
         const std::vector<std::tuple<std::string, std::string, std::string>>&
             pairs) {
        std::vector<mosfit::PreferencePair> pp;
        for (const auto& [a, b, label] : pairs) {
          if (label != "A" && label != "B") {
            throw mosfit::InputError("ppref: label must be 'A' or 'B'");
          }
          pp.push_back({a, b,
                        label == "A" ? mosfit::PrefLabel::kAPreferred
                                     : mosfit::PrefLabel::kBPreferred});
        }
        return mosfit::ppref(to_scored(pred), pp);
      },
      py::arg("pred"), py::arg("pairs"),
      "Preference precision against (id_a, id_b, 'A'|'B') pairs");

  m.def(
      "generate_dataset",
      [](double mu, double sigma, int n_ratings, int n_samples,
         std::uint64_t seed, int scale_max, const std::string& id_prefix) {
        mosfit::SynthConfig cfg{mu, sigma, n_ratings, n_samples,
                                seed, scale_max, id_prefix};
        std::vector<std::pair<std::string, std::vector<int>>> out;
        for (auto& rs : mosfit::generate_dataset(cfg)) {
          out.emplace_back(std::move(rs.sample_id), std::move(rs.ratings));
        }
        return out;
      },
      py::arg("mu"), py::arg("sigma"), py::arg("n_ratings"),
      py::arg("n_samples"), py::arg("seed"), py::arg("scale_max") = 5,
      py::arg("id_prefix") = "synth",
      "Simulate (sample_id, ratings) pairs from the latent-Gaussian model");
}
