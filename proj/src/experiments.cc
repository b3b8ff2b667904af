/*
 * Copyright 2026 The skirental Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "skirental/experiments.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <thread>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "skirental/equilibria.h"
#include "skirental/predictor.h"

namespace skirental {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

absl::Status Validate(const ExperimentConfig& c) {
  if (c.lambdas.empty()) return absl::InvalidArgumentError("no lambdas");
  if (c.sigmas.empty()) return absl::InvalidArgumentError("no sigmas");
  if (c.samples < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("samples must be >= 1, got ", c.samples));
  }
  if (c.threads < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("threads must be >= 1, got ", c.threads));
  }
  for (const ExactRatio& l : c.lambdas) {
    if (!AlgParams::Create(l).ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("lambda must lie in (0, 1], got ", FormatFraction(l)));
    }
  }
  for (double s : c.sigmas) {
    if (!(s >= 0) || !std::isfinite(s)) {
      return absl::InvalidArgumentError(
          absl::StrCat("sigma must be finite and >= 0, got ", s));
    }
  }
  if (c.license_cost < 2 || c.w < 1 || c.w > c.license_cost || c.r < 1 ||
      c.r > 2 * c.license_cost - 1 ||
      !PledgerInequalityHolds(c.license_cost, c.r, c.w)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "(r=", c.r, ", w=", c.w,
        ") is not a coalition equilibrium for B=", c.license_cost));
  }
  return absl::OkStatus();
}

}  // namespace

std::uint64_t SampleSeed(std::uint64_t master, std::uint64_t cell,
                         std::uint64_t sample) {
  return SplitMix64(SplitMix64(SplitMix64(master) ^ cell) ^ sample);
}

std::pair<Day, Day> SampleInstance(std::mt19937_64& rng, Dollars b,
                                   double sigma) {
  std::uniform_int_distribution<Day> uniform(1, 4 * b);
  const Day t = uniform(rng);
  if (sigma == 0) return {t, t};
  std::normal_distribution<double> noise(0, sigma);
  const double predicted = std::round(static_cast<double>(t) + noise(rng));
  return {t, std::max<Day>(1, static_cast<Day>(predicted))};
}

absl::StatusOr<std::vector<ExperimentRow>> RunExperiment(
    const ExperimentConfig& config) {
  if (absl::Status s = Validate(config); !s.ok()) return s;
  absl::StatusOr<PriceSchedule> p =
      PriceSchedule::SinglePledge(config.license_cost, config.r, config.w);
  if (!p.ok()) return p.status();

  std::vector<ExactRatio> lambdas = config.lambdas;
  std::sort(lambdas.begin(), lambdas.end());
  std::vector<std::pair<double, size_t>> sigmas;  // (sigma, input index)
  for (size_t i = 0; i < config.sigmas.size(); ++i) {
    sigmas.emplace_back(config.sigmas[i], i);
  }
  std::sort(sigmas.begin(), sigmas.end());

  std::vector<PredictionAlgorithm> algs;
  std::vector<ExactRatio> bounds;
  for (const ExactRatio& l : lambdas) {
    algs.emplace_back(*p, AlgParams{l});
    bounds.push_back(RobustnessBound(algs.back().c_opt(), AlgParams{l}));
  }

  const size_t n = static_cast<size_t>(config.samples);
  std::vector<ExperimentRow> rows;
  for (size_t li = 0; li < lambdas.size(); ++li) {
    for (const auto& [sigma, sigma_index] : sigmas) {
      // Ratios land in per-sample slots so the sum below runs in fixed
      // order whatever the thread count.
      std::vector<ExactRatio> ratios(n);
      std::vector<std::thread> workers;
      const size_t threads =
          std::min<size_t>(static_cast<size_t>(config.threads), n);
      for (size_t k = 0; k < threads; ++k) {
        workers.emplace_back([&, k, sigma = sigma, sigma_index = sigma_index] {
          for (size_t s = k; s < n; s += threads) {
            std::mt19937_64 rng(SampleSeed(config.seed, sigma_index, s));
            const auto [t, predicted] =
                SampleInstance(rng, config.license_cost, sigma);
            ratios[s] = algs[li].Run(t, predicted).ratio;
          }
        });
      }
      for (std::thread& w : workers) w.join();

      ExperimentRow row;
      row.r = config.r;
      row.w = config.w;
      row.lambda = lambdas[li];
      row.sigma = sigma;
      row.n_samples = config.samples;
      row.seed = config.seed;
      double sum = 0;
      for (size_t s = 0; s < n; ++s) {
        if (ratios[s] > bounds[li]) {
          return absl::InternalError(absl::StrCat(
              "sample ", s, " at lambda=", FormatFraction(lambdas[li]),
              " sigma=", sigma, " has ratio ", FormatFraction(ratios[s]),
              " above the robustness bound ", FormatFraction(bounds[li])));
        }
        if (ratios[s] > 1) ++row.n_suboptimal;
        sum += ToDouble(ratios[s]);
      }
      row.avg_ratio = sum / static_cast<double>(n);
      rows.push_back(row);
    }
  }
  return rows;
}

std::string FormatCsv(const std::vector<ExperimentRow>& rows) {
  std::string out = "r,w,lambda,sigma,n_samples,avg_ratio,n_suboptimal,seed\n";
  for (const ExperimentRow& row : rows) {
    absl::StrAppend(&out, row.r, ",", row.w, ",", ToDouble(row.lambda), ",",
                    row.sigma, ",", row.n_samples, ",",
                    absl::StrFormat("%.6f", row.avg_ratio), ",",
                    row.n_suboptimal, ",", row.seed, "\n");
  }
  return out;
}

absl::Status WriteCsv(const std::vector<ExperimentRow>& rows,
                      const std::string& path) {
  if (rows.empty()) return absl::InvalidArgumentError("no rows to write");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::UnavailableError(absl::StrCat("cannot open ", path));
  }
  out << FormatCsv(rows);
  out.close();
  if (!out) {
    return absl::DataLossError(absl::StrCat("write failed: ", path));
  }
  return absl::OkStatus();
}

}  // namespace skirental
