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

// Seeded Monte-Carlo harness: average ratio of the prediction algorithm on a
// coalition member's schedule, as a function of prediction noise sigma.
//
// Each sample draws T uniformly from [1, 4B] and That = max(1, round(T + e))
// with e ~ Normal(0, sigma). Samples are seeded individually from
// (master seed, sigma index, sample index), so every lambda in a sigma cell
// sees the same (T, That) stream and results do not depend on threading.

#ifndef SKIRENTAL_EXPERIMENTS_H_
#define SKIRENTAL_EXPERIMENTS_H_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "skirental/rational.h"

namespace skirental {

struct ExperimentConfig {
  Dollars license_cost = 100;
  Day r = 75;
  Dollars w = 19;
  std::vector<ExactRatio> lambdas = {ExactRatio(1, 5), ExactRatio(1)};
  std::vector<double> sigmas = {0};
  int samples = 1000;
  std::uint64_t seed = 0;
  int threads = 1;
};

struct ExperimentRow {
  Day r = 0;
  Dollars w = 0;
  ExactRatio lambda;
  double sigma = 0;
  int n_samples = 0;
  double avg_ratio = 0;
  int n_suboptimal = 0;  // samples with ratio > 1
  std::uint64_t seed = 0;
};

// Seed for one sample; SplitMix64 over the three indices.
std::uint64_t SampleSeed(std::uint64_t master, std::uint64_t cell,
                         std::uint64_t sample);

// (T, That) for one sample.
std::pair<Day, Day> SampleInstance(std::mt19937_64& rng, Dollars license_cost,
                                   double sigma);

// Rows ordered by lambda, then sigma, both ascending. Fails on an invalid
// config, or if any sample breaks the robustness bound.
absl::StatusOr<std::vector<ExperimentRow>> RunExperiment(
    const ExperimentConfig& config);

std::string FormatCsv(const std::vector<ExperimentRow>& rows);

absl::Status WriteCsv(const std::vector<ExperimentRow>& rows,
                      const std::string& path);

}  // namespace skirental

#endif  // SKIRENTAL_EXPERIMENTS_H_
