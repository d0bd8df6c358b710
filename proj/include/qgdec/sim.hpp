// Copyright 2026 The qgdec Authors
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qgdec/code.hpp"
#include "qgdec/decoder.hpp"
#include "qgdec/graph.hpp"
#include "qgdec/pauli.hpp"

namespace qgdec {

/// Independent single-qubit Pauli channel.
struct NoiseModel {
  /// "depolarizing", "bitflip" or "pxyz".
  std::string kind = "pxyz";
  double p_x = 0;
  double p_y = 0;
  double p_z = 0;

  static NoiseModel depolarizing(double p);
  static NoiseModel bitflip(double p);
  static NoiseModel pauli(double p_x, double p_y, double p_z);

  /// Total error probability per qubit.
  double p() const { return p_x + p_y + p_z; }
  /// Throws std::invalid_argument unless all rates are in [0,1] and sum to at most 1.
  void validate() const;
};

/// Parses `depolarizing:p=0.1`, `bitflip:p=0.05` or `pxyz:0.01,0.02,0.03`.
NoiseModel parse_noise(std::string_view text);
/// Preset `kind` ("depolarizing" or "bitflip") at rate p.
NoiseModel noise_preset(std::string_view kind, double p);

PauliOperator sample_error(const NoiseModel& model, std::size_t n, std::mt19937_64& rng);

struct RunConfig {
  std::uint64_t seed = 1;
  std::uint64_t target_failures = 100;
  std::uint64_t max_shots = 100'000'000;
  unsigned workers = 1;
  /// Shots each worker handles between synchronisation points.
  std::uint64_t batch = 4096;
  DecodeConfig decode;
};

struct RunResult {
  std::uint64_t shots = 0;
  std::uint64_t failures = 0;
  double p_L = 0;
  double std_error = 0;
  double wall_seconds = 0;
  /// The shot cap was hit before reaching the target failure count.
  bool cap_reached = false;
};

/// Samples errors until the target number of logical failures. Shot i is drawn by worker
/// i mod W from a stream seeded by (seed, worker), and the run stops at the shot holding
/// the target failure, so the result depends only on (seed, workers).
RunResult run_until_failures(const StabilizerCode& code, const GraphExtraction& ext, const NoiseModel& model,
                             const RunConfig& cfg);

/// Exact logical error probability by enumerating every error pattern over the letters
/// with nonzero probability. Throws BudgetExceeded above `budget` patterns.
double exact_p_L(const StabilizerCode& code, const GraphExtraction& ext, const NoiseModel& model,
                 const DecodeConfig& cfg = {}, std::uint64_t budget = std::uint64_t{1} << 16);

/// One row of the sweep CSV.
struct CsvRecord {
  std::string code;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::string noise;
  double p = 0;
  std::size_t T = 0;
  std::uint64_t seed = 0;
  RunResult result;
};

std::string csv_header();
std::string csv_row(const CsvRecord& record);
/// Appends rows, writing the header when the file is new or empty or when `force_header`
/// is set (which also truncates the file).
void append_csv(const std::filesystem::path& path, const std::vector<CsvRecord>& records, bool force_header = false);

}  // namespace qgdec
