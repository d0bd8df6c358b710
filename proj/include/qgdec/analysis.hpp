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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "qgdec/code.hpp"
#include "qgdec/graph.hpp"

namespace qgdec {

/// numerator / 2^exponent in lowest terms.
struct DyadicFraction {
  std::uint64_t numerator = 0;
  unsigned exponent = 0;

  double value() const;
  /// "num/den", e.g. "11/32".
  std::string str() const;
};

/// Fraction of stabilizer syndromes whose lowest-weight representative has weight <= t
/// when every such error has its own syndrome: sum_{q<=t} C(N,q) 3^q / 2^(N-k).
/// Throws std::overflow_error when the numerator does not fit in 64 bits.
DyadicFraction correctable_fraction(const StabilizerCode& code);

/// sum_{q<=T} C(n,q). Throws std::overflow_error on overflow.
std::uint64_t search_space(std::size_t n, std::size_t T);
/// Search-space size for a code; for the CSS variant n is the right partition size.
std::uint64_t search_space(const GraphExtraction& ext, std::size_t T, bool css);

struct SingletonReport {
  double t_over_n = 0;
  /// 1/4 - 1/(4N).
  double bound = 0;
  bool violated = false;
};

/// Throws std::invalid_argument unless k == 1.
SingletonReport singleton_report(const StabilizerCode& code);

struct CollapsePoint {
  double p = 0;
  std::size_t d = 0;
  double p_L = 0;
  /// Standard error of p_L; points are weighted by 1/std_error^2 when all are positive.
  double std_error = 0;
};

struct CollapseConfig {
  double window_lo = 0.07;
  double window_hi = 0.13;
  unsigned degree = 3;
  double p_step = 0.002;
  double nu_lo = 0.5;
  double nu_hi = 3.0;
  double nu_step = 0.05;
  unsigned max_iterations = 200;
};

struct CollapseFit {
  double p_c = 0;
  double nu = 0;
  double residual = 0;
  unsigned degree = 0;
  std::pair<double, double> window;
  std::size_t points_used = 0;
  /// Smallest residual seen on the coarse grid.
  double grid_residual = 0;
  /// The local refinement met its tolerance within the iteration limit.
  bool converged = false;
};

/// Fits p_L = f((p - p_c) d^(1/nu)) with f a polynomial of the configured degree, using
/// the points whose p lies in the window. Coarse grid over (p_c, nu), then Nelder-Mead.
/// Throws InsufficientData with fewer than two distinct d or degree + 2 points.
CollapseFit collapse_fit(std::vector<CollapsePoint> points, const CollapseConfig& cfg = {});

/// Weighted least-squares residual of the polynomial fit at fixed (p_c, nu).
double collapse_residual(const std::vector<CollapsePoint>& points, double p_c, double nu, unsigned degree);

/// {p_c, nu, residual, degree, window, points_used}.
std::string fit_json(const CollapseFit& fit, int indent = 2);

/// Reads points from a sweep CSV (columns located by header name).
std::vector<CollapsePoint> read_sweep_csv(const std::filesystem::path& path);

}  // namespace qgdec
