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

#include "qgdec/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qgdec/errors.hpp"

namespace qgdec {

double DyadicFraction::value() const { return std::ldexp(static_cast<double>(numerator), -static_cast<int>(exponent)); }

std::string DyadicFraction::str() const {
  if (exponent >= 64) {
    return std::to_string(numerator) + "/2^" + std::to_string(exponent);
  }
  return std::to_string(numerator) + "/" + std::to_string(std::uint64_t{1} << exponent);
}

DyadicFraction correctable_fraction(const StabilizerCode& code) {
  const auto count = pauli_ball_size(code.n, code.t());
  if (count == std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("correctable syndrome count overflows 64 bits");
  }
  DyadicFraction f{count, static_cast<unsigned>(code.n - code.k)};
  while (f.exponent > 0 && f.numerator % 2 == 0) {
    f.numerator /= 2;
    --f.exponent;
  }
  return f;
}

std::uint64_t search_space(std::size_t n, std::size_t T) {
  std::uint64_t total = 0;
  std::uint64_t term = 1;  // C(n, q)
  for (std::size_t q = 0; q <= T && q <= n; ++q) {
    if (q > 0) {
      const std::uint64_t num = n - q + 1;
      // term * num / q, exact; split to avoid overflow in the product.
      const std::uint64_t g = std::gcd(term, q);
      const std::uint64_t a = term / g;
      const std::uint64_t b = num / (q / g);
      if (a > std::numeric_limits<std::uint64_t>::max() / b) {
        throw std::overflow_error("search space size overflows 64 bits");
      }
      term = a * b;
    }
    if (total > std::numeric_limits<std::uint64_t>::max() - term) {
      throw std::overflow_error("search space size overflows 64 bits");
    }
    total += term;
  }
  return total;
}

std::uint64_t search_space(const GraphExtraction& ext, std::size_t T, bool css) {
  return search_space(css ? ext.right_nodes.size() : ext.size(), T);
}

SingletonReport singleton_report(const StabilizerCode& code) {
  if (code.k != 1) {
    throw std::invalid_argument("singleton report needs k = 1");
  }
  SingletonReport r;
  const double n = static_cast<double>(code.n);
  r.t_over_n = static_cast<double>(code.t()) / n;
  r.bound = 0.25 - 1.0 / (4.0 * n);
  r.violated = r.t_over_n > r.bound + 1e-12;
  return r;
}

double collapse_residual(const std::vector<CollapsePoint>& points, double p_c, double nu, unsigned degree) {
  const auto m = static_cast<Eigen::Index>(points.size());
  const auto cols = static_cast<Eigen::Index>(degree + 1);
  const bool weighted = std::all_of(points.begin(), points.end(), [](const auto& pt) { return pt.std_error > 0; });
  Eigen::MatrixXd a(m, cols);
  Eigen::VectorXd y(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& pt = points[static_cast<std::size_t>(i)];
    const double x = (pt.p - p_c) * std::pow(static_cast<double>(pt.d), 1.0 / nu);
    const double w = weighted ? 1.0 / pt.std_error : 1.0;
    double power = 1;
    for (Eigen::Index c = 0; c < cols; ++c) {
      a(i, c) = w * power;
      power *= x;
    }
    y(i) = w * pt.p_L;
  }
  const Eigen::VectorXd coef = a.colPivHouseholderQr().solve(y);
  return (a * coef - y).squaredNorm();
}

namespace {

struct Vertex {
  double p_c;
  double nu;
  double r;
};

}  // namespace

CollapseFit collapse_fit(std::vector<CollapsePoint> points, const CollapseConfig& cfg) {
  if (!(cfg.window_lo < cfg.window_hi)) {
    throw std::invalid_argument("collapse window must satisfy lo < hi");
  }
  // Grid values written as decimals land a few ulps off the window edges.
  const double slack = 1e-9 * (cfg.window_hi - cfg.window_lo);
  std::erase_if(points, [&](const auto& pt) { return pt.p < cfg.window_lo - slack || pt.p > cfg.window_hi + slack; });
  // Canonical order makes the fit independent of input order.
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
    return std::tie(a.d, a.p, a.p_L, a.std_error) < std::tie(b.d, b.p, b.p_L, b.std_error);
  });
  std::set<std::size_t> sizes;
  for (const auto& pt : points) {
    sizes.insert(pt.d);
  }
  if (sizes.size() < 2) {
    throw InsufficientData("collapse fit needs at least two distinct code distances in the window");
  }
  if (points.size() < cfg.degree + 2) {
    throw InsufficientData("collapse fit needs at least " + std::to_string(cfg.degree + 2) + " points in the window");
  }

  auto residual = [&](double p_c, double nu) {
    if (p_c < cfg.window_lo || p_c > cfg.window_hi || nu < cfg.nu_lo || nu > cfg.nu_hi) {
      return std::numeric_limits<double>::infinity();
    }
    return collapse_residual(points, p_c, nu, cfg.degree);
  };

  Vertex best{0, 0, std::numeric_limits<double>::infinity()};
  const auto p_count = static_cast<long>(std::floor((cfg.window_hi - cfg.window_lo) / cfg.p_step + 1e-9));
  const auto nu_count = static_cast<long>(std::floor((cfg.nu_hi - cfg.nu_lo) / cfg.nu_step + 1e-9));
  for (long i = 0; i <= p_count; ++i) {
    const double p_c = cfg.window_lo + static_cast<double>(i) * cfg.p_step;
    for (long j = 0; j <= nu_count; ++j) {
      const double nu = cfg.nu_lo + static_cast<double>(j) * cfg.nu_step;
      const double r = residual(p_c, nu);
      if (r < best.r) {
        best = {p_c, nu, r};
      }
    }
  }

  CollapseFit fit;
  fit.degree = cfg.degree;
  fit.window = {cfg.window_lo, cfg.window_hi};
  fit.points_used = points.size();
  fit.grid_residual = best.r;

  // Nelder-Mead refinement from the best grid point.
  std::array<Vertex, 3> s = {best, Vertex{best.p_c + cfg.p_step, best.nu, 0}, Vertex{best.p_c, best.nu + cfg.nu_step, 0}};
  for (std::size_t i = 1; i < 3; ++i) {
    s[i].r = residual(s[i].p_c, s[i].nu);
  }
  auto by_r = [](const Vertex& a, const Vertex& b) { return a.r < b.r; };
  for (unsigned it = 0; it < cfg.max_iterations; ++it) {
    std::sort(s.begin(), s.end(), by_r);
    const double spread_p = std::max(std::abs(s[1].p_c - s[0].p_c), std::abs(s[2].p_c - s[0].p_c));
    const double spread_nu = std::max(std::abs(s[1].nu - s[0].nu), std::abs(s[2].nu - s[0].nu));
    if (spread_p < 1e-7 && spread_nu < 1e-6) {
      fit.converged = true;
      break;
    }
    const double cp = (s[0].p_c + s[1].p_c) / 2;
    const double cn = (s[0].nu + s[1].nu) / 2;
    auto at = [&](double t) {
      Vertex v{cp + t * (s[2].p_c - cp), cn + t * (s[2].nu - cn), 0};
      v.r = residual(v.p_c, v.nu);
      return v;
    };
    const Vertex reflected = at(-1);
    if (reflected.r < s[0].r) {
      const Vertex expanded = at(-2);
      s[2] = expanded.r < reflected.r ? expanded : reflected;
    } else if (reflected.r < s[1].r) {
      s[2] = reflected;
    } else {
      const Vertex contracted = reflected.r < s[2].r ? at(-0.5) : at(0.5);
      if (contracted.r < std::min(reflected.r, s[2].r)) {
        s[2] = contracted;
      } else {
        for (std::size_t i = 1; i < 3; ++i) {
          s[i].p_c = (s[i].p_c + s[0].p_c) / 2;
          s[i].nu = (s[i].nu + s[0].nu) / 2;
          s[i].r = residual(s[i].p_c, s[i].nu);
        }
      }
    }
  }
  std::sort(s.begin(), s.end(), by_r);
  if (s[0].r <= best.r) {
    best = s[0];
  }
  fit.p_c = best.p_c;
  fit.nu = best.nu;
  fit.residual = best.r;
  return fit;
}

std::string fit_json(const CollapseFit& fit, int indent) {
  nlohmann::json doc = {{"p_c", fit.p_c},
                        {"nu", fit.nu},
                        {"residual", fit.residual},
                        {"degree", fit.degree},
                        {"window", {fit.window.first, fit.window.second}},
                        {"points_used", fit.points_used},
                        {"converged", fit.converged}};
  return doc.dump(indent) + "\n";
}

std::vector<CollapsePoint> read_sweep_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path.string() + "'");
  }
  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      cells.push_back(cell);
    }
    return cells;
  };
  std::string line;
  std::map<std::string, std::size_t> column;
  std::vector<CollapsePoint> points;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    const auto cells = split(line);
    if (cells.size() > 0 && cells[0] == "code") {
      column.clear();
      for (std::size_t i = 0; i < cells.size(); ++i) {
        column[cells[i]] = i;
      }
      continue;
    }
    if (column.empty()) {
      throw ParseError("sweep CSV has no header", line_no);
    }
    auto get = [&](const char* name) {
      const auto it = column.find(name);
      if (it == column.end() || it->second >= cells.size()) {
        throw ParseError(std::string("missing column '") + name + "'", line_no);
      }
      try {
        return std::stod(cells[it->second]);
      } catch (const std::exception&) {
        throw ParseError(std::string("invalid number in column '") + name + "'", line_no);
      }
    };
    CollapsePoint pt;
    pt.p = get("p");
    pt.d = static_cast<std::size_t>(get("d"));
    pt.p_L = get("pL");
    pt.std_error = get("stderr");
    points.push_back(pt);
  }
  return points;
}

}  // namespace qgdec
