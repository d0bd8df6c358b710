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

#include "qgdec/sim.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "qgdec/errors.hpp"
#include "qgdec/syndrome.hpp"

namespace qgdec {

NoiseModel NoiseModel::depolarizing(double p) { return {"depolarizing", p / 3, p / 3, p / 3}; }

NoiseModel NoiseModel::bitflip(double p) { return {"bitflip", p, 0, 0}; }

NoiseModel NoiseModel::pauli(double p_x, double p_y, double p_z) { return {"pxyz", p_x, p_y, p_z}; }

void NoiseModel::validate() const {
  for (double r : {p_x, p_y, p_z}) {
    if (!(r >= 0 && r <= 1)) {
      throw std::invalid_argument("noise rates must lie in [0, 1]");
    }
  }
  if (p() > 1 + 1e-12) {
    throw std::invalid_argument("noise rates sum to more than 1");
  }
}

NoiseModel noise_preset(std::string_view kind, double p) {
  NoiseModel model;
  if (kind == "depolarizing") {
    model = NoiseModel::depolarizing(p);
  } else if (kind == "bitflip") {
    model = NoiseModel::bitflip(p);
  } else {
    throw std::invalid_argument("unknown noise preset '" + std::string(kind) + "'");
  }
  model.validate();
  return model;
}

namespace {

double parse_double(std::string_view text) {
  std::string s(text);
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (used != s.size()) {
    throw std::invalid_argument("invalid number '" + s + "'");
  }
  return value;
}

// Uniform double in [0, 1) from the top 53 bits, independent of the standard library.
double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

NoiseModel parse_noise(std::string_view text) {
  const auto colon = text.find(':');
  const auto kind = text.substr(0, colon);
  const auto args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (kind == "pxyz") {
    std::vector<double> rates;
    std::size_t start = 0;
    while (start <= args.size()) {
      const auto comma = args.find(',', start);
      const auto end = comma == std::string_view::npos ? args.size() : comma;
      rates.push_back(parse_double(args.substr(start, end - start)));
      start = end + 1;
    }
    if (rates.size() != 3) {
      throw std::invalid_argument("pxyz noise needs three comma-separated rates");
    }
    auto model = NoiseModel::pauli(rates[0], rates[1], rates[2]);
    model.validate();
    return model;
  }
  if (args.substr(0, 2) != "p=") {
    throw std::invalid_argument("noise spec '" + std::string(text) + "' needs the form " + std::string(kind) + ":p=<rate>");
  }
  return noise_preset(kind, parse_double(args.substr(2)));
}

PauliOperator sample_error(const NoiseModel& model, std::size_t n, std::mt19937_64& rng) {
  PauliOperator e(n);
  const double a = model.p_x;
  const double b = a + model.p_y;
  const double c = b + model.p_z;
  for (std::size_t q = 0; q < n; ++q) {
    const double u = uniform(rng);
    if (u < a) {
      e.x.set(q);
    } else if (u < b) {
      e.x.set(q);
      e.z.set(q);
    } else if (u < c) {
      e.z.set(q);
    }
  }
  return e;
}

namespace {

// Decodes with a per-syndrome memo and reports whether the correction leaves a logical error.
class FailureCheck {
 public:
  FailureCheck(const StabilizerCode& code, const GraphExtraction& ext, const DecodeConfig& cfg)
      : code_(code), ext_(ext), cfg_(cfg) {}

  bool fails(const PauliOperator& error) {
    if (error.is_identity()) {
      return false;
    }
    auto beta = measure_beta(code_, error);
    if (beta.none()) {
      return logical(error);
    }
    auto it = cache_.find(beta);
    if (it == cache_.end()) {
      auto correction = decode(code_, ext_, beta, cfg_).correction;
      if (cache_.size() >= kMaxCache) {
        return logical(error * correction);
      }
      it = cache_.emplace(std::move(beta), std::move(correction)).first;
    }
    return logical(error * it->second);
  }

 private:
  static constexpr std::size_t kMaxCache = std::size_t{1} << 20;

  bool logical(const PauliOperator& residual) const {
    for (std::size_t j = 0; j < code_.k; ++j) {
      if (symplectic_product(residual, code_.logical_z[j]) || symplectic_product(residual, code_.logical_x[j])) {
        return true;
      }
    }
    return false;
  }

  const StabilizerCode& code_;
  const GraphExtraction& ext_;
  DecodeConfig cfg_;
  std::unordered_map<BitVec, PauliOperator> cache_;
};

}  // namespace

RunResult run_until_failures(const StabilizerCode& code, const GraphExtraction& ext, const NoiseModel& model,
                             const RunConfig& cfg) {
  model.validate();
  if (cfg.target_failures == 0) {
    throw std::invalid_argument("target failure count must be at least 1");
  }
  const auto start = std::chrono::steady_clock::now();
  const unsigned workers = std::max(1u, cfg.workers);
  const std::uint64_t batch = std::max<std::uint64_t>(1, cfg.batch);

  std::vector<std::mt19937_64> streams;
  std::vector<FailureCheck> checks;
  for (unsigned w = 0; w < workers; ++w) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(w), 0x51ed2701u};
    streams.emplace_back(seq);
    checks.emplace_back(code, ext, cfg.decode);
  }

  RunResult result;
  std::vector<std::vector<std::uint64_t>> failed(workers);
  std::uint64_t failures = 0;
  for (std::uint64_t base = 0; base < cfg.max_shots; base += batch * workers) {
    auto work = [&](unsigned w) {
      failed[w].clear();
      for (std::uint64_t j = 0; j < batch; ++j) {
        const std::uint64_t shot = base + j * workers + w;
        if (shot >= cfg.max_shots) {
          break;
        }
        if (checks[w].fails(sample_error(model, code.n, streams[w]))) {
          failed[w].push_back(shot);
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back(work, w);
      }
      for (auto& t : threads) {
        t.join();
      }
    }
    std::vector<std::uint64_t> merged;
    for (const auto& f : failed) {
      merged.insert(merged.end(), f.begin(), f.end());
    }
    std::sort(merged.begin(), merged.end());
    if (failures + merged.size() >= cfg.target_failures) {
      result.shots = merged[cfg.target_failures - failures - 1] + 1;
      failures = cfg.target_failures;
      break;
    }
    failures += merged.size();
    result.shots = std::min(base + batch * workers, cfg.max_shots);
  }
  result.failures = failures;
  result.cap_reached = failures < cfg.target_failures;
  if (result.shots > 0) {
    result.p_L = static_cast<double>(failures) / static_cast<double>(result.shots);
    result.std_error = std::sqrt(result.p_L * (1 - result.p_L) / static_cast<double>(result.shots));
  }
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

double exact_p_L(const StabilizerCode& code, const GraphExtraction& ext, const NoiseModel& model,
                 const DecodeConfig& cfg, std::uint64_t budget) {
  model.validate();
  struct Letter {
    char pauli;
    double prob;
  };
  std::vector<Letter> letters;
  for (const Letter& l : {Letter{'I', 1 - model.p()}, Letter{'X', model.p_x}, Letter{'Y', model.p_y},
                          Letter{'Z', model.p_z}}) {
    if (l.prob > 0) {
      letters.push_back(l);
    }
  }
  const std::size_t base = letters.size();
  std::uint64_t total = 1;
  for (std::size_t q = 0; q < code.n; ++q) {
    if (total > budget / base) {
      throw BudgetExceeded("exact enumeration over " + std::to_string(base) + "^" + std::to_string(code.n) +
                           " error patterns exceeds the budget");
    }
    total *= base;
  }
  FailureCheck check(code, ext, cfg);
  std::vector<std::size_t> digits(code.n, 0);
  double p_fail = 0;
  for (std::uint64_t i = 0; i < total; ++i) {
    PauliOperator e(code.n);
    double prob = 1;
    for (std::size_t q = 0; q < code.n; ++q) {
      const auto& l = letters[digits[q]];
      prob *= l.prob;
      if (l.pauli != 'I') {
        e.set(q, l.pauli);
      }
    }
    if (check.fails(e)) {
      p_fail += prob;
    }
    for (std::size_t q = 0; q < code.n && ++digits[q] == base; ++q) {
      digits[q] = 0;
    }
  }
  return p_fail;
}

std::string csv_header() { return "code,N,k,d,noise,p,T,seed,M,ML,pL,stderr,wall_seconds"; }

std::string csv_row(const CsvRecord& r) {
  std::ostringstream out;
  out << r.code << ',' << r.n << ',' << r.k << ',' << r.d << ',' << r.noise << ',' << std::setprecision(10) << r.p
      << ',' << r.T << ',' << r.seed << ',' << r.result.shots << ',' << r.result.failures << ','
      << std::setprecision(12) << r.result.p_L << ',' << r.result.std_error << ',' << std::setprecision(6)
      << r.result.wall_seconds;
  return out.str();
}

void append_csv(const std::filesystem::path& path, const std::vector<CsvRecord>& records, bool force_header) {
  bool need_header = force_header;
  if (!force_header) {
    std::error_code ec;
    need_header = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  }
  std::ofstream out(path, force_header ? std::ios::trunc : std::ios::app);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  if (need_header) {
    out << csv_header() << '\n';
  }
  for (const auto& r : records) {
    out << csv_row(r) << '\n';
  }
}

}  // namespace qgdec
