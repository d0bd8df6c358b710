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

#include "qgdec/decoder.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "qgdec/errors.hpp"
#include "qgdec/syndrome.hpp"

namespace qgdec {

std::size_t resolve_bound(const StabilizerCode& code, const DecodeConfig& cfg) {
  if (cfg.exhaustive_mld) {
    return code.n;
  }
  const std::size_t T = cfg.T.value_or(code.t());
  if (T > code.n) {
    throw std::invalid_argument("bound T=" + std::to_string(T) + " exceeds N=" + std::to_string(code.n));
  }
  return T;
}

FFN build_ffn(const BitMatrix& gamma, const BitVec& alpha) {
  const std::size_t n = alpha.size();
  FFN ffn;
  ffn.layer_of.assign(n, 0);
  constexpr auto kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(n, kUnseen);
  std::vector<std::size_t> frontier = alpha.ones();
  for (auto v : frontier) {
    dist[v] = 0;
  }
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const auto v = frontier[head];
    for (auto u : gamma.row(v).ones()) {
      if (dist[u] == kUnseen) {
        dist[u] = dist[v] + 1;
        frontier.push_back(u);
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (dist[v] == kUnseen) {
      continue;
    }
    const std::size_t layer = dist[v] / 2 + 1;
    ffn.layer_of[v] = layer;
    if (ffn.layers.size() < layer) {
      ffn.layers.resize(layer);
    }
    ffn.layers[layer - 1].push_back(v);
  }
  return ffn;
}

PauliOperator coset_member(const BitMatrix& gamma, const BitVec& alpha, const BitVec& mu) {
  return PauliOperator(mu, vecmul(mu, gamma) ^ alpha);
}

namespace {

struct Searcher {
  const BitMatrix& gamma;
  std::vector<std::size_t> cand;
  std::vector<std::size_t> cand_layer;
  bool structured;
  std::size_t q = 0;
  std::vector<BitVec> nu;
  BitVec mu;
  BitVec best_mu;
  std::size_t best;
  std::uint64_t explored = 0;

  void run(std::size_t start, std::size_t depth, std::size_t last_layer) {
    for (std::size_t i = start; i + (q - depth) <= cand.size() && best > q; ++i) {
      const std::size_t layer = cand_layer[i];
      if (structured && layer > last_layer + 1) {
        break;  // candidates are layer-major, so later ones are deeper still
      }
      const std::size_t v = cand[i];
      nu[depth + 1] = nu[depth];
      nu[depth + 1] ^= gamma.row(v);
      mu.set(v);
      if (depth + 1 == q) {
        ++explored;
        const auto w = BitVec::union_count(mu, nu[depth + 1]);
        if (w < best) {
          best = w;
          best_mu = mu;
        }
      } else {
        run(i + 1, depth + 1, std::max(last_layer, layer));
      }
      mu.set(v, false);
    }
  }
};

}  // namespace

CosetResult coset_minimum(const BitMatrix& gamma, const BitVec& alpha, const CosetSearch& search) {
  const std::size_t n = alpha.size();
  const std::size_t alpha_weight = alpha.popcount();
  const std::size_t q_max = std::min(search.T, alpha_weight);

  Searcher s{gamma, {}, {}, search.structured, 0, {}, BitVec(n), BitVec(n), alpha_weight, 1};
  if (q_max > 0) {
    if (search.prune || search.structured) {
      const auto ffn = build_ffn(gamma, alpha);
      for (std::size_t v = 0; v < n; ++v) {
        const auto layer = ffn.layer_of[v];
        if (layer == 0 || (search.prune && layer > q_max) || (search.allowed && !search.allowed->get(v))) {
          continue;
        }
        s.cand.push_back(v);
        s.cand_layer.push_back(layer);
      }
      if (search.structured) {
        std::vector<std::size_t> idx(s.cand.size());
        for (std::size_t i = 0; i < idx.size(); ++i) {
          idx[i] = i;
        }
        std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return s.cand_layer[a] < s.cand_layer[b]; });
        std::vector<std::size_t> cand, layers;
        for (auto i : idx) {
          cand.push_back(s.cand[i]);
          layers.push_back(s.cand_layer[i]);
        }
        s.cand = std::move(cand);
        s.cand_layer = std::move(layers);
      }
    } else {
      for (std::size_t v = 0; v < n; ++v) {
        if (!search.allowed || search.allowed->get(v)) {
          s.cand.push_back(v);
          s.cand_layer.push_back(0);
        }
      }
    }
    s.nu.assign(q_max + 1, alpha);
    for (s.q = 1; s.q <= q_max && s.best > s.q; ++s.q) {
      s.run(0, 0, 0);
    }
  }

  CosetResult r;
  r.mu = s.best_mu;
  r.member = coset_member(gamma, alpha, r.mu);
  r.weight = s.best;
  r.explored = s.explored;
  r.bounded = r.mu.none() && alpha_weight > search.T;
  return r;
}

namespace {

void check_beta(const StabilizerCode& code, const BitVec& beta) {
  if (beta.size() != code.n - code.k) {
    throw DimensionError("syndrome has " + std::to_string(beta.size()) + " bits, expected " +
                         std::to_string(code.n - code.k));
  }
  if (code.k > 20) {
    throw std::invalid_argument("too many logical qubits to enumerate branches");
  }
}

}  // namespace

DecodeResult decode(const StabilizerCode& code, const GraphExtraction& ext, const BitVec& beta,
                    const DecodeConfig& cfg) {
  check_beta(code, beta);
  const CosetSearch search{resolve_bound(code, cfg), cfg.prune, cfg.structured, nullptr};
  const std::uint64_t branches = (cfg.css_fastpath && code.css()) ? 1 : (std::uint64_t{1} << code.k);

  DecodeResult best;
  best.branch_weights.resize(branches);
  for (std::uint64_t b = 0; b < branches; ++b) {
    const auto alpha = alpha_from_gamma(ext, BitVec::concat(beta, BitVec::from_uint(code.k, b)));
    const auto r = coset_minimum(ext.gamma, alpha, search);
    best.branch_weights[b] = r.weight;
    best.explored += r.explored;
    if (b == 0 || r.weight < best.weight) {
      best.correction = frame_map(ext, r.member, Frame::kGraphToPhysical);
      best.weight = r.weight;
      best.branch = b;
      best.bounded = r.bounded;
    }
  }
  return best;
}

DecodeResult decode_css(const StabilizerCode& code, const GraphExtraction& ext, const BitVec& beta,
                        const DecodeConfig& cfg) {
  check_beta(code, beta);
  if (!code.css()) {
    throw NotCss("code '" + code.name + "' has mixed-type stabilizers");
  }
  for (const auto& l : code.logical_z) {
    if (!l.is_z_type()) {
      throw NotCss("logical Z operators must be Z-type");
    }
  }
  if (!ext.bipartite() || !ext.phase_nodes().empty()) {
    throw NotCss("graph is not bipartite");
  }
  const std::size_t n = code.n;
  BitVec left(n), right(n);
  for (auto q : ext.left_nodes) {
    left.set(q);
  }
  for (auto q : ext.right_nodes) {
    right.set(q);
  }
  // Bits of X-type checks see Z errors; the rest see X errors.
  BitVec x_checks(beta.size());
  for (std::size_t j = 0; j < code.stabilizers.size(); ++j) {
    x_checks.set(j, code.stabilizers[j].is_x_type());
  }
  const std::size_t T = resolve_bound(code, cfg);

  const auto alpha_z = alpha_from_gamma(ext, BitVec::concat(beta & x_checks, BitVec(code.k)));
  if ((alpha_z & right).any()) {
    throw NotCss("Z-error syndrome reaches right nodes");
  }
  const auto z_half = coset_minimum(ext.gamma, alpha_z, CosetSearch{T, cfg.prune, cfg.structured, &right});
  const auto z_corr = frame_map(ext, z_half.member, Frame::kGraphToPhysical);

  const std::uint64_t branches = cfg.css_fastpath ? 1 : (std::uint64_t{1} << code.k);
  DecodeResult best;
  best.branch_weights.resize(branches);
  best.explored = z_half.explored;
  const auto beta_x = beta ^ (beta & x_checks);
  for (std::uint64_t b = 0; b < branches; ++b) {
    const auto alpha_x = alpha_from_gamma(ext, BitVec::concat(beta_x, BitVec::from_uint(code.k, b)));
    if ((alpha_x & left).any()) {
      throw NotCss("X-error syndrome reaches left nodes");
    }
    const auto x_half = coset_minimum(ext.gamma, alpha_x, CosetSearch{T, cfg.prune, cfg.structured, &left});
    best.explored += x_half.explored;
    const auto correction = frame_map(ext, x_half.member, Frame::kGraphToPhysical) * z_corr;
    const auto w = correction.weight();
    best.branch_weights[b] = w;
    if (b == 0 || w < best.weight) {
      best.correction = correction;
      best.weight = w;
      best.branch = b;
      best.bounded = z_half.bounded || x_half.bounded;
    }
  }
  return best;
}

OracleResult oracle_decode(const StabilizerCode& code, const BitVec& beta, std::size_t w_max, std::uint64_t budget) {
  const std::size_t n = code.n;
  const std::size_t m = code.stabilizers.size();
  if (beta.size() != m) {
    throw DimensionError("syndrome length does not match the number of stabilizers");
  }
  w_max = std::min(w_max, n);
  if (pauli_ball_size(n, w_max) > budget) {
    throw BudgetExceeded("oracle search over weight <= " + std::to_string(w_max) + " exceeds the budget");
  }
  OracleResult result;
  if (beta.none()) {
    result.correction = PauliOperator(n);
    return result;
  }
  static constexpr std::array<char, 3> kPaulis = {'X', 'Y', 'Z'};
  std::vector<std::array<BitVec, 3>> columns(n);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t t = 0; t < 3; ++t) {
      columns[q][t] = measure_beta(code, PauliOperator::single(n, q, kPaulis[t]));
    }
  }
  std::vector<BitVec> syn(w_max + 1, BitVec(m));
  std::vector<std::pair<std::size_t, std::size_t>> chosen(w_max);
  for (std::size_t w = 1; w <= w_max; ++w) {
    bool found = false;
    auto dfs = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
      for (std::size_t q = start; q + (w - depth) <= n && !found; ++q) {
        for (std::size_t t = 0; t < 3 && !found; ++t) {
          syn[depth + 1] = syn[depth];
          syn[depth + 1] ^= columns[q][t];
          chosen[depth] = {q, t};
          if (depth + 1 < w) {
            self(self, q + 1, depth + 1);
          } else if (syn[depth + 1] == beta) {
            found = true;
          }
        }
      }
    };
    dfs(dfs, 0, 0);
    if (found) {
      PauliOperator op(n);
      for (std::size_t i = 0; i < w; ++i) {
        op.set(chosen[i].first, kPaulis[chosen[i].second]);
      }
      result.correction = std::move(op);
      result.weight = w;
      return result;
    }
  }
  result.weight = w_max + 1;
  return result;
}

bool is_logical_error(const StabilizerCode& code, const PauliOperator& error, const PauliOperator& correction) {
  if (measure_beta(code, error) != measure_beta(code, correction)) {
    throw SyndromeMismatch("correction does not reproduce the error syndrome");
  }
  const auto residual = error * correction;
  for (std::size_t j = 0; j < code.k; ++j) {
    if (symplectic_product(residual, code.logical_z[j]) || symplectic_product(residual, code.logical_x[j])) {
      return true;
    }
  }
  return false;
}

}  // namespace qgdec
