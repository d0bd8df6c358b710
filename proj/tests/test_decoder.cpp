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

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "qgdec/decoder.hpp"
#include "qgdec/errors.hpp"
#include "qgdec/syndrome.hpp"

namespace qgdec {
namespace {

// Minimum weight over every member (mu, mu Gamma + alpha), mu ranging over all 2^N strings.
std::size_t brute_coset_minimum(const BitMatrix& gamma, const BitVec& alpha) {
  const std::size_t n = alpha.size();
  std::size_t best = n + 1;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const auto mu = BitVec::from_uint(n, m);
    PauliOperator member(mu, vecmul(mu, gamma) ^ alpha);
    best = std::min(best, member.weight());
  }
  return best;
}

BitVec random_bits(std::mt19937_64& rng, std::size_t n) {
  BitVec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v.set(i, rng() & 1);
  }
  return v;
}

PauliOperator random_error(std::mt19937_64& rng, std::size_t n, std::size_t weight) {
  static constexpr char kPaulis[] = {'X', 'Y', 'Z'};
  PauliOperator e(n);
  while (e.weight() < weight) {
    e.set(rng() % n, kPaulis[rng() % 3]);
  }
  return e;
}

const char* const kSmallCodes[] = {"five_qubit", "steane", "noncss11", "noncss17", "color:3", "surface:3"};

TEST(CosetMember, Basics) {
  const auto ext = extract(builtin_code("steane"));
  const auto alpha = BitVec::from_string("1010011");
  EXPECT_EQ(coset_member(ext.gamma, alpha, BitVec(7)), PauliOperator(BitVec(7), alpha));
  for (std::size_t i = 0; i < 7; ++i) {
    const auto m = coset_member(ext.gamma, BitVec(7), BitVec::unit(7, i));
    EXPECT_EQ(m.x, BitVec::unit(7, i));
    EXPECT_EQ(m.z, ext.gamma.row(i));
  }
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto mu = random_bits(rng, 7);
    const auto a = random_bits(rng, 7);
    const auto m = coset_member(ext.gamma, a, mu);
    EXPECT_GE(m.weight(), mu.popcount());
    EXPECT_EQ(vecmul(m.x, ext.gamma) ^ m.z, a);
  }
}

TEST(FFN, EmptyForZeroSyndrome) {
  const auto ext = extract(builtin_code("steane"));
  const auto ffn = build_ffn(ext.gamma, BitVec(7));
  EXPECT_EQ(ffn.depth(), 0u);
}

TEST(FFN, FirstLayerIsSyndromeAndNeighbours) {
  auto code = builtin_code("five_qubit");
  code.logical_z[0] = PauliOperator::parse("ZZZZZ");
  const auto ext = extract(code);
  const auto ffn = build_ffn(ext.gamma, BitVec::unit(5, 3));
  ASSERT_GE(ffn.depth(), 1u);
  // Row 4 of the adjacency matrix is 01001.
  EXPECT_EQ(ffn.layers[0], (std::vector<std::size_t>{1, 3, 4}));
  EXPECT_EQ(ffn.layers[1], (std::vector<std::size_t>{0, 2}));
}

TEST(FFN, UnreachableNodesAreAbsent) {
  // Path 1-2-3-4-5-6 plus isolated node 7.
  auto gamma = BitMatrix(7, 7);
  for (std::size_t i = 0; i + 1 < 6; ++i) {
    gamma.set(i, i + 1);
    gamma.set(i + 1, i);
  }
  const auto ffn = build_ffn(gamma, BitVec::unit(7, 0));
  EXPECT_EQ(ffn.layer_of[6], 0u);
  EXPECT_EQ(ffn.layers.size(), 3u);
  EXPECT_EQ(ffn.layers[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(ffn.layers[1], (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(ffn.layers[2], (std::vector<std::size_t>{4, 5}));
}

TEST(FFN, LayersPartitionReachableNodes) {
  std::mt19937_64 rng(77);
  const auto ext = extract(builtin_code("noncss17"));
  for (int trial = 0; trial < 100; ++trial) {
    const auto alpha = random_bits(rng, 17);
    const auto ffn = build_ffn(ext.gamma, alpha);
    std::size_t total = 0;
    for (std::size_t m = 0; m < ffn.depth(); ++m) {
      total += ffn.layers[m].size();
      for (auto v : ffn.layers[m]) {
        EXPECT_EQ(ffn.layer_of[v], m + 1);
        if (m > 0) {
          bool linked = false;
          for (auto u : ext.gamma.row(v).ones()) {
            linked = linked || ffn.layer_of[u] == m || ffn.layer_of[u] == m + 1;
          }
          EXPECT_TRUE(linked);
        }
      }
    }
    for (auto v : alpha.ones()) {
      EXPECT_EQ(ffn.layer_of[v], 1u);
    }
    EXPECT_LE(total, 17u);
  }
}

TEST(FFN, MembersLieWithinTheirWeightLayers) {
  // Every member of weight w of a nonzero syndrome's coset has mu inside L_1..L_w.
  for (const auto* name : {"five_qubit", "steane"}) {
    const auto ext = extract(builtin_code(name));
    const std::size_t n = ext.size();
    for (std::uint64_t a = 1; a < (std::uint64_t{1} << n); ++a) {
      const auto alpha = BitVec::from_uint(n, a);
      const auto ffn = build_ffn(ext.gamma, alpha);
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        const auto mu = BitVec::from_uint(n, m);
        const auto w = coset_member(ext.gamma, alpha, mu).weight();
        for (auto v : mu.ones()) {
          ASSERT_TRUE(ffn.layer_of[v] >= 1 && ffn.layer_of[v] <= w) << name << " alpha=" << alpha.str();
        }
      }
    }
  }
}

TEST(CosetMinimum, TrivialCases) {
  const auto ext = extract(builtin_code("noncss11"));
  const auto zero = coset_minimum(ext.gamma, BitVec(11), {2, true, true, nullptr});
  EXPECT_EQ(zero.weight, 0u);
  EXPECT_TRUE(zero.member.is_identity());
  for (std::size_t i = 0; i < 11; ++i) {
    EXPECT_EQ(coset_minimum(ext.gamma, BitVec::unit(11, i), {2, true, true, nullptr}).weight, 1u);
  }
}

TEST(CosetMinimum, FiveQubitAllSyndromesMatchBruteForce) {
  for (bool zzzzz : {false, true}) {
    auto code = builtin_code("five_qubit");
    if (zzzzz) {
      code.logical_z[0] = PauliOperator::parse("ZZZZZ");
    }
    const auto ext = extract(code);
    for (std::uint64_t a = 0; a < 32; ++a) {
      const auto alpha = BitVec::from_uint(5, a);
      const auto r = coset_minimum(ext.gamma, alpha, {5, true, true, nullptr});
      EXPECT_EQ(r.weight, brute_coset_minimum(ext.gamma, alpha));
      EXPECT_EQ(r.weight, r.member.weight());
      EXPECT_EQ(vecmul(r.member.x, ext.gamma) ^ r.member.z, alpha);
    }
  }
}

TEST(CosetMinimum, MatchesBruteForceAtFullBound) {
  for (const auto* name : {"steane", "noncss11", "surface:3"}) {
    const auto ext = extract(builtin_code(name));
    const std::size_t n = ext.size();
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); a += (n > 9 ? 7 : 1)) {
      const auto alpha = BitVec::from_uint(n, a);
      const auto want = brute_coset_minimum(ext.gamma, alpha);
      for (bool prune : {false, true}) {
        for (bool structured : {false, true}) {
          EXPECT_EQ(coset_minimum(ext.gamma, alpha, {n, prune, structured, nullptr}).weight, want)
              << name << " alpha=" << alpha.str() << " prune=" << prune << " structured=" << structured;
        }
      }
    }
  }
}

TEST(CosetMinimum, BoundedFallback) {
  const auto ext = extract(builtin_code("surface:5"));
  BitVec alpha(25);
  for (std::size_t i = 0; i < 25; i += 3) {
    alpha.set(i);
  }
  const auto r = coset_minimum(ext.gamma, alpha, {0, true, true, nullptr});
  EXPECT_TRUE(r.bounded);
  EXPECT_TRUE(r.mu.none());
  EXPECT_EQ(r.weight, alpha.popcount());
}

TEST(Decode, ZeroSyndrome) {
  for (const auto* name : kSmallCodes) {
    const auto code = builtin_code(name);
    const auto r = decode(code, extract(code), BitVec(code.n - code.k));
    EXPECT_EQ(r.weight, 0u);
    EXPECT_EQ(r.branch, 0u);
    EXPECT_TRUE(r.correction.is_identity());
  }
}

TEST(Decode, FiveQubitZ4) {
  const auto code = builtin_code("five_qubit");
  const auto error = PauliOperator::parse("IIIZI");
  const auto r = decode(code, extract(code), BitVec::from_string("1001"));
  EXPECT_EQ(r.weight, 1u);
  EXPECT_TRUE(in_stabilizer_group(code, r.correction * error));
  EXPECT_FALSE(is_logical_error(code, error, r.correction));
}

TEST(Decode, FiveQubitAllSyndromesMatchOracle) {
  const auto code = builtin_code("five_qubit");
  const auto ext = extract(code);
  DecodeConfig cfg;
  cfg.T = 5;
  for (std::uint64_t b = 0; b < 16; ++b) {
    const auto beta = BitVec::from_uint(4, b);
    const auto r = decode(code, ext, beta, cfg);
    const auto oracle = oracle_decode(code, beta, 5);
    ASSERT_TRUE(oracle.correction.has_value());
    EXPECT_EQ(r.weight, oracle.weight);
    EXPECT_LE(r.weight, 1u);
  }
}

TEST(Decode, ResultInvariants) {
  std::mt19937_64 rng(31);
  for (const auto* name : kSmallCodes) {
    const auto code = builtin_code(name);
    const auto ext = extract(code);
    for (int trial = 0; trial < 200; ++trial) {
      const auto beta = random_bits(rng, code.n - code.k);
      const auto r = decode(code, ext, beta);
      EXPECT_EQ(measure_beta(code, r.correction), beta);
      EXPECT_EQ(r.weight, r.correction.weight());
      EXPECT_EQ(r.branch_weights.size(), 2u);
      EXPECT_EQ(r.branch_weights[r.branch], r.weight);
      const auto alpha = alpha_from_gamma(ext, BitVec::concat(beta, BitVec::from_uint(code.k, r.branch)));
      EXPECT_LE(r.weight, alpha.popcount());
      EXPECT_EQ(measure_beta_tilde(code, r.correction).to_uint(), r.branch);
    }
  }
}

TEST(Decode, MonotoneInBound) {
  std::mt19937_64 rng(5);
  for (const auto* name : {"steane", "noncss11", "surface:3"}) {
    const auto code = builtin_code(name);
    const auto ext = extract(code);
    for (int trial = 0; trial < 100; ++trial) {
      const auto beta = random_bits(rng, code.n - code.k);
      std::size_t previous = code.n + 1;
      for (std::size_t T = 0; T <= 4; ++T) {
        DecodeConfig cfg;
        cfg.T = T;
        const auto w = decode(code, ext, beta, cfg).weight;
        EXPECT_LE(w, previous);
        previous = w;
      }
    }
  }
}

TEST(Decode, PruningAndStructureDoNotChangeWeights) {
  std::mt19937_64 rng(12);
  for (const auto* name : kSmallCodes) {
    const auto code = builtin_code(name);
    const auto ext = extract(code);
    DecodeConfig plain;
    plain.prune = false;
    plain.structured = false;
    for (int trial = 0; trial < 300; ++trial) {
      const auto beta = random_bits(rng, code.n - code.k);
      for (std::size_t T : {code.t(), code.t() + 1}) {
        DecodeConfig fast;
        fast.T = T;
        plain.T = T;
        EXPECT_EQ(decode(code, ext, beta, fast).weight, decode(code, ext, beta, plain).weight) << name;
      }
    }
  }
}

TEST(Decode, CorrectsAllErrorsUpToT) {
  static constexpr char kPaulis[] = {'X', 'Y', 'Z'};
  for (const auto* name : {"five_qubit", "steane", "noncss11", "color:3", "surface:3", "surface:5"}) {
    const auto code = builtin_code(name);
    const auto ext = extract(code);
    const std::size_t n = code.n;
    for (std::size_t a = 0; a < n; ++a) {
      for (char pa : kPaulis) {
        const auto e1 = PauliOperator::single(n, a, pa);
        EXPECT_FALSE(is_logical_error(code, e1, decode(code, ext, measure_beta(code, e1)).correction)) << e1.str();
        if (code.t() < 2) {
          continue;
        }
        for (std::size_t b = a + 1; b < n; ++b) {
          for (char pb : kPaulis) {
            auto e2 = e1;
            e2.set(b, pb);
            EXPECT_FALSE(is_logical_error(code, e2, decode(code, ext, measure_beta(code, e2)).correction)) << e2.str();
          }
        }
      }
    }
  }
}

TEST(Decode, RejectsBadInput) {
  const auto code = builtin_code("steane");
  const auto ext = extract(code);
  EXPECT_THROW(decode(code, ext, BitVec(5)), DimensionError);
  DecodeConfig cfg;
  cfg.T = 8;
  EXPECT_THROW(decode(code, ext, BitVec(6), cfg), std::invalid_argument);
  cfg.T.reset();
  cfg.exhaustive_mld = true;
  EXPECT_EQ(resolve_bound(code, cfg), 7u);
}

TEST(DecodeCss, SyndromeSidesAndZero) {
  const auto code = builtin_code("steane");
  const auto ext = extract(code);
  const auto x1 = measure(code, ext, PauliOperator::parse("XIIIIII"));
  BitVec right(7);
  for (auto q : ext.right_nodes) {
    right.set(q);
  }
  EXPECT_TRUE(x1.alpha.any());
  EXPECT_EQ(x1.alpha & right, x1.alpha);
  const auto z1 = measure(code, ext, PauliOperator::parse("ZIIIIII"));
  EXPECT_TRUE((z1.alpha & right).none());
  EXPECT_EQ(decode_css(code, ext, BitVec(6)).weight, 0u);
}

TEST(DecodeCss, WeightOneErrorsMatchGenericDecoder) {
  const auto code = builtin_code("steane");
  const auto ext = extract(code);
  for (std::size_t q = 0; q < 7; ++q) {
    for (char p : {'X', 'Y', 'Z'}) {
      const auto e = PauliOperator::single(7, q, p);
      const auto beta = measure_beta(code, e);
      const auto css = decode_css(code, ext, beta);
      EXPECT_EQ(css.weight, decode(code, ext, beta).weight) << e.str();
      EXPECT_EQ(measure_beta(code, css.correction), beta);
      EXPECT_FALSE(is_logical_error(code, e, css.correction)) << e.str();
    }
  }
}

TEST(DecodeCss, SingleTypeSyndromesMatchGenericDecoder) {
  for (const auto* name : {"steane", "surface:3", "color:5", "surface:5"}) {
    const auto code = builtin_code(name);
    const auto ext = extract(code);
    const std::size_t m = code.n - code.k;
    BitVec x_checks(m);
    for (std::size_t j = 0; j < m; ++j) {
      x_checks.set(j, code.stabilizers[j].is_x_type());
    }
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      const auto raw = random_bits(rng, m);
      for (const auto& beta : {raw & x_checks, raw ^ (raw & x_checks)}) {
        const auto css = decode_css(code, ext, beta);
        const auto generic = decode(code, ext, beta);
        EXPECT_EQ(css.weight, generic.weight) << name << " " << beta.str();
        EXPECT_EQ(measure_beta(code, css.correction), beta);
      }
    }
  }
}

TEST(DecodeCss, MixedSyndromesAreNeverLighterThanFullSearch) {
  // With a finite bound the split search may beat the joint one, since each half gets
  // its own budget of T; against the unbounded joint minimum it can only tie or lose.
  const auto code = builtin_code("surface:3");
  const auto ext = extract(code);
  DecodeConfig mld;
  mld.exhaustive_mld = true;
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const auto beta = random_bits(rng, 8);
    const auto css = decode_css(code, ext, beta);
    EXPECT_GE(css.weight, decode(code, ext, beta, mld).weight);
    EXPECT_EQ(measure_beta(code, css.correction), beta);
  }
}

TEST(DecodeCss, RejectsNonCss) {
  const auto code = builtin_code("five_qubit");
  EXPECT_THROW(decode_css(code, extract(code), BitVec(4)), NotCss);
}

TEST(CssFastpath, ZeroBranchSufficesForZErrors) {
  const auto code = builtin_code("steane");
  const auto ext = extract(code);
  DecodeConfig fast;
  fast.css_fastpath = true;
  for (std::size_t q = 0; q < 7; ++q) {
    const auto e = PauliOperator::single(7, q, 'Z');
    const auto beta = measure_beta(code, e);
    EXPECT_EQ(decode(code, ext, beta, fast).weight, decode(code, ext, beta).weight);
  }
}

TEST(CssFastpath, ZeroBranchMissesXOnLogicalSupport) {
  // X5 anticommutes with LZ = Z5 Z6 Z7, so its coset lives in branch 1; the best
  // member of branch 0 is X6 X7, which differs from X5 by a logical operator.
  const auto code = builtin_code("steane");
  const auto ext = extract(code);
  const auto e = PauliOperator::parse("IIIIXII");
  const auto beta = measure_beta(code, e);
  DecodeConfig fast;
  fast.css_fastpath = true;
  const auto skipped = decode(code, ext, beta, fast);
  EXPECT_EQ(skipped.weight, 2u);
  EXPECT_TRUE(is_logical_error(code, e, skipped.correction));
  const auto full = decode(code, ext, beta);
  EXPECT_EQ(full.weight, 1u);
  EXPECT_EQ(full.branch, 1u);
  EXPECT_FALSE(is_logical_error(code, e, full.correction));
}

TEST(Oracle, Basics) {
  const auto code = builtin_code("five_qubit");
  const auto zero = oracle_decode(code, BitVec(4), 3);
  ASSERT_TRUE(zero.correction.has_value());
  EXPECT_TRUE(zero.correction->is_identity());
  const auto one = oracle_decode(code, BitVec::from_string("1001"), 3);
  ASSERT_TRUE(one.correction.has_value());
  EXPECT_EQ(one.weight, 1u);
  EXPECT_EQ(measure_beta(code, *one.correction).str(), "1001");
  EXPECT_THROW(oracle_decode(builtin_code("noncss29"), BitVec(28), 10, 1000), BudgetExceeded);
}

TEST(Oracle, NonCss11WeightTwoSamples) {
  const auto code = builtin_code("noncss11");
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const auto e = random_error(rng, 11, 2);
    const auto r = oracle_decode(code, measure_beta(code, e), 2);
    ASSERT_TRUE(r.correction.has_value());
    EXPECT_LE(r.weight, 2u);
    EXPECT_FALSE(is_logical_error(code, e, *r.correction));
  }
}

TEST(Oracle, SteaneXOnlySyndromesMatchDecoder) {
  const auto code = builtin_code("steane");
  const auto ext = extract(code);
  DecodeConfig mld;
  mld.exhaustive_mld = true;
  for (std::uint64_t b = 0; b < 8; ++b) {
    // Z-type checks are the last three stabilizers; they see X errors.
    const auto beta = BitVec::from_uint(6, b);
    EXPECT_EQ(decode(code, ext, beta, mld).weight, oracle_decode(code, beta, 7).weight);
  }
}

TEST(LogicalError, Predicate) {
  const auto code = builtin_code("noncss11");
  std::mt19937_64 rng(2);
  const auto e = random_error(rng, 11, 3);
  EXPECT_FALSE(is_logical_error(code, e, e));
  EXPECT_TRUE(is_logical_error(code, e, e * code.logical_x[0]));
  EXPECT_TRUE(is_logical_error(code, e, e * code.logical_z[0]));
  EXPECT_FALSE(is_logical_error(code, e, e * code.stabilizers[0]));
  EXPECT_THROW(is_logical_error(code, e, PauliOperator(11)), SyndromeMismatch);
}

}  // namespace
}  // namespace qgdec
