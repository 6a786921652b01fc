// Copyright 2026 The noisyot Authors
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

#pragma once

#include <cstdint>

#include "noisyot/hashing.hpp"

namespace noisyot {

/// Seeded random full-rank parity-check code used for information
/// reconciliation. Exact maximum-likelihood syndrome decoding (coset-leader
/// table) is available for length <= 24; longer codes still produce
/// syndromes and are decoded by the simulation's genie-aided rule.
class LinearCode {
 public:
  static constexpr int kExactMlMaxLen = 24;

  LinearCode(int length, int syndrome_bits, CounterRng& rng);

  int length() const { return m_; }
  int syndrome_bits() const { return s_; }

  /// Syndrome length h(p_error)*m rounded up, plus margin_frac*m extra bits.
  static int design_syndrome_bits(int length, double p_error,
                                  double margin_frac);

  Bits syndrome(const Bits& x) const;

  /// Minimum-Hamming-distance string consistent with the target syndrome;
  /// ties resolve to the flip pattern with the earliest flipped positions.
  Bits ml_decode(const Bits& received, const Bits& target_syndrome) const;

  /// Largest weight w with log2(sum_{i<=w} C(m,i)) <= s: the error weights an
  /// ML decoder for a code of this rate can reliably correct.
  static int genie_radius(int length, int syndrome_bits);

 private:
  std::size_t words() const { return (static_cast<std::size_t>(m_) + 63) / 64; }
  const std::uint64_t* row(int i) const { return rows_.data() + i * words(); }
  int rank() const;
  std::uint32_t syndrome_small(std::uint32_t x_mask) const;
  void build_coset_table() const;

  int m_;
  int s_;
  std::vector<std::uint64_t> rows_;  // s_ rows of ceil(m/64) words each
  mutable std::vector<std::uint32_t> coset_leader_;
  mutable std::vector<std::uint8_t> coset_known_;
};

}  // namespace noisyot
