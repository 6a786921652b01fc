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

#include "noisyot/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "noisyot/qmath.hpp"

namespace noisyot {

LinearCode::LinearCode(int length, int syndrome_bits, CounterRng& rng)
    : m_(length), s_(syndrome_bits) {
  if (m_ < 1) throw parameter_error("code length must be at least 1");
  if (s_ < 0 || s_ > m_)
    throw parameter_error("syndrome length must lie in [0, length]");
  if (s_ == 0) return;
  const std::size_t w = words();
  const int tail = m_ % 64;
  rows_.assign(static_cast<std::size_t>(s_) * w, 0);
  for (int attempt = 0;; ++attempt) {
    for (std::uint64_t& word : rows_) word = rng.next_u64();
    if (tail)
      for (int i = 0; i < s_; ++i)
        rows_[static_cast<std::size_t>(i + 1) * w - 1] &= (1ULL << tail) - 1;
    if (rank() == s_) break;
    if (attempt > 256)
      throw validation_error("could not draw a full-rank parity check");
  }
}

int LinearCode::rank() const {
  const std::size_t w = words();
  std::vector<std::uint64_t> work = rows_;
  int r = 0;
  for (int col = 0; col < m_ && r < s_; ++col) {
    const std::size_t word = col / 64;
    const std::uint64_t mask = 1ULL << (col % 64);
    int pivot = -1;
    for (int i = r; i < s_; ++i)
      if (work[i * w + word] & mask) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (std::size_t k = 0; k < w; ++k)
      std::swap(work[r * w + k], work[pivot * w + k]);
    for (int i = 0; i < s_; ++i) {
      if (i == r || !(work[i * w + word] & mask)) continue;
      for (std::size_t k = 0; k < w; ++k) work[i * w + k] ^= work[r * w + k];
    }
    ++r;
  }
  return r;
}

int LinearCode::design_syndrome_bits(int length, double p_error,
                                     double margin_frac) {
  if (p_error < 0.0 || p_error >= 0.5)
    throw parameter_error("p_error must lie in [0, 1/2)");
  if (margin_frac < 0.0) throw parameter_error("margin must be non-negative");
  if (p_error == 0.0) return 0;
  const int base = static_cast<int>(std::ceil(binary_entropy(p_error) * length));
  const int margin = static_cast<int>(std::ceil(margin_frac * length));
  return std::min(length, base + margin);
}

Bits LinearCode::syndrome(const Bits& x) const {
  if (static_cast<int>(x.size()) != m_)
    throw parameter_error("codeword length mismatch");
  Bits out(s_, 0);
  if (s_ == 0) return out;
  const std::size_t w = words();
  std::vector<std::uint64_t> xw(w, 0);
  for (int j = 0; j < m_; ++j)
    if (x[j]) xw[j / 64] |= 1ULL << (j % 64);
  for (int i = 0; i < s_; ++i) {
    std::uint64_t acc = 0;
    int parity = 0;
    for (std::size_t k = 0; k < w; ++k) {
      acc = row(i)[k] & xw[k];
      parity ^= std::popcount(acc) & 1;
    }
    out[i] = static_cast<std::uint8_t>(parity);
  }
  return out;
}

std::uint32_t LinearCode::syndrome_small(std::uint32_t x_mask) const {
  std::uint32_t syn = 0;
  for (int i = 0; i < s_; ++i) {
    const std::uint64_t overlap = row(i)[0] & x_mask;
    if (std::popcount(overlap) & 1) syn |= 1u << i;
  }
  return syn;
}

void LinearCode::build_coset_table() const {
  const std::size_t table = 1ULL << s_;
  coset_leader_.assign(table, 0);
  coset_known_.assign(table, 0);
  std::size_t found = 0;

  std::vector<std::uint32_t> syn_by_pos(m_);
  for (int j = 0; j < m_; ++j) syn_by_pos[j] = syndrome_small(1u << j);

  // Breadth-first over error weights; within a weight, combinations come out
  // with the earliest flipped positions first, so the first pattern reaching
  // a syndrome is the tie-break winner.
  std::vector<int> idx;
  for (int weight = 0; weight <= m_ && found < table; ++weight) {
    idx.resize(weight);
    for (int i = 0; i < weight; ++i) idx[i] = i;
    while (true) {
      std::uint32_t syn = 0, mask = 0;
      for (int i : idx) {
        syn ^= syn_by_pos[i];
        mask |= 1u << i;
      }
      if (!coset_known_[syn]) {
        coset_known_[syn] = 1;
        coset_leader_[syn] = mask;
        if (++found == table) break;
      }
      if (weight == 0) break;
      int k = weight - 1;
      while (k >= 0 && idx[k] == m_ - weight + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int i = k + 1; i < weight; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
}

Bits LinearCode::ml_decode(const Bits& received, const Bits& target_syndrome) const {
  if (m_ > kExactMlMaxLen)
    throw unsupported_error("exact ML decoding is limited to length 24");
  if (static_cast<int>(target_syndrome.size()) != s_)
    throw parameter_error("syndrome length mismatch");
  if (static_cast<int>(received.size()) != m_)
    throw parameter_error("codeword length mismatch");
  if (s_ == 0) return received;
  if (coset_known_.empty()) build_coset_table();

  std::uint32_t received_mask = 0;
  for (int j = 0; j < m_; ++j)
    if (received[j]) received_mask |= 1u << j;
  std::uint32_t want = syndrome_small(received_mask);
  for (int i = 0; i < s_; ++i)
    if (target_syndrome[i]) want ^= 1u << i;

  const std::uint32_t flips = coset_leader_[want];
  Bits out = received;
  for (int j = 0; j < m_; ++j)
    if ((flips >> j) & 1u) out[j] ^= 1u;
  return out;
}

int LinearCode::genie_radius(int length, int syndrome_bits) {
  if (syndrome_bits >= length) return length;
  double log_sum = 0.0;  // log2 of C(m,0)
  double log_c = 0.0;
  int radius = 0;
  for (int w = 1; w <= length; ++w) {
    log_c += std::log2(static_cast<double>(length - w + 1)) -
             std::log2(static_cast<double>(w));
    const double hi = std::max(log_sum, log_c);
    log_sum = hi + std::log2(std::exp2(log_sum - hi) + std::exp2(log_c - hi));
    if (log_sum <= static_cast<double>(syndrome_bits))
      radius = w;
    else
      break;
  }
  return radius;
}

}  // namespace noisyot
