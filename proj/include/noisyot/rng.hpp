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

namespace noisyot {

/// Counter-based generator: output i is mix(key, i) where mix is the
/// SplitMix64 finalizer. Streams split by hashing a label into the key, so
/// (seed, trial, round) always addresses the same substream regardless of
/// how much randomness earlier rounds consumed.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(seed), counter_(0) {}

  std::uint64_t next_u64() {
    std::uint64_t z = key_ + (++counter_) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_double() < p; }

  int next_bit() { return static_cast<int>(next_u64() & 1u); }

  /// Uniform in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) {
    return next_u64() % bound;
  }

  /// Independent child stream addressed by a label.
  CounterRng split(std::uint64_t label) const {
    std::uint64_t z = key_ ^ (0x9e3779b97f4a7c15ULL + label * 0xd1342543de82ef95ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return CounterRng(z ^ (z >> 31));
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace noisyot
