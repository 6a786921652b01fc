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
#include <string>
#include <vector>

#include "noisyot/rng.hpp"

namespace noisyot {

using Bits = std::vector<std::uint8_t>;  // one 0/1 value per entry

/// Toeplitz matrix over GF(2) drawn from n_in + n_out - 1 seed bits:
/// T[i][j] = seed[i - j + n_in - 1]. The family is two-universal.
struct ToeplitzHash {
  int n_in;
  int n_out;
  Bits seed;

  ToeplitzHash(int n_in_, int n_out_, Bits seed_);

  static ToeplitzHash random(int n_in, int n_out, CounterRng& rng);

  /// Seed bit backing row i, column j.
  int entry(int i, int j) const { return seed[i - j + n_in - 1]; }

  Bits apply(const Bits& x) const;
};

Bits random_bits(int n, CounterRng& rng);

/// Packs bits into bytes, bit j of byte b holding bit index 8*b + j
/// (little-endian within bytes), then standard base64.
std::string bits_to_base64(const Bits& bits);
Bits bits_from_base64(const std::string& s, int n_bits);

}  // namespace noisyot
