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

#include "noisyot/hashing.hpp"

#include "noisyot/qmath.hpp"

namespace noisyot {

ToeplitzHash::ToeplitzHash(int n_in_, int n_out_, Bits seed_)
    : n_in(n_in_), n_out(n_out_), seed(std::move(seed_)) {
  if (n_in < 1 || n_out < 0) throw parameter_error("bad hash dimensions");
  if (static_cast<int>(seed.size()) != n_in + n_out - 1)
    throw parameter_error("Toeplitz seed needs n_in + n_out - 1 bits");
}

ToeplitzHash ToeplitzHash::random(int n_in, int n_out, CounterRng& rng) {
  return ToeplitzHash(n_in, n_out, random_bits(n_in + n_out - 1, rng));
}

Bits ToeplitzHash::apply(const Bits& x) const {
  if (static_cast<int>(x.size()) != n_in)
    throw parameter_error("hash input length mismatch");
  Bits out(n_out, 0);
  for (int i = 0; i < n_out; ++i) {
    int acc = 0;
    for (int j = 0; j < n_in; ++j) acc ^= entry(i, j) & x[j];
    out[i] = static_cast<std::uint8_t>(acc);
  }
  return out;
}

Bits random_bits(int n, CounterRng& rng) {
  Bits out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(rng.next_bit());
  return out;
}

namespace {
constexpr char kB64[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int b64_value(char c) {
  if (c >= 'A' && c <= 'Z') return c - 'A';
  if (c >= 'a' && c <= 'z') return c - 'a' + 26;
  if (c >= '0' && c <= '9') return c - '0' + 52;
  if (c == '+') return 62;
  if (c == '/') return 63;
  if (c == '=') return -1;
  throw parameter_error("invalid base64 character");
}
}  // namespace

std::string bits_to_base64(const Bits& bits) {
  std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) bytes[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
  std::string out;
  for (std::size_t i = 0; i < bytes.size(); i += 3) {
    std::uint32_t block = 0;
    int have = 0;
    for (int k = 0; k < 3; ++k)
      if (i + k < bytes.size()) {
        block |= static_cast<std::uint32_t>(bytes[i + k]) << (16 - 8 * k);
        ++have;
      }
    out.push_back(kB64[(block >> 18) & 63]);
    out.push_back(kB64[(block >> 12) & 63]);
    out.push_back(have >= 2 ? kB64[(block >> 6) & 63] : '=');
    out.push_back(have >= 3 ? kB64[block & 63] : '=');
  }
  return out;
}

Bits bits_from_base64(const std::string& s, int n_bits) {
  std::vector<std::uint8_t> bytes;
  for (std::size_t i = 0; i + 3 < s.size() || (i < s.size() && s.size() % 4 == 0);
       i += 4) {
    if (i + 4 > s.size()) throw parameter_error("truncated base64");
    const int v0 = b64_value(s[i]), v1 = b64_value(s[i + 1]);
    const int v2 = b64_value(s[i + 2]), v3 = b64_value(s[i + 3]);
    if (v0 < 0 || v1 < 0) throw parameter_error("malformed base64");
    const std::uint32_t block =
        (static_cast<std::uint32_t>(v0) << 18) |
        (static_cast<std::uint32_t>(v1) << 12) |
        (static_cast<std::uint32_t>(v2 < 0 ? 0 : v2) << 6) |
        static_cast<std::uint32_t>(v3 < 0 ? 0 : v3);
    bytes.push_back(static_cast<std::uint8_t>((block >> 16) & 0xff));
    if (v2 >= 0) bytes.push_back(static_cast<std::uint8_t>((block >> 8) & 0xff));
    if (v3 >= 0) bytes.push_back(static_cast<std::uint8_t>(block & 0xff));
  }
  if (static_cast<int>(bytes.size()) * 8 < n_bits)
    throw parameter_error("base64 payload shorter than declared bit count");
  Bits bits(n_bits, 0);
  for (int i = 0; i < n_bits; ++i)
    bits[i] = static_cast<std::uint8_t>((bytes[i / 8] >> (i % 8)) & 1u);
  return bits;
}

}  // namespace noisyot
