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

#include <string>

#include "noisyot/qmath.hpp"

namespace noisyot {

enum class Regime { store_limited, measure_limited };

inline const char* to_string(Regime r) {
  return r == Regime::store_limited ? "store-limited" : "measure-limited";
}

struct SecurityReport {
  long long ell_max = -1;  // -1 when no positive length is certified
  double delta = 0.0;
  bool secure = false;
  double margin_bits = 0.0;  // real-valued bound before flooring
  Regime regime = Regime::measure_limited;
};

/// Extractable length for the noiseless protocol:
/// ell <= (t - delta) n / 4 + 1/2 - log2(1/eps), delta = 8 sqrt(log2(2/eps^4)/n).
/// Requires n >= ceil(8/5 log2(2/eps^4)).
SecurityReport ell_ideal(long long n, double eps, double t);

/// Extractable length for the robust protocol with erasures and a BSC:
/// ell <= (t - delta - h(p_error)) (1-p_erase) n/4 - eps n/2 + 1/2 - log2(1/eps),
/// delta = 8 sqrt(log2(2/eps^4) / ((1-p_erase-eps) n)).
/// syndrome_overhead_bits accounts for finite-block code-rate deviations on
/// top of the asymptotic syndrome length; default 0 (asymptotic idealization).
SecurityReport ell_robust(long long n, double eps, double t, double p_error,
                          double p_erase, double syndrome_overhead_bits = 0.0);

struct SecureVerdict {
  bool secure;
  Regime regime;
};

/// Whether the depolarizing-storage trade-off admits security at all:
/// h((1+r)/2) > h(p_error) for r >= r_hat, 1/2 > h(p_error) otherwise.
SecureVerdict secure_predicate(double r, double p_error);

/// Largest tolerable QBER, h^{-1}(1/2) on the lower branch (about 0.11).
double qber_threshold();

struct IdentReport {
  double eps_prime;
  double exponent;  // t*d - 2 log2(m) - 2 ell
  bool secure;      // exponent > 0
};

/// Security parameter of the password-identification reduction:
/// eps' = 2^{-(t d/2 - log2 m - ell)/2} / 2.
IdentReport ident_security(double t, long long d, long long m, long long ell);

struct AbortInterval {
  long long lo;
  long long hi;
  double honest_abort_bound;  // two-sided Chernoff bound over both bases
};

/// Per-basis acceptance window [ceil((1-p_erase-eps)n/2),
/// floor((1-p_erase+eps)n/2)] for the reported counts.
AbortInterval abort_interval(long long n, double p_erase, double eps);

long long ideal_min_rounds(double eps);

}  // namespace noisyot
