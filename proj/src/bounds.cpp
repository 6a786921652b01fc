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

#include "noisyot/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "noisyot/entstat.hpp"
#include "noisyot/uncertainty.hpp"

namespace noisyot {

namespace {

void check_common(long long n, double eps, double t) {
  if (n < 1) throw parameter_error("n must be at least 1");
  if (!(eps > 0.0 && eps < 1.0)) throw parameter_error("eps must be in (0,1)");
  if (!(t >= 0.0 && t <= 1.0))
    throw parameter_error("uncertainty bound t must lie in [0,1]");
}

Regime regime_from_t(double t) {
  // t below 1/2 means the storing branch of the uncertainty bound binds.
  return t < 0.5 ? Regime::store_limited : Regime::measure_limited;
}

SecurityReport finish(double real_ell, double delta, double t) {
  SecurityReport rep;
  rep.delta = delta;
  rep.margin_bits = real_ell;
  rep.regime = regime_from_t(t);
  const double floored = std::floor(real_ell);
  if (floored >= 1.0) {
    rep.ell_max = static_cast<long long>(floored);
    rep.secure = true;
  }
  return rep;
}

}  // namespace

long long ideal_min_rounds(double eps) {
  return static_cast<long long>(
      std::ceil(1.6 * std::log2(2.0 / std::pow(eps, 4))));
}

SecurityReport ell_ideal(long long n, double eps, double t) {
  check_common(n, eps, t);
  const long long floor_n = ideal_min_rounds(eps);
  if (n < floor_n)
    throw parameter_error("n below the admissibility floor of " +
                          std::to_string(floor_n) + " rounds");
  const double log_term = std::log2(2.0 / std::pow(eps, 4));
  const double delta = 8.0 * std::sqrt(log_term / static_cast<double>(n));
  const double real_ell = 0.25 * (t - delta) * static_cast<double>(n) + 0.5 -
                          std::log2(1.0 / eps);
  return finish(real_ell, delta, t);
}

SecurityReport ell_robust(long long n, double eps, double t, double p_error,
                          double p_erase, double syndrome_overhead_bits) {
  check_common(n, eps, t);
  if (!(p_error >= 0.0 && p_error < 0.5))
    throw parameter_error("p_error must lie in [0, 1/2)");
  if (!(p_erase >= 0.0 && p_erase < 1.0))
    throw parameter_error("p_erase must lie in [0, 1)");
  if (p_erase + eps >= 1.0)
    throw parameter_error("p_erase + eps must stay below 1");
  if (syndrome_overhead_bits < 0.0)
    throw parameter_error("syndrome overhead must be non-negative");
  const long long floor_n = ideal_min_rounds(eps);
  if (n < floor_n)
    throw parameter_error("n below the admissibility floor of " +
                          std::to_string(floor_n) + " rounds");
  const double log_term = std::log2(2.0 / std::pow(eps, 4));
  const double delta = 8.0 * std::sqrt(log_term / ((1.0 - p_erase - eps) *
                                                   static_cast<double>(n)));
  const double real_ell =
      (t - delta - binary_entropy(p_error)) * (1.0 - p_erase) *
          static_cast<double>(n) / 4.0 -
      eps * static_cast<double>(n) / 2.0 + 0.5 - std::log2(1.0 / eps) -
      syndrome_overhead_bits;
  return finish(real_ell, delta, t);
}

SecureVerdict secure_predicate(double r, double p_error) {
  if (!(r >= 0.0 && r <= 1.0))
    throw parameter_error("storage noise r must lie in [0,1]");
  if (!(p_error >= 0.0 && p_error < 0.5))
    throw parameter_error("p_error must lie in [0, 1/2)");
  const double hp = binary_entropy(p_error);
  if (r >= r_hat())
    return {binary_entropy(0.5 * (1.0 + r)) > hp, Regime::store_limited};
  return {0.5 > hp, Regime::measure_limited};
}

double qber_threshold() {
  return binary_entropy_inv(0.5, EntropyBranch::lower);
}

IdentReport ident_security(double t, long long d, long long m, long long ell) {
  if (d < 1) throw parameter_error("code distance d must be at least 1");
  if (m < 2) throw parameter_error("m must be at least 2");
  if (ell < 0) throw parameter_error("ell must be non-negative");
  IdentReport rep;
  const double logm = std::log2(static_cast<double>(m));
  rep.exponent = t * static_cast<double>(d) - 2.0 * logm -
                 2.0 * static_cast<double>(ell);
  rep.eps_prime = 0.5 * std::exp2(-0.5 * (t * static_cast<double>(d) / 2.0 -
                                          logm - static_cast<double>(ell)));
  rep.secure = rep.exponent > 0.0;
  return rep;
}

AbortInterval abort_interval(long long n, double p_erase, double eps) {
  if (n < 1) throw parameter_error("n must be at least 1");
  if (!(p_erase >= 0.0 && p_erase < 1.0))
    throw parameter_error("p_erase must lie in [0, 1)");
  if (eps < 0.0) throw parameter_error("eps must be non-negative");
  if (p_erase + eps >= 1.0)
    throw parameter_error("p_erase + eps must stay below 1");
  AbortInterval iv;
  iv.lo = static_cast<long long>(
      std::ceil((1.0 - p_erase - eps) * static_cast<double>(n) / 2.0));
  iv.hi = static_cast<long long>(
      std::floor((1.0 - p_erase + eps) * static_cast<double>(n) / 2.0));
  if (iv.lo > iv.hi) throw parameter_error("empty abort interval");
  // Each basis count deviates by eps*n/2 from its mean; one Chernoff
  // application per basis at deviation eps/2.
  iv.honest_abort_bound =
      std::min(1.0, 4.0 * std::exp(-0.5 * eps * eps * static_cast<double>(n)));
  return iv;
}

}  // namespace noisyot
