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

#include <cstddef>
#include <vector>

#include "noisyot/qmath.hpp"

namespace noisyot {

/// Classical distribution paired with conditional states of a quantum side
/// register E. A purely classical E is represented by diagonal conditionals;
/// classical side information U is folded into E, with an optional tag
/// recording that a U register is present.
class CqState {
 public:
  CqState(std::vector<double> probs, std::vector<DensityMatrix> conditionals,
          std::string side_tag = "");

  std::size_t arity() const { return probs_.size(); }
  int dim_e() const { return conditionals_.front().dim(); }
  double prob(std::size_t x) const { return probs_[x]; }
  const DensityMatrix& conditional(std::size_t x) const {
    return conditionals_[x];
  }
  const std::vector<double>& probs() const { return probs_; }

  bool classical_e() const;
  CMat rho_e() const;  // sum_x P(x) rho_E^x
  const std::string& side_tag() const { return side_tag_; }

 private:
  std::vector<double> probs_;
  std::vector<DensityMatrix> conditionals_;
  std::string side_tag_;
};

struct BoundParams {
  long long n;
  double eps;
  int dim_x;
  double gamma;  // single-system contribution for the general form

  BoundParams(long long n_, double eps_, int dim_x_, double gamma_ = 3.0);
};

/// Optimal two-state discrimination: (1 + ||p0 rho0 - p1 rho1||_1) / 2.
double helstrom_guess_prob(double p0, const DensityMatrix& rho0, double p1,
                           const DensityMatrix& rho1);

/// Optimal guessing probability of X from E. Exact for classical E (any
/// arity), binary X (Helstrom), and quantum E of dimension <= 4 (dual
/// log-barrier solver); larger quantum instances are rejected.
double guess_prob_cq(const CqState& state);

/// Dual semidefinite program min{Tr sigma : sigma >= P(x) rho_E^x} solved by
/// a log-barrier interior method; requires dim <= 4. Primal/dual gap is
/// driven below 1e-9.
double guess_prob_dual_sdp(const CqState& state);

/// -log2 P_guess(X|E).
double min_entropy_cq(const CqState& state);

/// Half the trace distance from the product of a uniform X with rho_E.
double non_uniformity(const CqState& state);

/// 2^{-(hmin - ell)/2 - 1} + eps, the privacy-amplification guarantee.
double pa_bound(double hmin, long long ell, double eps);

/// Smooth min-entropy lower bound for a tensor of independent rounds:
/// sum H_i - delta*n with delta = sqrt(log2(2/eps^2)/n) * 4 log2(2 sqrt(dimX)+1).
double aep_lower_bound(const BoundParams& params,
                       const std::vector<double>& per_round_entropy);

/// Same bound in its general-gamma form: sum H_i - 4 log2(gamma)
/// * sqrt(log2(2/eps^2)) * sqrt(n).
double aep_lower_bound_gamma(const BoundParams& params,
                             const std::vector<double>& per_round_entropy);

long long aep_min_rounds(double eps);

struct SplitResult {
  std::size_t index;      // branch with the least entropy; ties -> lowest
  double guaranteed_bits;  // entropy retained by a complementary branch
};

SplitResult split_index(const std::vector<double>& branch_entropies);

/// min(1, 2 exp(-2 eps^2 n)).
double chernoff_tail(long long n, double eps);

}  // namespace noisyot
