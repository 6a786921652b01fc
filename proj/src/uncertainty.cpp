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

#include "noisyot/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace noisyot {

namespace {

constexpr double kOutcomeFloor = 1e-14;

CMat make_pauli_x() {
  CMat m(2);
  m.at(0, 1) = 1.0;
  m.at(1, 0) = 1.0;
  return m;
}

CMat make_pauli_z() {
  CMat m(2);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = -1.0;
  return m;
}

}  // namespace

const CMat kPauliX = make_pauli_x();
const CMat kPauliZ = make_pauli_z();

MeasurementOperator::MeasurementOperator(double alpha, double axis_x,
                                         double axis_z)
    : alpha_(alpha), axis_x_(axis_x), axis_z_(axis_z) {
  const double alpha_max = 1.0 / std::sqrt(2.0);
  if (alpha < 0.0 || alpha > alpha_max + 1e-12)
    throw parameter_error("alpha must lie in [0, 1/sqrt(2)]");
  alpha_ = std::min(alpha, alpha_max);
  const double plane = axis_x * axis_x + axis_z * axis_z;
  if (plane > 1.0 + 1e-12)
    throw parameter_error("axis must satisfy x^2 + z^2 <= 1");
  axis_y_ = std::sqrt(std::max(0.0, 1.0 - plane));
  beta_ = std::sqrt(std::max(0.0, 0.5 - alpha_ * alpha_));

  // |phi><phi| = (id + x X + y Y + z Z) / 2
  CMat proj(2);
  proj.at(0, 0) = 0.5 * (1.0 + axis_z_);
  proj.at(1, 1) = 0.5 * (1.0 - axis_z_);
  proj.at(0, 1) = 0.5 * cplx(axis_x_, -axis_y_);
  proj.at(1, 0) = 0.5 * cplx(axis_x_, axis_y_);

  f_ = CMat::identity(2);
  f_ *= beta_;
  CMat scaled = proj;
  scaled *= (alpha_ - beta_);
  f_ += scaled;
}

OrbitMeasurement::OrbitMeasurement(const MeasurementOperator& base)
    : base_(base) {
  const CMat& f = base.matrix();
  ops_[0] = f;
  ops_[1] = kPauliX * f * kPauliX;
  ops_[2] = kPauliZ * f * kPauliZ;
  const CMat xz = kPauliX * kPauliZ;
  ops_[3] = xz * f * xz.adjoint();
}

std::vector<CMat> OrbitMeasurement::operator_list() const {
  return {ops_[0], ops_[1], ops_[2], ops_[3]};
}

double cost_B(const std::vector<CMat>& operators, double r) {
  if (!(r >= 0.0 && r <= 1.0))
    throw parameter_error("storage noise r must lie in [0,1]");
  if (operators.empty()) throw parameter_error("empty measurement");

  CMat completeness(2);
  for (const CMat& f : operators) completeness += f.adjoint() * f;
  completeness -= CMat::identity(2);
  if (completeness.frobenius() > 1e-8)
    throw validation_error("measurement operators do not sum to the identity");

  const std::array<QubitBasis, 2> bases = {QubitBasis::computational,
                                           QubitBasis::hadamard};
  double term1 = 0.0, term2 = 0.0, term3 = 0.0;
  for (QubitBasis theta : bases) {
    std::array<CMat, 2> rho;
    for (int x = 0; x < 2; ++x) rho[x] = bb84_state(x, theta).mat();
    for (const CMat& f : operators) {
      const CMat fdag = f.adjoint();
      std::array<double, 2> p_k_given_x{};
      std::array<CMat, 2> post;
      for (int x = 0; x < 2; ++x) {
        post[x] = f * rho[x] * fdag;
        p_k_given_x[x] = post[x].trace().real();
      }
      const double p_xtk0 = 0.25 * p_k_given_x[0];
      const double p_xtk1 = 0.25 * p_k_given_x[1];
      const double p_tk = p_xtk0 + p_xtk1;
      if (p_tk < kOutcomeFloor) continue;

      term1 += p_tk * binary_entropy(std::clamp(p_xtk0 / p_tk, 0.0, 1.0));

      CMat mixture(2);
      for (int x = 0; x < 2; ++x) {
        if (p_k_given_x[x] < kOutcomeFloor) continue;
        CMat normalized = post[x];
        normalized *= 1.0 / p_k_given_x[x];
        term2 += 0.25 * p_k_given_x[x] *
                 von_neumann_entropy_raw(depolarize_raw(normalized, r));
        CMat weighted = normalized;
        weighted *= (0.25 * p_k_given_x[x] / p_tk);
        mixture += weighted;
      }
      term3 += p_tk * von_neumann_entropy_raw(depolarize_raw(mixture, r));
    }
  }
  return term1 + term2 - term3;
}

double cost_C(const MeasurementOperator& f, double r) {
  if (!(r >= 0.0 && r <= 1.0))
    throw parameter_error("storage noise r must lie in [0,1]");
  const CMat& fm = f.matrix();
  const CMat rho_plus = bb84_state(0, QubitBasis::computational).mat();
  const CMat rho_times = bb84_state(0, QubitBasis::hadamard).mat();
  const double a =
      std::clamp(2.0 * (fm * rho_plus * fm).trace().real(), 0.0, 1.0);
  const double b =
      std::clamp(2.0 * (fm * rho_times * fm).trace().real(), 0.0, 1.0);
  CMat ff = fm * fm;
  ff *= 2.0;
  return 0.5 * (binary_entropy(a) + binary_entropy(b)) +
         binary_entropy(0.5 * (1.0 + r)) -
         von_neumann_entropy_raw(depolarize_raw(ff, r));
}

double r_hat() {
  return 2.0 * binary_entropy_inv(0.5, EntropyBranch::upper) - 1.0;
}

double t_closed_form(double r) {
  if (!(r >= 0.0 && r <= 1.0))
    throw parameter_error("storage noise r must lie in [0,1]");
  if (r >= r_hat()) return binary_entropy(0.5 * (1.0 + r));
  return 0.5;
}

NumericMin t_numeric(double r, const GridSpec& grid) {
  if (!(r >= 0.0 && r <= 1.0))
    throw parameter_error("storage noise r must lie in [0,1]");
  if (grid.alpha_points < 2 || grid.axis_points < 2)
    throw parameter_error("grid needs at least two points per dimension");

  const double alpha_max = 1.0 / std::sqrt(2.0);
  const double pi_half = 2.0 * std::atan(1.0);

  NumericMin best{std::numeric_limits<double>::infinity(), 0.0, 0.0, 1.0};
  int best_alpha_idx = 0;
  for (int ai = 0; ai < grid.alpha_points; ++ai) {
    const double alpha = alpha_max * ai / (grid.alpha_points - 1);
    for (int pi_idx = 0; pi_idx < grid.axis_points; ++pi_idx) {
      const double psi = pi_half * pi_idx / (grid.axis_points - 1);
      const double ax = std::cos(psi);
      const double az = std::sin(psi);
      const double val = cost_C(MeasurementOperator(alpha, ax, az), r);
      if (val < best.min_bits) {
        best = {val, alpha, ax, az};
        best_alpha_idx = ai;
      }
    }
  }

  // Golden-section refinement on alpha at the winning axis.
  const double step = alpha_max / (grid.alpha_points - 1);
  double lo = std::max(0.0, alpha_max * best_alpha_idx / (grid.alpha_points - 1) - step);
  double hi = std::min(alpha_max, lo + 2.0 * step);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto eval = [&](double alpha) {
    return cost_C(MeasurementOperator(alpha, best.argmin_axis_x,
                                      best.argmin_axis_z),
                  r);
  };
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = eval(x1), f2 = eval(x2);
  while (hi - lo > grid.alpha_tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = eval(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = eval(x2);
    }
  }
  const double alpha_ref = 0.5 * (lo + hi);
  const double val_ref = eval(alpha_ref);
  if (val_ref < best.min_bits) {
    best.min_bits = val_ref;
    best.argmin_alpha = alpha_ref;
  }
  return best;
}

}  // namespace noisyot
