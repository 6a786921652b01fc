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

#include <array>
#include <vector>

#include "noisyot/qmath.hpp"

namespace noisyot {

/// F = alpha |phi><phi| + beta (id - |phi><phi|), beta = sqrt(1/2 - alpha^2),
/// with |phi> given by a Bloch vector (x, y, z), y = sqrt(1 - x^2 - z^2).
/// Tr(F^2) = 1/2, so the four-operator Pauli orbit of F is a measurement.
class MeasurementOperator {
 public:
  MeasurementOperator(double alpha, double axis_x, double axis_z);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double axis_x() const { return axis_x_; }
  double axis_z() const { return axis_z_; }
  double axis_y() const { return axis_y_; }

  const CMat& matrix() const { return f_; }

 private:
  double alpha_, beta_, axis_x_, axis_z_, axis_y_;
  CMat f_;
};

/// The four operators g F g^dag for g in {id, X, Z, XZ}, in that order.
class OrbitMeasurement {
 public:
  explicit OrbitMeasurement(const MeasurementOperator& base);

  const MeasurementOperator& base() const { return base_; }
  const std::array<CMat, 4>& operators() const { return ops_; }
  std::vector<CMat> operator_list() const;

 private:
  MeasurementOperator base_;
  std::array<CMat, 4> ops_;
};

extern const CMat kPauliX;
extern const CMat kPauliZ;

/// H(X|Theta K E) for an arbitrary complete measurement {F_k} applied to a
/// uniformly random BB84 state, with depolarizing storage noise at rate r.
/// Outcomes with probability below 1e-14 are skipped.
double cost_B(const std::vector<CMat>& operators, double r);

inline double cost_B(const OrbitMeasurement& m, double r) {
  return cost_B(m.operator_list(), r);
}

/// Closed form of cost_B for a Pauli orbit:
/// (h(2 Tr(F rho_{0+} F)) + h(2 Tr(F rho_{0x} F)))/2 + h((1+r)/2) - H(N(2F^2)).
double cost_C(const MeasurementOperator& f, double r);

/// Storage-noise threshold 2 h^{-1}(1/2) - 1.
double r_hat();

/// h((1+r)/2) for r >= r_hat, else 1/2.
double t_closed_form(double r);

struct GridSpec {
  int alpha_points = 201;
  int axis_points = 91;
  double alpha_tol = 1e-6;
};

struct NumericMin {
  double min_bits;
  double argmin_alpha;
  double argmin_axis_x;
  double argmin_axis_z;
};

/// Minimizes cost_C over alpha in [0, 1/sqrt 2] and axes on the XZ quarter
/// circle: coarse grid scan, then golden-section refinement on alpha at the
/// best axis. Ties resolve toward the smallest alpha.
NumericMin t_numeric(double r, const GridSpec& grid = GridSpec{});

}  // namespace noisyot
