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

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace noisyot {

using cplx = std::complex<double>;

class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class unsupported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major complex matrix, sized for few-qubit registers.
class CMat {
 public:
  CMat() : n_(0) {}
  explicit CMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  int dim() const { return n_; }
  cplx& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const cplx& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }
  const std::vector<cplx>& data() const { return a_; }
  std::vector<cplx>& data() { return a_; }

  static CMat identity(int n);
  static CMat diag(const std::vector<double>& d);
  static CMat from_rows(const std::vector<std::vector<cplx>>& rows);

  CMat adjoint() const;
  cplx trace() const;
  double frobenius() const;
  double max_hermiticity_defect() const;

  CMat& operator+=(const CMat& o);
  CMat& operator-=(const CMat& o);
  CMat& operator*=(cplx s);

  friend CMat operator+(CMat a, const CMat& b) { return a += b; }
  friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
  friend CMat operator*(cplx s, CMat a) { return a *= s; }
  friend CMat operator*(const CMat& a, const CMat& b);

 private:
  int n_;
  std::vector<cplx> a_;
};

CMat kron(const CMat& a, const CMat& b);

struct EigSys {
  std::vector<double> values;  // ascending
  CMat vectors;                // columns are eigenvectors
};

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations; iterates until the off-diagonal Frobenius norm is below 1e-13
/// (relative to the matrix scale).
EigSys hermitian_eig(const CMat& a);

std::vector<double> hermitian_eigenvalues(const CMat& a);

/// Sum of |eigenvalue| of a Hermitian operator (its L1 norm).
double trace_norm_hermitian(const CMat& a);

enum class QubitBasis { computational, hadamard };

inline const char* to_string(QubitBasis b) {
  return b == QubitBasis::computational ? "+" : "x";
}
QubitBasis qubit_basis_from_string(const std::string& s);

struct DepolarizingChannel {
  double r;  // probability of transmitting the state intact
  explicit DepolarizingChannel(double r_);
};

/// Hermitian, positive semi-definite, unit-trace matrix of dimension 2..16.
/// Inputs outside tolerance (Hermiticity 1e-12, minimum eigenvalue -1e-10,
/// trace 1e-10) are rejected rather than clipped.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMat m);

  static DensityMatrix pure(const std::vector<cplx>& amplitudes);
  static DensityMatrix diagonal(const std::vector<double>& probs);
  static DensityMatrix maximally_mixed(int dim);

  const CMat& mat() const { return m_; }
  int dim() const { return m_.dim(); }
  bool is_diagonal(double tol = 1e-12) const;

 private:
  CMat m_;
};

/// |x><x| in the given BB84 basis.
DensityMatrix bb84_state(int x, QubitBasis theta);

/// r*rho + (1-r)*id/2.
DensityMatrix depolarize(const DensityMatrix& rho, double r);
CMat depolarize_raw(const CMat& m, double r);

/// -sum lambda_i log2 lambda_i; eigenvalues below 1e-14 count as exact zeros.
double von_neumann_entropy(const DensityMatrix& rho);
double von_neumann_entropy_raw(const CMat& m);

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// C(rho, sigma) = sqrt(1 - F^2).
double c_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

double binary_entropy(double p);

enum class EntropyBranch { lower, upper };

/// Preimage of y under h on [0,1/2] (lower) or [1/2,1] (upper), by bisection
/// to |h(p) - y| <= 1e-12.
double binary_entropy_inv(double y, EntropyBranch branch);

}  // namespace noisyot
