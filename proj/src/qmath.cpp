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

#include "noisyot/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace noisyot {

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kPsdTol = -1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kEigZero = 1e-14;

}  // namespace

CMat CMat::identity(int n) {
  CMat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMat CMat::diag(const std::vector<double>& d) {
  CMat m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m.at(i, i) = d[i];
  return m;
}

CMat CMat::from_rows(const std::vector<std::vector<cplx>>& rows) {
  const int n = static_cast<int>(rows.size());
  CMat m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw parameter_error("matrix rows must be square");
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

CMat CMat::adjoint() const {
  CMat m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(i, j) = std::conj(at(j, i));
  return m;
}

cplx CMat::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

double CMat::frobenius() const {
  double s = 0.0;
  for (const cplx& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double CMat::max_hermiticity_defect() const {
  double d = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j)
      d = std::max(d, std::abs(at(i, j) - std::conj(at(j, i))));
  return d;
}

CMat& CMat::operator+=(const CMat& o) {
  if (o.n_ != n_) throw parameter_error("dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

CMat& CMat::operator-=(const CMat& o) {
  if (o.n_ != n_) throw parameter_error("dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

CMat& CMat::operator*=(cplx s) {
  for (cplx& v : a_) v *= s;
  return *this;
}

CMat operator*(const CMat& a, const CMat& b) {
  if (a.n_ != b.n_) throw parameter_error("dimension mismatch");
  const int n = a.n_;
  CMat c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const cplx aik = a.at(i, k);
      if (aik == cplx(0.0)) continue;
      for (int j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

CMat kron(const CMat& a, const CMat& b) {
  const int na = a.dim(), nb = b.dim();
  CMat c(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const cplx aij = a.at(i, j);
      if (aij == cplx(0.0)) continue;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l)
          c.at(i * nb + k, j * nb + l) = aij * b.at(k, l);
    }
  return c;
}

EigSys hermitian_eig(const CMat& a) {
  const int n = a.dim();
  CMat w = a;
  CMat v = CMat::identity(n);

  auto offdiag = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2.0 * std::norm(w.at(i, j));
    return std::sqrt(s);
  };

  const double scale = std::max(1.0, w.frobenius());
  const double tol = 1e-13 * scale;
  for (int sweep = 0; sweep < 80 && offdiag() > tol; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = w.at(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        const double app = w.at(p, p).real();
        const double aqq = w.at(q, q).real();
        // Phase factor that makes the pivot real, then a real rotation.
        const cplx phase = apq / mag;
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0)
                             ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                             : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx sp = s * phase;

        for (int k = 0; k < n; ++k) {
          const cplx wkp = w.at(k, p);
          const cplx wkq = w.at(k, q);
          w.at(k, p) = c * wkp - std::conj(sp) * wkq;
          w.at(k, q) = sp * wkp + c * wkq;
        }
        for (int k = 0; k < n; ++k) {
          const cplx wpk = w.at(p, k);
          const cplx wqk = w.at(q, k);
          w.at(p, k) = c * wpk - sp * wqk;
          w.at(q, k) = std::conj(sp) * wpk + c * wqk;
        }
        for (int k = 0; k < n; ++k) {
          const cplx vkp = v.at(k, p);
          const cplx vkq = v.at(k, q);
          v.at(k, p) = c * vkp - std::conj(sp) * vkq;
          v.at(k, q) = sp * vkp + c * vkq;
        }
      }
    }
  }

  EigSys sys;
  sys.values.resize(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> raw(n);
  for (int i = 0; i < n; ++i) raw[i] = w.at(i, i).real();
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return raw[i] < raw[j]; });
  sys.vectors = CMat(n);
  for (int col = 0; col < n; ++col) {
    sys.values[col] = raw[order[col]];
    for (int k = 0; k < n; ++k) sys.vectors.at(k, col) = v.at(k, order[col]);
  }
  return sys;
}

std::vector<double> hermitian_eigenvalues(const CMat& a) {
  return hermitian_eig(a).values;
}

double trace_norm_hermitian(const CMat& a) {
  double s = 0.0;
  for (double l : hermitian_eigenvalues(a)) s += std::abs(l);
  return s;
}

QubitBasis qubit_basis_from_string(const std::string& s) {
  if (s == "+") return QubitBasis::computational;
  if (s == "x") return QubitBasis::hadamard;
  throw parameter_error("unknown basis tag: " + s);
}

DepolarizingChannel::DepolarizingChannel(double r_) : r(r_) {
  if (!(r >= 0.0 && r <= 1.0))
    throw parameter_error("depolarizing parameter r must lie in [0,1]");
}

DensityMatrix::DensityMatrix(CMat m) : m_(std::move(m)) {
  const int n = m_.dim();
  if (n < 2 || n > 16)
    throw parameter_error("density matrix dimension must be in 2..16");
  if (m_.max_hermiticity_defect() > kHermTol)
    throw validation_error("density matrix is not Hermitian");
  if (std::abs(m_.trace().real() - 1.0) > kTraceTol ||
      std::abs(m_.trace().imag()) > kTraceTol)
    throw validation_error("density matrix trace differs from 1");
  const auto ev = hermitian_eigenvalues(m_);
  if (ev.front() < kPsdTol)
    throw validation_error("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const std::vector<cplx>& amplitudes) {
  const int n = static_cast<int>(amplitudes.size());
  double norm = 0.0;
  for (const cplx& a : amplitudes) norm += std::norm(a);
  if (norm <= 0.0) throw parameter_error("zero state vector");
  CMat m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = amplitudes[i] * std::conj(amplitudes[j]) / norm;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::diagonal(const std::vector<double>& probs) {
  return DensityMatrix(CMat::diag(probs));
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  std::vector<double> p(dim, 1.0 / dim);
  return diagonal(p);
}

bool DensityMatrix::is_diagonal(double tol) const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if (i != j && std::abs(m_.at(i, j)) > tol) return false;
  return true;
}

DensityMatrix bb84_state(int x, QubitBasis theta) {
  if (x != 0 && x != 1) throw parameter_error("bit must be 0 or 1");
  const double inv = 1.0 / std::sqrt(2.0);
  std::vector<cplx> amp(2);
  if (theta == QubitBasis::computational) {
    amp[x] = 1.0;
  } else {
    amp[0] = inv;
    amp[1] = (x == 0) ? inv : -inv;
  }
  return DensityMatrix::pure(amp);
}

CMat depolarize_raw(const CMat& m, double r) {
  if (!(r >= 0.0 && r <= 1.0))
    throw parameter_error("depolarizing parameter r must lie in [0,1]");
  CMat out = m;
  out *= r;
  const cplx shift = (1.0 - r) * m.trace() / static_cast<double>(m.dim());
  for (int i = 0; i < m.dim(); ++i) out.at(i, i) += shift;
  return out;
}

DensityMatrix depolarize(const DensityMatrix& rho, double r) {
  return DensityMatrix(depolarize_raw(rho.mat(), r));
}

double von_neumann_entropy_raw(const CMat& m) {
  double s = 0.0;
  for (double l : hermitian_eigenvalues(m)) {
    if (l < -1e-9) throw validation_error("entropy of a non-PSD operator");
    if (l <= kEigZero) continue;
    s -= l * std::log2(l);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return von_neumann_entropy_raw(rho.mat());
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw parameter_error("dimension mismatch");
  return 0.5 * trace_norm_hermitian(rho.mat() - sigma.mat());
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw parameter_error("dimension mismatch");
  // Pure states short-circuit to sqrt(<psi|sigma|psi>), which stays accurate
  // where the general route loses half the digits to near-zero eigenvalues.
  for (const DensityMatrix* pure_side : {&rho, &sigma}) {
    const EigSys es = hermitian_eig(pure_side->mat());
    if (es.values.back() < 1.0 - 1e-12) continue;
    const DensityMatrix& other = (pure_side == &rho) ? sigma : rho;
    const int n = rho.dim();
    const int top = n - 1;
    cplx overlap = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        overlap += std::conj(es.vectors.at(i, top)) * other.mat().at(i, j) *
                   es.vectors.at(j, top);
    return std::sqrt(std::clamp(overlap.real(), 0.0, 1.0));
  }
  // F = Tr sqrt(sqrt(rho) sigma sqrt(rho)), via two Hermitian eigensystems.
  const EigSys es = hermitian_eig(rho.mat());
  const int n = rho.dim();
  CMat sqrt_rho(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx acc = 0.0;
      for (int k = 0; k < n; ++k) {
        const double l = std::max(0.0, es.values[k]);
        acc += es.vectors.at(i, k) * std::sqrt(l) *
               std::conj(es.vectors.at(j, k));
      }
      sqrt_rho.at(i, j) = acc;
    }
  const CMat inner = sqrt_rho * sigma.mat() * sqrt_rho;
  double f = 0.0;
  for (double l : hermitian_eigenvalues(inner)) f += std::sqrt(std::max(0.0, l));
  return std::min(1.0, f);
}

double c_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double f = fidelity(rho, sigma);
  return std::sqrt(std::max(0.0, 1.0 - f * f));
}

double binary_entropy(double p) {
  if (p < 0.0 || p > 1.0)
    throw parameter_error("binary entropy argument outside [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double binary_entropy_inv(double y, EntropyBranch branch) {
  if (y < 0.0 || y > 1.0)
    throw parameter_error("binary entropy value outside [0,1]");
  double lo = (branch == EntropyBranch::lower) ? 0.0 : 0.5;
  double hi = (branch == EntropyBranch::lower) ? 0.5 : 1.0;
  // h increases on the lower branch, decreases on the upper one.
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double v = binary_entropy(mid);
    const bool go_up =
        (branch == EntropyBranch::lower) ? (v < y) : (v > y);
    if (go_up)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace noisyot
