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

#include "noisyot/entstat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace noisyot {

CqState::CqState(std::vector<double> probs,
                 std::vector<DensityMatrix> conditionals, std::string side_tag)
    : probs_(std::move(probs)),
      conditionals_(std::move(conditionals)),
      side_tag_(std::move(side_tag)) {
  if (probs_.empty() || probs_.size() != conditionals_.size())
    throw parameter_error("cq-state needs one conditional per label");
  double total = 0.0;
  for (double p : probs_) {
    if (p < 0.0) throw validation_error("negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw validation_error("probabilities do not sum to 1");
  const int d = conditionals_.front().dim();
  for (const auto& c : conditionals_)
    if (c.dim() != d)
      throw parameter_error("conditional states differ in dimension");
}

bool CqState::classical_e() const {
  for (const auto& c : conditionals_)
    if (!c.is_diagonal()) return false;
  return true;
}

CMat CqState::rho_e() const {
  CMat acc(dim_e());
  for (std::size_t x = 0; x < arity(); ++x) {
    CMat term = conditionals_[x].mat();
    term *= probs_[x];
    acc += term;
  }
  return acc;
}

BoundParams::BoundParams(long long n_, double eps_, int dim_x_, double gamma_)
    : n(n_), eps(eps_), dim_x(dim_x_), gamma(gamma_) {
  if (n < 1) throw parameter_error("n must be at least 1");
  if (!(eps > 0.0 && eps < 1.0)) throw parameter_error("eps must be in (0,1)");
  if (dim_x < 2) throw parameter_error("dimX must be at least 2");
  if (gamma < 3.0) throw parameter_error("gamma must be at least 3");
}

double helstrom_guess_prob(double p0, const DensityMatrix& rho0, double p1,
                           const DensityMatrix& rho1) {
  if (std::abs(p0 + p1 - 1.0) > 1e-10)
    throw parameter_error("priors must sum to 1");
  if (rho0.dim() != rho1.dim()) throw parameter_error("dimension mismatch");
  CMat diff = rho0.mat();
  diff *= p0;
  CMat other = rho1.mat();
  other *= p1;
  diff -= other;
  return 0.5 * (1.0 + trace_norm_hermitian(diff));
}

namespace {

double guess_prob_classical(const CqState& state) {
  const int d = state.dim_e();
  double total = 0.0;
  for (int e = 0; e < d; ++e) {
    double best = 0.0;
    for (std::size_t x = 0; x < state.arity(); ++x)
      best = std::max(best,
                      state.prob(x) * state.conditional(x).mat().at(e, e).real());
    total += best;
  }
  return total;
}

// --- log-barrier interior solver for min{Tr s : s >= A_x for all x} ------

// Orthonormal (Frobenius) basis of d x d Hermitian matrices.
std::vector<CMat> hermitian_basis(int d) {
  std::vector<CMat> basis;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i) {
    CMat b(d);
    b.at(i, i) = 1.0;
    basis.push_back(b);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      CMat re(d);
      re.at(i, j) = inv_sqrt2;
      re.at(j, i) = inv_sqrt2;
      basis.push_back(re);
      CMat im(d);
      im.at(i, j) = cplx(0.0, inv_sqrt2);
      im.at(j, i) = cplx(0.0, -inv_sqrt2);
      basis.push_back(im);
    }
  return basis;
}

bool cholesky_pd(const CMat& a, CMat& l) {
  const int n = a.dim();
  l = CMat(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      cplx sum = a.at(i, j);
      for (int k = 0; k < j; ++k) sum -= l.at(i, k) * std::conj(l.at(j, k));
      if (i == j) {
        if (sum.real() <= 0.0 || std::abs(sum.imag()) > 1e-9) return false;
        l.at(i, i) = std::sqrt(sum.real());
      } else {
        l.at(i, j) = sum / l.at(j, j).real();
      }
    }
  }
  return true;
}

CMat inverse_from_cholesky(const CMat& l) {
  const int n = l.dim();
  // Solve L Linv = I by forward substitution, then A^-1 = Linv^dag Linv.
  CMat linv(n);
  for (int col = 0; col < n; ++col) {
    for (int i = 0; i < n; ++i) {
      cplx rhs = (i == col) ? cplx(1.0) : cplx(0.0);
      for (int k = 0; k < i; ++k) rhs -= l.at(i, k) * linv.at(k, col);
      linv.at(i, col) = rhs / l.at(i, i).real();
    }
  }
  CMat inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx acc = 0.0;
      for (int k = std::max(i, j); k < n; ++k)
        acc += std::conj(linv.at(k, i)) * linv.at(k, j);
      inv.at(i, j) = acc;
    }
  return inv;
}

bool solve_linear(std::vector<std::vector<double>> m, std::vector<double>& rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (std::abs(m[piv][col]) < 1e-300) return false;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return true;
}

}  // namespace

double guess_prob_dual_sdp(const CqState& state) {
  const int d = state.dim_e();
  if (d > 4)
    throw unsupported_error(
        "dual solver supports side-register dimension at most 4");
  const std::size_t m = state.arity();

  std::vector<CMat> constraints;
  constraints.reserve(m);
  for (std::size_t x = 0; x < m; ++x) {
    CMat a = state.conditional(x).mat();
    a *= state.prob(x);
    constraints.push_back(std::move(a));
  }

  // Strictly feasible start: sigma = (max_x lambda_max(A_x) + 1) * id.
  double top = 0.0;
  for (const CMat& a : constraints)
    top = std::max(top, hermitian_eigenvalues(a).back());
  CMat sigma = CMat::identity(d);
  sigma *= (top + 1.0);

  const auto basis = hermitian_basis(d);
  const std::size_t nb = basis.size();

  auto slacks_pd = [&](const CMat& s, std::vector<CMat>& inverses) {
    inverses.clear();
    for (const CMat& a : constraints) {
      CMat slack = s;
      slack -= a;
      CMat l;
      if (!cholesky_pd(slack, l)) return false;
      inverses.push_back(inverse_from_cholesky(l));
    }
    return true;
  };

  double mu = 1.0;
  const double gap_target = 1e-12;
  for (int outer = 0; outer < 30; ++outer) {
    // Newton centering for f(s) = Tr s - mu * sum_x log det(s - A_x).
    for (int inner = 0; inner < 40; ++inner) {
      std::vector<CMat> inv;
      if (!slacks_pd(sigma, inv))
        throw validation_error("barrier iterate left the feasible cone");

      CMat grad = CMat::identity(d);
      for (const CMat& s_inv : inv) {
        CMat term = s_inv;
        term *= mu;
        grad -= term;
      }

      std::vector<double> g(nb);
      for (std::size_t k = 0; k < nb; ++k) {
        cplx acc = 0.0;
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            acc += basis[k].at(j, i) * grad.at(i, j);
        g[k] = -acc.real();
      }

      std::vector<std::vector<double>> hess(nb, std::vector<double>(nb, 0.0));
      for (const CMat& s_inv : inv) {
        std::vector<CMat> sb(nb);
        for (std::size_t k = 0; k < nb; ++k) sb[k] = s_inv * basis[k];
        for (std::size_t k = 0; k < nb; ++k)
          for (std::size_t l = k; l < nb; ++l) {
            cplx acc = 0.0;
            for (int i = 0; i < d; ++i)
              for (int j = 0; j < d; ++j)
                acc += sb[k].at(i, j) * sb[l].at(j, i);
            hess[k][l] += mu * acc.real();
            if (l != k) hess[l][k] = hess[k][l];
          }
      }

      std::vector<double> step = g;
      if (!solve_linear(hess, step)) break;

      double decrement = 0.0;
      for (std::size_t k = 0; k < nb; ++k) decrement += g[k] * step[k];
      if (decrement < 1e-24) break;

      CMat dir(d);
      for (std::size_t k = 0; k < nb; ++k) {
        CMat term = basis[k];
        term *= step[k];
        dir += term;
      }

      double tstep = 1.0;
      std::vector<CMat> probe_inv;
      for (int ls = 0; ls < 60; ++ls) {
        CMat cand = dir;
        cand *= tstep;
        cand += sigma;
        if (slacks_pd(cand, probe_inv)) {
          sigma = cand;
          break;
        }
        tstep *= 0.5;
      }
      if (decrement < 1e-18) break;
    }
    if (mu * static_cast<double>(m) * d <= gap_target) break;
    mu *= 0.2;
  }
  return sigma.trace().real();
}

double guess_prob_cq(const CqState& state) {
  if (state.classical_e()) return guess_prob_classical(state);
  if (state.arity() == 2)
    return helstrom_guess_prob(state.prob(0), state.conditional(0),
                               state.prob(1), state.conditional(1));
  if (state.dim_e() <= 4) return guess_prob_dual_sdp(state);
  throw unsupported_error(
      "exact guessing probability needs classical E, binary X, or dim <= 4");
}

double min_entropy_cq(const CqState& state) {
  return -std::log2(guess_prob_cq(state));
}

double non_uniformity(const CqState& state) {
  const CMat avg = state.rho_e();
  const double inv_arity = 1.0 / static_cast<double>(state.arity());
  double total = 0.0;
  for (std::size_t x = 0; x < state.arity(); ++x) {
    CMat block = state.conditional(x).mat();
    block *= state.prob(x);
    CMat ref = avg;
    ref *= inv_arity;
    block -= ref;
    total += trace_norm_hermitian(block);
  }
  return 0.5 * total;
}

double pa_bound(double hmin, long long ell, double eps) {
  if (ell < 0) throw parameter_error("ell must be non-negative");
  if (eps < 0.0) throw parameter_error("eps must be non-negative");
  return std::exp2(-0.5 * (hmin - static_cast<double>(ell)) - 1.0) + eps;
}

long long aep_min_rounds(double eps) {
  return static_cast<long long>(
      std::ceil(1.6 * std::log2(2.0 / (eps * eps))));
}

double aep_lower_bound(const BoundParams& params,
                       const std::vector<double>& per_round_entropy) {
  const long long n = params.n;
  if (static_cast<long long>(per_round_entropy.size()) != n)
    throw parameter_error("need one per-round entropy per round");
  const long long floor_n = aep_min_rounds(params.eps);
  if (n < floor_n)
    throw parameter_error("n below the admissibility floor of " +
                          std::to_string(floor_n) + " rounds");
  const double log_term = std::log2(2.0 / (params.eps * params.eps));
  const double delta =
      std::sqrt(log_term / static_cast<double>(n)) * 4.0 *
      std::log2(2.0 * std::sqrt(static_cast<double>(params.dim_x)) + 1.0);
  double sum = 0.0;
  for (double h : per_round_entropy) sum += h;
  return sum - delta * static_cast<double>(n);
}

double aep_lower_bound_gamma(const BoundParams& params,
                             const std::vector<double>& per_round_entropy) {
  const long long n = params.n;
  if (static_cast<long long>(per_round_entropy.size()) != n)
    throw parameter_error("need one per-round entropy per round");
  const long long floor_n = aep_min_rounds(params.eps);
  if (n < floor_n)
    throw parameter_error("n below the admissibility floor of " +
                          std::to_string(floor_n) + " rounds");
  const double log_term = std::log2(2.0 / (params.eps * params.eps));
  double sum = 0.0;
  for (double h : per_round_entropy) sum += h;
  return sum - 4.0 * std::log2(params.gamma) * std::sqrt(log_term) *
                   std::sqrt(static_cast<double>(n));
}

SplitResult split_index(const std::vector<double>& branch_entropies) {
  const std::size_t m = branch_entropies.size();
  if (m < 2) throw parameter_error("splitting needs at least two branches");
  for (double h : branch_entropies)
    if (h < 0.0) throw parameter_error("branch entropies must be >= 0");

  std::size_t lowest = 0;
  for (std::size_t i = 1; i < m; ++i)
    if (branch_entropies[i] < branch_entropies[lowest]) lowest = i;

  SplitResult out;
  out.index = lowest;
  if (m == 2) {
    out.guaranteed_bits = 0.5 * (branch_entropies[0] + branch_entropies[1]);
  } else {
    // alpha = the weakest pairwise total, i.e. the two smallest entries.
    std::vector<double> sorted = branch_entropies;
    std::sort(sorted.begin(), sorted.end());
    const double alpha = sorted[0] + sorted[1];
    out.guaranteed_bits = 0.5 * alpha - std::log2(static_cast<double>(m));
  }
  return out;
}

double chernoff_tail(long long n, double eps) {
  if (n < 1) throw parameter_error("n must be at least 1");
  if (eps < 0.0) throw parameter_error("eps must be non-negative");
  return std::min(1.0, 2.0 * std::exp(-2.0 * eps * eps *
                                      static_cast<double>(n)));
}

}  // namespace noisyot
