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

#include "noisyot/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "noisyot/hashing.hpp"
#include "noisyot/uncertainty.hpp"

namespace noisyot::verify {

namespace {

double gaussian(CounterRng& rng) {
  // Box-Muller; the zero-u guard keeps log finite.
  const double u = std::max(rng.next_double(), 1e-300);
  const double v = rng.next_double();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586 * v);
}

std::vector<double> random_simplex(std::size_t k, CounterRng& rng) {
  std::vector<double> p(k);
  double total = 0.0;
  for (double& v : p) {
    v = -std::log(std::max(rng.next_double(), 1e-300));
    total += v;
  }
  for (double& v : p) v /= total;
  return p;
}

struct Worst {
  double value = 0.0;
  std::string detail;

  void update(double v, const std::string& d) {
    if (v > value) {
      value = v;
      detail = d;
    }
  }
};

CheckResult finish_check(const std::string& name, const Worst& worst,
                         double tolerance) {
  CheckResult res;
  res.name = name;
  res.worst = worst.value;
  res.passed = worst.value <= tolerance;
  if (!res.passed) res.counterexample = worst.detail;
  return res;
}

std::string describe(double a, double b) {
  std::ostringstream os;
  os << "lhs=" << a << " rhs=" << b;
  return os.str();
}

}  // namespace

DensityMatrix random_pure_qubit(CounterRng& rng) {
  std::vector<cplx> amp = {cplx(gaussian(rng), gaussian(rng)),
                           cplx(gaussian(rng), gaussian(rng))};
  return DensityMatrix::pure(amp);
}

DensityMatrix random_mixed_state(int dim, CounterRng& rng) {
  const int terms = 2 + static_cast<int>(rng.next_below(3));
  const std::vector<double> weights = random_simplex(terms, rng);
  CMat acc(dim);
  for (int t = 0; t < terms; ++t) {
    std::vector<cplx> amp(dim);
    for (cplx& a : amp) a = cplx(gaussian(rng), gaussian(rng));
    CMat proj = DensityMatrix::pure(amp).mat();
    proj *= weights[t];
    acc += proj;
  }
  return DensityMatrix(acc);
}

CqState random_binary_qubit_cq(CounterRng& rng) {
  const double p0 = 0.05 + 0.9 * rng.next_double();
  return CqState({p0, 1.0 - p0},
                 {random_mixed_state(2, rng), random_mixed_state(2, rng)});
}

// --- entropy lemmas at eps = 0 ---------------------------------------------

std::vector<CheckResult> run_entropy_suite(std::uint64_t seed) {
  std::vector<CheckResult> results;
  CounterRng rng = CounterRng(seed).split(101);

  {
    Worst worst;
    for (int i = 0; i < 200; ++i) {
      const CqState state = random_binary_qubit_cq(rng);
      const double via_helstrom =
          helstrom_guess_prob(state.prob(0), state.conditional(0),
                              state.prob(1), state.conditional(1));
      const double via_dual = guess_prob_dual_sdp(state);
      worst.update(std::abs(std::log2(via_dual) - std::log2(via_helstrom)),
                   describe(-std::log2(via_dual), -std::log2(via_helstrom)));
    }
    results.push_back(finish_check("duality:dual-sdp-vs-helstrom", worst, 1e-6));
  }

  // Random ccq-states with classical E as a joint table p(x,y,e).
  CounterRng rng_ccq = CounterRng(seed).split(102);
  Worst chain, mono, multi;
  for (int i = 0; i < 1000; ++i) {
    const int nx = 2 + static_cast<int>(rng_ccq.next_below(2));
    const int ny = 2 + static_cast<int>(rng_ccq.next_below(2));
    const int ne = 2 + static_cast<int>(rng_ccq.next_below(3));
    const std::vector<double> joint =
        random_simplex(static_cast<std::size_t>(nx) * ny * ne, rng_ccq);
    auto p = [&](int x, int y, int e) { return joint[(x * ny + y) * ne + e]; };

    // P_guess(XY|E) through the library on a pair-labeled cq-state.
    std::vector<double> pxy(static_cast<std::size_t>(nx) * ny);
    std::vector<DensityMatrix> cond_xy;
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < ny; ++y) {
        double mass = 0.0;
        std::vector<double> diag(std::max(ne, 2), 0.0);
        for (int e = 0; e < ne; ++e) {
          diag[e] = p(x, y, e);
          mass += diag[e];
        }
        pxy[x * ny + y] = mass;
        for (double& v : diag) v = mass > 0 ? v / mass : (v == diag[0] ? 1.0 : 0.0);
        if (mass <= 0.0) {
          std::fill(diag.begin(), diag.end(), 0.0);
          diag[0] = 1.0;
        }
        cond_xy.push_back(DensityMatrix::diagonal(diag));
      }
    const double guess_xy = guess_prob_cq(CqState(pxy, cond_xy));

    // P_guess(X|YE): condition on the classical pair (y,e).
    double guess_x_given_ye = 0.0;
    for (int y = 0; y < ny; ++y)
      for (int e = 0; e < ne; ++e) {
        double best = 0.0;
        for (int x = 0; x < nx; ++x) best = std::max(best, p(x, y, e));
        guess_x_given_ye += best;
      }

    // P_guess(Y|E) by exhaustive maximization.
    double guess_y = 0.0;
    for (int e = 0; e < ne; ++e) {
      double best = 0.0;
      for (int y = 0; y < ny; ++y) {
        double mass = 0.0;
        for (int x = 0; x < nx; ++x) mass += p(x, y, e);
        best = std::max(best, mass);
      }
      guess_y += best;
    }

    chain.update(guess_x_given_ye / ny - guess_xy,
                 describe(guess_xy, guess_x_given_ye / ny));
    mono.update(guess_xy - guess_y, describe(guess_xy, guess_y));
  }
  results.push_back(finish_check("chain-rule:classical", chain, 1e-9));
  results.push_back(finish_check("monotonicity:classical", mono, 1e-9));

  // Multiplicativity over products, classical and binary-X qubit-E.
  CounterRng rng_prod = CounterRng(seed).split(103);
  for (int i = 0; i < 1000; ++i) {
    const int nx1 = 2 + static_cast<int>(rng_prod.next_below(2));
    const int nx2 = 2 + static_cast<int>(rng_prod.next_below(2));
    const int ne1 = 2 + static_cast<int>(rng_prod.next_below(2));
    const int ne2 = 2 + static_cast<int>(rng_prod.next_below(2));
    const auto j1 = random_simplex(static_cast<std::size_t>(nx1) * ne1, rng_prod);
    const auto j2 = random_simplex(static_cast<std::size_t>(nx2) * ne2, rng_prod);
    auto guess_of = [](const std::vector<double>& j, int nx, int ne) {
      double total = 0.0;
      for (int e = 0; e < ne; ++e) {
        double best = 0.0;
        for (int x = 0; x < nx; ++x) best = std::max(best, j[x * ne + e]);
        total += best;
      }
      return total;
    };
    const double lhs_parts = guess_of(j1, nx1, ne1) * guess_of(j2, nx2, ne2);
    double lhs = 0.0;
    for (int e1 = 0; e1 < ne1; ++e1)
      for (int e2 = 0; e2 < ne2; ++e2) {
        double best = 0.0;
        for (int x1 = 0; x1 < nx1; ++x1)
          for (int x2 = 0; x2 < nx2; ++x2)
            best = std::max(best, j1[x1 * ne1 + e1] * j2[x2 * ne2 + e2]);
        lhs += best;
      }
    multi.update(std::abs(lhs - lhs_parts), describe(lhs, lhs_parts));
  }
  CounterRng rng_q = CounterRng(seed).split(104);
  for (int i = 0; i < 60; ++i) {
    const CqState a = random_binary_qubit_cq(rng_q);
    const CqState b = random_binary_qubit_cq(rng_q);
    std::vector<double> probs;
    std::vector<DensityMatrix> conds;
    for (int x1 = 0; x1 < 2; ++x1)
      for (int x2 = 0; x2 < 2; ++x2) {
        probs.push_back(a.prob(x1) * b.prob(x2));
        conds.push_back(DensityMatrix(
            kron(a.conditional(x1).mat(), b.conditional(x2).mat())));
      }
    const double lhs = guess_prob_dual_sdp(CqState(probs, conds));
    const double rhs = guess_prob_cq(a) * guess_prob_cq(b);
    multi.update(std::abs(lhs - rhs), describe(lhs, rhs));
  }
  results.push_back(finish_check("multiplicativity:product-states", multi, 1e-9));

  return results;
}

// --- measurement-orbit claims ----------------------------------------------

std::vector<CheckResult> run_appendix_b_suite(std::uint64_t seed) {
  std::vector<CheckResult> results;

  auto random_operator = [](CounterRng& rng) {
    const double alpha = rng.next_double() / std::sqrt(2.0);
    const double angle = rng.next_double() * 6.283185307179586;
    const double radius = std::sqrt(rng.next_double());
    return MeasurementOperator(alpha, radius * std::cos(angle),
                               radius * std::sin(angle));
  };

  {
    CounterRng rng = CounterRng(seed).split(201);
    Worst worst;
    for (int i = 0; i < 100; ++i) {
      const MeasurementOperator f = random_operator(rng);
      const double r = rng.next_double();
      const double via_b = cost_B(OrbitMeasurement(f), r);
      const double via_c = cost_C(f, r);
      worst.update(std::abs(via_b - via_c), describe(via_b, via_c));
    }
    results.push_back(finish_check("orbit-equivalence:B-vs-C", worst, 1e-10));
  }

  {
    CounterRng rng = CounterRng(seed).split(202);
    Worst worst;
    for (int i = 0; i < 60; ++i) {
      const OrbitMeasurement f(random_operator(rng));
      const OrbitMeasurement g(random_operator(rng));
      const double mix = rng.next_double();
      const double r = rng.next_double();
      std::vector<CMat> combined;
      for (const CMat& op : f.operators()) {
        CMat scaled = op;
        scaled *= std::sqrt(mix);
        combined.push_back(scaled);
      }
      for (const CMat& op : g.operators()) {
        CMat scaled = op;
        scaled *= std::sqrt(1.0 - mix);
        combined.push_back(scaled);
      }
      const double lhs = cost_B(combined, r);
      const double rhs = mix * cost_B(f, r) + (1.0 - mix) * cost_B(g, r);
      worst.update(std::abs(lhs - rhs), describe(lhs, rhs));
    }
    results.push_back(finish_check("convexity:combined-measurement", worst, 1e-10));
  }

  {
    CounterRng rng = CounterRng(seed).split(203);
    Worst worst;
    const CMat xz = kPauliX * kPauliZ;
    const std::vector<CMat> group = {CMat::identity(2), kPauliX, kPauliZ, xz};
    for (int i = 0; i < 25; ++i) {
      const OrbitMeasurement orbit(random_operator(rng));
      const double r = rng.next_double();
      const double base = cost_B(orbit, r);
      for (const CMat& g : group) {
        std::vector<CMat> conjugated;
        for (const CMat& op : orbit.operators())
          conjugated.push_back(g * op * g.adjoint());
        worst.update(std::abs(cost_B(conjugated, r) - base),
                     describe(cost_B(conjugated, r), base));
      }
    }
    results.push_back(finish_check("pauli-invariance:conjugated-orbit", worst, 1e-10));
  }

  {
    Worst worst;
    for (double r : {0.5, 0.9}) {
      for (int ix = 0; ix < 20; ++ix)
        for (int iz = 0; iz < 20; ++iz) {
          const double ax = 0.05 + 0.9 * ix / 19.0;
          const double az = 0.05 + 0.9 * iz / 19.0;
          const double norm = std::hypot(ax, az);
          if (norm >= 0.999) continue;  // keep y strictly off the plane
          for (int ia = 0; ia < 10; ++ia) {
            const double alpha = (ia / 9.0) / std::sqrt(2.0);
            const double off = cost_C(MeasurementOperator(alpha, ax, az), r);
            const double on =
                cost_C(MeasurementOperator(alpha, ax / norm, az / norm), r);
            worst.update(on - off, describe(off, on));
          }
        }
    }
    results.push_back(finish_check("xz-plane-dominance:projected-axis", worst, 1e-12));
  }

  {
    Worst worst;
    for (int i = 0; i <= 20; ++i) {
      const double r = 0.05 * i;
      const NumericMin num = t_numeric(r);
      worst.update(std::abs(num.min_bits - t_closed_form(r)),
                   describe(num.min_bits, t_closed_form(r)));
    }
    results.push_back(finish_check("global-agreement:numeric-vs-closed", worst, 1e-4));
  }

  {
    // The optimal attack flips from measuring to storing across r_hat.
    const double rh = r_hat();
    const NumericMin below = t_numeric(rh - 0.002);
    const NumericMin above = t_numeric(rh + 0.002);
    Worst worst;
    worst.update(std::abs(below.argmin_alpha),
                 describe(below.argmin_alpha, 0.0));
    worst.update(std::abs(above.argmin_alpha - 0.5),
                 describe(above.argmin_alpha, 0.5));
    results.push_back(finish_check("argmin-transition:at-r-hat", worst, 0.01));
  }

  return results;
}

// --- privacy amplification, exhaustively at small n -------------------------

std::vector<CheckResult> run_pa_suite(std::uint64_t seed) {
  std::vector<CheckResult> results;
  CounterRng rng = CounterRng(seed).split(301);
  Worst worst;
  long long checked = 0;

  for (int n = 2; n <= 6; ++n) {
    for (int ell = 1; ell <= 2 && ell <= n; ++ell) {
      for (int dist = 0; dist < 14; ++dist) {
        const int ne = 1 + static_cast<int>(rng.next_below(4));
        std::vector<double> joint;
        if (dist == 0) {
          joint = std::vector<double>(static_cast<std::size_t>(1 << n) * ne,
                                      1.0 / ((1 << n) * ne));
        } else if (dist == 1) {
          joint.assign(static_cast<std::size_t>(1 << n) * ne, 0.0);
          joint[0] = 1.0;  // point mass: no extractable entropy
        } else {
          joint = random_simplex(static_cast<std::size_t>(1 << n) * ne, rng);
        }
        auto p = [&](int x, int e) { return joint[x * ne + e]; };

        double guess = 0.0;
        for (int e = 0; e < ne; ++e) {
          double best = 0.0;
          for (int x = 0; x < (1 << n); ++x) best = std::max(best, p(x, e));
          guess += best;
        }
        const double hmin = -std::log2(guess);

        // Average over the full Toeplitz family of d(f(X)|E).
        const int seed_bits = n + ell - 1;
        double avg = 0.0;
        for (std::uint32_t s = 0; s < (1u << seed_bits); ++s) {
          Bits seed_vec(seed_bits);
          for (int b = 0; b < seed_bits; ++b)
            seed_vec[b] = static_cast<std::uint8_t>((s >> b) & 1u);
          const ToeplitzHash hash(n, ell, seed_vec);
          std::vector<double> ps(static_cast<std::size_t>(1 << ell) * ne, 0.0);
          for (int x = 0; x < (1 << n); ++x) {
            Bits xb(n);
            for (int b = 0; b < n; ++b)
              xb[b] = static_cast<std::uint8_t>((x >> b) & 1u);
            const Bits hashed = hash.apply(xb);
            int sval = 0;
            for (int b = 0; b < ell; ++b) sval |= hashed[b] << b;
            for (int e = 0; e < ne; ++e) ps[sval * ne + e] += p(x, e);
          }
          double d = 0.0;
          for (int e = 0; e < ne; ++e) {
            double pe = 0.0;
            for (int sval = 0; sval < (1 << ell); ++sval) pe += ps[sval * ne + e];
            for (int sval = 0; sval < (1 << ell); ++sval)
              d += std::abs(ps[sval * ne + e] - pe / (1 << ell));
          }
          avg += 0.5 * d;
        }
        avg /= static_cast<double>(1u << seed_bits);

        const double bound = pa_bound(hmin, ell, 0.0);
        ++checked;
        worst.update(avg - bound, describe(avg, bound));
      }
    }
  }

  CheckResult res = finish_check("pa-bound:exhaustive-toeplitz", worst, 1e-12);
  res.name += " (" + std::to_string(checked) + " distributions)";
  results.push_back(res);
  return results;
}

}  // namespace noisyot::verify
