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

// End-to-end checks of the library's headline numbers: thresholds, the
// optimization engine, the claim suites, the calculators, and the protocol
// statistics. One pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "noisyot/bounds.hpp"
#include "noisyot/entstat.hpp"
#include "noisyot/protocol.hpp"
#include "noisyot/uncertainty.hpp"
#include "noisyot/verify.hpp"

using namespace noisyot;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("%s  criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void criterion_1_r_hat() {
  const double rh = r_hat();
  report(1, "storage threshold r_hat", std::abs(rh - 0.77994) <= 0.0005,
         "r_hat=" + fmt(rh));
}

void criterion_2_qber() {
  const double q = qber_threshold();
  report(2, "QBER threshold", std::abs(q - 0.11003) <= 0.0005,
         "threshold=" + fmt(q));
}

void criterion_3_optimizer() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double r = 0.05 * i;
    worst = std::max(worst,
                     std::abs(t_numeric(r).min_bits - t_closed_form(r)));
  }
  const double rh = r_hat();
  const double alpha_below = t_numeric(rh - 0.002).argmin_alpha;
  const double alpha_above = t_numeric(rh + 0.002).argmin_alpha;
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const bool pass = worst <= 1e-4 && std::abs(alpha_below) <= 0.01 &&
                    std::abs(alpha_above - 0.5) <= 0.01 && seconds <= 60.0;
  report(3, "optimizer agreement and argmin transition", pass,
         "worst=" + fmt(worst) + " alpha(r_hat-0.002)=" + fmt(alpha_below) +
             " alpha(r_hat+0.002)=" + fmt(alpha_above) + " time=" +
             fmt(seconds) + "s");
}

void criterion_4_claims() {
  bool pass = true;
  std::string detail;
  for (const auto& check : verify::run_appendix_b_suite(20260811)) {
    if (check.name.rfind("global-agreement", 0) == 0 ||
        check.name.rfind("argmin-transition", 0) == 0)
      continue;  // covered by criterion 3
    pass = pass && check.passed;
    detail += check.name + "=" + fmt(check.worst) + " ";
  }
  report(4, "orbit/convexity/invariance/XZ claims", pass, detail);
}

void criterion_5_entropy_lemmas() {
  bool pass = true;
  std::string detail;
  for (const auto& check : verify::run_entropy_suite(20260811)) {
    pass = pass && check.passed;
    detail += check.name + "=" + fmt(check.worst) + " ";
  }
  report(5, "eps=0 entropy lemmas", pass, detail);
}

void criterion_6_pa() {
  bool pass = true;
  std::string detail;
  for (const auto& check : verify::run_pa_suite(20260811)) {
    pass = pass && check.passed;
    detail += check.name + " excess=" + fmt(check.worst) + " ";
  }
  report(6, "privacy amplification exhaustive", pass, detail);
}

void criterion_7_calculators() {
  // Targets recomputed by tests/oracles/theorem_oracle.py, which evaluates
  // the length formulas verbatim: 112205 and 8560.
  const SecurityReport ideal = ell_ideal(1000000, 1e-3, 0.5);
  const SecurityReport robust =
      ell_robust(1000000, 1e-3, binary_entropy(0.95), 0.02, 0.5);
  const bool pass = ideal.ell_max == 112205 && robust.ell_max == 8560;
  report(7, "security calculators vs oracle", pass,
         "ideal=" + std::to_string(ideal.ell_max) +
             " robust=" + std::to_string(robust.ell_max));
}

void criterion_8_protocol_correctness() {
  ProtocolParams p;
  p.n = 1024;
  p.ell = 8;
  p.eps = 0.1;
  p.channel = {0.05, 0.3};
  p.storage_r = 0.5;
  p.rng_seed = 424242;

  int aborted = 0, agreed = 0, completed = 0;
  const CounterRng root(p.rng_seed);
  for (int trial = 0; trial < 200; ++trial) {
    const RunResult run = run_honest(
        p, trial % 2 ? QubitBasis::hadamard : QubitBasis::computational,
        root.split(trial));
    if (run.transcript.aborted) {
      ++aborted;
      continue;
    }
    ++completed;
    agreed += run.agree == 1;
  }
  const double agree_rate =
      completed ? static_cast<double>(agreed) / completed : 0.0;
  const double abort_rate = aborted / 200.0;

  ProtocolParams clean = p;
  clean.channel = {0.0, 0.0};
  clean.eps = 0.3;  // the acceptance window stays ~10 sigma wide
  int clean_agree = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const RunResult run = run_honest(
        clean, trial % 2 ? QubitBasis::hadamard : QubitBasis::computational,
        root.split(100000 + trial));
    clean_agree += (!run.transcript.aborted && run.agree == 1) ? 1 : 0;
  }

  const bool pass =
      agree_rate >= 0.99 && abort_rate <= 0.01 && clean_agree == 1000;
  report(8, "protocol correctness", pass,
         "agree=" + fmt(agree_rate) + " abort=" + fmt(abort_rate) +
             " noiseless=" + std::to_string(clean_agree) + "/1000");
}

void criterion_9_adversary_rates() {
  const double cos_pi8_sq = 0.5 + 0.25 * std::sqrt(2.0);
  struct Case {
    AttackStrategy strategy;
    double expect;
    const char* name;
  };
  const double r = 0.9;
  const std::vector<Case> cases = {
      {AttackStrategy::store(r), 0.5 * (1.0 + r), "store"},
      {AttackStrategy::measure(AttackStrategy::Kind::measure_computational),
       0.75, "computational"},
      {AttackStrategy::measure(AttackStrategy::Kind::measure_breidbart),
       cos_pi8_sq, "breidbart"},
  };
  bool pass = true;
  std::string detail;
  CounterRng rng(20260811);
  for (const Case& c : cases) {
    const Adversary adv(c.strategy);
    const double analytic = adv.analytic_rate();
    if (std::abs(analytic - c.expect) > 1e-12) pass = false;

    long long correct = 0;
    const int rounds = 10000;
    for (int i = 0; i < rounds; ++i) {
      const int x = rng.next_bit();
      const QubitBasis theta =
          rng.next_bit() ? QubitBasis::hadamard : QubitBasis::computational;
      const AttackOutcome outcome = adv.attack(x, theta, rng);
      correct += adv.finish_round(outcome.k, x, theta, rng) ? 1 : 0;
    }
    const double empirical = static_cast<double>(correct) / rounds;
    const double sigma = std::sqrt(c.expect * (1.0 - c.expect) / rounds);
    if (std::abs(empirical - c.expect) > 3.0 * sigma) pass = false;
    detail += std::string(c.name) + ":" + fmt(analytic) + "/" +
              fmt(empirical) + " ";
  }
  report(9, "adversary guessing rates", pass, detail);
}

void criterion_10_exact_security() {
  ProtocolParams p;
  p.n = 8;
  p.ell = 1;
  p.eps = 0.1;
  p.rng_seed = 99;

  p.storage_r = 1.0;
  const ExactAdvantage perfect =
      exact_advantage_small_n(p, AttackStrategy::store(1.0), 60);
  bool pass = std::abs(perfect.mean - 0.5) <= 1e-9 && perfect.ci95 <= 1e-9;

  std::string detail = "d(r=1)=" + fmt(perfect.mean) + " means=";
  double last = 1.0;
  for (double r : {1.0, 0.8, 0.5, 0.2, 0.0}) {
    p.storage_r = r;
    const ExactAdvantage adv =
        exact_advantage_small_n(p, AttackStrategy::store(r), 60);
    if (adv.mean > last + 1e-12) pass = false;
    last = adv.mean;
    detail += fmt(adv.mean) + " ";
  }
  report(10, "exact small-n security", pass, detail);
}

}  // namespace

int main() {
  criterion_1_r_hat();
  criterion_2_qber();
  criterion_3_optimizer();
  criterion_4_claims();
  criterion_5_entropy_lemmas();
  criterion_6_pa();
  criterion_7_calculators();
  criterion_8_protocol_correctness();
  criterion_9_adversary_rates();
  criterion_10_exact_security();
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
