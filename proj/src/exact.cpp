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

// Exact evaluation of the adversary's output non-uniformity at desk scale.
// For each sampled classical context (bases, hash seeds) the cq-state of the
// complementary branch's output is written down exactly and its distance from
// uniform computed via trace norms. The two independent branches let the
// conditioning drop to the complementary branch's own registers.

#include <cmath>
#include <cstdint>

#include "noisyot/entstat.hpp"
#include "noisyot/protocol.hpp"

namespace noisyot {

namespace {

constexpr double kProbFloor = 1e-15;

struct RoundView {
  const std::vector<OutcomeArm>* arms;
  int hash_row_bits[2];  // effective seed bits of the (up to 2) hash rows
};

// d(S | K E) for one branch and ell = 1, using the tensor factorization of
// the single parity: the trace norm of a product operator is the product of
// the per-round trace norms.
double branch_distance_parity(const std::vector<RoundView>& rounds) {
  double product = 1.0;
  for (const RoundView& rv : rounds) {
    double arm_sum = 0.0;
    for (const OutcomeArm& arm : *rv.arms) {
      if (arm.p_given_x[0] + arm.p_given_x[1] < kProbFloor) continue;
      if (!arm.has_stored) {
        arm_sum += (rv.hash_row_bits[0] == 0)
                       ? (arm.p_given_x[0] + arm.p_given_x[1])
                       : std::abs(arm.p_given_x[0] - arm.p_given_x[1]);
        continue;
      }
      CMat delta = arm.stored[0];
      delta *= arm.p_given_x[0];
      CMat second = arm.stored[1];
      second *= arm.p_given_x[1];
      if (rv.hash_row_bits[0] == 0)
        delta += second;
      else
        delta -= second;
      arm_sum += trace_norm_hermitian(delta);
    }
    product *= 0.5 * arm_sum;  // the 2^{-n_b} normalization, one bit per round
  }
  return 0.5 * product;
}

// Dense evaluation for ell in {1,2}: enumerate outcome assignments, build the
// block operators on the stored qubits, take exact trace norms.
double branch_distance_dense(const std::vector<RoundView>& rounds, int ell) {
  const int nb = static_cast<int>(rounds.size());
  const int n_hash = 1 << ell;

  std::vector<int> arm_count(nb);
  std::vector<int> stored_round;
  double assignments = 1.0;
  for (int i = 0; i < nb; ++i) {
    arm_count[i] = static_cast<int>(rounds[i].arms->size());
    assignments *= arm_count[i];
    if ((*rounds[i].arms)[0].has_stored) stored_round.push_back(i);
  }
  const int dim = 1 << stored_round.size();
  const double work =
      assignments * (static_cast<double>(1 << nb) * dim * dim +
                     n_hash * static_cast<double>(dim) * dim * dim);
  if (work > 4e9)
    throw unsupported_error(
        "exact mode work ceiling exceeded; reduce n or use ell = 1");

  std::vector<int> k(nb, 0);
  double total = 0.0;
  while (true) {
    // Probability-weighted block operators for this outcome assignment.
    bool possible = true;
    for (int i = 0; i < nb && possible; ++i) {
      const OutcomeArm& arm = (*rounds[i].arms)[k[i]];
      possible = arm.p_given_x[0] + arm.p_given_x[1] >= kProbFloor;
    }
    if (possible) {
      std::vector<CMat> blocks(n_hash, CMat(dim));
      for (int x = 0; x < (1 << nb); ++x) {
        double weight = 1.0;
        int s = 0;
        for (int i = 0; i < nb; ++i) {
          const int xi = (x >> i) & 1;
          weight *= (*rounds[i].arms)[k[i]].p_given_x[xi];
          if (xi) {
            s ^= rounds[i].hash_row_bits[0];
            if (ell > 1) s ^= rounds[i].hash_row_bits[1] << 1;
          }
        }
        if (weight < kProbFloor) continue;
        CMat op(1);
        op.at(0, 0) = 1.0;
        for (int r : stored_round)
          op = kron(op, (*rounds[r].arms)[k[r]].stored[(x >> r) & 1]);
        op *= weight / static_cast<double>(1 << nb);
        blocks[s] += op;
      }
      CMat mixture(dim);
      for (const CMat& b : blocks) mixture += b;
      mixture *= 1.0 / n_hash;
      for (const CMat& b : blocks) total += trace_norm_hermitian(b - mixture);
    }
    int pos = 0;
    while (pos < nb && ++k[pos] == arm_count[pos]) k[pos++] = 0;
    if (pos == nb) break;
  }
  return 0.5 * total;
}

// Effective hash-row bit for branch position j: the Toeplitz row entry at the
// column where the j-th branch bit lands after zero-padding.
int effective_row_bit(const ToeplitzHash& hash, int row, int branch_pos) {
  return hash.entry(row, branch_pos);
}

}  // namespace

ExactAdvantage exact_advantage_small_n(const ProtocolParams& params,
                                       const AttackStrategy& strategy,
                                       int classical_samples, ExactPath path) {
  params.validate();
  if (params.n > 8)
    throw parameter_error("exact mode supports n <= 8");
  if (params.ell > 2)
    throw parameter_error("exact mode supports ell <= 2");
  if (classical_samples < 1)
    throw parameter_error("need at least one classical sample");
  if (path == ExactPath::parity && params.ell > 1)
    throw parameter_error("the parity factorization needs ell <= 1");
  const bool use_parity =
      params.ell == 1 && path != ExactPath::dense;

  AttackStrategy adv_strategy = strategy;
  adv_strategy.storage_r = params.storage_r;
  const Adversary adv(adv_strategy);
  const double guess_plus = adv.round_guess_prob(QubitBasis::computational);
  const double guess_times = adv.round_guess_prob(QubitBasis::hadamard);

  const CounterRng root(params.rng_seed);
  std::vector<double> values;
  values.reserve(classical_samples);
  for (int sample = 0; sample < classical_samples; ++sample) {
    CounterRng rng = root.split(0x30000 + sample);

    std::vector<QubitBasis> theta(params.n);
    for (int i = 0; i < params.n; ++i)
      theta[i] = rng.next_bit() ? QubitBasis::hadamard
                                : QubitBasis::computational;
    const ToeplitzHash f_plus = ToeplitzHash::random(params.n, params.ell, rng);
    const ToeplitzHash f_times =
        ToeplitzHash::random(params.n, params.ell, rng);

    std::vector<int> branch[2];
    for (int i = 0; i < params.n; ++i)
      branch[theta[i] == QubitBasis::computational ? 0 : 1].push_back(i);

    // Exact per-branch min-entropy toward the adversary picks D.
    const double h_plus =
        -static_cast<double>(branch[0].size()) * std::log2(guess_plus);
    const double h_times =
        -static_cast<double>(branch[1].size()) * std::log2(guess_times);
    const std::size_t d_index = split_index({h_plus, h_times}).index;
    const std::size_t other = 1 - d_index;

    double d_value;
    if (params.ell == 0) {
      d_value = 0.0;  // an empty string is trivially uniform
    } else {
      const ToeplitzHash& f_other = (other == 0) ? f_plus : f_times;
      const QubitBasis basis_other =
          (other == 0) ? QubitBasis::computational : QubitBasis::hadamard;
      std::vector<RoundView> rounds;
      rounds.reserve(branch[other].size());
      for (std::size_t j = 0; j < branch[other].size(); ++j) {
        RoundView rv;
        rv.arms = &adv.ensemble(basis_other);
        rv.hash_row_bits[0] = effective_row_bit(f_other, 0, static_cast<int>(j));
        rv.hash_row_bits[1] =
            params.ell > 1 ? effective_row_bit(f_other, 1, static_cast<int>(j))
                           : 0;
        rounds.push_back(rv);
      }
      d_value = use_parity ? branch_distance_parity(rounds)
                           : branch_distance_dense(rounds, params.ell);
    }
    values.push_back(d_value);
  }

  ExactAdvantage out;
  out.samples = classical_samples;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / classical_samples;
  if (classical_samples > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    const double var = ss / (classical_samples - 1);
    out.ci95 = 1.96 * std::sqrt(var / classical_samples);
  }
  return out;
}

}  // namespace noisyot
