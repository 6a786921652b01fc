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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "noisyot/hashing.hpp"
#include "noisyot/linear_code.hpp"
#include "noisyot/qmath.hpp"
#include "noisyot/rng.hpp"

namespace noisyot {

struct ChannelModel {
  double p_error = 0.0;
  double p_erase = 0.0;
};

struct CodeSpec {
  double margin_frac = 0.1;  // extra syndrome bits on top of h(p)*m
};

struct ProtocolParams {
  int n = 0;
  int ell = 0;
  double eps = 0.0;
  std::uint32_t reveal_token = 1;  // event-ordering tag, no wall-clock meaning
  ChannelModel channel;
  double storage_r = 1.0;
  CodeSpec code;
  std::uint64_t rng_seed = 0;
  bool certified = false;  // demand ell within the certified bound

  void validate() const;
};

struct AttackStrategy {
  enum class Kind {
    store_as_is,
    measure_computational,
    measure_hadamard,
    measure_breidbart,
    partial,
  };
  Kind kind = Kind::store_as_is;
  double storage_r = 1.0;
  double alpha = 0.0;  // partial-measurement parameters
  double axis_x = 0.0;
  double axis_z = 1.0;

  static AttackStrategy store(double r);
  static AttackStrategy measure(Kind basis_kind);
  static AttackStrategy partial(double alpha, double axis_x, double axis_z,
                                double r);
  static AttackStrategy from_name(const std::string& name, double r);
  const char* name() const;
};

struct Message {
  int seq = 0;
  char sender = 'A';
  std::string kind;
  nlohmann::json payload;
};

/// Full record of one protocol run. Wire order is fixed: qubits -> report
/// -> reveal (or abort); output records trail the wire messages, and the
/// reveal is absent exactly when the run aborted.
struct Transcript {
  std::vector<Message> messages;
  bool aborted = false;
  Bits s_plus, s_times;  // Alice's outputs
  Bits s_bob;            // Bob's output, empty after an abort
  QubitBasis choice = QubitBasis::computational;

  std::string to_jsonl() const;
  static Transcript from_jsonl(const std::string& text);
};

struct RunDiagnostics {
  long long sent_by_basis[2] = {0, 0};     // indexed by QubitBasis order +, x
  long long erased_by_basis[2] = {0, 0};
  long long matched_surviving = 0;  // received positions with theta == C
  long long matched_flips = 0;      // BSC flips among those
};

struct RunResult {
  Transcript transcript;
  int agree = -1;  // 1 agree, 0 disagree, -1 not applicable (abort)
  RunDiagnostics diag;
};

/// One honest execution of the robust protocol (erasures, BSC, syndromes,
/// abort window); the noiseless protocol is the p_error = p_erase = 0 case.
RunResult run_honest(const ProtocolParams& params, QubitBasis choice);
RunResult run_honest(const ProtocolParams& params, QubitBasis choice,
                     CounterRng rng);

// --- individual-storage adversary --------------------------------------

struct AttackOutcome {
  int k = 0;                          // classical outcome index
  std::optional<DensityMatrix> stored;  // post-measurement state after noise
};

struct OutcomeArm {
  std::array<double, 2> p_given_x{};  // p(k | x, theta)
  bool has_stored = false;
  std::array<CMat, 2> stored;  // normalized, already depolarized
};

/// Per-round adversary machinery for one attack strategy at one noise level.
class Adversary {
 public:
  explicit Adversary(const AttackStrategy& strategy);

  const std::vector<OutcomeArm>& ensemble(QubitBasis theta) const;

  AttackOutcome attack(int x, QubitBasis theta, CounterRng& rng) const;

  /// Exact optimal guessing probability of x after the basis is revealed.
  double round_guess_prob(QubitBasis theta) const;
  double analytic_rate() const;

  /// Samples the optimal (Helstrom) guess for one round; true when correct.
  bool finish_round(int k, int true_x, QubitBasis theta, CounterRng& rng) const;

 private:
  AttackStrategy strategy_;
  std::array<std::vector<OutcomeArm>, 2> arms_;
};

AttackOutcome apply_attack(const AttackStrategy& strategy, int x,
                           QubitBasis theta, CounterRng& rng);

struct StoredRound {
  int k = 0;
  int x = 0;
  QubitBasis theta = QubitBasis::computational;
};

struct FinishStats {
  double analytic_rate = 0.0;
  double empirical_rate = 0.0;
  long long rounds = 0;
};

/// Per-qubit Helstrom guessing after the basis reveal, optimal for product
/// states in the individual-storage model.
FinishStats adversary_finish(const AttackStrategy& strategy,
                             const std::vector<StoredRound>& rounds,
                             CounterRng& rng);

struct ExactAdvantage {
  double mean = 0.0;
  double ci95 = 0.0;  // half-width
  int samples = 0;
};

/// How the per-context trace norms are evaluated: a tensor factorization
/// handles single-bit outputs, the dense block construction everything else.
/// Both are exact; `automatic` picks by ell. The explicit choices exist so
/// the two routes can be checked against each other.
enum class ExactPath { automatic, parity, dense };

/// Exact non-uniformity d(S_{D-bar} | S_D D Theta K E F) of the protocol
/// output toward the adversary, Monte Carlo over the classical randomness
/// (Theta, hash seeds) with the quantum part evaluated by exact trace norms.
/// Requires n <= 8 and ell <= 2; dense evaluation additionally enforces a
/// work ceiling (partial measurements at ell = 2 need small n).
ExactAdvantage exact_advantage_small_n(const ProtocolParams& params,
                                       const AttackStrategy& strategy,
                                       int classical_samples,
                                       ExactPath path = ExactPath::automatic);

struct SimReport {
  double correctness_rate = 0.0;  // among non-aborted honest runs
  double abort_rate = 0.0;
  double per_bit_guess_analytic = 0.0;
  double per_bit_guess_empirical = 0.0;
  long long guess_rounds = 0;
  long long ell_certified = -1;  // -1 when the bound does not certify
  bool has_exact = false;
  ExactAdvantage exact;
};

/// Seeded Monte Carlo over honest runs and per-round attacks; deterministic
/// for a fixed ProtocolParams::rng_seed.
SimReport simulate(const ProtocolParams& params, const AttackStrategy& strategy,
                   int trials, bool exact_mode = false);

}  // namespace noisyot
