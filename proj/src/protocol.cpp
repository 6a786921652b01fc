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

#include "noisyot/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "noisyot/bounds.hpp"
#include "noisyot/entstat.hpp"
#include "noisyot/uncertainty.hpp"

namespace noisyot {

namespace {

constexpr double kOutcomeFloor = 1e-14;

// Stream labels for the per-run rng splits.
enum : std::uint64_t {
  kStreamAliceBits = 1,
  kStreamAliceBases = 2,
  kStreamChannel = 3,
  kStreamSeeds = 4,
  kStreamCodePlus = 5,
  kStreamCodeTimes = 6,
  kStreamAdversary = 7,
  kStreamChoice = 8,
};

Bits pad_to(const Bits& x, int n) {
  Bits out = x;
  out.resize(n, 0);
  return out;
}

}  // namespace

void ProtocolParams::validate() const {
  if (n < 1) throw parameter_error("n must be at least 1");
  if (ell < 0) throw parameter_error("ell must be non-negative");
  if (!(eps >= 0.0 && eps < 1.0))
    throw parameter_error("eps must lie in [0, 1)");
  if (!(channel.p_error >= 0.0 && channel.p_error < 0.5))
    throw parameter_error("p_error must lie in [0, 1/2)");
  if (!(channel.p_erase >= 0.0 && channel.p_erase < 1.0))
    throw parameter_error("p_erase must lie in [0, 1)");
  if (channel.p_erase + eps >= 1.0)
    throw parameter_error("p_erase + eps must stay below 1");
  if (!(storage_r >= 0.0 && storage_r <= 1.0))
    throw parameter_error("storage noise r must lie in [0,1]");
  if (code.margin_frac < 0.0)
    throw parameter_error("code margin must be non-negative");
  if (certified) {
    if (eps <= 0.0)
      throw parameter_error("certified mode needs eps > 0");
    const SecurityReport rep =
        ell_robust(n, eps, t_closed_form(storage_r), channel.p_error,
                   channel.p_erase);
    if (!rep.secure || ell > rep.ell_max)
      throw parameter_error(
          "certified mode allows at most ell = " +
          std::to_string(rep.ell_max < 0 ? 0 : rep.ell_max) + " here");
  }
}

AttackStrategy AttackStrategy::store(double r) {
  AttackStrategy s;
  s.kind = Kind::store_as_is;
  s.storage_r = r;
  return s;
}

AttackStrategy AttackStrategy::measure(Kind basis_kind) {
  AttackStrategy s;
  s.kind = basis_kind;
  return s;
}

AttackStrategy AttackStrategy::partial(double alpha, double axis_x,
                                       double axis_z, double r) {
  AttackStrategy s;
  s.kind = Kind::partial;
  s.alpha = alpha;
  s.axis_x = axis_x;
  s.axis_z = axis_z;
  s.storage_r = r;
  return s;
}

AttackStrategy AttackStrategy::from_name(const std::string& name, double r) {
  if (name == "store") return store(r);
  if (name == "measure-computational")
    return measure(Kind::measure_computational);
  if (name == "measure-hadamard") return measure(Kind::measure_hadamard);
  if (name == "breidbart") return measure(Kind::measure_breidbart);
  if (name == "partial") return partial(0.0, 0.0, 1.0, r);
  throw parameter_error("unknown attack strategy: " + name);
}

const char* AttackStrategy::name() const {
  switch (kind) {
    case Kind::store_as_is:
      return "store";
    case Kind::measure_computational:
      return "measure-computational";
    case Kind::measure_hadamard:
      return "measure-hadamard";
    case Kind::measure_breidbart:
      return "breidbart";
    case Kind::partial:
      return "partial";
  }
  return "?";
}

// --- transcript ----------------------------------------------------------

std::string Transcript::to_jsonl() const {
  std::ostringstream out;
  for (const Message& m : messages) {
    nlohmann::json line = {{"seq", m.seq},
                           {"sender", std::string(1, m.sender)},
                           {"kind", m.kind},
                           {"payload", m.payload}};
    out << line.dump() << "\n";
  }
  int seq = messages.empty() ? 0 : messages.back().seq + 1;
  nlohmann::json alice = {
      {"seq", seq},
      {"sender", "A"},
      {"kind", "outputs_alice"},
      {"payload",
       {{"ell", static_cast<int>(s_plus.size())},
        {"s_plus", bits_to_base64(s_plus)},
        {"s_times", bits_to_base64(s_times)}}}};
  out << alice.dump() << "\n";
  if (!aborted) {
    nlohmann::json bob = {{"seq", seq + 1},
                          {"sender", "B"},
                          {"kind", "outputs_bob"},
                          {"payload",
                           {{"choice", std::string(to_string(choice))},
                            {"ell", static_cast<int>(s_bob.size())},
                            {"s_c", bits_to_base64(s_bob)}}}};
    out << bob.dump() << "\n";
  }
  return out.str();
}

Transcript Transcript::from_jsonl(const std::string& text) {
  Transcript t;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    Message m;
    m.seq = j.at("seq").get<int>();
    m.sender = j.at("sender").get<std::string>().at(0);
    m.kind = j.at("kind").get<std::string>();
    m.payload = j.at("payload");
    if (m.kind == "abort") t.aborted = true;
    if (m.kind == "outputs_alice") {
      const int ell = m.payload.at("ell").get<int>();
      t.s_plus = bits_from_base64(m.payload.at("s_plus").get<std::string>(), ell);
      t.s_times =
          bits_from_base64(m.payload.at("s_times").get<std::string>(), ell);
      continue;
    }
    if (m.kind == "outputs_bob") {
      const int ell = m.payload.at("ell").get<int>();
      t.choice = qubit_basis_from_string(m.payload.at("choice").get<std::string>());
      t.s_bob = bits_from_base64(m.payload.at("s_c").get<std::string>(), ell);
      continue;
    }
    t.messages.push_back(std::move(m));
  }
  return t;
}

// --- honest execution -----------------------------------------------------

RunResult run_honest(const ProtocolParams& params, QubitBasis choice) {
  return run_honest(params, choice, CounterRng(params.rng_seed));
}

RunResult run_honest(const ProtocolParams& params, QubitBasis choice,
                     CounterRng rng) {
  params.validate();
  const int n = params.n;

  CounterRng rng_bits = rng.split(kStreamAliceBits);
  CounterRng rng_bases = rng.split(kStreamAliceBases);
  CounterRng rng_channel = rng.split(kStreamChannel);
  CounterRng rng_seeds = rng.split(kStreamSeeds);

  Bits x = random_bits(n, rng_bits);
  std::vector<QubitBasis> theta(n);
  for (int i = 0; i < n; ++i)
    theta[i] = rng_bases.next_bit() ? QubitBasis::hadamard
                                    : QubitBasis::computational;

  RunResult result;
  Transcript& t = result.transcript;
  t.choice = choice;
  t.messages.push_back({0, 'A', "qubits", {{"n", n}}});

  // Erasures are independent of the basis; surviving mismatched-basis
  // measurements give a uniform outcome, matching ones pass through a BSC.
  std::vector<int> received;
  Bits x_bob(n, 0);
  for (int i = 0; i < n; ++i) {
    const int basis_idx = (theta[i] == QubitBasis::computational) ? 0 : 1;
    ++result.diag.sent_by_basis[basis_idx];
    if (rng_channel.bernoulli(params.channel.p_erase)) {
      ++result.diag.erased_by_basis[basis_idx];
      continue;
    }
    received.push_back(i);
    if (theta[i] == choice) {
      const bool flip = rng_channel.bernoulli(params.channel.p_error);
      x_bob[i] = x[i] ^ static_cast<std::uint8_t>(flip);
      ++result.diag.matched_surviving;
      result.diag.matched_flips += flip ? 1 : 0;
    } else {
      x_bob[i] = static_cast<std::uint8_t>(rng_channel.next_bit());
    }
  }
  t.messages.push_back({1, 'B', "report", {{"received", received}}});

  std::vector<int> i_plus, i_times;
  for (int i : received)
    (theta[i] == QubitBasis::computational ? i_plus : i_times).push_back(i);

  const AbortInterval window = abort_interval(n, params.channel.p_erase,
                                              params.eps);
  const long long m_plus = static_cast<long long>(i_plus.size());
  const long long m_times = static_cast<long long>(i_times.size());
  if (m_plus < window.lo || m_plus > window.hi || m_times < window.lo ||
      m_times > window.hi) {
    t.aborted = true;
    t.messages.push_back({2, 'A', "abort",
                          {{"m_plus", m_plus},
                           {"m_times", m_times},
                           {"lo", window.lo},
                           {"hi", window.hi}}});
    result.agree = -1;
    return result;
  }

  ToeplitzHash f_plus = ToeplitzHash::random(n, params.ell, rng_seeds);
  ToeplitzHash f_times = ToeplitzHash::random(n, params.ell, rng_seeds);

  auto branch_string = [&](const std::vector<int>& idx) {
    Bits out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(x[i]);
    return out;
  };
  const Bits x_plus = branch_string(i_plus);
  const Bits x_times = branch_string(i_times);

  CounterRng rng_code_plus = rng.split(kStreamCodePlus);
  CounterRng rng_code_times = rng.split(kStreamCodeTimes);
  const int s_plus_bits = LinearCode::design_syndrome_bits(
      static_cast<int>(m_plus), params.channel.p_error, params.code.margin_frac);
  const int s_times_bits = LinearCode::design_syndrome_bits(
      static_cast<int>(m_times), params.channel.p_error,
      params.code.margin_frac);
  LinearCode code_plus(static_cast<int>(m_plus), s_plus_bits, rng_code_plus);
  LinearCode code_times(static_cast<int>(m_times), s_times_bits,
                        rng_code_times);
  const Bits syn_plus = code_plus.syndrome(x_plus);
  const Bits syn_times = code_times.syndrome(x_times);

  t.messages.push_back(
      {2, 'A', "reveal",
       {{"reveal_token", params.reveal_token},
        {"i_plus", i_plus},
        {"i_times", i_times},
        {"ell", params.ell},
        {"seed_plus", bits_to_base64(f_plus.seed)},
        {"seed_times", bits_to_base64(f_times.seed)},
        {"syn_plus", bits_to_base64(syn_plus)},
        {"syn_plus_bits", s_plus_bits},
        {"syn_times", bits_to_base64(syn_times)},
        {"syn_times_bits", s_times_bits}}});

  t.s_plus = f_plus.apply(pad_to(x_plus, n));
  t.s_times = f_times.apply(pad_to(x_times, n));

  // Bob corrects his branch. Long branches use the genie rule: decoding
  // succeeds exactly when the realized error weight is inside the radius an
  // ML decoder of this rate handles.
  const bool plus_choice = (choice == QubitBasis::computational);
  const std::vector<int>& idx_c = plus_choice ? i_plus : i_times;
  const LinearCode& code_c = plus_choice ? code_plus : code_times;
  const Bits& syn_c = plus_choice ? syn_plus : syn_times;
  const Bits& x_branch = plus_choice ? x_plus : x_times;

  Bits received_branch;
  received_branch.reserve(idx_c.size());
  for (int i : idx_c) received_branch.push_back(x_bob[i]);

  Bits corrected;
  if (code_c.length() <= LinearCode::kExactMlMaxLen) {
    corrected = code_c.ml_decode(received_branch, syn_c);
  } else {
    int weight = 0;
    for (std::size_t j = 0; j < received_branch.size(); ++j)
      weight += (received_branch[j] != x_branch[j]) ? 1 : 0;
    const int radius =
        LinearCode::genie_radius(code_c.length(), code_c.syndrome_bits());
    corrected = (weight <= radius) ? x_branch : received_branch;
  }

  const ToeplitzHash& f_c = plus_choice ? f_plus : f_times;
  t.s_bob = f_c.apply(pad_to(corrected, n));

  const Bits& s_alice = plus_choice ? t.s_plus : t.s_times;
  result.agree = (t.s_bob == s_alice) ? 1 : 0;
  return result;
}

// --- adversary ------------------------------------------------------------

namespace {

std::vector<OutcomeArm> build_arms(const AttackStrategy& strategy,
                                   QubitBasis theta) {
  const double r = strategy.storage_r;
  std::array<CMat, 2> rho;
  for (int x = 0; x < 2; ++x) rho[x] = bb84_state(x, theta).mat();

  auto projective = [&](const std::vector<cplx>& b0) {
    // Destructive two-outcome measurement along |b0>, |b0_perp>.
    const std::vector<cplx> b1 = {-std::conj(b0[1]), std::conj(b0[0])};
    std::vector<OutcomeArm> arms(2);
    const std::array<std::vector<cplx>, 2> vecs = {b0, b1};
    for (int k = 0; k < 2; ++k) {
      const CMat proj = DensityMatrix::pure(vecs[k]).mat();
      for (int x = 0; x < 2; ++x)
        arms[k].p_given_x[x] = (proj * rho[x]).trace().real();
    }
    return arms;
  };

  switch (strategy.kind) {
    case AttackStrategy::Kind::store_as_is: {
      std::vector<OutcomeArm> arms(1);
      arms[0].p_given_x = {1.0, 1.0};
      arms[0].has_stored = true;
      for (int x = 0; x < 2; ++x)
        arms[0].stored[x] = depolarize_raw(rho[x], r);
      return arms;
    }
    case AttackStrategy::Kind::measure_computational:
      return projective({1.0, 0.0});
    case AttackStrategy::Kind::measure_hadamard:
      return projective({1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)});
    case AttackStrategy::Kind::measure_breidbart: {
      const double c = std::cos(std::atan(1.0) / 2.0);  // cos(pi/8)
      const double s = std::sin(std::atan(1.0) / 2.0);
      return projective({c, s});
    }
    case AttackStrategy::Kind::partial: {
      const MeasurementOperator base(strategy.alpha, strategy.axis_x,
                                     strategy.axis_z);
      const OrbitMeasurement orbit(base);
      std::vector<OutcomeArm> arms(4);
      for (int k = 0; k < 4; ++k) {
        const CMat& f = orbit.operators()[k];
        const CMat fdag = f.adjoint();
        for (int x = 0; x < 2; ++x) {
          CMat post = f * rho[x] * fdag;
          const double p = post.trace().real();
          arms[k].p_given_x[x] = std::max(0.0, p);
          if (p >= kOutcomeFloor) {
            post *= 1.0 / p;
            arms[k].stored[x] = depolarize_raw(post, r);
            arms[k].has_stored = true;
          } else {
            arms[k].stored[x] = CMat::identity(2);
            arms[k].stored[x] *= 0.5;
          }
        }
      }
      return arms;
    }
  }
  throw parameter_error("unknown attack kind");
}

}  // namespace

Adversary::Adversary(const AttackStrategy& strategy) : strategy_(strategy) {
  if (!(strategy.storage_r >= 0.0 && strategy.storage_r <= 1.0))
    throw parameter_error("storage noise r must lie in [0,1]");
  arms_[0] = build_arms(strategy, QubitBasis::computational);
  arms_[1] = build_arms(strategy, QubitBasis::hadamard);
}

const std::vector<OutcomeArm>& Adversary::ensemble(QubitBasis theta) const {
  return arms_[theta == QubitBasis::computational ? 0 : 1];
}

AttackOutcome Adversary::attack(int x, QubitBasis theta, CounterRng& rng) const {
  const auto& arms = ensemble(theta);
  const double u = rng.next_double();
  double acc = 0.0;
  int chosen = -1;
  for (std::size_t k = 0; k < arms.size(); ++k) {
    if (arms[k].p_given_x[x] < kOutcomeFloor) continue;
    chosen = static_cast<int>(k);  // rounding fallback: last possible arm
    acc += arms[k].p_given_x[x];
    if (u < acc) break;
  }
  if (chosen < 0) throw validation_error("no possible measurement outcome");
  AttackOutcome out;
  out.k = chosen;
  if (arms[chosen].has_stored && arms[chosen].p_given_x[x] >= kOutcomeFloor)
    out.stored = DensityMatrix(arms[chosen].stored[x]);
  return out;
}

double Adversary::round_guess_prob(QubitBasis theta) const {
  const auto& arms = ensemble(theta);
  double total = 0.0;
  for (const OutcomeArm& arm : arms) {
    const double p_k = 0.5 * (arm.p_given_x[0] + arm.p_given_x[1]);
    if (p_k < kOutcomeFloor) continue;
    const double q0 = 0.5 * arm.p_given_x[0] / p_k;
    const double q1 = 1.0 - q0;
    if (!arm.has_stored) {
      total += p_k * std::max(q0, q1);
      continue;
    }
    CMat diff = arm.stored[0];
    diff *= q0;
    CMat other = arm.stored[1];
    other *= q1;
    diff -= other;
    total += p_k * 0.5 * (1.0 + trace_norm_hermitian(diff));
  }
  return total;
}

double Adversary::analytic_rate() const {
  return 0.5 * (round_guess_prob(QubitBasis::computational) +
                round_guess_prob(QubitBasis::hadamard));
}

bool Adversary::finish_round(int k, int true_x, QubitBasis theta,
                             CounterRng& rng) const {
  const auto& arms = ensemble(theta);
  const OutcomeArm& arm = arms[k];
  const double p_k = 0.5 * (arm.p_given_x[0] + arm.p_given_x[1]);
  const double q0 = (p_k < kOutcomeFloor) ? 0.5 : 0.5 * arm.p_given_x[0] / p_k;
  if (!arm.has_stored) return (q0 >= 0.5 ? 0 : 1) == true_x;

  // Helstrom projector onto the non-negative eigenspace of q0 s0 - q1 s1.
  CMat diff = arm.stored[0];
  diff *= q0;
  CMat other = arm.stored[1];
  other *= (1.0 - q0);
  diff -= other;
  const EigSys es = hermitian_eig(diff);
  CMat m0(2);
  for (int i = 0; i < 2; ++i) {
    if (es.values[i] < 0.0) continue;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        m0.at(a, b) += es.vectors.at(a, i) * std::conj(es.vectors.at(b, i));
  }
  const double p_guess0 = std::clamp(
      (m0 * arm.stored[true_x]).trace().real(), 0.0, 1.0);
  const int guess = rng.bernoulli(p_guess0) ? 0 : 1;
  return guess == true_x;
}

AttackOutcome apply_attack(const AttackStrategy& strategy, int x,
                           QubitBasis theta, CounterRng& rng) {
  if (x != 0 && x != 1) throw parameter_error("bit must be 0 or 1");
  return Adversary(strategy).attack(x, theta, rng);
}

FinishStats adversary_finish(const AttackStrategy& strategy,
                             const std::vector<StoredRound>& rounds,
                             CounterRng& rng) {
  const Adversary adv(strategy);
  FinishStats stats;
  double analytic = 0.0;
  long long correct = 0;
  for (const StoredRound& round : rounds) {
    analytic += adv.round_guess_prob(round.theta);
    correct += adv.finish_round(round.k, round.x, round.theta, rng) ? 1 : 0;
  }
  stats.rounds = static_cast<long long>(rounds.size());
  if (stats.rounds > 0) {
    stats.analytic_rate = analytic / static_cast<double>(stats.rounds);
    stats.empirical_rate =
        static_cast<double>(correct) / static_cast<double>(stats.rounds);
  }
  return stats;
}

SimReport simulate(const ProtocolParams& params, const AttackStrategy& strategy,
                   int trials, bool exact_mode) {
  params.validate();
  if (trials < 1) throw parameter_error("trials must be at least 1");

  SimReport report;
  const CounterRng root(params.rng_seed);

  long long aborts = 0, agreements = 0, completed = 0;
  for (int trial = 0; trial < trials; ++trial) {
    CounterRng trial_rng = root.split(0x10000 + trial);
    CounterRng choice_rng = trial_rng.split(kStreamChoice);
    const QubitBasis choice = choice_rng.next_bit()
                                  ? QubitBasis::hadamard
                                  : QubitBasis::computational;
    const RunResult run = run_honest(params, choice, trial_rng);
    if (run.transcript.aborted) {
      ++aborts;
      continue;
    }
    ++completed;
    agreements += (run.agree == 1) ? 1 : 0;
  }
  report.abort_rate = static_cast<double>(aborts) / trials;
  report.correctness_rate =
      completed > 0 ? static_cast<double>(agreements) / completed : 0.0;

  AttackStrategy adv_strategy = strategy;
  adv_strategy.storage_r = params.storage_r;
  const Adversary adv(adv_strategy);
  report.per_bit_guess_analytic = adv.analytic_rate();

  long long correct = 0, rounds = 0;
  for (int trial = 0; trial < trials; ++trial) {
    CounterRng atk_rng = root.split(0x20000 + trial).split(kStreamAdversary);
    for (int i = 0; i < params.n; ++i) {
      const int x = atk_rng.next_bit();
      const QubitBasis theta = atk_rng.next_bit() ? QubitBasis::hadamard
                                                  : QubitBasis::computational;
      const AttackOutcome outcome = adv.attack(x, theta, atk_rng);
      correct += adv.finish_round(outcome.k, x, theta, atk_rng) ? 1 : 0;
      ++rounds;
    }
  }
  report.guess_rounds = rounds;
  report.per_bit_guess_empirical =
      static_cast<double>(correct) / static_cast<double>(rounds);

  // Certified length at these parameters, for comparison with the simulation.
  try {
    const double t = t_closed_form(params.storage_r);
    const SecurityReport sec =
        (params.channel.p_error > 0.0 || params.channel.p_erase > 0.0)
            ? ell_robust(params.n, params.eps, t, params.channel.p_error,
                         params.channel.p_erase)
            : ell_ideal(params.n, params.eps, t);
    report.ell_certified = sec.ell_max;
  } catch (const parameter_error&) {
    report.ell_certified = -1;  // below the admissibility floor
  }

  if (exact_mode) {
    report.exact = exact_advantage_small_n(params, adv_strategy, trials);
    report.has_exact = true;
  }
  return report;
}

}  // namespace noisyot
