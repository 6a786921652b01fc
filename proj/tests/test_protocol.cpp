#include <cmath>

#include "doctest.h"
#include "noisyot/bounds.hpp"
#include "noisyot/protocol.hpp"
#include "noisyot/uncertainty.hpp"

using namespace noisyot;

namespace {

ProtocolParams small_params() {
  ProtocolParams p;
  p.n = 256;
  p.ell = 8;
  p.eps = 0.3;
  p.channel = {0.0, 0.0};
  p.storage_r = 0.8;
  p.rng_seed = 42;
  return p;
}

}  // namespace

TEST_CASE("certified mode rejects overlong outputs") {
  ProtocolParams p;
  p.n = 1000000;
  p.eps = 1e-3;
  p.storage_r = 0.5;
  p.channel = {0.02, 0.3};
  p.certified = true;
  const long long cap =
      ell_robust(p.n, p.eps, t_closed_form(p.storage_r), 0.02, 0.3).ell_max;
  p.ell = static_cast<int>(cap);
  CHECK_NOTHROW(p.validate());
  p.ell = static_cast<int>(cap) + 1;
  CHECK_THROWS_AS(p.validate(), parameter_error);
}

TEST_CASE("noiseless honest runs always agree and never abort") {
  ProtocolParams p = small_params();
  for (int seed = 0; seed < 50; ++seed) {
    p.rng_seed = seed;
    const RunResult run = run_honest(
        p, seed % 2 ? QubitBasis::hadamard : QubitBasis::computational);
    CHECK_FALSE(run.transcript.aborted);
    CHECK(run.agree == 1);
  }
}

TEST_CASE("message order is fixed: qubits, report, reveal") {
  const RunResult run = run_honest(small_params(), QubitBasis::computational);
  const auto& msgs = run.transcript.messages;
  REQUIRE(msgs.size() == 3);
  CHECK(msgs[0].kind == "qubits");
  CHECK(msgs[0].sender == 'A');
  CHECK(msgs[1].kind == "report");
  CHECK(msgs[1].sender == 'B');
  CHECK(msgs[2].kind == "reveal");
  CHECK(msgs[2].sender == 'A');
}

TEST_CASE("transcript round-trips through jsonl") {
  ProtocolParams p = small_params();
  p.channel = {0.03, 0.2};
  const RunResult run = run_honest(p, QubitBasis::hadamard);
  const std::string text = run.transcript.to_jsonl();
  const Transcript back = Transcript::from_jsonl(text);
  CHECK(back.to_jsonl() == text);
  CHECK(back.aborted == run.transcript.aborted);
  CHECK(back.s_plus == run.transcript.s_plus);
  CHECK(back.s_times == run.transcript.s_times);
  CHECK(back.s_bob == run.transcript.s_bob);
}

TEST_CASE("reporting too few indices aborts") {
  // A tight window plus heavy erasures forces the abort branch.
  ProtocolParams p = small_params();
  p.eps = 0.01;
  p.channel.p_erase = 0.5;
  int aborts = 0;
  for (int seed = 0; seed < 20; ++seed) {
    p.rng_seed = seed;
    const RunResult run = run_honest(p, QubitBasis::computational);
    if (run.transcript.aborted) {
      ++aborts;
      CHECK(run.agree == -1);
      CHECK(run.transcript.messages.back().kind == "abort");
    }
  }
  CHECK(aborts > 0);
}

TEST_CASE("erasure rates conditioned on the basis agree") {
  ProtocolParams p = small_params();
  p.n = 4096;
  p.channel.p_erase = 0.3;
  p.eps = 0.2;
  long long erased[2] = {0, 0}, sent[2] = {0, 0};
  for (int seed = 0; seed < 25; ++seed) {
    p.rng_seed = 1000 + seed;
    const RunResult run = run_honest(p, QubitBasis::computational);
    for (int b = 0; b < 2; ++b) {
      erased[b] += run.diag.erased_by_basis[b];
      sent[b] += run.diag.sent_by_basis[b];
    }
  }
  const double rate_plus = static_cast<double>(erased[0]) / sent[0];
  const double rate_times = static_cast<double>(erased[1]) / sent[1];
  const double sigma = std::sqrt(0.3 * 0.7 * (1.0 / sent[0] + 1.0 / sent[1]));
  CHECK(std::abs(rate_plus - rate_times) <= 3.0 * sigma);
}

TEST_CASE("bit-flip rate on surviving matched positions tracks p_error") {
  ProtocolParams p = small_params();
  p.n = 2048;
  p.channel = {0.05, 0.3};
  p.eps = 0.2;
  long long flips = 0, positions = 0;
  for (int seed = 0; seed < 40; ++seed) {
    p.rng_seed = 2000 + seed;
    const RunResult run = run_honest(p, QubitBasis::computational);
    flips += run.diag.matched_flips;
    positions += run.diag.matched_surviving;
  }
  REQUIRE(positions > 0);
  const double rate = static_cast<double>(flips) / positions;
  const double sigma = std::sqrt(0.05 * 0.95 / static_cast<double>(positions));
  CHECK(std::abs(rate - 0.05) <= 3.0 * sigma);

  // ell = 0 hashes everything to the empty string: runs always agree.
  ProtocolParams q = small_params();
  q.n = 64;
  q.ell = 0;
  q.channel.p_error = 0.05;
  q.eps = 0.9;
  for (int seed = 0; seed < 50; ++seed) {
    q.rng_seed = seed;
    const RunResult run = run_honest(q, QubitBasis::computational);
    if (!run.transcript.aborted) CHECK(run.agree == 1);
  }
}

TEST_CASE("attack outcomes and analytic rates") {
  CounterRng rng(99);

  const Adversary store(AttackStrategy::store(0.8));
  CHECK(store.analytic_rate() == doctest::Approx(0.9).epsilon(1e-12));

  const Adversary comp(
      AttackStrategy::measure(AttackStrategy::Kind::measure_computational));
  CHECK(comp.round_guess_prob(QubitBasis::computational) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(comp.round_guess_prob(QubitBasis::hadamard) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(comp.analytic_rate() == doctest::Approx(0.75).epsilon(1e-12));

  const Adversary had(
      AttackStrategy::measure(AttackStrategy::Kind::measure_hadamard));
  CHECK(had.analytic_rate() == doctest::Approx(0.75).epsilon(1e-12));

  const Adversary breidbart(
      AttackStrategy::measure(AttackStrategy::Kind::measure_breidbart));
  const double cos_pi8_sq = 0.5 + 0.25 * std::sqrt(2.0);
  CHECK(breidbart.round_guess_prob(QubitBasis::computational) ==
        doctest::Approx(cos_pi8_sq).epsilon(1e-12));
  CHECK(breidbart.round_guess_prob(QubitBasis::hadamard) ==
        doctest::Approx(cos_pi8_sq).epsilon(1e-12));

  // r = 0 storage carries nothing.
  const Adversary blind(AttackStrategy::store(0.0));
  CHECK(blind.analytic_rate() == doctest::Approx(0.5).epsilon(1e-12));

  // StoreAsIs yields no classical outcome but keeps a state.
  const AttackOutcome out =
      apply_attack(AttackStrategy::store(0.7), 0, QubitBasis::hadamard, rng);
  CHECK(out.k == 0);
  REQUIRE(out.stored.has_value());
  CHECK(trace_distance(*out.stored,
                       depolarize(bb84_state(0, QubitBasis::hadamard), 0.7)) <=
        1e-12);
}

TEST_CASE("partial measurements reduce to the named strategies") {
  // alpha = 1/2 makes every orbit operator proportional to the identity.
  const Adversary as_store(AttackStrategy::partial(0.5, 0.0, 1.0, 0.6));
  const Adversary store(AttackStrategy::store(0.6));
  CHECK(as_store.round_guess_prob(QubitBasis::computational) ==
        doctest::Approx(store.round_guess_prob(QubitBasis::computational))
            .epsilon(1e-9));
  CHECK(as_store.round_guess_prob(QubitBasis::hadamard) ==
        doctest::Approx(store.round_guess_prob(QubitBasis::hadamard))
            .epsilon(1e-9));

  // alpha = 0 along z is the computational measurement up to relabeling.
  const Adversary as_comp(AttackStrategy::partial(0.0, 0.0, 1.0, 0.6));
  const Adversary comp(
      AttackStrategy::measure(AttackStrategy::Kind::measure_computational));
  CHECK(as_comp.round_guess_prob(QubitBasis::computational) ==
        doctest::Approx(comp.round_guess_prob(QubitBasis::computational))
            .epsilon(1e-9));
  CHECK(as_comp.round_guess_prob(QubitBasis::hadamard) ==
        doctest::Approx(comp.round_guess_prob(QubitBasis::hadamard))
            .epsilon(1e-9));
}

TEST_CASE("adversary finish empirically matches the analytic rate") {
  CounterRng rng(1234);
  const AttackStrategy strategy = AttackStrategy::store(0.9);
  const Adversary adv(strategy);
  std::vector<StoredRound> rounds;
  for (int i = 0; i < 10000; ++i) {
    StoredRound round;
    round.x = rng.next_bit();
    round.theta =
        rng.next_bit() ? QubitBasis::hadamard : QubitBasis::computational;
    round.k = adv.attack(round.x, round.theta, rng).k;
    rounds.push_back(round);
  }
  const FinishStats stats = adversary_finish(strategy, rounds, rng);
  CHECK(stats.analytic_rate == doctest::Approx(0.95).epsilon(1e-12));
  const double sigma = std::sqrt(0.95 * 0.05 / 10000.0);
  CHECK(std::abs(stats.empirical_rate - 0.95) <= 3.0 * sigma);
}

TEST_CASE("simulate is deterministic and certifies as expected") {
  ProtocolParams p = small_params();
  p.n = 512;
  p.channel = {0.02, 0.2};
  p.storage_r = 0.5;
  const SimReport a = simulate(p, AttackStrategy::store(0.5), 50);
  const SimReport b = simulate(p, AttackStrategy::store(0.5), 50);
  CHECK(a.correctness_rate == b.correctness_rate);
  CHECK(a.abort_rate == b.abort_rate);
  CHECK(a.per_bit_guess_empirical == b.per_bit_guess_empirical);
  CHECK(a.per_bit_guess_analytic == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(a.ell_certified == -1);  // 512 rounds cannot certify at eps = 0.1

  // Storing beats measuring at r = 0.9.
  ProtocolParams q = small_params();
  q.n = 128;
  q.storage_r = 0.9;
  const SimReport stored = simulate(q, AttackStrategy::store(0.9), 20);
  const SimReport measured = simulate(
      q, AttackStrategy::measure(AttackStrategy::Kind::measure_computational),
      20);
  CHECK(stored.per_bit_guess_analytic == doctest::Approx(0.95));
  CHECK(measured.per_bit_guess_analytic == doctest::Approx(0.75));
}
