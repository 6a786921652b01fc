#include <cmath>

#include "doctest.h"
#include "noisyot/bounds.hpp"
#include "noisyot/rng.hpp"
#include "noisyot/uncertainty.hpp"

using namespace noisyot;

TEST_CASE("ell_ideal frozen target and edge behavior") {
  const SecurityReport rep = ell_ideal(1000000, 1e-3, 0.5);
  CHECK(rep.delta == doctest::Approx(0.051139).epsilon(1e-5));
  CHECK(rep.ell_max == 112205);
  CHECK(rep.secure);

  // Zero entropy margin: t == delta.
  const SecurityReport zero = ell_ideal(1000000, 1e-3, rep.delta);
  CHECK_FALSE(zero.secure);
  CHECK(zero.ell_max == -1);

  // Doubling n increases the bound in the feasible region.
  const SecurityReport doubled = ell_ideal(2000000, 1e-3, 0.5);
  CHECK(doubled.ell_max > rep.ell_max);

  CHECK_THROWS_AS(ell_ideal(40, 1e-3, 0.5), parameter_error);  // floor is 66
}

TEST_CASE("ell_robust frozen target and monotonicity") {
  const double t = binary_entropy(0.95);
  const SecurityReport rep = ell_robust(1000000, 1e-3, t, 0.02, 0.5);
  CHECK(rep.delta == doctest::Approx(0.072395).epsilon(1e-5));
  CHECK(rep.ell_max == 8560);

  // h(p_error) >= t kills the bound for any n.
  const SecurityReport dead = ell_robust(1000000, 1e-3, t, 0.06, 0.5);
  CHECK(binary_entropy(0.06) > t);
  CHECK_FALSE(dead.secure);

  // More erasures, shorter string.
  const SecurityReport less = ell_robust(1000000, 1e-3, t, 0.02, 0.6);
  const SecurityReport more = ell_robust(1000000, 1e-3, t, 0.02, 0.3);
  CHECK(less.ell_max < rep.ell_max);
  CHECK(more.ell_max > rep.ell_max);

  CHECK_THROWS_AS(ell_robust(1000000, 0.3, t, 0.02, 0.8), parameter_error);
}

TEST_CASE("robust reduces to ideal at zero channel noise") {
  // With p_error = p_erase = 0 the two formulas share their core; replacing
  // the robust delta by the ideal delta must reproduce ell_ideal.
  CounterRng rng(55);
  for (int i = 0; i < 20; ++i) {
    const long long n = 100000 + static_cast<long long>(rng.next_below(900000));
    const double eps = 1e-4 + rng.next_double() * 1e-2;
    const double t = 0.2 + 0.6 * rng.next_double();
    const SecurityReport ideal = ell_ideal(n, eps, t);
    const SecurityReport robust = ell_robust(n, eps, t, 0.0, 0.0);
    // The robust delta uses (1 - eps) n; rebuild the bound with the ideal
    // delta and compare the real-valued cores.
    const double core_robust =
        robust.margin_bits + (robust.delta - ideal.delta) * n / 4.0 +
        eps * n / 2.0;
    CHECK(core_robust == doctest::Approx(ideal.margin_bits).epsilon(1e-9));
  }
}

TEST_CASE("monotonicity of the calculators in n and t") {
  CounterRng rng(77);
  for (int i = 0; i < 30; ++i) {
    const long long n = 200000 + static_cast<long long>(rng.next_below(500000));
    const double eps = 1e-3;
    const double t = 0.3 + 0.5 * rng.next_double();
    const double pe = rng.next_double() * 0.05;
    const double pz = rng.next_double() * 0.4;
    const SecurityReport base = ell_robust(n, eps, t, pe, pz);
    CHECK(ell_robust(n + 50000, eps, t, pe, pz).margin_bits >=
          base.margin_bits);
    CHECK(ell_robust(n, eps, std::min(1.0, t + 0.05), pe, pz).margin_bits >=
          base.margin_bits);
    CHECK(ell_robust(n, eps, t, std::min(0.49, pe + 0.02), pz).margin_bits <=
          base.margin_bits);
    CHECK(ell_robust(n, eps, t, pe, std::min(0.89, pz + 0.1)).margin_bits <=
          base.margin_bits);
  }
}

TEST_CASE("secure predicate thresholds") {
  CHECK_FALSE(secure_predicate(0.5, 0.12).secure);
  CHECK(secure_predicate(0.5, 0.10).secure);
  CHECK(secure_predicate(0.9, 0.02).secure);
  CHECK(secure_predicate(0.9, 0.02).regime == Regime::store_limited);
  CHECK(secure_predicate(0.5, 0.10).regime == Regime::measure_limited);

  // Monotone in both arguments.
  CHECK(secure_predicate(0.95, 0.02).secure);
  CounterRng rng(88);
  for (int i = 0; i < 50; ++i) {
    const double r = rng.next_double();
    const double p = rng.next_double() * 0.49;
    if (secure_predicate(r, p).secure) {
      CHECK(secure_predicate(std::min(1.0, r + 0.05), p).secure);
      CHECK(secure_predicate(r, std::max(0.0, p - 0.05)).secure);
    }
  }

  // Never secure when h(p) reaches the uncertainty bound.
  for (double r : {0.1, 0.5, 0.85, 0.95}) {
    const double t = t_closed_form(r);
    const double p_at =
        binary_entropy_inv(std::min(1.0, t), EntropyBranch::lower);
    if (p_at < 0.5) CHECK_FALSE(secure_predicate(r, std::min(0.499, p_at + 1e-6)).secure);
  }
}

TEST_CASE("qber threshold") {
  const double q = qber_threshold();
  CHECK(q == doctest::Approx(0.1100).epsilon(5e-3));
  CHECK(binary_entropy(q) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(secure_predicate(0.3, q - 1e-4).secure);
  CHECK_FALSE(secure_predicate(0.3, q + 1e-4).secure);
}

TEST_CASE("identification security") {
  const IdentReport rep = ident_security(0.5, 80, 64, 10);
  CHECK(rep.eps_prime == doctest::Approx(0.125));
  CHECK(rep.exponent == doctest::Approx(8.0));
  CHECK(rep.secure);

  const IdentReport weak = ident_security(0.1, 10, 64, 10);
  CHECK(weak.exponent <= 0.0);
  CHECK(weak.eps_prime >= 0.5);
  CHECK_FALSE(weak.secure);

  CHECK(ident_security(0.5, 120, 64, 10).eps_prime < rep.eps_prime);
  CHECK_THROWS_AS(ident_security(0.5, 0, 64, 10), parameter_error);
}

TEST_CASE("abort interval") {
  const AbortInterval iv = abort_interval(1000, 0.3, 0.05);
  CHECK(iv.lo == 325);
  CHECK(iv.hi == 375);

  const AbortInterval point = abort_interval(1000, 0.3, 0.0);
  CHECK(point.lo == 350);
  CHECK(point.hi == 350);

  CHECK_THROWS_AS(abort_interval(1000, 0.9, 0.2), parameter_error);
}
