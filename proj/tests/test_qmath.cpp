#include <cmath>

#include "doctest.h"
#include "noisyot/qmath.hpp"
#include "noisyot/rng.hpp"
#include "noisyot/verify.hpp"

using namespace noisyot;

TEST_CASE("bb84 states") {
  const DensityMatrix zero_plus = bb84_state(0, QubitBasis::computational);
  CHECK(zero_plus.mat().at(0, 0).real() == doctest::Approx(1.0));
  CHECK(zero_plus.mat().at(1, 1).real() == doctest::Approx(0.0));

  const DensityMatrix one_plus = bb84_state(1, QubitBasis::computational);
  CHECK(one_plus.mat().at(1, 1).real() == doctest::Approx(1.0));

  // (|0> - |1>)/sqrt(2): all entries +-1/2.
  const DensityMatrix one_times = bb84_state(1, QubitBasis::hadamard);
  CHECK(one_times.mat().at(0, 0).real() == doctest::Approx(0.5));
  CHECK(one_times.mat().at(0, 1).real() == doctest::Approx(-0.5));
  CHECK(one_times.mat().at(1, 0).real() == doctest::Approx(-0.5));
  CHECK(one_times.mat().at(1, 1).real() == doctest::Approx(0.5));

  CHECK_THROWS_AS(bb84_state(2, QubitBasis::computational), parameter_error);
}

TEST_CASE("depolarize endpoints and the derived point") {
  const DensityMatrix zero = bb84_state(0, QubitBasis::computational);
  const DensityMatrix same = depolarize(zero, 1.0);
  CHECK(trace_distance(zero, same) == doctest::Approx(0.0).epsilon(1e-12));

  const DensityMatrix mixed = depolarize(zero, 0.0);
  CHECK(mixed.mat().at(0, 0).real() == doctest::Approx(0.5));

  const DensityMatrix d = depolarize(zero, 0.6);
  CHECK(d.mat().at(0, 0).real() == doctest::Approx(0.8));
  CHECK(d.mat().at(1, 1).real() == doctest::Approx(0.2));

  CHECK_THROWS_AS(depolarize(zero, 1.5), parameter_error);
}

TEST_CASE("depolarize is affine and commutes with Pauli conjugation") {
  CounterRng rng(7);
  for (int i = 0; i < 50; ++i) {
    const DensityMatrix rho = verify::random_mixed_state(2, rng);
    const DensityMatrix sigma = verify::random_mixed_state(2, rng);
    const double a = rng.next_double();
    const double r = rng.next_double();

    CMat mix = rho.mat();
    mix *= a;
    CMat other = sigma.mat();
    other *= (1.0 - a);
    mix += other;
    CMat lhs = depolarize_raw(mix, r);

    CMat rhs = depolarize_raw(rho.mat(), r);
    rhs *= a;
    CMat rhs2 = depolarize_raw(sigma.mat(), r);
    rhs2 *= (1.0 - a);
    rhs += rhs2;
    CHECK((lhs - rhs).frobenius() <= 1e-12);

    CMat x(2);
    x.at(0, 1) = 1.0;
    x.at(1, 0) = 1.0;
    const CMat conj_then = depolarize_raw(x * rho.mat() * x, r);
    const CMat then_conj = x * depolarize_raw(rho.mat(), r) * x;
    CHECK((conj_then - then_conj).frobenius() <= 1e-12);
  }
}

TEST_CASE("constructed states satisfy the invariants") {
  CounterRng rng(11);
  for (int i = 0; i < 100; ++i) {
    const int dim = 2 + static_cast<int>(rng.next_below(4));
    const DensityMatrix rho = verify::random_mixed_state(dim, rng);
    CHECK(rho.mat().max_hermiticity_defect() <= 1e-12);
    CHECK(std::abs(rho.mat().trace().real() - 1.0) <= 1e-10);
    CHECK(hermitian_eigenvalues(rho.mat()).front() >= -1e-10);
  }
}

TEST_CASE("rejects invalid density matrices") {
  CMat bad = CMat::identity(2);  // trace 2
  CHECK_THROWS_AS(DensityMatrix{bad}, validation_error);

  CMat neg(2);
  neg.at(0, 0) = 1.5;
  neg.at(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{neg}, validation_error);

  CMat skew(2);
  skew.at(0, 0) = 0.5;
  skew.at(1, 1) = 0.5;
  skew.at(0, 1) = cplx(0.1, 0.0);
  skew.at(1, 0) = cplx(0.3, 0.0);
  CHECK_THROWS_AS(DensityMatrix{skew}, validation_error);
}

TEST_CASE("von Neumann entropy") {
  CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(2)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(bb84_state(0, QubitBasis::hadamard)) ==
        doctest::Approx(0.0).epsilon(1e-10));
  CHECK(von_neumann_entropy(DensityMatrix::diagonal({0.8, 0.2})) ==
        doctest::Approx(0.721928).epsilon(1e-6));
}

TEST_CASE("trace distance") {
  const DensityMatrix zero = bb84_state(0, QubitBasis::computational);
  const DensityMatrix one = bb84_state(1, QubitBasis::computational);
  CHECK(trace_distance(zero, zero) == doctest::Approx(0.0));
  CHECK(trace_distance(zero, one) == doctest::Approx(1.0));
  for (double r : {0.0, 0.3, 0.77, 1.0})
    CHECK(trace_distance(depolarize(zero, r), depolarize(one, r)) ==
          doctest::Approx(r).epsilon(1e-12));

  CounterRng rng(3);
  for (int i = 0; i < 30; ++i) {
    const DensityMatrix a = verify::random_mixed_state(3, rng);
    const DensityMatrix b = verify::random_mixed_state(3, rng);
    const DensityMatrix c = verify::random_mixed_state(3, rng);
    const double ab = trace_distance(a, b);
    CHECK(ab == doctest::Approx(trace_distance(b, a)).epsilon(1e-12));
    CHECK(ab <= trace_distance(a, c) + trace_distance(c, b) + 1e-12);
    CHECK(ab >= -1e-12);
    CHECK(ab <= 1.0 + 1e-12);
  }
}

TEST_CASE("c-distance") {
  const DensityMatrix zero = bb84_state(0, QubitBasis::computational);
  const DensityMatrix one = bb84_state(1, QubitBasis::computational);
  const DensityMatrix zero_x = bb84_state(0, QubitBasis::hadamard);
  CHECK(c_distance(zero, zero) == doctest::Approx(0.0).epsilon(1e-7));
  CHECK(c_distance(zero, one) == doctest::Approx(1.0));
  CHECK(c_distance(zero, zero_x) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));

  // Equals trace distance on pure pairs.
  CounterRng rng(5);
  for (int i = 0; i < 50; ++i) {
    const DensityMatrix a = verify::random_pure_qubit(rng);
    const DensityMatrix b = verify::random_pure_qubit(rng);
    CHECK(std::abs(c_distance(a, b) - trace_distance(a, b)) <= 1e-10);
  }
}

TEST_CASE("binary entropy and its inverse") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(0.11) == doctest::Approx(0.5).epsilon(5e-4));
  CHECK(binary_entropy_inv(0.5, EntropyBranch::upper) ==
        doctest::Approx(0.889972).epsilon(1e-6));
  CHECK(binary_entropy_inv(0.5, EntropyBranch::lower) ==
        doctest::Approx(0.110028).epsilon(1e-6));
  CHECK_THROWS_AS(binary_entropy(1.2), parameter_error);
  CHECK_THROWS_AS(binary_entropy_inv(-0.1, EntropyBranch::lower),
                  parameter_error);

  CounterRng rng(9);
  for (int i = 0; i < 200; ++i) {
    const double p_low = rng.next_double() * 0.4995;
    CHECK(binary_entropy_inv(binary_entropy(p_low), EntropyBranch::lower) ==
          doctest::Approx(p_low).epsilon(1e-9));
    const double p_hi = 0.5005 + rng.next_double() * 0.4995;
    CHECK(binary_entropy_inv(binary_entropy(p_hi), EntropyBranch::upper) ==
          doctest::Approx(p_hi).epsilon(1e-9));
  }
}

TEST_CASE("jacobi eigensystem reconstructs the matrix") {
  CounterRng rng(13);
  for (int i = 0; i < 20; ++i) {
    const int dim = 2 + static_cast<int>(rng.next_below(7));
    const DensityMatrix rho = verify::random_mixed_state(dim, rng);
    const EigSys es = hermitian_eig(rho.mat());
    CMat rebuilt(dim);
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        cplx acc = 0.0;
        for (int k = 0; k < dim; ++k)
          acc += es.vectors.at(a, k) * es.values[k] *
                 std::conj(es.vectors.at(b, k));
        rebuilt.at(a, b) = acc;
      }
    CHECK((rebuilt - rho.mat()).frobenius() <= 1e-11);
  }
}
