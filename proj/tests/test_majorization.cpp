#include <cmath>
#include <span>
#include <vector>

#include "doctest.h"

#include "numaj/bounds.hpp"
#include "numaj/majorization.hpp"
#include "numaj/mixing.hpp"
#include "numaj/random.hpp"
#include "numaj/verify.hpp"

using numaj::ComplexMatrix;
using numaj::OmegaVector;
using numaj::ProbVector;
using numaj::ZetaSequence;

namespace {

ComplexMatrix bfp_pmns() {
  return numaj::build_pmns(numaj::nufit_2018_11_normal().best_fit());
}

ComplexMatrix fourier2() {
  ComplexMatrix f(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  f(0, 0) = r;
  f(0, 1) = r;
  f(1, 0) = r;
  f(1, 1) = -r;
  return f;
}

}  // namespace

TEST_CASE("majorization: partial-sum ordering") {
  numaj::Rng rng(31);
  const ProbVector uniform({0.25, 0.25, 0.25, 0.25});
  for (int t = 0; t < 20; ++t) {
    std::vector<double> x(4);
    double s = 0.0;
    for (double& v : x) {
      v = -std::log(1.0 - rng.uniform());
      s += v;
    }
    for (double& v : x) v /= s;
    CHECK(numaj::majorizes(ProbVector(x), uniform));
  }

  CHECK(numaj::majorizes(ProbVector({1.0, 0.0}), ProbVector({0.5, 0.5})));
  CHECK_FALSE(numaj::majorizes(ProbVector({0.5, 0.5}), ProbVector({1.0, 0.0})));

  // omega < omega' at the best-fit point (published values)
  const ProbVector omega({0.8213, 0.1674, 0.0113});
  const ProbVector omega_prime({0.8293, 0.1595, 0.0112});
  CHECK(numaj::majorizes(omega_prime, omega));
  CHECK_FALSE(numaj::majorizes(omega, omega_prime));

  // zero-padding: unequal lengths compare after padding
  const std::vector<double> a{0.7, 0.3};
  const std::vector<double> b{0.5, 0.3, 0.2};
  CHECK(numaj::majorizes(std::span<const double>(a), std::span<const double>(b)));
}

TEST_CASE("majorization: zeta sequence of reference matrices") {
  const ZetaSequence id = numaj::zeta_sequence(ComplexMatrix::identity(3));
  CHECK(id[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(id[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(id[2] == doctest::Approx(1.0).epsilon(1e-12));

  const ZetaSequence bfp = numaj::zeta_sequence(bfp_pmns());
  CHECK(bfp[0] == doctest::Approx(0.8213).epsilon(1e-4));
  CHECK(bfp[1] == doctest::Approx(0.9887).epsilon(1e-4));
  CHECK(bfp[2] == doctest::Approx(1.0).epsilon(1e-10));

  const ZetaSequence f = numaj::zeta_sequence(fourier2());
  CHECK(f[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(f[1] == doctest::Approx(1.0).epsilon(1e-12));

  ComplexMatrix not_unitary = ComplexMatrix::identity(3);
  not_unitary(0, 0) = 0.5;
  CHECK_THROWS_AS(numaj::zeta_sequence(not_unitary), numaj::argument_error);
}

TEST_CASE("majorization: zeta sequence is nondecreasing with unit tail for any unitary") {
  numaj::Rng rng(32);
  for (std::size_t d = 2; d <= 5; ++d)
    for (int t = 0; t < 10; ++t) {
      const ZetaSequence z = numaj::zeta_sequence(numaj::haar_unitary(d, rng));
      for (std::size_t k = 1; k < d; ++k) CHECK(z[k] + 1e-12 >= z[k - 1]);
      CHECK(std::abs(z[d - 1] - 1.0) <= 1e-10);
      // zeta_1 equals the largest entry modulus
      CHECK(z[0] > 0.0);
    }
}

TEST_CASE("majorization: zeta_1 equals the largest modulus") {
  numaj::Rng rng(33);
  for (std::size_t d : {2u, 3u, 4u}) {
    for (int t = 0; t < 10; ++t) {
      const ComplexMatrix w = numaj::haar_unitary(d, rng);
      const ZetaSequence z = numaj::zeta_sequence(w);
      const auto [eta1, eta2] = numaj::eta_pair(w);
      CHECK(std::abs(z[0] - eta1) <= 1e-12);
    }
  }
}

TEST_CASE("majorization: zeta sequence agrees with the brute-force oracle") {
  numaj::Rng rng(34);
  for (std::size_t d : {2u, 3u, 4u}) {
    for (int t = 0; t < 12; ++t) {
      const ComplexMatrix w = numaj::haar_unitary(d, rng);
      const ZetaSequence z = numaj::zeta_sequence(w);
      const std::vector<double> zo = numaj::verify::brute_force_zeta(w);
      for (std::size_t k = 0; k < d; ++k) CHECK(std::abs(z[k] - zo[k]) <= 1e-9);
    }
  }
  const std::vector<double> zi = numaj::verify::brute_force_zeta(ComplexMatrix::identity(3));
  CHECK(zi == std::vector<double>{1.0, 1.0, 1.0});
}

TEST_CASE("majorization: omega construction") {
  const ZetaSequence bfp = numaj::zeta_sequence(bfp_pmns());

  const OmegaVector omega = numaj::omega_direct_sum(bfp);
  CHECK(omega.omega[0] == doctest::Approx(0.8213).epsilon(1e-3));
  CHECK(omega.omega[1] == doctest::Approx(0.1674).epsilon(1e-3));
  CHECK(omega.omega[2] == doctest::Approx(0.0113).epsilon(5e-3));

  const OmegaVector omega_prime = numaj::omega_tensor_product(bfp);
  CHECK(omega_prime.omega[0] == doctest::Approx(0.8293).epsilon(1e-3));
  CHECK(omega_prime.omega[1] == doctest::Approx(0.1595).epsilon(1e-3));
  CHECK(omega_prime.omega[2] == doctest::Approx(0.0112).epsilon(5e-3));

  const ZetaSequence ones(std::vector<double>{1.0, 1.0, 1.0});
  const OmegaVector oid = numaj::omega_direct_sum(ones);
  CHECK(oid.omega[0] == 1.0);
  CHECK(oid.omega[1] == 0.0);
  CHECK(oid.omega[2] == 0.0);
  const OmegaVector opid = numaj::omega_tensor_product(ones);
  CHECK(opid.omega[0] == 1.0);
  CHECK(opid.omega[1] == 0.0);

  const ZetaSequence zf = numaj::zeta_sequence(fourier2());
  const OmegaVector opf = numaj::omega_tensor_product(zf);
  const double xi1 = 0.25 * (1.0 + 1.0 / std::sqrt(2.0)) * (1.0 + 1.0 / std::sqrt(2.0));
  CHECK(opf.omega[0] == doctest::Approx(xi1).epsilon(1e-12));
  CHECK(opf.omega[1] == doctest::Approx(1.0 - xi1).epsilon(1e-12));

  CHECK_THROWS_AS(ZetaSequence(std::vector<double>{0.9, 0.5, 1.0}), numaj::invariant_error);
  CHECK_THROWS_AS(ZetaSequence(std::vector<double>{0.5, 0.9, 0.95}), numaj::invariant_error);
}

TEST_CASE("majorization: direct-sum relation") {
  // point masses on matching basis vectors of the identity: equality case
  const ProbVector point({1.0, 0.0, 0.0});
  const ZetaSequence zid = numaj::zeta_sequence(ComplexMatrix::identity(3));
  const OmegaVector oid = numaj::omega_direct_sum(zid);
  CHECK(numaj::verify_direct_sum_relation(point, point, oid));

  const ComplexMatrix w = bfp_pmns();
  const numaj::BasisPair pair(w);
  const OmegaVector omega = numaj::omega_direct_sum(numaj::zeta_sequence(w));

  // uniform state probabilities against the best-fit omega
  const ProbVector uniform({1.0 / 3, 1.0 / 3, 1.0 / 3});
  CHECK(numaj::verify_direct_sum_relation(uniform, uniform, omega));

  numaj::Rng rng(35);
  for (int t = 0; t < 10000; ++t) {
    const ComplexMatrix rho = numaj::random_pure_state(3, rng);
    const auto [p, q] = pair.probs(rho);
    CHECK(numaj::verify_direct_sum_relation(p, q, omega));
  }

  CHECK_THROWS_AS(
      numaj::verify_direct_sum_relation(ProbVector({0.5, 0.5}), ProbVector({0.5, 0.5}), omega),
      numaj::dimension_error);
  const OmegaVector wrong_kind = numaj::omega_tensor_product(numaj::zeta_sequence(w));
  CHECK_THROWS_AS(numaj::verify_direct_sum_relation(uniform, uniform, wrong_kind),
                  numaj::argument_error);
}

TEST_CASE("majorization: tensor-product relation") {
  const ProbVector point({1.0, 0.0, 0.0});
  const ZetaSequence zid = numaj::zeta_sequence(ComplexMatrix::identity(3));
  CHECK(numaj::verify_tensor_product_relation(point, point, numaj::omega_tensor_product(zid)));

  const ComplexMatrix w = bfp_pmns();
  const numaj::BasisPair pair(w);
  const OmegaVector omega_prime = numaj::omega_tensor_product(numaj::zeta_sequence(w));

  numaj::Rng rng(36);
  for (int t = 0; t < 10000; ++t) {
    const ComplexMatrix rho = numaj::random_density_matrix(3, rng);
    const auto [p, q] = pair.probs(rho);
    CHECK(numaj::verify_tensor_product_relation(p, q, omega_prime));
  }

  // a non-reference unitary in d = 4
  for (int t = 0; t < 2000; ++t) {
    const ComplexMatrix u4 = numaj::haar_unitary(4, rng);
    const numaj::BasisPair pair4(u4);
    const OmegaVector op4 = numaj::omega_tensor_product(numaj::zeta_sequence(u4));
    const ComplexMatrix rho =
        (t % 2 == 0) ? numaj::random_density_matrix(4, rng) : numaj::random_pure_state(4, rng);
    const auto [p, q] = pair4.probs(rho);
    CHECK(numaj::verify_tensor_product_relation(p, q, op4));
  }
}

TEST_CASE("majorization: omega is always majorized by omega_prime") {
  numaj::Rng rng(37);
  for (std::size_t d : {2u, 3u, 4u, 5u}) {
    for (int t = 0; t < 10; ++t) {
      const ZetaSequence z = numaj::zeta_sequence(numaj::haar_unitary(d, rng));
      const OmegaVector om = numaj::omega_direct_sum(z);
      const OmegaVector op = numaj::omega_tensor_product(z);
      CHECK(numaj::majorizes(op.omega, om.omega));
      for (double a : {0.3, 0.7, 1.0, 2.0, 3.0})
        CHECK(numaj::renyi(om.omega, a) >= numaj::renyi(op.omega, a) - 1e-10);
    }
  }
}
