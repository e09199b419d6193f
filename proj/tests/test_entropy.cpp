#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"

#include "numaj/entropy.hpp"
#include "numaj/majorization.hpp"
#include "numaj/random.hpp"

using numaj::Efficiency;
using numaj::ProbVector;

namespace {

ProbVector random_prob_vector(std::size_t d, numaj::Rng& rng) {
  std::vector<double> x(d);
  double sum = 0.0;
  for (double& v : x) {
    v = -std::log(1.0 - rng.uniform());
    sum += v;
  }
  for (double& v : x) v /= sum;
  return ProbVector(x);
}

// One T-transform: moves mass between two entries, producing a vector that is
// majorized by the input.
std::vector<double> robin_hood(std::vector<double> p, numaj::Rng& rng) {
  const std::size_t i = rng.next_u64() % p.size();
  std::size_t j = rng.next_u64() % p.size();
  if (i == j) j = (j + 1) % p.size();
  const double lambda = 0.5 + 0.5 * rng.uniform();
  const double pi = p[i], pj = p[j];
  p[i] = lambda * pi + (1.0 - lambda) * pj;
  p[j] = lambda * pj + (1.0 - lambda) * pi;
  return p;
}

}  // namespace

TEST_CASE("entropy: ProbVector validation") {
  CHECK_THROWS_AS(ProbVector({0.5, 0.4}), numaj::argument_error);
  CHECK_THROWS_AS(ProbVector({1.2, -0.2}), numaj::argument_error);
  const ProbVector clamped({1.0, -1e-13});  // tiny negative is clamped
  CHECK(clamped[1] == 0.0);
  CHECK_THROWS_AS(Efficiency(1.5), numaj::argument_error);
  CHECK_THROWS_AS(Efficiency(-0.1), numaj::argument_error);
}

TEST_CASE("entropy: shannon") {
  CHECK(numaj::shannon(ProbVector({1.0, 0.0, 0.0})) == 0.0);
  CHECK(numaj::shannon(ProbVector({1.0 / 3, 1.0 / 3, 1.0 / 3})) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(numaj::shannon(ProbVector({0.8213, 0.1674, 0.0113})) ==
        doctest::Approx(0.5114).epsilon(1e-3));
}

TEST_CASE("entropy: renyi") {
  const ProbVector uniform({1.0 / 3, 1.0 / 3, 1.0 / 3});
  for (double a : {0.2, 0.5, 0.999, 1.0, 1.5, 3.0})
    CHECK(numaj::renyi(uniform, a) == doctest::Approx(std::log(3.0)).epsilon(1e-10));

  CHECK(numaj::renyi(ProbVector({0.5, 0.5}), 2.0) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));

  numaj::Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    const ProbVector p = random_prob_vector(3, rng);
    double prev = std::numeric_limits<double>::infinity();
    for (double a = 0.1; a <= 5.0; a += 0.1) {
      const double r = numaj::renyi(p, a);
      CHECK(r <= prev + 1e-10);
      prev = r;
    }
    // alpha -> 1 crossover and continuity just outside the window
    const double h = numaj::shannon(p);
    CHECK(std::abs(numaj::renyi(p, 1.0 + 1e-7) - h) <= 1e-5);
    CHECK(std::abs(numaj::renyi(p, 1.0 - 1e-7) - h) <= 1e-5);
    CHECK(std::abs(numaj::renyi(p, 1.0 + 1e-5) - h) <= 1e-5);
    CHECK(std::abs(numaj::renyi(p, 1.0 - 1e-5) - h) <= 1e-5);
  }

  CHECK_THROWS_AS(numaj::renyi(uniform, 0.0), numaj::argument_error);
  CHECK_THROWS_AS(numaj::renyi(uniform, -1.0), numaj::argument_error);

  CHECK(numaj::max_entropy(ProbVector({0.5, 0.5, 0.0})) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("entropy: tsallis") {
  CHECK(numaj::tsallis(ProbVector({0.5, 0.5}), 2.0) == doctest::Approx(0.5).epsilon(1e-12));
  for (double a : {0.5, 1.0, 2.0, 3.0})
    CHECK(numaj::tsallis(ProbVector({1.0, 0.0}), a) == doctest::Approx(0.0).epsilon(1e-15));

  // relation to the Renyi family
  numaj::Rng rng(22);
  for (int t = 0; t < 20; ++t) {
    const ProbVector p = random_prob_vector(4, rng);
    for (double a : {0.3, 0.7, 2.0, 3.5}) {
      const double via_renyi = std::expm1((1.0 - a) * numaj::renyi(p, a)) / (1.0 - a);
      CHECK(numaj::tsallis(p, a) == doctest::Approx(via_renyi).epsilon(1e-10));
    }
  }
}

TEST_CASE("entropy: alpha_log") {
  for (double a : {0.3, 1.0, 2.0, 5.0})
    CHECK(numaj::alpha_log(1.0, a) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(numaj::alpha_log(2.0, 2.0) == doctest::Approx(0.5).epsilon(1e-12));
  for (double y : {0.2, 1.7, 9.0}) {
    CHECK(std::abs(numaj::alpha_log(y, 1.0 + 1e-9) - std::log(y)) < 1e-6);
    CHECK(std::abs(numaj::alpha_log(y, 1.0 - 1e-9) - std::log(y)) < 1e-6);
  }
  CHECK_THROWS_AS(numaj::alpha_log(0.0, 2.0), numaj::domain_error);
  CHECK_THROWS_AS(numaj::alpha_log(-1.0, 2.0), numaj::domain_error);
}

TEST_CASE("entropy: binary_tsallis") {
  CHECK(numaj::binary_tsallis(Efficiency(0.5), 1.0) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(numaj::binary_tsallis(Efficiency(0.0), 2.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(numaj::binary_tsallis(Efficiency(1.0), 0.7) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(numaj::binary_tsallis(Efficiency(0.8), 2.0) == doctest::Approx(0.32).epsilon(1e-12));
}

TEST_CASE("entropy: distortion model") {
  numaj::Rng rng(23);
  const ProbVector p = random_prob_vector(3, rng);

  const ProbVector perfect = numaj::distort(p, Efficiency(1.0));
  REQUIRE(perfect.size() == 4);
  CHECK(perfect[3] == 0.0);
  for (std::size_t i = 0; i < 3; ++i) CHECK(perfect[i] == doctest::Approx(p[i]).epsilon(1e-15));

  const ProbVector dead = numaj::distort(p, Efficiency(0.0));
  for (std::size_t i = 0; i < 3; ++i) CHECK(dead[i] == 0.0);
  CHECK(dead[3] == 1.0);

  for (int t = 0; t < 30; ++t) {
    const ProbVector q = random_prob_vector(3 + t % 3, rng);
    for (double k : {0.6, 0.75, 0.9}) {
      const Efficiency kappa(k);
      const ProbVector dq = numaj::distort(q, kappa);
      double mass = 0.0;
      for (double x : dq) mass += x;
      CHECK(std::abs(mass - 1.0) <= 1e-12);
      for (double a : {0.5, 1.0, 2.0}) {
        const double lhs = numaj::tsallis(dq, a);
        const double rhs =
            std::pow(k, a) * numaj::tsallis(q, a) + numaj::binary_tsallis(kappa, a);
        CHECK(std::abs(lhs - rhs) <= 1e-12);
      }
      // Shannon case
      const double lhs1 = numaj::shannon(dq);
      const double rhs1 = k * numaj::shannon(q) + numaj::binary_tsallis(kappa, 1.0);
      CHECK(std::abs(lhs1 - rhs1) <= 1e-12);
    }
  }
}

TEST_CASE("entropy: permutation invariance and Schur concavity") {
  numaj::Rng rng(24);
  for (int t = 0; t < 30; ++t) {
    const ProbVector p = random_prob_vector(4, rng);
    std::vector<double> shuffled = p.values();
    std::rotate(shuffled.begin(), shuffled.begin() + 1, shuffled.end());
    std::swap(shuffled[0], shuffled[2]);
    const ProbVector ps(shuffled);
    for (double a : {0.5, 1.0, 2.0, 3.0}) {
      CHECK(std::abs(numaj::renyi(p, a) - numaj::renyi(ps, a)) <= 1e-12);
      CHECK(std::abs(numaj::tsallis(p, a) - numaj::tsallis(ps, a)) <= 1e-12);
    }

    std::vector<double> q = p.values();
    for (int k = 0; k < 3; ++k) q = robin_hood(q, rng);
    const ProbVector pq(q);
    CHECK(numaj::majorizes(p, pq));  // q is an average of p, so p majorizes it
    for (double a : {0.5, 1.0, 2.0, 3.0}) {
      CHECK(numaj::renyi(pq, a) >= numaj::renyi(p, a) - 1e-12);
      CHECK(numaj::tsallis(pq, a) >= numaj::tsallis(p, a) - 1e-12);
    }
  }
}
