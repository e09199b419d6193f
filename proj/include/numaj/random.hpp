#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "numaj/linalg.hpp"

namespace numaj {

// Deterministic generator with a fully specified output stream (splitmix64
// advance + Box-Muller normals), so seeded runs are identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // standard normal
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im);
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Stream splitting: one user seed fans out into independent per-sample seeds,
// so sample i is the same regardless of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  Rng r(seed ^ (0x517CC1B727220A95ULL * (stream + 1)));
  std::uint64_t s = r.next_u64();
  return s ^ (0xD1B54A32D192ED03ULL * (index + 1));
}

inline std::vector<Complex> random_state_vector(std::size_t d, Rng& rng) {
  std::vector<Complex> v(d);
  double norm2 = 0.0;
  for (Complex& z : v) {
    z = rng.complex_gaussian();
    norm2 += std::norm(z);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (Complex& z : v) z *= inv;
  return v;
}

// |psi><psi| for a Gaussian-normalized pure state.
inline ComplexMatrix random_pure_state(std::size_t d, Rng& rng) {
  const std::vector<Complex> psi = random_state_vector(d, rng);
  ComplexMatrix rho(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) rho(i, j) = psi[i] * std::conj(psi[j]);
  return rho;
}

// Hilbert-Schmidt ensemble: G G^dag normalized to unit trace.
inline ComplexMatrix random_density_matrix(std::size_t d, Rng& rng) {
  ComplexMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = rng.complex_gaussian();
  ComplexMatrix rho(d, d);
  double tr = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < d; ++k) s += g(i, k) * std::conj(g(j, k));
      rho(i, j) = (i == j) ? Complex(s.real(), 0.0) : s;
      rho(j, i) = std::conj(rho(i, j));
      if (i == j) tr += s.real();
    }
  const Complex inv(1.0 / tr, 0.0);
  return inv * rho;
}

// Haar unitary: modified Gram-Schmidt of a Gaussian matrix with one
// re-orthogonalization pass. Column norms enter as positive reals, which is
// the R-diagonal-positive phase convention.
inline ComplexMatrix haar_unitary(std::size_t d, Rng& rng) {
  std::vector<std::vector<Complex>> cols(d, std::vector<Complex>(d));
  for (auto& c : cols)
    for (Complex& z : c) z = rng.complex_gaussian();

  for (std::size_t j = 0; j < d; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        Complex proj = 0.0;
        for (std::size_t k = 0; k < d; ++k) proj += std::conj(cols[i][k]) * cols[j][k];
        for (std::size_t k = 0; k < d; ++k) cols[j][k] -= proj * cols[i][k];
      }
    }
    double norm2 = 0.0;
    for (const Complex& z : cols[j]) norm2 += std::norm(z);
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& z : cols[j]) z *= inv;
  }

  ComplexMatrix u(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) u(i, j) = cols[j][i];
  return u;
}

}  // namespace numaj
