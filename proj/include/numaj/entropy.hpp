#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "numaj/errors.hpp"

namespace numaj {

// Entries below this are treated as exact zeros in entropy sums, removing
// spurious NaNs at distribution boundaries.
inline constexpr double kEntropyZero = 1e-15;

// The alpha -> 1 crossover: inside this window both entropy families
// evaluate as Shannon; outside, stable expm1/log1p forms are used.
inline constexpr double kAlphaOneWindow = 1e-6;

// Nonnegative vector summing to 1 (within 1e-9); entries in [-1e-12, 0) are
// clamped to 0 at construction.
class ProbVector {
 public:
  explicit ProbVector(std::vector<double> probs) : p_(std::move(probs)) {
    if (p_.empty()) throw argument_error("ProbVector: empty");
    double sum = 0.0;
    for (double& x : p_) {
      if (!std::isfinite(x)) throw argument_error("ProbVector: non-finite entry");
      if (x < 0.0) {
        if (x < -1e-12) throw argument_error("ProbVector: negative entry beyond tolerance");
        x = 0.0;
      }
      sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw argument_error("ProbVector: entries sum to " + std::to_string(sum) + ", expected 1");
  }

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  const std::vector<double>& values() const { return p_; }
  auto begin() const { return p_.begin(); }
  auto end() const { return p_.end(); }

 private:
  std::vector<double> p_;
};

// Detector efficiency in [0, 1].
struct Efficiency {
  double kappa;
  explicit Efficiency(double k) : kappa(k) {
    if (!(k >= 0.0 && k <= 1.0))
      throw argument_error("Efficiency: kappa must lie in [0, 1]");
  }
};

namespace detail {

// sum_i p_i^alpha - 1, computed as sum_i p_i * expm1((alpha-1) ln p_i) so the
// value stays accurate when alpha is near 1.
inline double power_sum_minus_one(const std::vector<double>& p, double alpha) {
  double t = 0.0;
  for (double x : p)
    if (x > kEntropyZero) t += x * std::expm1((alpha - 1.0) * std::log(x));
  return t;
}

inline double shannon_raw(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p)
    if (x > kEntropyZero) h -= x * std::log(x);
  return h;
}

}  // namespace detail

// Shannon entropy in nats, 0 ln 0 := 0.
inline double shannon(const ProbVector& p) { return detail::shannon_raw(p.values()); }

// Renyi alpha-entropy; Shannon at the alpha -> 1 crossover.
inline double renyi(const ProbVector& p, double alpha) {
  if (!(alpha > 0.0)) throw argument_error("renyi: alpha must be positive");
  if (std::abs(alpha - 1.0) < kAlphaOneWindow) return shannon(p);
  const double t = detail::power_sum_minus_one(p.values(), alpha);
  return std::log1p(t) / (1.0 - alpha);
}

// Tsallis alpha-entropy; Shannon at the alpha -> 1 crossover.
inline double tsallis(const ProbVector& p, double alpha) {
  if (!(alpha > 0.0)) throw argument_error("tsallis: alpha must be positive");
  if (std::abs(alpha - 1.0) < kAlphaOneWindow) return shannon(p);
  return detail::power_sum_minus_one(p.values(), alpha) / (1.0 - alpha);
}

// Max-entropy: logarithm of the number of nonzero entries (the alpha -> 0
// limit of the Renyi family).
inline double max_entropy(const ProbVector& p) {
  std::size_t n = 0;
  for (double x : p)
    if (x > 1e-12) ++n;
  return std::log(static_cast<double>(n));
}

// alpha-logarithm of positive y; natural log at the alpha -> 1 crossover.
inline double alpha_log(double y, double alpha) {
  if (!(y > 0.0)) throw domain_error("alpha_log: y must be positive");
  if (std::abs(alpha - 1.0) < kAlphaOneWindow) return std::log(y);
  return std::expm1((1.0 - alpha) * std::log(y)) / (1.0 - alpha);
}

// Binary Tsallis entropy of (kappa, 1-kappa); zero at both endpoints.
inline double binary_tsallis(Efficiency kappa, double alpha) {
  if (!(alpha > 0.0)) throw argument_error("binary_tsallis: alpha must be positive");
  const double k = kappa.kappa;
  std::vector<double> two{k, 1.0 - k};
  if (std::abs(alpha - 1.0) < kAlphaOneWindow) return detail::shannon_raw(two);
  return detail::power_sum_minus_one(two, alpha) / (1.0 - alpha);
}

// Distorted distribution (kappa p_1, ..., kappa p_n, 1-kappa); the appended
// entry is the no-click probability.
inline ProbVector distort(const ProbVector& p, Efficiency kappa) {
  std::vector<double> out;
  out.reserve(p.size() + 1);
  for (double x : p) out.push_back(kappa.kappa * x);
  out.push_back(1.0 - kappa.kappa);
  return ProbVector(std::move(out));
}

}  // namespace numaj
