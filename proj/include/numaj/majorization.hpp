#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "numaj/entropy.hpp"
#include "numaj/errors.hpp"
#include "numaj/linalg.hpp"

namespace numaj {

// Nondecreasing sequence zeta_1 <= ... <= zeta_d = 1 of maximal submatrix
// spectral norms. Only the first d values are kept; the tail is 1 by
// unitarity.
struct ZetaSequence {
  std::vector<double> zetas;

  explicit ZetaSequence(std::vector<double> z) : zetas(std::move(z)) {
    if (zetas.empty()) throw invariant_error("ZetaSequence: empty");
    if (!(zetas.front() > 0.0) || zetas.front() > 1.0 + 1e-12)
      throw invariant_error("ZetaSequence: zeta_1 must lie in (0, 1]");
    for (std::size_t k = 1; k < zetas.size(); ++k)
      if (zetas[k] + 1e-12 < zetas[k - 1])
        throw invariant_error("ZetaSequence: sequence must be nondecreasing");
    if (std::abs(zetas.back() - 1.0) > 1e-10)
      throw invariant_error("ZetaSequence: zeta_d must equal 1 within 1e-10");
  }

  std::size_t size() const { return zetas.size(); }
  double operator[](std::size_t k) const { return zetas[k]; }
};

enum class OmegaKind { direct_sum, tensor_product };

// Majorization vector built from consecutive differences of zeta (direct-sum
// type) or of xi_k = (1+zeta_k)^2/4 (tensor-product type).
struct OmegaVector {
  ProbVector omega;
  OmegaKind kind;
};

// Smallest partial-sum surplus of `a` over `b`, both sorted descending with
// the shorter zero-padded. Nonnegative (within tolerance) iff a majorizes b.
inline double majorization_margin(std::span<const double> a, std::span<const double> b) {
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  const std::size_t n = std::max(sa.size(), sb.size());
  sa.resize(n, 0.0);
  sb.resize(n, 0.0);
  std::stable_sort(sa.begin(), sa.end(), std::greater<double>());
  std::stable_sort(sb.begin(), sb.end(), std::greater<double>());
  double pa = 0.0, pb = 0.0;
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    pa += sa[i];
    pb += sb[i];
    margin = std::min(margin, pa - pb);
  }
  return margin;
}

// True iff every partial sum of `a` sorted descending dominates the matching
// partial sum of `b` sorted descending (minus tol), with equal totals. The
// shorter vector is zero-padded, so total mass need not be 1.
inline bool majorizes(std::span<const double> a, std::span<const double> b, double tol = 1e-9) {
  double ta = 0.0, tb = 0.0;
  for (double x : a) ta += x;
  for (double x : b) tb += x;
  return majorization_margin(a, b) >= -tol && std::abs(ta - tb) <= tol;
}

inline bool majorizes(const ProbVector& a, const ProbVector& b, double tol = 1e-9) {
  return majorizes(std::span<const double>(a.values()), std::span<const double>(b.values()), tol);
}

// zeta_k = max spectral norm over all submatrices with r + r' = k + 1,
// for k = 1..d, clamped at 1. Exhaustive enumeration; fine for d <= 5.
inline ZetaSequence zeta_sequence(const ComplexMatrix& w, double unitary_tol = 1e-10) {
  if (!w.square()) throw dimension_error("zeta_sequence: matrix must be square");
  if (!is_unitary(w, unitary_tol))
    throw argument_error("zeta_sequence: matrix is not unitary within tolerance");
  const std::size_t d = w.rows();
  std::vector<double> z(d, 0.0);
  for (std::size_t k = 1; k <= d; ++k) {
    double best = 0.0;
    for (const SubmatrixIndex& idx : enumerate_submatrices(d, k))
      best = std::max(best, spectral_norm(submatrix(w, idx)));
    z[k - 1] = std::min(best, 1.0);
  }
  return ZetaSequence(std::move(z));
}

namespace detail {

inline std::vector<double> nonnegative_differences(const std::vector<double>& levels,
                                                   const char* who) {
  std::vector<double> out(levels.size());
  double prev = 0.0;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    double diff = levels[k] - prev;
    if (diff < 0.0) {
      if (diff < -1e-12)
        throw invariant_error(std::string(who) + ": decreasing level sequence");
      diff = 0.0;
    }
    out[k] = diff;
    prev = levels[k];
  }
  return out;
}

}  // namespace detail

// omega = (zeta_1, zeta_2 - zeta_1, ..., zeta_d - zeta_{d-1})
inline OmegaVector omega_direct_sum(const ZetaSequence& z) {
  return OmegaVector{ProbVector(detail::nonnegative_differences(z.zetas, "omega_direct_sum")),
                     OmegaKind::direct_sum};
}

// omega' built from xi_k = (1+zeta_k)^2/4, with xi_d pinned to 1.
inline OmegaVector omega_tensor_product(const ZetaSequence& z) {
  std::vector<double> xi(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    const double u = 1.0 + z.zetas[k];
    xi[k] = 0.25 * u * u;
  }
  xi.back() = 1.0;
  return OmegaVector{ProbVector(detail::nonnegative_differences(xi, "omega_tensor_product")),
                     OmegaKind::tensor_product};
}

namespace detail {

inline std::pair<std::vector<double>, std::vector<double>> direct_sum_sides(
    const ProbVector& p, const ProbVector& q, const OmegaVector& omega) {
  if (omega.kind != OmegaKind::direct_sum)
    throw argument_error("direct-sum relation: omega must be direct_sum kind");
  if (p.size() != q.size() || p.size() != omega.omega.size())
    throw dimension_error("direct-sum relation: length mismatch");
  std::vector<double> lhs;
  lhs.reserve(p.size() + q.size());
  lhs.insert(lhs.end(), p.begin(), p.end());
  lhs.insert(lhs.end(), q.begin(), q.end());
  std::vector<double> rhs;
  rhs.reserve(omega.omega.size() + 1);
  rhs.push_back(1.0);
  rhs.insert(rhs.end(), omega.omega.begin(), omega.omega.end());
  return {std::move(rhs), std::move(lhs)};
}

inline std::pair<std::vector<double>, std::vector<double>> tensor_product_sides(
    const ProbVector& p, const ProbVector& q, const OmegaVector& omega_prime) {
  if (omega_prime.kind != OmegaKind::tensor_product)
    throw argument_error("tensor-product relation: omega must be tensor_product kind");
  if (p.size() != q.size() || p.size() != omega_prime.omega.size())
    throw dimension_error("tensor-product relation: length mismatch");
  std::vector<double> lhs;
  lhs.reserve(p.size() * q.size());
  for (double x : p)
    for (double y : q) lhs.push_back(x * y);
  return {omega_prime.omega.values(), std::move(lhs)};
}

}  // namespace detail

// p (+) q  <  {1} (+) omega   (direct-sum relation; both sides carry mass 2)
inline double direct_sum_margin(const ProbVector& p, const ProbVector& q,
                                const OmegaVector& omega) {
  const auto [rhs, lhs] = detail::direct_sum_sides(p, q, omega);
  return majorization_margin(std::span<const double>(rhs), std::span<const double>(lhs));
}

inline bool verify_direct_sum_relation(const ProbVector& p, const ProbVector& q,
                                       const OmegaVector& omega, double tol = 1e-9) {
  const auto [rhs, lhs] = detail::direct_sum_sides(p, q, omega);
  return majorizes(std::span<const double>(rhs), std::span<const double>(lhs), tol);
}

// p (x) q  <  omega'   (tensor-product relation; omega' zero-padded to d^2)
inline double tensor_product_margin(const ProbVector& p, const ProbVector& q,
                                    const OmegaVector& omega_prime) {
  const auto [rhs, lhs] = detail::tensor_product_sides(p, q, omega_prime);
  return majorization_margin(std::span<const double>(rhs), std::span<const double>(lhs));
}

inline bool verify_tensor_product_relation(const ProbVector& p, const ProbVector& q,
                                           const OmegaVector& omega_prime, double tol = 1e-9) {
  const auto [rhs, lhs] = detail::tensor_product_sides(p, q, omega_prime);
  return majorizes(std::span<const double>(rhs), std::span<const double>(lhs), tol);
}

}  // namespace numaj
