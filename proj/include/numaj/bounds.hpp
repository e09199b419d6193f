#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "numaj/entropy.hpp"
#include "numaj/errors.hpp"
#include "numaj/linalg.hpp"
#include "numaj/majorization.hpp"

namespace numaj {

// Density-matrix validation shared by the measurement and memory modules:
// Hermitian within herm_tol, unit trace within trace_tol, eigenvalues above
// -eig_tol.
inline bool is_density_matrix(const ComplexMatrix& rho, double herm_tol = 1e-10,
                              double trace_tol = 1e-9, double eig_tol = 1e-10) {
  if (!rho.square()) return false;
  for (std::size_t i = 0; i < rho.rows(); ++i)
    for (std::size_t j = i; j < rho.cols(); ++j)
      if (std::abs(rho(i, j) - std::conj(rho(j, i))) > herm_tol) return false;
  if (std::abs(rho.trace().real() - 1.0) > trace_tol || std::abs(rho.trace().imag()) > trace_tol)
    return false;
  for (double lambda : eig_hermitian(rho))
    if (lambda < -eig_tol) return false;
  return true;
}

// Born-rule probabilities <x_i| rho |x_i> for the orthonormal basis given as
// the columns of `basis`.
inline ProbVector measurement_probs(const ComplexMatrix& rho, const ComplexMatrix& basis) {
  if (!is_density_matrix(rho))
    throw argument_error("measurement_probs: rho is not a valid density matrix");
  if (!basis.square() || basis.rows() != rho.rows())
    throw dimension_error("measurement_probs: basis shape does not match rho");
  if (!is_unitary(basis, 1e-10))
    throw argument_error("measurement_probs: basis columns are not orthonormal");
  const std::size_t d = rho.rows();
  std::vector<double> p(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    Complex s = 0.0;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        s += std::conj(basis(a, i)) * rho(a, b) * basis(b, i);
    p[i] = s.real();
  }
  return ProbVector(std::move(p));
}

// Two orthonormal bases related by the unitary w_ij = <x_i|z_j>. With X taken
// as the computational basis, the Z vectors are the columns of w.
struct BasisPair {
  ComplexMatrix w;
  std::size_t d;

  explicit BasisPair(ComplexMatrix w_in, double tol = 1e-10) : w(std::move(w_in)), d(w.rows()) {
    if (!w.square()) throw dimension_error("BasisPair: matrix must be square");
    if (!is_unitary(w, tol)) throw argument_error("BasisPair: matrix is not unitary");
  }

  std::pair<ProbVector, ProbVector> probs(const ComplexMatrix& rho) const {
    return {measurement_probs(rho, ComplexMatrix::identity(d)), measurement_probs(rho, w)};
  }
};

// The two largest moduli over all entries, counted with multiplicity.
inline std::pair<double, double> eta_pair(const ComplexMatrix& w) {
  if (!w.square()) throw dimension_error("eta_pair: matrix must be square");
  if (!is_unitary(w, 1e-10)) throw argument_error("eta_pair: matrix is not unitary");
  double first = 0.0, second = 0.0;
  for (const Complex& z : w.entries()) {
    const double m = std::abs(z);
    if (m > first) {
      second = first;
      first = m;
    } else if (m > second) {
      second = m;
    }
  }
  return {first, second};
}

// -2 ln eta_1, in nats.
inline double maassen_uffink(double eta1) {
  if (!(eta1 > 0.0 && eta1 <= 1.0))
    throw argument_error("maassen_uffink: eta1 must lie in (0, 1]");
  return -2.0 * std::log(eta1);
}

// -2 ln eta_1 + (1 - eta_1) ln(eta_1 / eta_2); reduces to Maassen-Uffink when
// the two largest moduli coincide.
inline double coles_piani(double eta1, double eta2) {
  if (!(eta2 > 0.0 && eta2 <= eta1 && eta1 <= 1.0))
    throw argument_error("coles_piani: need 0 < eta2 <= eta1 <= 1");
  return maassen_uffink(eta1) + (1.0 - eta1) * std::log(eta1 / eta2);
}

// R_alpha(omega'), valid for all alpha > 0.
inline double renyi_product_bound(const OmegaVector& omega_prime, double alpha) {
  if (omega_prime.kind != OmegaKind::tensor_product)
    throw argument_error("renyi_product_bound: omega must be tensor_product kind");
  return renyi(omega_prime.omega, alpha);
}

// Direct-sum Renyi bound: R_alpha(omega) for alpha <= 1, and
// (2/(1-alpha)) ln(1/2 + 1/2 sum omega_i^alpha) for alpha > 1. Both branches
// meet at the Shannon value.
inline double renyi_sum_bound(const OmegaVector& omega, double alpha) {
  if (omega.kind != OmegaKind::direct_sum)
    throw argument_error("renyi_sum_bound: omega must be direct_sum kind");
  if (!(alpha > 0.0)) throw argument_error("renyi_sum_bound: alpha must be positive");
  if (std::abs(alpha - 1.0) < kAlphaOneWindow) return shannon(omega.omega);
  if (alpha < 1.0) return renyi(omega.omega, alpha);
  const double t = detail::power_sum_minus_one(omega.omega.values(), alpha);
  return 2.0 * std::log1p(0.5 * t) / (1.0 - alpha);
}

// H_alpha(omega), valid for all alpha > 0.
inline double tsallis_sum_bound(const OmegaVector& omega, double alpha) {
  if (omega.kind != OmegaKind::direct_sum)
    throw argument_error("tsallis_sum_bound: omega must be direct_sum kind");
  return tsallis(omega.omega, alpha);
}

// Inefficiency-adjusted Tsallis bound kappa^alpha H_alpha(omega) +
// 2 h_alpha(kappa) with kappa the smaller efficiency. The derivation assumes
// efficiencies of at least 1/2; smaller values are rejected.
inline double inefficiency_bound(const OmegaVector& omega, Efficiency kappa_f,
                                 Efficiency kappa_m, double alpha) {
  if (omega.kind != OmegaKind::direct_sum)
    throw argument_error("inefficiency_bound: omega must be direct_sum kind");
  if (kappa_f.kappa < 0.5 || kappa_m.kappa < 0.5)
    throw argument_error(
        "inefficiency_bound: detector efficiencies below 1/2 are outside the "
        "regime of the bound; sieve the data first");
  const double kappa = std::min(kappa_f.kappa, kappa_m.kappa);
  return std::pow(kappa, alpha) * tsallis_sum_bound(omega, alpha) +
         2.0 * binary_tsallis(Efficiency(kappa), alpha);
}

// Named lower bounds at one parameter point, together with the inputs that
// produced them.
struct BoundReport {
  double eta1 = 0.0;
  double eta2 = 0.0;
  ZetaSequence zetas;
  std::vector<double> omega;
  std::vector<double> omega_prime;
  std::map<std::string, double> bounds;

  BoundReport(double e1, double e2, ZetaSequence z, std::vector<double> om,
              std::vector<double> omp, std::map<std::string, double> b)
      : eta1(e1), eta2(e2), zetas(std::move(z)), omega(std::move(om)),
        omega_prime(std::move(omp)), bounds(std::move(b)) {
    if (!(eta2 <= eta1 && eta1 <= 1.0 + 1e-12))
      throw invariant_error("BoundReport: need eta2 <= eta1 <= 1");
    const auto mu = bounds.find("maassen_uffink");
    const auto cp = bounds.find("coles_piani");
    if (mu != bounds.end() && cp != bounds.end() && cp->second < mu->second - 1e-12)
      throw invariant_error("BoundReport: coles_piani below maassen_uffink");
  }
};

// One sweep row: alpha, direct-sum-type bound, product-type bound.
struct AlphaSweepRow {
  double alpha;
  double sum_type;
  double product_type;
};

// Evaluates both Renyi bound families over an alpha grid; a leading row at
// alpha = 0.001 is prepended when the grid starts above it, so the max-entropy
// endpoint is always visible.
inline std::vector<AlphaSweepRow> bound_alpha_sweep(const OmegaVector& omega,
                                                    const OmegaVector& omega_prime,
                                                    double start, double stop, double step) {
  if (omega.kind != OmegaKind::direct_sum || omega_prime.kind != OmegaKind::tensor_product)
    throw argument_error("bound_alpha_sweep: wrong omega kinds");
  if (!(start > 0.0) || !(stop >= start) || !(step > 0.0))
    throw argument_error("bound_alpha_sweep: need 0 < start <= stop and step > 0");
  std::vector<AlphaSweepRow> rows;
  if (start > 0.001)
    rows.push_back({0.001, renyi_sum_bound(omega, 0.001), renyi_product_bound(omega_prime, 0.001)});
  const double n_steps = std::floor((stop - start) / step + 1e-9);
  for (long i = 0; i <= static_cast<long>(n_steps); ++i) {
    const double a = start + static_cast<double>(i) * step;
    rows.push_back({a, renyi_sum_bound(omega, a), renyi_product_bound(omega_prime, a)});
  }
  return rows;
}

}  // namespace numaj
