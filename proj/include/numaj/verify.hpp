#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "numaj/bounds.hpp"
#include "numaj/entropy.hpp"
#include "numaj/errors.hpp"
#include "numaj/linalg.hpp"
#include "numaj/majorization.hpp"
#include "numaj/mixing.hpp"
#include "numaj/qmemory.hpp"
#include "numaj/random.hpp"

namespace numaj::verify {

namespace detail {

// Closed-form characteristic-polynomial eigenvalues for Hermitian matrices of
// size <= 3, descending. This is the oracle route: it shares no code with the
// Jacobi eigensolver the library uses.
inline std::vector<double> charpoly_eigs_desc(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return {a(0, 0).real()};
  if (n == 2) {
    const double p = a(0, 0).real(), q = a(1, 1).real();
    const double mean = 0.5 * (p + q);
    const double disc = std::sqrt(0.25 * (p - q) * (p - q) + std::norm(a(0, 1)));
    return {mean + disc, mean - disc};
  }
  if (n != 3) throw argument_error("charpoly_eigs_desc: only sizes 1..3 supported");

  const double c2 = (a(0, 0) + a(1, 1) + a(2, 2)).real();
  const double c1 = ((a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) +
                     (a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0)) +
                     (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)))
                        .real();
  const double c0 = (a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                     a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                     a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)))
                        .real();

  // depressed cubic x^3 + p x + q with lambda = x + c2/3
  const double m = c2 / 3.0;
  const double p = c1 - c2 * c2 / 3.0;
  const double q = -2.0 * c2 * c2 * c2 / 27.0 + c1 * c2 / 3.0 - c0;
  if (p > -1e-30) return {m, m, m};  // p <= 0 for Hermitian; ~0 means triple root
  const double r = 2.0 * std::sqrt(-p / 3.0);
  double arg = 3.0 * q / (p * r);
  arg = std::min(1.0, std::max(-1.0, arg));
  const double phi = std::acos(arg) / 3.0;
  std::array<double, 3> x{r * std::cos(phi), r * std::cos(phi - 2.0 * std::numbers::pi / 3.0),
                          r * std::cos(phi - 4.0 * std::numbers::pi / 3.0)};
  std::vector<double> eigs{x[0] + m, x[1] + m, x[2] + m};
  std::sort(eigs.begin(), eigs.end(), std::greater<double>());
  return eigs;
}

}  // namespace detail

// Independent zeta oracle: bitmask enumeration of every submatrix with
// r + r' = k + 1 and largest singular value from the closed-form Gram
// eigenvalues above. Works for d <= 5 (Gram side never exceeds 3 there).
inline std::vector<double> brute_force_zeta(const ComplexMatrix& w) {
  if (!w.square()) throw dimension_error("brute_force_zeta: matrix must be square");
  const std::size_t d = w.rows();
  if (d > 5) throw argument_error("brute_force_zeta: supports d <= 5");
  std::vector<double> z(d, 0.0);
  const unsigned full = (1u << d) - 1u;
  for (std::size_t k = 1; k <= d; ++k) {
    double best = 0.0;
    for (unsigned rm = 1; rm <= full; ++rm) {
      for (unsigned cm = 1; cm <= full; ++cm) {
        if (std::popcount(rm) + std::popcount(cm) != static_cast<int>(k) + 1) continue;
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 0; i < d; ++i) {
          if (rm & (1u << i)) rows.push_back(i);
          if (cm & (1u << i)) cols.push_back(i);
        }
        const bool row_side = rows.size() <= cols.size();
        const std::size_t g = row_side ? rows.size() : cols.size();
        ComplexMatrix gram(g, g);
        for (std::size_t i = 0; i < g; ++i)
          for (std::size_t j = 0; j < g; ++j) {
            Complex s = 0.0;
            if (row_side) {
              for (std::size_t c : cols) s += w(rows[i], c) * std::conj(w(rows[j], c));
            } else {
              for (std::size_t r : rows) s += std::conj(w(r, cols[i])) * w(r, cols[j]);
            }
            gram(i, j) = s;
          }
        const double lmax = detail::charpoly_eigs_desc(gram).front();
        best = std::max(best, std::sqrt(std::max(lmax, 0.0)));
      }
    }
    z[k - 1] = std::min(best, 1.0);
  }
  return z;
}

struct SuiteResult {
  std::string name;
  std::size_t samples = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string worst_label;
  double worst_value = 0.0;
  std::string first_counterexample;
};

struct VerifyOptions {
  std::size_t samples_per_dim = 334;     // majorization / entropic suites, per d in {2,3,4}
  std::size_t oracle_per_dim = 34;       // zeta oracle suite, per d
  std::size_t qmemory_samples = 500;
  std::size_t inefficiency_samples = 1000;
  bool corrupt_omega = false;            // self-test hook: breaks omega on purpose
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  bool pass = false;
};

namespace detail {

inline ComplexMatrix sample_state(std::size_t d, std::size_t index, const ComplexMatrix& w,
                                  Rng& rng) {
  if (index == 0) {  // computational basis state
    ComplexMatrix rho(d, d);
    rho(0, 0) = 1.0;
    return rho;
  }
  if (index == 1) {  // first vector of the second basis
    ComplexMatrix rho(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) rho(i, j) = w(i, 0) * std::conj(w(j, 0));
    return rho;
  }
  if (index == 2) {  // maximally mixed
    const Complex inv(1.0 / static_cast<double>(d), 0.0);
    return inv * ComplexMatrix::identity(d);
  }
  return (index % 2 == 0) ? random_density_matrix(d, rng) : random_pure_state(d, rng);
}

inline void record_failure(SuiteResult& r, const std::string& what) {
  ++r.failures;
  if (r.first_counterexample.empty()) r.first_counterexample = what;
}

inline void track_margin(SuiteResult& r, double margin) {
  ++r.checks;
  if (r.checks == 1 || margin < r.worst_value) r.worst_value = margin;
}

inline std::string describe_pair(const ComplexMatrix& w, const ComplexMatrix& rho) {
  return "w=" + numaj::detail::serialize_matrix(w) +
         " rho=" + numaj::detail::serialize_matrix(rho);
}

}  // namespace detail

// Direct-sum and tensor-product majorization relations plus omega < omega'
// on seeded random (state, unitary) pairs in d = 2, 3, 4.
inline SuiteResult run_majorization_suite(std::uint64_t seed, const VerifyOptions& opt) {
  SuiteResult r;
  r.name = "majorization";
  r.worst_label = "min_partial_sum_slack";
  for (std::size_t d : {2u, 3u, 4u}) {
    for (std::size_t i = 0; i < opt.samples_per_dim; ++i) {
      Rng rng(derive_seed(seed, 10 + d, i));
      const ComplexMatrix w = haar_unitary(d, rng);
      const ComplexMatrix rho = detail::sample_state(d, i, w, rng);
      ++r.samples;
      try {
        const BasisPair pair(w);
        const auto [p, q] = pair.probs(rho);
        const ZetaSequence zetas = zeta_sequence(w);
        OmegaVector omega = omega_direct_sum(zetas);
        const OmegaVector omega_prime = omega_tensor_product(zetas);
        if (opt.corrupt_omega)
          omega = OmegaVector{ProbVector(std::vector<double>(d, 1.0 / static_cast<double>(d))),
                              OmegaKind::direct_sum};

        const double ds = direct_sum_margin(p, q, omega);
        detail::track_margin(r, ds);
        if (!verify_direct_sum_relation(p, q, omega)) {
          detail::record_failure(r, "direct-sum relation failed: " + detail::describe_pair(w, rho));
          continue;
        }
        const double tp = tensor_product_margin(p, q, omega_prime);
        detail::track_margin(r, tp);
        if (!verify_tensor_product_relation(p, q, omega_prime)) {
          detail::record_failure(r,
                                 "tensor-product relation failed: " + detail::describe_pair(w, rho));
          continue;
        }
        const double onn = majorization_margin(
            std::span<const double>(omega_prime.omega.values()),
            std::span<const double>(omega.omega.values()));
        detail::track_margin(r, onn);
        if (!majorizes(omega_prime.omega, omega.omega))
          detail::record_failure(r, "omega < omega' failed: " + detail::describe_pair(w, rho));
      } catch (const error& e) {
        detail::record_failure(r, std::string("exception: ") + e.what());
      }
    }
  }
  return r;
}

// Renyi/Tsallis sum and product bounds plus the Shannon-order chain
// H1(p) + H1(q) >= Coles-Piani >= Maassen-Uffink, at six alpha orders.
inline SuiteResult run_entropic_bounds_suite(std::uint64_t seed, const VerifyOptions& opt) {
  SuiteResult r;
  r.name = "entropic_bounds";
  r.worst_label = "min_bound_slack";
  const std::array<double, 6> alphas{0.3, 0.7, 1.0, 1.5, 2.0, 3.0};
  for (std::size_t d : {2u, 3u, 4u}) {
    for (std::size_t i = 0; i < opt.samples_per_dim; ++i) {
      Rng rng(derive_seed(seed, 20 + d, i));
      const ComplexMatrix w = haar_unitary(d, rng);
      const ComplexMatrix rho = detail::sample_state(d, i, w, rng);
      ++r.samples;
      try {
        const BasisPair pair(w);
        const auto [p, q] = pair.probs(rho);
        const ZetaSequence zetas = zeta_sequence(w);
        const OmegaVector omega = omega_direct_sum(zetas);
        const OmegaVector omega_prime = omega_tensor_product(zetas);

        bool ok = true;
        for (double a : alphas) {
          const double lhs_r = renyi(p, a) + renyi(q, a);
          const double rhs_r =
              std::max(renyi_sum_bound(omega, a), renyi_product_bound(omega_prime, a));
          detail::track_margin(r, lhs_r - rhs_r);
          ok = ok && lhs_r >= rhs_r - 1e-9;

          const double lhs_t = tsallis(p, a) + tsallis(q, a);
          const double rhs_t = tsallis_sum_bound(omega, a);
          detail::track_margin(r, lhs_t - rhs_t);
          ok = ok && lhs_t >= rhs_t - 1e-9;
        }
        const auto [eta1, eta2] = eta_pair(w);
        const double h1 = shannon(p) + shannon(q);
        const double cp = coles_piani(eta1, eta2);
        const double mu = maassen_uffink(eta1);
        detail::track_margin(r, h1 - cp);
        detail::track_margin(r, cp - mu);
        ok = ok && h1 >= cp - 1e-9 && cp >= mu - 1e-12;
        if (!ok)
          detail::record_failure(r, "entropic bound failed: " + detail::describe_pair(w, rho));
      } catch (const error& e) {
        detail::record_failure(r, std::string("exception: ") + e.what());
      }
    }
  }
  return r;
}

// zeta_sequence against the bitmask/charpoly oracle on Haar unitaries.
inline SuiteResult run_zeta_oracle_suite(std::uint64_t seed, const VerifyOptions& opt) {
  SuiteResult r;
  r.name = "zeta_oracle";
  r.worst_label = "max_abs_deviation";
  for (std::size_t d : {2u, 3u, 4u}) {
    for (std::size_t i = 0; i < opt.oracle_per_dim; ++i) {
      Rng rng(derive_seed(seed, 30 + d, i));
      const ComplexMatrix w = haar_unitary(d, rng);
      ++r.samples;
      try {
        const ZetaSequence z = zeta_sequence(w);
        const std::vector<double> zo = brute_force_zeta(w);
        double dev = 0.0;
        for (std::size_t k = 0; k < d; ++k) dev = std::max(dev, std::abs(z[k] - zo[k]));
        ++r.checks;
        if (r.checks == 1 || dev > r.worst_value) r.worst_value = dev;
        if (dev > 1e-9)
          detail::record_failure(r, "zeta oracle mismatch: w=" + numaj::detail::serialize_matrix(w));
      } catch (const error& e) {
        detail::record_failure(r, std::string("exception: ") + e.what());
      }
    }
  }
  return r;
}

// Memory-assisted bounds on random two-qutrit states against the best-fit
// mixing matrix, with product states mixed in to exercise the reduction.
inline SuiteResult run_quantum_memory_suite(std::uint64_t seed, const VerifyOptions& opt) {
  SuiteResult r;
  r.name = "quantum_memory";
  r.worst_label = "min_relation_slack";
  const ComplexMatrix w = build_pmns(nufit_2018_11_normal().best_fit());
  for (std::size_t i = 0; i < opt.qmemory_samples; ++i) {
    Rng rng(derive_seed(seed, 40, i));
    ++r.samples;
    try {
      ComplexMatrix rho(9, 9);
      const bool product = (i % 10 == 9);
      if (product) {
        rho = tensor_product(random_density_matrix(3, rng), random_density_matrix(3, rng));
      } else {
        rho = random_density_matrix(9, rng);
      }
      const BipartiteState state(rho, 3, 3);
      const MemoryRelationReport rep = verify_memory_relation(state, w);
      detail::track_margin(r, rep.s_xb + rep.s_zb - rep.cp_rhs);
      detail::track_margin(r, rep.cp_rhs - rep.bccrr_rhs);
      detail::track_margin(r, rep.s_xb);
      detail::track_margin(r, rep.s_zb);
      if (rep.s_xb < -1e-9 || rep.s_zb < -1e-9)
        detail::record_failure(r, "negative dephased conditional entropy: " +
                                      numaj::detail::serialize_matrix(rho));
      if (product) {
        const BasisPair pair(w);
        const auto [p, q] = pair.probs(state.reduced_a());
        const double drift = std::abs(rep.s_xb + rep.s_zb - (shannon(p) + shannon(q)));
        if (drift > 1e-9)
          detail::record_failure(r, "product-state reduction drift: " +
                                        numaj::detail::serialize_matrix(rho));
        const double add = std::abs(rep.cond_ab - von_neumann(state.reduced_a()));
        if (add > 1e-9)
          detail::record_failure(r, "conditional entropy additivity drift: " +
                                        numaj::detail::serialize_matrix(rho));
      }
    } catch (const property_violation& e) {
      detail::record_failure(r, e.what());
    } catch (const error& e) {
      detail::record_failure(r, std::string("exception: ") + e.what());
    }
  }
  return r;
}

// Exact distortion identity on a fixed grid plus the inefficiency-adjusted
// bound on random qutrit states.
inline SuiteResult run_inefficiency_suite(std::uint64_t seed, const VerifyOptions& opt) {
  SuiteResult r;
  r.name = "inefficiency";
  r.worst_label = "min_bound_slack";
  const std::array<std::vector<double>, 5> ps{{{1.0, 0.0, 0.0},
                                               {1.0 / 3, 1.0 / 3, 1.0 / 3},
                                               {0.5, 0.3, 0.2},
                                               {0.7, 0.2, 0.1},
                                               {0.4, 0.35, 0.25}}};
  const std::array<double, 5> kappas{0.5, 0.6, 0.75, 0.9, 1.0};
  const std::array<double, 3> alphas{0.5, 1.0, 2.0};

  for (const auto& pv : ps) {
    const ProbVector p(pv);
    for (double k : kappas) {
      const Efficiency kappa(k);
      for (double a : alphas) {
        ++r.samples;
        const double lhs = tsallis(distort(p, kappa), a);
        const double rhs = std::pow(k, a) * tsallis(p, a) + binary_tsallis(kappa, a);
        const double dev = std::abs(lhs - rhs);
        detail::track_margin(r, 1e-12 - dev);
        if (dev > 1e-12)
          detail::record_failure(r, "distortion identity drift " + std::to_string(dev));
      }
    }
  }

  const ComplexMatrix w = build_pmns(nufit_2018_11_normal().best_fit());
  const BasisPair pair(w);
  const OmegaVector omega = omega_direct_sum(zeta_sequence(w));
  const std::array<double, 3> mc_kappas{0.6, 0.8, 1.0};
  for (std::size_t i = 0; i < opt.inefficiency_samples; ++i) {
    Rng rng(derive_seed(seed, 50, i));
    const ComplexMatrix rho =
        (i % 2 == 0) ? random_density_matrix(3, rng) : random_pure_state(3, rng);
    ++r.samples;
    try {
      const auto [p, q] = pair.probs(rho);
      for (double k : mc_kappas) {
        const Efficiency kappa(k);
        for (double a : alphas) {
          const double lhs =
              tsallis(distort(p, kappa), a) + tsallis(distort(q, kappa), a);
          const double rhs = inefficiency_bound(omega, kappa, kappa, a);
          detail::track_margin(r, lhs - rhs);
          if (lhs < rhs - 1e-9)
            detail::record_failure(r, "inefficiency bound failed: " +
                                          numaj::detail::serialize_matrix(rho));
        }
      }
    } catch (const error& e) {
      detail::record_failure(r, std::string("exception: ") + e.what());
    }
  }
  return r;
}

inline VerifyReport run_all(std::uint64_t seed, const VerifyOptions& opt = {}) {
  VerifyReport rep;
  rep.seed = seed;
  rep.suites.push_back(run_majorization_suite(seed, opt));
  rep.suites.push_back(run_entropic_bounds_suite(seed, opt));
  rep.suites.push_back(run_zeta_oracle_suite(seed, opt));
  rep.suites.push_back(run_quantum_memory_suite(seed, opt));
  rep.suites.push_back(run_inefficiency_suite(seed, opt));
  rep.pass = true;
  for (const SuiteResult& s : rep.suites) rep.pass = rep.pass && s.failures == 0;
  return rep;
}

// Fixed-format text summary; byte-identical for identical seeds.
inline std::string format_text(const VerifyReport& rep) {
  std::ostringstream os;
  os << "verify seed=" << rep.seed << "\n";
  for (const SuiteResult& s : rep.suites) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9e", s.worst_value);
    os << "suite " << s.name << " samples=" << s.samples << " checks=" << s.checks
       << " failures=" << s.failures << " " << s.worst_label << "=" << buf << "\n";
    if (s.failures > 0) os << "counterexample " << s.name << ": " << s.first_counterexample << "\n";
  }
  os << "result " << (rep.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace numaj::verify
