#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "numaj/bounds.hpp"
#include "numaj/errors.hpp"
#include "numaj/linalg.hpp"
#include "numaj/majorization.hpp"
#include "numaj/random.hpp"

namespace numaj {

inline constexpr double kDegree = std::numbers::pi / 180.0;

namespace detail {
inline double normalize_phase(double x) {
  const double two_pi = 2.0 * std::numbers::pi;
  x = std::fmod(x, two_pi);
  if (x < 0.0) x += two_pi;
  return x;
}
}  // namespace detail

// Three mixing angles, the Dirac CP phase, and the two Majorana phases, all
// in radians.
struct MixingParams {
  double theta12;
  double theta23;
  double theta13;
  double delta;
  double phi1;
  double phi2;

  MixingParams(double t12, double t23, double t13, double d, double p1 = 0.0, double p2 = 0.0)
      : theta12(t12), theta23(t23), theta13(t13),
        delta(detail::normalize_phase(d)),
        phi1(detail::normalize_phase(p1)),
        phi2(detail::normalize_phase(p2)) {
    const double half_pi = 0.5 * std::numbers::pi;
    for (double t : {theta12, theta23, theta13})
      if (!(t >= 0.0 && t <= half_pi))
        throw argument_error("MixingParams: mixing angles must lie in [0, pi/2]");
  }

  static MixingParams from_sin_squared(double s12sq, double s23sq, double s13sq,
                                       double delta_rad, double p1 = 0.0, double p2 = 0.0) {
    auto angle = [](double s2, const char* name) {
      if (!(s2 >= 0.0 && s2 <= 1.0))
        throw argument_error(std::string("MixingParams: ") + name + " must lie in [0, 1]");
      return std::asin(std::sqrt(s2));
    };
    return MixingParams(angle(s12sq, "sin^2 theta12"), angle(s23sq, "sin^2 theta23"),
                        angle(s13sq, "sin^2 theta13"), delta_rad, p1, p2);
  }
};

// Full 3x3 mixing matrix: the product of the 2-3, 1-3 and 1-2 rotation
// factors times the Majorana phase diagonal.
inline ComplexMatrix build_pmns(const MixingParams& p) {
  const double c12 = std::cos(p.theta12), s12 = std::sin(p.theta12);
  const double c23 = std::cos(p.theta23), s23 = std::sin(p.theta23);
  const double c13 = std::cos(p.theta13), s13 = std::sin(p.theta13);
  const Complex eid = std::polar(1.0, p.delta);

  ComplexMatrix r23(3, 3);
  r23(0, 0) = 1.0;
  r23(1, 1) = c23;
  r23(1, 2) = s23;
  r23(2, 1) = -s23;
  r23(2, 2) = c23;

  ComplexMatrix u13(3, 3);
  u13(0, 0) = c13;
  u13(0, 2) = s13 * std::conj(eid);
  u13(1, 1) = 1.0;
  u13(2, 0) = -s13 * eid;
  u13(2, 2) = c13;

  ComplexMatrix r12(3, 3);
  r12(0, 0) = c12;
  r12(0, 1) = s12;
  r12(1, 0) = -s12;
  r12(1, 1) = c12;
  r12(2, 2) = 1.0;

  ComplexMatrix majorana(3, 3);
  majorana(0, 0) = 1.0;
  majorana(1, 1) = std::polar(1.0, p.phi1);
  majorana(2, 2) = std::polar(1.0, p.phi2);

  return r23 * u13 * r12 * majorana;
}

// Checks that every entry modulus and the whole zeta sequence ignore the
// Majorana phases.
inline bool magnitudes_independent_of_majorana(const MixingParams& p, int trials = 10,
                                               std::uint64_t seed = 0x4d61ULL) {
  const ComplexMatrix base = build_pmns(p);
  const ZetaSequence zeta_base = zeta_sequence(base);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    MixingParams q(p.theta12, p.theta23, p.theta13, p.delta,
                   rng.uniform() * 2.0 * std::numbers::pi,
                   rng.uniform() * 2.0 * std::numbers::pi);
    const ComplexMatrix u = build_pmns(q);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (std::abs(std::abs(u(i, j)) - std::abs(base(i, j))) > 1e-12) return false;
    const ZetaSequence z = zeta_sequence(u);
    for (std::size_t k = 0; k < 3; ++k)
      if (std::abs(z[k] - zeta_base[k]) > 1e-12) return false;
  }
  return true;
}

enum class Unit { dimensionless, degree };

// One global-fit parameter: best-fit value with asymmetric 1-sigma errors and
// the 3-sigma interval, in the source's native variable.
struct ParamRange {
  std::string name;
  double bfp = 0.0;
  double sigma_plus = 0.0;
  double sigma_minus = 0.0;
  double three_sigma_low = 0.0;
  double three_sigma_high = 0.0;
  Unit unit = Unit::dimensionless;

  void validate() const {
    if (!(three_sigma_low <= bfp - sigma_minus))
      throw parse_error("parameter " + name + ": three_sigma_low exceeds bfp - sigma_minus");
    if (!(bfp - sigma_minus <= bfp && bfp <= bfp + sigma_plus))
      throw parse_error("parameter " + name + ": sigma errors must be nonnegative");
    if (!(bfp + sigma_plus <= three_sigma_high))
      throw parse_error("parameter " + name + ": bfp + sigma_plus exceeds three_sigma_high");
  }

  double lo(int sigma_level) const { return sigma_level == 1 ? bfp - sigma_minus : three_sigma_low; }
  double hi(int sigma_level) const { return sigma_level == 1 ? bfp + sigma_plus : three_sigma_high; }
};

// The four scan parameters: sin^2 of the three angles plus the CP phase in
// degrees.
struct ParamRanges {
  ParamRange sin2_theta12;
  ParamRange sin2_theta23;
  ParamRange sin2_theta13;
  ParamRange delta_cp;

  void validate() const {
    sin2_theta12.validate();
    sin2_theta23.validate();
    sin2_theta13.validate();
    delta_cp.validate();
  }

  MixingParams best_fit() const {
    return MixingParams::from_sin_squared(sin2_theta12.bfp, sin2_theta23.bfp, sin2_theta13.bfp,
                                          delta_cp.bfp * kDegree);
  }
};

// NuFit global-fit values (November 2018 data, normal ordering, with SK
// atmospheric data), shipped as the built-in default dataset.
inline ParamRanges nufit_2018_11_normal() {
  ParamRanges r{
      {"sin2_theta12", 0.310, 0.013, 0.012, 0.275, 0.350, Unit::dimensionless},
      {"sin2_theta23", 0.582, 0.015, 0.019, 0.428, 0.624, Unit::dimensionless},
      {"sin2_theta13", 0.02240, 0.00065, 0.00066, 0.02044, 0.02437, Unit::dimensionless},
      {"delta_cp", 217.0, 40.0, 28.0, 135.0, 366.0, Unit::degree},
  };
  r.validate();
  return r;
}

// Per-cell [low, high] intervals for the entry magnitudes |u_beta_i|.
struct MagnitudeMatrix {
  std::array<std::array<std::pair<double, double>, 3>, 3> cells;

  void validate() const {
    for (const auto& row : cells)
      for (const auto& [lo, hi] : row)
        if (!(0.0 <= lo && lo <= hi && hi <= 1.0))
          throw parse_error("MagnitudeMatrix: cell interval must satisfy 0 <= low <= high <= 1");
  }
};

// Published 3-sigma magnitude intervals matching the default dataset.
inline MagnitudeMatrix nufit_magnitudes_3sigma() {
  MagnitudeMatrix m{{{
      {{{0.797, 0.842}, {0.518, 0.585}, {0.143, 0.156}}},
      {{{0.235, 0.484}, {0.458, 0.671}, {0.647, 0.781}}},
      {{{0.304, 0.531}, {0.497, 0.699}, {0.607, 0.747}}},
  }}};
  m.validate();
  return m;
}

struct GridSpec {
  int points_per_axis = 101;
};

namespace detail {

// Per-point trigonometric data derived from the sin^2 variables; no inverse
// trig needed on the scan hot path.
struct PmnsTrig {
  double c12, s12, c23, s23, c13, s13, cosd, sind;
};

inline PmnsTrig trig_from_sin_squared(double s12sq, double s23sq, double s13sq,
                                      double delta_rad) {
  return PmnsTrig{std::sqrt(1.0 - s12sq), std::sqrt(s12sq),
                  std::sqrt(1.0 - s23sq), std::sqrt(s23sq),
                  std::sqrt(1.0 - s13sq), std::sqrt(s13sq),
                  std::cos(delta_rad), std::sin(delta_rad)};
}

// Row-major 3x3 entries of r23 * u13 * r12, stack-allocated. Same rotation
// factors as build_pmns with the loop structure flattened; a test pins the
// two routes together.
struct Mat3 {
  std::array<Complex, 9> a;
  const Complex& operator()(int i, int j) const { return a[3 * i + j]; }
};

inline Mat3 pmns_entries(const PmnsTrig& t) {
  const Complex eip(t.cosd, t.sind);  // e^{+i delta}
  // m = r23 * u13
  const Complex m10 = -t.s23 * t.s13 * eip;
  const Complex m20 = -t.c23 * t.s13 * eip;
  Mat3 u;
  // columns 0,1 mix columns of m through r12; column 2 passes through
  u.a[0] = t.c12 * t.c13;
  u.a[1] = t.s12 * t.c13;
  u.a[2] = t.s13 * std::conj(eip);
  u.a[3] = t.c12 * m10 - t.s12 * t.c23;
  u.a[4] = t.s12 * m10 + t.c12 * t.c23;
  u.a[5] = t.s23 * t.c13;
  u.a[6] = t.c12 * m20 + t.s12 * t.s23;
  u.a[7] = t.s12 * m20 - t.c12 * t.s23;
  u.a[8] = t.c23 * t.c13;
  return u;
}

inline std::vector<double> grid_axis(double lo, double hi, int n) {
  if (!(hi > lo)) return {lo};
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    v[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  return v;
}

inline void require_scan_args(int sigma_level, const GridSpec& grid) {
  if (sigma_level != 1 && sigma_level != 3)
    throw argument_error("scan: sigma_level must be 1 or 3");
  if (grid.points_per_axis < 50)
    throw argument_error("scan: grid resolution must be at least 50 points per parameter");
}

// Spot-checks at the region corners and center that Majorana phases leave
// the entry moduli untouched.
inline void majorana_spot_check(double s12lo, double s12hi, double s23lo, double s23hi,
                                double s13lo, double s13hi, double dlo, double dhi,
                                std::uint64_t seed) {
  const std::array<std::array<double, 4>, 5> pts{{
      {s12lo, s23lo, s13lo, dlo},
      {s12hi, s23hi, s13hi, dhi},
      {s12lo, s23hi, s13lo, dhi},
      {s12hi, s23lo, s13hi, dlo},
      {0.5 * (s12lo + s12hi), 0.5 * (s23lo + s23hi), 0.5 * (s13lo + s13hi), 0.5 * (dlo + dhi)},
  }};
  for (const auto& pt : pts) {
    const MixingParams p =
        MixingParams::from_sin_squared(pt[0], pt[1], pt[2], pt[3] * kDegree);
    if (!magnitudes_independent_of_majorana(p, 3, seed))
      throw invariant_error("scan: Majorana phases affected entry moduli");
  }
}

template <typename F>
inline std::pair<double, double> golden_max(F&& f, double a, double b) {
  constexpr double invphi = 0.6180339887498949;
  double bx = a, bf = f(a);
  const double fend = f(b);
  if (fend > bf) {
    bf = fend;
    bx = b;
  }
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 120 && (b - a) > 1e-12; ++it) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  if (f1 > bf) {
    bf = f1;
    bx = x1;
  }
  if (f2 > bf) {
    bf = f2;
    bx = x2;
  }
  return {bx, bf};
}

}  // namespace detail

// Outcome of the eta identification scan: pointwise confirmation that the
// largest modulus sits at the (e,1) entry and the runner-up is
// c13 * max{c23, s23}, plus the two closed-form certificates derived from the
// range endpoints.
struct ScanEtaResult {
  bool eta1_is_ue1 = false;
  bool eta2_is_c13_max_c23_s23 = false;
  std::optional<std::array<double, 4>> counterexample;  // (s12sq, s23sq, s13sq, delta_deg)
  double certificate_c13_min = 0.0;
  double certificate_rival_max = 0.0;
  double eta1_bfp = 0.0;
  double eta2_bfp = 0.0;
};

inline ScanEtaResult scan_eta(const ParamRanges& ranges, int sigma_level,
                              const GridSpec& grid = {}, std::uint64_t seed = 0x4d61ULL) {
  detail::require_scan_args(sigma_level, grid);
  ranges.validate();
  const int n = grid.points_per_axis;
  const double s12lo = ranges.sin2_theta12.lo(sigma_level), s12hi = ranges.sin2_theta12.hi(sigma_level);
  const double s23lo = ranges.sin2_theta23.lo(sigma_level), s23hi = ranges.sin2_theta23.hi(sigma_level);
  const double s13lo = ranges.sin2_theta13.lo(sigma_level), s13hi = ranges.sin2_theta13.hi(sigma_level);
  const double dlo = ranges.delta_cp.lo(sigma_level), dhi = ranges.delta_cp.hi(sigma_level);

  detail::majorana_spot_check(s12lo, s12hi, s23lo, s23hi, s13lo, s13hi, dlo, dhi, seed);

  const std::vector<double> ax12 = detail::grid_axis(s12lo, s12hi, n);
  const std::vector<double> ax23 = detail::grid_axis(s23lo, s23hi, n);
  const std::vector<double> ax13 = detail::grid_axis(s13lo, s13hi, n);
  const std::vector<double> axd = detail::grid_axis(dlo, dhi, n);

  struct Axis12 {
    double c, s;
  };
  std::vector<Axis12> t12(ax12.size());
  for (std::size_t i = 0; i < ax12.size(); ++i)
    t12[i] = {std::sqrt(1.0 - ax12[i]), std::sqrt(ax12[i])};

  ScanEtaResult out;
  out.eta1_is_ue1 = true;
  out.eta2_is_c13_max_c23_s23 = true;

  for (std::size_t i13 = 0; i13 < ax13.size() && !out.counterexample; ++i13) {
    const double s13sq = ax13[i13];
    const double s13 = std::sqrt(s13sq);
    const double c13 = std::sqrt(1.0 - s13sq);
    for (std::size_t id = 0; id < axd.size() && !out.counterexample; ++id) {
      const double drad = axd[id] * kDegree;
      const Complex eip = std::polar(1.0, drad);
      for (std::size_t i23 = 0; i23 < ax23.size() && !out.counterexample; ++i23) {
        const double s23sq = ax23[i23];
        const double s23 = std::sqrt(s23sq);
        const double c23 = std::sqrt(1.0 - s23sq);
        const Complex m10 = -s23 * s13 * eip;
        const Complex m20 = -c23 * s13 * eip;
        const double mu3sq = s23 * c13 * s23 * c13;
        const double tau3sq = c23 * c13 * c23 * c13;
        const double expected_sq = std::max(mu3sq, tau3sq);
        const double e3sq = s13sq;
        for (std::size_t i12 = 0; i12 < ax12.size(); ++i12) {
          const double c12 = t12[i12].c, s12 = t12[i12].s;
          const double u00sq = c12 * c13 * c12 * c13;
          const double u01sq = s12 * c13 * s12 * c13;
          const double u10sq = std::norm(c12 * m10 - s12 * c23);
          const double u11sq = std::norm(s12 * m10 + c12 * c23);
          const double u20sq = std::norm(c12 * m20 + s12 * s23);
          const double u21sq = std::norm(s12 * m20 - c12 * s23);

          double second_sq = u01sq;
          bool top = true;
          for (double m : {e3sq, u10sq, u11sq, mu3sq, u20sq, u21sq, tau3sq}) {
            if (m > u00sq) top = false;
            if (m > second_sq) second_sq = m;
          }
          if (!top || second_sq > u00sq ||
              std::abs(std::sqrt(second_sq) - std::sqrt(expected_sq)) > 1e-9) {
            if (!top || second_sq > u00sq) {
              out.eta1_is_ue1 = false;
              out.eta2_is_c13_max_c23_s23 = false;
            } else {
              out.eta2_is_c13_max_c23_s23 = false;
            }
            out.counterexample = {{ax12[i12], s23sq, s13sq, axd[id]}};
            break;
          }
        }
      }
    }
  }
  out.certificate_c13_min = std::sqrt(1.0 - ranges.sin2_theta13.hi(sigma_level));
  out.certificate_rival_max =
      std::sqrt(1.0 - ranges.sin2_theta12.lo(sigma_level)) +
      std::sqrt(ranges.sin2_theta12.hi(sigma_level) * ranges.sin2_theta13.hi(sigma_level));

  const auto [e1, e2] = eta_pair(build_pmns(ranges.best_fit()));
  out.eta1_bfp = e1;
  out.eta2_bfp = e2;
  return out;
}

// Outcome of the zeta_2 identification scan: the two ratio maxima whose being
// below 1 certifies zeta_2 = c13 throughout the region.
struct ScanZeta2Result {
  bool holds = false;
  double max_ratio_mu2_tau3 = 0.0;
  double max_ratio_tau2_mu3 = 0.0;
  std::array<double, 4> argmax_mu2_tau3{};  // (s12sq, s23sq, s13sq, delta_deg)
  std::array<double, 4> argmax_tau2_mu3{};
};

namespace detail {

inline double ratio_mu2_tau3(const std::array<double, 4>& x) {
  const Mat3 u = pmns_entries(trig_from_sin_squared(x[0], x[1], x[2], x[3] * kDegree));
  return std::abs(u(1, 1)) / std::abs(u(2, 2));
}

inline double ratio_tau2_mu3(const std::array<double, 4>& x) {
  const Mat3 u = pmns_entries(trig_from_sin_squared(x[0], x[1], x[2], x[3] * kDegree));
  return std::abs(u(2, 1)) / std::abs(u(1, 2));
}

// Coordinate-wise golden-section refinement within one grid cell of the
// incumbent; stops when a full pass improves the objective by < 1e-6.
template <typename F>
inline void refine_max(F&& f, std::array<double, 4>& x, double& fx,
                       const std::array<double, 4>& lo, const std::array<double, 4>& hi,
                       const std::array<double, 4>& step) {
  for (int pass = 0; pass < 4; ++pass) {
    const double before = fx;
    for (int c = 0; c < 4; ++c) {
      const double a = std::max(lo[c], x[c] - step[c]);
      const double b = std::min(hi[c], x[c] + step[c]);
      if (!(b > a)) continue;
      auto g = [&](double v) {
        std::array<double, 4> y = x;
        y[c] = v;
        return f(y);
      };
      const auto [xx, ff] = golden_max(g, a, b);
      if (ff > fx) {
        fx = ff;
        x[c] = xx;
      }
    }
    if (fx - before < 1e-6) break;
  }
}

}  // namespace detail

inline ScanZeta2Result scan_zeta2(const ParamRanges& ranges, int sigma_level,
                                  const GridSpec& grid = {}, std::uint64_t seed = 0x4d61ULL) {
  detail::require_scan_args(sigma_level, grid);
  ranges.validate();
  const int n = grid.points_per_axis;
  const double s12lo = ranges.sin2_theta12.lo(sigma_level), s12hi = ranges.sin2_theta12.hi(sigma_level);
  const double s23lo = ranges.sin2_theta23.lo(sigma_level), s23hi = ranges.sin2_theta23.hi(sigma_level);
  const double s13lo = ranges.sin2_theta13.lo(sigma_level), s13hi = ranges.sin2_theta13.hi(sigma_level);
  const double dlo = ranges.delta_cp.lo(sigma_level), dhi = ranges.delta_cp.hi(sigma_level);

  detail::majorana_spot_check(s12lo, s12hi, s23lo, s23hi, s13lo, s13hi, dlo, dhi, seed);

  const std::vector<double> ax12 = detail::grid_axis(s12lo, s12hi, n);
  const std::vector<double> ax23 = detail::grid_axis(s23lo, s23hi, n);
  const std::vector<double> ax13 = detail::grid_axis(s13lo, s13hi, n);
  const std::vector<double> axd = detail::grid_axis(dlo, dhi, n);

  struct Axis12 {
    double c, s;
  };
  std::vector<Axis12> t12(ax12.size());
  for (std::size_t i = 0; i < ax12.size(); ++i)
    t12[i] = {std::sqrt(1.0 - ax12[i]), std::sqrt(ax12[i])};

  double best1 = -1.0, best2 = -1.0;
  std::array<double, 4> arg1{}, arg2{};

  auto lex_less = [](const std::array<double, 4>& a, const std::array<double, 4>& b) {
    for (int i = 0; i < 4; ++i) {
      if (a[i] < b[i]) return true;
      if (a[i] > b[i]) return false;
    }
    return false;
  };

  for (std::size_t i13 = 0; i13 < ax13.size(); ++i13) {
    const double s13sq = ax13[i13];
    const double s13 = std::sqrt(s13sq);
    const double c13 = std::sqrt(1.0 - s13sq);
    for (std::size_t id = 0; id < axd.size(); ++id) {
      const Complex eip = std::polar(1.0, axd[id] * kDegree);
      for (std::size_t i23 = 0; i23 < ax23.size(); ++i23) {
        const double s23sq = ax23[i23];
        const double s23 = std::sqrt(s23sq);
        const double c23 = std::sqrt(1.0 - s23sq);
        const Complex m10 = -s23 * s13 * eip;
        const Complex m20 = -c23 * s13 * eip;
        const double inv_tau3sq = 1.0 / (c23 * c13 * c23 * c13);
        const double inv_mu3sq = 1.0 / (s23 * c13 * s23 * c13);
        for (std::size_t i12 = 0; i12 < ax12.size(); ++i12) {
          const double c12 = t12[i12].c, s12 = t12[i12].s;
          const double r1 = std::norm(s12 * m10 + c12 * c23) * inv_tau3sq;
          const double r2 = std::norm(s12 * m20 - c12 * s23) * inv_mu3sq;
          if (r1 > best1) {
            best1 = r1;
            arg1 = {ax12[i12], s23sq, s13sq, axd[id]};
          } else if (r1 == best1) {
            const std::array<double, 4> cand{ax12[i12], s23sq, s13sq, axd[id]};
            if (lex_less(cand, arg1)) arg1 = cand;
          }
          if (r2 > best2) {
            best2 = r2;
            arg2 = {ax12[i12], s23sq, s13sq, axd[id]};
          } else if (r2 == best2) {
            const std::array<double, 4> cand{ax12[i12], s23sq, s13sq, axd[id]};
            if (lex_less(cand, arg2)) arg2 = cand;
          }
        }
      }
    }
  }

  double f1 = std::sqrt(best1);
  double f2 = std::sqrt(best2);

  const std::array<double, 4> lo{s12lo, s23lo, s13lo, dlo};
  const std::array<double, 4> hi{s12hi, s23hi, s13hi, dhi};
  const std::array<double, 4> step{
      ax12.size() > 1 ? ax12[1] - ax12[0] : 0.0, ax23.size() > 1 ? ax23[1] - ax23[0] : 0.0,
      ax13.size() > 1 ? ax13[1] - ax13[0] : 0.0, axd.size() > 1 ? axd[1] - axd[0] : 0.0};
  detail::refine_max(detail::ratio_mu2_tau3, arg1, f1, lo, hi, step);
  detail::refine_max(detail::ratio_tau2_mu3, arg2, f2, lo, hi, step);

  ScanZeta2Result out;
  out.max_ratio_mu2_tau3 = f1;
  out.max_ratio_tau2_mu3 = f2;
  out.argmax_mu2_tau3 = arg1;
  out.argmax_tau2_mu3 = arg2;
  out.holds = f1 < 1.0 && f2 < 1.0;
  return out;
}

// Full report at one parameter point: zeta sequence, both majorization
// vectors, the eta pair, and the Shannon-order bounds with improvement
// percentages over Maassen-Uffink.
inline BoundReport bound_report_at(const MixingParams& p) {
  const ComplexMatrix u = build_pmns(p);
  ZetaSequence zetas = zeta_sequence(u);
  const OmegaVector omega = omega_direct_sum(zetas);
  const OmegaVector omega_prime = omega_tensor_product(zetas);
  const auto [eta1, eta2] = eta_pair(u);

  const double mu = maassen_uffink(eta1);
  const double cp = coles_piani(eta1, eta2);
  const double h_sum = shannon(omega.omega);
  const double h_prod = shannon(omega_prime.omega);

  std::map<std::string, double> bounds{
      {"maassen_uffink", mu},
      {"coles_piani", cp},
      {"shannon_sum", h_sum},
      {"shannon_product", h_prod},
      {"improvement_sum_vs_mu_percent", mu > 0.0 ? 100.0 * (h_sum / mu - 1.0) : 0.0},
      {"improvement_cp_vs_mu_percent", mu > 0.0 ? 100.0 * (cp / mu - 1.0) : 0.0},
  };
  return BoundReport(eta1, eta2, std::move(zetas), omega.omega.values(),
                     omega_prime.omega.values(), std::move(bounds));
}

}  // namespace numaj
