#pragma once

#include <cstdio>
#include <fstream>
#include <array>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "numaj/bounds.hpp"
#include "numaj/errors.hpp"
#include "numaj/mixing.hpp"
#include "numaj/verify.hpp"

namespace numaj {

inline std::string unit_name(Unit u) {
  return u == Unit::degree ? "degree" : "dimensionless";
}

inline Unit unit_from_name(const std::string& s) {
  if (s == "degree") return Unit::degree;
  if (s == "dimensionless") return Unit::dimensionless;
  throw parse_error("unit must be 'dimensionless' or 'degree', got '" + s + "'");
}

namespace detail {

inline double require_number(const nlohmann::json& j, const std::string& block,
                             const std::string& key) {
  if (!j.contains(key))
    throw parse_error("parameter " + block + ": missing field '" + key + "'");
  if (!j[key].is_number())
    throw parse_error("parameter " + block + ": field '" + key + "' must be a number");
  return j[key].get<double>();
}

inline std::string fmt(double x, const char* spec) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, x);
  return buf;
}

inline std::string f6(double x) { return fmt(x, "%.6g"); }   // tables
inline std::string f9(double x) { return fmt(x, "%.9g"); }   // csv

}  // namespace detail

// Parses the parameter-range document: one block per parameter with name,
// bfp, sigma_plus, sigma_minus, three_sigma_low, three_sigma_high, unit.
inline ParamRanges parse_param_ranges(const nlohmann::json& doc) {
  if (!doc.contains("parameters") || !doc["parameters"].is_array())
    throw parse_error("document: missing 'parameters' array");
  std::map<std::string, ParamRange> seen;
  for (const auto& block : doc["parameters"]) {
    if (!block.contains("name") || !block["name"].is_string())
      throw parse_error("parameter block: missing string field 'name'");
    const std::string name = block["name"].get<std::string>();
    ParamRange r;
    r.name = name;
    r.bfp = detail::require_number(block, name, "bfp");
    r.sigma_plus = detail::require_number(block, name, "sigma_plus");
    r.sigma_minus = detail::require_number(block, name, "sigma_minus");
    r.three_sigma_low = detail::require_number(block, name, "three_sigma_low");
    r.three_sigma_high = detail::require_number(block, name, "three_sigma_high");
    if (!block.contains("unit") || !block["unit"].is_string())
      throw parse_error("parameter " + name + ": missing string field 'unit'");
    r.unit = unit_from_name(block["unit"].get<std::string>());
    r.validate();
    seen[name] = r;
  }
  for (const char* need : {"sin2_theta12", "sin2_theta23", "sin2_theta13", "delta_cp"})
    if (!seen.count(need))
      throw parse_error(std::string("document: missing parameter block '") + need + "'");
  ParamRanges out{seen["sin2_theta12"], seen["sin2_theta23"], seen["sin2_theta13"],
                  seen["delta_cp"]};
  if (out.delta_cp.unit != Unit::degree)
    throw parse_error("parameter delta_cp: unit must be 'degree'");
  out.validate();
  return out;
}

inline ParamRanges load_param_ranges(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open parameter file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("parameter file '" + path + "': " + e.what());
  }
  return parse_param_ranges(doc);
}

inline MagnitudeMatrix parse_magnitude_matrix(const nlohmann::json& doc) {
  if (!doc.contains("intervals") || !doc["intervals"].is_array() || doc["intervals"].size() != 3)
    throw parse_error("magnitude document: 'intervals' must be a 3x3 array of [low, high]");
  MagnitudeMatrix m;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& row = doc["intervals"][i];
    if (!row.is_array() || row.size() != 3)
      throw parse_error("magnitude document: row " + std::to_string(i) + " must have 3 cells");
    for (std::size_t j = 0; j < 3; ++j) {
      const auto& cell = row[j];
      if (!cell.is_array() || cell.size() != 2)
        throw parse_error("magnitude document: cell (" + std::to_string(i) + "," +
                          std::to_string(j) + ") must be [low, high]");
      m.cells[i][j] = {cell[0].get<double>(), cell[1].get<double>()};
    }
  }
  m.validate();
  return m;
}

inline MagnitudeMatrix load_magnitude_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open magnitude file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("magnitude file '" + path + "': " + e.what());
  }
  return parse_magnitude_matrix(doc);
}

// ---- report formatting ----------------------------------------------------

// Every bound is computed in nats; the bits display rescales the
// Shannon-order entries by 1/ln 2. Generalized-order Tsallis values have no
// base conversion and always stay in nats.
inline constexpr std::array<const char*, 4> kLogOrderBounds{
    "maassen_uffink", "coles_piani", "shannon_sum", "shannon_product"};

namespace detail {

inline std::map<std::string, double> display_bounds(const BoundReport& r, bool bits) {
  std::map<std::string, double> out = r.bounds;
  if (bits) {
    for (const char* name : kLogOrderBounds) {
      const auto it = out.find(name);
      if (it != out.end()) it->second /= std::numbers::ln2;
    }
  }
  return out;
}

}  // namespace detail

inline std::string bound_report_table(const BoundReport& r, bool bits = false) {
  std::ostringstream os;
  os << "flavor-mass uncertainty bound report ("
     << (bits ? "Shannon-order bounds in bits" : "nats") << ")\n";
  os << "zeta:        ";
  for (double z : r.zetas.zetas) os << detail::f6(z) << " ";
  os << "\nomega:       ";
  for (double x : r.omega) os << detail::f6(x) << " ";
  os << "\nomega_prime: ";
  for (double x : r.omega_prime) os << detail::f6(x) << " ";
  os << "\neta1: " << detail::f6(r.eta1) << "  eta2: " << detail::f6(r.eta2) << "\n";
  for (const auto& [name, value] : detail::display_bounds(r, bits))
    os << name << ": " << detail::f6(value) << "\n";
  return os.str();
}

inline std::string bound_report_csv(const BoundReport& r, bool bits = false) {
  std::ostringstream os;
  os << "quantity,value\n";
  os << "log_unit," << (bits ? "bit" : "nat") << "\n";
  for (std::size_t k = 0; k < r.zetas.size(); ++k)
    os << "zeta_" << (k + 1) << "," << detail::f9(r.zetas[k]) << "\n";
  for (std::size_t k = 0; k < r.omega.size(); ++k)
    os << "omega_" << (k + 1) << "," << detail::f9(r.omega[k]) << "\n";
  for (std::size_t k = 0; k < r.omega_prime.size(); ++k)
    os << "omega_prime_" << (k + 1) << "," << detail::f9(r.omega_prime[k]) << "\n";
  os << "eta1," << detail::f9(r.eta1) << "\n";
  os << "eta2," << detail::f9(r.eta2) << "\n";
  for (const auto& [name, value] : detail::display_bounds(r, bits))
    os << name << "," << detail::f9(value) << "\n";
  return os.str();
}

inline nlohmann::json bound_report_json(const BoundReport& r, bool bits = false) {
  nlohmann::json j;
  j["log_unit"] = bits ? "bit" : "nat";
  j["zeta"] = r.zetas.zetas;
  j["omega"] = r.omega;
  j["omega_prime"] = r.omega_prime;
  j["eta1"] = r.eta1;
  j["eta2"] = r.eta2;
  j["bounds"] = detail::display_bounds(r, bits);
  return j;
}

inline std::string alpha_sweep_csv(const std::vector<AlphaSweepRow>& rows) {
  std::ostringstream os;
  os << "alpha,sum_type_bound,product_type_bound\n";
  for (const AlphaSweepRow& row : rows)
    os << detail::f9(row.alpha) << "," << detail::f9(row.sum_type) << ","
       << detail::f9(row.product_type) << "\n";
  return os.str();
}

// ---- scan formatting -------------------------------------------------------

struct ScanDocument {
  int sigma_level = 1;
  int grid_points = 101;
  ScanEtaResult eta;
  ScanZeta2Result zeta2;
};

inline std::string scan_text(const ScanDocument& d) {
  std::ostringstream os;
  os << "scan sigma=" << d.sigma_level << " grid=" << d.grid_points << "\n";
  os << "eta1 is |u_e1| over region: " << (d.eta.eta1_is_ue1 ? "confirmed" : "refuted") << "\n";
  os << "eta2 is c13*max{c23,s23} over region: "
     << (d.eta.eta2_is_c13_max_c23_s23 ? "confirmed" : "refuted") << "\n";
  if (d.eta.counterexample) {
    const auto& c = *d.eta.counterexample;
    os << "counterexample: sin2_th12=" << detail::f6(c[0]) << " sin2_th23=" << detail::f6(c[1])
       << " sin2_th13=" << detail::f6(c[2]) << " delta_deg=" << detail::f6(c[3]) << "\n";
  }
  os << "certificate_c13_min: " << detail::f6(d.eta.certificate_c13_min) << "\n";
  os << "certificate_rival_max: " << detail::f6(d.eta.certificate_rival_max) << "\n";
  os << "eta_bfp: " << detail::f6(d.eta.eta1_bfp) << " " << detail::f6(d.eta.eta2_bfp) << "\n";
  auto arg = [&](const std::array<double, 4>& a) {
    return "sin2_th12=" + detail::f6(a[0]) + " sin2_th23=" + detail::f6(a[1]) +
           " sin2_th13=" + detail::f6(a[2]) + " delta_deg=" + detail::f6(a[3]);
  };
  os << "max|u_mu2/u_tau3|: " << detail::f6(d.zeta2.max_ratio_mu2_tau3) << " at "
     << arg(d.zeta2.argmax_mu2_tau3) << "\n";
  os << "max|u_tau2/u_mu3|: " << detail::f6(d.zeta2.max_ratio_tau2_mu3) << " at "
     << arg(d.zeta2.argmax_tau2_mu3) << "\n";
  os << "zeta2 = c13 holds: " << (d.zeta2.holds ? "yes" : "no") << "\n";
  return os.str();
}

inline std::string scan_csv(const ScanDocument& d) {
  std::ostringstream os;
  os << "quantity,value\n";
  os << "sigma_level," << d.sigma_level << "\n";
  os << "grid_points," << d.grid_points << "\n";
  os << "eta1_is_ue1," << (d.eta.eta1_is_ue1 ? 1 : 0) << "\n";
  os << "eta2_is_c13_max_c23_s23," << (d.eta.eta2_is_c13_max_c23_s23 ? 1 : 0) << "\n";
  os << "certificate_c13_min," << detail::f9(d.eta.certificate_c13_min) << "\n";
  os << "certificate_rival_max," << detail::f9(d.eta.certificate_rival_max) << "\n";
  os << "eta1_bfp," << detail::f9(d.eta.eta1_bfp) << "\n";
  os << "eta2_bfp," << detail::f9(d.eta.eta2_bfp) << "\n";
  os << "max_ratio_mu2_tau3," << detail::f9(d.zeta2.max_ratio_mu2_tau3) << "\n";
  os << "max_ratio_tau2_mu3," << detail::f9(d.zeta2.max_ratio_tau2_mu3) << "\n";
  os << "holds," << (d.zeta2.holds ? 1 : 0) << "\n";
  return os.str();
}

inline nlohmann::json scan_json(const ScanDocument& d) {
  nlohmann::json j;
  j["sigma_level"] = d.sigma_level;
  j["grid_points"] = d.grid_points;
  j["eta1_is_ue1"] = d.eta.eta1_is_ue1;
  j["eta2_is_c13_max_c23_s23"] = d.eta.eta2_is_c13_max_c23_s23;
  if (d.eta.counterexample) j["counterexample"] = *d.eta.counterexample;
  j["certificate_c13_min"] = d.eta.certificate_c13_min;
  j["certificate_rival_max"] = d.eta.certificate_rival_max;
  j["eta1_bfp"] = d.eta.eta1_bfp;
  j["eta2_bfp"] = d.eta.eta2_bfp;
  j["max_ratio_mu2_tau3"] = d.zeta2.max_ratio_mu2_tau3;
  j["max_ratio_tau2_mu3"] = d.zeta2.max_ratio_tau2_mu3;
  j["argmax_mu2_tau3"] = d.zeta2.argmax_mu2_tau3;
  j["argmax_tau2_mu3"] = d.zeta2.argmax_tau2_mu3;
  j["holds"] = d.zeta2.holds;
  return j;
}

inline nlohmann::json verify_report_json(const verify::VerifyReport& rep) {
  nlohmann::json j;
  j["seed"] = rep.seed;
  j["pass"] = rep.pass;
  j["suites"] = nlohmann::json::array();
  for (const verify::SuiteResult& s : rep.suites) {
    nlohmann::json js;
    js["name"] = s.name;
    js["samples"] = s.samples;
    js["checks"] = s.checks;
    js["failures"] = s.failures;
    js[s.worst_label] = s.worst_value;
    if (s.failures > 0) js["first_counterexample"] = s.first_counterexample;
    j["suites"].push_back(js);
  }
  return j;
}

}  // namespace numaj
