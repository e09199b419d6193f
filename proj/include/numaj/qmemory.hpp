#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "numaj/bounds.hpp"
#include "numaj/errors.hpp"
#include "numaj/linalg.hpp"

namespace numaj {

// Bipartite density matrix with A-major index ordering (A indices vary
// slowest); this is the single tensor convention used throughout.
struct BipartiteState {
  ComplexMatrix rho_ab;
  std::size_t dim_a;
  std::size_t dim_b;

  BipartiteState(ComplexMatrix rho, std::size_t da, std::size_t db)
      : rho_ab(std::move(rho)), dim_a(da), dim_b(db) {
    if (da == 0 || db == 0)
      throw dimension_error("BipartiteState: subsystem dimensions must be positive");
    if (!rho_ab.square() || rho_ab.rows() != da * db)
      throw dimension_error("BipartiteState: matrix size does not equal dim_a * dim_b");
    if (!is_density_matrix(rho_ab))
      throw argument_error("BipartiteState: not a valid density matrix");
  }

  ComplexMatrix reduced_a() const { return partial_trace(rho_ab, dim_a, dim_b, Subsystem::A); }
  ComplexMatrix reduced_b() const { return partial_trace(rho_ab, dim_a, dim_b, Subsystem::B); }
};

// Von Neumann entropy in nats; eigenvalues in [-1e-10, 0) are clamped to 0.
inline double von_neumann(const ComplexMatrix& rho) {
  if (!is_density_matrix(rho))
    throw argument_error("von_neumann: not a valid density matrix");
  double h = 0.0;
  for (double lambda : eig_hermitian(rho)) {
    if (lambda < 0.0) lambda = 0.0;
    if (lambda > kEntropyZero) h -= lambda * std::log(lambda);
  }
  return h;
}

// (Phi_X (x) id)(rho_AB): project subsystem A onto the orthonormal basis
// given as the columns of `basis`, killing all A-off-diagonal blocks in that
// basis. Trace-preserving and idempotent.
inline BipartiteState dephase(const BipartiteState& state, const ComplexMatrix& basis) {
  if (!basis.square() || basis.rows() != state.dim_a)
    throw dimension_error("dephase: basis shape does not match subsystem A");
  if (!is_unitary(basis, 1e-10))
    throw argument_error("dephase: basis columns are not orthonormal");
  const std::size_t da = state.dim_a, db = state.dim_b;
  const ComplexMatrix bi = tensor_product(basis, ComplexMatrix::identity(db));
  ComplexMatrix t = bi.adjoint() * state.rho_ab * bi;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      if (i == j) continue;
      for (std::size_t r = 0; r < db; ++r)
        for (std::size_t c = 0; c < db; ++c) t(i * db + r, j * db + c) = 0.0;
    }
  return BipartiteState(bi * t * bi.adjoint(), da, db);
}

// S(A|B) = S(rho_AB) - S(rho_B); negative values witness entanglement.
inline double conditional_entropy(const BipartiteState& state) {
  return von_neumann(state.rho_ab) - von_neumann(state.reduced_b());
}

// Right-hand side of the memory-assisted Coles-Piani relation.
inline double memory_bound_cp(double eta1, double eta2, double cond_ab) {
  return coles_piani(eta1, eta2) + cond_ab;
}

// Right-hand side of the memory-assisted Maassen-Uffink-type relation.
inline double memory_bound_bccrr(double eta1, double cond_ab) {
  return maassen_uffink(eta1) + cond_ab;
}

struct MemoryRelationReport {
  double s_xb;        // S(X|B)
  double s_zb;        // S(Z|B)
  double cond_ab;     // S(A|B)
  double cp_rhs;
  double bccrr_rhs;
};

namespace detail {

inline std::string serialize_matrix(const ComplexMatrix& m) {
  std::ostringstream os;
  os.precision(17);
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ";" : "");
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? "," : "") << m(i, j).real() << (m(i, j).imag() < 0 ? "" : "+")
         << m(i, j).imag() << "i";
  }
  os << "]";
  return os.str();
}

}  // namespace detail

// Evaluates both memory bounds for the basis pair related by w on subsystem A
// and asserts LHS >= CP-RHS >= BCCRR-RHS within tol. Throws
// property_violation carrying the state when the inequality chain fails.
inline MemoryRelationReport verify_memory_relation(const BipartiteState& state,
                                                   const ComplexMatrix& w, double tol = 1e-9) {
  if (!w.square() || w.rows() != state.dim_a)
    throw dimension_error("verify_memory_relation: w must act on subsystem A");
  if (!is_unitary(w, 1e-10))
    throw argument_error("verify_memory_relation: w is not unitary");

  const double s_b = von_neumann(state.reduced_b());
  const BipartiteState rho_xb = dephase(state, ComplexMatrix::identity(state.dim_a));
  const BipartiteState rho_zb = dephase(state, w);

  MemoryRelationReport r{};
  r.s_xb = von_neumann(rho_xb.rho_ab) - s_b;
  r.s_zb = von_neumann(rho_zb.rho_ab) - s_b;
  r.cond_ab = von_neumann(state.rho_ab) - s_b;
  const auto [eta1, eta2] = eta_pair(w);
  r.cp_rhs = memory_bound_cp(eta1, eta2, r.cond_ab);
  r.bccrr_rhs = memory_bound_bccrr(eta1, r.cond_ab);

  if (r.s_xb + r.s_zb < r.cp_rhs - tol || r.cp_rhs < r.bccrr_rhs - tol) {
    std::ostringstream os;
    os.precision(17);
    os << "verify_memory_relation: inequality failed; S(X|B)=" << r.s_xb
       << " S(Z|B)=" << r.s_zb << " cp_rhs=" << r.cp_rhs << " bccrr_rhs=" << r.bccrr_rhs
       << " rho_ab=" << detail::serialize_matrix(state.rho_ab)
       << " w=" << detail::serialize_matrix(w);
    throw property_violation(os.str());
  }
  return r;
}

}  // namespace numaj
