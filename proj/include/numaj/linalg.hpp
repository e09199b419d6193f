#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "numaj/errors.hpp"

namespace numaj {

using Complex = std::complex<double>;

// Dense row-major complex matrix for small problems (d <= 9 composites).
// Value semantics throughout; a default-constructed matrix is 0x0 and is
// rejected by every operation that needs data.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {
    if (rows == 0 || cols == 0)
      throw dimension_error("ComplexMatrix: rows and cols must be positive");
  }

  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0)
      throw dimension_error("ComplexMatrix: rows and cols must be positive");
    if (entries_.size() != rows * cols)
      throw dimension_error("ComplexMatrix: entry count does not match rows*cols");
    for (const Complex& z : entries_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw invariant_error("ComplexMatrix: entries must be finite");
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }
  bool square() const { return rows_ == cols_ && rows_ > 0; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  Complex trace() const {
    if (!square()) throw dimension_error("trace: matrix must be square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  std::vector<Complex> column(std::size_t j) const {
    std::vector<Complex> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  double max_abs() const {
    double m = 0.0;
    for (const Complex& z : entries_) m = std::max(m, std::abs(z));
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : entries_) s += std::norm(z);
    return std::sqrt(s);
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_)
      throw dimension_error("operator*: inner dimensions do not match");
    ComplexMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex(0.0, 0.0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    ComplexMatrix r = a;
    for (Complex& z : r.entries_) z *= s;
    return r;
  }

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw dimension_error("operator+: shapes do not match");
    ComplexMatrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
    return r;
  }

  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw dimension_error("operator-: shapes do not match");
    ComplexMatrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
    return r;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw dimension_error("max_abs_diff: shapes do not match");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

// Row/column selection of a submatrix; selections are arbitrary strictly
// increasing index sets, not necessarily contiguous.
struct SubmatrixIndex {
  std::vector<std::size_t> row_set;
  std::vector<std::size_t> col_set;

  void validate_for(std::size_t rows, std::size_t cols) const {
    auto check = [](const std::vector<std::size_t>& s, std::size_t bound, const char* what) {
      if (s.empty()) throw argument_error(std::string("SubmatrixIndex: empty ") + what);
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= bound)
          throw argument_error(std::string("SubmatrixIndex: ") + what + " index out of bounds");
        if (i > 0 && s[i] <= s[i - 1])
          throw argument_error(std::string("SubmatrixIndex: ") + what +
                               " must be strictly increasing");
      }
    };
    check(row_set, rows, "row_set");
    check(col_set, cols, "col_set");
  }
};

inline ComplexMatrix submatrix(const ComplexMatrix& m, const SubmatrixIndex& idx) {
  idx.validate_for(m.rows(), m.cols());
  ComplexMatrix r(idx.row_set.size(), idx.col_set.size());
  for (std::size_t i = 0; i < idx.row_set.size(); ++i)
    for (std::size_t j = 0; j < idx.col_set.size(); ++j)
      r(i, j) = m(idx.row_set[i], idx.col_set[j]);
  return r;
}

namespace detail {

// Advances a strictly increasing subset of {0..n-1} in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] + (k - i) < n) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), std::size_t{0});
  return c;
}

}  // namespace detail

// All (row_set, col_set) pairs with |row_set| + |col_set| = k+1 inside a d x d
// matrix, in deterministic lexicographic order (row count ascending, then row
// set, then col set).
inline std::vector<SubmatrixIndex> enumerate_submatrices(std::size_t d, std::size_t k) {
  if (d == 0) throw argument_error("enumerate_submatrices: d must be positive");
  if (k < 1 || k > 2 * d - 1)
    throw argument_error("enumerate_submatrices: k must lie in [1, 2d-1]");
  std::vector<SubmatrixIndex> out;
  for (std::size_t r = 1; r <= d && r <= k + 1; ++r) {
    const std::size_t rc = k + 1 - r;
    if (rc < 1 || rc > d) continue;
    std::vector<std::size_t> rowc = detail::first_combination(r);
    do {
      std::vector<std::size_t> colc = detail::first_combination(rc);
      do {
        out.push_back(SubmatrixIndex{rowc, colc});
      } while (detail::next_combination(colc, d));
    } while (detail::next_combination(rowc, d));
  }
  return out;
}

inline bool is_unitary(const ComplexMatrix& m, double tol = 1e-10) {
  if (!m.square()) throw dimension_error("is_unitary: matrix must be square");
  const ComplexMatrix g = m.adjoint() * m;
  double dev = 0.0;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const Complex expect = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      dev = std::max(dev, std::abs(g(i, j) - expect));
    }
  return dev <= tol;
}

struct Eigensystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // columns are the matching eigenvectors
};

namespace detail {

inline void require_hermitian(const ComplexMatrix& m, double tol, const char* who) {
  if (!m.square()) throw dimension_error(std::string(who) + ": matrix must be square");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol)
        throw argument_error(std::string(who) + ": matrix is not Hermitian within tolerance");
}

// Cyclic complex Jacobi for Hermitian matrices. Each rotation zeroes one
// off-diagonal pair; sweeps repeat until the off-diagonal Frobenius norm
// drops below 1e-14 relative to the input scale.
inline Eigensystem jacobi_hermitian(ComplexMatrix a) {
  const std::size_t n = a.rows();
  ComplexMatrix v = ComplexMatrix::identity(n);

  // exact Hermitian symmetrization of the working copy
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = Complex(a(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = z;
      a(j, i) = std::conj(z);
    }
  }

  const double scale = std::max(1.0, a.frobenius_norm());
  const double threshold = 1e-14 * scale;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * std::norm(a(p, q));
    if (std::sqrt(off) <= threshold) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = a(p, q);
        const double ag = std::abs(g);
        if (ag <= 1e-300) continue;
        const Complex phase = g / ag;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * ag);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // rows p,q of U^dag A
        for (std::size_t j = 0; j < n; ++j) {
          const Complex apj = a(p, j);
          const Complex aqj = a(q, j);
          a(p, j) = c * std::conj(phase) * apj - s * aqj;
          a(q, j) = s * std::conj(phase) * apj + c * aqj;
        }
        // columns p,q of (U^dag A) U
        for (std::size_t i = 0; i < n; ++i) {
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = c * phase * aip - s * aiq;
          a(i, q) = s * phase * aip + c * aiq;
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = c * phase * vip - s * viq;
          v(i, q) = s * phase * vip + c * viq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });

  Eigensystem es;
  es.values.resize(n);
  es.vectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    es.values[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) es.vectors(i, j) = v(i, order[j]);
  }
  return es;
}

}  // namespace detail

// Eigenvalues and eigenvectors of a Hermitian matrix, values descending.
inline Eigensystem hermitian_eigensystem(const ComplexMatrix& m, double herm_tol = 1e-10) {
  detail::require_hermitian(m, herm_tol, "hermitian_eigensystem");
  if (m.rows() == 1)
    return Eigensystem{{m(0, 0).real()}, ComplexMatrix::identity(1)};
  return detail::jacobi_hermitian(m);
}

// Eigenvalues only, descending.
inline std::vector<double> eig_hermitian(const ComplexMatrix& m, double herm_tol = 1e-10) {
  return hermitian_eigensystem(m, herm_tol).values;
}

// Largest singular value, via the Gram matrix on the smaller side.
inline double spectral_norm(const ComplexMatrix& m) {
  if (m.empty()) throw dimension_error("spectral_norm: empty matrix");
  const std::size_t n = std::min(m.rows(), m.cols());
  ComplexMatrix gram(n, n);
  if (m.rows() <= m.cols()) {
    // M M^dag
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Complex s = 0.0;
        for (std::size_t k = 0; k < m.cols(); ++k) s += m(i, k) * std::conj(m(j, k));
        gram(i, j) = (i == j) ? Complex(s.real(), 0.0) : s;
        gram(j, i) = std::conj(gram(i, j));
      }
  } else {
    // M^dag M
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Complex s = 0.0;
        for (std::size_t k = 0; k < m.rows(); ++k) s += std::conj(m(k, i)) * m(k, j);
        gram(i, j) = (i == j) ? Complex(s.real(), 0.0) : s;
        gram(j, i) = std::conj(gram(i, j));
      }
  }
  const std::vector<double> eigs = eig_hermitian(gram);
  return std::sqrt(std::max(eigs.front(), 0.0));
}

// Kronecker product, A-factor indices major (A indices vary slowest).
inline ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.empty() || b.empty()) throw dimension_error("tensor_product: empty factor");
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Complex aij = a(ia, ja);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          r(ia * b.rows() + ib, ja * b.cols() + jb) = aij * b(ib, jb);
    }
  return r;
}

enum class Subsystem { A, B };

// Partial trace over the complement of `keep`, with A-major index ordering.
inline ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t dim_a,
                                   std::size_t dim_b, Subsystem keep) {
  if (dim_a == 0 || dim_b == 0)
    throw dimension_error("partial_trace: subsystem dimensions must be positive");
  if (!rho.square() || rho.rows() != dim_a * dim_b)
    throw dimension_error("partial_trace: matrix size does not equal dim_a * dim_b");
  detail::require_hermitian(rho, 1e-10, "partial_trace");
  if (keep == Subsystem::A) {
    ComplexMatrix r(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_a; ++i)
      for (std::size_t j = 0; j < dim_a; ++j) {
        Complex s = 0.0;
        for (std::size_t b = 0; b < dim_b; ++b) s += rho(i * dim_b + b, j * dim_b + b);
        r(i, j) = s;
      }
    return r;
  }
  ComplexMatrix r(dim_b, dim_b);
  for (std::size_t i = 0; i < dim_b; ++i)
    for (std::size_t j = 0; j < dim_b; ++j) {
      Complex s = 0.0;
      for (std::size_t a = 0; a < dim_a; ++a) s += rho(a * dim_b + i, a * dim_b + j);
      r(i, j) = s;
    }
  return r;
}

}  // namespace numaj
