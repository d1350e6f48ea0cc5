#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace speclap {

inline constexpr double kDefaultJacobiTol = 1e-12;
inline constexpr double kDefaultClusterTol = 1e-6;

/// Dense row-major matrix. Used with `double` for spectra and with
/// `long long` for exact Hadamard/design arithmetic.
template <typename T>
class BasicMatrix {
 public:
  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> data() const { return data_; }

  BasicMatrix transpose() const {
    BasicMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    BasicMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        if (aik == T{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend BasicMatrix operator*(T s, BasicMatrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const BasicMatrix&, const BasicMatrix&) = default;

 private:
  void require_same_shape(const BasicMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw std::invalid_argument("matrix sum: dimension mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = BasicMatrix<double>;
using IntMatrix = BasicMatrix<long long>;

/// Block (i, j) of the result is m(i, j) * n.
template <typename T>
BasicMatrix<T> kronecker(const BasicMatrix<T>& m, const BasicMatrix<T>& n) {
  BasicMatrix<T> out(m.rows() * n.rows(), m.cols() * n.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const T mij = m(i, j);
      for (std::size_t k = 0; k < n.rows(); ++k)
        for (std::size_t l = 0; l < n.cols(); ++l)
          out(i * n.rows() + k, j * n.cols() + l) = mij * n(k, l);
    }
  return out;
}

/// Real symmetric matrix. Writes go through set(), which mirrors the entry,
/// so entry(i, j) == entry(j, i) holds exactly.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t order);

  /// Throws std::invalid_argument unless `m` is square and exactly symmetric.
  static SymMatrix from_matrix(const Matrix& m);

  std::size_t order() const { return dense_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return dense_(i, j); }
  void set(std::size_t i, std::size_t j, double value);
  const Matrix& dense() const { return dense_; }
  double trace() const;

 private:
  Matrix dense_;
};

struct EigenDecomposition {
  std::vector<double> values;  // descending
  Matrix vectors;              // column i pairs with values[i]
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(std::size_t order, int sweeps, double off_norm);
  int sweeps() const { return sweeps_; }

 private:
  int sweeps_;
};

/// Cyclic Jacobi rotations. `tol` bounds the off-diagonal Frobenius norm
/// relative to max(1, ||m||_F).
EigenDecomposition jacobi_eigen(const SymMatrix& m, double tol = kDefaultJacobiTol);

/// Eigenvalues only (descending); skips accumulating the rotation matrix.
std::vector<double> jacobi_eigenvalues(const SymMatrix& m, double tol = kDefaultJacobiTol);

/// In-place eigenvalue kernel on a row-major n x n buffer; the buffer is
/// destroyed. Used by hot loops that manage their own storage.
void jacobi_eigenvalues_inplace(std::span<double> a, std::size_t n, std::span<double> out,
                                double tol = kDefaultJacobiTol);

struct SpectrumPair {
  double value = 0.0;
  int multiplicity = 0;
  friend bool operator==(const SpectrumPair&, const SpectrumPair&) = default;
};

/// Distinct eigenvalues (cluster means) with multiplicities, descending.
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(std::vector<SpectrumPair> pairs, double cluster_tol);

  const std::vector<SpectrumPair>& pairs() const { return pairs_; }
  double cluster_tol() const { return cluster_tol_; }
  std::size_t distinct_count() const { return pairs_.size(); }
  int total_multiplicity() const;
  bool empty() const { return pairs_.empty(); }

  /// Multiplicity of the cluster within `tol` of `value`, 0 if none.
  int multiplicity_of(double value, double tol) const;
  bool contains(double value, double tol) const { return multiplicity_of(value, tol) > 0; }

  /// Each value repeated by its multiplicity, descending.
  std::vector<double> expanded() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<SpectrumPair> pairs_;
  double cluster_tol_ = kDefaultClusterTol;
};

/// Single-linkage clustering of the sorted values: a new cluster starts when
/// the gap to the previous value exceeds `cluster_tol`.
Spectrum cluster_spectrum(std::span<const double> values, double cluster_tol = kDefaultClusterTol);

/// Roots of a2 x^2 + a1 x + a0, descending. Throws on a2 == 0 or a negative
/// discriminant.
std::pair<double, double> quadratic_roots(double a2, double a1, double a0);

/// Row-major CSV, full precision. Debugging aid.
void write_csv(std::ostream& os, const Matrix& m);

}  // namespace speclap
