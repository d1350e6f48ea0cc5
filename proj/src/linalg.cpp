#include "speclap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

namespace speclap {

namespace {

constexpr int kMaxSweeps = 100;

double frobenius(std::span<const double> a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

double off_diagonal_norm(std::span<const double> a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
  return std::sqrt(s);
}

// One cyclic sweep of rotations over all (p, q), p < q. `v`, when non-empty,
// accumulates the rotations as columns.
void jacobi_sweep(std::span<double> a, std::size_t n, std::span<double> v) {
  for (std::size_t p = 0; p + 1 < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const double apq = a[p * n + q];
      if (apq == 0.0) continue;
      const double app = a[p * n + p];
      const double aqq = a[q * n + q];
      // Negligible against both diagonal entries: drop it.
      if (std::abs(apq) * 1e18 < std::abs(app) && std::abs(apq) * 1e18 < std::abs(aqq)) {
        a[p * n + q] = a[q * n + p] = 0.0;
        continue;
      }
      const double theta = (aqq - app) / (2.0 * apq);
      const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;

      for (std::size_t k = 0; k < n; ++k) {
        const double akp = a[k * n + p];
        const double akq = a[k * n + q];
        a[k * n + p] = c * akp - s * akq;
        a[k * n + q] = s * akp + c * akq;
      }
      for (std::size_t k = 0; k < n; ++k) {
        const double apk = a[p * n + k];
        const double aqk = a[q * n + k];
        a[p * n + k] = c * apk - s * aqk;
        a[q * n + k] = s * apk + c * aqk;
      }
      a[p * n + q] = a[q * n + p] = 0.0;

      if (!v.empty()) {
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }
}

void run_jacobi(std::span<double> a, std::size_t n, std::span<double> v, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("jacobi: tolerance must be positive");
  const double threshold = tol * std::max(1.0, frobenius(a));
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a, n) <= threshold) return;
    jacobi_sweep(a, n, v);
  }
  const double off = off_diagonal_norm(a, n);
  if (off > threshold) throw ConvergenceError(n, kMaxSweeps, off);
}

}  // namespace

SymMatrix::SymMatrix(std::size_t order) : dense_(order, order) {
  if (order == 0) throw std::invalid_argument("SymMatrix: order must be at least 1");
}

SymMatrix SymMatrix::from_matrix(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("SymMatrix: matrix is not square");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) throw std::invalid_argument("SymMatrix: matrix is not symmetric");
  SymMatrix s(m.rows());
  s.dense_ = m;
  return s;
}

void SymMatrix::set(std::size_t i, std::size_t j, double value) {
  dense_(i, j) = value;
  dense_(j, i) = value;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < order(); ++i) t += dense_(i, i);
  return t;
}

ConvergenceError::ConvergenceError(std::size_t order, int sweeps, double off_norm)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "jacobi: no convergence for order-" << order << " matrix after " << sweeps
           << " sweeps (off-diagonal norm " << off_norm << ")";
        return os.str();
      }()),
      sweeps_(sweeps) {}

EigenDecomposition jacobi_eigen(const SymMatrix& m, double tol) {
  const std::size_t n = m.order();
  std::vector<double> a(m.dense().data().begin(), m.dense().data().end());
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  run_jacobi(a, n, v, tol);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * n + x] > a[y * n + y]; });

  EigenDecomposition out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t src = order[c];
    out.values[c] = a[src * n + src];
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v[r * n + src];
  }
  return out;
}

void jacobi_eigenvalues_inplace(std::span<double> a, std::size_t n, std::span<double> out, double tol) {
  run_jacobi(a, n, {}, tol);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i * n + i];
  std::sort(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(n), std::greater<>());
}

std::vector<double> jacobi_eigenvalues(const SymMatrix& m, double tol) {
  const std::size_t n = m.order();
  std::vector<double> a(m.dense().data().begin(), m.dense().data().end());
  std::vector<double> values(n);
  jacobi_eigenvalues_inplace(a, n, values, tol);
  return values;
}

Spectrum::Spectrum(std::vector<SpectrumPair> pairs, double cluster_tol)
    : pairs_(std::move(pairs)), cluster_tol_(cluster_tol) {}

int Spectrum::total_multiplicity() const {
  int total = 0;
  for (const auto& p : pairs_) total += p.multiplicity;
  return total;
}

int Spectrum::multiplicity_of(double value, double tol) const {
  for (const auto& p : pairs_)
    if (std::abs(p.value - value) <= tol) return p.multiplicity;
  return 0;
}

std::vector<double> Spectrum::expanded() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(total_multiplicity()));
  for (const auto& p : pairs_) out.insert(out.end(), static_cast<std::size_t>(p.multiplicity), p.value);
  return out;
}

Spectrum cluster_spectrum(std::span<const double> values, double cluster_tol) {
  if (!(cluster_tol > 0.0)) throw std::invalid_argument("cluster_spectrum: tolerance must be positive");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  std::vector<SpectrumPair> pairs;
  double sum = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (count > 0 && sorted[i - 1] - sorted[i] > cluster_tol) {
      pairs.push_back({sum / count, count});
      sum = 0.0;
      count = 0;
    }
    sum += sorted[i];
    ++count;
  }
  if (count > 0) pairs.push_back({sum / count, count});
  return Spectrum(std::move(pairs), cluster_tol);
}

std::pair<double, double> quadratic_roots(double a2, double a1, double a0) {
  if (a2 == 0.0) throw std::invalid_argument("quadratic_roots: leading coefficient is zero");
  const double disc = a1 * a1 - 4.0 * a2 * a0;
  if (disc < 0.0) throw std::domain_error("quadratic_roots: negative discriminant");
  const double sq = std::sqrt(disc);
  // Cancellation-free form: q = -(a1 + sign(a1) sqrt(disc)) / 2.
  const double q = -0.5 * (a1 + (a1 >= 0.0 ? sq : -sq));
  double r1 = 0.0;
  double r2 = 0.0;
  if (q == 0.0) {
    r1 = r2 = 0.0;
  } else {
    r1 = q / a2;
    r2 = a0 / q;
  }
  if (r1 < r2) std::swap(r1, r2);
  return {r1, r2};
}

void write_csv(std::ostream& os, const Matrix& m) {
  const auto flags = os.flags();
  const auto prec = os.precision();
  os << std::setprecision(17);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << '\n';
  }
  os.flags(flags);
  os.precision(prec);
}

}  // namespace speclap
