#include <stdexcept>
#include <string>

#include "speclap/designs.hpp"

namespace speclap {

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

bool is_power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

// [[0, j^T], [sign * j, C]]
IntMatrix bordered_core(const FiniteField& f, long long sign) {
  const IntMatrix c = paley_core(f);
  const std::size_t q = c.rows();
  IntMatrix s(q + 1, q + 1);
  for (std::size_t i = 1; i <= q; ++i) {
    s(0, i) = 1;
    s(i, 0) = sign;
    for (std::size_t j = 1; j <= q; ++j) s(i, j) = c(i - 1, j - 1);
  }
  return s;
}

std::optional<FiniteField> field_of_order(int q) {
  const auto pk = prime_power(q);
  if (!pk || pk->second > 4) return std::nullopt;
  return FiniteField::make(pk->first, pk->second);
}

}  // namespace

HadamardMatrix::HadamardMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!is_hadamard(m_)) throw std::invalid_argument("HadamardMatrix: not a Hadamard matrix");
}

bool HadamardMatrix::is_hadamard(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0 || m.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != 1 && m(i, j) != -1) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k) {
      long long dot = 0;
      for (std::size_t j = 0; j < n; ++j) dot += m(i, j) * m(k, j);
      if (dot != 0) return false;
    }
  return true;
}

bool HadamardMatrix::is_normalized() const {
  for (std::size_t i = 0; i < m_.rows(); ++i)
    if (m_(0, i) != 1 || m_(i, 0) != 1) return false;
  return true;
}

std::string HadamardMatrix::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    for (std::size_t j = 0; j < m_.cols(); ++j) out += m_(i, j) > 0 ? '+' : '-';
    out += '\n';
  }
  return out;
}

HadamardMatrix HadamardMatrix::from_text(std::string_view text) {
  std::vector<std::string> rows;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      if (!cur.empty()) rows.push_back(std::move(cur));
      cur.clear();
    } else if (ch == '+' || ch == '-') {
      cur += ch;
    } else if (ch != '\r' && ch != ' ' && ch != '\t') {
      throw std::invalid_argument(std::string("HadamardMatrix::from_text: unexpected character '") + ch + "'");
    }
  }
  if (!cur.empty()) rows.push_back(std::move(cur));
  if (rows.empty()) throw std::invalid_argument("HadamardMatrix::from_text: empty input");
  IntMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("HadamardMatrix::from_text: matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j] == '+' ? 1 : -1;
  }
  return HadamardMatrix(std::move(m));
}

HadamardMatrix hadamard2() { return HadamardMatrix(from_rows({{1, 1}, {1, -1}})); }

HadamardMatrix sylvester(const HadamardMatrix& h1, const HadamardMatrix& h2) {
  return HadamardMatrix(kronecker(h1.matrix(), h2.matrix()));
}

HadamardMatrix sylvester_power(int order) {
  if (!is_power_of_two(order)) throw std::invalid_argument("sylvester: order must be a power of two");
  HadamardMatrix h(from_rows({{1}}));
  for (int n = 1; n < order; n *= 2) h = sylvester(h, hadamard2());
  return h;
}

HadamardMatrix paley1(const FiniteField& f) {
  if (f.order() % 4 != 3) throw std::invalid_argument("paley1: field order must be 3 mod 4");
  IntMatrix s = bordered_core(f, -1);
  for (std::size_t i = 0; i < s.rows(); ++i) s(i, i) += 1;
  return HadamardMatrix(std::move(s));
}

HadamardMatrix paley2(const FiniteField& f) {
  if (f.order() % 4 != 1) throw std::invalid_argument("paley2: field order must be 1 mod 4");
  const IntMatrix s = bordered_core(f, 1);
  const IntMatrix a = from_rows({{1, 1}, {1, -1}});
  const IntMatrix b = from_rows({{1, -1}, {-1, -1}});
  return HadamardMatrix(kronecker(s, a) + kronecker(IntMatrix::identity(s.rows()), b));
}

HadamardMatrix hadamard_of_order(int order) {
  if (order == 1) return HadamardMatrix(from_rows({{1}}));
  if (order < 1 || (order != 2 && order % 4 != 0))
    throw std::invalid_argument("hadamard: order " + std::to_string(order) + " is not 1, 2 or a multiple of 4");
  if (is_power_of_two(order)) return sylvester_power(order);
  if ((order - 1) % 4 == 3) {
    if (auto f = field_of_order(order - 1)) return paley1(*f);
  }
  if (order % 2 == 0 && (order / 2 - 1) % 4 == 1) {
    if (auto f = field_of_order(order / 2 - 1)) return paley2(*f);
  }
  if (order % 8 == 0) {
    try {
      return sylvester(hadamard_of_order(order / 2), hadamard2());
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::invalid_argument("hadamard: no construction available for order " + std::to_string(order));
}

HadamardMatrix normalize(const HadamardMatrix& h) {
  IntMatrix m = h.matrix();
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    if (m(i, 0) < 0)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = -m(i, j);
  for (std::size_t j = 0; j < n; ++j)
    if (m(0, j) < 0)
      for (std::size_t i = 0; i < n; ++i) m(i, j) = -m(i, j);
  return HadamardMatrix(std::move(m));
}

}  // namespace speclap
