#include <stdexcept>
#include <string>

#include "speclap/designs.hpp"

namespace speclap {

namespace {

int ipow(int base, int exp) {
  int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<int> digits(int value, int p, int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = value % p;
    value /= p;
  }
  return out;
}

int mod(int a, int p) { return ((a % p) + p) % p; }

// Remainder of `num` modulo the monic polynomial `den`, coefficients low to high.
std::vector<int> poly_rem(std::vector<int> num, const std::vector<int>& den, int p) {
  const std::size_t dd = den.size() - 1;
  for (std::size_t top = num.size(); top-- > dd;) {
    const int lead = num[top];
    if (lead == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) {
      int& slot = num[top - dd + i];
      slot = mod(slot - lead * den[i], p);
    }
  }
  num.resize(dd);
  return num;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> prime_power(int q) {
  if (q < 2) return std::nullopt;
  for (int p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    if (!is_prime(p)) return std::nullopt;
    int k = 0;
    int rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (rest != 1) return std::nullopt;
    return std::pair{p, k};
  }
  return std::nullopt;
}

bool is_irreducible(const std::vector<int>& poly, int p) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    const int count = ipow(p, d);
    for (int idx = 0; idx < count; ++idx) {
      std::vector<int> divisor = digits(idx, p, d);
      divisor.push_back(1);
      const auto rem = poly_rem(poly, divisor, p);
      bool zero = true;
      for (int c : rem) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), q_(ipow(p, k)), modulus_(std::move(modulus)), squares_(static_cast<std::size_t>(q_), false) {
  for (Element a = 1; a < q_; ++a) squares_[static_cast<std::size_t>(mul(a, a))] = true;
}

FiniteField FiniteField::make(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("gf_make: " + std::to_string(p) + " is not prime");
  if (k < 1 || k > 4) throw std::invalid_argument("gf_make: extension degree must be in [1, 4]");
  const int count = ipow(p, k);
  for (int idx = 0; idx < count; ++idx) {
    std::vector<int> candidate = digits(idx, p, k);
    candidate.push_back(1);
    if (is_irreducible(candidate, p)) return FiniteField(p, k, std::move(candidate));
  }
  throw std::logic_error("gf_make: no irreducible polynomial found");
}

std::vector<int> FiniteField::coefficients(Element a) const {
  if (a < 0 || a >= q_) throw std::out_of_range("FiniteField: element out of range");
  return digits(a, p_, k_);
}

FiniteField::Element FiniteField::from_coefficients(const std::vector<int>& c) const {
  Element out = 0;
  for (std::size_t i = c.size(); i-- > 0;) out = out * p_ + mod(c[i], p_);
  return out;
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  auto x = coefficients(a);
  const auto y = coefficients(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod(x[i] + y[i], p_);
  return from_coefficients(x);
}

FiniteField::Element FiniteField::sub(Element a, Element b) const {
  auto x = coefficients(a);
  const auto y = coefficients(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod(x[i] - y[i], p_);
  return from_coefficients(x);
}

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  const auto x = coefficients(a);
  const auto y = coefficients(b);
  std::vector<int> prod(static_cast<std::size_t>(2 * k_ - 1), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) prod[i + j] = mod(prod[i + j] + x[i] * y[j], p_);
  return from_coefficients(poly_rem(std::move(prod), modulus_, p_));
}

bool FiniteField::is_square(Element x) const {
  if (x == 0) throw std::invalid_argument("is_square: zero is excluded");
  if (x < 0 || x >= q_) throw std::out_of_range("is_square: element out of range");
  return squares_[static_cast<std::size_t>(x)];
}

IntMatrix paley_core(const FiniteField& f) {
  const int q = f.order();
  if (q % 2 == 0) throw std::invalid_argument("paley_core: field order must be odd");
  IntMatrix c(static_cast<std::size_t>(q), static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      if (i == j) continue;
      c(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = f.is_square(f.sub(i, j)) ? 1 : -1;
    }
  return c;
}

}  // namespace speclap
