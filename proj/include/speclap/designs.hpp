#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "speclap/graph.hpp"
#include "speclap/linalg.hpp"
#include "speclap/predicted_spectrum.hpp"

namespace speclap {

bool is_prime(int n);

/// (p, k) with p^k == q and p prime, if q is a prime power.
std::optional<std::pair<int, int>> prime_power(int q);

/// GF(p^k) as polynomials over GF(p) modulo a monic irreducible polynomial.
///
/// Elements are indices 0..q-1 whose base-p digits are the coefficients
/// (digit i = coefficient of x^i), so index order is lexicographic on the
/// coefficient vector read from the leading term down to the constant term.
/// The modulus is the first monic irreducible polynomial of degree k in that
/// same order.
class FiniteField {
 public:
  using Element = int;

  /// Throws std::invalid_argument if p is not prime or k is outside [1, 4].
  static FiniteField make(int p, int k);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }
  /// Low-to-high coefficients of the modulus, including the leading 1.
  const std::vector<int>& modulus() const { return modulus_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const { return sub(0, a); }
  Element mul(Element a, Element b) const;

  /// Nonzero square test. Throws std::invalid_argument for 0.
  bool is_square(Element x) const;

  std::vector<int> coefficients(Element a) const;
  Element from_coefficients(const std::vector<int>& c) const;

 private:
  FiniteField(int p, int k, std::vector<int> modulus);

  int p_;
  int k_;
  int q_;
  std::vector<int> modulus_;
  std::vector<bool> squares_;
};

/// Low-to-high coefficients over GF(p); true when no monic polynomial of
/// degree 1..deg/2 divides it.
bool is_irreducible(const std::vector<int>& poly, int p);

/// Quadratic-character matrix: 0 on the diagonal, +1 where a_i - a_j is a
/// nonzero square, -1 otherwise. Throws for even q.
IntMatrix paley_core(const FiniteField& f);

/// Square +-1 matrix with H H^T = n I, checked exactly on construction.
class HadamardMatrix {
 public:
  /// Throws std::invalid_argument unless `m` is a Hadamard matrix.
  explicit HadamardMatrix(IntMatrix m);

  static bool is_hadamard(const IntMatrix& m);

  int order() const { return static_cast<int>(m_.rows()); }
  const IntMatrix& matrix() const { return m_; }
  long long operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  bool is_normalized() const;

  /// One row per line, '+' for +1 and '-' for -1.
  std::string to_text() const;
  static HadamardMatrix from_text(std::string_view text);

  friend bool operator==(const HadamardMatrix&, const HadamardMatrix&) = default;

 private:
  IntMatrix m_;
};

/// [[1, 1], [1, -1]]
HadamardMatrix hadamard2();
/// Kronecker product of two Hadamard matrices.
HadamardMatrix sylvester(const HadamardMatrix& h1, const HadamardMatrix& h2);
/// Iterated Kronecker power of hadamard2(); `order` must be a power of two.
HadamardMatrix sylvester_power(int order);
/// Order q + 1 for q = 3 (mod 4): I + [[0, j^T], [-j, C]].
HadamardMatrix paley1(const FiniteField& f);
/// Order 2(q + 1) for q = 1 (mod 4):
/// S (x) [[1, 1], [1, -1]] + I (x) [[1, -1], [-1, -1]] with the symmetric
/// border S = [[0, j^T], [j, C]].
HadamardMatrix paley2(const FiniteField& f);
/// Sylvester, Paley I, Paley II, or a doubling of a smaller order, in that
/// preference. Throws std::invalid_argument when none applies.
HadamardMatrix hadamard_of_order(int order);

/// Flip rows, then columns, so the first row and column are all +1.
HadamardMatrix normalize(const HadamardMatrix& h);

/// Balanced incomplete block design given by its v x b incidence matrix.
class Design {
 public:
  /// Infers (v, b, r, k, lambda); throws std::invalid_argument unless every
  /// row sums to r, every column to k, and every pair of rows meets in lambda
  /// blocks. Needs v >= 2 and b >= 1.
  static Design from_incidence(IntMatrix incidence);

  int v() const { return v_; }
  int b() const { return b_; }
  int r() const { return r_; }
  int k() const { return k_; }
  int lambda() const { return lambda_; }
  bool is_symmetric() const { return v_ == b_ && r_ == k_; }
  const IntMatrix& incidence() const { return c_; }

  nlohmann::json to_json() const;
  /// {v, b, r, k, lambda, incidence: ["0101", ...]}; stated parameters must
  /// agree with the incidence matrix.
  static Design from_json(const nlohmann::json& j);

  friend bool operator==(const Design&, const Design&) = default;

 private:
  Design() = default;
  IntMatrix c_;
  int v_ = 0, b_ = 0, r_ = 0, k_ = 0, lambda_ = 0;
};

/// Normalise, drop the first row and column, map -1 to 0. Yields a
/// (4t-1, 2t-1, t-1) symmetric design. Throws unless the order is a
/// multiple of 4.
Design hadamard_to_design(const HadamardMatrix& h);

/// Inverse of hadamard_to_design: border with +1 and map 0 to -1.
HadamardMatrix design_to_hadamard(const Design& d);

/// Incidence matrix J - C, parameters (v, b, b-r, v-k, b-2r+lambda).
Design complement(const Design& d);

struct IncidenceGraph {
  Graph graph;
  BipartiteSplit split;  // part1 = points 0..v-1, part2 = blocks v..v+b-1
};

IncidenceGraph incidence_graph(const Design& d);

/// {sqrt(rk), sqrt(r-lambda)^{v-1}, 0^{b-v}, -sqrt(r-lambda)^{v-1}, -sqrt(rk)}.
PredictedSpectrum predicted_incidence_adjacency_spectrum(const Design& d);

/// Bipartite graph on 8t vertices: the incidence graph of the complement of
/// the Hadamard design from `h` (order 4t), plus a pendant edge u0 v0 with
/// v0 joined to every point vertex.
Graph thm41_graph(const HadamardMatrix& h);
/// Uses hadamard_of_order(4t).
Graph thm41_graph(int t);

}  // namespace speclap
