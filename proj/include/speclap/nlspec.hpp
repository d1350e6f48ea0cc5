#pragma once

#include <optional>
#include <span>
#include <vector>

#include "speclap/graph.hpp"
#include "speclap/linalg.hpp"
#include "speclap/report.hpp"

namespace speclap {

// Tolerance ladder.
inline constexpr double kEigenResidualTol = 1e-8;
inline constexpr double kIdentityTol = 1e-6;
inline constexpr double kPrintedTol = 5e-4;
inline constexpr double kLemma22Tol = 1e-7;

/// A, D, the normalized Laplacian L and A* = D^{-1/2} A D^{-1/2}.
/// Isolated vertices get L(u, u) = 0 and zero rows in A*.
struct LaplacianBundle {
  Graph graph;
  SymMatrix adjacency;
  std::vector<double> degrees;
  SymMatrix laplacian;
  SymMatrix normalized_adjacency;
};

LaplacianBundle build_laplacian(const Graph& g);
SymMatrix normalized_laplacian(const Graph& g);
SymMatrix adjacency_matrix(const Graph& g);

/// Raw L-eigenvalues, descending.
std::vector<double> l_eigenvalues(const Graph& g);
Spectrum l_spectrum(const Graph& g, double cluster_tol = kDefaultClusterTol);
Spectrum adjacency_spectrum(const Graph& g, double cluster_tol = kDefaultClusterTol);

/// Second-smallest raw L-eigenvalue (lambda_{n-1}); requires n >= 2.
double second_least(std::span<const double> descending_values);

/// Bipartite graph split with n1 <= n2; B is the n1 x n2 biadjacency block,
/// B* = D1^{-1/2} B D2^{-1/2}, xi the eigenvalues of B* B*^T (descending).
struct BipartiteFactorization {
  BipartiteSplit split;
  std::vector<int> part1_vertices;
  std::vector<int> part2_vertices;
  Matrix biadjacency;
  Matrix scaled;
  std::vector<double> xi;

  /// {1 +- sqrt(xi_i)} together with 1 repeated n2 - n1 times, descending.
  std::vector<double> predicted_l_eigenvalues() const;
};

/// Throws std::invalid_argument if g is not bipartite or has isolated vertices.
BipartiteFactorization bipartite_factorization(const Graph& g);

/// Nonzero eigenvalues alpha > beta (> gamma) > 0 with alpha <= 2.
class EigenTriple {
 public:
  EigenTriple(double alpha, double beta, std::optional<double> gamma = std::nullopt);

  /// Nonzero clusters of a spectrum with exactly 3 (or 4) distinct values.
  static std::optional<EigenTriple> from_spectrum(const Spectrum& s);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  std::optional<double> gamma() const { return gamma_; }

 private:
  double alpha_;
  double beta_;
  std::optional<double> gamma_;
};

/// Basic L-spectrum facts, one report part each: (i) least eigenvalue 0;
/// (ii) trace bound; (iii)/(iv) second-least bounds; (v) largest-eigenvalue
/// bound; (vi) zero multiplicity = component count; (vii) union over
/// components; (viii) eigenvalues <= 2 with 2 iff a nontrivial bipartite
/// component; (ix) bipartite iff the spectrum is symmetric about 1.
CheckReport check_lemma22(const Graph& g, double tol = kLemma22Tol);

/// Max-abs entrywise residual of prod (L - l_i I) against
/// (-1)^{s-1} (prod l_i) D^{1/2} J D^{1/2} / (2m).
double eq1_residual(const Graph& g, std::span<const double> nonzero_values);
CheckReport check_eq1(const Graph& g, std::span<const double> nonzero_values);
/// Uses the nonzero clusters of `s`.
CheckReport check_eq1(const Graph& g, const Spectrum& s);

/// Per-vertex degree identity and per-pair common-neighbour identity for a
/// connected graph with spectrum {alpha, beta, 0}.
CheckReport check_three_ev_identities(const Graph& g, const EigenTriple& t);

/// Non-adjacent pairs: same neighbourhood when beta = 1, degree-gap bound
/// otherwise.
CheckReport check_lemma24(const Graph& g, const EigenTriple& t);

/// Diagonal identity for spectrum {alpha, beta, gamma, 0}; the triangle sum
/// runs over ordered neighbour pairs (v, w), so each triangle through u
/// counts twice.
CheckReport check_four_ev_diagonal(const Graph& g, const EigenTriple& t);

/// Bipartite graphs with spectrum {2, 2 - alpha, alpha, 0}, 0 < alpha < 1.
CheckReport check_bipartite_four_ev(const Graph& g, double alpha);

struct Lemma23Vector {
  std::vector<double> vector;
  double eigenvalue = 0.0;
  double residual = 0.0;  // ||L x - eigenvalue x||_inf
};

/// x(v_i) = 1, x(v_p) = -1, zero elsewhere; 1 <= i <= p - 1. Predicted
/// eigenvalue 1 for independent classes, (p+q)/(p+q-1) for cliques.
/// Throws std::out_of_range on a bad index.
Lemma23Vector lemma23_eigenvector(const Graph& g, const DuplicateClass& cls, int i);

/// Every duplicate class: eigenvector residuals and multiplicity >= p - 1.
CheckReport check_lemma23(const Graph& g, double cluster_tol = kDefaultClusterTol);

struct ThreeWithOneVerdict {
  enum class Kind { complete_bipartite, regular_multipartite, not_in_class, unexplained };
  Kind kind = Kind::not_in_class;
  int s = 0;          // complete_bipartite: parts (s, n - s), s <= n - s
  int r = 0;          // regular_multipartite: r parts
  int part_size = 0;  // regular_multipartite: n / r
  Spectrum spectrum;
};

const char* to_string(ThreeWithOneVerdict::Kind k);

/// Verdict is not_in_class iff the spectrum does not have exactly three
/// distinct values with one equal to 1. `unexplained` would be a
/// counterexample to the classification and is never expected.
ThreeWithOneVerdict classify_three_with_one(const Graph& g, double cluster_tol = kDefaultClusterTol);

/// Bipartite graph with two vertices sharing a neighbourhood has an odd
/// number of distinct L-eigenvalues.
CheckReport corollary21_parity(const Graph& g, double cluster_tol = kDefaultClusterTol);

/// Connected non-complete graph: lambda_{n-1} <= 1 with equality iff
/// complete multipartite.
CheckReport check_corollary20(const Graph& g, double tol = kIdentityTol);

/// Lower bound on the number of distinct eigenvalues: diameter <= s - 1.
CheckReport check_diameter_bound(const Graph& g, double cluster_tol = kDefaultClusterTol);

}  // namespace speclap
