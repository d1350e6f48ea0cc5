#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "speclap/graph.hpp"
#include "speclap/predicted_spectrum.hpp"

namespace speclap {

Graph complete(int n);
Graph complete_multipartite(std::span<const int> parts);
Graph cycle(int n);
Graph path(int n);

/// Unicyclic graphs of diameter at most three. Numbering:
///   U1 = K3; U2(a), U3(a,b), U4(a,b,c): triangle with a, b, c pendants on
///   its first, second, third vertex; U5(a): triangle plus a vertex u0
///   joined to triangle vertex 0, with a pendants on u0; U6(a,b): U5(a) plus
///   b pendants on triangle vertex 0; U7 = C4; U8(a): C4 with a pendants on
///   one vertex; U9(a,b): C4 with a, b pendants on two adjacent vertices;
///   U10 = C5; U11(a), U12(a,b): as U8/U9 on C5; U13 = C6; U14 = C7.
/// Cycle vertices are labelled first (0..k-1), then u0 for U5/U6, then the
/// pendants in parameter order.
class UnicyclicSpec {
 public:
  /// Throws std::invalid_argument on a bad family index, wrong arity, or a
  /// parameter below 1.
  UnicyclicSpec(int family, std::vector<int> params = {});

  int family() const { return family_; }
  const std::vector<int>& params() const { return params_; }
  static int arity(int family);

  /// "U4(1,1,1)"
  std::string label() const;

  friend bool operator==(const UnicyclicSpec&, const UnicyclicSpec&) = default;

 private:
  int family_;
  std::vector<int> params_;
};

Graph unicyclic(const UnicyclicSpec& spec);

struct CompleteBipartiteKind {
  int s;
  int n;
};
struct RegularMultipartiteKind {
  int r;
  int n;
};

/// Spectrum of K_{s,n-s}: {2, 1^{n-2}, 0}.
PredictedSpectrum predicted_eq7(CompleteBipartiteKind k);
/// Spectrum of K_{n/r,...,n/r}: {(r/(r-1))^{r-1}, 1^{n-r}, 0}. Accepts
/// r <= n (r = n is K_n) so the complete graph case can be checked too.
PredictedSpectrum predicted_eq7(RegularMultipartiteKind k);

enum class PartSide { first, second };

/// Adds u0, v0 with edge u0 v0 and joins v0 to every vertex of the chosen
/// part. New labels: u0 = n, v0 = n + 1.
Graph pendant_join(const Graph& gprime, const BipartiteSplit& split, PartSide side);
/// Split from is_bipartite(); throws std::invalid_argument if not bipartite.
Graph pendant_join(const Graph& gprime, PartSide side);

/// {2, (1 + 1/sqrt(4t+2))^{4t-1}, (1 - 1/sqrt(4t+2))^{4t-1}, 0} on 8t vertices.
PredictedSpectrum predicted_thm41(int t);

/// Factorisation x (x-1)^{3a-3} p1(x) p2(x)^2 of the L-characteristic
/// polynomial of U4(a,a,a), up to a constant.
struct U4Factors {
  std::array<double, 2> linear;     // p1 = linear[0] x + linear[1]
  std::array<double, 3> quadratic;  // p2 = quadratic[0] x^2 + quadratic[1] x + quadratic[2]
  int power_of_x_minus_one = 0;
  int power_of_x = 1;

  double discriminant() const;
  PredictedSpectrum spectrum() const;
};

U4Factors u4_symmetric_factors(int a);

/// Family names: Kn, Kmulti:n1,n2,..., Cn, Pn, U1..U14 with ":a[,b[,c]]",
/// thm41:t. Throws std::invalid_argument on unknown or malformed names.
Graph family_graph(std::string_view name);

}  // namespace speclap
