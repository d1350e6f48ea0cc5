#include "speclap/nlspec.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace speclap {

namespace {

double inv_sqrt_degree(int d) { return d > 0 ? 1.0 / std::sqrt(static_cast<double>(d)) : 0.0; }

void settle(CheckReport& r, double residual, double tol) {
  r.residual = residual;
  r.status = residual < tol ? CheckStatus::pass : CheckStatus::fail;
}

CheckReport part(std::string name, bool ok, double slack = 0.0) {
  CheckReport r;
  r.check = std::move(name);
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  r.residual = slack;
  return r;
}

std::string describe_count(std::size_t got, std::size_t want) {
  std::ostringstream os;
  os << "graph has " << got << " distinct L-eigenvalues, expected " << want;
  return os.str();
}

// Nonzero clusters of `s` against `expected` (descending). Empty string on
// success, otherwise the reason.
std::string shape_mismatch(const Spectrum& s, std::span<const double> expected) {
  if (s.distinct_count() != expected.size() + 1) return describe_count(s.distinct_count(), expected.size() + 1);
  if (std::abs(s.pairs().back().value) > kIdentityTol) return "smallest L-eigenvalue is not 0";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (std::abs(s.pairs()[i].value - expected[i]) > kPrintedTol) {
      std::ostringstream os;
      os << "spectrum mismatch: supplied " << expected[i] << ", computed " << s.pairs()[i].value;
      return os.str();
    }
  }
  return {};
}

double sum_inverse_degrees(const Graph& g, VertexSet s) {
  double total = 0.0;
  for (int w : members(s)) total += 1.0 / g.degree(w);
  return total;
}

}  // namespace

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix a(static_cast<std::size_t>(std::max(1, g.order())));
  for (auto [u, v] : g.edges()) a.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v), 1.0);
  return a;
}

SymMatrix normalized_laplacian(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  SymMatrix l(std::max<std::size_t>(1, n));
  for (std::size_t u = 0; u < n; ++u) l.set(u, u, g.degree(static_cast<int>(u)) > 0 ? 1.0 : 0.0);
  for (auto [u, v] : g.edges())
    l.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v),
          -1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v)));
  return l;
}

LaplacianBundle build_laplacian(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<double> degrees(n);
  for (std::size_t u = 0; u < n; ++u) degrees[u] = g.degree(static_cast<int>(u));

  SymMatrix astar(std::max<std::size_t>(1, n));
  for (auto [u, v] : g.edges())
    astar.set(static_cast<std::size_t>(u), static_cast<std::size_t>(v),
              inv_sqrt_degree(g.degree(u)) * inv_sqrt_degree(g.degree(v)));
  return {g, adjacency_matrix(g), std::move(degrees), normalized_laplacian(g), std::move(astar)};
}

std::vector<double> l_eigenvalues(const Graph& g) {
  if (g.order() == 0) return {};
  return jacobi_eigenvalues(normalized_laplacian(g));
}

Spectrum l_spectrum(const Graph& g, double cluster_tol) {
  const auto values = l_eigenvalues(g);
  return cluster_spectrum(values, cluster_tol);
}

Spectrum adjacency_spectrum(const Graph& g, double cluster_tol) {
  if (g.order() == 0) return cluster_spectrum({}, cluster_tol);
  const auto values = jacobi_eigenvalues(adjacency_matrix(g));
  return cluster_spectrum(values, cluster_tol);
}

double second_least(std::span<const double> values) {
  if (values.size() < 2) throw std::invalid_argument("second_least: need at least two eigenvalues");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  return v[1];
}

std::vector<double> BipartiteFactorization::predicted_l_eigenvalues() const {
  std::vector<double> out;
  for (double x : xi) {
    const double root = std::sqrt(std::max(0.0, x));
    out.push_back(1.0 + root);
    out.push_back(1.0 - root);
  }
  const int extra = static_cast<int>(part2_vertices.size()) - static_cast<int>(part1_vertices.size());
  out.insert(out.end(), static_cast<std::size_t>(extra), 1.0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

BipartiteFactorization bipartite_factorization(const Graph& g) {
  auto split = is_bipartite(g);
  if (!split) throw std::invalid_argument("bipartite_factorization: graph is not bipartite");
  if (count_isolated(g) > 0) throw std::invalid_argument("bipartite_factorization: graph has isolated vertices");
  if (split->n1() > split->n2()) std::swap(split->part1, split->part2);

  BipartiteFactorization f;
  f.split = *split;
  f.part1_vertices = members(split->part1);
  f.part2_vertices = members(split->part2);
  const std::size_t n1 = f.part1_vertices.size();
  const std::size_t n2 = f.part2_vertices.size();
  f.biadjacency = Matrix(n1, n2);
  f.scaled = Matrix(n1, n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      const int u = f.part1_vertices[i];
      const int v = f.part2_vertices[j];
      if (!g.adjacent(u, v)) continue;
      f.biadjacency(i, j) = 1.0;
      f.scaled(i, j) = inv_sqrt_degree(g.degree(u)) * inv_sqrt_degree(g.degree(v));
    }
  if (n1 > 0) {
    const Matrix gram = f.scaled * f.scaled.transpose();
    // Products of the same factors in the same order: exactly symmetric.
    f.xi = jacobi_eigenvalues(SymMatrix::from_matrix(gram));
  }
  return f;
}

EigenTriple::EigenTriple(double alpha, double beta, std::optional<double> gamma)
    : alpha_(alpha), beta_(beta), gamma_(gamma) {
  const double smallest = gamma ? *gamma : beta;
  if (!(alpha > beta) || (gamma && !(beta > *gamma)) || !(smallest > 0.0))
    throw std::invalid_argument("EigenTriple: need alpha > beta (> gamma) > 0");
  if (alpha > 2.0 + kPrintedTol) throw std::invalid_argument("EigenTriple: alpha exceeds 2");
}

std::optional<EigenTriple> EigenTriple::from_spectrum(const Spectrum& s) {
  const auto& p = s.pairs();
  if (p.size() == 3) return EigenTriple(p[0].value, p[1].value);
  if (p.size() == 4) return EigenTriple(p[0].value, p[1].value, p[2].value);
  return std::nullopt;
}

CheckReport check_lemma22(const Graph& g, double tol) {
  const int n = g.order();
  if (n < 2) return CheckReport::not_applicable("lemma22", "needs at least two vertices");

  std::vector<double> lam = l_eigenvalues(g);  // descending
  const double least = lam.back();
  const double second = lam[static_cast<std::size_t>(n - 2)];
  const double largest = lam.front();
  const double ratio = static_cast<double>(n) / (n - 1);
  const int isolated = count_isolated(g);
  const bool complete = g.edge_count() == n * (n - 1) / 2;
  const bool connected = is_connected(g);
  const auto comps = components(g);

  std::vector<CheckReport> parts;
  parts.push_back(part("(i) least eigenvalue is 0", std::abs(least) < tol, std::abs(least)));

  double trace = 0.0;
  for (double x : lam) trace += x;
  {
    const bool bound = trace <= n + tol;
    const bool equality = std::abs(trace - n) < tol;
    parts.push_back(part("(ii) sum <= n, equality iff no isolated vertices", bound && (equality == (isolated == 0)),
                         std::max(0.0, trace - n)));
  }
  {
    const bool bound = second <= ratio + tol;
    const bool equality = std::abs(second - ratio) < tol;
    parts.push_back(part("(iii) second-least <= n/(n-1), equality iff complete", bound && (equality == complete),
                         std::max(0.0, second - ratio)));
  }
  if (complete) {
    parts.push_back(CheckReport::not_applicable("(iv) second-least <= 1 when non-complete", "graph is complete"));
  } else {
    parts.push_back(part("(iv) second-least <= 1 when non-complete", second <= 1.0 + tol, std::max(0.0, second - 1.0)));
  }
  if (isolated > 0) {
    parts.push_back(CheckReport::not_applicable("(v) largest >= n/(n-1)", "graph has isolated vertices"));
  } else {
    parts.push_back(part("(v) largest >= n/(n-1)", largest >= ratio - tol, std::max(0.0, ratio - largest)));
  }
  {
    const auto zeros = std::count_if(lam.begin(), lam.end(), [&](double x) { return std::abs(x) < tol; });
    bool ok = zeros == static_cast<long>(comps.size());
    if (connected) ok = ok && second > tol;
    auto r = part("(vi) zero multiplicity equals component count", ok);
    r.witness = {{"zero_multiplicity", zeros}, {"components", comps.size()}};
    parts.push_back(std::move(r));
  }
  {
    std::vector<double> merged;
    for (VertexSet c : comps) {
      const auto sub = l_eigenvalues(induced_subgraph(g, c));
      merged.insert(merged.end(), sub.begin(), sub.end());
    }
    std::sort(merged.begin(), merged.end(), std::greater<>());
    double dev = 0.0;
    for (std::size_t i = 0; i < lam.size(); ++i) dev = std::max(dev, std::abs(lam[i] - merged[i]));
    parts.push_back(part("(vii) spectrum is the union over components", dev < tol, dev));
  }
  {
    bool nontrivial_bipartite_component = false;
    for (VertexSet c : comps)
      if (set_size(c) >= 2 && is_bipartite(induced_subgraph(g, c))) nontrivial_bipartite_component = true;
    const bool bounded = largest <= 2.0 + tol;
    const bool top_is_two = std::abs(largest - 2.0) < tol;
    parts.push_back(part("(viii) eigenvalues <= 2, largest = 2 iff nontrivial bipartite component",
                         bounded && (top_is_two == nontrivial_bipartite_component), std::max(0.0, largest - 2.0)));
  }
  {
    // Symmetry is checked with multiplicities on the non-isolated part: an
    // isolated vertex contributes a 0 with no partner 2.
    VertexSet active = 0;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) > 0) active |= vertex_bit(v);
    if (!active) {
      parts.push_back(CheckReport::not_applicable("(ix) bipartite iff spectrum symmetric about 1", "graph has no edges"));
    } else {
      const Graph core = induced_subgraph(g, active);
      auto values = l_eigenvalues(core);
      std::vector<double> mirrored;
      for (double x : values) mirrored.push_back(2.0 - x);
      std::sort(values.begin(), values.end());
      std::sort(mirrored.begin(), mirrored.end());
      double dev = 0.0;
      for (std::size_t i = 0; i < values.size(); ++i) dev = std::max(dev, std::abs(values[i] - mirrored[i]));
      const bool symmetric = dev < tol;
      const bool bipartite = is_bipartite(g).has_value();
      auto r = part("(ix) bipartite iff spectrum symmetric about 1", symmetric == bipartite, bipartite ? dev : 0.0);
      r.witness = {{"bipartite", bipartite}, {"asymmetry", dev}};
      parts.push_back(std::move(r));
    }
  }
  auto report = CheckReport::aggregate("lemma22", std::move(parts));
  report.witness = {{"n", n}, {"tolerance", tol}};
  return report;
}

double eq1_residual(const Graph& g, std::span<const double> nonzero_values) {
  const auto n = static_cast<std::size_t>(g.order());
  const SymMatrix l = normalized_laplacian(g);
  Matrix lhs = Matrix::identity(n);
  double product = 1.0;
  for (double lambda : nonzero_values) {
    Matrix factor = l.dense();
    for (std::size_t i = 0; i < n; ++i) factor(i, i) -= lambda;
    lhs = lhs * factor;
    product *= lambda;
  }
  const double sign = nonzero_values.size() % 2 == 0 ? 1.0 : -1.0;
  const double two_m = 2.0 * g.edge_count();
  double worst = 0.0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const double rhs = sign * product *
                         std::sqrt(static_cast<double>(g.degree(static_cast<int>(u))) * g.degree(static_cast<int>(v))) /
                         two_m;
      worst = std::max(worst, std::abs(lhs(u, v) - rhs));
    }
  return worst;
}

CheckReport check_eq1(const Graph& g, std::span<const double> nonzero_values) {
  if (g.order() < 1 || g.edge_count() == 0 || !is_connected(g))
    return CheckReport::not_applicable("eq1", "graph must be connected with at least one edge");
  CheckReport r;
  r.check = "eq1";
  settle(r, eq1_residual(g, nonzero_values), kIdentityTol);
  r.witness = {{"values", std::vector<double>(nonzero_values.begin(), nonzero_values.end())}, {"m", g.edge_count()}};
  return r;
}

CheckReport check_eq1(const Graph& g, const Spectrum& s) {
  std::vector<double> nonzero;
  for (const auto& p : s.pairs())
    if (std::abs(p.value) > kIdentityTol) nonzero.push_back(p.value);
  return check_eq1(g, nonzero);
}

CheckReport check_three_ev_identities(const Graph& g, const EigenTriple& t) {
  const char* name = "three-ev";
  if (!is_connected(g) || g.edge_count() == 0) return CheckReport::not_applicable(name, "graph must be connected");
  if (t.gamma()) return CheckReport::not_applicable(name, "expects two nonzero eigenvalues");
  const double expected[] = {t.alpha(), t.beta()};
  if (auto why = shape_mismatch(l_spectrum(g), expected); !why.empty()) return CheckReport::not_applicable(name, why);

  const double a = t.alpha();
  const double b = t.beta();
  const double c = a * b / (2.0 * g.edge_count());
  const int n = g.order();

  double vertex_worst = 0.0;
  for (int u = 0; u < n; ++u) {
    const double du = g.degree(u);
    const double lhs = sum_inverse_degrees(g, g.neighbors(u));
    const double rhs = c * du * du - (a - 1.0) * (b - 1.0) * du;
    vertex_worst = std::max(vertex_worst, std::abs(lhs - rhs));
  }
  double pair_worst = 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double lhs = sum_inverse_degrees(g, common_neighbors(g, u, v));
      double rhs = c * g.degree(u) * g.degree(v);
      if (g.adjacent(u, v)) rhs -= (a + b - 2.0);
      pair_worst = std::max(pair_worst, std::abs(lhs - rhs));
    }

  CheckReport vr;
  vr.check = "vertex degree identity";
  settle(vr, vertex_worst, kIdentityTol);
  CheckReport pr;
  pr.check = "pair common-neighbour identity";
  settle(pr, pair_worst, kIdentityTol);
  auto r = CheckReport::aggregate(name, {vr, pr});
  r.witness = {{"alpha", a}, {"beta", b}, {"m", g.edge_count()}};
  return r;
}

CheckReport check_lemma24(const Graph& g, const EigenTriple& t) {
  const char* name = "lemma24";
  if (!is_connected(g) || g.edge_count() == 0) return CheckReport::not_applicable(name, "graph must be connected");
  if (t.gamma()) return CheckReport::not_applicable(name, "expects two nonzero eigenvalues");
  const double expected[] = {t.alpha(), t.beta()};
  if (auto why = shape_mismatch(l_spectrum(g), expected); !why.empty()) return CheckReport::not_applicable(name, why);

  const double a = t.alpha();
  const double b = t.beta();
  const int m = g.edge_count();
  const int n = g.order();
  CheckReport r;
  r.check = name;

  if (b > 1.0 + kPrintedTol) {
    r.status = CheckStatus::fail;
    r.residual = b - 1.0;
    r.note = "beta exceeds 1";
    return r;
  }
  if (std::abs(b - 1.0) <= kPrintedTol) {
    int violations = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.adjacent(u, v) && g.neighbors(u) != g.neighbors(v)) ++violations;
    r.status = violations == 0 ? CheckStatus::pass : CheckStatus::fail;
    r.residual = violations;
    r.witness = {{"branch", "beta=1"}, {"violating_pairs", violations}};
    return r;
  }
  const double bound = 2.0 * m * (a - 1.0) * (b - 1.0) / (a * b);  // <= 0
  double worst = 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      const double gap = std::abs(static_cast<double>(g.degree(u) - g.degree(v)));
      worst = std::max(worst, gap - std::abs(bound));
    }
  r.witness = {{"branch", "beta<1"}, {"bound", std::abs(bound)}};
  settle(r, std::max(0.0, worst), kIdentityTol);
  return r;
}

CheckReport check_four_ev_diagonal(const Graph& g, const EigenTriple& t) {
  const char* name = "four-ev";
  if (!is_connected(g) || g.edge_count() == 0) return CheckReport::not_applicable(name, "graph must be connected");
  if (!t.gamma()) return CheckReport::not_applicable(name, "expects three nonzero eigenvalues");
  const double expected[] = {t.alpha(), t.beta(), *t.gamma()};
  if (auto why = shape_mismatch(l_spectrum(g), expected); !why.empty()) return CheckReport::not_applicable(name, why);

  const double a = t.alpha();
  const double b = t.beta();
  const double c = *t.gamma();
  const double rhs_coeff = a * b * c / (2.0 * g.edge_count());
  double worst = 0.0;
  double triangle_total = 0.0;
  for (int u = 0; u < g.order(); ++u) {
    double triangles = 0.0;
    for (int v : members(g.neighbors(u)))
      for (int w : members(g.neighbors(u) & g.neighbors(v))) triangles += 1.0 / (g.degree(v) * g.degree(w));
    triangle_total += triangles;
    const double du = g.degree(u);
    const double lhs = triangles + (a + b + c - 3.0) * sum_inverse_degrees(g, g.neighbors(u)) +
                       (a - 1.0) * (b - 1.0) * (c - 1.0) * du;
    worst = std::max(worst, std::abs(lhs - rhs_coeff * du * du));
  }
  CheckReport r;
  r.check = name;
  settle(r, worst, kIdentityTol);
  r.witness = {{"alpha", a}, {"beta", b}, {"gamma", c}, {"triangle_term_total", triangle_total}};
  return r;
}

CheckReport check_bipartite_four_ev(const Graph& g, double alpha) {
  const char* name = "bipartite-four-ev";
  if (!is_connected(g) || g.edge_count() == 0) return CheckReport::not_applicable(name, "graph must be connected");
  const auto split = is_bipartite(g);
  if (!split) return CheckReport::not_applicable(name, "graph is not bipartite");
  if (!(alpha > 0.0 && alpha < 1.0)) return CheckReport::not_applicable(name, "alpha must lie in (0, 1)");
  const double expected[] = {2.0, 2.0 - alpha, alpha};
  if (auto why = shape_mismatch(l_spectrum(g), expected); !why.empty()) return CheckReport::not_applicable(name, why);

  const double m = g.edge_count();
  const double shift = (1.0 - alpha) * (1.0 - alpha);
  const double coeff = alpha * (2.0 - alpha) / m;
  double vertex_worst = 0.0;
  for (int u = 0; u < g.order(); ++u) {
    const double du = g.degree(u);
    const double lhs = sum_inverse_degrees(g, g.neighbors(u));
    vertex_worst = std::max(vertex_worst, std::abs(lhs - (shift * du + coeff * du * du)));
  }
  double pair_worst = 0.0;
  for (VertexSet side : {split->part1, split->part2}) {
    const auto vs = members(side);
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        const double lhs = sum_inverse_degrees(g, common_neighbors(g, vs[i], vs[j]));
        pair_worst = std::max(pair_worst, std::abs(lhs - coeff * g.degree(vs[i]) * g.degree(vs[j])));
      }
  }
  CheckReport vr;
  vr.check = "vertex identity";
  settle(vr, vertex_worst, kIdentityTol);
  CheckReport pr;
  pr.check = "same-side pair identity";
  settle(pr, pair_worst, kIdentityTol);
  auto r = CheckReport::aggregate(name, {vr, pr});
  r.witness = {{"alpha", alpha}, {"m", g.edge_count()}};
  return r;
}

Lemma23Vector lemma23_eigenvector(const Graph& g, const DuplicateClass& cls, int i) {
  const int p = static_cast<int>(cls.vertices.size());
  const int q = static_cast<int>(cls.shared_neighbors.size());
  if (p < 2 || q < 1) throw std::invalid_argument("lemma23_eigenvector: class needs p >= 2 and q >= 1");
  if (i < 1 || i > p - 1)
    throw std::out_of_range("lemma23_eigenvector: index " + std::to_string(i) + " outside [1, " +
                            std::to_string(p - 1) + "]");

  const auto n = static_cast<std::size_t>(g.order());
  Lemma23Vector out;
  out.vector.assign(n, 0.0);
  out.vector[static_cast<std::size_t>(cls.vertices[static_cast<std::size_t>(i - 1)])] = 1.0;
  out.vector[static_cast<std::size_t>(cls.vertices.back())] = -1.0;
  out.eigenvalue = cls.kind == DuplicateKind::independent ? 1.0 : static_cast<double>(p + q) / (p + q - 1);

  const SymMatrix l = normalized_laplacian(g);
  for (std::size_t r = 0; r < n; ++r) {
    double lx = 0.0;
    for (std::size_t c = 0; c < n; ++c) lx += l(r, c) * out.vector[c];
    out.residual = std::max(out.residual, std::abs(lx - out.eigenvalue * out.vector[r]));
  }
  return out;
}

CheckReport check_lemma23(const Graph& g, double cluster_tol) {
  const auto classes = duplicate_classes(g);
  if (classes.empty()) return CheckReport::not_applicable("lemma23", "no duplicate-vertex classes");
  const Spectrum s = l_spectrum(g, cluster_tol);
  std::vector<CheckReport> parts;
  for (const auto& cls : classes) {
    const int p = static_cast<int>(cls.vertices.size());
    double worst = 0.0;
    double eigenvalue = 0.0;
    for (int i = 1; i < p; ++i) {
      const auto x = lemma23_eigenvector(g, cls, i);
      worst = std::max(worst, x.residual);
      eigenvalue = x.eigenvalue;
    }
    const int mult = s.multiplicity_of(eigenvalue, std::max(cluster_tol, kIdentityTol));
    CheckReport r;
    r.check = cls.kind == DuplicateKind::independent ? "independent class" : "clique class";
    r.residual = worst;
    r.status = (worst < 1e-12 && mult >= p - 1) ? CheckStatus::pass : CheckStatus::fail;
    r.witness = {{"vertices", cls.vertices},
                 {"shared_neighbors", cls.shared_neighbors},
                 {"eigenvalue", eigenvalue},
                 {"multiplicity", mult},
                 {"required", p - 1}};
    parts.push_back(std::move(r));
  }
  return CheckReport::aggregate("lemma23", std::move(parts));
}

const char* to_string(ThreeWithOneVerdict::Kind k) {
  switch (k) {
    case ThreeWithOneVerdict::Kind::complete_bipartite: return "CompleteBipartite";
    case ThreeWithOneVerdict::Kind::regular_multipartite: return "RegularMultipartite";
    case ThreeWithOneVerdict::Kind::not_in_class: return "NotInClass";
    case ThreeWithOneVerdict::Kind::unexplained: return "Unexplained";
  }
  return "unknown";
}

ThreeWithOneVerdict classify_three_with_one(const Graph& g, double cluster_tol) {
  if (g.order() < 3 || !is_connected(g))
    throw std::invalid_argument("classify_three_with_one: graph must be connected with n >= 3");
  ThreeWithOneVerdict v;
  v.spectrum = l_spectrum(g, cluster_tol);
  const bool in_class = v.spectrum.distinct_count() == 3 && v.spectrum.contains(1.0, cluster_tol);
  if (!in_class) return v;

  const int n = g.order();
  const auto parts = is_complete_multipartite(g);
  v.kind = ThreeWithOneVerdict::Kind::unexplained;
  if (!parts) return v;
  if (parts->size() == 2) {
    v.kind = ThreeWithOneVerdict::Kind::complete_bipartite;
    v.s = parts->front();
  } else {
    const bool equal = std::all_of(parts->begin(), parts->end(), [&](int x) { return x == parts->front(); });
    const int r = static_cast<int>(parts->size());
    if (equal && r >= 3 && r <= n - 1) {
      v.kind = ThreeWithOneVerdict::Kind::regular_multipartite;
      v.r = r;
      v.part_size = parts->front();
    }
  }
  return v;
}

CheckReport corollary21_parity(const Graph& g, double cluster_tol) {
  const char* name = "cor21";
  if (!is_bipartite(g)) return CheckReport::not_applicable(name, "graph is not bipartite");
  const auto classes = duplicate_classes(g);
  const auto it = std::find_if(classes.begin(), classes.end(),
                               [](const DuplicateClass& c) { return c.kind == DuplicateKind::independent; });
  if (it == classes.end()) return CheckReport::not_applicable(name, "no two vertices share a neighbourhood");
  const auto count = l_spectrum(g, cluster_tol).distinct_count();
  CheckReport r;
  r.check = name;
  r.status = count % 2 == 1 ? CheckStatus::pass : CheckStatus::fail;
  r.witness = {{"distinct", count}, {"class", it->vertices}};
  return r;
}

CheckReport check_corollary20(const Graph& g, double tol) {
  const char* name = "cor20";
  const int n = g.order();
  if (n < 2 || !is_connected(g)) return CheckReport::not_applicable(name, "graph must be connected with n >= 2");
  if (g.edge_count() == n * (n - 1) / 2) return CheckReport::not_applicable(name, "graph is complete");
  const auto values = l_eigenvalues(g);
  const double second = second_least(values);
  const bool multipartite = is_complete_multipartite(g).has_value();
  const bool equality = std::abs(second - 1.0) <= tol;
  CheckReport r;
  r.check = name;
  r.residual = std::max(0.0, second - 1.0);
  r.status = (second <= 1.0 + tol && equality == multipartite) ? CheckStatus::pass : CheckStatus::fail;
  r.witness = {{"second_least", second}, {"complete_multipartite", multipartite}};
  return r;
}

CheckReport check_diameter_bound(const Graph& g, double cluster_tol) {
  const char* name = "diameter-bound";
  if (g.order() < 1 || !is_connected(g)) return CheckReport::not_applicable(name, "graph must be connected");
  const int d = diameter(g);
  const auto s = l_spectrum(g, cluster_tol).distinct_count();
  CheckReport r;
  r.check = name;
  r.status = d <= static_cast<int>(s) - 1 ? CheckStatus::pass : CheckStatus::fail;
  r.witness = {{"diameter", d}, {"distinct", s}};
  return r;
}

}  // namespace speclap
