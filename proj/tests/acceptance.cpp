// Acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance [N ...]   (no arguments runs all ten)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "speclap/designs.hpp"
#include "speclap/enumerate.hpp"
#include "speclap/families.hpp"
#include "speclap/graph_io.hpp"
#include "speclap/nlspec.hpp"
#include "test_support.hpp"

using namespace speclap;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

bool spectrum_matches(const Spectrum& s, const std::vector<SpectrumPair>& want, double tol) {
  if (s.distinct_count() != want.size()) return false;
  for (std::size_t i = 0; i < want.size(); ++i)
    if (std::abs(s.pairs()[i].value - want[i].value) > tol || s.pairs()[i].multiplicity != want[i].multiplicity)
      return false;
  return true;
}

// Exact H H^T = n I, recomputed here rather than trusting the constructor.
bool gram_is_scalar(const IntMatrix& h) {
  const std::size_t n = h.rows();
  if (h.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long long dot = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (h(i, k) != 1 && h(i, k) != -1) return false;
        dot += h(i, k) * h(j, k);
      }
      if (dot != (i == j ? static_cast<long long>(n) : 0)) return false;
    }
  return true;
}

struct Named {
  std::string name;
  HadamardMatrix h;
};

std::vector<Named> criterion4_matrices() {
  std::vector<Named> out;
  for (int order : {2, 4, 8, 16, 32}) out.push_back({"sylvester " + std::to_string(order), sylvester_power(order)});
  for (int q : {3, 7, 11, 19, 23, 27}) {
    const auto [p, k] = *prime_power(q);
    out.push_back({"paley1 q=" + std::to_string(q), paley1(FiniteField::make(p, k))});
  }
  for (int q : {5, 9, 13}) {
    const auto [p, k] = *prime_power(q);
    out.push_back({"paley2 q=" + std::to_string(q), paley2(FiniteField::make(p, k))});
  }
  return out;
}

Outcome criterion1() {
  Outcome o;
  struct Row {
    Graph g;
    const char* name;
    std::vector<SpectrumPair> want;
  };
  const std::vector<Row> rows = {
      {unicyclic(UnicyclicSpec(2, {1})), "U2(1)", {{1.7287, 1}, {1.5, 1}, {0.7713, 1}, {0.0, 1}}},
      {unicyclic(UnicyclicSpec(3, {1, 1})), "U3(1,1)", {{1.7676, 1}, {1.6667, 1}, {1.0, 1}, {0.5657, 1}, {0.0, 1}}},
      {unicyclic(UnicyclicSpec(5, {1})), "U5(1)", {{1.8566, 1}, {1.5, 1}, {1.2975, 1}, {0.3459, 1}, {0.0, 1}}},
      {unicyclic(UnicyclicSpec(6, {1, 1})), "U6(1,1)", {{1.8762, 1}, {1.5, 2}, {0.7838, 1}, {0.34, 1}, {0.0, 1}}},
      {unicyclic(UnicyclicSpec(8, {1})), "U8(1)", {{2.0, 1}, {1.4082, 1}, {1.0, 1}, {0.5918, 1}, {0.0, 1}}},
      {unicyclic(UnicyclicSpec(9, {1, 1})), "U9(1,1)",
       {{2.0, 1}, {1.5, 1}, {1.3333, 1}, {0.6667, 1}, {0.5, 1}, {0.0, 1}}},
      {unicyclic(UnicyclicSpec(11, {1})), "U11(1)",
       {{1.8691, 1}, {1.809, 1}, {1.1759, 1}, {0.691, 1}, {0.455, 1}, {0.0, 1}}},
      {unicyclic(UnicyclicSpec(12, {1, 1})), "U12(1,1)",
       {{1.8931, 1}, {1.8259, 1}, {1.3766, 1}, {1.0, 1}, {0.4642, 1}, {0.4402, 1}, {0.0, 1}}},
      {cycle(4), "C4", {{2.0, 1}, {1.0, 2}, {0.0, 1}}},
      {cycle(5), "C5", {{1.809, 2}, {0.691, 2}, {0.0, 1}}},
      {path(4), "P4", {{2.0, 1}, {1.5, 1}, {0.5, 1}, {0.0, 1}}},
  };
  for (const auto& r : rows)
    if (!spectrum_matches(l_spectrum(r.g), r.want, kPrintedTol)) o.fail(std::string(r.name) + " spectrum differs");
  if (o.pass) o.detail = std::to_string(rows.size()) + " spectra within 5e-4";
  return o;
}

Outcome criterion2() {
  Outcome o;
  double worst = 0.0;
  int cases = 0;
  for (int n = 2; n <= 12; ++n) {
    for (int s = 1; s < n; ++s) {
      const int parts[] = {s, n - s};
      const double d = predicted_eq7(CompleteBipartiteKind{s, n}).max_deviation(l_eigenvalues(complete_multipartite(parts)));
      worst = std::max(worst, d);
      ++cases;
      if (!(d < 1e-9)) o.fail("K" + std::to_string(s) + "," + std::to_string(n - s) + " off by " + fmt(d));
    }
    for (int r = 2; r <= n; ++r) {
      if (n % r) continue;
      const std::vector<int> parts(static_cast<std::size_t>(r), n / r);
      const double d = predicted_eq7(RegularMultipartiteKind{r, n}).max_deviation(l_eigenvalues(complete_multipartite(parts)));
      worst = std::max(worst, d);
      ++cases;
      if (!(d < 1e-9)) o.fail("regular r=" + std::to_string(r) + " n=" + std::to_string(n) + " off by " + fmt(d));
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " cases, max deviation " + fmt(worst);
  return o;
}

Outcome criterion3() {
  Outcome o;
  const HadamardMatrix sources[] = {paley1(FiniteField::make(3, 1)), sylvester_power(8),
                                    paley1(FiniteField::make(11, 1))};
  double worst = 0.0;
  for (int t = 1; t <= 3; ++t) {
    const Graph g = thm41_graph(sources[t - 1]);
    if (g.order() != 8 * t) o.fail("t=" + std::to_string(t) + " wrong order");
    const auto pred = predicted_thm41(t);
    const double d = pred.max_deviation(l_eigenvalues(g));
    worst = std::max(worst, d);
    if (!(d < 1e-9)) o.fail("t=" + std::to_string(t) + " off by " + fmt(d));
    const Spectrum s = l_spectrum(g);
    const std::vector<int> want = {1, 4 * t - 1, 4 * t - 1, 1};
    std::vector<int> got;
    for (const auto& p : s.pairs()) got.push_back(p.multiplicity);
    if (got != want) o.fail("t=" + std::to_string(t) + " multiplicity pattern differs");
  }
  if (o.pass) o.detail = "t=1..3, max deviation " + fmt(worst);
  return o;
}

Outcome criterion4() {
  Outcome o;
  int designs = 0;
  for (const auto& [name, h] : criterion4_matrices()) {
    if (!gram_is_scalar(h.matrix())) o.fail(name + " fails H H^T = nI");
    if (h.order() % 4 != 0) continue;
    const int t = h.order() / 4;
    const Design d = hadamard_to_design(h);
    const Design c = complement(d);
    if (d.v() != 4 * t - 1 || d.k() != 2 * t - 1 || d.lambda() != t - 1 || !d.is_symmetric())
      o.fail(name + " design parameters wrong");
    if (c.v() != 4 * t - 1 || c.k() != 2 * t || c.lambda() != t || !c.is_symmetric())
      o.fail(name + " complement parameters wrong");
    designs += 2;
  }
  if (o.pass) o.detail = "14 matrices exact, " + std::to_string(designs) + " designs validated";
  return o;
}

Outcome criterion5() {
  Outcome o;
  int checked = 0;
  double worst = 0.0;
  for (const auto& [name, h] : criterion4_matrices()) {
    if (h.order() % 4 != 0) continue;
    const Design d = hadamard_to_design(h);
    for (const Design& des : {d, complement(d)}) {
      const IncidenceGraph ig = incidence_graph(des);
      if (!is_connected(ig.graph)) continue;
      const double dev = predicted_incidence_adjacency_spectrum(des).max_deviation(
          jacobi_eigenvalues(adjacency_matrix(ig.graph)));
      worst = std::max(worst, dev);
      ++checked;
      if (!(dev < 1e-9)) o.fail(name + " incidence spectrum off by " + fmt(dev));
    }
  }
  if (checked == 0) o.fail("no connected incidence graphs");
  if (o.pass) o.detail = std::to_string(checked) + " incidence graphs, max deviation " + fmt(worst);
  return o;
}

std::set<CanonicalForm> forms(const ScanReport& r) {
  std::set<CanonicalForm> out;
  for (const auto& h : r.hits) out.insert(*h.form);
  return out;
}

// Integer partitions of n with at least two parts, not all of size one.
void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

Outcome criterion6() {
  Outcome o;
  constexpr int kMax = 7;
  std::set<CanonicalForm> eq7;
  for (int n = 3; n <= kMax; ++n) {
    for (int s = 1; 2 * s <= n; ++s) {
      const int parts[] = {s, n - s};
      eq7.insert(canonical_form(complete_multipartite(parts)));
    }
    for (int r = 3; r < n; ++r) {
      if (n % r) continue;
      const std::vector<int> parts(static_cast<std::size_t>(r), n / r);
      eq7.insert(canonical_form(complete_multipartite(parts)));
    }
  }
  std::set<CanonicalForm> multipartite;
  for (int n = 2; n <= kMax; ++n) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    partitions(n, n, cur, all);
    for (const auto& p : all)
      if (p.size() >= 2 && p.front() >= 2) multipartite.insert(canonical_form(complete_multipartite(p)));
  }
  const auto three = scan_connected(kMax, three_distinct_including_one());
  const auto second = scan_connected(kMax, second_least_is_one());
  if (forms(three) != eq7)
    o.fail("three-with-one set has " + std::to_string(three.hits.size()) + " classes, expected " +
           std::to_string(eq7.size()));
  if (forms(second) != multipartite)
    o.fail("second-least-one set has " + std::to_string(second.hits.size()) + " classes, expected " +
           std::to_string(multipartite.size()));
  for (const auto& h : three.hits) {
    const auto v = classify_three_with_one(canonical_graph(*h.form));
    if (v.kind == ThreeWithOneVerdict::Kind::unexplained || v.kind == ThreeWithOneVerdict::Kind::not_in_class)
      o.fail("classifier disagrees on " + h.graph6);
  }
  if (o.pass)
    o.detail = std::to_string(eq7.size()) + " three-with-one classes, " + std::to_string(multipartite.size()) +
               " multipartite classes, n<=7, " + std::to_string(three.borderline.size() + second.borderline.size()) +
               " borderline";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto three = scan_unicyclic(8, distinct_count_is(3));
  const auto four = scan_unicyclic(8, distinct_count_is(4));
  const std::set<CanonicalForm> want3 = {canonical_form(cycle(4)), canonical_form(cycle(5))};
  const std::set<CanonicalForm> want4 = {canonical_form(cycle(6)), canonical_form(cycle(7)),
                                         canonical_form(unicyclic(UnicyclicSpec(2, {1}))),
                                         canonical_form(unicyclic(UnicyclicSpec(4, {1, 1, 1})))};
  auto check = [&](const ScanReport& r, const std::set<CanonicalForm>& want, const char* what) {
    std::set<CanonicalForm> got;
    for (const auto& h : r.hits) {
      if (!h.form) {
        o.fail(std::string(what) + " hit " + h.label + " has more than 8 vertices");
        return;
      }
      got.insert(*h.form);
    }
    if (got != want || r.hits.size() != want.size()) o.fail(std::string(what) + " hit set differs");
  };
  check(three, want3, "3-distinct");
  check(four, want4, "4-distinct");
  if (o.pass) o.detail = "{C4, C5} and {C6, C7, U2(1), U4(1,1,1)}";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto r = scan_bipartite_pendant(8);
  const std::set<CanonicalForm> want = {canonical_form(path(4)), canonical_form(thm41_graph(1))};
  if (forms(r) != want || r.hits.size() != 2) o.fail(std::to_string(r.hits.size()) + " survivors, expected P4 and t=1");
  if (o.pass) o.detail = "survivors P4 and the order-8 construction";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(0x5eed2024);
  std::uniform_int_distribution<int> order(2, 12);
  std::uniform_real_distribution<double> density(0.15, 0.8);
  int lemma23_samples = 0, bipartite_samples = 0, parity_samples = 0;
  double worst23 = 0.0, worst_factor = 0.0;
  for (int i = 0; i < 500; ++i) {
    Graph g;
    if (i % 2 == 0) {
      g = speclap::testing::random_graph(rng, order(rng), density(rng));
    } else {
      const int n = std::max(order(rng), 2);
      const int n1 = 1 + static_cast<int>(rng() % static_cast<unsigned>(n / 2));
      g = speclap::testing::random_connected_bipartite(rng, n1, n - n1, density(rng));
    }
    const auto l22 = check_lemma22(g, kLemma22Tol);
    if (l22.status == CheckStatus::fail) o.fail("lemma22 fails on " + to_graph6(g));
    const auto l23 = check_lemma23(g);
    if (l23.status != CheckStatus::not_applicable) {
      ++lemma23_samples;
      worst23 = std::max(worst23, l23.residual);
      if (!(l23.residual < 1e-12) || !l23.pass()) o.fail("lemma23 fails on " + to_graph6(g));
    }
    if (is_bipartite(g) && count_isolated(g) == 0 && g.order() >= 2) {
      ++bipartite_samples;
      const auto f = bipartite_factorization(g);
      std::vector<double> pred = f.predicted_l_eigenvalues();
      std::vector<double> got = l_eigenvalues(g);
      std::sort(pred.begin(), pred.end());
      std::sort(got.begin(), got.end());
      double d = 0.0;
      for (std::size_t k = 0; k < got.size(); ++k) d = std::max(d, std::abs(pred[k] - got[k]));
      worst_factor = std::max(worst_factor, d);
      if (pred.size() != got.size() || !(d < 1e-7)) o.fail("factorization off on " + to_graph6(g));
      const auto par = corollary21_parity(g);
      if (par.status != CheckStatus::not_applicable) {
        ++parity_samples;
        if (!par.pass()) o.fail("parity fails on " + to_graph6(g));
      }
    }
  }
  if (lemma23_samples == 0 || bipartite_samples == 0 || parity_samples == 0) o.fail("a sub-suite had no samples");
  if (o.pass)
    o.detail = "500 graphs; lemma23 on " + std::to_string(lemma23_samples) + " (max residual " + fmt(worst23) +
               "), factorization on " + std::to_string(bipartite_samples) + " (max " + fmt(worst_factor) +
               "), parity on " + std::to_string(parity_samples);
  return o;
}

Outcome criterion10() {
  Outcome o;
  double worst = 0.0;
  for (int a = 1; a <= 8; ++a) {
    const U4Factors f = u4_symmetric_factors(a);
    const double disc = f.quadratic[1] * f.quadratic[1] - 4.0 * f.quadratic[0] * f.quadratic[2];
    const double want_disc = 4.0 * a * a + 8.0 * a + 1.0;
    if (!(disc > 0) || std::abs(disc - want_disc) > 1e-9) o.fail("a=" + std::to_string(a) + " discriminant");
    std::vector<double> pred(static_cast<std::size_t>(3 * a - 3), 1.0);
    pred.push_back(0.0);
    pred.push_back(-f.linear[1] / f.linear[0]);
    const auto [r1, r2] = quadratic_roots(f.quadratic[0], f.quadratic[1], f.quadratic[2]);
    for (int k = 0; k < 2; ++k) {
      pred.push_back(r1);
      pred.push_back(r2);
    }
    std::vector<double> got = l_eigenvalues(unicyclic(UnicyclicSpec(4, {a, a, a})));
    std::sort(pred.begin(), pred.end());
    std::sort(got.begin(), got.end());
    if (pred.size() != got.size()) {
      o.fail("a=" + std::to_string(a) + " size mismatch");
      continue;
    }
    for (std::size_t k = 0; k < got.size(); ++k) worst = std::max(worst, std::abs(pred[k] - got[k]));
    if (!(worst < 1e-8)) o.fail("a=" + std::to_string(a) + " off by " + fmt(worst));
  }
  if (o.pass) o.detail = "a=1..8, max deviation " + fmt(worst);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "printed spectra", 1.0, criterion1},
      {2, "complete bipartite and regular multipartite spectra", 5.0, criterion2},
      {3, "pendant-join construction t=1..3", 5.0, criterion3},
      {4, "Hadamard matrices and designs", 5.0, criterion4},
      {5, "incidence graph adjacency spectra", 10.0, criterion5},
      {6, "exhaustive connected scan n<=7", 300.0, criterion6},
      {7, "unicyclic classification", 10.0, criterion7},
      {8, "bipartite pendant scan n<=8", 3600.0, criterion8},
      {9, "randomized property suites", 30.0, criterion9},
      {10, "U4(a,a,a) factorization", 1.0, criterion10},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  int failures = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) o.fail("took " + fmt(secs) + " s, budget " + fmt(c.budget_s) + " s");
    std::printf("%s criterion %d: %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
