#include <gtest/gtest.h>

#include <cmath>

#include "speclap/designs.hpp"
#include "speclap/families.hpp"
#include "speclap/nlspec.hpp"

using namespace speclap;

namespace {

struct Printed {
  UnicyclicSpec spec;
  std::vector<SpectrumPair> spectrum;
};

void expect_printed(const Graph& g, const std::vector<SpectrumPair>& want, const std::string& what) {
  const Spectrum s = l_spectrum(g);
  ASSERT_EQ(s.distinct_count(), want.size()) << what;
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(s.pairs()[i].value, want[i].value, kPrintedTol) << what << " cluster " << i;
    EXPECT_EQ(s.pairs()[i].multiplicity, want[i].multiplicity) << what << " cluster " << i;
  }
}

}  // namespace

TEST(Families, BasicConstructors) {
  EXPECT_EQ(complete(5).edge_count(), 10);
  EXPECT_EQ(cycle(7).edge_count(), 7);
  EXPECT_EQ(path(1).edge_count(), 0);
  const int parts[] = {2, 3};
  const Graph k23 = complete_multipartite(parts);
  EXPECT_EQ(k23.edge_count(), 6);
  EXPECT_FALSE(k23.adjacent(0, 1));
  EXPECT_TRUE(k23.adjacent(1, 2));
  EXPECT_THROW(cycle(2), std::invalid_argument);
  EXPECT_THROW(complete(0), std::invalid_argument);
  const int bad[] = {2, 0};
  EXPECT_THROW(complete_multipartite(bad), std::invalid_argument);
}

TEST(Unicyclic, SpecValidationAndLabels) {
  EXPECT_THROW(UnicyclicSpec(0), std::invalid_argument);
  EXPECT_THROW(UnicyclicSpec(15), std::invalid_argument);
  EXPECT_THROW(UnicyclicSpec(2), std::invalid_argument);
  EXPECT_THROW(UnicyclicSpec(4, {1, 1}), std::invalid_argument);
  EXPECT_THROW(UnicyclicSpec(3, {1, 0}), std::invalid_argument);
  EXPECT_EQ(UnicyclicSpec(4, {1, 2, 3}).label(), "U4(1,2,3)");
  EXPECT_EQ(UnicyclicSpec(13).label(), "U13");
}

TEST(Unicyclic, EveryFamilyIsUnicyclicWithSmallDiameter) {
  for (int f = 1; f <= 14; ++f) {
    std::vector<int> params(static_cast<std::size_t>(UnicyclicSpec::arity(f)), 2);
    const Graph g = unicyclic(UnicyclicSpec(f, params));
    EXPECT_TRUE(is_connected(g)) << f;
    EXPECT_EQ(g.edge_count(), g.order()) << f;
    EXPECT_LE(diameter(g), 3) << f;
  }
  EXPECT_EQ(unicyclic(UnicyclicSpec(7)), cycle(4));
  EXPECT_EQ(unicyclic(UnicyclicSpec(14)), cycle(7));
  EXPECT_EQ(unicyclic(UnicyclicSpec(6, {2, 3})).order(), 3 + 1 + 2 + 3);
}

TEST(Unicyclic, PrintedSpectra) {
  const std::vector<Printed> table = {
      {UnicyclicSpec(2, {1}), {{1.7287, 1}, {1.5000, 1}, {0.7713, 1}, {0.0, 1}}},
      {UnicyclicSpec(3, {1, 1}), {{1.7676, 1}, {1.6667, 1}, {1.0, 1}, {0.5657, 1}, {0.0, 1}}},
      {UnicyclicSpec(5, {1}), {{1.8566, 1}, {1.5000, 1}, {1.2975, 1}, {0.3459, 1}, {0.0, 1}}},
      {UnicyclicSpec(6, {1, 1}), {{1.8762, 1}, {1.5000, 2}, {0.7838, 1}, {0.3400, 1}, {0.0, 1}}},
      {UnicyclicSpec(8, {1}), {{2.0, 1}, {1.4082, 1}, {1.0, 1}, {0.5918, 1}, {0.0, 1}}},
      {UnicyclicSpec(9, {1, 1}), {{2.0, 1}, {1.5000, 1}, {1.3333, 1}, {0.6667, 1}, {0.5000, 1}, {0.0, 1}}},
      {UnicyclicSpec(11, {1}), {{1.8691, 1}, {1.8090, 1}, {1.1759, 1}, {0.6910, 1}, {0.4550, 1}, {0.0, 1}}},
      {UnicyclicSpec(12, {1, 1}),
       {{1.8931, 1}, {1.8259, 1}, {1.3766, 1}, {1.0, 1}, {0.4642, 1}, {0.4402, 1}, {0.0, 1}}},
      {UnicyclicSpec(7), {{2.0, 1}, {1.0, 2}, {0.0, 1}}},
      {UnicyclicSpec(10), {{1.8090, 2}, {0.6910, 2}, {0.0, 1}}},
  };
  for (const auto& row : table) expect_printed(unicyclic(row.spec), row.spectrum, row.spec.label());
}

TEST(Eq7, CompleteBipartite) {
  for (int n = 3; n <= 12; ++n)
    for (int s = 1; s <= n - 1; ++s) {
      const int parts[] = {s, n - s};
      const auto p = predicted_eq7(CompleteBipartiteKind{s, n});
      EXPECT_LT(p.max_deviation(l_eigenvalues(complete_multipartite(parts))), 1e-9) << s << "," << n;
    }
  EXPECT_THROW(predicted_eq7(CompleteBipartiteKind{0, 4}), std::invalid_argument);
  EXPECT_THROW(predicted_eq7(CompleteBipartiteKind{4, 4}), std::invalid_argument);
}

TEST(Eq7, RegularMultipartite) {
  for (int n = 2; n <= 12; ++n)
    for (int r = 2; r <= n; ++r) {
      if (n % r) continue;
      const std::vector<int> parts(static_cast<std::size_t>(r), n / r);
      const auto p = predicted_eq7(RegularMultipartiteKind{r, n});
      EXPECT_EQ(p.total_multiplicity(), n);
      EXPECT_LT(p.max_deviation(l_eigenvalues(complete_multipartite(parts))), 1e-9) << r << "," << n;
    }
  EXPECT_THROW(predicted_eq7(RegularMultipartiteKind{3, 8}), std::invalid_argument);
  EXPECT_THROW(predicted_eq7(RegularMultipartiteKind{1, 4}), std::invalid_argument);
}

TEST(PendantJoin, LabelsAndSides) {
  const Graph p2 = path(2);
  const Graph g = pendant_join(p2, PartSide::first);
  EXPECT_EQ(g.order(), 4);
  EXPECT_TRUE(g.adjacent(2, 3));
  EXPECT_TRUE(g.adjacent(0, 3));
  EXPECT_FALSE(g.adjacent(1, 3));
  // pendant_join on K2 is P4
  EXPECT_EQ(diameter(g), 3);
  EXPECT_EQ(g.edge_count(), 3);
  const Graph h = pendant_join(p2, PartSide::second);
  EXPECT_TRUE(h.adjacent(1, 3));
  EXPECT_THROW(pendant_join(cycle(3), PartSide::first), std::invalid_argument);
  const BipartiteSplit wrong{0b11, 0};
  EXPECT_THROW(pendant_join(p2, wrong, PartSide::first), std::invalid_argument);
}

TEST(Thm41, PredictedFormula) {
  const auto p = predicted_thm41(1);
  ASSERT_EQ(p.pairs().size(), 4u);
  EXPECT_EQ(p.pairs()[1].multiplicity, 3);
  EXPECT_DOUBLE_EQ(p.pairs()[1].value, 1.0 + std::sqrt(1.0 / 6.0));
  EXPECT_EQ(p.total_multiplicity(), 8);
  EXPECT_THROW(predicted_thm41(0), std::invalid_argument);
}

TEST(U4, FactorisationMatchesSpectrum) {
  for (int a = 1; a <= 8; ++a) {
    const auto f = u4_symmetric_factors(a);
    EXPECT_DOUBLE_EQ(f.discriminant(), 4.0 * a * a + 8.0 * a + 1.0);
    const Graph g = unicyclic(UnicyclicSpec(4, {a, a, a}));
    const auto p = f.spectrum();
    EXPECT_EQ(p.total_multiplicity(), g.order());
    EXPECT_LT(p.max_deviation(l_eigenvalues(g)), 1e-8) << a;
  }
  // U4(1,1,1): 1.7676^2, 1.3333, 0.5657^2, 0
  const auto p = u4_symmetric_factors(1).spectrum();
  ASSERT_EQ(p.pairs().size(), 4u);
  EXPECT_NEAR(p.pairs()[0].value, 1.7676, kPrintedTol);
  EXPECT_EQ(p.pairs()[0].multiplicity, 2);
  EXPECT_NEAR(p.pairs()[1].value, 4.0 / 3.0, 1e-12);
  EXPECT_THROW(u4_symmetric_factors(0), std::invalid_argument);
}

TEST(FamilyGraph, Names) {
  EXPECT_EQ(family_graph("K4"), complete(4));
  EXPECT_EQ(family_graph("C6"), cycle(6));
  EXPECT_EQ(family_graph("P3"), path(3));
  const int parts[] = {2, 2, 2};
  EXPECT_EQ(family_graph("Kmulti:2,2,2"), complete_multipartite(parts));
  EXPECT_EQ(family_graph("U2:1"), unicyclic(UnicyclicSpec(2, {1})));
  EXPECT_EQ(family_graph("U4:1,1,1"), unicyclic(UnicyclicSpec(4, {1, 1, 1})));
  EXPECT_EQ(family_graph("U13"), cycle(6));
  EXPECT_EQ(family_graph("thm41:1"), thm41_graph(1));
  for (const char* bad : {"", "X3", "K", "Kmulti:", "Kmulti:2,", "U2", "U2:a", "C2", "U15", "K3:1"})
    EXPECT_THROW(family_graph(bad), std::invalid_argument) << bad;
}
