#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "speclap/designs.hpp"
#include "speclap/enumerate.hpp"
#include "speclap/families.hpp"
#include "speclap/graph_io.hpp"
#include "speclap/nlspec.hpp"
#include "test_support.hpp"

using namespace speclap;

namespace {

// Brute-force isomorphism by trying every permutation; independent of the
// pruned canonical search.
bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::set<CanonicalForm> forms_of(const ScanReport& r) {
  std::set<CanonicalForm> out;
  for (const auto& h : r.hits) out.insert(*h.form);
  return out;
}

std::set<std::string> labels_of(const ScanReport& r) {
  std::set<std::string> out;
  for (const auto& h : r.hits) out.insert(h.label);
  return out;
}

}  // namespace

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 8;
    const Graph g = speclap::testing::random_graph(rng, n, 0.4);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto f = canonical_form(g);
    EXPECT_EQ(f, canonical_form(relabel(g, perm)));
    EXPECT_TRUE(isomorphic(canonical_graph(f), g));
    EXPECT_EQ(canonical_form(canonical_graph(f)), f);
  }
}

TEST(Canonical, DistinguishesNonIsomorphic) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + trial % 3;
    const Graph a = speclap::testing::random_graph(rng, n, 0.5);
    const Graph b = speclap::testing::random_graph(rng, n, 0.5);
    EXPECT_EQ(canonical_form(a) == canonical_form(b), isomorphic(a, b));
  }
  const int star[] = {1, 3};
  EXPECT_NE(canonical_form(path(4)), canonical_form(complete_multipartite(star)));
}

TEST(Canonical, MinimumOverAllOrderings) {
  // brute-force minimum of the bitstring over all permutations
  const Graph g = unicyclic(UnicyclicSpec(2, {2}));
  const int n = g.order();
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::uint64_t bits = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) bits = (bits << 1) | (g.adjacent(perm[i], perm[j]) ? 1U : 0U);
    best = std::min(best, bits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(canonical_form(g).bits, best);
}

TEST(Canonical, Guards) {
  EXPECT_THROW(canonical_form(cycle(9)), std::invalid_argument);
  EXPECT_THROW(canonical_graph(CanonicalForm{3, 0b1000}), std::invalid_argument);
  EXPECT_EQ(canonical_form(Graph(0)), (CanonicalForm{0, 0}));
  // C4 under two labelings
  const Graph c4b = Graph::from_edge_list(4, std::vector<Edge>{{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  EXPECT_EQ(canonical_form(cycle(4)), canonical_form(c4b));
}

TEST(Predicates, ByName) {
  EXPECT_EQ(predicate_by_name("distinct:4").name, "distinct:4");
  EXPECT_EQ(predicate_by_name("any").name, "any");
  EXPECT_THROW(predicate_by_name("distinct:x"), std::invalid_argument);
  EXPECT_THROW(predicate_by_name("distinct:0"), std::invalid_argument);
  EXPECT_THROW(predicate_by_name("nope"), std::invalid_argument);
  EXPECT_TRUE(second_least_is_one().test(l_spectrum(cycle(4))));
  EXPECT_FALSE(second_least_is_one().test(l_spectrum(cycle(5))));
  EXPECT_TRUE(three_distinct_including_one().test(l_spectrum(cycle(4))));
}

TEST(ScanConnected, TwoDistinctAreCompleteGraphs) {
  const auto r = scan_connected(4, distinct_count_is(2));
  std::set<CanonicalForm> want;
  for (int n = 2; n <= 4; ++n) want.insert(canonical_form(complete(n)));
  EXPECT_EQ(forms_of(r), want);
  EXPECT_EQ(r.counts.at(4).enumerated, 64);
  EXPECT_EQ(r.counts.at(4).eigensolved, 38);  // labelled connected graphs on 4 vertices
}

TEST(ScanConnected, ThreeWithOneUpToFive) {
  const auto r = scan_connected(5, three_distinct_including_one());
  std::set<CanonicalForm> want;
  for (int n = 3; n <= 5; ++n)
    for (int s = 1; 2 * s <= n; ++s) {
      const int parts[] = {s, n - s};
      want.insert(canonical_form(complete_multipartite(parts)));
    }
  EXPECT_EQ(forms_of(r), want);
}

TEST(ScanConnected, SecondLeastOneUpToSix) {
  const auto r = scan_connected(6, second_least_is_one());
  for (const auto& h : r.hits) {
    const Graph g = from_graph6(h.graph6);
    const auto parts = is_complete_multipartite(g);
    ASSERT_TRUE(parts) << h.graph6;
    EXPECT_LT(g.edge_count(), g.order() * (g.order() - 1) / 2);
  }
  // connected non-complete complete multipartite graphs on n vertices:
  // partitions of n minus the one-part and all-ones partitions
  const std::map<int, long long> partitions = {{2, 2}, {3, 3}, {4, 5}, {5, 7}, {6, 11}};
  for (const auto& [n, p] : partitions) EXPECT_EQ(r.counts.at(n).hits, p - 2) << n;
}

TEST(ScanConnected, LabelledConnectedCounts) {
  const auto r = scan_connected(6, any_spectrum());
  const long long known[] = {0, 1, 1, 4, 38, 728, 26704};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(r.counts.at(n).eigensolved, known[n]) << n;
  const long long classes[] = {0, 1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(r.counts.at(n).hits, classes[n]) << n;
}

TEST(ScanConnected, Guards) {
  EXPECT_THROW(scan_connected(8, any_spectrum()), std::invalid_argument);
  EXPECT_THROW(scan_connected(0, any_spectrum()), std::invalid_argument);
  ScanOptions o;
  o.allow_order_eight = true;
  EXPECT_THROW(scan_connected(9, any_spectrum(), o), std::invalid_argument);
}

TEST(ScanConnected, ParallelMatchesSerial) {
  ScanOptions serial, parallel;
  parallel.jobs = 4;
  const auto a = scan_connected(6, distinct_count_is(4), serial);
  const auto b = scan_connected(6, distinct_count_is(4), parallel);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(ScanConnected, HitsRoundTripThroughGraph6) {
  const auto r = scan_connected(6, distinct_count_is(3));
  ASSERT_FALSE(r.hits.empty());
  for (const auto& h : r.hits) {
    const Spectrum s = l_spectrum(from_graph6(h.graph6));
    ASSERT_EQ(s.distinct_count(), h.spectrum.distinct_count());
    for (std::size_t i = 0; i < s.distinct_count(); ++i) {
      EXPECT_NEAR(s.pairs()[i].value, h.spectrum.pairs()[i].value, 1e-9);
      EXPECT_EQ(s.pairs()[i].multiplicity, h.spectrum.pairs()[i].multiplicity);
    }
  }
}

TEST(ScanUnicyclic, Classification) {
  const auto three = scan_unicyclic(6, distinct_count_is(3));
  EXPECT_EQ(labels_of(three), (std::set<std::string>{"U7", "U10"}));
  const auto four = scan_unicyclic(6, distinct_count_is(4));
  EXPECT_EQ(labels_of(four), (std::set<std::string>{"U13", "U14", "U2(1)", "U4(1,1,1)"}));
  const auto all = scan_unicyclic(2, any_spectrum());
  const auto it = std::find_if(all.hits.begin(), all.hits.end(), [](const ScanHit& h) { return h.label == "U3(1,1)"; });
  ASSERT_NE(it, all.hits.end());
  EXPECT_EQ(it->distinct(), 5);
  EXPECT_THROW(scan_unicyclic(0, any_spectrum()), std::invalid_argument);
}

TEST(ScanUnicyclic, SymmetricFamiliesListedOnce) {
  const auto all = scan_unicyclic(3, any_spectrum());
  const auto labels = labels_of(all);
  EXPECT_EQ(labels.size(), all.hits.size());
  EXPECT_TRUE(labels.count("U3(1,2)"));
  EXPECT_FALSE(labels.count("U3(2,1)"));
  EXPECT_TRUE(labels.count("U6(2,1)"));
  EXPECT_TRUE(labels.count("U6(1,2)"));
  // representatives are pairwise non-isomorphic where canonicalisable
  std::set<CanonicalForm> seen;
  for (const auto& h : all.hits)
    if (h.form) EXPECT_TRUE(seen.insert(*h.form).second) << h.label;
}

TEST(ScanBipartitePendant, SmallOrders) {
  const auto r = scan_bipartite_pendant(6);
  ASSERT_EQ(r.hits.size(), 1u);
  EXPECT_EQ(*r.hits[0].form, canonical_form(path(4)));
  EXPECT_EQ(r.counts.at(6).hits, 0);
  EXPECT_THROW(scan_bipartite_pendant(9), std::invalid_argument);
  EXPECT_THROW(scan_bipartite_pendant(1), std::invalid_argument);
}

TEST(ScanBipartitePendant, EnumerationCoversEveryLabelledBipartiteGraph) {
  // brute force over all labelled graphs: connected and two-colourable
  for (int n = 2; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<Edge> all;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) all.emplace_back(i, j);
    long long count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      std::vector<Edge> e;
      for (int b = 0; b < pairs; ++b)
        if ((mask >> b) & 1U) e.push_back(all[static_cast<std::size_t>(b)]);
      const Graph g = Graph::from_edge_list(n, e);
      if (is_connected(g) && is_bipartite(g)) ++count;
    }
    EXPECT_EQ(count_connected_bipartite_labelled(n), count) << n;
  }
}

TEST(ScanReportIo, JsonAndCsv) {
  const auto r = scan_bipartite_pendant(4);
  const auto j = to_json(r);
  EXPECT_EQ(j["schema"], kScanSchema);
  EXPECT_EQ(j["hits"].size(), 1u);
  EXPECT_EQ(j["hits"][0]["graph6"], to_graph6(canonical_graph(canonical_form(path(4)))));
  std::ostringstream os;
  write_csv(os, r);
  EXPECT_EQ(os.str(), "n,graph6,distinct_count,spectrum\n4," + r.hits[0].graph6 + ",4,2^1;1.5^1;0.5^1;0^1\n");
}
