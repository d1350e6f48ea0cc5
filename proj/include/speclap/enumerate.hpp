#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "speclap/graph.hpp"
#include "speclap/linalg.hpp"

namespace speclap {

/// Minimum upper-triangle adjacency bitstring over all vertex orderings.
/// Bits run column-wise (j = 1..n-1, then i = 0..j-1), the first bit being
/// the most significant, so two graphs are isomorphic iff their forms match.
struct CanonicalForm {
  int n = 0;
  std::uint64_t bits = 0;
  auto operator<=>(const CanonicalForm&) const = default;
};

inline constexpr int kMaxCanonicalOrder = 8;

/// Throws std::invalid_argument for n > 8.
CanonicalForm canonical_form(const Graph& g);
/// The graph whose adjacency bitstring under the identity ordering is `f`.
Graph canonical_graph(const CanonicalForm& f);

struct SpectrumPredicate {
  std::string name;
  std::function<bool(const Spectrum&)> test;
};

SpectrumPredicate any_spectrum();
/// Exactly three clusters, one of them at 1.
SpectrumPredicate three_distinct_including_one();
SpectrumPredicate distinct_count_is(int k);
/// Second-smallest eigenvalue (with multiplicity) equal to 1.
SpectrumPredicate second_least_is_one();
/// "three-with-one", "second-least-one", "distinct:<k>" or "any".
SpectrumPredicate predicate_by_name(const std::string& name);

struct ScanHit {
  int n = 0;
  std::string label;  // family label for parametric scans, empty otherwise
  std::optional<CanonicalForm> form;
  std::string graph6;
  Spectrum spectrum;
  int distinct() const { return static_cast<int>(spectrum.distinct_count()); }
};

/// A graph whose eigenvalue gaps came within a decade of the cluster
/// tolerance and was therefore recomputed at tighter precision.
struct BorderlineEvent {
  std::string graph6;
  double gap = 0.0;
  int distinct_default = 0;
  int distinct_tight = 0;
};

struct ScanCounts {
  long long enumerated = 0;   // labelled graphs generated
  long long eigensolved = 0;  // survivors of the structural filters
  long long hits = 0;         // isomorphism classes accepted
};

struct ScanReport {
  std::string scan;
  std::string predicate;
  int n_min = 0;
  int n_max = 0;
  double cluster_tol = kDefaultClusterTol;
  std::vector<ScanHit> hits;
  std::map<int, ScanCounts> counts;
  std::vector<BorderlineEvent> borderline;
};

inline constexpr const char* kScanSchema = "speclap.scan/1";

nlohmann::json to_json(const ScanReport& r);
/// Header "n,graph6,distinct_count,spectrum"; spectrum as "value^mult" items
/// joined by ';'.
void write_csv(std::ostream& os, const ScanReport& r);

struct ScanOptions {
  int jobs = 1;
  double cluster_tol = kDefaultClusterTol;
  /// Lifts the scan_connected cost guard from 7 to 8 vertices.
  bool allow_order_eight = false;
};

/// Every labelled connected graph on 1..n_max vertices; hits deduplicated by
/// canonical form and sorted by it.
ScanReport scan_connected(int n_max, const SpectrumPredicate& pred, const ScanOptions& opts = {});

/// U1..U14 with every parameter in 1..param_max (one representative per
/// isomorphism class of the symmetric families), plus C4..C7.
ScanReport scan_unicyclic(int param_max, const SpectrumPredicate& pred, const ScanOptions& opts = {});

/// Connected bipartite graphs on 2..n_max vertices with a vertex of degree 1
/// and exactly four distinct L-eigenvalues. Each labelled graph is generated
/// once, from its bipartition with vertex 0 in the first part.
ScanReport scan_bipartite_pendant(int n_max, const ScanOptions& opts = {});

/// Number of labelled connected bipartite graphs on n vertices produced by
/// the bipartition enumeration (no degree or spectrum filter).
long long count_connected_bipartite_labelled(int n);

}  // namespace speclap
