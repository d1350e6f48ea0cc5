#include "speclap/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>

#include "speclap/families.hpp"
#include "speclap/graph_io.hpp"
#include "speclap/nlspec.hpp"

namespace speclap {

namespace {

constexpr double kTightJacobiTol = 1e-14;

// ---- canonical form -------------------------------------------------------

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()), total_(n_ * (n_ - 1) / 2) {}

  CanonicalForm run() {
    if (n_ <= 1) return {n_, 0};
    search(0, 0, 0, 0);
    return {n_, best_};
  }

 private:
  void search(int j, VertexSet used, std::uint64_t prefix, int len) {
    if (j == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        have_best_ = true;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      std::uint64_t next = prefix;
      for (int i = 0; i < j; ++i) next = (next << 1) | (g_.adjacent(pos_[static_cast<std::size_t>(i)], v) ? 1U : 0U);
      const int next_len = len + j;
      if (have_best_ && next > (best_ >> (total_ - next_len))) continue;
      pos_[static_cast<std::size_t>(j)] = v;
      search(j + 1, used | vertex_bit(v), next, next_len);
    }
  }

  const Graph& g_;
  int n_;
  int total_;
  std::array<int, kMaxCanonicalOrder> pos_{};
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

// ---- spectra with borderline re-test -------------------------------------

void fill_laplacian(std::span<const VertexSet> rows, std::span<double> a) {
  const std::size_t n = rows.size();
  std::array<double, Graph::kMaxVertices> inv_sqrt{};
  for (std::size_t u = 0; u < n; ++u) {
    const int d = std::popcount(rows[u]);
    inv_sqrt[u] = d > 0 ? 1.0 / std::sqrt(static_cast<double>(d)) : 0.0;
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      double x = 0.0;
      if (u == v)
        x = rows[u] ? 1.0 : 0.0;
      else if ((rows[u] >> v) & 1U)
        x = -inv_sqrt[u] * inv_sqrt[v];
      a[u * n + v] = x;
    }
}

struct SpectrumResult {
  Spectrum spectrum;
  std::optional<double> borderline_gap;
  int distinct_default = 0;
};

SpectrumResult spectrum_of_rows(std::span<const VertexSet> rows, double tol) {
  const std::size_t n = rows.size();
  std::array<double, kMaxCanonicalOrder * kMaxCanonicalOrder> small{};
  std::vector<double> big;
  std::span<double> a;
  if (n <= kMaxCanonicalOrder) {
    a = std::span<double>(small.data(), n * n);
  } else {
    big.resize(n * n);
    a = big;
  }
  std::vector<double> values(n);
  fill_laplacian(rows, a);
  jacobi_eigenvalues_inplace(a, n, values);

  SpectrumResult out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double gap = values[i] - values[i + 1];
    if (gap >= tol / 10.0 && gap <= tol * 10.0) {
      out.borderline_gap = out.borderline_gap ? std::min(*out.borderline_gap, gap) : gap;
    }
  }
  out.spectrum = cluster_spectrum(values, tol);
  out.distinct_default = static_cast<int>(out.spectrum.distinct_count());
  if (out.borderline_gap) {
    fill_laplacian(rows, a);
    try {
      jacobi_eigenvalues_inplace(a, n, values, kTightJacobiTol);
      out.spectrum = cluster_spectrum(values, tol);
    } catch (const ConvergenceError&) {
      // keep the default-precision result
    }
  }
  return out;
}

// ---- parallel labelled scans ---------------------------------------------

struct Task {
  int n = 0;
  VertexSet part1 = 0;  // bipartition scans only
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

class Collector {
 public:
  Collector(const SpectrumPredicate& pred, double tol) : pred_(&pred), tol_(tol) {}

  void consider(std::span<const VertexSet> rows) {
    const int n = static_cast<int>(rows.size());
    ++counts[n].eigensolved;
    const SpectrumResult res = spectrum_of_rows(rows, tol_);
    if (res.borderline_gap) {
      const auto form = canonical_form(Graph::from_adjacency_rows({rows.begin(), rows.end()}));
      borderline.emplace(form, BorderlineEvent{"", *res.borderline_gap, res.distinct_default,
                                               static_cast<int>(res.spectrum.distinct_count())});
    }
    if (!pred_->test(res.spectrum)) return;
    forms.insert(canonical_form(Graph::from_adjacency_rows({rows.begin(), rows.end()})));
  }

  std::set<CanonicalForm> forms;
  std::map<int, ScanCounts> counts;
  std::map<CanonicalForm, BorderlineEvent> borderline;

 private:
  const SpectrumPredicate* pred_;
  double tol_;
};

template <class Fn>
std::vector<Collector> run_tasks(const std::vector<Task>& tasks, const SpectrumPredicate& pred, const ScanOptions& opts,
                                 Fn process) {
  const int jobs = std::max(1, opts.jobs);
  std::vector<Collector> collectors(static_cast<std::size_t>(jobs), Collector(pred, opts.cluster_tol));
  std::atomic<std::size_t> next{0};
  auto worker = [&](std::size_t w) {
    for (std::size_t t = next++; t < tasks.size(); t = next++) process(tasks[t], collectors[w]);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < collectors.size(); ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }
  return collectors;
}

void split_range(std::vector<Task>& tasks, int n, VertexSet part1, std::uint64_t count) {
  constexpr std::uint64_t kChunk = 1U << 15;
  for (std::uint64_t lo = 0; lo < count; lo += kChunk) tasks.push_back({n, part1, lo, std::min(count, lo + kChunk)});
}

bool rows_connected(std::span<const VertexSet> rows) {
  const VertexSet all = rows.size() == 64 ? ~VertexSet{0} : (vertex_bit(static_cast<int>(rows.size())) - 1);
  VertexSet seen = 1;
  VertexSet frontier = 1;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

ScanReport merge(std::string scan, const SpectrumPredicate& pred, int n_min, int n_max, const ScanOptions& opts,
                 std::vector<Collector>& collectors, const std::map<int, long long>& enumerated) {
  ScanReport r;
  r.scan = std::move(scan);
  r.predicate = pred.name;
  r.n_min = n_min;
  r.n_max = n_max;
  r.cluster_tol = opts.cluster_tol;
  for (int n = n_min; n <= n_max; ++n) r.counts[n].enumerated = enumerated.count(n) ? enumerated.at(n) : 0;

  std::set<CanonicalForm> forms;
  std::map<CanonicalForm, BorderlineEvent> borderline;
  for (auto& c : collectors) {
    forms.insert(c.forms.begin(), c.forms.end());
    for (const auto& [n, k] : c.counts) r.counts[n].eigensolved += k.eigensolved;
    for (const auto& [form, ev] : c.borderline) borderline.emplace(form, ev);
  }
  for (const auto& form : forms) {
    const Graph g = canonical_graph(form);
    ScanHit hit;
    hit.n = form.n;
    hit.form = form;
    hit.graph6 = to_graph6(g);
    hit.spectrum = spectrum_of_rows(g.adjacency_rows(), opts.cluster_tol).spectrum;
    ++r.counts[form.n].hits;
    r.hits.push_back(std::move(hit));
  }
  for (auto& [form, ev] : borderline) {
    ev.graph6 = to_graph6(canonical_graph(form));
    r.borderline.push_back(ev);
  }
  return r;
}

std::string format_value(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", std::abs(x) < 5e-11 ? 0.0 : x);
  return buf;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw std::invalid_argument("canonical_form: " + std::to_string(g.order()) + " vertices exceeds the limit of 8");
  return Canonicalizer(g).run();
}

Graph canonical_graph(const CanonicalForm& f) {
  if (f.n < 0 || f.n > kMaxCanonicalOrder) throw std::invalid_argument("canonical_graph: bad order");
  const int total = f.n * (f.n - 1) / 2;
  if (total < 64 && (f.bits >> total) != 0) throw std::invalid_argument("canonical_graph: bits exceed n(n-1)/2");
  std::vector<Edge> edges;
  int bit = total;
  for (int j = 1; j < f.n; ++j)
    for (int i = 0; i < j; ++i)
      if ((f.bits >> --bit) & 1U) edges.emplace_back(i, j);
  return Graph::from_edge_list(f.n, edges);
}

SpectrumPredicate any_spectrum() {
  return {"any", [](const Spectrum&) { return true; }};
}

SpectrumPredicate three_distinct_including_one() {
  return {"three-with-one", [](const Spectrum& s) {
            return s.distinct_count() == 3 && s.contains(1.0, s.cluster_tol());
          }};
}

SpectrumPredicate distinct_count_is(int k) {
  return {"distinct:" + std::to_string(k),
          [k](const Spectrum& s) { return static_cast<int>(s.distinct_count()) == k; }};
}

SpectrumPredicate second_least_is_one() {
  return {"second-least-one", [](const Spectrum& s) {
            if (s.total_multiplicity() < 2) return false;
            const auto values = s.expanded();
            return std::abs(values[values.size() - 2] - 1.0) <= s.cluster_tol();
          }};
}

SpectrumPredicate predicate_by_name(const std::string& name) {
  if (name == "any") return any_spectrum();
  if (name == "three-with-one") return three_distinct_including_one();
  if (name == "second-least-one") return second_least_is_one();
  if (name.rfind("distinct:", 0) == 0) {
    int k = 0;
    const char* first = name.data() + 9;
    const char* last = name.data() + name.size();
    const auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec == std::errc{} && ptr == last && first != last && k >= 1) return distinct_count_is(k);
  }
  throw std::invalid_argument("unknown predicate '" + name + "'");
}

nlohmann::json to_json(const ScanReport& r) {
  nlohmann::json hits = nlohmann::json::array();
  for (const auto& h : r.hits) {
    nlohmann::json spec = nlohmann::json::array();
    for (const auto& p : h.spectrum.pairs()) spec.push_back({{"value", p.value}, {"multiplicity", p.multiplicity}});
    nlohmann::json item = {{"n", h.n}, {"graph6", h.graph6}, {"distinct", h.distinct()}, {"spectrum", spec}};
    if (!h.label.empty()) item["label"] = h.label;
    item["canonical"] = h.form ? nlohmann::json{{"n", h.form->n}, {"bits", h.form->bits}} : nlohmann::json(nullptr);
    hits.push_back(std::move(item));
  }
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& [n, c] : r.counts)
    counts.push_back({{"n", n}, {"enumerated", c.enumerated}, {"eigensolved", c.eigensolved}, {"hits", c.hits}});
  nlohmann::json borderline = nlohmann::json::array();
  for (const auto& b : r.borderline)
    borderline.push_back({{"graph6", b.graph6},
                          {"gap", b.gap},
                          {"distinct_default", b.distinct_default},
                          {"distinct_tight", b.distinct_tight}});
  return {{"schema", kScanSchema}, {"scan", r.scan},         {"predicate", r.predicate},
          {"n_min", r.n_min},      {"n_max", r.n_max},       {"cluster_tol", r.cluster_tol},
          {"counts", counts},      {"hits", hits},           {"borderline", borderline}};
}

void write_csv(std::ostream& os, const ScanReport& r) {
  os << "n,graph6,distinct_count,spectrum\n";
  for (const auto& h : r.hits) {
    os << h.n << ',' << h.graph6 << ',' << h.distinct() << ',';
    bool first = true;
    for (const auto& p : h.spectrum.pairs()) {
      os << (first ? "" : ";") << format_value(p.value) << '^' << p.multiplicity;
      first = false;
    }
    os << '\n';
  }
}

ScanReport scan_connected(int n_max, const SpectrumPredicate& pred, const ScanOptions& opts) {
  const int limit = opts.allow_order_eight ? 8 : 7;
  if (n_max < 1) throw std::invalid_argument("scan_connected: n_max must be at least 1");
  if (n_max > limit)
    throw std::invalid_argument("scan_connected: n_max = " + std::to_string(n_max) + " exceeds the limit of " +
                                std::to_string(limit));

  std::vector<Task> tasks;
  std::map<int, long long> enumerated;
  for (int n = 1; n <= n_max; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    enumerated[n] = static_cast<long long>(count);
    split_range(tasks, n, 0, count);
  }

  auto process = [](const Task& t, Collector& c) {
    std::vector<Edge> pairs;
    for (int j = 1; j < t.n; ++j)
      for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    std::array<VertexSet, kMaxCanonicalOrder> rows{};
    const std::span<VertexSet> view(rows.data(), static_cast<std::size_t>(t.n));
    for (std::uint64_t mask = t.lo; mask < t.hi; ++mask) {
      rows.fill(0);
      for (std::uint64_t m = mask; m; m &= m - 1) {
        const auto [i, j] = pairs[static_cast<std::size_t>(std::countr_zero(m))];
        rows[static_cast<std::size_t>(i)] |= vertex_bit(j);
        rows[static_cast<std::size_t>(j)] |= vertex_bit(i);
      }
      if (!rows_connected(view)) continue;
      c.consider(view);
    }
  };
  auto collectors = run_tasks(tasks, pred, opts, process);
  return merge("connected", pred, 1, n_max, opts, collectors, enumerated);
}

namespace {

// Parameter tuples for one unicyclic family, one per isomorphism class.
std::vector<std::vector<int>> unicyclic_params(int family, int param_max) {
  const int arity = UnicyclicSpec::arity(family);
  const bool symmetric = family == 3 || family == 4 || family == 9 || family == 12;
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(arity), 1);
  if (arity == 0) return {{}};
  while (true) {
    if (!symmetric || std::is_sorted(cur.begin(), cur.end())) out.push_back(cur);
    std::size_t i = cur.size();
    while (i > 0 && cur[i - 1] == param_max) cur[--i] = 1;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

}  // namespace

ScanReport scan_unicyclic(int param_max, const SpectrumPredicate& pred, const ScanOptions& opts) {
  if (param_max < 1) throw std::invalid_argument("scan_unicyclic: param_max must be at least 1");
  ScanReport r;
  r.scan = "unicyclic";
  r.predicate = pred.name;
  r.cluster_tol = opts.cluster_tol;

  std::vector<std::pair<std::string, Graph>> graphs;
  for (int family = 1; family <= 14; ++family)
    for (const auto& params : unicyclic_params(family, param_max)) {
      const UnicyclicSpec spec(family, params);
      graphs.emplace_back(spec.label(), unicyclic(spec));
    }
  // C4..C7 are U7, U10, U13, U14; C3 is U1. Every cycle is already present.

  r.n_min = Graph::kMaxVertices;
  for (const auto& [label, g] : graphs) {
    if (!is_connected(g) || g.edge_count() != g.order() || diameter(g) > 3)
      throw std::logic_error("scan_unicyclic: " + label + " is not a unicyclic graph of diameter <= 3");
    const int n = g.order();
    r.n_min = std::min(r.n_min, n);
    r.n_max = std::max(r.n_max, n);
    auto& counts = r.counts[n];
    ++counts.enumerated;
    ++counts.eigensolved;
    const SpectrumResult res = spectrum_of_rows(g.adjacency_rows(), opts.cluster_tol);
    if (res.borderline_gap)
      r.borderline.push_back({to_graph6(g), *res.borderline_gap, res.distinct_default,
                              static_cast<int>(res.spectrum.distinct_count())});
    if (!pred.test(res.spectrum)) continue;
    ++counts.hits;
    ScanHit hit;
    hit.n = n;
    hit.label = label;
    if (n <= kMaxCanonicalOrder) hit.form = canonical_form(g);
    hit.graph6 = to_graph6(g);
    hit.spectrum = res.spectrum;
    r.hits.push_back(std::move(hit));
  }
  return r;
}

ScanReport scan_bipartite_pendant(int n_max, const ScanOptions& opts) {
  if (n_max < 2 || n_max > kMaxCanonicalOrder)
    throw std::invalid_argument("scan_bipartite_pendant: n_max must be in [2, 8]");
  const SpectrumPredicate pred = distinct_count_is(4);

  std::vector<Task> tasks;
  std::map<int, long long> enumerated;
  for (int n = 2; n <= n_max; ++n) {
    const VertexSet rest_all = (vertex_bit(n) - 1) & ~VertexSet{1};
    // Subsets S of {1..n-1} other than the full set; part1 = {0} u S.
    for (VertexSet s = 0;; s = (s - rest_all) & rest_all) {
      if (s != rest_all) {
        const VertexSet part1 = s | 1U;
        const int a = set_size(part1);
        const std::uint64_t count = std::uint64_t{1} << (a * (n - a));
        enumerated[n] += static_cast<long long>(count);
        split_range(tasks, n, part1, count);
      }
      if (s == rest_all) break;
    }
  }

  auto process = [](const Task& t, Collector& c) {
    const VertexSet all = vertex_bit(t.n) - 1;
    const auto p1 = members(t.part1);
    const auto p2 = members(all & ~t.part1);
    std::array<VertexSet, kMaxCanonicalOrder> rows{};
    const std::span<VertexSet> view(rows.data(), static_cast<std::size_t>(t.n));
    const std::size_t b = p2.size();
    for (std::uint64_t mask = t.lo; mask < t.hi; ++mask) {
      rows.fill(0);
      for (std::uint64_t m = mask; m; m &= m - 1) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(m));
        const int u = p1[bit / b];
        const int v = p2[bit % b];
        rows[static_cast<std::size_t>(u)] |= vertex_bit(v);
        rows[static_cast<std::size_t>(v)] |= vertex_bit(u);
      }
      bool leaf = false;
      for (VertexSet row : view) leaf = leaf || std::popcount(row) == 1;
      if (!leaf || !rows_connected(view)) continue;
      c.consider(view);
    }
  };
  auto collectors = run_tasks(tasks, pred, opts, process);
  return merge("bipartite-pendant", pred, 2, n_max, opts, collectors, enumerated);
}

long long count_connected_bipartite_labelled(int n) {
  if (n < 2 || n > kMaxCanonicalOrder) throw std::invalid_argument("count_connected_bipartite_labelled: n in [2, 8]");
  long long total = 0;
  const VertexSet all = vertex_bit(n) - 1;
  const VertexSet rest_all = all & ~VertexSet{1};
  for (VertexSet s = 0;; s = (s - rest_all) & rest_all) {
    if (s != rest_all) {
      const auto p1 = members(s | 1U);
      const auto p2 = members(all & ~(s | 1U));
      const std::size_t b = p2.size();
      std::array<VertexSet, kMaxCanonicalOrder> rows{};
      const std::span<VertexSet> view(rows.data(), static_cast<std::size_t>(n));
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (p1.size() * b)); ++mask) {
        rows.fill(0);
        for (std::uint64_t m = mask; m; m &= m - 1) {
          const auto bit = static_cast<std::size_t>(std::countr_zero(m));
          rows[static_cast<std::size_t>(p1[bit / b])] |= vertex_bit(p2[bit % b]);
          rows[static_cast<std::size_t>(p2[bit % b])] |= vertex_bit(p1[bit / b]);
        }
        if (rows_connected(view)) ++total;
      }
    }
    if (s == rest_all) break;
  }
  return total;
}

}  // namespace speclap
