#include "speclap/families.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "speclap/designs.hpp"

namespace speclap {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

class EdgeBuilder {
 public:
  explicit EdgeBuilder(int n) : n_(n) {}
  int add_vertex() { return n_++; }
  void join(int u, int v) { edges_.emplace_back(u, v); }
  void ring(int k) {
    for (int i = 0; i < k; ++i) join(i, (i + 1) % k);
  }
  void pendants(int at, int count) {
    for (int i = 0; i < count; ++i) join(at, add_vertex());
  }
  Graph build() const { return Graph::from_edge_list(n_, edges_); }

 private:
  int n_;
  std::vector<Edge> edges_;
};

int cycle_length(int family) {
  if (family <= 6) return 3;
  if (family <= 9) return 4;
  if (family <= 12) return 5;
  return family == 13 ? 6 : 7;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view context) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    require(ec == std::errc{} && ptr == token.data() + token.size() && !token.empty(),
            "family '" + std::string(context) + "': bad integer '" + std::string(token) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    require(!text.empty(), "family '" + std::string(context) + "': trailing comma");
  }
  return out;
}

int parse_single(std::string_view digits, std::string_view context) {
  const auto values = parse_int_list(digits, context);
  require(values.size() == 1, "family '" + std::string(context) + "': expected one integer");
  return values.front();
}

}  // namespace

Graph complete(int n) {
  require(n >= 1, "complete: n must be at least 1");
  EdgeBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.join(u, v);
  return b.build();
}

Graph complete_multipartite(std::span<const int> parts) {
  require(!parts.empty(), "complete_multipartite: no parts");
  std::vector<int> owner;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    require(parts[p] >= 1, "complete_multipartite: every part needs at least one vertex");
    owner.insert(owner.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
  }
  const int n = static_cast<int>(owner.size());
  EdgeBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (owner[static_cast<std::size_t>(u)] != owner[static_cast<std::size_t>(v)]) b.join(u, v);
  return b.build();
}

Graph cycle(int n) {
  require(n >= 3, "cycle: n must be at least 3");
  EdgeBuilder b(n);
  b.ring(n);
  return b.build();
}

Graph path(int n) {
  require(n >= 1, "path: n must be at least 1");
  EdgeBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.join(i, i + 1);
  return b.build();
}

int UnicyclicSpec::arity(int family) {
  switch (family) {
    case 2: case 5: case 8: case 11: return 1;
    case 3: case 6: case 9: case 12: return 2;
    case 4: return 3;
    case 1: case 7: case 10: case 13: case 14: return 0;
    default: throw std::invalid_argument("UnicyclicSpec: family must be in 1..14");
  }
}

UnicyclicSpec::UnicyclicSpec(int family, std::vector<int> params) : family_(family), params_(std::move(params)) {
  const int want = arity(family);
  require(static_cast<int>(params_.size()) == want,
          "UnicyclicSpec: U" + std::to_string(family) + " takes " + std::to_string(want) + " parameter(s)");
  for (int p : params_) require(p >= 1, "UnicyclicSpec: parameters must be at least 1");
}

std::string UnicyclicSpec::label() const {
  std::string s = "U" + std::to_string(family_);
  if (params_.empty()) return s;
  s += '(';
  for (std::size_t i = 0; i < params_.size(); ++i) s += (i ? "," : "") + std::to_string(params_[i]);
  return s + ')';
}

Graph unicyclic(const UnicyclicSpec& spec) {
  const int k = cycle_length(spec.family());
  const auto& p = spec.params();
  EdgeBuilder b(k);
  b.ring(k);
  switch (spec.family()) {
    case 2: case 8: case 11:
      b.pendants(0, p[0]);
      break;
    case 3: case 9: case 12:
      b.pendants(0, p[0]);
      b.pendants(1, p[1]);
      break;
    case 4:
      b.pendants(0, p[0]);
      b.pendants(1, p[1]);
      b.pendants(2, p[2]);
      break;
    case 5: case 6: {
      const int u0 = b.add_vertex();
      b.join(0, u0);
      b.pendants(u0, p[0]);
      if (spec.family() == 6) b.pendants(0, p[1]);
      break;
    }
    default:
      break;
  }
  return b.build();
}

PredictedSpectrum predicted_eq7(CompleteBipartiteKind k) {
  require(k.n >= 2 && k.s >= 1 && k.s <= k.n - 1, "predicted_eq7: need 1 <= s <= n-1");
  PredictedSpectrum p;
  p.add(2.0, 1).add(1.0, k.n - 2).add(0.0, 1);
  return p;
}

PredictedSpectrum predicted_eq7(RegularMultipartiteKind k) {
  require(k.r >= 2 && k.r <= k.n && k.n % k.r == 0, "predicted_eq7: need 2 <= r <= n with r dividing n");
  PredictedSpectrum p;
  p.add(static_cast<double>(k.r) / (k.r - 1), k.r - 1).add(1.0, k.n - k.r).add(0.0, 1);
  return p;
}

Graph pendant_join(const Graph& gprime, const BipartiteSplit& split, PartSide side) {
  const int n = gprime.order();
  require(n + 2 <= Graph::kMaxVertices, "pendant_join: result exceeds 64 vertices");
  std::vector<Edge> edges = gprime.edges();
  for (auto [u, v] : edges)
    require(((split.part1 >> u) & 1U) != ((split.part1 >> v) & 1U), "pendant_join: split is not a bipartition");
  const int u0 = n;
  const int v0 = n + 1;
  edges.emplace_back(u0, v0);
  for (int w : members(side == PartSide::first ? split.part1 : split.part2)) edges.emplace_back(w, v0);
  return Graph::from_edge_list(n + 2, edges);
}

Graph pendant_join(const Graph& gprime, PartSide side) {
  const auto split = is_bipartite(gprime);
  require(split.has_value(), "pendant_join: graph is not bipartite");
  return pendant_join(gprime, *split, side);
}

PredictedSpectrum predicted_thm41(int t) {
  require(t >= 1, "predicted_thm41: t must be at least 1");
  const double shift = std::sqrt(1.0 / (4.0 * t + 2.0));
  PredictedSpectrum p;
  p.add(2.0, 1).add(1.0 + shift, 4 * t - 1).add(1.0 - shift, 4 * t - 1).add(0.0, 1);
  return p;
}

double U4Factors::discriminant() const {
  return quadratic[1] * quadratic[1] - 4.0 * quadratic[0] * quadratic[2];
}

PredictedSpectrum U4Factors::spectrum() const {
  const auto [hi, lo] = quadratic_roots(quadratic[0], quadratic[1], quadratic[2]);
  PredictedSpectrum p;
  p.add(-linear[1] / linear[0], 1).add(hi, 2).add(lo, 2).add(1.0, power_of_x_minus_one).add(0.0, power_of_x);
  return p;
}

U4Factors u4_symmetric_factors(int a) {
  require(a >= 1, "u4_symmetric_factors: a must be at least 1");
  const double ad = a;
  U4Factors f;
  f.linear = {ad + 2.0, -2.0 * (ad + 1.0)};
  f.quadratic = {ad + 2.0, -(2.0 * ad + 5.0), 3.0};
  f.power_of_x_minus_one = 3 * a - 3;
  f.power_of_x = 1;
  return f;
}

Graph family_graph(std::string_view name) {
  const std::string ctx(name);
  require(!name.empty(), "empty family name");
  const auto colon = name.find(':');
  const std::string_view head = name.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);

  if (head == "Kmulti") {
    const auto parts = parse_int_list(args, ctx);
    return complete_multipartite(parts);
  }
  if (head == "thm41") return thm41_graph(parse_single(args, ctx));
  if (head.size() >= 2 && head[0] == 'U') {
    const int family = parse_single(head.substr(1), ctx);
    return unicyclic(UnicyclicSpec(family, args.empty() ? std::vector<int>{} : parse_int_list(args, ctx)));
  }
  if (head.size() >= 2 && colon == std::string_view::npos && std::string_view("KCP").find(head[0]) != std::string_view::npos) {
    const int n = parse_single(head.substr(1), ctx);
    switch (head[0]) {
      case 'K': return complete(n);
      case 'C': return cycle(n);
      default: return path(n);
    }
  }
  throw std::invalid_argument("unknown family '" + ctx + "'");
}

}  // namespace speclap
