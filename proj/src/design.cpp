#include <cmath>
#include <stdexcept>
#include <string>

#include "speclap/designs.hpp"
#include "speclap/families.hpp"

namespace speclap {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("design: " + what); }

}  // namespace

Design Design::from_incidence(IntMatrix c) {
  const std::size_t v = c.rows();
  const std::size_t b = c.cols();
  if (v < 2 || b < 1) bad("need at least 2 points and 1 block");
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < b; ++j)
      if (c(i, j) != 0 && c(i, j) != 1) bad("incidence entries must be 0 or 1");

  auto row_sum = [&](std::size_t i) {
    long long s = 0;
    for (std::size_t j = 0; j < b; ++j) s += c(i, j);
    return s;
  };
  auto col_sum = [&](std::size_t j) {
    long long s = 0;
    for (std::size_t i = 0; i < v; ++i) s += c(i, j);
    return s;
  };
  auto meet = [&](std::size_t i1, std::size_t i2) {
    long long s = 0;
    for (std::size_t j = 0; j < b; ++j) s += c(i1, j) * c(i2, j);
    return s;
  };

  const long long r = row_sum(0);
  const long long k = col_sum(0);
  const long long lambda = meet(0, 1);
  for (std::size_t i = 0; i < v; ++i)
    if (row_sum(i) != r) bad("point " + std::to_string(i) + " lies in " + std::to_string(row_sum(i)) + " blocks, expected " + std::to_string(r));
  for (std::size_t j = 0; j < b; ++j)
    if (col_sum(j) != k) bad("block " + std::to_string(j) + " has " + std::to_string(col_sum(j)) + " points, expected " + std::to_string(k));
  for (std::size_t i1 = 0; i1 < v; ++i1)
    for (std::size_t i2 = i1 + 1; i2 < v; ++i2)
      if (meet(i1, i2) != lambda)
        bad("points " + std::to_string(i1) + ", " + std::to_string(i2) + " share " + std::to_string(meet(i1, i2)) +
            " blocks, expected " + std::to_string(lambda));

  Design d;
  d.c_ = std::move(c);
  d.v_ = static_cast<int>(v);
  d.b_ = static_cast<int>(b);
  d.r_ = static_cast<int>(r);
  d.k_ = static_cast<int>(k);
  d.lambda_ = static_cast<int>(lambda);
  return d;
}

nlohmann::json Design::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < c_.rows(); ++i) {
    std::string row;
    for (std::size_t j = 0; j < c_.cols(); ++j) row += c_(i, j) ? '1' : '0';
    rows.push_back(row);
  }
  return {{"v", v_}, {"b", b_}, {"r", r_}, {"k", k_}, {"lambda", lambda_}, {"incidence", rows}};
}

Design Design::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("incidence") || !j["incidence"].is_array()) bad("JSON needs an 'incidence' array");
  const auto& rows = j["incidence"];
  if (rows.empty()) bad("empty incidence matrix");
  const std::size_t v = rows.size();
  const std::size_t b = rows[0].get<std::string>().size();
  IntMatrix c(v, b);
  for (std::size_t i = 0; i < v; ++i) {
    const auto row = rows[i].get<std::string>();
    if (row.size() != b) bad("incidence rows have different lengths");
    for (std::size_t col = 0; col < b; ++col) {
      if (row[col] != '0' && row[col] != '1') bad("incidence rows must be 0/1 strings");
      c(i, col) = row[col] - '0';
    }
  }
  Design d = from_incidence(std::move(c));
  const std::pair<const char*, int> stated[] = {{"v", d.v_}, {"b", d.b_}, {"r", d.r_}, {"k", d.k_}, {"lambda", d.lambda_}};
  for (const auto& [key, actual] : stated)
    if (j.contains(key) && j[key].get<int>() != actual)
      bad(std::string("stated ") + key + " = " + std::to_string(j[key].get<int>()) + " but the matrix gives " +
          std::to_string(actual));
  return d;
}

Design hadamard_to_design(const HadamardMatrix& h) {
  const int n = h.order();
  if (n < 4 || n % 4 != 0) bad("Hadamard order " + std::to_string(n) + " is not a positive multiple of 4");
  const HadamardMatrix norm = normalize(h);
  const std::size_t m = static_cast<std::size_t>(n - 1);
  IntMatrix c(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) c(i, j) = norm(i + 1, j + 1) > 0 ? 1 : 0;
  return Design::from_incidence(std::move(c));
}

HadamardMatrix design_to_hadamard(const Design& d) {
  if (!d.is_symmetric()) bad("only symmetric designs border to a Hadamard matrix");
  const std::size_t n = static_cast<std::size_t>(d.v()) + 1;
  IntMatrix m(n, n, 1);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) m(i, j) = d.incidence()(i - 1, j - 1) ? 1 : -1;
  return HadamardMatrix(std::move(m));
}

Design complement(const Design& d) {
  IntMatrix c = d.incidence();
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = 1 - c(i, j);
  Design out = Design::from_incidence(std::move(c));
  if (out.r() != d.b() - d.r() || out.k() != d.v() - d.k() || out.lambda() != d.b() - 2 * d.r() + d.lambda())
    bad("complement parameters disagree with (v, b, b-r, v-k, b-2r+lambda)");
  return out;
}

IncidenceGraph incidence_graph(const Design& d) {
  const int v = d.v();
  const int b = d.b();
  if (v + b > Graph::kMaxVertices) bad("incidence graph would exceed 64 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < b; ++j)
      if (d.incidence()(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) edges.emplace_back(i, v + j);
  BipartiteSplit split{};
  for (int i = 0; i < v; ++i) split.part1 |= vertex_bit(i);
  for (int j = 0; j < b; ++j) split.part2 |= vertex_bit(v + j);
  return {Graph::from_edge_list(v + b, edges), split};
}

PredictedSpectrum predicted_incidence_adjacency_spectrum(const Design& d) {
  const double top = std::sqrt(static_cast<double>(d.r()) * d.k());
  const double mid = std::sqrt(static_cast<double>(d.r() - d.lambda()));
  PredictedSpectrum p;
  p.add(top, 1).add(-top, 1);
  if (d.v() > 1) p.add(mid, d.v() - 1).add(-mid, d.v() - 1);
  if (d.b() > d.v()) p.add(0.0, d.b() - d.v());
  return p;
}

Graph thm41_graph(const HadamardMatrix& h) {
  const Design comp = complement(hadamard_to_design(h));
  const IncidenceGraph ig = incidence_graph(comp);
  return pendant_join(ig.graph, ig.split, PartSide::first);
}

Graph thm41_graph(int t) {
  if (t < 1) bad("t must be at least 1");
  if (8 * t > Graph::kMaxVertices) bad("t = " + std::to_string(t) + " gives more than 64 vertices");
  return thm41_graph(hadamard_of_order(4 * t));
}

}  // namespace speclap
