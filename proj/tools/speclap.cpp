// speclap command-line front end.
//
// Exit codes: 0 success, 1 failed verification, 2 usage or input error,
// 3 I/O error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "speclap/designs.hpp"
#include "speclap/enumerate.hpp"
#include "speclap/families.hpp"
#include "speclap/graph_io.hpp"
#include "speclap/nlspec.hpp"
#include "speclap/verify.hpp"

using namespace speclap;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string file;
  std::string output;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    if (std::cin.bad()) throw IoError("failed to read standard input");
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("failed to write standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("failed to write '" + path + "'");
}

Graph load_graph(const std::string& family, const std::string& file) {
  if (!family.empty()) return family_graph(family);
  return parse_graph(read_input(file));
}

double snap(double x) { return std::abs(x) < 5e-11 ? 0.0 : x; }

std::string fmt(double x, bool four_places) {
  char buf[40];
  std::snprintf(buf, sizeof buf, four_places ? "%.4f" : "%.10g", snap(x));
  return buf;
}

double rounded(double x, bool four_places) { return std::stod(fmt(x, four_places)); }

json spectrum_json(const Spectrum& s, bool four_places) {
  json out = json::array();
  for (const auto& p : s.pairs()) out.push_back({{"value", rounded(p.value, four_places)}, {"multiplicity", p.multiplicity}});
  return out;
}

double default_tol() {
  if (const char* env = std::getenv("SPECLAP_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0) return v;
    throw CLI::ValidationError("SPECLAP_TOL", std::string("not a positive number: '") + env + "'");
  }
  return kDefaultClusterTol;
}

void add_input(CLI::App* cmd, std::string& family, Common& c) {
  auto* fam = cmd->add_option("--family", family, "Built-in graph family, e.g. U2:1, K5, Kmulti:2,2,2, thm41:2");
  auto* file = cmd->add_option("--file", c.file, "Input file (graph6 or JSON); default stdin");
  fam->excludes(file);
}

// ---- spectrum -----------------------------------------------------------

struct SpectrumArgs {
  std::string family;
  Common io;
  std::string format = "text";
  bool adjacency = false;
  bool four_places = false;
  double tol = 0.0;
};

int run_spectrum(const SpectrumArgs& a) {
  const Graph g = load_graph(a.family, a.io.file);
  const Spectrum l = l_spectrum(g, a.tol);
  std::optional<Spectrum> adj;
  if (a.adjacency) adj = adjacency_spectrum(g, a.tol);

  std::ostringstream out;
  if (a.format == "json") {
    json j = {{"schema", "speclap.spectrum/1"}, {"n", g.order()}, {"edges", g.edge_count()}, {"cluster_tol", a.tol},
              {"distinct", l.distinct_count()}, {"laplacian", spectrum_json(l, a.four_places)}};
    if (adj) j["adjacency"] = spectrum_json(*adj, a.four_places);
    out << j.dump(2) << '\n';
  } else if (a.format == "csv") {
    out << "matrix,value,multiplicity\n";
    for (const auto& p : l.pairs()) out << "laplacian," << fmt(p.value, a.four_places) << ',' << p.multiplicity << '\n';
    if (adj)
      for (const auto& p : adj->pairs()) out << "adjacency," << fmt(p.value, a.four_places) << ',' << p.multiplicity << '\n';
  } else {
    auto block = [&](const char* title, const Spectrum& s) {
      out << title << " (" << s.distinct_count() << " distinct)\n";
      for (const auto& p : s.pairs()) out << "  " << fmt(p.value, a.four_places) << "  x" << p.multiplicity << '\n';
    };
    block("L-spectrum", l);
    if (adj) block("adjacency spectrum", *adj);
  }
  write_output(a.io.output, out.str());
  return 0;
}

// ---- construct ----------------------------------------------------------

struct ConstructArgs {
  std::string family;
  std::string format = "graph6";
  std::string output;
};

int run_construct(const ConstructArgs& a) {
  const Graph g = family_graph(a.family);
  write_output(a.output, a.format == "json" ? to_json(g).dump() + "\n" : to_graph6(g) + "\n");
  return 0;
}

// ---- hadamard -----------------------------------------------------------

struct HadamardArgs {
  std::string method = "auto";
  int order = 0;
  int q = 0;
  bool normalize = false;
  bool check = false;
  Common io;
};

FiniteField field_for(int q) {
  const auto pk = prime_power(q);
  if (!pk) throw std::invalid_argument("--q " + std::to_string(q) + " is not a prime power");
  return FiniteField::make(pk->first, pk->second);
}

int run_hadamard(const HadamardArgs& a) {
  if (a.check) {
    std::optional<HadamardMatrix> h;
    std::string why;
    try {
      h = HadamardMatrix::from_text(read_input(a.io.file));
    } catch (const std::invalid_argument& e) {
      why = e.what();
    }
    json j = {{"check", "hadamard"}, {"pass", h.has_value()}};
    if (h) j["order"] = h->order(), j["normalized"] = h->is_normalized();
    else j["note"] = why;
    write_output(a.io.output, j.dump(2) + "\n");
    return h ? 0 : kExitFail;
  }
  const auto need = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  std::optional<HadamardMatrix> h;
  if (a.method == "sylvester") {
    need(a.order > 0, "--method sylvester needs --order");
    h = sylvester_power(a.order);
  } else if (a.method == "paley1") {
    need(a.q > 0, "--method paley1 needs --q");
    h = paley1(field_for(a.q));
  } else if (a.method == "paley2") {
    need(a.q > 0, "--method paley2 needs --q");
    h = paley2(field_for(a.q));
  } else {
    need(a.order > 0, "--method auto needs --order");
    h = hadamard_of_order(a.order);
  }
  if (a.normalize) h = normalize(*h);
  write_output(a.io.output, h->to_text());
  return 0;
}

// ---- design -------------------------------------------------------------

struct DesignArgs {
  bool to_design = false;
  bool complement = false;
  bool validate = false;
  bool incidence_graph = false;
  std::string format = "graph6";
  Common io;
};

int run_design(const DesignArgs& a) {
  const std::string text = read_input(a.io.file);
  std::optional<Design> d;
  std::string why;
  try {
    if (a.to_design) {
      d = hadamard_to_design(HadamardMatrix::from_text(text));
    } else {
      json j;
      try {
        j = json::parse(text);
      } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("design JSON: ") + e.what());
      }
      d = Design::from_json(j);
    }
    if (a.complement) d = complement(*d);
  } catch (const std::invalid_argument& e) {
    if (!a.validate) throw;
    why = e.what();
  }

  if (a.validate) {
    json j = {{"check", "design"}, {"pass", d.has_value()}};
    if (d) {
      j["parameters"] = {{"v", d->v()}, {"b", d->b()}, {"r", d->r()}, {"k", d->k()}, {"lambda", d->lambda()}};
      j["symmetric"] = d->is_symmetric();
      j["fisher"] = !d->is_symmetric() || d->lambda() * (d->v() - 1) == d->k() * (d->k() - 1);
    } else {
      j["note"] = why;
    }
    write_output(a.io.output, j.dump(2) + "\n");
    return d ? 0 : kExitFail;
  }
  if (a.incidence_graph) {
    const Graph g = incidence_graph(*d).graph;
    write_output(a.io.output, a.format == "json" ? to_json(g).dump() + "\n" : to_graph6(g) + "\n");
    return 0;
  }
  write_output(a.io.output, d->to_json().dump(2) + "\n");
  return 0;
}

// ---- verify -------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::string family;
  std::optional<int> t;
  double tol = 0.0;
  Common io;
};

int run_verify(const VerifyArgs& a) {
  VerifyOptions opts;
  opts.cluster_tol = a.tol;
  opts.t = a.t;
  if (a.t && a.suite != "thm41") throw std::invalid_argument("--t only applies to the thm41 suite");
  std::optional<Graph> g;
  if (!(a.suite == "thm41" && a.t && a.family.empty() && a.io.file.empty())) g = load_graph(a.family, a.io.file);
  if (a.t && g) throw std::invalid_argument("--t cannot be combined with an input graph");
  const CheckReport r = run_suite(a.suite, g, opts);
  json j = to_json(r);
  j["schema"] = kReportSchema;
  write_output(a.io.output, j.dump(2) + "\n");
  return r.status == CheckStatus::fail ? kExitFail : 0;
}

// ---- enumerate ----------------------------------------------------------

struct EnumerateArgs {
  std::string scan;
  int nmax = 0;
  int param_max = 6;
  std::string predicate;
  int jobs = 1;
  double tol = 0.0;
  bool allow_eight = false;
  std::string format = "json";
  std::string output;
};

int run_enumerate(const EnumerateArgs& a) {
  ScanOptions opts;
  opts.jobs = a.jobs;
  opts.cluster_tol = a.tol;
  opts.allow_order_eight = a.allow_eight;
  ScanReport r;
  if (a.scan == "connected") {
    r = scan_connected(a.nmax > 0 ? a.nmax : 7, predicate_by_name(a.predicate.empty() ? "three-with-one" : a.predicate),
                       opts);
  } else if (a.scan == "unicyclic") {
    r = scan_unicyclic(a.param_max, predicate_by_name(a.predicate.empty() ? "any" : a.predicate), opts);
  } else {
    if (!a.predicate.empty()) throw std::invalid_argument("bipartite-pendant uses a fixed predicate");
    r = scan_bipartite_pendant(a.nmax > 0 ? a.nmax : 8, opts);
  }
  std::ostringstream out;
  if (a.format == "csv")
    write_csv(out, r);
  else
    out << to_json(r).dump(2) << '\n';
  write_output(a.output, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normalized Laplacian spectra, Hadamard designs and exhaustive small-graph scans"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "speclap 1.0");

  double env_tol = kDefaultClusterTol;
  try {
    env_tol = default_tol();
  } catch (const CLI::Error& e) {
    std::cerr << "speclap: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto positive = CLI::PositiveNumber;

  SpectrumArgs sa;
  sa.tol = env_tol;
  auto* spectrum = app.add_subcommand("spectrum", "Clustered L-spectrum of a graph");
  add_input(spectrum, sa.family, sa.io);
  spectrum->add_option("--format", sa.format)->check(CLI::IsMember({"json", "csv", "text"}));
  spectrum->add_flag("--adjacency", sa.adjacency, "Also print the adjacency spectrum");
  spectrum->add_option("--tol", sa.tol, "Cluster tolerance")->check(positive);
  spectrum->add_flag("--paper-precision", sa.four_places, "Round to 4 decimals");
  spectrum->add_option("-o,--output", sa.io.output);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Emit a family graph");
  construct->add_option("family", ca.family, "e.g. U4:1,1,1, C6, Kmulti:3,3,3, thm41:1")->required();
  construct->add_option("--format", ca.format)->check(CLI::IsMember({"graph6", "json"}));
  construct->add_option("-o,--output", ca.output);

  HadamardArgs ha;
  auto* hadamard = app.add_subcommand("hadamard", "Build, normalise or check Hadamard matrices");
  hadamard->add_option("--method", ha.method)->check(CLI::IsMember({"auto", "sylvester", "paley1", "paley2"}));
  auto* order_opt = hadamard->add_option("--order", ha.order)->check(positive);
  auto* q_opt = hadamard->add_option("--q", ha.q, "Field order for Paley constructions")->check(positive);
  order_opt->excludes(q_opt);
  hadamard->add_flag("--normalize", ha.normalize);
  auto* check_flag = hadamard->add_flag("--check", ha.check, "Validate a matrix read from --file or stdin");
  check_flag->excludes(order_opt)->excludes(q_opt);
  hadamard->add_option("--file", ha.io.file);
  hadamard->add_option("-o,--output", ha.io.output);

  DesignArgs da;
  auto* design = app.add_subcommand("design", "Hadamard to design, complements, validation, incidence graphs");
  design->add_flag("--to-design", da.to_design, "Input is a Hadamard matrix in +/- text form");
  design->add_flag("--complement", da.complement);
  auto* validate = design->add_flag("--validate", da.validate, "Report parameters instead of emitting the design");
  auto* ig = design->add_flag("--incidence-graph", da.incidence_graph);
  validate->excludes(ig);
  design->add_option("--format", da.format, "Incidence graph format")->check(CLI::IsMember({"graph6", "json"}));
  design->add_option("--file", da.io.file);
  design->add_option("-o,--output", da.io.output);

  VerifyArgs va;
  va.tol = env_tol;
  auto* verify = app.add_subcommand("verify", "Run a named check suite on a graph");
  verify->add_option("suite", va.suite)->required()->check(CLI::IsMember(suite_names()));
  add_input(verify, va.family, va.io);
  verify->add_option("--t", va.t, "thm41: check the order-8t construction")->check(positive);
  verify->add_option("--tol", va.tol, "Cluster tolerance")->check(positive);
  verify->add_option("-o,--output", va.io.output);

  EnumerateArgs ea;
  ea.tol = env_tol;
  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive scans");
  enumerate->add_option("scan", ea.scan)->required()->check(CLI::IsMember({"connected", "unicyclic", "bipartite-pendant"}));
  enumerate->add_option("--nmax", ea.nmax)->check(positive);
  enumerate->add_option("--param-max", ea.param_max)->check(positive);
  enumerate->add_option("--predicate", ea.predicate, "three-with-one, second-least-one, distinct:<k>, any");
  enumerate->add_option("--jobs", ea.jobs)->check(positive);
  enumerate->add_option("--tol", ea.tol, "Cluster tolerance")->check(positive);
  enumerate->add_flag("--allow-order-eight", ea.allow_eight, "Let the connected scan reach 8 vertices");
  enumerate->add_option("--format", ea.format)->check(CLI::IsMember({"json", "csv"}));
  enumerate->add_option("-o,--output", ea.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*spectrum) return run_spectrum(sa);
    if (*construct) return run_construct(ca);
    if (*hadamard) return run_hadamard(ha);
    if (*design) return run_design(da);
    if (*verify) return run_verify(va);
    if (*enumerate) return run_enumerate(ea);
  } catch (const IoError& e) {
    std::cerr << "speclap: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "speclap: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "speclap: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "speclap: malformed JSON: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
