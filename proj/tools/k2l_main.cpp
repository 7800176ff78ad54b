// Command line front end: generators, the exhaustive minor oracle, the
// extraction engines, audits and certificate verification, glued together
// with stable text I/O. Graphs arrive on stdin or via --in; identical
// invocations produce byte-identical output.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "k2l/connectivity.hpp"
#include "k2l/contraction.hpp"
#include "k2l/families.hpp"
#include "k2l/graph_io.hpp"
#include "k2l/isomorphism.hpp"
#include "k2l/minor_oracle.hpp"
#include "k2l/nested_cuts.hpp"
#include "k2l/steiner.hpp"
#include "k2l/theorem.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIndefinite = 1;  // saturated / inconclusive / budget / invalid
constexpr int kExitUsage = 2;

k2l::Graph load_graph(const std::string& in_path) {
  if (in_path.empty()) return k2l::read_graph(std::cin);
  return k2l::read_graph_file(in_path);
}

std::string format_slack_halves(long long twice) {
  long long whole = twice / 2;
  if (twice % 2 == 0) return std::to_string(whole);
  // keep exact halves readable, e.g. "13.5" or "-2.5"
  long long mag = twice < 0 ? -twice : twice;
  std::string s = (twice < 0 ? "-" : "") + std::to_string(mag / 2) + ".5";
  return s;
}

int cmd_gen(const std::string& family, const std::vector<int>& params,
            const std::string& out_path) {
  k2l::Graph g = [&] {
    if (family == "gadget_wheel_delta") {
      if (params.size() != 2)
        throw k2l::ParamTooSmallError("gadget_wheel_delta expects n delta");
      return k2l::gadget_wheel_delta(params[0], params[1]);
    }
    return k2l::generate({k2l::parse_family_kind(family), params});
  }();
  std::ostringstream os;
  os << "# " << family;
  if (family == "king") {
    os << " rows=" << params[0] << " cols=" << params[1];
  } else if (family == "gadget_wheel_delta") {
    os << " n=" << params[0] << " delta=" << params[1];
  } else if (family == "complete_bipartite_2l") {
    os << " ell=" << params[0];
  } else {
    os << " n=" << params[0];
  }
  os << '\n';
  k2l::write_graph(os, g);
  if (out_path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(out_path);
    f << os.str();
  }
  return kExitOk;
}

int cmd_minor_test(const k2l::Graph& g, int ell, const k2l::OracleBudget& budget) {
  k2l::OracleResult r = k2l::find_k2l_minor(g, ell, budget);
  if (const auto* model = std::get_if<k2l::MinorModel>(&r)) {
    std::cout << "result: minor-found\n";
    k2l::write_certificate(std::cout, *model);
    return kExitOk;
  }
  if (const auto* no = std::get_if<k2l::NoMinor>(&r)) {
    std::cout << "result: no-minor\n";
    std::cout << "nodes-expanded: " << no->nodes_expanded << '\n';
    return kExitOk;
  }
  std::cout << "result: budget-exhausted\n";
  std::cout << "nodes-expanded: " << std::get<k2l::BudgetExhausted>(r).nodes_expanded
            << '\n';
  return kExitIndefinite;
}

int cmd_minor_extract(const k2l::Graph& g, int ell, const std::string& engine,
                      int x_flag, const k2l::OracleBudget& budget) {
  if (engine == "oracle") {
    k2l::OracleResult r = k2l::find_k2l_minor(g, ell, budget);
    if (const auto* model = std::get_if<k2l::MinorModel>(&r)) {
      k2l::write_certificate(std::cout, *model);
      return kExitOk;
    }
    std::cerr << (std::holds_alternative<k2l::NoMinor>(r)
                      ? "no minor exists\n"
                      : "budget exhausted\n");
    return kExitIndefinite;
  }
  // steiner engine: x defaults to the lowest vertex of maximum degree
  k2l::Vertex x = x_flag;
  if (x < 0) {
    x = 0;
    for (k2l::Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) > g.degree(x)) x = v;
  }
  k2l::MaxLeafResult r = k2l::max_leaf_search(g, x, ell);
  if (const auto* model = std::get_if<k2l::MinorModel>(&r.outcome)) {
    k2l::write_certificate(std::cout, *model);
    return kExitOk;
  }
  const auto& sat = std::get<k2l::SaturationInfo>(r.outcome);
  std::cerr << "saturated with " << sat.tree.leaf_count() << " leaves\n";
  return kExitIndefinite;
}

int cmd_verify_cert(const k2l::Graph& g, const std::string& cert_path) {
  k2l::MinorModel model = [&] {
    if (cert_path.empty()) return k2l::read_certificate(std::cin);
    std::ifstream f(cert_path);
    if (!f) throw k2l::FormatError("cannot open certificate: " + cert_path);
    return k2l::read_certificate(f);
  }();
  auto res = k2l::verify_model(g, model);
  std::cout << "valid: " << (res.ok ? "true" : "false") << '\n';
  if (!res.ok) std::cout << "violation: " << res.violation << '\n';
  return res.ok ? kExitOk : kExitIndefinite;
}

int cmd_audit(const k2l::Graph& g, int ell) {
  k2l::FamilyAudit a = k2l::audit(g, ell);
  std::cout << "n: " << a.n << '\n';
  std::cout << "m: " << a.m << '\n';
  std::cout << "min-degree: " << a.min_degree << '\n';
  std::cout << "max-degree: " << a.max_degree << '\n';
  std::cout << "connectivity: " << a.connectivity << '\n';
  std::cout << "regular: " << (a.regular ? "true" : "false") << '\n';
  std::cout << "twin-pairs: " << a.twin_pairs.size() << '\n';
  std::cout << "twin-pairs-degree-5: " << a.twin_pairs_deg5.size() << '\n';
  std::cout << "density-bound: " << format_slack_halves(a.density_bound_x2) << '\n';
  std::cout << "density-slack: " << format_slack_halves(a.density_slack_x2) << '\n';
  std::cout << "density-ok: " << (a.density_ok ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_twins(const k2l::Graph& g, int degree) {
  auto pairs = degree < 0 ? k2l::find_twins(g) : k2l::find_twins(g, degree);
  for (auto [u, v] : pairs) std::cout << u << ' ' << v << '\n';
  return kExitOk;
}

int cmd_layers(const k2l::Graph& g, int source) {
  k2l::Layering lay = k2l::bfs_layering(g, source);
  for (size_t i = 0; i < lay.layers.size(); ++i) {
    std::cout << i << ':';
    for (k2l::Vertex v : lay.layers[i]) std::cout << ' ' << v;
    std::cout << '\n';
  }
  return kExitOk;
}

int cmd_king_contract(int rows, int cols) {
  if (rows != 2 || cols < 2) {
    std::cerr << "king-contract supports rows=2, cols>=2\n";
    return kExitUsage;
  }
  k2l::Graph big = k2l::king(rows, cols);
  k2l::Graph small = k2l::king(rows, cols - 1);
  // contract the two horizontal edges spanning the middle column pair
  int c1 = cols / 2 - 1, c2 = cols / 2;
  std::vector<k2l::Edge> middles = {
      {0 * cols + c1, 0 * cols + c2},
      {1 * cols + c1, 1 * cols + c2},
  };
  auto res = k2l::contract_edges(big, middles);
  bool iso = k2l::is_isomorphic_small(res.graph, small);
  std::cout << "isomorphic-to-king-" << rows << 'x' << (cols - 1) << ": "
            << (iso ? "true" : "false") << '\n';
  std::cout << "vertices-removed: "
            << big.vertex_count() - res.graph.vertex_count() << '\n';
  std::cout << "edges-removed: " << big.edge_count() - res.graph.edge_count()
            << '\n';
  std::cout << "min-degree-preserved: "
            << (big.min_degree() == res.graph.min_degree() ? "true" : "false")
            << '\n';
  std::cout << "connectivity-preserved: "
            << (k2l::vertex_connectivity(big) ==
                        k2l::vertex_connectivity(res.graph)
                    ? "true"
                    : "false")
            << '\n';
  return iso ? kExitOk : kExitIndefinite;
}

int cmd_theorem_drive(const k2l::Graph& g, const k2l::DriverConfig& cfg) {
  k2l::Witness w = k2l::theorem_driver(g, cfg);
  k2l::write_witness(std::cout, w);
  bool definitive = std::holds_alternative<k2l::MinorFound>(w) ||
                    std::holds_alternative<k2l::TwinsFound>(w);
  return definitive ? kExitOk : kExitIndefinite;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for K_{2,l} minor search, certificates and audits"};
  app.require_subcommand(1);

  std::string in_path;
  int threads = 1;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a named family graph");
  std::string family;
  std::vector<int> params;
  std::string out_path;
  gen->add_option("family", family, "family name")->required();
  gen->add_option("params", params, "integer parameters")->required();
  gen->add_option("--out", out_path, "output file (default stdout)");
  gen->add_option("--threads", threads, "parallel workers (unused)");

  // minor-test
  auto* mt = app.add_subcommand("minor-test", "exhaustive minor decision");
  int ell = 0;
  long long node_limit = 10'000'000;
  double time_limit = 60.0;
  mt->add_option("--ell", ell, "pattern size")->required();
  mt->add_option("--in", in_path, "graph file (default stdin)");
  mt->add_option("--node-limit", node_limit, "search node budget");
  mt->add_option("--time-limit", time_limit, "wall clock budget, seconds");
  mt->add_option("--threads", threads, "parallel workers");

  // minor-extract
  auto* mx = app.add_subcommand("minor-extract", "emit a minor certificate");
  std::string engine = "oracle";
  int x_flag = -1;
  mx->add_option("--ell", ell, "pattern size")->required();
  mx->add_option("--in", in_path, "graph file (default stdin)");
  mx->add_option("--engine", engine, "oracle | steiner")
      ->check(CLI::IsMember({"oracle", "steiner"}));
  mx->add_option("--x", x_flag, "center vertex for the steiner engine");
  mx->add_option("--node-limit", node_limit, "search node budget");
  mx->add_option("--time-limit", time_limit, "wall clock budget, seconds");
  mx->add_option("--threads", threads, "parallel workers");

  // verify-cert
  auto* vc = app.add_subcommand("verify-cert", "verify a minor certificate");
  std::string cert_path;
  vc->add_option("--in", in_path, "graph file")->required();
  vc->add_option("--cert", cert_path, "certificate file (default stdin)");
  vc->add_option("--threads", threads, "parallel workers (unused)");

  // audit
  auto* au = app.add_subcommand("audit", "degree/connectivity/density audit");
  au->add_option("--ell", ell, "pattern size for the density bound")->required();
  au->add_option("--in", in_path, "graph file (default stdin)");
  au->add_option("--threads", threads, "parallel workers (unused)");

  // twins
  auto* tw = app.add_subcommand("twins", "list twin pairs");
  int degree = -1;
  tw->add_option("--degree", degree, "restrict to this degree");
  tw->add_option("--in", in_path, "graph file (default stdin)");
  tw->add_option("--threads", threads, "parallel workers (unused)");

  // layers
  auto* ly = app.add_subcommand("layers", "breadth layering from a source");
  int source = 0;
  ly->add_option("--source", source, "source vertex")->required();
  ly->add_option("--in", in_path, "graph file (default stdin)");
  ly->add_option("--threads", threads, "parallel workers (unused)");

  // king-contract
  auto* kc = app.add_subcommand("king-contract",
                                "contract the middle column pair of a king graph");
  int rows = 2, cols = 4;
  kc->add_option("--rows", rows, "rows (2)");
  kc->add_option("--cols", cols, "columns");
  kc->add_option("--threads", threads, "parallel workers (unused)");

  // theorem-drive
  auto* td = app.add_subcommand("theorem-drive", "full extraction pipeline");
  long long override_d = -1, override_distance = -1, override_n = -1;
  bool skip_hyp = false;
  td->add_option("--ell", ell, "pattern size")->required();
  td->add_option("--in", in_path, "graph file (default stdin)");
  td->add_option("--override-d", override_d, "replace d = ell^3/2");
  td->add_option("--override-distance", override_distance,
                 "replace the required s-t distance");
  td->add_option("--override-n-threshold", override_n,
                 "replace the size threshold");
  td->add_flag("--skip-hypotheses", skip_hyp, "skip the hypothesis checks");
  td->add_option("--threads", threads, "parallel workers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;  // --help exits clean
  }

  try {
    if (gen->parsed()) return cmd_gen(family, params, out_path);
    if (kc->parsed()) return cmd_king_contract(rows, cols);

    k2l::Graph g = load_graph(in_path);
    k2l::OracleBudget budget{node_limit, time_limit, threads};
    if (mt->parsed()) return cmd_minor_test(g, ell, budget);
    if (mx->parsed()) return cmd_minor_extract(g, ell, engine, x_flag, budget);
    if (vc->parsed()) return cmd_verify_cert(g, cert_path);
    if (au->parsed()) return cmd_audit(g, ell);
    if (tw->parsed()) return cmd_twins(g, degree);
    if (ly->parsed()) return cmd_layers(g, source);
    if (td->parsed()) {
      k2l::DriverConfig cfg;
      cfg.ell = ell;
      if (override_d >= 0) cfg.d_override = override_d;
      if (override_distance >= 0) cfg.distance_override = override_distance;
      if (override_n >= 0) cfg.n_threshold_override = override_n;
      cfg.skip_hypotheses = skip_hyp;
      return cmd_theorem_drive(g, cfg);
    }
  } catch (const k2l::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
