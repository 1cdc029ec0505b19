#include <algorithm>
#include <iostream>
#include <memory>

#include "cli_common.hpp"
#include "extremal/canonical.hpp"
#include "extremal/clique.hpp"
#include "extremal/graph6.hpp"

namespace lab {

namespace {

using extremal::Graph;

struct GraphOpts {
  CommonOpts common;
  std::string in;
  std::string adj;
  bool complement = false;
  bool canonical = false;
};

void run(const GraphOpts& o) {
  Graph g = !o.in.empty() ? read_graph_arg(o.in)
                          : Graph::from_adjacency_json(read_json_arg(o.adj));
  if (o.complement) g = g.complement();
  if (o.canonical) g = extremal::canonical_graph(g);

  if (o.common.format == "graph6") {
    std::cout << extremal::to_graph6(g) << '\n';
    return;
  }

  extremal::SearchOptions search{.workers = o.common.workers};
  auto omega = extremal::max_clique(g, search);
  auto alpha = extremal::max_independent_set(g, search);
  int n = g.vertex_count();
  std::vector<int> degrees(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) degrees[static_cast<std::size_t>(v)] = g.degree(v);
  int min_deg = n ? *std::min_element(degrees.begin(), degrees.end()) : 0;
  int max_deg = n ? *std::max_element(degrees.begin(), degrees.end()) : 0;

  if (o.common.format == "csv") {
    print_csv_row({"n", "edges", "omega", "alpha", "min_degree", "max_degree"});
    print_csv_row({std::to_string(n), std::to_string(g.edge_count()),
                   std::to_string(omega.size), std::to_string(alpha.size),
                   std::to_string(min_deg), std::to_string(max_deg)});
    return;
  }
  if (o.common.format == "table") {
    std::cout << "n          " << n << '\n'
              << "edges      " << g.edge_count() << '\n'
              << "omega      " << omega.size << "  clique";
    for (int v : omega.witness.to_vector()) std::cout << ' ' << v;
    std::cout << '\n' << "alpha      " << alpha.size << "  independent";
    for (int v : alpha.witness.to_vector()) std::cout << ' ' << v;
    std::cout << '\n'
              << "degrees    " << min_deg << ".." << max_deg << '\n'
              << "graph6     " << extremal::to_graph6(g) << '\n';
    return;
  }
  print_json(nlohmann::json{{"n", n},
                            {"edges", g.edge_count()},
                            {"graph6", extremal::to_graph6(g)},
                            {"omega", omega.size},
                            {"omega_witness", omega.witness.to_vector()},
                            {"alpha", alpha.size},
                            {"alpha_witness", alpha.witness.to_vector()},
                            {"min_degree", min_deg},
                            {"max_degree", max_deg},
                            {"degrees", degrees},
                            {"adjacency", g.adjacency_json()}});
}

}  // namespace

void register_cmd_graph(CLI::App& app) {
  auto o = std::make_shared<GraphOpts>();
  CLI::App* cmd = app.add_subcommand(
      "graph", "invariants (clique, independence, degrees) and format conversion");
  auto* in = cmd->add_option("--in", o->in, "graph6 file, - for stdin");
  auto* adj = cmd->add_option("--adj", o->adj, "adjacency JSON file, - for stdin");
  in->excludes(adj);
  cmd->add_flag("--complement", o->complement, "use the complement");
  cmd->add_flag("--canonical", o->canonical, "canonical relabeling (after --complement)");
  add_common_flags(cmd, o->common, {"json", "table", "csv", "graph6"});
  cmd->callback([o, in, adj] {
    if (!in->count() && !adj->count())
      throw extremal::PreconditionError("graph: need --in or --adj");
    run(*o);
  });
}

}  // namespace lab
