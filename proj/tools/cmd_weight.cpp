#include <iostream>
#include <memory>

#include "cli_common.hpp"
#include "extremal/errors.hpp"
#include "extremal/weighting.hpp"

namespace lab {

namespace {

namespace wt = extremal::weighting;
using extremal::Graph;
using extremal::Rational;

void print_assignment_csv(const wt::WeightAssignment& w) {
  print_csv_row({"u", "v", "weight"});
  for (std::size_t i = 0; i < w.edges.size(); ++i)
    print_csv_row({std::to_string(w.edges[i].first), std::to_string(w.edges[i].second),
                   extremal::fraction_string(w.weights[i])});
}

void print_assignment_table(const wt::WeightAssignment& w) {
  for (std::size_t i = 0; i < w.edges.size(); ++i)
    std::cout << "  " << w.edges[i].first << '-' << w.edges[i].second << "  "
              << pretty_rational(w.weights[i]) << '\n';
}

struct StandardOpts {
  CommonOpts common;
  std::string in;
  bool no_edges = false;
};

void run_standard(const StandardOpts& o) {
  Graph g = read_graph_arg(o.in);
  extremal::SearchOptions search{.workers = o.common.workers};
  wt::WeightAssignment w = wt::standard_weighting(g, search);
  wt::QuarterBoundReport bound = wt::verify_quarter_bound(g);

  if (o.common.format == "csv") {
    print_assignment_csv(w);
    return;
  }
  if (o.common.format == "table") {
    std::cout << "total   " << pretty_rational(w.total) << '\n'
              << "bound   " << pretty_rational(bound.bound) << "  (n^2/4)\n"
              << "holds   " << (bound.holds ? "yes" : "no") << '\n';
    if (!o.no_edges) print_assignment_table(w);
    return;
  }
  nlohmann::json out{{"mode", "standard"},
                     {"n", g.vertex_count()},
                     {"total", extremal::rational_json(w.total)},
                     {"bound", extremal::rational_json(bound.bound)},
                     {"holds", bound.holds}};
  if (!o.no_edges) out["assignment"] = wt::weight_assignment_json(w);
  print_json(out);
}

struct ChubbyOpts {
  CommonOpts common;
  std::string in;
  bool no_edges = false;
};

void run_chubby(const ChubbyOpts& o) {
  Graph g = read_graph_arg(o.in);
  extremal::SearchOptions search{.workers = o.common.workers};
  wt::WeightAssignment w = wt::chubby_weighting_k5free(g, search);

  if (o.common.format == "csv") {
    print_assignment_csv(w);
    return;
  }
  if (o.common.format == "table") {
    std::cout << "total   " << pretty_rational(w.total) << '\n';
    if (!o.no_edges) print_assignment_table(w);
    return;
  }
  nlohmann::json out{{"mode", "chubby"},
                     {"n", g.vertex_count()},
                     {"total", extremal::rational_json(w.total)}};
  if (!o.no_edges) out["assignment"] = wt::weight_assignment_json(w);
  print_json(out);
}

struct HeavyFreeOpts {
  CommonOpts common;
  std::string in;
  std::string a = "2/3";
  bool no_edges = false;
};

void run_heavyfree(const HeavyFreeOpts& o) {
  Graph g = read_graph_arg(o.in);
  Rational a = parse_rational_arg(o.a, "--a");
  extremal::SearchOptions search{.workers = o.common.workers};
  wt::HeavyFreeOptimum opt = wt::heavy_free_optimum(g, a, search);

  if (o.common.format == "csv") {
    print_assignment_csv(opt.witness);
    return;
  }
  if (o.common.format == "table") {
    std::cout << "a       " << pretty_rational(a) << '\n'
              << "value   " << pretty_rational(opt.value) << '\n'
              << "cover   " << opt.cover_size << " edges\n";
    if (!o.no_edges) print_assignment_table(opt.witness);
    return;
  }
  nlohmann::json out{{"mode", "heavyfree"},
                     {"n", g.vertex_count()},
                     {"a", extremal::rational_json(a)},
                     {"value", extremal::rational_json(opt.value)},
                     {"cover_size", opt.cover_size}};
  if (!o.no_edges) out["assignment"] = wt::weight_assignment_json(opt.witness);
  print_json(out);
}

struct ScanOpts {
  CommonOpts common;
  std::string family;
  int n = 0;
  std::string a = "2/3";
};

void run_scan(const ScanOpts& o) {
  wt::ScanRecord rec;
  if (o.family == "chubby") {
    rec = wt::extremal_chubby_scan(o.n, o.common.workers, o.common.seed);
  } else {
    Rational a = parse_rational_arg(o.a, "--a");
    rec = wt::extremal_heavy_free_scan(o.n, a, o.common.workers, o.common.seed);
  }
  if (o.common.format == "csv") {
    print_csv_row({"n", "family", "a", "max_value", "method", "exhaustive", "witness"});
    print_csv_row({std::to_string(rec.n), o.family, extremal::fraction_string(rec.a),
                   extremal::fraction_string(rec.max_value), rec.method,
                   rec.exhaustive ? "1" : "0", rec.witness_graph6});
    return;
  }
  if (o.common.format == "table") {
    std::cout << "family      " << o.family << '\n' << "n           " << rec.n << '\n';
    if (o.family == "heavyfree") std::cout << "a           " << pretty_rational(rec.a) << '\n';
    std::cout << "max value   " << pretty_rational(rec.max_value) << '\n'
              << "method      " << rec.method << (rec.exhaustive ? " (exhaustive)" : "")
              << '\n'
              << "witness     " << rec.witness_graph6 << '\n';
    return;
  }
  nlohmann::json out = wt::scan_record_json(rec);
  out["family"] = o.family;
  print_json(out);
}

}  // namespace

void register_cmd_weight(CLI::App& app) {
  CLI::App* cmd = app.add_subcommand(
      "weight", "clique edge-weightings: totals, bounds and extremal scans");
  cmd->require_subcommand(1);

  auto so = std::make_shared<StandardOpts>();
  CLI::App* standard = cmd->add_subcommand(
      "standard", "largest-clique rule r/(2(r-1)) with the n^2/4 bound check");
  standard->add_option("--in", so->in, "graph6 file, - for stdin")->required();
  standard->add_flag("--no-edges", so->no_edges, "omit the per-edge table");
  add_common_flags(standard, so->common, {"json", "table", "csv"});
  standard->callback([so] { run_standard(*so); });

  auto co = std::make_shared<ChubbyOpts>();
  CLI::App* chubby =
      cmd->add_subcommand("chubby", "three-level rule for graphs with no K5");
  chubby->add_option("--in", co->in, "graph6 file, - for stdin")->required();
  chubby->add_flag("--no-edges", co->no_edges, "omit the per-edge table");
  add_common_flags(chubby, co->common, {"json", "table", "csv"});
  chubby->callback([co] { run_chubby(*co); });

  auto ho = std::make_shared<HeavyFreeOpts>();
  CLI::App* heavyfree = cmd->add_subcommand(
      "heavyfree", "optimal {a,1} weighting with no all-above-a triangle (K4-free input)");
  heavyfree->add_option("--in", ho->in, "graph6 file, - for stdin")->required();
  heavyfree->add_option("--a", ho->a, "low weight level")->capture_default_str();
  heavyfree->add_flag("--no-edges", ho->no_edges, "omit the per-edge table");
  add_common_flags(heavyfree, ho->common, {"json", "table", "csv"});
  heavyfree->callback([ho] { run_heavyfree(*ho); });

  auto sc = std::make_shared<ScanOpts>();
  CLI::App* scan =
      cmd->add_subcommand("scan", "maximum total over a clique-free family at order n");
  scan->add_option("--family", sc->family, "chubby (K5-free) or heavyfree (K4-free)")
      ->required()
      ->check(CLI::IsMember({"chubby", "heavyfree"}));
  scan->add_option("--n", sc->n, "graph order")->required()->check(CLI::Range(1, 16));
  scan->add_option("--a", sc->a, "low weight level (heavyfree only)")
      ->capture_default_str();
  add_common_flags(scan, sc->common, {"json", "table", "csv"});
  scan->callback([sc] { run_scan(*sc); });
}

}  // namespace lab
