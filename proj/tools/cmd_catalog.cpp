#include <iomanip>
#include <iostream>
#include <memory>

#include "cli_common.hpp"
#include "extremal/catalog.hpp"
#include "extremal/errors.hpp"

namespace lab {

namespace {

namespace rt = extremal::rt;

struct CatalogOpts {
  CommonOpts common;
  int s = 0;
  std::string f_class;
  int bound_t = 0;
  bool assume_separation = false;
};

std::vector<rt::DensityCatalogEntry> selected(const CatalogOpts& o) {
  std::vector<rt::DensityCatalogEntry> rows;
  std::vector<int> orders = o.s ? std::vector<int>{o.s} : rt::catalog_orders();
  for (int s : orders) {
    if (!o.f_class.empty()) {
      for (const auto& e : rt::catalog_lookup(s, o.f_class)) rows.push_back(e);
    } else {
      for (const auto& e : rt::catalog_entries(s)) rows.push_back(e);
    }
  }
  return rows;
}

void run(const CatalogOpts& o) {
  if (o.bound_t) {
    int bound = rt::cluster_clique_bound(o.bound_t, o.assume_separation);
    if (o.common.format == "table") {
      std::cout << "cluster graphs of K" << o.bound_t << "-free hosts are K" << bound
                << "-free" << (o.assume_separation ? " (separation assumed)" : "")
                << '\n';
      return;
    }
    print_json(nlohmann::json{{"t", o.bound_t},
                              {"assume_separation", o.assume_separation},
                              {"forbidden_clique", bound}});
    return;
  }

  std::vector<rt::DensityCatalogEntry> rows = selected(o);
  if (o.common.format == "csv") {
    print_csv_row({"s", "f_class", "density", "status", "conditional", "source"});
    for (const auto& e : rows)
      print_csv_row({std::to_string(e.s), e.f_class, extremal::fraction_string(e.density),
                     e.is_exact ? "exact" : "upper", e.conditional ? "1" : "0",
                     e.source});
    return;
  }
  if (o.common.format == "table") {
    for (const auto& e : rows) {
      std::cout << "K" << std::left << std::setw(3) << e.s << std::setw(22) << e.f_class
                << std::setw(16) << pretty_rational(e.density) << std::setw(7)
                << (e.is_exact ? "exact" : "upper")
                << (e.conditional ? "conditional  " : "             ") << "[" << e.source
                << "]\n";
    }
    std::cout << rows.size() << " entries\n";
    return;
  }
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : rows) out.push_back(rt::catalog_entry_json(e));
  print_json(out);
}

}  // namespace

void register_cmd_catalog(CLI::App& app) {
  auto o = std::make_shared<CatalogOpts>();
  CLI::App* cmd = app.add_subcommand(
      "catalog", "limiting K_s-free edge densities under independence budgets");
  auto* s = cmd->add_option("--s", o->s, "restrict to one forbidden clique order")
                ->check(CLI::Range(3, 13));
  auto* f = cmd->add_option("--f", o->f_class,
                            "restrict to one budget class, e.g. n/3 or o(sqrt(n*log(n)))");
  auto* bt = cmd->add_option("--clique-bound", o->bound_t,
                             "instead: cluster-graph clique bound for a K_t-free host")
                 ->check(CLI::Range(9, 13));
  cmd->add_flag("--assume-separation", o->assume_separation,
                "assume the Ramsey separation conjecture at l=5");
  bt->excludes(s)->excludes(f);
  add_common_flags(cmd, o->common, {"json", "table", "csv"});
  cmd->callback([o] { run(*o); });
}

}  // namespace lab
