#include <iostream>
#include <memory>
#include <sstream>

#include "cli_common.hpp"
#include "extremal/constructions.hpp"
#include "extremal/errors.hpp"
#include "extremal/graph6.hpp"

namespace lab {

namespace {

namespace cons = extremal::constructions;

struct ConstructOpts {
  CommonOpts common;
  std::string spec_path;
  std::string kind;
  int n = 0;
  int forbidden = 0;
  int inner = 0;
  std::string ratios;
};

cons::ConstructionSpec spec_from_flags(const ConstructOpts& o) {
  cons::ConstructionSpec spec;
  spec.kind = o.kind;
  spec.n = o.n;
  spec.forbidden_clique = o.forbidden;
  spec.inner_forbidden = o.inner;
  spec.seed = o.common.seed;
  if (!o.ratios.empty()) {
    std::istringstream items(o.ratios);
    std::string item;
    while (std::getline(items, item, ','))
      spec.part_ratios.push_back(parse_rational_arg(item, "--ratios"));
  }
  return spec;
}

nlohmann::json spec_json(const cons::ConstructionSpec& spec) {
  nlohmann::json j{{"kind", spec.kind}, {"n", spec.n}, {"seed", spec.seed}};
  if (spec.forbidden_clique) j["forbidden_clique"] = spec.forbidden_clique;
  if (spec.inner_forbidden) j["inner_forbidden"] = spec.inner_forbidden;
  if (!spec.part_ratios.empty()) {
    nlohmann::json ratios = nlohmann::json::array();
    for (const auto& r : spec.part_ratios) ratios.push_back(extremal::fraction_string(r));
    j["part_ratios"] = ratios;
  }
  return j;
}

void run(const ConstructOpts& o) {
  cons::ConstructionSpec spec;
  if (!o.spec_path.empty()) {
    spec = cons::ConstructionSpec::from_json(read_json_arg(o.spec_path));
  } else {
    if (o.kind.empty())
      throw extremal::PreconditionError("construct: need --kind or --spec");
    spec = spec_from_flags(o);
  }
  auto [g, report] = cons::run_construction(spec);

  if (o.common.format == "graph6") {
    std::cout << extremal::to_graph6(g) << '\n';
    return;
  }
  if (o.common.format == "table") {
    std::cout << "kind     " << spec.kind << '\n'
              << "n        " << g.vertex_count() << '\n'
              << "omega    " << report.omega << (report.clique_free_ok ? "  (claim ok)" : "  (CLAIM FAILED)")
              << '\n'
              << "alpha    " << report.alpha << (report.alpha_ok ? "  (budget ok)" : "  (OVER BUDGET)")
              << '\n'
              << "edges    " << report.edges << "  target "
              << pretty_rational(report.target_edges) << '\n'
              << "graph6   " << extremal::to_graph6(g) << '\n';
    return;
  }
  print_json(nlohmann::json{{"spec", spec_json(spec)},
                            {"report", cons::construction_report_json(report)},
                            {"n", g.vertex_count()},
                            {"graph6", extremal::to_graph6(g)}});
}

}  // namespace

void register_cmd_construct(CLI::App& app) {
  auto o = std::make_shared<ConstructOpts>();
  CLI::App* cmd = app.add_subcommand(
      "construct", "certified generators: Turan graphs, clique-free joins, stand-ins");
  auto* spec = cmd->add_option("--spec", o->spec_path, "construction spec JSON, - for stdin");
  auto* kind =
      cmd->add_option("--kind", o->kind, "turan | two_part_join | three_part_join | conjectured_k9 | conjectured_k12")
          ->check(CLI::IsMember({"turan", "two_part_join", "three_part_join",
                                 "conjectured_k9", "conjectured_k12"}));
  cmd->add_option("--n", o->n, "target order")->check(CLI::Range(0, 64));
  cmd->add_option("--forbidden", o->forbidden, "claimed K_s-freeness of the result");
  cmd->add_option("--inner", o->inner, "per-part clique bound (join kinds)");
  cmd->add_option("--ratios", o->ratios, "part ratios, e.g. 3/5,2/5 (sum 1)");
  spec->excludes(kind);
  add_common_flags(cmd, o->common, {"json", "table", "graph6"});
  cmd->callback([o] { run(*o); });
}

}  // namespace lab
