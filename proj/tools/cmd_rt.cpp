#include <iostream>
#include <memory>

#include "cli_common.hpp"
#include "extremal/errors.hpp"
#include "extremal/rt.hpp"

namespace lab {

namespace {

namespace rt = extremal::rt;

struct RtOpts {
  CommonOpts common;
  int n = 0;
  int s = 0;
  std::string alpha;
  bool heuristic = false;
  int iterations = 200;
  int exact_limit = 10;
  long long max_reps = 200000;
};

void run(const RtOpts& o) {
  long long budget = eval_alpha_budget(o.alpha, o.n);
  if (budget < 1)
    throw extremal::PreconditionError("rt: alpha expression '" + o.alpha +
                                      "' evaluates to " + std::to_string(budget) +
                                      " at n=" + std::to_string(o.n) + "; need >= 1");
  rt::RTQuery query{o.n, o.s, static_cast<int>(std::min<long long>(budget, o.n))};

  rt::RTRecord rec;
  if (o.heuristic) {
    rec = rt::rt_heuristic_lower(query, o.common.seed, o.iterations);
  } else {
    rt::RTSearchOptions search{o.exact_limit, o.common.workers, o.max_reps};
    rec = rt::rt_exact(query, search);
  }

  if (o.common.format == "graph6") {
    if (!rec.witness_graph6)
      throw extremal::PreconditionError("rt: no witness to print");
    std::cout << *rec.witness_graph6 << '\n';
    return;
  }
  if (o.common.format == "csv") {
    print_csv_row({"n", "s", "alpha_expr", "alpha_budget", "lower", "upper", "method"});
    print_csv_row({std::to_string(o.n), std::to_string(o.s), o.alpha,
                   std::to_string(query.alpha_budget), std::to_string(rec.lower),
                   std::to_string(rec.upper), rec.method});
    return;
  }
  if (o.common.format == "table") {
    std::cout << "max edges, K" << o.s << "-free, n=" << o.n << ", alpha <= "
              << query.alpha_budget << " (" << o.alpha << ")\n";
    if (!rec.feasible())
      std::cout << "infeasible: no graph meets both constraints\n";
    else if (rec.exact())
      std::cout << "value    " << rec.lower << "  (exact)\n";
    else
      std::cout << "value    [" << rec.lower << ", " << rec.upper << "]  ("
                << rec.method << ")\n";
    if (rec.witness_graph6) std::cout << "witness  " << *rec.witness_graph6 << '\n';
    return;
  }
  nlohmann::json out = rt::rt_record_json(rec);
  out["alpha_expr"] = o.alpha;
  print_json(out);
}

}  // namespace

void register_cmd_rt(CLI::App& app) {
  auto o = std::make_shared<RtOpts>();
  CLI::App* cmd = app.add_subcommand(
      "rt", "max edges of a K_s-free graph under an independence budget");
  cmd->add_option("--n", o->n, "graph order")->required()->check(CLI::Range(1, 64));
  cmd->add_option("--s", o->s, "forbidden clique order")
      ->required()
      ->check(CLI::Range(3, 16));
  cmd->add_option("--alpha", o->alpha,
                  "independence budget: an integer, n, n/3, 2*sqrt(n*log(n)) or Q(3,n)")
      ->required();
  cmd->add_flag("--heuristic", o->heuristic,
                "construction + local search lower bound instead of the exact scan");
  cmd->add_option("--iterations", o->iterations, "local search iterations")
      ->capture_default_str();
  cmd->add_option("--exact-limit", o->exact_limit, "order cap for the exact scan")
      ->capture_default_str();
  cmd->add_option("--max-reps", o->max_reps, "representatives per level cap")
      ->capture_default_str();
  add_common_flags(cmd, o->common, {"json", "table", "csv", "graph6"});
  cmd->callback([o] { run(*o); });
}

}  // namespace lab
