#include <iostream>
#include <memory>

#include "cli_common.hpp"
#include "extremal/errors.hpp"
#include "extremal/ramsey.hpp"

namespace lab {

namespace {

namespace ram = extremal::ramsey;

struct RamseyOpts {
  CommonOpts common;
  int t = 0;
  int m = 0;
  int qn = -1;
  bool dump_table = false;
  int vertex_budget = 20;
  long long max_reps = 200000;
};

void run(const RamseyOpts& o) {
  if (o.dump_table) {
    print_json(ram::RamseyTable::defaults().to_json());
    return;
  }
  if (o.qn >= 0) {
    // Q(t,n): grow exact rows until the bracket R(t,m) <= n < R(t,m+1)
    // is decided, then read the answer off the table.
    ram::RamseyTable table = ram::RamseyTable::defaults();
    ram::RamseySearchOptions search{o.vertex_budget, o.common.workers, o.max_reps};
    for (int m = 1; m <= o.qn + 1; ++m) {
      auto have = table.lookup(o.t, m);
      if (!have) {
        ram::RamseyEntry e = ram::ramsey_exact(o.t, m, search);
        table.insert(e);
        have = e;
      }
      if (have->exact() && have->value() > o.qn) break;
      if (!have->exact()) break;
    }
    int q = ram::inverse_ramsey_q(o.t, o.qn, table);
    if (o.common.format == "csv") {
      print_csv_row({"t", "n", "q"});
      print_csv_row({std::to_string(o.t), std::to_string(o.qn), std::to_string(q)});
    } else if (o.common.format == "table") {
      std::cout << "Q(" << o.t << "," << o.qn << ") = " << q << '\n';
    } else {
      print_json(nlohmann::json{{"t", o.t}, {"n", o.qn}, {"q", q}});
    }
    return;
  }
  if (o.m <= 0) throw extremal::PreconditionError("ramsey: need --m, --qn or --table");

  ram::RamseySearchOptions search{o.vertex_budget, o.common.workers, o.max_reps};
  ram::RamseyEntry entry = ram::ramsey_exact(o.t, o.m, search);
  if (o.common.format == "graph6") {
    if (!entry.witness_graph6)
      throw extremal::PreconditionError("ramsey: no witness to print");
    std::cout << *entry.witness_graph6 << '\n';
    return;
  }
  if (o.common.format == "csv") {
    print_csv_row({"t", "m", "lower", "upper", "exact", "witness"});
    print_csv_row({std::to_string(entry.t), std::to_string(entry.m),
                   std::to_string(entry.lower), std::to_string(entry.upper),
                   entry.exact() ? "1" : "0", entry.witness_graph6.value_or("")});
    return;
  }
  if (o.common.format == "table") {
    std::cout << "R(" << entry.t << "," << entry.m << ") = ";
    if (entry.exact())
      std::cout << entry.value() << '\n';
    else
      std::cout << "[" << entry.lower << ", " << entry.upper << "]\n";
    if (entry.witness_graph6)
      std::cout << "witness  " << *entry.witness_graph6 << "  ("
                << entry.lower - 1 << " vertices)\n";
    return;
  }
  print_json(ram::ramsey_entry_json(entry));
}

}  // namespace

void register_cmd_ramsey(CLI::App& app) {
  auto o = std::make_shared<RamseyOpts>();
  CLI::App* cmd = app.add_subcommand(
      "ramsey", "exact R(t,m) with verified witnesses; inverse Q(t,n)");
  cmd->add_option("--t", o->t, "forbidden clique order")->check(CLI::Range(2, 16));
  auto* m = cmd->add_option("--m", o->m, "independence target: compute R(t,m)");
  auto* qn = cmd->add_option("--qn", o->qn,
                             "host order n: compute Q(t,n), the least independence "
                             "number over K_t-free n-vertex graphs");
  auto* table = cmd->add_flag("--table", o->dump_table, "dump the bundled exact rows");
  m->excludes(qn)->excludes(table);
  qn->excludes(table);
  cmd->add_option("--vertex-budget", o->vertex_budget, "search order cap")
      ->capture_default_str();
  cmd->add_option("--max-reps", o->max_reps, "representatives per level cap")
      ->capture_default_str();
  add_common_flags(cmd, o->common, {"json", "table", "csv", "graph6"});
  cmd->callback([o, table] {
    if (!table->count() && o->t < 2)
      throw extremal::PreconditionError("ramsey: need --t");
    run(*o);
  });
}

}  // namespace lab
