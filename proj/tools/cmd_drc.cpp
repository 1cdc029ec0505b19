#include <iostream>
#include <memory>
#include <utility>
#include <vector>

#include "cli_common.hpp"
#include "extremal/drc.hpp"
#include "extremal/errors.hpp"
#include "extremal/rng.hpp"

namespace lab {

namespace {

namespace drc = extremal::drc;
using extremal::Graph;

struct ParamFlags {
  int k = 2;
  long long n = 0;
  std::string gamma;
  std::string c;
  int t = 2;
};

void add_param_flags(CLI::App* cmd, ParamFlags& p) {
  cmd->add_option("--k", p.k, "parts in the host")->capture_default_str();
  cmd->add_option("--n", p.n, "vertices per part")->required();
  cmd->add_option("--gamma", p.gamma, "minimum cross-degree fraction, in (0,1)")
      ->required();
  cmd->add_option("--c", p.c, "size exponent knob, > 0")->required();
  cmd->add_option("--t", p.t, "tuple order of the guarantee")->capture_default_str();
}

drc::DRCParams make_params(const ParamFlags& p) {
  drc::DRCParams out{p.k, p.n, parse_rational_arg(p.gamma, "--gamma"),
                     parse_rational_arg(p.c, "--c"), p.t};
  drc::check_params(out);
  return out;
}

struct HostFlags {
  std::string in;
  std::string part_json;
  std::string gen_density;
  std::uint64_t host_seed = 0;
};

void add_host_flags(CLI::App* cmd, HostFlags& h) {
  auto* in = cmd->add_option("--in", h.in, "host graph6 file, - for stdin");
  cmd->add_option("--part-json", h.part_json,
                  "per-vertex part labels (JSON array; default: blocks of n)");
  auto* gen = cmd->add_option("--gen-density", h.gen_density,
                              "generate the host: iid cross pairs at this density");
  cmd->add_option("--host-seed", h.host_seed, "seed for --gen-density")
      ->capture_default_str();
  in->excludes(gen);
}

// k*n vertices in contiguous blocks; each cross pair present independently
// with the given probability. Edge draws are keyed by the pair, so the host
// depends only on (seed, density), never on traversal order.
Graph generated_host(const drc::DRCParams& p, const extremal::Rational& density,
                     std::uint64_t seed) {
  long long total = p.k * p.n;
  if (total > extremal::kMaxVertices)
    throw extremal::PreconditionError("drc: k*n = " + std::to_string(total) +
                                      " exceeds the vertex cap " +
                                      std::to_string(extremal::kMaxVertices));
  int n_total = static_cast<int>(total);
  double prob = extremal::rational_double(density);
  extremal::CounterRng base(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n_total; ++u)
    for (int v = u + 1; v < n_total; ++v) {
      if (u / p.n == v / p.n) continue;
      if (base.fork(static_cast<std::uint64_t>(u) * 64 + v).bernoulli(prob))
        edges.emplace_back(u, v);
    }
  return Graph(n_total, edges);
}

std::pair<Graph, std::vector<int>> resolve_host(const HostFlags& h,
                                                const drc::DRCParams& p) {
  Graph g(0);
  if (!h.gen_density.empty()) {
    g = generated_host(p, parse_rational_arg(h.gen_density, "--gen-density"),
                       h.host_seed);
  } else if (!h.in.empty()) {
    g = read_graph_arg(h.in);
  } else {
    throw extremal::PreconditionError("drc: need --in or --gen-density");
  }
  std::vector<int> part;
  if (!h.part_json.empty()) {
    part = read_json_arg(h.part_json).get<std::vector<int>>();
  } else {
    if (g.vertex_count() != p.k * p.n)
      throw extremal::PreconditionError(
          "drc: host has " + std::to_string(g.vertex_count()) +
          " vertices, expected k*n = " + std::to_string(p.k * p.n));
    part.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
      part[static_cast<std::size_t>(v)] = static_cast<int>(v / p.n);
  }
  return {std::move(g), std::move(part)};
}

struct IdentityOpts {
  CommonOpts common;
  ParamFlags params;
};

void run_identities(const IdentityOpts& o) {
  drc::DRCParams p = make_params(o.params);
  drc::DRCIdentityReport rep = drc::drc_expectation_identities(p);
  if (o.common.format == "csv") {
    print_csv_row({"q_real", "a", "sprime_rel_err", "bad_rel_err", "identities_ok",
                   "expectation_bound", "size_floor"});
    print_csv_row({decimal_string(rep.q_real), decimal_string(rep.a),
                   decimal_string(rep.sprime_rel_err), decimal_string(rep.bad_rel_err),
                   rep.identities_ok ? "1" : "0", decimal_string(rep.expectation_bound),
                   decimal_string(rep.size_floor)});
    return;
  }
  if (o.common.format == "table") {
    std::cout << "q_real       " << decimal_string(rep.q_real) << '\n'
              << "exponent a   " << decimal_string(rep.a) << '\n'
              << "identities   " << (rep.identities_ok ? "ok" : "FAILED")
              << "  (rel err " << decimal_string(rep.sprime_rel_err) << ", "
              << decimal_string(rep.bad_rel_err) << ")\n"
              << "E[|S'|-X]    >= " << decimal_string(rep.expectation_bound) << '\n'
              << "|S| floor    " << decimal_string(rep.size_floor) << '\n';
    for (const auto& w : rep.warnings) std::cout << "warning      " << w << '\n';
    return;
  }
  nlohmann::json out = drc::drc_identity_json(rep);
  out["params"] = drc::drc_params_json(p);
  print_json(out);
}

struct RunOpts {
  CommonOpts common;
  ParamFlags params;
  HostFlags host;
};

void run_once(const RunOpts& o) {
  drc::DRCParams p = make_params(o.params);
  auto [g, part] = resolve_host(o.host, p);
  drc::DRCOutcome out = drc::drc_run(g, part, p, o.common.seed);
  if (o.common.format == "table") {
    std::cout << "q          " << out.q << '\n'
              << "|S'|       " << out.s_prime_size << '\n'
              << "bad tuples " << out.bad_count << '\n'
              << "|S|        " << out.s_size << '\n'
              << "guarantee  " << (out.guarantee_ok ? "ok" : "FAILED")
              << (out.guarantee_exhaustive ? " (exhaustive)" : " (sampled)") << '\n';
    for (const auto& w : out.warnings) std::cout << "warning    " << w << '\n';
    return;
  }
  nlohmann::json j = drc::drc_outcome_json(out);
  j["params"] = drc::drc_params_json(p);
  print_json(j);
}

struct McOpts {
  CommonOpts common;
  ParamFlags params;
  HostFlags host;
  long long trials = 200;
};

void run_mc(const McOpts& o) {
  drc::DRCParams p = make_params(o.params);
  auto [g, part] = resolve_host(o.host, p);
  drc::DRCMonteCarlo mc =
      drc::drc_monte_carlo(g, part, p, o.trials, o.common.seed, o.common.workers);
  if (o.common.format == "csv") {
    print_csv_row({"trials", "mean", "std_error", "bound"});
    print_csv_row({std::to_string(mc.trials), decimal_string(mc.mean),
                   decimal_string(mc.std_error), decimal_string(mc.bound)});
    return;
  }
  if (o.common.format == "table") {
    std::cout << "trials     " << mc.trials << '\n'
              << "mean       " << decimal_string(mc.mean) << "  (|S'| - X)\n"
              << "std error  " << decimal_string(mc.std_error) << '\n'
              << "bound      " << decimal_string(mc.bound) << "  (n^{1-c/2}/2)\n";
    return;
  }
  nlohmann::json j = drc::drc_monte_carlo_json(mc);
  j["params"] = drc::drc_params_json(p);
  print_json(j);
}

}  // namespace

void register_cmd_drc(CLI::App& app) {
  CLI::App* cmd = app.add_subcommand(
      "drc", "dependent random choice: identities, single runs, Monte Carlo");
  cmd->require_subcommand(1);

  auto io = std::make_shared<IdentityOpts>();
  CLI::App* identities = cmd->add_subcommand(
      "identities", "closed-form expectation identities and hygiene warnings");
  add_param_flags(identities, io->params);
  add_common_flags(identities, io->common, {"json", "table", "csv"});
  identities->callback([io] { run_identities(*io); });

  auto ro = std::make_shared<RunOpts>();
  CLI::App* run = cmd->add_subcommand(
      "run", "one probe draw on a k-partite host, with the tuple guarantee re-checked");
  add_param_flags(run, ro->params);
  add_host_flags(run, ro->host);
  add_common_flags(run, ro->common, {"json", "table"});
  run->callback([ro] { run_once(*ro); });

  auto mo = std::make_shared<McOpts>();
  CLI::App* mc = cmd->add_subcommand(
      "mc", "trial mean of |S'| - X against the expectation bound");
  add_param_flags(mc, mo->params);
  add_host_flags(mc, mo->host);
  mc->add_option("--trials", mo->trials, "independent trials")->capture_default_str();
  add_common_flags(mc, mo->common, {"json", "table", "csv"});
  mc->callback([mo] { run_mc(*mo); });
}

}  // namespace lab
