#include <iostream>
#include <memory>

#include "cli_common.hpp"
#include "extremal/errors.hpp"
#include "extremal/regularity.hpp"

namespace lab {

namespace {

namespace reg = extremal::regularity;
using extremal::Graph;
using extremal::Rational;
using extremal::VertexSet;

struct PartsFlags {
  int m = 0;
  std::string parts_json;
};

void add_parts_flags(CLI::App* cmd, PartsFlags& f) {
  auto* m = cmd->add_option(
      "--m", f.m, "random equipartition into m parts (reproducible via --seed)");
  auto* pj = cmd->add_option("--parts-json", f.parts_json,
                             "per-vertex part index array (JSON), - for stdin");
  m->excludes(pj);
}

std::vector<VertexSet> resolve_parts(const Graph& g, const PartsFlags& f,
                                     std::uint64_t seed) {
  if (!f.parts_json.empty()) return reg::partition_from_json(g, read_json_arg(f.parts_json));
  if (f.m >= 1) return reg::random_equipartition(g, f.m, seed);
  throw extremal::PreconditionError("need --m or --parts-json");
}

reg::CertifyOptions certify_options(const CommonOpts& common, bool sampled,
                                    long long samples) {
  reg::CertifyOptions opt;
  opt.mode = sampled ? reg::CertMode::sampled : reg::CertMode::exhaustive;
  opt.samples = samples;
  opt.seed = common.seed;
  opt.workers = common.workers;
  return opt;
}

// ---- check ---------------------------------------------------------------

struct CheckOpts {
  CommonOpts common;
  std::string in, a, b, eps;
  bool sampled = false;
  long long samples = 10000;
};

void run_check(const CheckOpts& o) {
  Graph g = read_graph_arg(o.in);
  VertexSet a = parse_vertex_list(o.a, g.vertex_count(), "--a");
  VertexSet b = parse_vertex_list(o.b, g.vertex_count(), "--b");
  Rational eps = parse_rational_arg(o.eps, "--eps");
  reg::PairCertificate cert =
      reg::check_pair_regular(g, a, b, eps, certify_options(o.common, o.sampled, o.samples));
  if (o.common.format == "table") {
    std::cout << "density   " << pretty_rational(cert.density) << '\n'
              << "verdict   " << (cert.regular ? "regular" : "irregular")
              << (cert.exact ? " (exact)" : " (sampled evidence)") << '\n'
              << "checked   " << cert.checked << " subset pairs\n";
    if (cert.violation) {
      std::cout << "violating A'";
      for (int v : cert.violation->first.to_vector()) std::cout << ' ' << v;
      std::cout << "  B'";
      for (int v : cert.violation->second.to_vector()) std::cout << ' ' << v;
      std::cout << '\n';
    }
    return;
  }
  print_json(reg::pair_certificate_json(cert));
}

// ---- build ---------------------------------------------------------------

struct BuildOpts {
  CommonOpts common;
  std::string in, eps, gamma;
  PartsFlags parts;
  bool sampled = false;
  long long samples = 10000;
};

void run_build(const BuildOpts& o) {
  Graph g = read_graph_arg(o.in);
  auto parts = resolve_parts(g, o.parts, o.common.seed);
  Rational eps = parse_rational_arg(o.eps, "--eps");
  Rational gamma = parse_rational_arg(o.gamma, "--gamma");
  reg::ClusterGraph r = reg::build_cluster_graph(
      g, parts, eps, gamma, certify_options(o.common, o.sampled, o.samples));
  if (o.common.format == "csv") {
    print_csv_row({"i", "j", "density", "regular"});
    for (int i = 0; i < r.m; ++i)
      for (int j = i + 1; j < r.m; ++j)
        print_csv_row({std::to_string(i), std::to_string(j),
                       extremal::fraction_string(r.density[i][j]),
                       r.regular[i][j] ? "1" : "0"});
    return;
  }
  if (o.common.format == "table") {
    Graph skel = r.skeleton();
    std::cout << "m          " << r.m << '\n'
              << "eps        " << pretty_rational(r.epsilon) << '\n'
              << "gamma      " << pretty_rational(r.gamma) << '\n'
              << "skeleton   " << skel.edge_count() << " of " << r.m * (r.m - 1) / 2
              << " pairs\n";
    for (auto [i, j] : skel.edges())
      std::cout << "  " << i << '-' << j << "  density "
                << pretty_rational(r.density[i][j]) << '\n';
    return;
  }
  print_json(reg::cluster_graph_json(r));
}

// ---- slice ---------------------------------------------------------------

struct SliceOpts {
  CommonOpts common;
  std::string eps, gamma, alpha;
};

void run_slice(const SliceOpts& o) {
  reg::SlicedParams p = reg::slicing_params(parse_rational_arg(o.eps, "--eps"),
                                            parse_rational_arg(o.gamma, "--gamma"),
                                            parse_rational_arg(o.alpha, "--alpha"));
  if (o.common.format == "table") {
    std::cout << "eps'            " << pretty_rational(p.eps_prime) << '\n'
              << "density floor   " << pretty_rational(p.gamma_minus_eps) << '\n';
    return;
  }
  print_json(nlohmann::json{{"eps_prime", extremal::rational_json(p.eps_prime)},
                            {"density_floor", extremal::rational_json(p.gamma_minus_eps)}});
}

// ---- detect --------------------------------------------------------------

struct DetectOpts {
  CommonOpts common;
  std::string cluster, threshold, margin;
  int order = 3;
  bool heavy = false;
};

void run_detect(const DetectOpts& o) {
  reg::ClusterGraph r = reg::cluster_graph_from_json(read_json_arg(o.cluster));
  Rational threshold = parse_rational_arg(o.threshold, "--threshold");
  Rational margin = parse_rational_arg(o.margin, "--margin");
  if (o.heavy && o.order != 3)
    throw extremal::PreconditionError("reg detect: heavy triples are order 3");
  std::vector<VertexSet> hits =
      o.heavy ? reg::detect_heavy_triangles(r, threshold, margin)
              : reg::detect_chubby(r, threshold, margin, o.order);
  if (o.common.format == "table") {
    std::cout << (o.heavy ? "heavy triples" : "chubby cliques") << "  " << hits.size()
              << '\n';
    for (const auto& h : hits) {
      std::cout << " ";
      for (int v : h.to_vector()) std::cout << ' ' << v;
      std::cout << '\n';
    }
    return;
  }
  nlohmann::json cliques = nlohmann::json::array();
  for (const auto& h : hits) cliques.push_back(h.to_vector());
  print_json(nlohmann::json{{"kind", o.heavy ? "heavy" : "chubby"},
                            {"order", o.order},
                            {"count", hits.size()},
                            {"cliques", cliques}});
}

// ---- lift ----------------------------------------------------------------

struct LiftOpts {
  CommonOpts common;
  std::string in, cluster, clique;
  PartsFlags parts;
  int p = 1;
  long long budget = 1000;
};

void run_lift(const LiftOpts& o) {
  Graph g = read_graph_arg(o.in);
  auto parts = resolve_parts(g, o.parts, o.common.seed);
  reg::ClusterGraph r = reg::cluster_graph_from_json(read_json_arg(o.cluster));
  VertexSet cluster_clique = parse_vertex_list(o.clique, r.m, "--clique");
  auto lifted = reg::lift_clique(g, parts, r, cluster_clique, o.p,
                                 reg::LiftOptions{o.budget});
  if (o.common.format == "table") {
    if (!lifted) {
      std::cout << "not found within budget\n";
      return;
    }
    std::cout << "clique on " << lifted->count() << " vertices: ";
    for (int v : lifted->to_vector()) std::cout << ' ' << v;
    std::cout << '\n';
    return;
  }
  nlohmann::json out{{"found", lifted.has_value()}};
  if (lifted) out["vertices"] = lifted->to_vector();
  print_json(out);
}

// ---- prune ---------------------------------------------------------------

struct PruneOpts {
  CommonOpts common;
  std::string in, floor;
  PartsFlags parts;
};

void run_prune(const PruneOpts& o) {
  Graph g = read_graph_arg(o.in);
  auto parts = resolve_parts(g, o.parts, o.common.seed);
  reg::PruneReport rep =
      reg::prune_low_crossing_degree(g, parts, parse_rational_arg(o.floor, "--floor"));
  if (o.common.format == "table") {
    std::cout << "deleted   " << rep.deleted.size() << " vertices:";
    for (int v : rep.deleted) std::cout << ' ' << v;
    std::cout << '\n' << "floor     " << (rep.floor_met ? "met" : "NOT met") << '\n';
    for (std::size_t i = 0; i < rep.parts.size(); ++i) {
      std::cout << "part " << i << "   ";
      for (int v : rep.parts[i].to_vector()) std::cout << ' ' << v;
      std::cout << '\n';
    }
    return;
  }
  print_json(reg::prune_report_json(rep));
}

// ---- account -------------------------------------------------------------

struct AccountOpts {
  CommonOpts common;
  long long n = 0;
  std::string eps, gamma;
  std::string in, cluster;
  PartsFlags parts;  // parts.m doubles as the parameter-form part count
};

void run_account(const AccountOpts& o) {
  if (!o.in.empty()) {
    // Instance form: exact split of e(G) against the cluster skeleton, plus
    // the parameter bound at this (n, m, eps, gamma).
    Graph g = read_graph_arg(o.in);
    auto parts = resolve_parts(g, o.parts, o.common.seed);
    reg::ClusterGraph r = reg::cluster_graph_from_json(read_json_arg(o.cluster));
    reg::EdgeSplit split = reg::edge_decomposition(g, parts, r);
    reg::ResidualBound bound =
        reg::residual_edge_bound(g.vertex_count(), r.m, r.epsilon, r.gamma);
    if (o.common.format == "table") {
      std::cout << "cluster edges    " << split.cluster_edges << '\n'
                << "residual edges   " << split.residual_edges << '\n'
                << "residual bound   " << pretty_rational(bound.relaxed_bound)
                << "  (gamma/3 cap " << (bound.gamma_third_ok ? "ok" : "not met")
                << ")\n";
      return;
    }
    print_json(nlohmann::json{{"split", reg::edge_split_json(split)},
                              {"bound", reg::residual_bound_json(bound)}});
    return;
  }
  if (o.n < 1 || o.parts.m < 1)
    throw extremal::PreconditionError("reg account: need --n and --m (or --in)");
  reg::ResidualBound bound = reg::residual_edge_bound(o.n, o.parts.m,
                                                      parse_rational_arg(o.eps, "--eps"),
                                                      parse_rational_arg(o.gamma, "--gamma"));
  if (o.common.format == "csv") {
    print_csv_row({"n", "m", "exact_sum", "relaxed_bound", "gamma_third", "chain_ok",
                   "gamma_third_ok"});
    print_csv_row({std::to_string(o.n), std::to_string(o.parts.m),
                   extremal::fraction_string(bound.exact_sum),
                   extremal::fraction_string(bound.relaxed_bound),
                   extremal::fraction_string(bound.gamma_third),
                   bound.chain_ok ? "1" : "0", bound.gamma_third_ok ? "1" : "0"});
    return;
  }
  if (o.common.format == "table") {
    std::cout << "exact sum       " << pretty_rational(bound.exact_sum) << '\n'
              << "relaxed bound   " << pretty_rational(bound.relaxed_bound) << '\n'
              << "gamma/3 cap     " << pretty_rational(bound.gamma_third) << '\n'
              << "chain           " << (bound.chain_ok ? "ok" : "BROKEN") << '\n'
              << "within cap      " << (bound.gamma_third_ok ? "yes" : "no") << '\n';
    return;
  }
  print_json(reg::residual_bound_json(bound));
}

// ---- hierarchy -----------------------------------------------------------

struct HierarchyOpts {
  CommonOpts common;
  long long n0 = 0, n = 0, m_prime = 0;
  std::string delta, eps, gamma, gap = "16";
};

void run_hierarchy(const HierarchyOpts& o) {
  reg::ParamHierarchy h;
  h.n0 = o.n0;
  h.n = o.n;
  h.m_prime = o.m_prime;
  h.delta = parse_rational_arg(o.delta, "--delta");
  h.epsilon = parse_rational_arg(o.eps, "--eps");
  h.gamma = parse_rational_arg(o.gamma, "--gamma");
  h.gap = parse_rational_arg(o.gap, "--gap");
  reg::HierarchyReport rep = reg::validate_hierarchy(h);
  if (o.common.format == "table") {
    std::cout << (rep.ok ? "hierarchy ok" : "hierarchy BROKEN") << '\n';
    for (const auto& link : rep.links)
      std::cout << "  " << (link.ok ? "ok    " : "FAIL  ") << link.name << '\n';
    return;
  }
  print_json(reg::hierarchy_report_json(rep));
}

}  // namespace

void register_cmd_reg(CLI::App& app) {
  CLI::App* cmd = app.add_subcommand(
      "reg", "regular-pair certificates, cluster graphs, lifting and edge accounting");
  cmd->require_subcommand(1);

  auto co = std::make_shared<CheckOpts>();
  CLI::App* check = cmd->add_subcommand("check", "certify one pair (A,B) eps-regular");
  check->add_option("--in", co->in, "graph6 file, - for stdin")->required();
  check->add_option("--a", co->a, "side A, e.g. 0-11")->required();
  check->add_option("--b", co->b, "side B, e.g. 12-23")->required();
  check->add_option("--eps", co->eps, "regularity tolerance")->required();
  check->add_flag("--sampled", co->sampled, "sampled mode (evidence, not proof)");
  check->add_option("--samples", co->samples, "draws in sampled mode")
      ->capture_default_str();
  add_common_flags(check, co->common);
  check->callback([co] { run_check(*co); });

  auto bo = std::make_shared<BuildOpts>();
  CLI::App* build =
      cmd->add_subcommand("build", "measure a partition into a cluster graph");
  build->add_option("--in", bo->in, "graph6 file, - for stdin")->required();
  add_parts_flags(build, bo->parts);
  build->add_option("--eps", bo->eps, "regularity tolerance")->required();
  build->add_option("--gamma", bo->gamma, "density floor for skeleton edges")->required();
  build->add_flag("--sampled", bo->sampled, "sampled certificates");
  build->add_option("--samples", bo->samples, "draws in sampled mode")
      ->capture_default_str();
  add_common_flags(build, bo->common, {"json", "table", "csv"});
  build->callback([bo] { run_build(*bo); });

  auto so = std::make_shared<SliceOpts>();
  CLI::App* slice =
      cmd->add_subcommand("slice", "parameters surviving a split into alpha-fractions");
  slice->add_option("--eps", so->eps, "pair tolerance")->required();
  slice->add_option("--gamma", so->gamma, "pair density")->required();
  slice->add_option("--alpha", so->alpha, "smallest retained fraction")->required();
  add_common_flags(slice, so->common);
  slice->callback([so] { run_slice(*so); });

  auto dopt = std::make_shared<DetectOpts>();
  CLI::App* detect =
      cmd->add_subcommand("detect", "dense skeleton cliques in a cluster graph");
  detect->add_option("--cluster", dopt->cluster, "cluster graph JSON, - for stdin")
      ->required();
  detect->add_option("--threshold", dopt->threshold, "base density threshold")->required();
  detect->add_option("--margin", dopt->margin, "slack added to the threshold")->required();
  detect->add_option("--order", dopt->order, "clique order, 3 or 4")
      ->check(CLI::IsMember({3, 4}))
      ->capture_default_str();
  detect->add_flag("--heavy", dopt->heavy, "require every pair dense, not just one");
  add_common_flags(detect, dopt->common);
  detect->callback([dopt] { run_detect(*dopt); });

  auto lo = std::make_shared<LiftOpts>();
  CLI::App* lift =
      cmd->add_subcommand("lift", "expand a skeleton clique into a host clique");
  lift->add_option("--in", lo->in, "host graph6 file, - for stdin")->required();
  add_parts_flags(lift, lo->parts);
  lift->add_option("--cluster", lo->cluster, "cluster graph JSON, - for stdin")
      ->required();
  lift->add_option("--clique", lo->clique, "skeleton clique, e.g. 0,1,2")->required();
  lift->add_option("--p", lo->p, "vertices per part")->required()->check(CLI::Range(1, 64));
  lift->add_option("--budget", lo->budget, "candidate per-part cliques examined")
      ->capture_default_str();
  add_common_flags(lift, lo->common);
  lift->callback([lo] { run_lift(*lo); });

  auto po = std::make_shared<PruneOpts>();
  CLI::App* prune =
      cmd->add_subcommand("prune", "delete vertices below a crossing-degree floor");
  prune->add_option("--in", po->in, "graph6 file, - for stdin")->required();
  add_parts_flags(prune, po->parts);
  prune->add_option("--floor", po->floor, "required fraction of each other part")
      ->required();
  add_common_flags(prune, po->common);
  prune->callback([po] { run_prune(*po); });

  auto ao = std::make_shared<AccountOpts>();
  CLI::App* account = cmd->add_subcommand(
      "account", "residual edge bound; with --in, the exact split of an instance");
  account->add_option("--n", ao->n, "host order (parameter form)");
  account->add_option("--eps", ao->eps, "regularity tolerance (parameter form)");
  account->add_option("--gamma", ao->gamma, "density floor (parameter form)");
  auto* in = account->add_option("--in", ao->in, "host graph6 (instance form)");
  account->add_option("--cluster", ao->cluster, "cluster graph JSON (instance form)")
      ->needs(in);
  add_parts_flags(account, ao->parts);
  add_common_flags(account, ao->common, {"json", "table", "csv"});
  account->callback([ao, in] {
    if (in->count() && ao->cluster.empty())
      throw extremal::PreconditionError("reg account: instance form needs --cluster");
    run_account(*ao);
  });

  auto ho = std::make_shared<HierarchyOpts>();
  CLI::App* hierarchy = cmd->add_subcommand(
      "hierarchy", "validate the parameter chain 1/n << delta < 1/m' << eps << gamma << 1");
  hierarchy->add_option("--n0", ho->n0, "population floor")->required();
  hierarchy->add_option("--n", ho->n, "host order")->required();
  hierarchy->add_option("--mprime", ho->m_prime, "partition size cap")->required();
  hierarchy->add_option("--delta", ho->delta, "density increment")->required();
  hierarchy->add_option("--eps", ho->eps, "regularity tolerance")->required();
  hierarchy->add_option("--gamma", ho->gamma, "density floor")->required();
  hierarchy->add_option("--gap", ho->gap, "factor read as 'much less than'")
      ->capture_default_str();
  add_common_flags(hierarchy, ho->common);
  hierarchy->callback([ho] { run_hierarchy(*ho); });
}

}  // namespace lab
