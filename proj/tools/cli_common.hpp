#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "extremal/graph.hpp"
#include "extremal/rational.hpp"

namespace lab {

// Flags shared by every subcommand. Seed defaults to 0 so identical
// invocations produce byte-identical output; the worker default honors
// EXTREMAL_LAB_WORKERS when set.
struct CommonOpts {
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string format = "json";
};

unsigned env_default_workers();

// Adds --seed, --workers and --format to cmd, bound to o. Formats beyond
// `allowed` are rejected at parse time, so every subcommand advertises only
// what it can honor.
void add_common_flags(CLI::App* cmd, CommonOpts& o,
                      const std::vector<std::string>& allowed = {"json", "table"});

// File slurp; "-" reads stdin to EOF.
std::string read_text(const std::string& path);

// First non-blank line of the file as a graph6 graph.
extremal::Graph read_graph_arg(const std::string& path);

nlohmann::json read_json_arg(const std::string& path);

extremal::Rational parse_rational_arg(const std::string& text, const std::string& flag);

// "0,2,5-8" -> vertex set; every id must land in [0, n).
extremal::VertexSet parse_vertex_list(const std::string& text, int n,
                                      const std::string& flag);

// Independence-budget expressions: a plain integer, "n", "n/k",
// "c*sqrt(n*log(n))" with rational or decimal c and logs base 2, or
// "Q(t,n)" answered from exact Ramsey rows (grown on demand, so large n can
// run into a search refusal). Unrecognized syntax is a precondition error.
long long eval_alpha_budget(const std::string& expr, int n);

void print_json(const nlohmann::json& j);
void print_csv_row(const std::vector<std::string>& cells);

// "p/q (~0.75)" for table output; integers print bare.
std::string pretty_rational(const extremal::Rational& r);
std::string decimal_string(double x);

// Subcommand registrations, one per source file.
void register_cmd_graph(CLI::App& app);
void register_cmd_weight(CLI::App& app);
void register_cmd_construct(CLI::App& app);
void register_cmd_ramsey(CLI::App& app);
void register_cmd_rt(CLI::App& app);
void register_cmd_drc(CLI::App& app);
void register_cmd_reg(CLI::App& app);
void register_cmd_catalog(CLI::App& app);

}  // namespace lab
