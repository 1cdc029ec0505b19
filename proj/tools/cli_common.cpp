#include "cli_common.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "extremal/errors.hpp"
#include "extremal/graph6.hpp"
#include "extremal/ramsey.hpp"

namespace lab {

using extremal::PreconditionError;
using extremal::Rational;

unsigned env_default_workers() {
  const char* env = std::getenv("EXTREMAL_LAB_WORKERS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0' || v == 0 || v > 256) return 1;
  return static_cast<unsigned>(v);
}

void add_common_flags(CLI::App* cmd, CommonOpts& o,
                      const std::vector<std::string>& allowed) {
  o.workers = env_default_workers();
  cmd->add_option("--seed", o.seed, "RNG seed (identical seed, identical output)")
      ->capture_default_str();
  cmd->add_option("--workers", o.workers,
                  "worker threads (default from EXTREMAL_LAB_WORKERS)")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember(allowed))
      ->capture_default_str();
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

extremal::Graph read_graph_arg(const std::string& path) {
  std::istringstream lines(read_text(path));
  std::string line;
  while (std::getline(lines, line)) {
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
      ++start;
    if (start < line.size()) return extremal::from_graph6(line.substr(start));
  }
  throw PreconditionError("no graph6 line in '" + path + "'");
}

nlohmann::json read_json_arg(const std::string& path) {
  try {
    return nlohmann::json::parse(read_text(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError("bad JSON in '" + path + "': " + e.what());
  }
}

Rational parse_rational_arg(const std::string& text, const std::string& flag) {
  auto r = extremal::parse_rational(text);
  if (!r)
    throw PreconditionError(flag + ": '" + text + "' is not a rational (use p/q, int or decimal)");
  return *r;
}

extremal::VertexSet parse_vertex_list(const std::string& text, int n,
                                      const std::string& flag) {
  extremal::VertexSet out;
  std::istringstream tokens(text);
  std::string tok;
  auto add = [&](long v) {
    if (v < 0 || v >= n)
      throw PreconditionError(flag + ": vertex " + std::to_string(v) + " outside [0, " +
                              std::to_string(n) + ")");
    out = out.with(static_cast<int>(v));
  };
  while (std::getline(tokens, tok, ',')) {
    if (tok.empty()) throw PreconditionError(flag + ": empty item in '" + text + "'");
    char* end = nullptr;
    long lo = std::strtol(tok.c_str(), &end, 10);
    if (end == tok.c_str()) throw PreconditionError(flag + ": bad item '" + tok + "'");
    if (*end == '\0') {
      add(lo);
      continue;
    }
    if (*end != '-') throw PreconditionError(flag + ": bad item '" + tok + "'");
    const char* rest = end + 1;
    long hi = std::strtol(rest, &end, 10);
    if (end == rest || *end != '\0' || hi < lo)
      throw PreconditionError(flag + ": bad range '" + tok + "'");
    for (long v = lo; v <= hi; ++v) add(v);
  }
  if (out.empty()) throw PreconditionError(flag + ": empty vertex list");
  return out;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Q(t,n) from exact Ramsey rows. The bundled table answers the classical
// triangle rows; anything else is grown with ramsey_exact until the bracket
// R(t,m) <= n < R(t,m+1) is decided. Growth stops at the first non-exact
// row and lets inverse_ramsey_q name the gap.
long long inverse_q_grown(int t, int n) {
  namespace ram = extremal::ramsey;
  ram::RamseyTable table = ram::RamseyTable::defaults();
  for (int m = 1; m <= n + 1; ++m) {
    auto have = table.lookup(t, m);
    if (!have) {
      ram::RamseyEntry e = ram::ramsey_exact(t, m, {});
      table.insert(e);
      have = e;
    }
    if (have->exact() && have->value() > n) break;
    if (!have->exact()) break;
  }
  return ram::inverse_ramsey_q(t, n, table);
}

}  // namespace

long long eval_alpha_budget(const std::string& expr, int n) {
  std::string s;
  for (char c : expr)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  const auto bad = [&](const std::string& why) {
    return PreconditionError("alpha expression '" + expr + "': " + why +
                             " (forms: 4, n, n/3, 2*sqrt(n*log(n)), Q(3,n))");
  };
  if (s.empty()) throw bad("empty");
  if (all_digits(s)) return std::stoll(s);
  if (s == "n") return n;
  if (s.rfind("n/", 0) == 0) {
    std::string den = s.substr(2);
    if (!all_digits(den)) throw bad("bad divisor");
    long long d = std::stoll(den);
    if (d == 0) throw bad("division by zero");
    return n / d;
  }
  if (s.rfind("Q(", 0) == 0 && s.size() > 4 && s.substr(s.size() - 3) == ",n)") {
    std::string t_str = s.substr(2, s.size() - 5);
    if (!all_digits(t_str)) throw bad("bad Q order");
    int t = static_cast<int>(std::stoll(t_str));
    if (t < 2) throw bad("Q needs t >= 2");
    return inverse_q_grown(t, n);
  }
  const std::string kSqrt = "sqrt(n*log(n))";
  if (s.size() >= kSqrt.size() && s.substr(s.size() - kSqrt.size()) == kSqrt) {
    std::string prefix = s.substr(0, s.size() - kSqrt.size());
    Rational c = 1;
    if (!prefix.empty()) {
      if (prefix.back() != '*') throw bad("expected c*sqrt(n*log(n))");
      prefix.pop_back();
      auto parsed = extremal::parse_rational(prefix);
      if (!parsed || *parsed <= 0) throw bad("bad constant '" + prefix + "'");
      c = *parsed;
    }
    if (n < 1) throw bad("needs n >= 1");
    double value = extremal::rational_double(c) * std::sqrt(n * std::log2(double(n)));
    return static_cast<long long>(std::floor(value));
  }
  throw bad("unrecognized");
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

void print_csv_row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) std::cout << ',';
    std::cout << cells[i];
  }
  std::cout << '\n';
}

std::string decimal_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string pretty_rational(const Rational& r) {
  std::string s = extremal::fraction_string(r);
  if (denominator(r) == 1) return s;
  return s + " (~" + decimal_string(extremal::rational_double(r)) + ")";
}

}  // namespace lab
