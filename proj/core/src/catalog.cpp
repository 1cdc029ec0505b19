#include "extremal/catalog.hpp"

#include <map>

#include <nlohmann/json.hpp>

#include "extremal/errors.hpp"

namespace extremal::rt {

namespace {

DensityCatalogEntry row(int s, const char* f, long long num, long long den,
                        bool exact, bool cond, const char* src) {
  DensityCatalogEntry e;
  e.s = s;
  e.f_class = f;
  e.density = ratio(num, den);
  e.is_exact = exact;
  e.conditional = cond;
  e.source = src;
  return e;
}

// One block per clique order, rows in reading order of the reference table.
const std::map<int, std::vector<DensityCatalogEntry>>& table() {
  static const std::map<int, std::vector<DensityCatalogEntry>> t = {
      {3,
       {
           row(3, "n/2", 1, 4, true, false, "Mantels"),
           row(3, "o(n)", 0, 1, true, false, "folklore"),
       }},
      {4,
       {
           row(4, "n/3", 1, 3, true, false, "Turans"),
           row(4, "o(n)", 1, 8, true, false, "Szemeredi, BollErdos"),
           row(4, "g(n)", 0, 1, true, false, "Sudakov"),
       }},
      {5,
       {
           row(5, "n/4", 3, 8, true, false, "Turans"),
           row(5, "o(n)", 1, 4, true, false, "ErdosSos1"),
           row(5, "2*sqrt(n*log(n))", 1, 4, true, false, "BHS"),
           row(5, "o(sqrt(n*log(n)))", 0, 1, true, false, "BHS"),
       }},
      {6,
       {
           row(6, "n/5", 2, 5, true, false, "Turans"),
           row(6, "o(n)", 2, 7, true, false, "EHSSS"),
           row(6, "g(n)", 1, 4, true, false, "BHS"),
           row(6, "2*sqrt(n*log(n))", 1, 4, true, false, "Sudakov"),
           row(6, "o(sqrt(n*log(n)))", 1, 6, false, false, "EHSSS1"),
           row(6, "g(n)/sqrt(n)", 0, 1, true, false, "Sudakov"),
       }},
      {7,
       {
           row(7, "n/6", 5, 12, true, false, "Turans"),
           row(7, "o(n)", 1, 3, true, false, "ErdosSos1"),
           row(7, "2*sqrt(n*log(n))", 1, 3, true, false, "BHS"),
           row(7, "o(sqrt(n*log(n)))", 1, 4, true, false, "BHS"),
           row(7, "Q(4,n)", 1, 4, true, false, "BHS"),
           row(7, "o(Q(4,n))", 0, 1, true, false, "BHS"),
       }},
      {8,
       {
           row(8, "n/7", 3, 7, true, false, "Turans"),
           row(8, "o(n)", 7, 20, true, false, "EHSSS"),
           row(8, "g(n)", 1, 3, true, false, "BHS"),
           row(8, "2*sqrt(n*log(n))", 1, 3, true, false, "BHS"),
           row(8, "o(sqrt(n*log(n)))", 1, 4, true, false, "KKL"),
           row(8, "Q(4,n)", 1, 4, true, false, "BHS"),
           row(8, "o(Q(4,n))", 3, 16, false, false, "BHS"),
           row(8, "Q(4,g(n))", 0, 1, true, false, "BHS"),
       }},
      {9,
       {
           row(9, "n/8", 7, 16, true, false, "Turans"),
           row(9, "o(n)", 3, 8, true, false, "ErdosSos1"),
           row(9, "2*sqrt(n*log(n))", 3, 8, true, false, "BHS"),
           row(9, "o(sqrt(n*log(n)))", 3, 10, false, false, "new"),
           row(9, "Q(3,g(n))", 1, 4, true, false, "BHS"),
           row(9, "o(Q(4,n))", 1, 4, true, false, "new"),
           row(9, "Q(5,n)", 1, 4, true, true, "BHS"),
           row(9, "o(Q(5,n))", 0, 1, true, true, "BHS"),
       }},
      {10,
       {
           row(10, "n/9", 4, 9, true, false, "Turans"),
           row(10, "o(n)", 5, 13, true, false, "EHSSS"),
           row(10, "g(n)", 3, 8, true, false, "BHS"),
           row(10, "2*sqrt(n*log(n))", 3, 8, true, false, "BHS"),
           row(10, "o(sqrt(n*log(n)))", 1, 3, true, false, "BHS"),
           row(10, "Q(4,n)", 1, 3, true, false, "BHS"),
           row(10, "o(Q(4,n))", 1, 4, true, false, "new"),
           row(10, "Q(5,n)", 1, 4, true, true, "BHS"),
           row(10, "o(Q(5,n))", 1, 5, false, true, "BHS"),
           row(10, "Q(5,g(n))", 0, 1, true, true, "BHS"),
       }},
      {11,
       {
           row(11, "n/10", 9, 20, true, false, "Turans"),
           row(11, "o(n)", 2, 5, true, false, "ErdosSos1"),
           row(11, "sqrt(n*log(n))", 2, 5, true, false, "BHS"),
           row(11, "o(sqrt(n*log(n)))", 7, 20, false, false, "BHS"),
           row(11, "g(n)/sqrt(n)", 1, 3, true, false, "BHS"),
           row(11, "Q(4,n)", 1, 3, true, false, "BHS"),
           row(11, "o(Q(4,n))", 1, 4, true, false, "new"),
           row(11, "Q(6,n)", 1, 4, true, true, "BHS"),
           row(11, "o(Q(6,n))", 0, 1, true, true, "BHS"),
       }},
      {12,
       {
           row(12, "n/11", 5, 11, true, false, "Turans"),
           row(12, "o(n)", 13, 32, true, false, "EHSSS"),
           row(12, "g(n)", 2, 5, true, false, "BHS"),
           row(12, "sqrt(n*log(n))", 2, 5, true, false, "BHS"),
           row(12, "o(sqrt(n*log(n)))", 8, 22, false, false, "BHS"),
           row(12, "g(n)/sqrt(n)", 1, 3, true, false, "BHS"),
           row(12, "Q(4,n)", 1, 3, true, false, "BHS"),
           row(12, "o(Q(4,n))", 4, 13, false, false, "new"),
           row(12, "Q(4,g(n))", 1, 4, true, true, "BHS"),
           row(12, "Q(6,n)", 1, 4, true, true, "BHS"),
           row(12, "o(Q(6,n))", 5, 24, false, true, "BHS"),
           row(12, "Q(6,g(n))", 0, 1, true, true, "BHS"),
       }},
      {13,
       {
           row(13, "n/12", 11, 24, true, false, "Turans"),
           row(13, "o(n)", 5, 12, true, false, "ErdosSos1"),
           row(13, "sqrt(n*log(n))", 5, 12, true, false, "BHS"),
           row(13, "o(sqrt(n*log(n)))", 3, 8, true, false, "BHS"),
           row(13, "Q(4,n)", 3, 8, true, false, "BHS"),
           row(13, "o(Q(4,n))", 1, 3, true, true, "BHS"),
           row(13, "Q(5,n)", 1, 3, true, true, "BHS"),
           row(13, "o(Q(5,n))", 4, 15, false, false, "new"),
           row(13, "o(Q(5,n))", 1, 4, true, true, "new"),
           row(13, "Q(7,n)", 1, 4, true, true, "BHS"),
           row(13, "o(Q(7,n))", 0, 1, true, true, "BHS"),
       }},
  };
  return t;
}

// Inside o(.) the square-root-log tags collapse to one class.
std::string canonical_f_class(const std::string& tag) {
  if (tag == "o(Q(3,n))" || tag == "o(2*sqrt(n*log(n)))")
    return "o(sqrt(n*log(n)))";
  return tag;
}

}  // namespace

const std::vector<DensityCatalogEntry>& catalog_entries(int s) {
  static const std::vector<DensityCatalogEntry> empty;
  auto it = table().find(s);
  return it == table().end() ? empty : it->second;
}

std::vector<int> catalog_orders() {
  std::vector<int> out;
  for (const auto& [s, rows] : table()) out.push_back(s);
  return out;
}

std::vector<DensityCatalogEntry> catalog_lookup(int s,
                                                const std::string& f_class) {
  std::vector<DensityCatalogEntry> out;
  const std::string want = canonical_f_class(f_class);
  for (const auto& e : catalog_entries(s))
    if (canonical_f_class(e.f_class) == want) out.push_back(e);
  return out;
}

int cluster_clique_bound(int t, bool assume_separation_l5) {
  if (t < 9 || t > 13)
    throw PreconditionError("cluster clique bound covers orders 9..13, got " +
                            std::to_string(t));
  if (t <= 12) return 4;
  return assume_separation_l5 ? 4 : 5;
}

nlohmann::json catalog_entry_json(const DensityCatalogEntry& e) {
  return {{"s", e.s},
          {"f_class", e.f_class},
          {"density", rational_json(e.density)},
          {"status", e.is_exact ? "exact" : "upper"},
          {"conditional", e.conditional},
          {"source", e.source}};
}

}  // namespace extremal::rt
