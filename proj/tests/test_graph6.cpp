#include "doctest.h"

#include "extremal/graph6.hpp"
#include "extremal/rng.hpp"

#include "oracles.hpp"

using namespace extremal;

TEST_CASE("graph6 known encodings") {
  // Single vertex
  CHECK(to_graph6(Graph(1)) == "@");
  // K2
  CHECK(to_graph6(Graph::complete(2)) == "A_");
  // Empty on 2
  CHECK(to_graph6(Graph(2)) == "A?");
  // C5 and K4: values cross-checked against the independent encoder
  CHECK(to_graph6(Graph::cycle(5)) == oracle::encode_graph6_naive(Graph::cycle(5)));
  CHECK(to_graph6(Graph::complete(4)) == oracle::encode_graph6_naive(Graph::complete(4)));
  // "DUW" decodes to a 2-regular 5-vertex graph, i.e. a relabeled C5
  Graph duw = from_graph6("DUW");
  CHECK(duw.vertex_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(duw.degree(v) == 2);
}

TEST_CASE("graph6 round trip on random graphs") {
  CounterRng rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    int n = static_cast<int>(rng.below(15));
    Graph g = oracle::random_graph(n, rng.unit(), rng);
    std::string enc = to_graph6(g);
    CHECK(enc == oracle::encode_graph6_naive(g));
    Graph back = from_graph6(enc);
    CHECK(back == g);
  }
  // a few larger ones, including the extended header range
  for (int n : {62, 63, 64}) {
    Graph g = oracle::random_graph(n, 0.4, rng);
    CHECK(from_graph6(to_graph6(g)) == g);
    if (n >= 63) CHECK(to_graph6(g)[0] == '~');
  }
}

TEST_CASE("graph6 strict parsing") {
  CHECK_THROWS_AS(from_graph6(""), ParseError);
  // byte below the printable range
  CHECK_THROWS_AS(from_graph6(std::string(1, ' ')), ParseError);
  // truncated body: C5 needs 2 body bytes
  CHECK_THROWS_AS(from_graph6("DU"), ParseError);
  // trailing garbage
  CHECK_THROWS_AS(from_graph6("DUW?"), ParseError);
  // non-zero padding: n=2 has 1 payload bit; 5 padding bits must be zero
  std::string bad(2, 0);
  bad[0] = 'A';
  bad[1] = static_cast<char>(63 + 1);  // lowest padding bit set
  CHECK_THROWS_AS(from_graph6(bad), ParseError);
  // order beyond the cap refused explicitly
  std::string big = "~";
  big += static_cast<char>(63);
  big += static_cast<char>(63 + 1);  // n = 65
  big += static_cast<char>(63 + 1);
  CHECK_THROWS_AS(from_graph6(big), BudgetError);

  // offsets are reported: first missing byte of the truncated body is at 2
  try {
    from_graph6("DU");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.offset == 2);
  }
}
