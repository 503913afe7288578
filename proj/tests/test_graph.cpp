#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "credal/graph.hpp"
#include "support/test_support.hpp"

using namespace credal;
using testsupport::Rng;

namespace {

Dag chain() {
  return Dag({"W", "X", "Y", "Z"}, {{"W", "X"}, {"X", "Y"}, {"Y", "Z"}});
}

}  // namespace

TEST_CASE("construction validates nodes, edges, and acyclicity") {
  CHECK_THROWS_AS(Dag({"A", "A"}, {}), DomainError);
  CHECK_THROWS_AS(Dag({"A", "B"}, {{"A", "C"}}), DomainError);
  CHECK_THROWS_AS(Dag({"A", "B"}, {{"A", "B"}, {"A", "B"}}), DomainError);
  CHECK_THROWS_AS(Dag({"A"}, {{"A", "A"}}), CycleError);
  CHECK_THROWS_AS(Dag({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}, {"C", "A"}}), CycleError);
  CHECK_NOTHROW(chain());
}

TEST_CASE("parents and descendants on the chain") {
  Dag g = chain();
  CHECK(g.parents("Z") == std::vector<std::string>{"Y"});
  CHECK(g.parents("W").empty());
  CHECK(g.descendants("W") == std::vector<std::string>{"X", "Y", "Z"});
  CHECK(g.descendants("Z").empty());
  CHECK(g.nondescendants_nonparents("Z") == std::vector<std::string>{"W", "X"});
  CHECK(g.nondescendants_nonparents("W").empty());
  CHECK(g.nondescendants("Z") == std::vector<std::string>{"W", "X", "Y"});
}

TEST_CASE("parents match an edge-scan oracle on random dags") {
  Rng rng(123);
  for (int trial = 0; trial < 30; ++trial) {
    Dag g = testsupport::random_dag(rng, 2 + static_cast<int>(rng() % 5));
    for (const auto& node : g.nodes()) {
      std::vector<std::string> scan;
      for (const auto& [a, b] : g.edges())
        if (g.name_of(b) == node) scan.push_back(g.name_of(a));
      CHECK(g.parents(node) == scan);
    }
  }
}

TEST_CASE("nondescendants_nonparents matches a reachability oracle") {
  Rng rng(321);
  for (int trial = 0; trial < 30; ++trial) {
    Dag g = testsupport::random_dag(rng, 2 + static_cast<int>(rng() % 5));
    for (const auto& node : g.nodes()) {
      // oracle: DFS reachability over directed edges
      std::set<std::string> reach;
      std::vector<std::string> stack = {node};
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (const auto& c : g.children(v))
          if (reach.insert(c).second) stack.push_back(c);
      }
      auto pa = g.parents(node);
      std::vector<std::string> expected;
      for (const auto& n : g.nodes()) {
        if (n == node || reach.count(n)) continue;
        if (std::find(pa.begin(), pa.end(), n) != pa.end()) continue;
        expected.push_back(n);
      }
      CHECK(g.nondescendants_nonparents(node) == expected);
    }
  }
}

TEST_CASE("d-separation on the chain and the collider") {
  Dag g = chain();
  CHECK(g.d_separated({"W"}, {"Z"}, {"X"}));
  CHECK(g.d_separated({"W"}, {"Z"}, {"Y"}));
  CHECK_FALSE(g.d_separated({"W"}, {"Z"}, {}));

  Dag collider({"A", "B", "C"}, {{"A", "C"}, {"B", "C"}});
  CHECK(collider.d_separated({"A"}, {"B"}, {}));
  CHECK_FALSE(collider.d_separated({"A"}, {"B"}, {"C"}));

  Dag deep({"A", "B", "C", "D"}, {{"A", "C"}, {"B", "C"}, {"C", "D"}});
  CHECK_FALSE(deep.d_separated({"A"}, {"B"}, {"D"}));  // conditioning a collider's descendant opens it
}

TEST_CASE("d-separation is symmetric and ignores disconnected nodes") {
  Rng rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    Dag g = testsupport::random_dag(rng, 4);
    CHECK(g.d_separated({"N0"}, {"N3"}, {"N1"}) == g.d_separated({"N3"}, {"N0"}, {"N1"}));

    // same edges plus an isolated node
    auto nodes = g.nodes();
    nodes.push_back("ISO");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [a, b] : g.edges()) edges.emplace_back(g.name_of(a), g.name_of(b));
    Dag g2(nodes, edges);
    CHECK(g.d_separated({"N0"}, {"N3"}, {"N1", "N2"}) ==
          g2.d_separated({"N0"}, {"N3"}, {"N1", "N2"}));
  }
}

TEST_CASE("d-separation verdicts match the path-enumeration oracle") {
  Rng rng(20240601);
  int checked = 0;
  for (int trial = 0; trial < 450; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);  // 3..6 nodes
    Dag g = testsupport::random_dag(rng, n, 45);

    // random disjoint role assignment: X, Y singleton-or-pair, Z any subset
    std::vector<int> roles(static_cast<std::size_t>(n));
    for (auto& r : roles) r = static_cast<int>(rng() % 4);  // 0=X 1=Y 2=Z 3=out
    std::vector<std::string> xs, ys, zs;
    for (int i = 0; i < n; ++i) {
      const auto& name = g.nodes()[static_cast<std::size_t>(i)];
      if (roles[static_cast<std::size_t>(i)] == 0) xs.push_back(name);
      if (roles[static_cast<std::size_t>(i)] == 1) ys.push_back(name);
      if (roles[static_cast<std::size_t>(i)] == 2) zs.push_back(name);
    }
    if (xs.empty() || ys.empty()) continue;
    ++checked;
    CHECK(g.d_separated(xs, ys, zs) == testsupport::d_separated_oracle(g, xs, ys, zs));
  }
  CHECK(checked >= 150);
}

TEST_CASE("precondition violations are rejected") {
  Dag g = chain();
  CHECK_THROWS_AS(g.d_separated({}, {"Z"}, {}), DomainError);
  CHECK_THROWS_AS(g.d_separated({"W"}, {"W"}, {}), DomainError);
  CHECK_THROWS_AS(g.d_separated({"W"}, {"Z"}, {"W"}), DomainError);
  CHECK_THROWS_AS(g.d_separated({"Q"}, {"Z"}, {}), DomainError);
}
