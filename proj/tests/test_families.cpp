#include <set>

#include "doctest.h"
#include "kkb/families.hpp"
#include "oracles.hpp"
#include "support.hpp"

using kkb::ErrorCode;

TEST_CASE("edge indexing is lexicographic") {
  const kkb::GraphGround g(4);
  CHECK(g.edge_count() == 6);
  CHECK(g.edge_index(0, 1) == 0);
  CHECK(g.edge_index(0, 3) == 2);
  CHECK(g.edge_index(1, 2) == 3);
  CHECK(g.edge_index(3, 2) == 5);
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto [u, v] = g.edge(i);
    CHECK(g.edge_index(u, v) == i);
  }
}

TEST_CASE("spanning tree counts match exhaustive acyclicity checks") {
  for (int n = 3; n <= 6; ++n) {
    const auto f = kkb::graph_connectivity(n);
    CHECK(f.min_count() == oracle::spanning_tree_count(n));
    CHECK(f.ell().ell0 == n - 1);
    CHECK(f.ground_size() == n * (n - 1) / 2);
  }
  CHECK_ERROR_CODE(kkb::graph_connectivity(2), ErrorCode::OutOfRange);
  CHECK_ERROR_CODE(kkb::graph_connectivity(8), ErrorCode::OutOfRange);
}

TEST_CASE("subgraph containment families") {
  CHECK(kkb::family_instance("triangle", 4).min_count() == 4);
  CHECK(kkb::family_instance("triangle", 5).min_count() == 10);
  CHECK(kkb::family_instance("hamiltonian", 5).min_count() == 12);
  CHECK(kkb::family_instance("matching", 4).min_count() == 3);
  CHECK(kkb::family_instance("star", 4).min_count() == 4);
  CHECK_ERROR_CODE(kkb::subgraph_containment(10, kkb::cycle_graph(8), 1000), ErrorCode::CapExceeded);
  CHECK_ERROR_CODE(kkb::family_instance("matching", 5), ErrorCode::OutOfRange);
  CHECK_ERROR_CODE(kkb::family_instance("nope", 4), ErrorCode::InvalidArgument);
}

TEST_CASE("principal, blocks and sunflowers") {
  const auto p = kkb::principal(4, kkb::SubsetMask::of(4, {1, 2}));
  CHECK(p.min_count() == 1);
  CHECK_ERROR_CODE(kkb::principal(3, kkb::SubsetMask::full_of(3)), ErrorCode::TrivialUpperSet);
  const auto b = kkb::disjoint_blocks(3, 2);
  CHECK(b.ground_size() == 6);
  CHECK(b.common_intersection().empty());
  const auto s = kkb::sunflower(2, 3, 1);
  CHECK(s.min_count() == 3);
  CHECK(s.common_intersection().size() == 2);
}

TEST_CASE("random upper sets are seeded and within bounds") {
  const auto a = kkb::random_upper_set(10, 8, 3, 99);
  CHECK(a == kkb::random_upper_set(10, 8, 3, 99));
  CHECK(a.min_count() <= 8);
  CHECK(a.ell().ell0 <= 3);
  CHECK_ERROR_CODE(kkb::random_upper_set(5, 0, 2, 1), ErrorCode::InvalidArgument);
}

TEST_CASE("battery") {
  const auto battery = kkb::builtin_battery();
  CHECK(battery.size() >= 200);
  std::set<std::string> names;
  int random = 0;
  for (const auto& inst : battery) {
    names.insert(inst.name);
    if (inst.name.rfind("random", 0) == 0) {
      ++random;
      CHECK(inst.instance.ground_size() <= 12);
      CHECK(inst.instance.min_count() <= 10);
    }
  }
  CHECK(names.size() == battery.size());
  CHECK(random == 150);
  const auto again = kkb::builtin_battery();
  for (std::size_t i = 0; i < battery.size(); ++i) CHECK(battery[i].instance == again[i].instance);
}

TEST_CASE("every named family builds at a small n") {
  for (const auto& name : kkb::family_names()) {
    CHECK_NOTHROW(kkb::family_instance(name, 4, 1));
  }
}
