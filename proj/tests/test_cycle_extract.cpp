#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "ramsey_cert/cycle_extract.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace ramsey;
using Case = SecondNeighbourhoodCase;

namespace {

// Independent cycle check on the adjacency matrix.
bool cycle_ok(const Graph& g, int k, const VertexList& c) {
  const auto a = naive::matrix_of(g);
  if (static_cast<int>(c.size()) != k) return false;
  if (static_cast<int>(std::set<Vertex>(c.begin(), c.end()).size()) != k) return false;
  for (int i = 0; i < k; ++i)
    if (!a[c[i]][c[(i + 1) % k]]) return false;
  return true;
}

Graph wheel(int rim) {
  Graph g(rim + 1);
  for (int i = 0; i < rim; ++i) {
    g.add_edge(0, 1 + i);
    g.add_edge(1 + i, 1 + (i + 1) % rim);
  }
  return g;
}

}  // namespace

TEST_CASE("first neighbourhood: examples", "[first]") {
  const Graph w = wheel(5);
  const VertexList rim_path{1, 2, 3, 4, 5};
  const VertexList c6 = cycle_from_first_neighbourhood(w, 0, rim_path);
  CHECK(c6 == VertexList{0, 1, 2, 3, 4, 5});
  CHECK(cycle_ok(w, 6, c6));

  const Graph k3 = complete_graph(3);
  const VertexList edge{1, 2};
  CHECK(cycle_ok(k3, 3, cycle_from_first_neighbourhood(k3, 0, edge)));
}

TEST_CASE("first neighbourhood: precondition errors", "[first]") {
  const Graph w = wheel(5);
  const VertexList not_path{1, 3};
  CHECK_THROWS_AS(cycle_from_first_neighbourhood(w, 0, not_path), InvalidInput);
  CHECK_THROWS_AS(cycle_from_first_neighbourhood(w, 2, VertexList{3, 4}), InvalidInput);
  CHECK_THROWS_AS(cycle_from_first_neighbourhood(w, 0, VertexList{1}), InvalidInput);
  CHECK_THROWS_AS(cycle_from_first_neighbourhood(w, 9, VertexList{1, 2}), InvalidInput);
}

TEST_CASE("first neighbourhood on random planted paths", "[first][property]") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 3 + static_cast<int>(rng() % 9);
    Graph g = naive::random_graph(k + 6, 0.2, rng);
    const Vertex v = static_cast<Vertex>(rng() % g.order());
    VertexList others;
    for (Vertex x = 0; x < g.order(); ++x)
      if (x != v) others.push_back(x);
    std::shuffle(others.begin(), others.end(), rng);
    const VertexList path(others.begin(), others.begin() + (k - 1));
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (!g.has_edge(v, path[i])) g.add_edge(v, path[i]);
      if (i > 0 && !g.has_edge(path[i - 1], path[i])) g.add_edge(path[i - 1], path[i]);
    }
    REQUIRE(cycle_ok(g, k, cycle_from_first_neighbourhood(g, v, path)));
  }
}

TEST_CASE("second neighbourhood: private connectors fire the first branch at j = 1", "[second]") {
  const auto f = fixtures::private_connectors(5);
  const auto r = cycle_from_second_neighbourhood(f.g, f.hub, f.path);
  CHECK(r.which == Case::distinct_connectors);
  CHECK(r.j == 1);
  // v u_1 v_1 v_2 u_2
  const Vertex u1 = 1, u2 = 2;
  CHECK(r.cycle == VertexList{f.hub, u1, f.path[0], f.path[1], u2});
  CHECK(cycle_ok(f.g, 5, r.cycle));
}

TEST_CASE("second neighbourhood: one shared connector gives the path closure", "[second]") {
  for (int k = 5; k <= 11; k += 2) {
    const auto f = fixtures::shared_connector(k);
    const auto r = cycle_from_second_neighbourhood(f.g, f.hub, f.path);
    CHECK(r.which == Case::single_connector);
    VertexList expect{1};
    expect.insert(expect.end(), f.path.begin(), f.path.begin() + (k - 1));
    CHECK(r.cycle == expect);
    CHECK(cycle_ok(f.g, k, r.cycle));
  }
}

TEST_CASE("second neighbourhood: periodic connectors reach the pair branches", "[second]") {
  SECTION("k = 7, three connectors, u_1 != u_2") {
    const auto f = fixtures::periodic_connectors(7, {0, 1, 2});
    const auto r = cycle_from_second_neighbourhood(f.g, f.hub, f.path);
    CHECK(r.which == Case::first_pair_differs);
    CHECK(cycle_ok(f.g, 7, r.cycle));
    CHECK(naive::has_cycle(f.g, 7));
  }
  SECTION("k = 9, u_1 != u_2") {
    const auto f = fixtures::periodic_connectors(9, {0, 1, 2, 3, 4});
    const auto r = cycle_from_second_neighbourhood(f.g, f.hub, f.path);
    CHECK(r.which == Case::first_pair_differs);
    CHECK(cycle_ok(f.g, 9, r.cycle));
  }
  SECTION("u_1 = u_2 != u_3") {
    for (int k : {7, 9, 11}) {
      std::vector<int> period(k - 4);
      std::iota(period.begin(), period.end(), 0);
      period[1] = 0;
      const auto f = fixtures::periodic_connectors(k, period);
      const auto r = cycle_from_second_neighbourhood(f.g, f.hub, f.path);
      CHECK(r.which == Case::second_pair_differs);
      CHECK(cycle_ok(f.g, k, r.cycle));
    }
  }
  SECTION("k = 5 has period one, so the pair branches collapse to the closure") {
    const auto f = fixtures::periodic_connectors(5, {0});
    CHECK(cycle_from_second_neighbourhood(f.g, f.hub, f.path).which == Case::single_connector);
  }
}

TEST_CASE("second neighbourhood: first branch index arithmetic for every j", "[second]") {
  for (int k = 5; k <= 11; ++k) {
    for (int j = 1; j <= k; ++j) {
      const auto f = fixtures::distinct_at(k, j);
      const auto r = cycle_from_second_neighbourhood(f.g, f.hub, f.path);
      REQUIRE(r.which == Case::distinct_connectors);
      REQUIRE(r.j == j);
      REQUIRE(static_cast<int>(r.cycle.size()) == k);
      CHECK(r.cycle.front() == f.hub);
      CHECK(r.cycle[2] == f.path[j - 1]);
      CHECK(r.cycle[k - 2] == f.path[j + k - 4 - 1]);
      CHECK(cycle_ok(f.g, k, r.cycle));
    }
  }
}

TEST_CASE("second neighbourhood: precondition errors", "[second]") {
  auto f = fixtures::private_connectors(5);
  CHECK_THROWS_AS(cycle_from_second_neighbourhood(f.g, f.hub, VertexList(f.path.begin(), f.path.end() - 1)),
                  InvalidInput);
  const auto small = fixtures::shared_connector(5);
  const VertexList eight(small.path.begin(), small.path.begin() + 8);
  CHECK_THROWS_AS(cycle_from_second_neighbourhood(small.g, small.hub, eight), InvalidInput);
  Graph touching = f.g;
  touching.add_edge(f.hub, f.path[3]);
  CHECK_THROWS_AS(cycle_from_second_neighbourhood(touching, f.hub, f.path), InvalidInput);
  VertexList broken = f.path;
  std::swap(broken[0], broken[5]);
  CHECK_THROWS_AS(cycle_from_second_neighbourhood(f.g, f.hub, broken), InvalidInput);
  // a path vertex with no common neighbour
  Graph lonely(3 + 10);
  lonely.add_edge(0, 1);
  for (int i = 0; i < 10; ++i) {
    if (i > 0) lonely.add_edge(2 + i, 3 + i);
    if (i != 4) lonely.add_edge(1, 3 + i);
  }
  VertexList lp;
  for (int i = 0; i < 10; ++i) lp.push_back(3 + i);
  CHECK_THROWS_AS(cycle_from_second_neighbourhood(lonely, 0, lp), InvalidInput);
}

TEST_CASE("second neighbourhood on random planted paths", "[second][property]") {
  std::mt19937_64 rng(53);
  for (int k : {5, 7, 9, 11}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const auto f = fixtures::planted(k, rng);
      const auto r = cycle_from_second_neighbourhood(f.g, f.hub, f.path);
      REQUIRE(cycle_ok(f.g, k, r.cycle));
    }
  }
}
