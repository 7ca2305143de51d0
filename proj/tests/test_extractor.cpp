#include <catch_amalgamated.hpp>

#include <random>

#include "ramsey_cert/extractor.hpp"
#include "support/naive.hpp"

using namespace ramsey;

namespace {

Config pipeline_config(int k) {
  Config cfg = Config::desk(k);
  cfg.fallback_limit = 0;
  cfg.density_guards = false;
  return cfg;
}

bool has_event(const ExtractionTrace& t, Stage s, const std::string& fragment) {
  for (const auto& e : t.events)
    if (e.stage == s && e.note.find(fragment) != std::string::npos) return true;
  return false;
}

// Target K_3. Vertex 0 is red to A, vertex 1 is red to B, 0-1 is blue. The
// copy of K_3 - v lands on {0, 1}, every other vertex is red to one of them,
// and the hub is 0 with U1 = A.
struct HubFixture {
  int a_size = 10;
  int b_size = 10;
  bool red_path_in_a = false;  // a red P_4 inside A
  bool b_is_red_path = false;  // B spans a red P_{2k}, each B vertex red to its own A vertex
  bool b_blue_inside = true;

  ColoredComplete build() const {
    const int n = 2 + a_size + b_size;
    ColoredComplete c(n);
    const auto a = [](int i) { return 2 + i; };
    const auto b = [&](int i) { return 2 + a_size + i; };
    for (int i = 0; i < a_size; ++i) c.set_red(0, a(i));
    for (int i = 0; i < b_size; ++i) c.set_red(1, b(i));
    if (red_path_in_a)
      for (int i = 1; i < 4; ++i) c.set_red(a(i - 1), a(i));
    if (b_is_red_path) {
      for (int i = 1; i < b_size; ++i) c.set_red(b(i - 1), b(i));
      for (int i = 0; i < b_size; ++i) c.set_red(b(i), a(i % a_size));
    }
    if (!b_blue_inside)
      for (int i = 0; i + 1 < b_size; i += 2) c.set_red(b(i), b(i + 1));
    return c;
  }
};

}  // namespace

TEST_CASE("ramsey_bound_target: examples", "[bounds]") {
  Config cfg = Config::desk(7);
  for (std::int64_t m : {1, 5, 17, 100, 12345}) CHECK(ramsey_bound_target(cfg, m) == 2 * m + 3);
  cfg.B = 10;
  CHECK(ramsey_bound_target(cfg, 100) == 203);
  for (std::int64_t m = 100; m <= 400; ++m) CHECK(ramsey_bound_target(cfg, m) == 2 * m + 3);
  CHECK_THROWS_AS(ramsey_bound_target(cfg, 0), InvalidInput);
}

TEST_CASE("ramsey_bound_target matches floor(B - sqrt m) exactly", "[bounds][property]") {
  for (int k : {5, 7, 9}) {
    for (std::int64_t b = 0; b <= 60; ++b) {
      Config cfg = Config::desk(k);
      cfg.B = b;
      for (std::int64_t m = 1; m <= 500; ++m) {
        // floor(B - sqrt(m)) = B - ceil(sqrt(m)); ceil by counting
        std::int64_t root = 0;
        while (root * root < m) ++root;
        REQUIRE(ramsey_bound_target(cfg, m) == 2 * m + std::max<std::int64_t>(b - root, k / 2));
      }
    }
  }
}

TEST_CASE("configuration checks", "[config]") {
  CHECK_NOTHROW(Config::desk(5).validate());
  CHECK_THROWS_AS(Config::desk(6).validate(), InvalidInput);
  CHECK_THROWS_AS(Config::desk(3).validate(), InvalidInput);
  Config neg = Config::desk(7);
  neg.B = -1;
  CHECK_THROWS_AS(neg.validate(), InvalidInput);
  CHECK_THROWS_AS(extract_witness(ColoredComplete(5), Config::desk(4), TargetGraph(complete_graph(2))),
                  InvalidInput);
}

TEST_CASE("guaranteed regime lies beyond 64-bit edge counts", "[config]") {
  // m0 = 2^63 k^18 needs more than 64 bits for every admissible k
  for (int k = 5; k <= 99; k += 2) CHECK(guaranteed_regime_log2_m0(k) > 64.0);
  CHECK(guaranteed_regime_log2_m0(7) == Catch::Approx(63.0 + 18.0 * std::log2(7.0)));
}

TEST_CASE("partition_H: boundary examples", "[partition]") {
  const Graph c6 = cycle_graph(6);
  const auto all = partition_H(c6, 6, 1);
  CHECK(all.v1.size() == 6);
  CHECK(all.v2.empty());
  CHECK(all.v2_edges == 0);
  CHECK(all.h2.order() == 0);
  const auto none = partition_H(c6, 0, 1);
  CHECK(none.v1.empty());
  CHECK(none.v2.size() == 6);
  CHECK(none.v2_edges == 6);
  CHECK(none.h2.edge_count() == 6);
  CHECK_THROWS_AS(partition_H(c6, 7, 1), InvalidInput);
  CHECK_THROWS_AS(partition_H(c6, -1, 1), InvalidInput);
}

TEST_CASE("partition_H: C_6 with s = 3", "[partition]") {
  const Graph c6 = cycle_graph(6);
  // every 3-subset as V2, bound m (1/2)^2 = 1.5
  int good = 0;
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    if (std::popcount(mask) != 3) continue;
    int inside = 0;
    for (auto [u, v] : c6.edges())
      if (((mask >> u) & 1U) && ((mask >> v) & 1U)) ++inside;
    if (4 * inside <= 6) ++good;
  }
  CHECK(good > 0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto p = partition_H(c6, 3, seed);
    CHECK(p.v1.size() == 3);
    CHECK(p.v2_edges <= 1);
  }
}

TEST_CASE("partition_H satisfies the edge bound exactly", "[partition][property]") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 14);
    const Graph h = naive::random_target(n, rng);
    const std::uint64_t m = h.edge_count();
    for (int s = 0; s <= n; ++s) {
      const auto p = partition_H(h, s, rng());
      REQUIRE(static_cast<int>(p.v1.size()) == s);
      REQUIRE(static_cast<int>(p.v2.size()) == n - s);
      std::vector<int> side(n, -1);
      for (Vertex v : p.v1) side[v] = 1;
      for (Vertex v : p.v2) {
        REQUIRE(side[v] == -1);
        side[v] = 2;
      }
      std::uint64_t inside = 0;
      for (auto [u, v] : h.edges())
        if (side[u] == 2 && side[v] == 2) ++inside;
      REQUIRE(inside == p.v2_edges);
      const std::uint64_t r = static_cast<std::uint64_t>(n - s);
      REQUIRE(inside * n * n <= m * r * r);
      REQUIRE(p.h2.edge_count() == inside);
      REQUIRE_FALSE(p.h2.has_isolated_vertex());
      REQUIRE(p.h2.order() == static_cast<int>(p.h2_vertices.size()));
    }
  }
}

TEST_CASE("conditional-expectation split meets the bound without sampling", "[partition][property]") {
  std::mt19937_64 rng(93);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 16);
    const Graph h = naive::random_graph(n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0, rng);
    for (int s = 0; s <= n; ++s) {
      const VertexBits v2 = detail::conditional_expectation_split(h, n - s);
      REQUIRE(v2.count() == n - s);
      REQUIRE(partition_bound_holds(detail::edges_within(h, v2), n, h.edge_count(), s));
    }
  }
}

TEST_CASE("extract_witness: trivial colourings", "[extract]") {
  for (const auto& [name, g] : naive::small_targets()) {
    CAPTURE(name);
    const TargetGraph h(g);
    for (int k : {5, 7}) {
      for (Config cfg : {Config::desk(k), pipeline_config(k)}) {
        const ColoredComplete blue(12);
        const auto a = extract_witness(blue, cfg, h);
        REQUIRE(std::holds_alternative<Witness>(a));
        CHECK(is_blue_copy(std::get<Witness>(a)));
        CHECK(check_witness(blue, k, g, std::get<Witness>(a)));

        const ColoredComplete red(complete_graph(12));
        const auto b = extract_witness(red, cfg, h);
        REQUIRE(std::holds_alternative<Witness>(b));
        CHECK(is_red_cycle(std::get<Witness>(b)));
        CHECK(check_witness(red, k, g, std::get<Witness>(b)));
      }
    }
  }
}

TEST_CASE("extract_witness: base case delegates to the oracle", "[extract]") {
  ExtractionTrace trace;
  const auto r = extract_witness(lower_bound_coloring(5, 5), Config::desk(5), TargetGraph(matching_graph(5)),
                                 &trace);
  // order 11 > fallback 10, so the matching branch decides; no witness exists
  REQUIRE(std::holds_alternative<Exhausted>(r));
  CHECK(std::get<Exhausted>(r).stage == Stage::matching_case);

  ExtractionTrace small;
  const auto s = extract_witness(lower_bound_coloring(3, 3), Config::desk(5), TargetGraph(matching_graph(3)),
                                 &small);
  REQUIRE(std::holds_alternative<Witness>(s) == brute_force_witness(lower_bound_coloring(3, 3), 5,
                                                                    matching_graph(3)).has_value());
  REQUIRE_FALSE(small.events.empty());
  CHECK(small.events.front().stage == Stage::base_case);
}

TEST_CASE("extract_witness: perfect matchings go to the matching case", "[extract]") {
  std::mt19937_64 rng(95);
  const Graph h = matching_graph(5);
  int delegated = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const ColoredComplete c = naive::random_coloring(matching_ramsey_order(5, 5), rng, (trial % 10) / 9.0);
    ExtractionTrace trace;
    const auto r = extract_witness(c, pipeline_config(5), TargetGraph(h), &trace);
    REQUIRE(std::holds_alternative<Witness>(r));
    REQUIRE(check_witness(c, 5, h, std::get<Witness>(r)));
    if (has_event(trace, Stage::matching_case, "matching case")) ++delegated;
  }
  CHECK(delegated == 200);
}

TEST_CASE("extract_witness: disconnected targets are split and reassembled", "[extract]") {
  const Graph h = disjoint_union(path_graph(3), cycle_graph(4));
  ExtractionTrace trace;
  const ColoredComplete blue(9);
  const auto r = extract_witness(blue, pipeline_config(5), TargetGraph(h), &trace);
  REQUIRE(std::holds_alternative<Witness>(r));
  CHECK(check_witness(blue, 5, h, std::get<Witness>(r)));
  CHECK(has_event(trace, Stage::disconnected, "split off"));
}

TEST_CASE("extract_witness: too few vertices is reported, not guessed", "[extract]") {
  const ColoredComplete blue(3);
  const auto r = extract_witness(blue, pipeline_config(5), TargetGraph(complete_graph(4)));
  REQUIRE(std::holds_alternative<Exhausted>(r));
  CHECK(std::get<Exhausted>(r).stage == Stage::min_degree);
}

TEST_CASE("hub fixture: red path in U1 closes through the hub", "[extract][stages]") {
  HubFixture f;
  f.red_path_in_a = true;
  const ColoredComplete c = f.build();
  ExtractionTrace trace;
  const auto r = extract_witness(c, pipeline_config(5), TargetGraph(complete_graph(3)), &trace);
  REQUIRE(std::holds_alternative<Witness>(r));
  REQUIRE(is_red_cycle(std::get<Witness>(r)));
  CHECK(std::get<RedCycle>(std::get<Witness>(r)).vertices.front() == 0);
  CHECK(has_event(trace, Stage::first_neighbourhood, "red P_{k-1}"));
  REQUIRE_FALSE(trace.states.empty());
  CHECK(trace.states.back().hub == 0);
}

TEST_CASE("hub fixture: large U1 holds a blue H", "[extract][stages]") {
  HubFixture f;
  f.a_size = 16;
  f.b_size = 4;
  const ColoredComplete c = f.build();
  ExtractionTrace trace;
  const auto r = extract_witness(c, pipeline_config(5), TargetGraph(complete_graph(3)), &trace);
  REQUIRE(std::holds_alternative<Witness>(r));
  CHECK(is_blue_copy(std::get<Witness>(r)));
  CHECK(has_event(trace, Stage::first_neighbourhood, "|U1| >= n + k sqrt(2m)"));
}

TEST_CASE("hub fixture: red P_2k in the second neighbourhood", "[extract][stages]") {
  for (int k : {5, 7, 9}) {
    HubFixture f;
    f.a_size = 2 * k;
    f.b_size = 2 * k;
    f.b_is_red_path = true;
    const ColoredComplete c = f.build();
    ExtractionTrace trace;
    const auto r = extract_witness(c, pipeline_config(k), TargetGraph(complete_graph(3)), &trace);
    REQUIRE(std::holds_alternative<Witness>(r));
    CHECK(is_red_cycle(std::get<Witness>(r)));
    CHECK(has_event(trace, Stage::second_neighbourhood, "red P_{2k}"));
    REQUIRE_FALSE(trace.states.empty());
    CHECK(trace.states.back().passed_first);
    CHECK(static_cast<int>(trace.states.back().second_red_nbhd.size()) == 2 * k);
  }
}

TEST_CASE("hub fixture: partition assembly", "[extract][stages]") {
  // margin ceil(5 sqrt 6) = 13; |U1| = 15 gives |V1| = 2 and H[V2] a single vertex
  for (int a : {15}) {
    HubFixture f;
    f.a_size = a;
    f.b_size = 3;
    const ColoredComplete c = f.build();
    ExtractionTrace trace;
    const auto r = extract_witness(c, pipeline_config(5), TargetGraph(complete_graph(3)), &trace);
    CAPTURE(a);
    REQUIRE(std::holds_alternative<Witness>(r));
    CHECK(is_blue_copy(std::get<Witness>(r)));
    CHECK(has_event(trace, Stage::partition, "assembled"));
    REQUIRE_FALSE(trace.states.empty());
    const auto& st = trace.states.front();
    CHECK(st.passed_first);
    CHECK(st.passed_second);
    CHECK(static_cast<int>(st.red_nbhd.size()) == a);
  }
}

TEST_CASE("hub fixture: H[V2] that does not fit U2 is reported", "[extract][stages]") {
  // |U1| = 14 leaves an edge for U2, whose only blue edges avoid vertex 1;
  // |U1| = 13 leaves all of K_3 for U2
  for (int a : {13, 14}) {
    HubFixture f;
    f.a_size = a;
    f.b_size = 3;
    const auto r = extract_witness(f.build(), pipeline_config(5), TargetGraph(complete_graph(3)));
    REQUIRE(std::holds_alternative<Exhausted>(r));
    CHECK(std::get<Exhausted>(r).stage == Stage::partition);
  }
}

TEST_CASE("extraction state invariants along every hub step", "[extract][property]") {
  std::mt19937_64 rng(97);
  auto targets = naive::small_targets();
  targets.push_back({"K4", complete_graph(4)});
  targets.push_back({"C5", cycle_graph(5)});
  for (const auto& [name, g] : targets) {
    const TargetGraph h(g);
    for (int k : {5, 7}) {
      for (int trial = 0; trial < 60; ++trial) {
        const int n = 8 + static_cast<int>(rng() % 30);
        ColoredComplete c = naive::random_coloring(n, rng, 0.05);
        // a few red stars make direct extension fail
        for (int hub = 0; hub < 3; ++hub)
          for (Vertex x = 3; x < n; ++x)
            if (rng() % 2) c.set_red(hub, x);
        ExtractionTrace trace;
        const auto r = extract_witness(c, pipeline_config(k), h, &trace);
        if (const auto* w = std::get_if<Witness>(&r)) REQUIRE(check_witness(c, k, g, *w));
        for (const auto& st : trace.states) {
          // U1, P, U2 and the hub partition the vertex set of that step's colouring
          const std::size_t total = 1 + st.red_nbhd.size() + st.second_red_nbhd.size() + st.rest.size();
          CHECK(st.margin == static_cast<std::int64_t>(ceil_k_sqrt_2m(k, st.m)));
          CHECK(static_cast<int>(st.images.size()) == st.delta);
          if (st.passed_first) CHECK(static_cast<std::int64_t>(st.red_nbhd.size()) < st.n + st.margin);
          if (st.passed_second)
            CHECK(static_cast<std::int64_t>(st.second_red_nbhd.size()) < bound_sqrt(2 * k, st.n, st.m));
          CHECK(total >= st.uncovered.size());
        }
      }
    }
  }
}

TEST_CASE("U1 to U2 pairs are blue in every recorded state", "[extract][property]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 10 + static_cast<int>(rng() % 20);
    ColoredComplete c = naive::random_coloring(n, rng, 0.08);
    for (Vertex x = 2; x < n; ++x) {
      if (rng() % 2) c.set_red(0, x);
      else c.set_red(1, x);
    }
    c.set_blue(0, 1);
    ExtractionTrace trace;
    (void)extract_witness(c, pipeline_config(5), TargetGraph(complete_graph(3)), &trace);
    // only top-level states refer to c itself
    for (const auto& st : trace.states) {
      if (st.depth != 0) continue;
      for (Vertex a : st.red_nbhd)
        for (Vertex b : st.rest) REQUIRE(c.is_blue(a, b));
      REQUIRE(static_cast<int>(st.uncovered.size()) == n - 3 + 1);
    }
  }
}

TEST_CASE("desk configuration agrees with the oracle on small orders", "[extract][property]") {
  std::mt19937_64 rng(101);
  for (const auto& [name, g] : naive::small_targets()) {
    const TargetGraph h(g);
    for (int k : {5, 7}) {
      for (int n = 3; n <= 10; ++n) {
        for (int trial = 0; trial < 15; ++trial) {
          const ColoredComplete c = naive::random_coloring(n, rng, (trial % 5) / 4.0);
          const auto r = extract_witness(c, Config::desk(k), h);
          REQUIRE(std::holds_alternative<Witness>(r) == brute_force_witness(c, k, g).has_value());
        }
      }
    }
  }
}

TEST_CASE("pipeline witnesses always validate and never contradict the oracle", "[extract][property]") {
  std::mt19937_64 rng(103);
  for (const auto& [name, g] : naive::small_targets()) {
    const TargetGraph h(g);
    for (int k : {5, 7}) {
      for (int n = 3; n <= 10; ++n) {
        for (int trial = 0; trial < 15; ++trial) {
          const ColoredComplete c = naive::random_coloring(n, rng, (trial % 5) / 4.0);
          const auto r = extract_witness(c, pipeline_config(k), h);
          if (const auto* w = std::get_if<Witness>(&r)) {
            REQUIRE(check_witness(c, k, g, *w));
            REQUIRE(brute_force_witness(c, k, g).has_value());
          }
        }
      }
    }
  }
}
