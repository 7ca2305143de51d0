#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "ramsey_cert/cycle_extract.hpp"
#include "ramsey_cert/errors.hpp"
#include "ramsey_cert/graph.hpp"
#include "ramsey_cert/integer_math.hpp"
#include "ramsey_cert/matching_case.hpp"
#include "ramsey_cert/oracle.hpp"
#include "ramsey_cert/path_ramsey.hpp"
#include "ramsey_cert/search.hpp"
#include "ramsey_cert/target.hpp"
#include "ramsey_cert/witness.hpp"

// Red C_k or blue H by induction on e(H).
//
// Given a blue copy of H - v (v of minimum degree d), every leftover vertex
// has a red edge to one of the d images of N(v), or v extends directly. A hub
// u with many red neighbours splits the colouring into U1 = N_red(u), the
// second red neighbourhood P, and the rest U2, with every U1-U2 pair blue.
// A red P_{k-1} in U1 or P_{2k} in P closes a red C_k; otherwise a part of H
// goes into U1 through the path-Ramsey embedder and the remainder into U2 by
// recursion.
//
// The guaranteed regime needs m0 >= 2^63 k^18; at desk scale the constants are
// configurable and a failed size check yields Exhausted instead of a witness.
// Returned witnesses are always validated.

namespace ramsey {

struct Config {
  int k = 7;
  std::uint64_t m0 = 0;  // e(H) <= m0 goes to the base case
  std::int64_t B = 0;
  int fallback_limit = 10;  // N <= fallback_limit goes to the base case
  std::uint64_t seed = 0x5eedULL;
  bool density_guards = true;
  BruteForceBudget budget{};
  int chromatic_limit = kDefaultChromaticLimit;

  static Config desk(int k) {
    Config c;
    c.k = k;
    return c;
  }

  void validate() const {
    if (k < 5 || k % 2 == 0) throw InvalidInput("extraction needs odd k >= 5");
    if (B < 0) throw InvalidInput("B must be non-negative");
  }
};

/// log2(2^63 k^18), the base-case threshold of the guaranteed regime.
inline double guaranteed_regime_log2_m0(int k) { return 63.0 + 18.0 * std::log2(static_cast<double>(k)); }

enum class Stage {
  base_case,
  disconnected,
  matching_case,
  density_guard,
  min_degree,
  first_neighbourhood,
  second_neighbourhood,
  partition,
};

inline const char* to_string(Stage s) {
  switch (s) {
    case Stage::base_case: return "base_case";
    case Stage::disconnected: return "disconnected";
    case Stage::matching_case: return "matching_case";
    case Stage::density_guard: return "density_guard";
    case Stage::min_degree: return "min_degree";
    case Stage::first_neighbourhood: return "first_neighbourhood";
    case Stage::second_neighbourhood: return "second_neighbourhood";
    case Stage::partition: return "partition";
  }
  return "unknown";
}

struct Exhausted {
  Stage stage;
  std::string check;
};

using ExtractionResult = std::variant<Witness, Exhausted>;

/// Working record of one hub step. Vertex ids refer to the colouring the step
/// ran on.
struct ExtractionState {
  int depth = 0;
  Vertex min_deg_vertex = -1;  // in H
  int delta = 0;
  VertexList images;     // U, images of N_H(v)
  VertexList uncovered;  // S, vertices outside the copy of H - v
  Vertex hub = -1;
  VertexList red_nbhd;         // U1
  VertexList second_red_nbhd;  // P
  VertexList rest;             // U2
  int n = 0;
  std::int64_t m = 0;
  std::int64_t margin = 0;  // ceil(k sqrt(2m))
  bool passed_first = false;
  bool passed_second = false;
};

struct TraceEvent {
  int depth;
  Stage stage;
  std::string note;
};

struct ExtractionTrace {
  std::vector<TraceEvent> events;
  std::vector<ExtractionState> states;
};

/// 2m + max(B - ceil(sqrt(m)), floor(k/2)).
inline std::int64_t ramsey_bound_target(const Config& cfg, std::int64_t m) {
  if (m < 1) throw InvalidInput("ramsey_bound_target needs m >= 1");
  const auto root = static_cast<std::int64_t>(isqrt_ceil(static_cast<std::uint64_t>(m)));
  return 2 * m + std::max<std::int64_t>(cfg.B - root, cfg.k / 2);
}

struct PartitionResult {
  VertexList v1;
  VertexList v2;
  std::size_t v2_edges = 0;  // e(H[V2])
  Graph h2;                  // H[V2] without its isolated vertices
  VertexList h2_vertices;    // h2 vertex i is H vertex h2_vertices[i]
};

/// e(H[V2]) * n^2 <= m * (n - |V1|)^2, in exact arithmetic.
inline bool partition_bound_holds(std::size_t v2_edges, int n, std::size_t m, int s) {
  const auto lhs = static_cast<unsigned __int128>(v2_edges) * static_cast<unsigned>(n) * static_cast<unsigned>(n);
  const auto rest = static_cast<unsigned>(n - s);
  const auto rhs = static_cast<unsigned __int128>(m) * rest * rest;
  return lhs <= rhs;
}

namespace detail {

inline std::size_t edges_within(const Graph& h, const VertexBits& set) {
  std::size_t twice = 0;
  set.for_each([&](Vertex v) { twice += static_cast<std::size_t>(count_common(h.row(v), set.words())); });
  return twice / 2;
}

struct Fraction {
  __int128 num;
  __int128 den;

  friend bool operator<(const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; }
};

// Expected e(V2) when `slots` of the `undecided` vertices still join V2
// uniformly at random.
inline Fraction conditional_expectation(std::int64_t fixed, std::int64_t to_undecided, std::int64_t among,
                                        std::int64_t slots, std::int64_t undecided) {
  if (undecided == 0) return {fixed, 1};
  if (undecided == 1) return {fixed + to_undecided * slots, 1};
  const __int128 den = static_cast<__int128>(undecided) * (undecided - 1);
  const __int128 num = fixed * den + static_cast<__int128>(to_undecided) * slots * (undecided - 1) +
                       static_cast<__int128>(among) * slots * (slots - 1);
  return {num, den};
}

// Derandomised choice: place vertices in index order, each on the side that
// keeps the conditional expectation of e(V2) lowest.
inline VertexBits conditional_expectation_split(const Graph& h, int v2_size) {
  const int n = h.order();
  VertexBits v2(n);
  VertexBits undecided = VertexBits::all(n);
  int slots = v2_size;
  int placed_v1 = 0;
  const int v1_size = n - v2_size;
  for (Vertex x = 0; x < n; ++x) {
    undecided.erase(x);
    const auto left = static_cast<std::int64_t>(n - x - 1);
    const auto among = static_cast<std::int64_t>(edges_within(h, undecided));
    auto option = [&](bool into_v2) {
      VertexBits trial = v2;
      if (into_v2) trial.insert(x);
      const auto fixed = static_cast<std::int64_t>(edges_within(h, trial));
      std::int64_t cross = 0;
      trial.for_each([&](Vertex w) { cross += count_common(h.row(w), undecided.words()); });
      return conditional_expectation(fixed, cross, among, slots - (into_v2 ? 1 : 0), left);
    };
    const bool can_v1 = placed_v1 < v1_size;
    const bool can_v2 = slots > 0;
    bool into_v2 = !can_v1;
    if (can_v1 && can_v2) into_v2 = option(true) < option(false);
    if (into_v2) {
      v2.insert(x);
      --slots;
    } else {
      ++placed_v1;
    }
  }
  return v2;
}

}  // namespace detail

/// Splits V(H) into V1 (|V1| = s) and V2 with e(H[V2]) <= m ((n - s)/n)^2.
/// Uniform s-subsets are sampled first; if none qualifies, the method of
/// conditional expectations produces one deterministically.
inline PartitionResult partition_H(const Graph& h, int s, std::uint64_t seed) {
  const int n = h.order();
  if (s < 0 || s > n) throw InvalidInput("partition size out of range");
  const std::size_t m = h.edge_count();
  std::mt19937_64 rng(seed);
  VertexList ids(n);
  for (Vertex v = 0; v < n; ++v) ids[v] = v;

  std::optional<VertexBits> v2;
  for (int attempt = 0; attempt < 64 && !v2; ++attempt) {
    std::shuffle(ids.begin(), ids.end(), rng);
    VertexBits trial(n);
    for (int i = s; i < n; ++i) trial.insert(ids[i]);
    if (partition_bound_holds(detail::edges_within(h, trial), n, m, s)) v2 = std::move(trial);
  }
  if (!v2) v2 = detail::conditional_expectation_split(h, n - s);

  PartitionResult out;
  for (Vertex v = 0; v < n; ++v) (v2->contains(v) ? out.v2 : out.v1).push_back(v);
  out.v2_edges = detail::edges_within(h, *v2);
  if (!partition_bound_holds(out.v2_edges, n, m, s)) {
    throw ContractViolation("partition exceeds the expected-edges bound");
  }
  const Graph inner = h.induced(out.v2);
  for (std::size_t i = 0; i < out.v2.size(); ++i) {
    if (inner.degree(static_cast<Vertex>(i)) > 0) out.h2_vertices.push_back(out.v2[i]);
  }
  out.h2 = h.induced(out.h2_vertices);
  return out;
}

namespace detail {

class Extractor {
 public:
  Extractor(const Config& cfg, ExtractionTrace* trace) : cfg_(cfg), trace_(trace) {}

  ExtractionResult run(const ColoredComplete& c, const TargetGraph& h, int depth) {
    ExtractionResult r = dispatch(c, h, depth);
    if (const auto* w = std::get_if<Witness>(&r)) {
      if (!check_witness(c, cfg_.k, h.graph(), *w)) {
        throw ContractViolation("extraction produced a witness that fails validation");
      }
    }
    return r;
  }

 private:
  void note(int depth, Stage stage, std::string text) {
    if (trace_) trace_->events.push_back({depth, stage, std::move(text)});
  }

  ExtractionResult brute(const ColoredComplete& c, const Graph& h, Stage stage, int depth, const std::string& why) {
    note(depth, stage, "brute force: " + why);
    try {
      if (auto w = brute_force_witness(c, cfg_.k, h, cfg_.budget)) return *w;
    } catch (const BudgetExceeded& e) {
      return Exhausted{stage, why + "; " + e.what()};
    }
    return Exhausted{stage, why + "; no witness exists in this colouring"};
  }

  static ExtractionResult lift(const SubColoring& sub, ExtractionResult r) {
    if (auto* w = std::get_if<Witness>(&r)) {
      if (auto* cyc = std::get_if<RedCycle>(w)) return Witness{RedCycle{sub.lift(cyc->vertices)}};
      auto& map = std::get<BlueCopy>(*w).embedding.map;
      return Witness{BlueCopy{Embedding{sub.lift(map)}}};
    }
    return r;
  }

  ExtractionResult dispatch(const ColoredComplete& c, const TargetGraph& h, int depth) {
    const int big_n = c.order();
    const int n = h.n();
    const auto m = static_cast<std::int64_t>(h.m());
    const int k = cfg_.k;

    if (static_cast<std::uint64_t>(m) <= cfg_.m0 || big_n <= cfg_.fallback_limit) {
      return brute(c, h.graph(), Stage::base_case, depth,
                   "base case (N=" + std::to_string(big_n) + ", e(H)=" + std::to_string(m) + ")");
    }

    const auto comps = components(h.graph());
    if (comps.size() > 1) return disconnected(c, h, comps, depth);

    if (cfg_.density_guards) {
      const auto n3 = static_cast<__int128>(n) * n * n;
      const auto m2 = static_cast<__int128>(m) * m;
      if (n3 < m2) return brute(c, h.graph(), Stage::density_guard, depth, "n < m^(2/3)");
      const auto q = static_cast<__int128>(400) * k * k;
      if (q * n > (q - 1) * m) return brute(c, h.graph(), Stage::density_guard, depth, "n > (1 - (20k)^-2) m");
    }

    return hub_step(c, h, depth);
  }

  ExtractionResult disconnected(const ColoredComplete& c, const TargetGraph& h, const std::vector<VertexList>& comps,
                                int depth) {
    const int k = cfg_.k;
    const auto m = static_cast<int>(h.m());
    const bool perfect_matching =
        std::all_of(comps.begin(), comps.end(), [](const VertexList& comp) { return comp.size() == 2; });
    if (perfect_matching) {
      if (k <= m && c.order() >= matching_ramsey_order(k, m)) {
        note(depth, Stage::matching_case, "matching case, m=" + std::to_string(m));
        Witness w = matching_witness(c, k, m);
        if (auto* copy = std::get_if<BlueCopy>(&w)) {
          // matching_graph(m) pairs (2i, 2i+1) onto H's i-th component.
          Embedding e{VertexList(h.n())};
          for (int i = 0; i < m; ++i) {
            e.map[comps[i][0]] = copy->embedding.map[2 * i];
            e.map[comps[i][1]] = copy->embedding.map[2 * i + 1];
          }
          return Witness{BlueCopy{std::move(e)}};
        }
        return w;
      }
      return brute(c, h.graph(), Stage::matching_case, depth, "matching below m >= k or N >= 2m + (k-1)/2");
    }

    const auto piece =
        *std::find_if(comps.begin(), comps.end(), [&](const VertexList& comp) {
          return h.graph().induced(comp).edge_count() >= 2;
        });
    VertexList others;
    VertexBits in_piece(h.n());
    for (Vertex v : piece) in_piece.insert(v);
    for (Vertex v = 0; v < h.n(); ++v) {
      if (!in_piece.contains(v)) others.push_back(v);
    }
    note(depth, Stage::disconnected, "split off a component with " + std::to_string(piece.size()) + " vertices");

    const TargetGraph first(h.graph().induced(piece), cfg_.chromatic_limit);
    ExtractionResult r1 = run(c, first, depth + 1);
    if (!std::holds_alternative<Witness>(r1)) return r1;
    const Witness& w1 = std::get<Witness>(r1);
    if (is_red_cycle(w1)) return w1;

    const auto& map1 = std::get<BlueCopy>(w1).embedding.map;
    VertexBits used(c.order());
    for (Vertex v : map1) used.insert(v);
    VertexList free;
    for (Vertex v = 0; v < c.order(); ++v) {
      if (!used.contains(v)) free.push_back(v);
    }
    const SubColoring sub = c.restrict_to(free);
    const TargetGraph second(h.graph().induced(others), cfg_.chromatic_limit);
    ExtractionResult r2 = lift(sub, run(sub.coloring, second, depth + 1));
    if (!std::holds_alternative<Witness>(r2)) return r2;
    const Witness& w2 = std::get<Witness>(r2);
    if (is_red_cycle(w2)) return w2;

    Embedding e{VertexList(h.n())};
    for (std::size_t i = 0; i < piece.size(); ++i) e.map[piece[i]] = map1[i];
    const auto& map2 = std::get<BlueCopy>(w2).embedding.map;
    for (std::size_t i = 0; i < others.size(); ++i) e.map[others[i]] = map2[i];
    return Witness{BlueCopy{std::move(e)}};
  }

  // Places `vertices` of H on the lowest host vertices in `pool` not yet used.
  static bool place_free(VertexList& map, const VertexList& vertices, const VertexList& pool, VertexBits& used) {
    std::size_t next = 0;
    for (Vertex x : vertices) {
      while (next < pool.size() && used.contains(pool[next])) ++next;
      if (next == pool.size()) return false;
      map[x] = pool[next];
      used.insert(pool[next]);
    }
    return true;
  }

  ExtractionResult hub_step(const ColoredComplete& c, const TargetGraph& h, int depth) {
    const int k = cfg_.k;
    const int big_n = c.order();
    const Graph& hg = h.graph();
    const int n = h.n();
    const auto m = static_cast<std::int64_t>(h.m());

    // Minimum-degree vertex and a blue copy of H - v.
    Vertex v = 0;
    for (Vertex x = 1; x < n; ++x) {
      if (hg.degree(x) < hg.degree(v)) v = x;
    }
    const int delta = hg.degree(v);
    note(depth, Stage::min_degree, "v=" + std::to_string(v) + " delta=" + std::to_string(delta));

    VertexList others;
    for (Vertex x = 0; x < n; ++x) {
      if (x != v) others.push_back(x);
    }
    const Graph minus_v = hg.induced(others);
    VertexList kept;
    VertexList loose;
    for (std::size_t i = 0; i < others.size(); ++i) {
      (minus_v.degree(static_cast<Vertex>(i)) > 0 ? kept : loose).push_back(others[i]);
    }

    VertexList map(n, -1);
    VertexBits used(big_n);
    if (!kept.empty()) {
      const TargetGraph smaller(hg.induced(kept), cfg_.chromatic_limit);
      ExtractionResult r = run(c, smaller, depth + 1);
      if (!std::holds_alternative<Witness>(r)) return r;
      const Witness& w = std::get<Witness>(r);
      if (is_red_cycle(w)) return w;
      const auto& sub_map = std::get<BlueCopy>(w).embedding.map;
      for (std::size_t i = 0; i < kept.size(); ++i) {
        map[kept[i]] = sub_map[i];
        used.insert(sub_map[i]);
      }
    }
    VertexList everything(big_n);
    for (Vertex x = 0; x < big_n; ++x) everything[x] = x;
    if (!place_free(map, loose, everything, used)) {
      return Exhausted{Stage::min_degree, "fewer than n - 1 vertices for H - v"};
    }

    ExtractionState state;
    state.depth = depth;
    state.min_deg_vertex = v;
    state.delta = delta;
    state.n = n;
    state.m = m;
    state.margin = static_cast<std::int64_t>(ceil_k_sqrt_2m(static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(m)));
    for (Vertex x : hg.neighbours(v)) state.images.push_back(map[x]);
    for (Vertex x = 0; x < big_n; ++x) {
      if (!used.contains(x)) state.uncovered.push_back(x);
    }
    if (static_cast<int>(state.uncovered.size()) != big_n - n + 1) {
      throw ContractViolation("leftover set size differs from N - n + 1");
    }
    if (state.uncovered.empty()) return Exhausted{Stage::min_degree, "no vertex left for v"};

    for (Vertex s : state.uncovered) {
      const bool all_blue = std::all_of(state.images.begin(), state.images.end(),
                                        [&](Vertex u) { return c.is_blue(s, u); });
      if (all_blue) {
        note(depth, Stage::min_degree, "direct extension");
        map[v] = s;
        return Witness{BlueCopy{Embedding{std::move(map)}}};
      }
    }

    // Every leftover vertex now has a red neighbour among the images.
    int best = -1;
    for (Vertex u : state.images) {
      int red = 0;
      for (Vertex s : state.uncovered) red += c.is_red(s, u) ? 1 : 0;
      if (red > best || (red == best && u < state.hub)) {
        best = red;
        state.hub = u;
      }
    }
    if (static_cast<std::int64_t>(best) * delta < static_cast<std::int64_t>(state.uncovered.size())) {
      throw ContractViolation("pigeonhole hub has fewer than |S| / delta red neighbours");
    }
    const Vertex hub = state.hub;

    VertexBits first = c.red().neighbourhood(hub);
    VertexBits second(big_n);
    first.for_each([&](Vertex x) { second |= c.red().row(x); });
    second.subtract(first);
    second.erase(hub);
    state.red_nbhd = first.to_list();
    state.second_red_nbhd = second.to_list();
    for (Vertex x = 0; x < big_n; ++x) {
      if (x != hub && !first.contains(x) && !second.contains(x)) state.rest.push_back(x);
    }
    const std::size_t state_index = record(state);

    // A red P_{k-1} in U1 closes a red C_k through the hub; a large U1 holds
    // a blue H.
    const SubColoring in_first = c.restrict_to(state.red_nbhd);
    if (auto p = find_path(in_first.coloring.red(), k - 1)) {
      note(depth, Stage::first_neighbourhood, "red P_{k-1} in U1");
      return Witness{RedCycle{cycle_from_first_neighbourhood(c.red(), hub, in_first.lift(*p))}};
    }
    const auto u1 = static_cast<std::int64_t>(state.red_nbhd.size());
    if (u1 >= n + state.margin) {
      note(depth, Stage::first_neighbourhood, "|U1| >= n + k sqrt(2m)");
      return embed_or_close(c, in_first, k - 1, h, hub);
    }
    if (!(u1 < n + state.margin)) throw ContractViolation("stage 5 fell through with a large U1");
    if (trace_) trace_->states[state_index].passed_first = true;

    // Same for the second neighbourhood with P_{2k}.
    const SubColoring in_second = c.restrict_to(state.second_red_nbhd);
    if (auto p = find_path(in_second.coloring.red(), 2 * k)) {
      note(depth, Stage::second_neighbourhood, "red P_{2k} in the second neighbourhood");
      auto found = cycle_from_second_neighbourhood(c.red(), hub, in_second.lift(*p));
      note(depth, Stage::second_neighbourhood, std::string("case ") + to_string(found.which));
      return Witness{RedCycle{std::move(found.cycle)}};
    }
    const auto pi = static_cast<std::int64_t>(state.second_red_nbhd.size());
    const std::int64_t pi_bound = bound_sqrt(2 * k, n, m);
    if (pi >= pi_bound) {
      note(depth, Stage::second_neighbourhood, "|P| >= n + 2k sqrt(2m)");
      PathOrCopy r = red_path_or_blue_H(in_second.coloring, 2 * k, h);
      if (std::holds_alternative<RedPath>(r)) {
        throw ContractViolation("red P_{2k} missed by the second-neighbourhood search");
      }
      return Witness{BlueCopy{Embedding{in_second.lift(std::get<Embedding>(r).map)}}};
    }
    if (!(pi < pi_bound)) throw ContractViolation("stage 6 fell through with a large second neighbourhood");
    if (trace_) trace_->states[state_index].passed_second = true;

    return split_step(c, h, state, in_first, depth);
  }

  ExtractionResult split_step(const ColoredComplete& c, const TargetGraph& h, const ExtractionState& state,
                              const SubColoring& in_first, int depth) {
    const int k = cfg_.k;
    const Graph& hg = h.graph();
    const int n = h.n();
    const auto u1 = static_cast<std::int64_t>(state.red_nbhd.size());
    const std::int64_t s = u1 - state.margin;
    if (s < 0) {
      return Exhausted{Stage::partition, "|U1| = " + std::to_string(u1) + " is below ceil(k sqrt(2m)) = " +
                                             std::to_string(state.margin)};
    }
    const std::uint64_t seed = cfg_.seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(depth + 1));
    const PartitionResult part = partition_H(hg, static_cast<int>(s), seed);
    note(depth, Stage::partition,
         "|V1|=" + std::to_string(part.v1.size()) + " e(H[V2])=" + std::to_string(part.v2_edges));

    VertexList map(n, -1);
    VertexBits used(c.order());
    if (!part.v1.empty()) {
      const Graph h1 = hg.induced(part.v1);
      const auto colouring = optimal_coloring(h1, cfg_.chromatic_limit);
      const int chi1 = static_cast<int>(colour_classes(colouring).size());
      if (u1 < bound_chi(k - 1, h1.order(), chi1)) {
        return Exhausted{Stage::partition, "U1 below the path-Ramsey bound for H[V1]"};
      }
      PathOrCopy r = red_path_or_blue_H(in_first.coloring, k - 1, h1, colouring);
      if (std::holds_alternative<RedPath>(r)) {
        throw ContractViolation("red P_{k-1} in U1 missed by the first-neighbourhood search");
      }
      const auto& e = std::get<Embedding>(r).map;
      for (std::size_t i = 0; i < part.v1.size(); ++i) {
        map[part.v1[i]] = in_first.to_parent[e[i]];
        used.insert(map[part.v1[i]]);
      }
    }

    if (state.rest.size() < part.v2.size()) {
      return Exhausted{Stage::partition, "|U2| = " + std::to_string(state.rest.size()) + " is below |V2| = " +
                                             std::to_string(part.v2.size())};
    }
    const SubColoring in_rest = c.restrict_to(state.rest);
    VertexBits placed(n);
    if (part.h2.order() > 0) {
      const TargetGraph h2(part.h2, cfg_.chromatic_limit);
      ExtractionResult r = lift(in_rest, run(in_rest.coloring, h2, depth + 1));
      if (!std::holds_alternative<Witness>(r)) return r;
      const Witness& w = std::get<Witness>(r);
      if (is_red_cycle(w)) return w;
      const auto& e = std::get<BlueCopy>(w).embedding.map;
      for (std::size_t i = 0; i < part.h2_vertices.size(); ++i) {
        map[part.h2_vertices[i]] = e[i];
        used.insert(e[i]);
        placed.insert(part.h2_vertices[i]);
      }
    }
    VertexList isolated;
    for (Vertex x : part.v2) {
      if (!placed.contains(x)) isolated.push_back(x);
    }
    if (!place_free(map, isolated, state.rest, used)) {
      return Exhausted{Stage::partition, "U2 too small for the isolated vertices of H[V2]"};
    }
    note(depth, Stage::partition, "assembled blue H from U1 and U2");
    return Witness{BlueCopy{Embedding{std::move(map)}}};
  }

  ExtractionResult embed_or_close(const ColoredComplete& c, const SubColoring& in_first, int len,
                                  const TargetGraph& h, Vertex hub) {
    PathOrCopy r = red_path_or_blue_H(in_first.coloring, len, h);
    if (auto* p = std::get_if<RedPath>(&r)) {
      return Witness{RedCycle{cycle_from_first_neighbourhood(c.red(), hub, in_first.lift(p->vertices))}};
    }
    return Witness{BlueCopy{Embedding{in_first.lift(std::get<Embedding>(r).map)}}};
  }

  std::size_t record(const ExtractionState& state) {
    if (!trace_) return 0;
    trace_->states.push_back(state);
    return trace_->states.size() - 1;
  }

  const Config& cfg_;
  ExtractionTrace* trace_;
};

}  // namespace detail

/// Red C_k or blue H for the given colouring, or Exhausted with the stage and
/// size check that failed. Every returned witness passes check_witness.
inline ExtractionResult extract_witness(const ColoredComplete& coloring, const Config& cfg, const TargetGraph& h,
                                        ExtractionTrace* trace = nullptr) {
  cfg.validate();
  return detail::Extractor(cfg, trace).run(coloring, h, 0);
}

}  // namespace ramsey
