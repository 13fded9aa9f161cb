#include <algorithm>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "bcc/configuration.hpp"

namespace bcc {

namespace {

// Explicit bounded draw and shuffle so outputs do not depend on the standard
// library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % n;
}

int uniform_range(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

template <typename T>
void shuffle_values(std::mt19937_64& rng, std::vector<T>& values) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[uniform_below(rng, i)]);
  }
}

std::string padded_name(const char* prefix, int index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%s%03d", prefix, index);
  return buf;
}

// Occurrence slots of each vertex, shuffled into a successor sequence.
void attach_random_orders(ConfigInput& input, const std::vector<std::vector<int>>& slots,
                          const std::vector<std::string>& vertex_names,
                          const std::vector<std::string>& polygon_names,
                          std::mt19937_64& rng) {
  for (std::size_t v = 0; v < slots.size(); ++v) {
    if (slots[v].size() < 2) continue;
    std::vector<int> seq = slots[v];
    shuffle_values(rng, seq);
    ConfigInput::Order order;
    order.vertex = vertex_names[v];
    for (int p : seq) order.polygons.push_back(polygon_names[p]);
    input.orders.push_back(std::move(order));
  }
}

struct Draft {
  int pool_size = 0;
  std::vector<std::vector<int>> polygons;  // vertex ids per polygon
  std::vector<int> multiplicity;           // per pool vertex
  std::vector<int> valency;                // per pool vertex
};

bool draft_round(const RandomConfigParams& params, std::mt19937_64& rng, Draft& draft) {
  const int pool_max = std::max(2, params.polygon_count * 2);
  draft.pool_size = uniform_range(rng, 1, pool_max);
  draft.valency.assign(draft.pool_size, 0);
  draft.polygons.assign(params.polygon_count, {});

  for (int p = 0; p < params.polygon_count; ++p) {
    const int size = uniform_range(rng, 2, params.max_polygon_size);
    for (int slot = 0; slot < size; ++slot) {
      std::vector<int> candidates;
      for (int v = 0; v < draft.pool_size; ++v) {
        if (draft.valency[v] >= params.valency_cap) continue;
        // The first member of every later polygon reuses a seen vertex, which
        // keeps the incidence graph connected.
        if (p > 0 && slot == 0 && draft.valency[v] == 0) continue;
        candidates.push_back(v);
      }
      if (candidates.empty()) return false;
      int v = candidates[uniform_below(rng, candidates.size())];
      draft.polygons[p].push_back(v);
      ++draft.valency[v];
    }
  }

  draft.multiplicity.assign(draft.pool_size, 1);
  for (int v = 0; v < draft.pool_size; ++v) {
    if (draft.valency[v] > 0) {
      draft.multiplicity[v] = uniform_range(rng, 1, params.max_multiplicity);
    }
  }

  // Repair truncated vertices that would violate reducedness or C3: raising
  // the multiplicity moves a vertex out of the truncated class.
  auto truncated = [&](int v) {
    return draft.valency[v] == 1 && draft.multiplicity[v] == 1;
  };
  for (int p = 0; p < params.polygon_count; ++p) {
    auto& members = draft.polygons[p];
    std::vector<int> trunc;
    for (int v : members) {
      if (truncated(v)) trunc.push_back(v);
    }
    if (trunc.empty()) continue;
    // A 2-gon may keep exactly one truncated vertex; everything else is
    // repaired by raising multiplicities.
    std::size_t start = members.size() == 2 ? 1 : 0;
    for (std::size_t i = start; i < trunc.size(); ++i) {
      if (params.max_multiplicity < 2) return false;
      draft.multiplicity[trunc[i]] = 2;
    }
  }

  // C3: after repair, a polygon of only truncated vertices can remain when
  // max_multiplicity == 1.
  for (int p = 0; p < params.polygon_count; ++p) {
    bool ok = false;
    for (int v : draft.polygons[p]) {
      if (draft.valency[v] * draft.multiplicity[v] > 1) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

BrauerConfig generate_random(const RandomConfigParams& params) {
  if (params.polygon_count < 1) throw std::invalid_argument("polygon_count must be >= 1");
  if (params.max_polygon_size < 2) throw std::invalid_argument("max_polygon_size must be >= 2");
  if (params.max_multiplicity < 1) throw std::invalid_argument("max_multiplicity must be >= 1");

  std::mt19937_64 rng(params.seed);
  constexpr int kMaxRounds = 64;

  for (int round = 0; round < kMaxRounds; ++round) {
    Draft draft;
    if (!draft_round(params, rng, draft)) continue;

    // Used pool vertices become the vertex set.
    std::vector<int> pool_to_vertex(draft.pool_size, -1);
    ConfigInput input;
    for (int v = 0; v < draft.pool_size; ++v) {
      if (draft.valency[v] == 0) continue;
      pool_to_vertex[v] = static_cast<int>(input.vertices.size());
      input.vertices.push_back({padded_name("x", v), draft.multiplicity[v]});
    }
    std::vector<std::string> polygon_names;
    for (int p = 0; p < params.polygon_count; ++p) {
      ConfigInput::Polygon poly;
      poly.name = padded_name("P", p);
      for (int v : draft.polygons[p]) poly.members.push_back(padded_name("x", v));
      polygon_names.push_back(poly.name);
      input.polygons.push_back(std::move(poly));
    }

    std::vector<std::string> vertex_names;
    std::vector<std::vector<int>> slots(input.vertices.size());
    for (const auto& v : input.vertices) vertex_names.push_back(v.name);
    for (int p = 0; p < params.polygon_count; ++p) {
      for (int v : draft.polygons[p]) slots[pool_to_vertex[v]].push_back(p);
    }
    attach_random_orders(input, slots, vertex_names, polygon_names, rng);

    BrauerConfig cfg(input);
    if (!validate(cfg).valid() || !is_reduced(cfg) || !is_connected(cfg)) continue;
    return cfg;
  }
  throw GenerationError("random configuration generation exhausted " +
                        std::to_string(kMaxRounds) + " rounds (seed " +
                        std::to_string(params.seed) + ")");
}

BrauerConfig generate_random_tree(const RandomTreeParams& params) {
  if (params.edge_count < 1) throw std::invalid_argument("edge_count must be >= 1");
  if (params.max_multiplicity < 1) throw std::invalid_argument("max_multiplicity must be >= 1");

  std::mt19937_64 rng(params.seed);
  const int nodes = params.edge_count + 1;

  std::vector<std::pair<int, int>> edges;
  for (int node = 1; node < nodes; ++node) {
    edges.emplace_back(static_cast<int>(uniform_below(rng, node)), node);
  }

  std::vector<int> valency(nodes, 0);
  for (auto [a, b] : edges) {
    ++valency[a];
    ++valency[b];
  }
  std::vector<int> mult(nodes, 1);
  for (int v = 0; v < nodes; ++v) {
    mult[v] = uniform_range(rng, 1, params.max_multiplicity);
  }
  if (params.edge_count == 1 && valency[0] * mult[0] == 1 && valency[1] * mult[1] == 1) {
    if (params.max_multiplicity < 2) {
      throw GenerationError("a single-edge tree needs max_multiplicity >= 2 (seed " +
                            std::to_string(params.seed) + ")");
    }
    mult[uniform_below(rng, 2)] = 2;
  }

  ConfigInput input;
  std::vector<std::string> vertex_names;
  for (int v = 0; v < nodes; ++v) {
    vertex_names.push_back(padded_name("x", v));
    input.vertices.push_back({vertex_names[v], mult[v]});
  }
  std::vector<std::string> polygon_names;
  std::vector<std::vector<int>> slots(nodes);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    ConfigInput::Polygon poly;
    poly.name = padded_name("T", static_cast<int>(e));
    poly.members = {vertex_names[edges[e].first], vertex_names[edges[e].second]};
    polygon_names.push_back(poly.name);
    input.polygons.push_back(std::move(poly));
    slots[edges[e].first].push_back(static_cast<int>(e));
    slots[edges[e].second].push_back(static_cast<int>(e));
  }
  attach_random_orders(input, slots, vertex_names, polygon_names, rng);

  BrauerConfig cfg(input);
  ValidationReport report = validate(cfg);
  if (!report.valid() || !is_reduced(cfg)) {
    throw GenerationError("random tree generation produced an invalid configuration (seed " +
                          std::to_string(params.seed) + ")");
  }
  return cfg;
}

}  // namespace bcc
