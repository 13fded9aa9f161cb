#ifndef BCC_CONFIGURATION_HPP
#define BCC_CONFIGURATION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bcc/errors.hpp"

namespace bcc {

/// Name-based description of a Brauer configuration, as it appears in a
/// configuration file. Building a BrauerConfig from it canonicalizes
/// everything (sorted names, sorted polygon members, canonical rotations).
struct ConfigInput {
  struct Vertex {
    std::string name;
    int multiplicity = 1;
  };
  struct Polygon {
    std::string name;
    std::vector<std::string> members;  // with repetition
  };
  struct Order {
    std::string vertex;
    std::vector<std::string> polygons;  // successor sequence, any rotation
  };

  std::vector<Vertex> vertices;
  std::vector<Polygon> polygons;
  std::vector<Order> orders;
};

/// A Brauer configuration: vertices with multiplicities, polygons (multisets
/// of vertices), and a successor sequence per vertex. Vertices and polygons
/// are indexed in sorted name order; successor sequences are stored in their
/// lexicographically minimal rotation, so equal configurations compare equal
/// regardless of how their cyclic orders were written down.
///
/// Construction tolerates mathematically invalid data (missing successor
/// sequences, undersized polygons, ...); `validate` reports such problems.
class BrauerConfig {
 public:
  BrauerConfig() = default;
  explicit BrauerConfig(const ConfigInput& input);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int polygon_count() const { return static_cast<int>(polygon_names_.size()); }

  const std::string& vertex_name(int v) const { return vertex_names_.at(v); }
  const std::string& polygon_name(int p) const { return polygon_names_.at(p); }

  /// Index lookups throw std::out_of_range on unknown names.
  int vertex_index(std::string_view name) const;
  int polygon_index(std::string_view name) const;

  int multiplicity(int v) const { return multiplicity_.at(v); }

  /// Polygon members as sorted vertex indices, with repetition.
  std::span<const int> polygon_members(int p) const;

  /// Successor sequence at a vertex as polygon indices (canonical rotation).
  /// Empty when the input provided none and the sequence is not forced.
  std::span<const int> successor_sequence(int v) const;

  int occ(int v, int p) const;
  int val(int v) const;

  /// Name-based variants of occ/val; throw std::out_of_range on unknown names.
  int occ(std::string_view vertex, std::string_view polygon) const;
  int val(std::string_view vertex) const;

  bool is_truncated(int v) const { return val(v) * multiplicity(v) == 1; }

  bool operator==(const BrauerConfig&) const = default;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<int> multiplicity_;
  std::vector<std::string> polygon_names_;
  std::vector<std::vector<int>> members_;      // per polygon, sorted
  std::vector<std::vector<int>> orientation_;  // per vertex, canonical rotation
  std::vector<std::vector<int>> occ_;          // [vertex][polygon]
  std::vector<int> valency_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> polygon_index_;
};

/// Parses the line-oriented configuration format:
///   vertex <name> [mult <k>]
///   polygon <name> : <vertex>+
///   order <vertex> : <polygon>+
/// '#' starts a comment, tokens are whitespace separated.
/// Throws ParseError on malformed input, duplicate names, or references to
/// undeclared vertices/polygons.
BrauerConfig parse_config(std::string_view text);

/// Canonical text form; parse_config(serialize(c)) == c for any config.
std::string serialize(const BrauerConfig& cfg);

struct Violation {
  std::string code;  // "C1" | "C2" | "C3" | "order"
  std::string message;
  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks C1 (no unused vertices), C2 (polygons have >= 2 members), C3
/// (every polygon has a vertex with val*mult > 1), and that successor
/// sequences exist where required and are consistent with occurrence counts.
ValidationReport validate(const BrauerConfig& cfg);

/// Partition of the vertex set by (valency, multiplicity):
///   truncated:    val*mult == 1  (no arrows)
///   loop_only:    val == 1, mult > 1  (a single loop in the quiver)
///   multi_cycle:  val > 1, mult > 1
///   simple_cycle: val > 1, mult == 1
struct VertexClassification {
  std::vector<int> truncated;
  std::vector<int> loop_only;
  std::vector<int> multi_cycle;
  std::vector<int> simple_cycle;
};

VertexClassification classify_vertices(const BrauerConfig& cfg);

/// True iff every polygon either contains no truncated vertex or is a 2-gon
/// with exactly one truncated vertex.
bool is_reduced(const BrauerConfig& cfg);

/// Connectivity of the bipartite incidence graph (vertices and polygons as
/// nodes, membership as edges).
bool is_connected(const BrauerConfig& cfg);

struct RandomConfigParams {
  int polygon_count = 4;
  int max_polygon_size = 4;
  int max_multiplicity = 2;
  std::uint64_t seed = 0;
  int valency_cap = 6;  // keeps generated configurations at desk scale
};

/// Deterministic (seeded) random configuration. The result always passes
/// validate, is_reduced, and is_connected; throws GenerationError (naming the
/// seed) if the bounded rejection budget is exhausted.
BrauerConfig generate_random(const RandomConfigParams& params);

struct RandomTreeParams {
  int edge_count = 3;
  int max_multiplicity = 2;
  std::uint64_t seed = 0;
};

/// Deterministic random Brauer tree: polygons are the edges of a random tree
/// (all 2-gons, acyclic connected incidence graph). Never the one-loop graph.
BrauerConfig generate_random_tree(const RandomTreeParams& params);

}  // namespace bcc

#endif
