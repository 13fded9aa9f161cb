#ifndef BCC_RELATIONS_HPP
#define BCC_RELATIONS_HPP

#include <string>
#include <vector>

#include "bcc/quiver.hpp"

namespace bcc {

/// A path in the quiver: a sequence of arrow ids, or an empty path anchored
/// at a quiver vertex.
struct Path {
  std::vector<int> arrows;
  int anchor = -1;

  static Path at_vertex(int quiver_vertex) { return Path{{}, quiver_vertex}; }
  static Path of(std::vector<int> arrow_ids) { return Path{std::move(arrow_ids), -1}; }

  int length() const { return static_cast<int>(arrows.size()); }
  bool empty() const { return arrows.empty(); }
};

enum class NormalKind { idempotent, prefix, socle, zero };

/// Normal form of a path class in the quotient algebra. Exactly one of the
/// payload fields is meaningful: `vertex` for idempotents, `path` for proper
/// prefixes of a cycle power, `polygon` for socle classes.
struct NormalForm {
  NormalKind kind = NormalKind::zero;
  int vertex = -1;
  Path path;
  int polygon = -1;
};

/// Reduces a path modulo the relations. The class of a nonempty path is
/// nonzero exactly when the path follows the arrow cycle of its first
/// arrow's owner for at most mult*val steps; the full power is the socle
/// class of the start polygon and anything else collapses to zero
/// (including non-composable sequences, which are zero in the path algebra).
NormalForm normal_form(const Quiver& q, const Path& p);

/// Pair of cycle powers based at the same polygon that the quotient
/// identifies: left^mult(left.owner) - right^mult(right.owner).
struct TypeOneRelation {
  int polygon;
  SpecialCycle left;
  SpecialCycle right;
};

/// Cycle power followed by the cycle's first arrow.
struct TypeTwoRelation {
  SpecialCycle cycle;
};

/// Composable arrow pair that is consecutive in no special cycle.
struct TypeThreeRelation {
  int first;
  int second;
};

std::vector<TypeOneRelation> relations_type_one(const Quiver& q);
std::vector<TypeTwoRelation> relations_type_two(const Quiver& q);
std::vector<TypeThreeRelation> relations_type_three(const Quiver& q);

/// Arrow labels joined with '*'; empty paths print as "e_<polygon>".
std::string path_label(const Quiver& q, const Path& p);

/// Text listing of all relations, one per line, deterministic order:
///   type1: <path> - <path>
///   type2: <path>
///   type3: <a>*<b>
std::string relations_listing(const Quiver& q);

}  // namespace bcc

#endif
