#ifndef BCC_QUIVER_HPP
#define BCC_QUIVER_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bcc/configuration.hpp"

namespace bcc {

/// A quiver arrow. `owner` is the configuration vertex whose successor
/// sequence induces it and `pos` its 0-based position in that sequence:
/// the arrow runs from the polygon at `pos` to the polygon at `pos+1`
/// (cyclically). Source and target are polygon indices, which double as
/// quiver vertex indices.
struct Arrow {
  int id;
  int owner;
  int pos;
  int source;
  int target;
};

/// The quiver induced by a Brauer configuration: one vertex per polygon and,
/// for every non-truncated configuration vertex, one arrow per step of its
/// successor sequence. The constructor requires a valid configuration and
/// throws std::invalid_argument otherwise. The configuration is stored by
/// value, so a Quiver is self-contained.
class Quiver {
 public:
  explicit Quiver(BrauerConfig cfg);

  const BrauerConfig& config() const { return cfg_; }

  int vertex_count() const { return cfg_.polygon_count(); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int id) const { return arrows_.at(id); }

  /// Arrow ids of the cycle induced by `owner`, in successor order.
  /// Empty for truncated vertices.
  std::span<const int> cycle_arrows(int owner) const;

  /// Arrow id at a position of an owner's cycle (position taken mod valency).
  int arrow_at(int owner, int pos) const;

  bool is_loop(int arrow_id) const {
    const Arrow& a = arrow(arrow_id);
    return a.source == a.target;
  }

  int count_loops() const;

  /// "a^(<owner>)_<i>" with i 1-based, matching the canonical rotation.
  std::string arrow_label(int arrow_id) const;

 private:
  BrauerConfig cfg_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> cycle_arrows_;  // per config vertex
};

/// A special cycle: the rotation of `owner`'s arrow cycle starting at
/// position `start`. Its length is val(owner) and its base point is the
/// polygon at `start` in the successor sequence.
struct SpecialCycle {
  int owner;
  int start;
  bool operator==(const SpecialCycle&) const = default;
};

/// All val(owner) special cycles of a non-truncated vertex, by start
/// position. Throws std::invalid_argument for truncated vertices.
std::vector<SpecialCycle> special_cycles(const Quiver& q, int owner);

/// The special cycles of `owner` based at the given polygon; there are
/// exactly occ(owner, polygon) of them.
std::vector<SpecialCycle> special_cycles_at(const Quiver& q, int owner, int polygon);

/// The quiver vertex (= polygon) a cycle is based at.
int cycle_base(const Quiver& q, const SpecialCycle& c);

int first_arrow(const Quiver& q, const SpecialCycle& c);

/// Arrow ids of `power` consecutive laps of the cycle.
std::vector<int> cycle_path(const Quiver& q, const SpecialCycle& c, int power = 1);

/// The cycle -> first-arrow correspondence over all special cycles of all
/// owners. Throws std::logic_error if it fails to be a bijection onto the
/// arrow set (an internal defect, not an input error).
std::vector<std::pair<SpecialCycle, int>> first_arrow_map(const Quiver& q);

/// Run of the owner's cycle between consecutive visits to a polygon.
/// `index` counts visits (0-based) in canonical order.
struct NonSpecialCycle {
  int owner;
  int polygon;
  int index;
  std::vector<int> arrows;
};

/// The non-special cycles of `owner` at `polygon`: empty when
/// occ(owner, polygon) == 1, otherwise one run per visit. Throws
/// std::invalid_argument when the vertex does not occur in the polygon.
std::vector<NonSpecialCycle> non_special_cycles(const Quiver& q, int owner, int polygon);

/// A central mixed cycle: attached to a loop run q_s at a polygon visited
/// more than once, it is the complementary walk around the owner's cycle,
/// preceded by mult(owner)-1 full laps when mult(owner) > 1. Equivalently:
/// the longest proper prefix of the (s+1)-shifted cycle power.
struct MixedCycle {
  int owner;
  int polygon;
  int loop_index;  // the s with q_s a loop
  std::vector<int> path;
};

std::vector<MixedCycle> mixed_cycles(const Quiver& q);

/// Deterministic DOT digraph; nodes are polygon names, edge labels are
/// arrow labels.
std::string to_dot(const Quiver& q);

}  // namespace bcc

#endif
