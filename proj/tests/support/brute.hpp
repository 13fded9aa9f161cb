#ifndef BCC_TESTS_SUPPORT_BRUTE_HPP
#define BCC_TESTS_SUPPORT_BRUTE_HPP

// Brute-force oracles. These recompute algebra facts straight from the
// relation definitions (pair scans and window scans over concrete arrow
// sequences) so they stay independent of the prefix-based normal form used
// by the production code.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "bcc/quiver.hpp"

namespace bcc::testsupport {

// Consecutive arrow pairs occurring in some special cycle, read off two laps
// of each cycle so the wrap-around pair is included.
inline std::set<std::pair<int, int>> allowed_pairs(const Quiver& q) {
  std::set<std::pair<int, int>> pairs;
  for (int owner = 0; owner < q.config().vertex_count(); ++owner) {
    if (q.config().is_truncated(owner)) continue;
    for (const SpecialCycle& c : special_cycles(q, owner)) {
      std::vector<int> lap2 = cycle_path(q, c, 2);
      for (std::size_t k = 0; k + 1 < lap2.size(); ++k) {
        pairs.emplace(lap2[k], lap2[k + 1]);
      }
    }
  }
  return pairs;
}

// Full powers followed by the first arrow, one per special cycle.
inline std::vector<std::vector<int>> overflow_words(const Quiver& q) {
  std::vector<std::vector<int>> words;
  for (int owner = 0; owner < q.config().vertex_count(); ++owner) {
    if (q.config().is_truncated(owner)) continue;
    const int mult = q.config().multiplicity(owner);
    for (const SpecialCycle& c : special_cycles(q, owner)) {
      std::vector<int> word = cycle_path(q, c, mult);
      word.push_back(first_arrow(q, c));
      words.push_back(std::move(word));
    }
  }
  return words;
}

// Zero test by scanning the relations: a forbidden pair anywhere, or an
// overflow word as a contiguous window.
inline bool brute_zero(const Quiver& q, const std::vector<int>& path,
                       const std::set<std::pair<int, int>>& pairs,
                       const std::vector<std::vector<int>>& overflow) {
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (q.arrow(path[k]).target != q.arrow(path[k + 1]).source) return true;
    if (!pairs.count({path[k], path[k + 1]})) return true;
  }
  for (const auto& word : overflow) {
    if (word.size() > path.size()) continue;
    for (std::size_t start = 0; start + word.size() <= path.size(); ++start) {
      if (std::equal(word.begin(), word.end(), path.begin() + start)) return true;
    }
  }
  return false;
}

// All nonzero nonempty paths, by depth-first extension with zero pruning.
inline std::vector<std::vector<int>> brute_nonzero_paths(const Quiver& q) {
  auto pairs = allowed_pairs(q);
  auto overflow = overflow_words(q);
  std::vector<std::vector<int>> result;
  std::vector<std::vector<int>> stack;
  for (const Arrow& a : q.arrows()) stack.push_back({a.id});
  while (!stack.empty()) {
    std::vector<int> path = std::move(stack.back());
    stack.pop_back();
    if (brute_zero(q, path, pairs, overflow)) continue;
    result.push_back(path);
    const int tail = q.arrow(path.back()).target;
    for (const Arrow& b : q.arrows()) {
      if (b.source != tail) continue;
      std::vector<int> longer = path;
      longer.push_back(b.id);
      stack.push_back(std::move(longer));
    }
  }
  return result;
}

// A nonzero path is maximal when every extension dies; the quotient
// identifies all maximal paths based at the same vertex.
inline bool brute_maximal(const Quiver& q, const std::vector<int>& path,
                          const std::set<std::pair<int, int>>& pairs,
                          const std::vector<std::vector<int>>& overflow) {
  const int tail = q.arrow(path.back()).target;
  for (const Arrow& b : q.arrows()) {
    if (b.source != tail) continue;
    std::vector<int> longer = path;
    longer.push_back(b.id);
    if (!brute_zero(q, longer, pairs, overflow)) return false;
  }
  return true;
}

struct BruteDims {
  long long total = 0;
  std::vector<long long> per_vertex;  // dim of vAv per quiver vertex
};

inline BruteDims brute_dims(const Quiver& q) {
  auto pairs = allowed_pairs(q);
  auto overflow = overflow_words(q);

  BruteDims dims;
  dims.per_vertex.assign(q.vertex_count(), 1);  // the idempotents
  dims.total = q.vertex_count();

  std::vector<bool> socle_seen(q.vertex_count(), false);
  for (const auto& path : brute_nonzero_paths(q)) {
    const int source = q.arrow(path.front()).source;
    const int target = q.arrow(path.back()).target;
    if (brute_maximal(q, path, pairs, overflow)) {
      if (source != target) continue;  // cannot happen; kept for safety
      if (!socle_seen[source]) {
        socle_seen[source] = true;
        dims.total += 1;
        dims.per_vertex[source] += 1;
      }
    } else {
      dims.total += 1;
      if (source == target) dims.per_vertex[source] += 1;
    }
  }
  return dims;
}

}  // namespace bcc::testsupport

#endif
