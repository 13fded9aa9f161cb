#include "bcc/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bcc {

Quiver::Quiver(BrauerConfig cfg) : cfg_(std::move(cfg)) {
  ValidationReport report = validate(cfg_);
  if (!report.valid()) {
    throw std::invalid_argument("invalid configuration: " + report.violations.front().code +
                                ": " + report.violations.front().message);
  }

  cycle_arrows_.assign(cfg_.vertex_count(), {});
  for (int owner = 0; owner < cfg_.vertex_count(); ++owner) {
    if (cfg_.is_truncated(owner)) continue;
    auto seq = cfg_.successor_sequence(owner);
    const int t = static_cast<int>(seq.size());
    for (int pos = 0; pos < t; ++pos) {
      Arrow a;
      a.id = static_cast<int>(arrows_.size());
      a.owner = owner;
      a.pos = pos;
      a.source = seq[pos];
      a.target = seq[(pos + 1) % t];
      cycle_arrows_[owner].push_back(a.id);
      arrows_.push_back(a);
    }
  }
}

std::span<const int> Quiver::cycle_arrows(int owner) const {
  return cycle_arrows_.at(owner);
}

int Quiver::arrow_at(int owner, int pos) const {
  const auto& cycle = cycle_arrows_.at(owner);
  if (cycle.empty()) throw std::invalid_argument("truncated vertex has no arrows");
  const int t = static_cast<int>(cycle.size());
  return cycle[((pos % t) + t) % t];
}

int Quiver::count_loops() const {
  int loops = 0;
  for (const Arrow& a : arrows_) {
    if (a.source == a.target) ++loops;
  }
  return loops;
}

std::string Quiver::arrow_label(int arrow_id) const {
  const Arrow& a = arrow(arrow_id);
  return "a^(" + cfg_.vertex_name(a.owner) + ")_" + std::to_string(a.pos + 1);
}

std::vector<SpecialCycle> special_cycles(const Quiver& q, int owner) {
  if (q.config().is_truncated(owner)) {
    throw std::invalid_argument("special_cycles: vertex '" + q.config().vertex_name(owner) +
                                "' is truncated");
  }
  std::vector<SpecialCycle> cycles;
  const int t = static_cast<int>(q.cycle_arrows(owner).size());
  for (int start = 0; start < t; ++start) cycles.push_back({owner, start});
  return cycles;
}

std::vector<SpecialCycle> special_cycles_at(const Quiver& q, int owner, int polygon) {
  std::vector<SpecialCycle> cycles;
  for (const SpecialCycle& c : special_cycles(q, owner)) {
    if (cycle_base(q, c) == polygon) cycles.push_back(c);
  }
  return cycles;
}

int cycle_base(const Quiver& q, const SpecialCycle& c) {
  return q.arrow(first_arrow(q, c)).source;
}

int first_arrow(const Quiver& q, const SpecialCycle& c) {
  return q.arrow_at(c.owner, c.start);
}

std::vector<int> cycle_path(const Quiver& q, const SpecialCycle& c, int power) {
  const int t = static_cast<int>(q.cycle_arrows(c.owner).size());
  std::vector<int> path;
  path.reserve(static_cast<std::size_t>(t) * power);
  for (int lap = 0; lap < power; ++lap) {
    for (int k = 0; k < t; ++k) path.push_back(q.arrow_at(c.owner, c.start + k));
  }
  return path;
}

std::vector<std::pair<SpecialCycle, int>> first_arrow_map(const Quiver& q) {
  std::vector<std::pair<SpecialCycle, int>> map;
  std::set<int> hit;
  for (int owner = 0; owner < q.config().vertex_count(); ++owner) {
    if (q.config().is_truncated(owner)) continue;
    for (const SpecialCycle& c : special_cycles(q, owner)) {
      int a = first_arrow(q, c);
      if (!hit.insert(a).second) {
        throw std::logic_error("first_arrow_map: arrow hit twice");
      }
      map.emplace_back(c, a);
    }
  }
  if (hit.size() != q.arrows().size()) {
    throw std::logic_error("first_arrow_map: not surjective");
  }
  return map;
}

namespace {

// Positions of the owner's successor sequence that sit at `polygon`.
std::vector<int> visit_positions(const Quiver& q, int owner, int polygon) {
  auto seq = q.config().successor_sequence(owner);
  std::vector<int> visits;
  for (int pos = 0; pos < static_cast<int>(seq.size()); ++pos) {
    if (seq[pos] == polygon) visits.push_back(pos);
  }
  return visits;
}

}  // namespace

std::vector<NonSpecialCycle> non_special_cycles(const Quiver& q, int owner, int polygon) {
  const int occ = q.config().occ(owner, polygon);
  if (occ == 0) {
    throw std::invalid_argument("non_special_cycles: vertex '" +
                                q.config().vertex_name(owner) + "' does not occur in polygon '" +
                                q.config().polygon_name(polygon) + "'");
  }
  std::vector<NonSpecialCycle> runs;
  if (occ == 1) return runs;

  const int t = q.config().val(owner);
  std::vector<int> visits = visit_positions(q, owner, polygon);
  for (int l = 0; l < occ; ++l) {
    const int start = visits[l];
    const int len = (visits[(l + 1) % occ] - start + t) % t;
    NonSpecialCycle run{owner, polygon, l, {}};
    for (int k = 0; k < len; ++k) run.arrows.push_back(q.arrow_at(owner, start + k));
    runs.push_back(std::move(run));
  }
  return runs;
}

std::vector<MixedCycle> mixed_cycles(const Quiver& q) {
  std::vector<MixedCycle> result;
  const BrauerConfig& cfg = q.config();
  for (int owner = 0; owner < cfg.vertex_count(); ++owner) {
    if (cfg.val(owner) <= 1) continue;
    const int mult = cfg.multiplicity(owner);
    for (int polygon = 0; polygon < cfg.polygon_count(); ++polygon) {
      if (cfg.occ(owner, polygon) <= 1) continue;
      auto runs = non_special_cycles(q, owner, polygon);
      const int occ = static_cast<int>(runs.size());
      for (int s = 0; s < occ; ++s) {
        if (runs[s].arrows.size() != 1) continue;
        if (!q.is_loop(runs[s].arrows.front())) continue;
        MixedCycle mc{owner, polygon, s, {}};
        if (mult > 1) {
          std::vector<int> visits = visit_positions(q, owner, polygon);
          SpecialCycle shifted{owner, visits[(s + 1) % occ]};
          mc.path = cycle_path(q, shifted, mult - 1);
        }
        for (int r = 1; r < occ; ++r) {
          const auto& run = runs[(s + r) % occ].arrows;
          mc.path.insert(mc.path.end(), run.begin(), run.end());
        }
        result.push_back(std::move(mc));
      }
    }
  }
  return result;
}

std::string to_dot(const Quiver& q) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (int p = 0; p < q.config().polygon_count(); ++p) {
    out << "  \"" << q.config().polygon_name(p) << "\";\n";
  }
  for (const Arrow& a : q.arrows()) {
    out << "  \"" << q.config().polygon_name(a.source) << "\" -> \""
        << q.config().polygon_name(a.target) << "\" [label=\"" << q.arrow_label(a.id)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bcc
