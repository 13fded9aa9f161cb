#include "bcc/relations.hpp"

#include <sstream>
#include <stdexcept>

namespace bcc {

NormalForm normal_form(const Quiver& q, const Path& p) {
  NormalForm nf;
  if (p.empty()) {
    if (p.anchor < 0 || p.anchor >= q.vertex_count()) {
      throw std::invalid_argument("normal_form: empty path without a valid anchor");
    }
    nf.kind = NormalKind::idempotent;
    nf.vertex = p.anchor;
    return nf;
  }

  for (int id : p.arrows) {
    if (id < 0 || id >= static_cast<int>(q.arrows().size())) {
      throw std::invalid_argument("normal_form: arrow id out of range");
    }
  }
  const Arrow& head = q.arrow(p.arrows.front());
  const int owner = head.owner;
  const int t = q.config().val(owner);
  const int mult = q.config().multiplicity(owner);

  // A nonzero class must follow the owner's cycle from its first arrow; any
  // deviation or non-composable step is zero, and so is anything longer than
  // the full cycle power.
  if (p.length() > mult * t) {
    nf.kind = NormalKind::zero;
    return nf;
  }
  for (int k = 1; k < p.length(); ++k) {
    if (p.arrows[k] != q.arrow_at(owner, head.pos + k)) {
      nf.kind = NormalKind::zero;
      return nf;
    }
  }

  if (p.length() == mult * t) {
    nf.kind = NormalKind::socle;
    nf.polygon = head.source;
    return nf;
  }
  nf.kind = NormalKind::prefix;
  nf.path = p;
  return nf;
}

std::vector<TypeOneRelation> relations_type_one(const Quiver& q) {
  std::vector<TypeOneRelation> relations;
  const BrauerConfig& cfg = q.config();
  for (int polygon = 0; polygon < cfg.polygon_count(); ++polygon) {
    std::vector<SpecialCycle> at_base;
    for (int owner = 0; owner < cfg.vertex_count(); ++owner) {
      if (cfg.is_truncated(owner) || cfg.occ(owner, polygon) == 0) continue;
      for (const SpecialCycle& c : special_cycles_at(q, owner, polygon)) {
        at_base.push_back(c);
      }
    }
    for (std::size_t i = 0; i < at_base.size(); ++i) {
      for (std::size_t j = i + 1; j < at_base.size(); ++j) {
        relations.push_back({polygon, at_base[i], at_base[j]});
      }
    }
  }
  return relations;
}

std::vector<TypeTwoRelation> relations_type_two(const Quiver& q) {
  std::vector<TypeTwoRelation> relations;
  for (int owner = 0; owner < q.config().vertex_count(); ++owner) {
    if (q.config().is_truncated(owner)) continue;
    for (const SpecialCycle& c : special_cycles(q, owner)) {
      relations.push_back({c});
    }
  }
  return relations;
}

std::vector<TypeThreeRelation> relations_type_three(const Quiver& q) {
  std::vector<TypeThreeRelation> relations;
  for (const Arrow& a : q.arrows()) {
    const int successor = q.arrow_at(a.owner, a.pos + 1);
    for (const Arrow& b : q.arrows()) {
      if (b.source != a.target || b.id == successor) continue;
      relations.push_back({a.id, b.id});
    }
  }
  return relations;
}

std::string path_label(const Quiver& q, const Path& p) {
  if (p.empty()) return "e_" + q.config().polygon_name(p.anchor);
  std::string label;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k > 0) label += '*';
    label += q.arrow_label(p.arrows[k]);
  }
  return label;
}

std::string relations_listing(const Quiver& q) {
  std::ostringstream out;
  const BrauerConfig& cfg = q.config();
  for (const TypeOneRelation& r : relations_type_one(q)) {
    Path left = Path::of(cycle_path(q, r.left, cfg.multiplicity(r.left.owner)));
    Path right = Path::of(cycle_path(q, r.right, cfg.multiplicity(r.right.owner)));
    out << "type1: " << path_label(q, left) << " - " << path_label(q, right) << '\n';
  }
  for (const TypeTwoRelation& r : relations_type_two(q)) {
    std::vector<int> arrows = cycle_path(q, r.cycle, cfg.multiplicity(r.cycle.owner));
    arrows.push_back(first_arrow(q, r.cycle));
    out << "type2: " << path_label(q, Path::of(std::move(arrows))) << '\n';
  }
  for (const TypeThreeRelation& r : relations_type_three(q)) {
    out << "type3: " << q.arrow_label(r.first) << '*' << q.arrow_label(r.second) << '\n';
  }
  return out.str();
}

}  // namespace bcc
