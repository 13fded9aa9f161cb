#include "bcc/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace bcc {

std::vector<BasisElement> enumerate_basis(const Quiver& q) {
  const BrauerConfig& cfg = q.config();
  std::vector<BasisElement> basis;

  for (int p = 0; p < cfg.polygon_count(); ++p) {
    BasisElement e;
    e.kind = BasisElement::Kind::idempotent;
    e.polygon = p;
    e.source = p;
    e.target = p;
    e.label = "e_" + cfg.polygon_name(p);
    basis.push_back(std::move(e));
  }

  for (int owner = 0; owner < cfg.vertex_count(); ++owner) {
    if (cfg.is_truncated(owner)) continue;
    const int t = cfg.val(owner);
    const int mult = cfg.multiplicity(owner);
    for (int start = 0; start < t; ++start) {
      for (int len = 1; len < mult * t; ++len) {
        BasisElement e;
        e.kind = BasisElement::Kind::prefix;
        e.first_arrow = q.arrow_at(owner, start);
        e.length = len;
        e.path.arrows.reserve(len);
        for (int k = 0; k < len; ++k) e.path.arrows.push_back(q.arrow_at(owner, start + k));
        e.source = q.arrow(e.path.arrows.front()).source;
        e.target = q.arrow(e.path.arrows.back()).target;
        e.label = path_label(q, e.path);
        basis.push_back(std::move(e));
      }
    }
  }

  for (int p = 0; p < cfg.polygon_count(); ++p) {
    BasisElement e;
    e.kind = BasisElement::Kind::socle;
    e.polygon = p;
    e.source = p;
    e.target = p;
    e.label = "C^(" + cfg.polygon_name(p) + ")";
    basis.push_back(std::move(e));
  }

  return basis;
}

AlgebraTable::AlgebraTable(Quiver q) : quiver_(std::move(q)) {
  basis_ = enumerate_basis(quiver_);
  const int n = dim();
  const BrauerConfig& cfg = quiver_.config();

  idem_index_.assign(cfg.polygon_count(), -1);
  socle_index_.assign(cfg.polygon_count(), -1);
  prefix_index_.assign(quiver_.arrows().size(), {});
  for (std::size_t a = 0; a < quiver_.arrows().size(); ++a) {
    const int owner = quiver_.arrow(static_cast<int>(a)).owner;
    prefix_index_[a].assign(cfg.multiplicity(owner) * cfg.val(owner), -1);
  }
  for (int i = 0; i < n; ++i) {
    const BasisElement& e = basis_[i];
    switch (e.kind) {
      case BasisElement::Kind::idempotent:
        idem_index_[e.polygon] = i;
        break;
      case BasisElement::Kind::socle:
        socle_index_[e.polygon] = i;
        break;
      case BasisElement::Kind::prefix:
        prefix_index_[e.first_arrow][e.length - 1] = i;
        break;
    }
  }

  table_.assign(static_cast<std::size_t>(n) * n, -1);
  auto entry = [&](int i, int j) -> std::int32_t& {
    return table_[static_cast<std::size_t>(i) * n + j];
  };

  for (int i = 0; i < n; ++i) {
    const BasisElement& x = basis_[i];
    for (int j = 0; j < n; ++j) {
      const BasisElement& y = basis_[j];
      using Kind = BasisElement::Kind;

      if (x.kind == Kind::idempotent) {
        if (y.source == x.polygon) entry(i, j) = j;
        continue;
      }
      if (y.kind == Kind::idempotent) {
        if (x.target == y.polygon) entry(i, j) = i;
        continue;
      }
      if (x.kind == Kind::socle || y.kind == Kind::socle) continue;

      // Two prefixes compose iff the second continues the first along the
      // same cycle; the full power lands in the socle.
      const Arrow& head = quiver_.arrow(x.first_arrow);
      const int expected = quiver_.arrow_at(head.owner, head.pos + x.length);
      if (y.first_arrow != expected) continue;
      const int total = x.length + y.length;
      const int full = cfg.multiplicity(head.owner) * cfg.val(head.owner);
      if (total > full) continue;
      entry(i, j) = total == full ? socle_index_[head.source]
                                  : prefix_index_[x.first_arrow][total - 1];
    }
  }
}

int AlgebraTable::prefix_index(int first_arrow, int length) const {
  if (first_arrow < 0 || first_arrow >= static_cast<int>(prefix_index_.size())) return -1;
  const auto& per_len = prefix_index_[first_arrow];
  if (length < 1 || length > static_cast<int>(per_len.size())) return -1;
  return per_len[length - 1];
}

int AlgebraTable::path_index(const Path& p) const {
  NormalForm nf = normal_form(quiver_, p);
  switch (nf.kind) {
    case NormalKind::idempotent:
      return idem_index_[nf.vertex];
    case NormalKind::socle:
      return socle_index_[nf.polygon];
    case NormalKind::prefix:
      return prefix_index(nf.path.arrows.front(), nf.path.length());
    case NormalKind::zero:
      return -1;
  }
  return -1;
}

void Element::add(int index, const mpq_class& c) {
  auto [it, inserted] = coeffs_.emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  } else if (it->second == 0) {
    coeffs_.erase(it);
  }
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [index, c] : other.coeffs_) add(index, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [index, c] : other.coeffs_) add(index, -c);
  return *this;
}

Element Element::operator+(const Element& other) const {
  Element result = *this;
  result += other;
  return result;
}

Element Element::operator-(const Element& other) const {
  Element result = *this;
  result -= other;
  return result;
}

Element Element::scaled(const mpq_class& c) const {
  Element result;
  if (c == 0) return result;
  for (const auto& [index, coeff] : coeffs_) result.coeffs_[index] = coeff * c;
  return result;
}

Element multiply(const AlgebraTable& table, const Element& x, const Element& y) {
  Element result;
  for (const auto& [i, ci] : x.coeffs()) {
    for (const auto& [j, cj] : y.coeffs()) {
      const int k = table.product(i, j);
      if (k >= 0) result.add(k, ci * cj);
    }
  }
  return result;
}

Element element_power(const AlgebraTable& table, const Element& x, int exponent) {
  if (exponent < 0) throw std::invalid_argument("element_power: negative exponent");
  if (exponent == 0) return element_identity(table);
  Element result = x;
  for (int k = 1; k < exponent; ++k) result = multiply(table, result, x);
  return result;
}

Element element_identity(const AlgebraTable& table) {
  Element one;
  for (int p = 0; p < table.config().polygon_count(); ++p) {
    one.add(table.idempotent_index(p), 1);
  }
  return one;
}

Element element_C_alpha(const AlgebraTable& table, int owner) {
  const Quiver& q = table.quiver();
  if (q.config().is_truncated(owner)) {
    throw std::invalid_argument("element_C_alpha: vertex '" +
                                q.config().vertex_name(owner) + "' is truncated");
  }
  Element sum;
  for (const SpecialCycle& c : special_cycles(q, owner)) {
    const int index = table.path_index(Path::of(cycle_path(q, c)));
    if (index >= 0) sum.add(index, 1);
  }
  return sum;
}

std::string element_to_string(const AlgebraTable& table, const Element& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [index, c] : x.coeffs()) {
    if (!first) out << " + ";
    first = false;
    if (c != 1) out << c.get_str() << '*';
    out << table.label(index);
  }
  return out.str();
}

long long dim_vv_formula(const BrauerConfig& cfg, int polygon) {
  long long dim = 2;
  auto members = cfg.polygon_members(polygon);
  int previous = -1;
  for (int v : members) {
    if (v == previous) continue;  // members are sorted; count each vertex once
    previous = v;
    const long long occ = cfg.occ(v, polygon);
    dim += occ * (occ * cfg.multiplicity(v) - 1);
  }
  return dim;
}

int dim_vv_enumerated(const AlgebraTable& table, int quiver_vertex) {
  int count = 0;
  for (const BasisElement& e : table.elements()) {
    if (e.source == quiver_vertex && e.target == quiver_vertex) ++count;
  }
  return count;
}

bool radical_square_nonzero(const AlgebraTable& table) {
  for (int i = 0; i < table.dim(); ++i) {
    if (table.element(i).kind == BasisElement::Kind::idempotent) continue;
    for (int j = 0; j < table.dim(); ++j) {
      if (table.element(j).kind == BasisElement::Kind::idempotent) continue;
      if (table.product(i, j) >= 0) return true;
    }
  }
  return false;
}

std::string table_dump(const AlgebraTable& table) {
  std::ostringstream out;
  for (int i = 0; i < table.dim(); ++i) {
    for (int j = 0; j < table.dim(); ++j) {
      const int k = table.product(i, j);
      out << table.label(i) << " * " << table.label(j) << " = "
          << (k >= 0 ? table.label(k) : "0") << '\n';
    }
  }
  return out.str();
}

bool IdentityReport::all_pass() const {
  for (const IdentityCheck& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

int IdentityReport::failures() const {
  int count = 0;
  for (const IdentityCheck& c : checks) {
    if (!c.pass) ++count;
  }
  return count;
}

std::string IdentityReport::summary() const {
  std::ostringstream out;
  out << (checks.size() - failures()) << "/" << checks.size() << " identity checks passed";
  for (const IdentityCheck& c : checks) {
    if (!c.pass) out << "\nFAIL " << c.id << " " << c.instance;
  }
  return out.str();
}

namespace {

Element path_element(const AlgebraTable& table, const std::vector<int>& arrows) {
  const int index = table.path_index(Path::of(arrows));
  Element e;
  if (index >= 0) e.add(index, 1);
  return e;
}

void check_nonspecial_families(const AlgebraTable& table, IdentityReport& report) {
  const Quiver& q = table.quiver();
  const BrauerConfig& cfg = q.config();
  for (int owner = 0; owner < cfg.vertex_count(); ++owner) {
    if (cfg.val(owner) <= 1) continue;
    for (int polygon = 0; polygon < cfg.polygon_count(); ++polygon) {
      if (cfg.occ(owner, polygon) <= 1) continue;
      auto runs = non_special_cycles(q, owner, polygon);
      auto cycles = special_cycles_at(q, owner, polygon);
      const int occ = static_cast<int>(runs.size());
      const std::string where =
          "owner=" + cfg.vertex_name(owner) + " polygon=" + cfg.polygon_name(polygon);

      // Runs concatenate back to the cycle rotation they start at.
      for (int j = 0; j < occ; ++j) {
        std::vector<int> concat;
        for (int r = 0; r < occ; ++r) {
          const auto& run = runs[(j + r) % occ].arrows;
          concat.insert(concat.end(), run.begin(), run.end());
        }
        report.checks.push_back({"nonspecial_compose", where + " j=" + std::to_string(j),
                                 concat == cycle_path(q, cycles[j])});
      }

      // Cycle powers slide across a run: C_j^l q_j == q_j C_{j+1}^l.
      const int mult = cfg.multiplicity(owner);
      for (int j = 0; j < occ; ++j) {
        Element run_j = path_element(table, runs[j].arrows);
        for (int l = 0; l <= mult; ++l) {
          Element cj = element_power(table, path_element(table, cycle_path(q, cycles[j])), l);
          Element cj1 = element_power(
              table, path_element(table, cycle_path(q, cycles[(j + 1) % occ])), l);
          Element lhs = multiply(table, cj, run_j);
          Element rhs = multiply(table, run_j, cj1);
          report.checks.push_back({"power_slide",
                                   where + " j=" + std::to_string(j) + " l=" + std::to_string(l),
                                   lhs == rhs});
        }
      }
    }
  }
}

void check_cycle_products(const AlgebraTable& table, IdentityReport& report) {
  const Quiver& q = table.quiver();
  const BrauerConfig& cfg = q.config();
  for (int owner = 0; owner < cfg.vertex_count(); ++owner) {
    if (cfg.is_truncated(owner)) continue;
    const int mult = cfg.multiplicity(owner);
    const std::string who = "owner=" + cfg.vertex_name(owner);
    auto cycles = special_cycles(q, owner);

    if (cfg.val(owner) > 1) {
      for (std::size_t i = 0; i < cycles.size(); ++i) {
        Element ci = path_element(table, cycle_path(q, cycles[i]));
        for (std::size_t j = 0; j < cycles.size(); ++j) {
          if (i == j) continue;
          Element cj = path_element(table, cycle_path(q, cycles[j]));
          const bool zero = multiply(table, ci, cj).is_zero();
          report.checks.push_back({"distinct_cycles_annihilate",
                                   who + " i=" + std::to_string(i) + " j=" + std::to_string(j),
                                   zero});
        }
        if (mult == 1) {
          report.checks.push_back({"cycle_square_zero", who + " i=" + std::to_string(i),
                                   multiply(table, ci, ci).is_zero()});
        }
      }
    }

    // C(a)^mult == sum over polygons of occ * socle.
    Element calpha = element_C_alpha(table, owner);
    Element lhs = element_power(table, calpha, mult);
    Element rhs;
    for (int polygon = 0; polygon < cfg.polygon_count(); ++polygon) {
      const int occ = cfg.occ(owner, polygon);
      if (occ > 0) rhs.add(table.socle_index(polygon), occ);
    }
    report.checks.push_back({"cycle_sum_power_socle", who, lhs == rhs});

    // Every cycle power beyond the multiplicity vanishes.
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      Element ci = path_element(table, cycle_path(q, cycles[i]));
      report.checks.push_back({"cycle_power_overflow", who + " i=" + std::to_string(i),
                               element_power(table, ci, mult + 1).is_zero()});
    }

    // C(a)^j expands as the sum of individual cycle powers.
    for (int j = 1; j <= mult + 1; ++j) {
      Element sum;
      for (const SpecialCycle& c : cycles) {
        sum += element_power(table, path_element(table, cycle_path(q, c)), j);
      }
      report.checks.push_back({"sum_power_expansion", who + " j=" + std::to_string(j),
                               element_power(table, calpha, j) == sum});
    }
  }
}

void check_arrow_cycle_pairs(const AlgebraTable& table, IdentityReport& report) {
  const Quiver& q = table.quiver();
  const BrauerConfig& cfg = q.config();

  std::vector<std::pair<int, Element>> all_cycles;  // (owner, class of the plain cycle)
  for (int owner = 0; owner < cfg.vertex_count(); ++owner) {
    if (cfg.is_truncated(owner)) continue;
    for (const SpecialCycle& c : special_cycles(q, owner)) {
      all_cycles.emplace_back(owner, path_element(table, cycle_path(q, c)));
    }
  }

  for (const Arrow& a : q.arrows()) {
    const int owner = a.owner;
    const std::string who = "arrow=" + q.arrow_label(a.id);
    Element arrow_class = path_element(table, {a.id});
    const int mult = cfg.multiplicity(owner);

    if (mult == 1 && cfg.val(owner) > 1) {
      bool all_zero = true;
      for (const auto& [other, cycle_class] : all_cycles) {
        if (!multiply(table, cycle_class, arrow_class).is_zero() ||
            !multiply(table, arrow_class, cycle_class).is_zero()) {
          all_zero = false;
        }
      }
      report.checks.push_back({"mult_one_annihilation", who, all_zero});
      continue;
    }

    // Owners with multiplicity > 1 (or a single loop): exactly one cycle
    // composes nonzero on each side, and powers transport across the arrow.
    SpecialCycle c{owner, a.pos};
    SpecialCycle c_prime{owner, (a.pos + 1) % cfg.val(owner)};
    int left_nonzero = 0;
    int right_nonzero = 0;
    bool expected_sides = true;
    for (const SpecialCycle& d : special_cycles(q, owner)) {
      Element d_class = path_element(table, cycle_path(q, d));
      const bool left = !multiply(table, d_class, arrow_class).is_zero();
      const bool right = !multiply(table, arrow_class, d_class).is_zero();
      if (left) ++left_nonzero;
      if (right) ++right_nonzero;
      if (left != (d == c)) expected_sides = false;
      if (right != (d == c_prime)) expected_sides = false;
    }
    report.checks.push_back(
        {"unique_cycle_pair", who, left_nonzero == 1 && right_nonzero == 1 && expected_sides});

    Element c_class = path_element(table, cycle_path(q, c));
    Element c_prime_class = path_element(table, cycle_path(q, c_prime));
    bool transport = true;
    for (int l = 1; l <= mult; ++l) {
      Element lhs = multiply(table, element_power(table, c_class, l), arrow_class);
      Element rhs = multiply(table, arrow_class, element_power(table, c_prime_class, l));
      if (lhs != rhs) transport = false;
    }
    report.checks.push_back({"power_transport", who, transport});
  }
}

}  // namespace

IdentityReport verify_identities(const AlgebraTable& table) {
  IdentityReport report;
  const Quiver& q = table.quiver();

  check_nonspecial_families(table, report);
  check_cycle_products(table, report);
  check_arrow_cycle_pairs(table, report);

  const int loop_only = static_cast<int>(classify_vertices(q.config()).loop_only.size());
  const int mixed = static_cast<int>(mixed_cycles(q).size());
  report.checks.push_back({"loop_count_identity",
                           "loops=" + std::to_string(q.count_loops()),
                           q.count_loops() == mixed + loop_only});

  report.checks.push_back({"radical_square_nonzero", "", radical_square_nonzero(table)});

  return report;
}

}  // namespace bcc
