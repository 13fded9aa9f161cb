#include "bcc/center.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace bcc {

namespace {

void require_hypotheses(const BrauerConfig& cfg) {
  ValidationReport report = validate(cfg);
  if (!report.valid()) {
    throw HypothesisError("invalid configuration: " + report.violations.front().message);
  }
  if (!is_reduced(cfg)) throw HypothesisError("reduced hypothesis violated");
  if (!is_connected(cfg)) throw HypothesisError("connected hypothesis violated");
}

long long multiplicity_sum(const BrauerConfig& cfg) {
  long long sum = 0;
  for (int v = 0; v < cfg.vertex_count(); ++v) sum += cfg.multiplicity(v);
  return sum;
}

}  // namespace

long long center_dim_formula(const BrauerConfig& cfg, const Quiver& q) {
  require_hypotheses(cfg);
  const long long loop_only = static_cast<long long>(classify_vertices(cfg).loop_only.size());
  return 1 + multiplicity_sum(cfg) + cfg.polygon_count() - cfg.vertex_count() +
         q.count_loops() - loop_only;
}

bool is_brauer_tree(const BrauerConfig& cfg) {
  long long membership_edges = 0;
  for (int p = 0; p < cfg.polygon_count(); ++p) {
    if (cfg.polygon_members(p).size() != 2) return false;
    membership_edges += 2;
  }
  // A tree has exactly nodes - 1 edges; repeated memberships count as
  // parallel edges, so the one-loop graph fails this count.
  if (membership_edges != cfg.vertex_count() + cfg.polygon_count() - 1) return false;
  return is_connected(cfg);
}

long long center_dim_tree_corollary(const BrauerConfig& cfg) {
  ValidationReport report = validate(cfg);
  if (!report.valid()) {
    throw HypothesisError("invalid configuration: " + report.violations.front().message);
  }
  if (!is_brauer_tree(cfg)) {
    throw HypothesisError("tree hypothesis violated: the incidence graph is not a tree of 2-gons");
  }
  return 1 + multiplicity_sum(cfg) + cfg.polygon_count() - cfg.vertex_count();
}

BoundaryMatrix d1_star_matrix(const AlgebraTable& table) {
  const Quiver& q = table.quiver();
  BoundaryMatrix m;

  for (int i = 0; i < table.dim(); ++i) {
    const BasisElement& e = table.element(i);
    if (e.source == e.target) m.column_basis.push_back(i);
  }
  m.cols = static_cast<int>(m.column_basis.size());

  // One row block per arrow: the basis of the source(a)-target(a) block.
  std::map<std::pair<int, int>, std::vector<int>> blocks;
  for (int i = 0; i < table.dim(); ++i) {
    const BasisElement& e = table.element(i);
    blocks[{e.source, e.target}].push_back(i);
  }
  for (const Arrow& a : q.arrows()) {
    auto it = blocks.find({a.source, a.target});
    if (it == blocks.end()) continue;
    for (int i : it->second) {
      m.row_meta.emplace_back(a.id, i);
    }
  }
  m.rows = static_cast<int>(m.row_meta.size());
  m.entries.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);

  // Row lookup per arrow.
  std::map<std::pair<int, int>, int> row_index;  // (arrow, basis) -> row
  for (int r = 0; r < m.rows; ++r) row_index[m.row_meta[r]] = r;

  for (int c = 0; c < m.cols; ++c) {
    const int b = m.column_basis[c];
    for (const Arrow& a : q.arrows()) {
      const int arrow_elt = table.prefix_index(a.id, 1);
      const int left = table.product(b, arrow_elt);   // b * a
      const int right = table.product(arrow_elt, b);  // a * b
      if (left >= 0) {
        m.entries[static_cast<std::size_t>(row_index.at({a.id, left})) * m.cols + c] += 1;
      }
      if (right >= 0) {
        m.entries[static_cast<std::size_t>(row_index.at({a.id, right})) * m.cols + c] -= 1;
      }
    }
  }
  return m;
}

namespace {

// Rows that are identically zero carry no constraints; dropping them keeps
// the elimination small.
template <class Field>
linalg::Matrix<Field> to_field_matrix(const BoundaryMatrix& m, const Field& field,
                                      bool drop_zero_rows) {
  std::vector<int> rows;
  for (int r = 0; r < m.rows; ++r) {
    bool nonzero = false;
    for (int c = 0; c < m.cols && !nonzero; ++c) nonzero = m.at(r, c) != 0;
    if (nonzero || !drop_zero_rows) rows.push_back(r);
  }
  linalg::Matrix<Field> out(field, static_cast<int>(rows.size()), m.cols);
  for (int r = 0; r < out.rows(); ++r) {
    for (int c = 0; c < m.cols; ++c) {
      out.at(r, c) = field.from_int(m.at(rows[r], c));
    }
  }
  return out;
}

}  // namespace

long long center_dim_bruteforce(const AlgebraTable& table, const linalg::FieldSpec& field) {
  BoundaryMatrix m = d1_star_matrix(table);
  if (field.kind == linalg::FieldSpec::Kind::rationals) {
    auto fm = to_field_matrix(m, linalg::RationalField{}, true);
    return m.cols - linalg::rank(std::move(fm));
  }
  auto fm = to_field_matrix(m, linalg::PrimeField(field.prime), true);
  return m.cols - linalg::rank(std::move(fm));
}

std::vector<std::vector<mpq_class>> center_kernel_basis(const AlgebraTable& table) {
  BoundaryMatrix m = d1_star_matrix(table);
  return linalg::kernel_basis(to_field_matrix(m, linalg::RationalField{}, false));
}

std::string CenterBasisCandidate::kind_name() const {
  switch (kind) {
    case Kind::identity:
      return "identity";
    case Kind::cycle_power:
      return "cycle_power";
    case Kind::socle:
      return "socle";
    case Kind::mixed:
      return "mixed_cycle";
  }
  return "?";
}

std::string CenterBasisCandidate::describe(const AlgebraTable& table) const {
  switch (kind) {
    case Kind::identity:
      return "1";
    case Kind::cycle_power:
      return "C(" + table.config().vertex_name(owner) + ")^" + std::to_string(power);
    case Kind::socle:
      return "C^(" + table.config().polygon_name(polygon) + ")";
    case Kind::mixed:
      return "D(" + table.config().vertex_name(owner) + "," +
             table.config().polygon_name(polygon) + "," + std::to_string(loop_index + 1) + ")";
  }
  return "?";
}

std::vector<CenterBasisCandidate> center_basis_candidates(const AlgebraTable& table) {
  const Quiver& q = table.quiver();
  const BrauerConfig& cfg = q.config();
  require_hypotheses(cfg);

  std::vector<CenterBasisCandidate> candidates;

  CenterBasisCandidate one;
  one.kind = CenterBasisCandidate::Kind::identity;
  one.value = element_identity(table);
  candidates.push_back(std::move(one));

  for (int owner = 0; owner < cfg.vertex_count(); ++owner) {
    if (cfg.is_truncated(owner) || cfg.multiplicity(owner) == 1) continue;
    Element calpha = element_C_alpha(table, owner);
    for (int j = 1; j < cfg.multiplicity(owner); ++j) {
      CenterBasisCandidate cand;
      cand.kind = CenterBasisCandidate::Kind::cycle_power;
      cand.owner = owner;
      cand.power = j;
      cand.value = element_power(table, calpha, j);
      candidates.push_back(std::move(cand));
    }
  }

  for (int p = 0; p < cfg.polygon_count(); ++p) {
    CenterBasisCandidate cand;
    cand.kind = CenterBasisCandidate::Kind::socle;
    cand.polygon = p;
    cand.value = Element::basis(table.socle_index(p));
    candidates.push_back(std::move(cand));
  }

  for (const MixedCycle& mc : mixed_cycles(q)) {
    CenterBasisCandidate cand;
    cand.kind = CenterBasisCandidate::Kind::mixed;
    cand.owner = mc.owner;
    cand.polygon = mc.polygon;
    cand.loop_index = mc.loop_index;
    const int index = table.path_index(Path::of(mc.path));
    if (index >= 0) cand.value = Element::basis(index);
    candidates.push_back(std::move(cand));
  }

  return candidates;
}

bool is_central(const AlgebraTable& table, const Element& x) {
  const Quiver& q = table.quiver();
  for (int p = 0; p < table.config().polygon_count(); ++p) {
    Element e = Element::basis(table.idempotent_index(p));
    if (multiply(table, e, x) != multiply(table, x, e)) return false;
  }
  for (const Arrow& a : q.arrows()) {
    Element arrow_class = Element::basis(table.prefix_index(a.id, 1));
    if (multiply(table, arrow_class, x) != multiply(table, x, arrow_class)) return false;
  }
  return true;
}

bool CenterReport::success() const {
  if (!candidates_central || !candidates_independent) return false;
  if (candidate_count != dim_formula) return false;
  if (dim_oracle && *dim_oracle != dim_formula) return false;
  return true;
}

CenterReport verify_theorem(const AlgebraTable& table, const linalg::FieldSpec& field,
                            bool with_oracle) {
  CenterReport report;
  report.field = field;
  report.dim_formula = center_dim_formula(table.config(), table.quiver());
  report.candidates = center_basis_candidates(table);
  report.candidate_count = static_cast<long long>(report.candidates.size());

  report.candidates_central = true;
  for (const CenterBasisCandidate& cand : report.candidates) {
    if (!is_central(table, cand.value)) report.candidates_central = false;
  }

  for (std::size_t i = 0; i < report.candidates.size() && !report.coincidence; ++i) {
    for (std::size_t j = i + 1; j < report.candidates.size(); ++j) {
      if (report.candidates[i].value == report.candidates[j].value) {
        report.coincidence = true;
        break;
      }
    }
  }

  // Independence of the candidate coordinate vectors over the chosen field.
  if (field.kind == linalg::FieldSpec::Kind::rationals) {
    linalg::RationalField f;
    std::vector<std::vector<mpq_class>> vectors;
    for (const CenterBasisCandidate& cand : report.candidates) {
      std::vector<mpq_class> v(table.dim(), 0);
      for (const auto& [index, c] : cand.value.coeffs()) v[index] = c;
      vectors.push_back(std::move(v));
    }
    report.candidates_independent = linalg::independent(f, vectors);
  } else {
    linalg::PrimeField f(field.prime);
    std::vector<std::vector<std::uint64_t>> vectors;
    for (const CenterBasisCandidate& cand : report.candidates) {
      std::vector<std::uint64_t> v(table.dim(), 0);
      for (const auto& [index, c] : cand.value.coeffs()) {
        // Candidate coordinates are small integers.
        long num = static_cast<long>(mpz_get_si(c.get_num_mpz_t()));
        long den = static_cast<long>(mpz_get_si(c.get_den_mpz_t()));
        v[index] = f.div(f.from_int(num), f.from_int(den));
      }
      vectors.push_back(std::move(v));
    }
    report.candidates_independent = linalg::independent(f, vectors);
  }

  if (with_oracle) report.dim_oracle = center_dim_bruteforce(table, field);
  return report;
}

CenterReport verify_theorem(const BrauerConfig& cfg, const linalg::FieldSpec& field,
                            bool with_oracle) {
  require_hypotheses(cfg);
  AlgebraTable table{Quiver(cfg)};
  return verify_theorem(table, field, with_oracle);
}

std::string to_json(const CenterReport& report, const AlgebraTable& table) {
  nlohmann::ordered_json doc;
  doc["dim_formula"] = report.dim_formula;
  if (report.dim_oracle) {
    doc["dim_oracle"] = *report.dim_oracle;
  } else {
    doc["dim_oracle"] = nullptr;
  }
  doc["dim_candidates"] = report.candidate_count;
  doc["field"] = report.field.name();
  doc["candidates_central"] = report.candidates_central;
  doc["candidates_independent"] = report.candidates_independent;
  doc["success"] = report.success();
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const CenterBasisCandidate& cand : report.candidates) {
    nlohmann::ordered_json entry;
    entry["kind"] = cand.kind_name();
    nlohmann::ordered_json support = nlohmann::ordered_json::array();
    for (const auto& [index, c] : cand.value.coeffs()) {
      (void)c;
      support.push_back(table.label(index));
    }
    entry["support"] = support;
    list.push_back(std::move(entry));
  }
  doc["candidates"] = std::move(list);
  return doc.dump(2);
}

std::string to_text(const CenterReport& report, const AlgebraTable& table) {
  std::ostringstream out;
  out << "field: " << report.field.name() << '\n';
  out << "dim formula: " << report.dim_formula << '\n';
  if (report.dim_oracle) {
    out << "dim oracle: " << *report.dim_oracle << '\n';
  } else {
    out << "dim oracle: skipped\n";
  }
  out << "candidates: " << report.candidate_count << '\n';
  out << "candidates central: " << (report.candidates_central ? "yes" : "no") << '\n';
  out << "candidates independent: " << (report.candidates_independent ? "yes" : "no") << '\n';
  if (report.coincidence) out << "warning: coinciding candidates detected\n";
  out << "success: " << (report.success() ? "yes" : "no") << '\n';
  return out.str();
}

}  // namespace bcc
