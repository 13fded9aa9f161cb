#ifndef BCC_CENTER_HPP
#define BCC_CENTER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bcc/algebra.hpp"
#include "bcc/linalg.hpp"

namespace bcc {

/// The closed formula for the center dimension:
///   1 + sum of multiplicities + #polygons - #vertices + #loops - #single-loop vertices.
/// Requires a valid, reduced, connected configuration; throws HypothesisError
/// otherwise.
long long center_dim_formula(const BrauerConfig& cfg, const Quiver& q);

/// True iff every polygon is a 2-gon and the incidence graph is a tree
/// (connected and acyclic, counting repeated memberships as parallel edges).
/// The one-vertex loop graph fails the edge count and is excluded.
bool is_brauer_tree(const BrauerConfig& cfg);

/// Tree specialization of the formula: 1 + sum of multiplicities
/// + #polygons - #vertices. Throws HypothesisError when the configuration
/// is not a Brauer tree.
long long center_dim_tree_corollary(const BrauerConfig& cfg);

/// The boundary map restricted to the cyclic part of the algebra: columns
/// are basis elements b with source == target, rows are pairs (arrow a,
/// basis element of the source(a)-target(a) block), and the entry is the
/// coefficient of the row element in b*a - a*b. All entries are -1, 0, +1.
struct BoundaryMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int8_t> entries;            // row-major
  std::vector<int> column_basis;               // basis index per column
  std::vector<std::pair<int, int>> row_meta;   // (arrow id, basis index)

  std::int8_t at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * cols + c];
  }
};

BoundaryMatrix d1_star_matrix(const AlgebraTable& table);

/// Center dimension as the kernel dimension of the boundary map over the
/// requested exact field.
long long center_dim_bruteforce(const AlgebraTable& table,
                                const linalg::FieldSpec& field = {});

/// Rational kernel basis of the boundary map, as coordinate vectors over its
/// columns (use BoundaryMatrix::column_basis to map back to basis elements).
std::vector<std::vector<mpq_class>> center_kernel_basis(const AlgebraTable& table);

/// One candidate center basis vector. The four families: the identity, the
/// powers C(a)^j (1 <= j < mult) for vertices with multiplicity > 1, the
/// socle class of every polygon, and the class of every mixed cycle.
struct CenterBasisCandidate {
  enum class Kind { identity, cycle_power, socle, mixed };

  Kind kind;
  int owner = -1;
  int power = 0;
  int polygon = -1;
  int loop_index = -1;
  Element value;

  std::string kind_name() const;
  std::string describe(const AlgebraTable& table) const;
};

/// The full candidate list in deterministic order. Requires reduced and
/// connected (throws HypothesisError).
std::vector<CenterBasisCandidate> center_basis_candidates(const AlgebraTable& table);

/// Checks commutation with the generators (all idempotents and all arrow
/// classes), which is equivalent to centrality.
bool is_central(const AlgebraTable& table, const Element& x);

struct CenterReport {
  long long dim_formula = 0;
  std::optional<long long> dim_oracle;
  long long candidate_count = 0;
  bool candidates_central = false;
  bool candidates_independent = false;
  /// Set when two candidates coincide as algebra elements (never expected;
  /// reported rather than deduplicated).
  bool coincidence = false;
  linalg::FieldSpec field;
  std::vector<CenterBasisCandidate> candidates;

  bool success() const;
};

/// Formula, oracle, and candidate diagnostics in one report.
CenterReport verify_theorem(const AlgebraTable& table,
                            const linalg::FieldSpec& field = {},
                            bool with_oracle = true);
CenterReport verify_theorem(const BrauerConfig& cfg,
                            const linalg::FieldSpec& field = {},
                            bool with_oracle = true);

std::string to_json(const CenterReport& report, const AlgebraTable& table);
std::string to_text(const CenterReport& report, const AlgebraTable& table);

}  // namespace bcc

#endif
