#ifndef BCC_ALGEBRA_HPP
#define BCC_ALGEBRA_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bcc/relations.hpp"

namespace bcc {

/// One element of the finite basis of the algebra: a vertex idempotent, a
/// nonempty proper prefix of a cycle power, or the socle class of a polygon
/// (the common value of all full cycle powers based there).
struct BasisElement {
  enum class Kind { idempotent, prefix, socle };

  Kind kind;
  int polygon = -1;     // idempotent vertex or socle polygon
  Path path;            // prefix payload
  int first_arrow = -1; // prefix metadata
  int length = 0;
  int source = -1;
  int target = -1;
  std::string label;
};

/// Basis of the algebra in deterministic order: idempotents by polygon,
/// then prefixes by (owner, start position, length), then socle classes by
/// polygon.
std::vector<BasisElement> enumerate_basis(const Quiver& q);

/// The multiplication table of the algebra over its canonical basis. All
/// structure constants are 0 or 1, so a product of basis elements is either
/// zero or a single basis element.
class AlgebraTable {
 public:
  explicit AlgebraTable(Quiver q);

  const Quiver& quiver() const { return quiver_; }
  const BrauerConfig& config() const { return quiver_.config(); }

  int dim() const { return static_cast<int>(basis_.size()); }
  const BasisElement& element(int i) const { return basis_.at(i); }
  const std::vector<BasisElement>& elements() const { return basis_; }

  /// Index of the product of two basis elements, or -1 when it is zero.
  int product(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * basis_.size() + j];
  }

  int idempotent_index(int quiver_vertex) const { return idem_index_.at(quiver_vertex); }
  int socle_index(int polygon) const { return socle_index_.at(polygon); }

  /// Index of the prefix with the given first arrow and length, or -1.
  int prefix_index(int first_arrow, int length) const;

  /// Index of a path's class via its normal form; -1 when the class is zero.
  int path_index(const Path& p) const;

  const std::string& label(int i) const { return basis_.at(i).label; }

 private:
  Quiver quiver_;
  std::vector<BasisElement> basis_;
  std::vector<std::int32_t> table_;
  std::vector<std::vector<int>> prefix_index_;  // [arrow id][length-1]
  std::vector<int> idem_index_;
  std::vector<int> socle_index_;
};

/// Sparse rational linear combination of basis elements.
class Element {
 public:
  Element() = default;

  static Element basis(int index) {
    Element e;
    e.coeffs_[index] = 1;
    return e;
  }

  const std::map<int, mpq_class>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  mpq_class coeff(int index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? mpq_class(0) : it->second;
  }

  void add(int index, const mpq_class& c);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element scaled(const mpq_class& c) const;

  bool operator==(const Element&) const = default;

 private:
  std::map<int, mpq_class> coeffs_;
};

Element multiply(const AlgebraTable& table, const Element& x, const Element& y);
Element element_power(const AlgebraTable& table, const Element& x, int exponent);

/// Sum of all vertex idempotents (the identity of the algebra).
Element element_identity(const AlgebraTable& table);

/// Sum of the classes of all special cycles of a non-truncated vertex.
/// Throws std::invalid_argument for truncated vertices.
Element element_C_alpha(const AlgebraTable& table, int owner);

std::string element_to_string(const AlgebraTable& table, const Element& x);

/// 2 + sum over distinct member vertices of occ*(occ*mult - 1).
long long dim_vv_formula(const BrauerConfig& cfg, int polygon);

/// Number of basis elements with source == target == the polygon's vertex.
int dim_vv_enumerated(const AlgebraTable& table, int quiver_vertex);

/// True iff some product of two non-idempotent basis elements is nonzero.
bool radical_square_nonzero(const AlgebraTable& table);

struct IdentityCheck {
  std::string id;
  std::string instance;
  bool pass;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;

  bool all_pass() const;
  int failures() const;
  std::string summary() const;
};

/// Runs the algebra-level identity battery:
///   nonspecial_compose       runs between visits concatenate to the cycle
///   power_slide              C_j^l q_j == q_j C_{j+1}^l
///   distinct_cycles_annihilate  C D == D C == 0 for distinct cycles, same owner
///   cycle_square_zero        C^2 == 0 when the owner has multiplicity 1
///   cycle_sum_power_socle    C(a)^mult == sum occ * socle
///   cycle_power_overflow     C^(mult+1) == 0
///   sum_power_expansion      C(a)^j == sum of C^j
///   unique_cycle_pair        exactly one cycle composes nonzero on each side
///   mult_one_annihilation    full cycles annihilate arrows of mult-1 owners
///   power_transport          C^l a == a C'^l for the cycle pair at an arrow
///   loop_count_identity      loops == mixed cycles + single-loop vertices
///   radical_square_nonzero
IdentityReport verify_identities(const AlgebraTable& table);

/// Debug dump "b_i * b_j = b_k | 0", deterministic order.
std::string table_dump(const AlgebraTable& table);

}  // namespace bcc

#endif
