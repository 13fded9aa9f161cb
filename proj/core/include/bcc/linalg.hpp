#ifndef BCC_LINALG_HPP
#define BCC_LINALG_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bcc::linalg {

bool is_prime(std::uint64_t n);

/// Which exact field to run linear algebra over.
struct FieldSpec {
  enum class Kind { rationals, prime };

  Kind kind = Kind::rationals;
  std::uint64_t prime = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime_field(std::uint64_t p);  // throws if p is not prime

  std::string name() const;

  bool operator==(const FieldSpec&) const = default;
};

/// Accepts "q"/"Q" or "p=<prime>".
FieldSpec parse_field_spec(std::string_view text);

struct RationalField {
  using Scalar = mpq_class;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const { return Scalar(v); }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar div(const Scalar& a, const Scalar& b) const { return a / b; }
  Scalar neg(const Scalar& a) const { return -a; }
  bool is_zero(const Scalar& a) const { return a == 0; }
};

class PrimeField {
 public:
  using Scalar = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1 % p_; }
  Scalar from_int(long v) const {
    long long r = static_cast<long long>(v) % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Scalar>(r);
  }
  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Scalar div(Scalar a, Scalar b) const;
  Scalar inv(Scalar a) const;
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  bool is_zero(Scalar a) const { return a == 0; }

 private:
  std::uint64_t p_;
};

/// Dense matrix over an exact field. All arithmetic is exact; there is no
/// floating-point path.
template <class Field>
class Matrix {
 public:
  using Scalar = typename Field::Scalar;

  Matrix(Field field, int rows, int cols)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, field_.zero()) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

 private:
  Field field_;
  int rows_;
  int cols_;
  std::vector<Scalar> data_;
};

namespace detail {

/// In-place reduction to row echelon form with first-nonzero pivoting
/// (deterministic). Returns the pivot columns in order.
template <class Field>
std::vector<int> echelonize(Matrix<Field>& m) {
  const Field& f = m.field();
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (!f.is_zero(m.at(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = col; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(pivot, c));
    }
    auto inv = f.div(f.one(), m.at(row, col));
    for (int c = col; c < m.cols(); ++c) m.at(row, c) = f.mul(m.at(row, c), inv);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || f.is_zero(m.at(r, col))) continue;
      auto factor = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) {
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace detail

template <class Field>
int rank(Matrix<Field> m) {
  return static_cast<int>(detail::echelonize(m).size());
}

/// Basis of the right null space { v : m v = 0 }; size cols - rank.
template <class Field>
std::vector<std::vector<typename Field::Scalar>> kernel_basis(Matrix<Field> m) {
  const Field f = m.field();
  std::vector<int> pivots = detail::echelonize(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<typename Field::Scalar>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename Field::Scalar> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = f.neg(m.at(static_cast<int>(r), free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// True iff the vectors are linearly independent. Throws
/// std::invalid_argument when their lengths differ.
template <class Field>
bool independent(const Field& field,
                 const std::vector<std::vector<typename Field::Scalar>>& vectors) {
  if (vectors.empty()) return true;
  const std::size_t n = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != n) throw std::invalid_argument("independent: dimension mismatch");
  }
  Matrix<Field> m(field, static_cast<int>(vectors.size()), static_cast<int>(n));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = vectors[r][c];
  }
  return rank(std::move(m)) == static_cast<int>(vectors.size());
}

}  // namespace bcc::linalg

#endif
