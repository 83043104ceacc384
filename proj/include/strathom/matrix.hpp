/*
 * matrix.hpp
 *
 * Sparse exact matrices over the supported coefficient rings (integers,
 * rationals, Laurent polynomials). Storage is a map from (row, col) to the
 * nonzero entry; the ring is the template parameter. Normal-form routines
 * densify their working copies (see smith.hpp).
 */

#ifndef STRATHOM_MATRIX_HPP
#define STRATHOM_MATRIX_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "strathom/laurent.hpp"
#include "strathom/numeric.hpp"

namespace strathom {

/// Ring operations the normal-form code needs beyond + - *.
template <typename R>
struct ring_traits;

template <>
struct ring_traits<BigInt> {
  static BigInt zero() { return BigInt(0); }
  static BigInt one() { return BigInt(1); }
  static bool is_zero(const BigInt& x) { return signum(x) == 0; }
  static bool is_unit(const BigInt& x) { return x == 1 || x == -1; }
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
    return strathom::divmod(a, b);
  }
  static bool exactly_divides(const BigInt& d, const BigInt& m) {
    return mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t()) != 0;
  }
  // Unit u with x/u in canonical form (nonnegative).
  static BigInt canonical_unit(const BigInt& x) {
    return BigInt(signum(x) < 0 ? -1 : 1);
  }
  static BigInt unit_inverse(const BigInt& u) { return u; }
  static bool norm_less(const BigInt& a, const BigInt& b) {
    return abs_less(a, b);
  }
};

template <>
struct ring_traits<BigRational> {
  static BigRational zero() { return BigRational(0); }
  static BigRational one() { return BigRational(1); }
  static bool is_zero(const BigRational& x) { return signum(x) == 0; }
  static bool is_unit(const BigRational& x) { return signum(x) != 0; }
  static std::pair<BigRational, BigRational> divmod(const BigRational& a,
                                                    const BigRational& b) {
    return {a / b, BigRational(0)};
  }
  static bool exactly_divides(const BigRational& d, const BigRational&) {
    return signum(d) != 0;
  }
  static BigRational canonical_unit(const BigRational& x) {
    return is_zero(x) ? BigRational(1) : x;
  }
  static BigRational unit_inverse(const BigRational& u) {
    return BigRational(1) / u;
  }
  static bool norm_less(const BigRational&, const BigRational&) {
    return false;  // field: all nonzero elements have equal norm
  }
};

template <>
struct ring_traits<LaurentPoly> {
  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return LaurentPoly(1L); }
  static bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
  static bool is_unit(const LaurentPoly& x) { return x.is_unit(); }
  static std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a,
                                                    const LaurentPoly& b) {
    return a.divmod(b);
  }
  static bool exactly_divides(const LaurentPoly& d, const LaurentPoly& m) {
    return d.divides(m);
  }
  static LaurentPoly canonical_unit(const LaurentPoly& x) {
    return x.canonical_unit();
  }
  static LaurentPoly unit_inverse(const LaurentPoly& u) {
    return u.unit_inverse();
  }
  static bool norm_less(const LaurentPoly& a, const LaurentPoly& b) {
    return a.span() < b.span();
  }
};

template <typename R>
class Matrix {
 public:
  using traits = ring_traits<R>;
  using entry_map = std::map<std::pair<int, int>, R>;

  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative dims");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, traits::one());
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  R at(int i, int j) const {
    check_index(i, j);
    auto it = entries_.find({i, j});
    return it == entries_.end() ? traits::zero() : it->second;
  }

  void set(int i, int j, const R& v) {
    check_index(i, j);
    if (traits::is_zero(v))
      entries_.erase({i, j});
    else
      entries_[{i, j}] = v;
  }

  const entry_map& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (const auto& [ij, v] : entries_) r.entries_[ij] = -v;
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (const auto& [ij, v] : o.entries_) r.set(ij.first, ij.second, r.at(ij.first, ij.second) + v);
    return r;
  }

  Matrix operator-(const Matrix& o) const { return *this + (-o); }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape");
    Matrix r(rows_, o.cols_);
    std::map<std::pair<int, int>, R> acc;
    for (const auto& [ij, v] : entries_) {
      const int i = ij.first, k = ij.second;
      auto it = o.entries_.lower_bound({k, 0});
      for (; it != o.entries_.end() && it->first.first == k; ++it) {
        const int j = it->first.second;
        auto a = acc.find({i, j});
        if (a == acc.end())
          acc.emplace(std::pair<int, int>{i, j}, v * it->second);
        else
          a->second = a->second + v * it->second;
      }
    }
    for (auto& [ij, v] : acc)
      if (!traits::is_zero(v)) r.entries_.emplace(ij, std::move(v));
    return r;
  }

  Matrix transposed() const {
    Matrix r(cols_, rows_);
    for (const auto& [ij, v] : entries_) r.entries_[{ij.second, ij.first}] = v;
    return r;
  }

  /// [*this | o] side by side.
  Matrix hstack(const Matrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
    Matrix r(rows_, cols_ + o.cols_);
    r.entries_ = entries_;
    for (const auto& [ij, v] : o.entries_)
      r.entries_[{ij.first, ij.second + cols_}] = v;
    return r;
  }

  Matrix select_rows(const std::vector<int>& idx) const {
    Matrix r(static_cast<int>(idx.size()), cols_);
    for (int i = 0; i < static_cast<int>(idx.size()); ++i) {
      auto it = entries_.lower_bound({idx[i], 0});
      for (; it != entries_.end() && it->first.first == idx[i]; ++it)
        r.entries_[{i, it->first.second}] = it->second;
    }
    return r;
  }

  Matrix select_cols(const std::vector<int>& idx) const {
    std::map<int, int> pos;
    for (int j = 0; j < static_cast<int>(idx.size()); ++j) pos[idx[j]] = j;
    Matrix r(rows_, static_cast<int>(idx.size()));
    for (const auto& [ij, v] : entries_) {
      auto it = pos.find(ij.second);
      if (it != pos.end()) r.entries_[{ij.first, it->second}] = v;
    }
    return r;
  }

  std::vector<R> column(int j) const {
    std::vector<R> c(rows_, traits::zero());
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  std::vector<R> apply(const std::vector<R>& x) const {
    if (static_cast<int>(x.size()) != cols_)
      throw std::invalid_argument("apply: size mismatch");
    std::vector<R> y(rows_, traits::zero());
    for (const auto& [ij, v] : entries_)
      y[ij.first] = y[ij.first] + v * x[ij.second];
    return y;
  }

  std::vector<std::vector<R>> to_dense() const {
    std::vector<std::vector<R>> d(rows_, std::vector<R>(cols_, traits::zero()));
    for (const auto& [ij, v] : entries_) d[ij.first][ij.second] = v;
    return d;
  }

  static Matrix from_dense(const std::vector<std::vector<R>>& d) {
    const int r = static_cast<int>(d.size());
    const int c = r == 0 ? 0 : static_cast<int>(d[0].size());
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (!traits::is_zero(d[i][j])) m.entries_[{i, j}] = d[i][j];
    return m;
  }

 private:
  void check_index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw std::out_of_range("matrix index");
  }
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_ = 0, cols_ = 0;
  entry_map entries_;
};

using IntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<BigRational>;
using LaurentMatrix = Matrix<LaurentPoly>;

inline RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (const auto& [ij, v] : m.entries())
    r.set(ij.first, ij.second, BigRational(v));
  return r;
}

inline LaurentMatrix to_laurent(const IntMatrix& m) {
  LaurentMatrix r(m.rows(), m.cols());
  for (const auto& [ij, v] : m.entries())
    r.set(ij.first, ij.second, LaurentPoly(BigRational(v)));
  return r;
}

/// Specialization t := 1, entry-wise; requires integral values.
inline IntMatrix specialize_at_one(const LaurentMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (const auto& [ij, v] : m.entries()) {
    const BigRational c = v.evaluate_at_one();
    if (c.get_den() != 1)
      throw std::domain_error("specialize_at_one: non-integral value");
    r.set(ij.first, ij.second, c.get_num());
  }
  return r;
}

}  // namespace strathom

#endif
