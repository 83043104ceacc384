/*
 * smith.hpp
 *
 * Smith normal form over the Euclidean rings we support (integers and
 * rational Laurent polynomials; over the rationals the algorithm reduces
 * to Gaussian elimination), with transform accumulation, plus the
 * kernel / image / preimage routines built on it.
 *
 * Pivot strategy: smallest Euclidean norm in the remaining submatrix,
 * ties broken by (row, col) lexicographic order, so transforms are
 * reproducible across runs. A unit entry is a global minimum, so the scan
 * stops at the first one; unit pivots also divide everything, which keeps
 * the common boundary-matrix case near quadratic.
 */

#ifndef STRATHOM_SMITH_HPP
#define STRATHOM_SMITH_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "strathom/matrix.hpp"

namespace strathom {

template <typename R>
struct SmithResult {
  Matrix<R> d;      // u * input * v, diagonal with d1 | d2 | ...
  Matrix<R> u, v;   // invertible transforms
  Matrix<R> u_inv, v_inv;
  std::vector<R> diagonal;  // min(rows, cols) entries of d
  int rank = 0;             // nonzero diagonal entries
};

/// Which transforms to accumulate; skipping unused ones saves a dense
/// matrix worth of work each.
struct SmithOptions {
  bool with_u = true;
  bool with_u_inv = true;
  bool with_v = true;
  bool with_v_inv = true;
};

template <typename R>
SmithResult<R> smith_normal_form(const Matrix<R>& input,
                                 const SmithOptions& opt = {}) {
  using T = ring_traits<R>;
  const int nr = input.rows(), nc = input.cols();
  auto d = input.to_dense();
  using Dense = std::vector<std::vector<R>>;
  auto dense_identity = [](int n) {
    Dense m(n, std::vector<R>(n, T::zero()));
    for (int i = 0; i < n; ++i) m[i][i] = T::one();
    return m;
  };
  Dense u, ui, v, vi;
  if (opt.with_u) u = dense_identity(nr);
  if (opt.with_u_inv) ui = dense_identity(nr);
  if (opt.with_v) v = dense_identity(nc);
  if (opt.with_v_inv) vi = dense_identity(nc);

  // Elementary operations, applied to d while keeping the invariants
  // d = u * input * v, u * u_inv = 1, v * v_inv = 1.
  auto add_row = [&](int dst, int src, const R& c) {
    if (T::is_zero(c)) return;
    for (int j = 0; j < nc; ++j)
      if (!T::is_zero(d[src][j])) d[dst][j] = d[dst][j] + c * d[src][j];
    if (opt.with_u)
      for (int j = 0; j < nr; ++j)
        if (!T::is_zero(u[src][j])) u[dst][j] = u[dst][j] + c * u[src][j];
    if (opt.with_u_inv)
      for (int r = 0; r < nr; ++r)
        if (!T::is_zero(ui[r][dst])) ui[r][src] = ui[r][src] - c * ui[r][dst];
  };
  auto swap_rows = [&](int a, int b) {
    if (a == b) return;
    std::swap(d[a], d[b]);
    if (opt.with_u) std::swap(u[a], u[b]);
    if (opt.with_u_inv)
      for (int r = 0; r < nr; ++r) std::swap(ui[r][a], ui[r][b]);
  };
  auto scale_row = [&](int i, const R& unit) {
    const R inv = T::unit_inverse(unit);
    for (int j = 0; j < nc; ++j)
      if (!T::is_zero(d[i][j])) d[i][j] = d[i][j] * unit;
    if (opt.with_u)
      for (int j = 0; j < nr; ++j)
        if (!T::is_zero(u[i][j])) u[i][j] = u[i][j] * unit;
    if (opt.with_u_inv)
      for (int r = 0; r < nr; ++r)
        if (!T::is_zero(ui[r][i])) ui[r][i] = ui[r][i] * inv;
  };
  auto add_col = [&](int dst, int src, const R& c) {
    if (T::is_zero(c)) return;
    for (int i = 0; i < nr; ++i)
      if (!T::is_zero(d[i][src])) d[i][dst] = d[i][dst] + c * d[i][src];
    if (opt.with_v)
      for (int i = 0; i < nc; ++i)
        if (!T::is_zero(v[i][src])) v[i][dst] = v[i][dst] + c * v[i][src];
    if (opt.with_v_inv)
      for (int j = 0; j < nc; ++j)
        if (!T::is_zero(vi[dst][j])) vi[src][j] = vi[src][j] - c * vi[dst][j];
  };
  auto swap_cols = [&](int a, int b) {
    if (a == b) return;
    for (int i = 0; i < nr; ++i) std::swap(d[i][a], d[i][b]);
    if (opt.with_v)
      for (int i = 0; i < nc; ++i) std::swap(v[i][a], v[i][b]);
    if (opt.with_v_inv) std::swap(vi[a], vi[b]);
  };

  const int steps = std::min(nr, nc);
  int rank = 0;
  for (int k = 0; k < steps; ++k) {
    // Smallest-norm pivot, (row, col) lexicographic tie-break. The first
    // unit found is already the lexicographically first minimum.
    int pi = -1, pj = -1;
    for (int i = k; i < nr && pi < 0; ++i)
      for (int j = k; j < nc; ++j) {
        if (T::is_zero(d[i][j])) continue;
        if (T::is_unit(d[i][j])) {
          pi = i;
          pj = j;
          break;
        }
      }
    if (pi < 0)
      for (int i = k; i < nr; ++i)
        for (int j = k; j < nc; ++j) {
          if (T::is_zero(d[i][j])) continue;
          if (pi < 0 || T::norm_less(d[i][j], d[pi][pj])) {
            pi = i;
            pj = j;
          }
        }
    if (pi < 0) break;  // remaining submatrix is zero
    swap_rows(pi, k);
    swap_cols(pj, k);

    // Reduce until row k and column k are clear and the pivot divides the
    // remaining submatrix. Each restart strictly shrinks the pivot norm.
    bool settled = false;
    while (!settled) {
      bool restart = false;
      for (int i = k + 1; i < nr && !restart; ++i) {
        if (T::is_zero(d[i][k])) continue;
        auto [q, r] = T::divmod(d[i][k], d[k][k]);
        add_row(i, k, -q);
        if (!T::is_zero(d[i][k])) {
          swap_rows(i, k);
          restart = true;
        }
      }
      if (restart) continue;
      for (int j = k + 1; j < nc && !restart; ++j) {
        if (T::is_zero(d[k][j])) continue;
        auto [q, r] = T::divmod(d[k][j], d[k][k]);
        add_col(j, k, -q);
        if (!T::is_zero(d[k][j])) {
          swap_cols(j, k);
          restart = true;
        }
      }
      if (restart) continue;
      settled = true;
      if (T::is_unit(d[k][k])) continue;  // a unit divides everything
      for (int i = k + 1; i < nr && settled; ++i)
        for (int j = k + 1; j < nc && settled; ++j)
          if (!T::is_zero(d[i][j]) &&
              !T::exactly_divides(d[k][k], d[i][j])) {
            add_row(k, i, T::one());
            settled = false;
          }
    }
    ++rank;
  }

  for (int i = 0; i < rank; ++i) {
    const R cu = T::canonical_unit(d[i][i]);
    if (!(cu == T::one())) scale_row(i, T::unit_inverse(cu));
  }

  SmithResult<R> res;
  res.d = Matrix<R>::from_dense(d);
  if (opt.with_u) res.u = Matrix<R>::from_dense(u);
  if (opt.with_u_inv) res.u_inv = Matrix<R>::from_dense(ui);
  if (opt.with_v) res.v = Matrix<R>::from_dense(v);
  if (opt.with_v_inv) res.v_inv = Matrix<R>::from_dense(vi);
  res.rank = rank;
  res.diagonal.reserve(steps);
  for (int i = 0; i < steps; ++i) res.diagonal.push_back(d[i][i]);
  return res;
}

/// Rank over the fraction field of the entry ring.
template <typename R>
int rank_over_fractions(const Matrix<R>& m) {
  return smith_normal_form(m, {false, false, false, false}).rank;
}

/// Columns form a basis of ker(m). Over the integers the kernel of a matrix
/// is automatically saturated, so this is a basis of the full kernel lattice.
template <typename R>
Matrix<R> kernel_basis(const Matrix<R>& m) {
  const SmithResult<R> s =
      smith_normal_form(m, {false, false, true, false});
  std::vector<int> idx;
  for (int j = s.rank; j < m.cols(); ++j) idx.push_back(j);
  return s.v.select_cols(idx);
}

/// Columns form a basis of the column span (image lattice / submodule).
template <typename R>
Matrix<R> image_basis(const Matrix<R>& m) {
  const SmithResult<R> s =
      smith_normal_form(m, {false, true, false, false});
  std::vector<int> idx;
  for (int j = 0; j < s.rank; ++j) idx.push_back(j);
  Matrix<R> b = s.u_inv.select_cols(idx);
  Matrix<R> scale(s.rank, s.rank);
  for (int j = 0; j < s.rank; ++j) scale.set(j, j, s.diagonal[j]);
  return b * scale;
}

/// Solves k * y = b exactly over the ring; throws std::domain_error when some
/// column of b is not in the span of k's columns.
template <typename R>
Matrix<R> solve_in_span(const Matrix<R>& k, const Matrix<R>& b) {
  using T = ring_traits<R>;
  if (k.rows() != b.rows())
    throw std::invalid_argument("solve_in_span: row mismatch");
  const SmithResult<R> s =
      smith_normal_form(k, {true, false, true, false});
  const Matrix<R> ub = s.u * b;
  Matrix<R> z(k.cols(), b.cols());
  for (const auto& [ij, val] : ub.entries()) {
    const int i = ij.first, j = ij.second;
    if (i >= s.rank)
      throw std::domain_error("solve_in_span: target outside span");
    auto [q, r] = T::divmod(val, s.diagonal[i]);
    if (!T::is_zero(r))
      throw std::domain_error("solve_in_span: no exact solution");
    z.set(i, j, q);
  }
  return s.v * z;
}

/// Basis of { x : m * x lies in the column span of target }. Over the
/// integers this is a basis of the full preimage subgroup; over a PID a
/// basis of the preimage submodule.
template <typename R>
Matrix<R> preimage_basis(const Matrix<R>& m, const Matrix<R>& target) {
  if (target.rows() != m.rows())
    throw std::invalid_argument("preimage_basis: dimension mismatch");
  const Matrix<R> block = m.hstack(-target);
  const Matrix<R> ker = kernel_basis(block);
  std::vector<int> top;
  for (int i = 0; i < m.cols(); ++i) top.push_back(i);
  return image_basis(ker.select_rows(top));
}

/// Bareiss fraction-free determinant; exact over any integral domain.
template <typename R>
R determinant(const Matrix<R>& m) {
  using T = ring_traits<R>;
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square");
  const int n = m.rows();
  if (n == 0) return T::one();
  auto a = m.to_dense();
  R prev = T::one();
  bool neg = false;
  for (int k = 0; k + 1 < n; ++k) {
    if (T::is_zero(a[k][k])) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!T::is_zero(a[i][k])) {
          piv = i;
          break;
        }
      if (piv < 0) return T::zero();
      std::swap(a[k], a[piv]);
      neg = !neg;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        const R num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto [q, r] = T::divmod(num, prev);
        if (!T::is_zero(r)) throw std::logic_error("bareiss: inexact step");
        a[i][j] = q;
      }
      a[i][k] = T::zero();
    }
    prev = a[k][k];
  }
  return neg ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace strathom

#endif
