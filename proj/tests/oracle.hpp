// Independent oracles for the test suite: textbook dense linear algebra
// over exact rationals and integers, written against the raw definitions.
// Deliberately shares no code with the library's normal-form machinery.

#ifndef STRATHOM_TESTS_ORACLE_HPP
#define STRATHOM_TESTS_ORACLE_HPP

#include <gmpxx.h>

#include <vector>

namespace oracle {

using QMat = std::vector<std::vector<mpq_class>>;
using ZMat = std::vector<std::vector<mpz_class>>;

inline QMat to_rational(const ZMat& a) {
  QMat q(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (const auto& v : a[i]) q[i].push_back(mpq_class(v));
  return q;
}

// Plain Gaussian elimination rank.
inline int rank(QMat a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(a[i][c]) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const mpq_class f = a[i][c] / a[r][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// Null space basis (columns) by Gaussian elimination.
inline QMat null_space(QMat a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(a[i][c]) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    const mpq_class lead = a[r][c];
    for (int j = 0; j < cols; ++j) a[r][j] /= lead;
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const mpq_class f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  QMat basis;  // one column per free variable, stored as rows here
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<mpq_class> v(cols, mpq_class(0));
    v[c] = 1;
    for (size_t p = 0; p < pivot_col.size(); ++p) v[pivot_col[p]] = -a[p][c];
    basis.push_back(v);
  }
  // Transpose into column-vector form.
  QMat out(cols, std::vector<mpq_class>(basis.size(), mpq_class(0)));
  for (size_t j = 0; j < basis.size(); ++j)
    for (int i = 0; i < cols; ++i) out[i][j] = basis[j][i];
  return out;
}

inline QMat multiply(const QMat& a, const QMat& b) {
  const int n = static_cast<int>(a.size());
  const int m = n == 0 ? 0 : static_cast<int>(a[0].size());
  const int k = m == 0 ? 0 : static_cast<int>(b[0].size());
  QMat out(n, std::vector<mpq_class>(k, mpq_class(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      if (sgn(a[i][j]) == 0) continue;
      for (int c = 0; c < k; ++c) out[i][c] += a[i][j] * b[j][c];
    }
  return out;
}

// Homology ranks of a chain complex from boundary ranks alone:
// rank H_i = dim C_i - rank d_i - rank d_{i+1}.
inline std::vector<int> homology_ranks(const std::vector<ZMat>& boundaries,
                                       const std::vector<int>& chain_dims) {
  std::vector<int> ranks;
  std::vector<int> brank(boundaries.size() + 1, 0);
  for (size_t i = 0; i < boundaries.size(); ++i)
    brank[i] = rank(to_rational(boundaries[i]));
  for (size_t i = 0; i < chain_dims.size(); ++i)
    ranks.push_back(chain_dims[i] - brank[i] -
                    (i + 1 < boundaries.size() ? brank[i + 1] : 0));
  return ranks;
}

// Textbook Smith diagonal (no transforms): move the smallest nonzero to the
// pivot, clear its row and column by division steps, enforce divisibility.
inline std::vector<mpz_class> smith_diagonal(ZMat a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  std::vector<mpz_class> diag;
  const int steps = std::min(rows, cols);
  for (int k = 0; k < steps; ++k) {
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = k; i < rows; ++i)
        for (int j = k; j < cols; ++j) {
          if (sgn(a[i][j]) == 0) continue;
          if (pi < 0 || mpz_cmpabs(a[i][j].get_mpz_t(), a[pi][pj].get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        for (int r = k; r < steps; ++r) diag.push_back(0);
        return diag;
      }
      std::swap(a[k], a[pi]);
      for (int i = 0; i < rows; ++i) std::swap(a[i][k], a[i][pj]);
      bool clean = true;
      for (int i = k + 1; i < rows; ++i) {
        if (sgn(a[i][k]) == 0) continue;
        mpz_class q = a[i][k] / a[k][k];
        for (int j = k; j < cols; ++j) a[i][j] -= q * a[k][j];
        if (sgn(a[i][k]) != 0) clean = false;
      }
      for (int j = k + 1; j < cols; ++j) {
        if (sgn(a[k][j]) == 0) continue;
        mpz_class q = a[k][j] / a[k][k];
        for (int i = k; i < rows; ++i) a[i][j] -= q * a[i][k];
        if (sgn(a[k][j]) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides_all = true;
      for (int i = k + 1; i < rows && divides_all; ++i)
        for (int j = k + 1; j < cols && divides_all; ++j)
          if (sgn(a[i][j] % a[k][k]) != 0) {
            for (int c = k; c < cols; ++c) a[k][c] += a[i][c];
            divides_all = false;
          }
      if (divides_all) break;
    }
    diag.push_back(abs(a[k][k]));
  }
  return diag;
}

// Torsion of H_i of an integral chain complex: nontrivial invariant
// factors of the incoming boundary map.
inline std::vector<mpz_class> homology_torsion(const ZMat& incoming) {
  std::vector<mpz_class> out;
  for (const auto& d : smith_diagonal(incoming))
    if (d > 1) out.push_back(d);
  return out;
}

}  // namespace oracle

#endif
