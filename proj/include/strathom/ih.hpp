/*
 * ih.hpp
 *
 * Middle-perversity intersection homology of a stratified simplicial
 * complex, integral and relative, plus ordinary simplicial homology and the
 * Euler characteristic report with its sign verdicts.
 *
 * The allowability cutoffs exploit that all strata have even real
 * codimension: a simplex of dimension i is allowable when its intersection
 * with each singular stratum of complex codimension s has dimension < i - s,
 * with the intersection dimension read off face-wise from the stratum
 * assignment (fullness of the triangulation makes this the geometric
 * dimension).
 */

#ifndef STRATHOM_IH_HPP
#define STRATHOM_IH_HPP

#include <string>
#include <vector>

#include "strathom/parallel.hpp"
#include "strathom/smith.hpp"
#include "strathom/stratified.hpp"

namespace strathom {

template <typename R>
struct GroupInfo {
  int rank = 0;
  std::vector<R> torsion;  // nontrivial invariant factors, d1 | d2 | ...
  bool operator==(const GroupInfo&) const = default;
};

template <typename R>
struct ChainHomologyReport {
  std::vector<GroupInfo<R>> groups;  // indexed by degree
  bool operator==(const ChainHomologyReport&) const = default;
  int rank(int degree) const {
    return degree >= 0 && degree < static_cast<int>(groups.size())
               ? groups[degree].rank
               : 0;
  }
  int top_degree() const { return static_cast<int>(groups.size()) - 1; }
};

using HomologyReport = ChainHomologyReport<BigInt>;

struct EulerReport {
  long long ichi = 0;
  long long chi = 0;
  int n = 0;
  bool signed_ih = false;   // (-1)^n * ichi >= 0
  bool signed_lci = false;  // (-1)^n * chi >= 0
};

/// Homology of a chain complex presented by its boundary matrices,
/// boundaries[i] : C_i -> C_{i-1} (boundaries[0] has zero rows). Works over
/// any supported PID; torsion lists keep only nonunit invariant factors in
/// canonical form.
template <typename R>
ChainHomologyReport<R> homology_of_complex(
    const std::vector<Matrix<R>>& boundaries) {
  using T = ring_traits<R>;
  const int top = static_cast<int>(boundaries.size()) - 1;
  ChainHomologyReport<R> report;
  report.groups.resize(top + 1);
  std::vector<Matrix<R>> cycles(top + 1);
  for_each_index(top + 1,
                 [&](int i) { cycles[i] = kernel_basis(boundaries[i]); });
  for_each_index(top + 1, [&](int i) {
    const int z = cycles[i].cols();
    if (i == top) {
      report.groups[i].rank = z;
      return;
    }
    // Presentation of H_i: generators of the image in cycle coordinates.
    const Matrix<R> in_cycles = solve_in_span(cycles[i], boundaries[i + 1]);
    const SmithResult<R> s =
        smith_normal_form(in_cycles, {false, false, false, false});
    report.groups[i].rank = z - s.rank;
    for (int d = 0; d < s.rank; ++d)
      if (!T::is_unit(s.diagonal[d]))
        report.groups[i].torsion.push_back(s.diagonal[d]);
  });
  return report;
}

/// Indices (into simplices(degree)) of the allowable simplices.
std::vector<int> allowable_simplices(const StratifiedComplex& x, int degree);

/// Per-degree saturated bases of the intersection chain groups and the
/// induced boundary maps between them.
class AllowableChainSystem {
 public:
  int top_degree() const { return static_cast<int>(allowable_.size()) - 1; }
  const std::vector<int>& allowable(int degree) const {
    return allowable_[degree];
  }
  /// Basis of IC_degree as columns, in full chain coordinates.
  const IntMatrix& ic_basis(int degree) const { return ic_basis_[degree]; }
  /// Induced boundary IC_degree -> IC_{degree-1} in basis coordinates.
  const IntMatrix& ic_boundary(int degree) const {
    return ic_boundary_[degree];
  }
  int ic_rank(int degree) const { return ic_basis_[degree].cols(); }
  const std::vector<IntMatrix>& ic_boundaries() const { return ic_boundary_; }

  friend AllowableChainSystem build_allowable_system(
      const StratifiedComplex& x);

 private:
  std::vector<std::vector<int>> allowable_;
  std::vector<IntMatrix> ic_basis_;
  std::vector<IntMatrix> ic_boundary_;
};

AllowableChainSystem build_allowable_system(const StratifiedComplex& x);

HomologyReport intersection_homology(const StratifiedComplex& x);
HomologyReport ordinary_homology(const StratifiedComplex& x);

/// Relative intersection homology of (X, U) with U the open star of a full
/// subcomplex: the quotient of IC_*(X) by the allowable chains compactly
/// supported in U (the chains carried by the subcomplex itself).
HomologyReport relative_intersection_homology(const StratifiedComplex& x,
                                              const std::vector<Simplex>& sub);

EulerReport euler_report(const StratifiedComplex& x);

/// Long exact sequence audit for the pair (X, open star of sub), over the
/// rationals: builds the three homology theories with explicit induced and
/// connecting maps and checks zero compositions and rank exactness at every
/// node.
struct PairSequenceCheck {
  bool exact = false;
  std::string detail;
  std::vector<int> sub_ranks, total_ranks, relative_ranks;
};
PairSequenceCheck pair_sequence_check(const StratifiedComplex& x,
                                      const std::vector<Simplex>& sub);

}  // namespace strathom

#endif
