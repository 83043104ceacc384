#include "strathom/ih.hpp"

#include <algorithm>
#include <set>

namespace strathom {

std::vector<int> allowable_simplices(const StratifiedComplex& x, int degree) {
  if (degree < 0 || degree > x.top_dim())
    throw std::out_of_range("allowable_simplices: degree out of range");
  const auto& level = x.simplices(degree);
  std::vector<int> out;
  for (size_t idx = 0; idx < level.size(); ++idx) {
    const Simplex& s = level[idx];
    // dim(closed simplex  meet  stratum), face-wise; -1 stands for empty.
    std::vector<int> meet(x.strata().size(), -1);
    for (const auto& f : s.faces()) {
      const int st = x.stratum_of(f);
      meet[st] = std::max(meet[st], f.dim());
    }
    bool ok = true;
    for (size_t st = 0; st < x.strata().size(); ++st) {
      if (!x.is_singular(static_cast<int>(st))) continue;
      const int codim = x.codim(static_cast<int>(st));
      if (codim < 1) continue;
      if (meet[st] >= 0 && meet[st] >= degree - codim) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(static_cast<int>(idx));
  }
  return out;
}

namespace {

// n x |idx| coordinate embedding: column j is the unit vector at idx[j].
IntMatrix embedding(int n, const std::vector<int>& idx) {
  IntMatrix e(n, static_cast<int>(idx.size()));
  for (size_t j = 0; j < idx.size(); ++j)
    e.set(idx[j], static_cast<int>(j), BigInt(1));
  return e;
}

std::vector<int> complement(int n, const std::vector<int>& idx) {
  std::vector<bool> in(n, false);
  for (int i : idx) in[i] = true;
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

}  // namespace

AllowableChainSystem build_allowable_system(const StratifiedComplex& x) {
  x.require_valid_and_full();
  const int top = x.top_dim();
  AllowableChainSystem sys;
  sys.allowable_.resize(top + 1);
  sys.ic_basis_.resize(top + 1);
  sys.ic_boundary_.resize(top + 1);

  for (int i = 0; i <= top; ++i)
    sys.allowable_[i] = allowable_simplices(x, i);

  for (int i = 0; i <= top; ++i) {
    const int n_i = x.simplex_count(i);
    if (i == 0) {
      // No boundary condition in degree zero.
      sys.ic_basis_[0] = embedding(n_i, sys.allowable_[0]);
      continue;
    }
    const IntMatrix boundary = x.boundary_matrix(i);
    const IntMatrix restricted =
        boundary.select_rows(complement(x.simplex_count(i - 1),
                                        sys.allowable_[i - 1]))
            .select_cols(sys.allowable_[i]);
    const IntMatrix kernel = kernel_basis(restricted);
    sys.ic_basis_[i] = embedding(n_i, sys.allowable_[i]) * kernel;
  }

  for (int i = 0; i <= top; ++i) {
    if (i == 0) {
      sys.ic_boundary_[0] = IntMatrix(0, sys.ic_basis_[0].cols());
      continue;
    }
    const IntMatrix image = x.boundary_matrix(i) * sys.ic_basis_[i];
    sys.ic_boundary_[i] = solve_in_span(sys.ic_basis_[i - 1], image);
  }
  return sys;
}

HomologyReport intersection_homology(const StratifiedComplex& x) {
  return homology_of_complex(build_allowable_system(x).ic_boundaries());
}

HomologyReport ordinary_homology(const StratifiedComplex& x) {
  std::vector<IntMatrix> boundaries;
  for (int i = 0; i <= x.top_dim(); ++i)
    boundaries.push_back(x.boundary_matrix(i));
  return homology_of_complex(boundaries);
}

namespace {

// Change of basis splitting IC into the sub part and the quotient part.
struct QuotientSplit {
  IntMatrix sub_basis;   // W in IC coordinates, k x w
  IntMatrix projection;  // q x k, IC coords -> quotient coords
  IntMatrix lift;        // k x q, quotient basis representatives
};

QuotientSplit split_off(const IntMatrix& ic_basis,
                        const std::vector<int>& sub_rows) {
  QuotientSplit out;
  const int k = ic_basis.cols();
  const IntMatrix outside =
      ic_basis.select_rows(complement(ic_basis.rows(), sub_rows));
  out.sub_basis = kernel_basis(outside);
  const SmithResult<BigInt> s =
      smith_normal_form(out.sub_basis, {true, true, false, false});
  for (int j = 0; j < s.rank; ++j)
    if (s.diagonal[j] != 1)
      throw std::logic_error("quotient split: sub-basis not saturated");
  std::vector<int> rest;
  for (int j = s.rank; j < k; ++j) rest.push_back(j);
  out.projection = s.u.select_rows(rest);
  out.lift = s.u_inv.select_cols(rest);
  return out;
}

std::vector<int> sub_simplex_rows(const StratifiedComplex& x,
                                  const std::vector<Simplex>& sub,
                                  int degree) {
  std::vector<int> rows;
  for (const auto& s : sub)
    if (s.dim() == degree) rows.push_back(x.simplex_index(s));
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

HomologyReport relative_intersection_homology(
    const StratifiedComplex& x, const std::vector<Simplex>& sub) {
  x.require_full_subcomplex(sub);
  const AllowableChainSystem sys = build_allowable_system(x);
  const int top = sys.top_degree();

  std::vector<QuotientSplit> split(top + 1);
  for (int i = 0; i <= top; ++i)
    split[i] = split_off(sys.ic_basis(i), sub_simplex_rows(x, sub, i));

  std::vector<IntMatrix> boundaries(top + 1);
  boundaries[0] = IntMatrix(0, split[0].projection.rows());
  for (int i = 1; i <= top; ++i)
    boundaries[i] =
        split[i - 1].projection * sys.ic_boundary(i) * split[i].lift;
  return homology_of_complex(boundaries);
}

EulerReport euler_report(const StratifiedComplex& x) {
  const AllowableChainSystem sys = build_allowable_system(x);
  const HomologyReport ih = homology_of_complex(sys.ic_boundaries());
  const HomologyReport h = ordinary_homology(x);

  EulerReport report;
  report.n = x.n();
  long long chain_sum = 0;
  for (int i = 0; i <= sys.top_degree(); ++i) {
    const long long sign = (i % 2 == 0) ? 1 : -1;
    report.ichi += sign * ih.rank(i);
    report.chi += sign * h.rank(i);
    chain_sum += sign * sys.ic_rank(i);
  }
  // Chain-level identity: the alternating sum of intersection chain ranks
  // already equals the intersection homology Euler characteristic.
  if (chain_sum != report.ichi)
    throw std::logic_error("euler_report: chain-rank identity violated");
  const long long sign_n = (report.n % 2 == 0) ? 1 : -1;
  report.signed_ih = sign_n * report.ichi >= 0;
  report.signed_lci = sign_n * report.chi >= 0;
  return report;
}

namespace {

// Rational homology of a chain complex with explicit class coordinates.
struct RationalHomology {
  std::vector<RationalMatrix> cycles;      // chain coords x z_i
  std::vector<RationalMatrix> class_proj;  // h_i x z_i
  std::vector<RationalMatrix> class_rep;   // z_i x h_i
  std::vector<int> dims;
};

RationalHomology rational_homology(const std::vector<RationalMatrix>& b) {
  const int top = static_cast<int>(b.size()) - 1;
  RationalHomology hom;
  hom.cycles.resize(top + 1);
  hom.class_proj.resize(top + 1);
  hom.class_rep.resize(top + 1);
  hom.dims.resize(top + 1);
  for (int i = 0; i <= top; ++i) hom.cycles[i] = kernel_basis(b[i]);
  for (int i = 0; i <= top; ++i) {
    const int z = hom.cycles[i].cols();
    const RationalMatrix gens =
        i == top ? RationalMatrix(b[i].cols(), 0) : b[i + 1];
    const RationalMatrix in_cycles = solve_in_span(hom.cycles[i], gens);
    const SmithResult<BigRational> s =
        smith_normal_form(in_cycles, {true, true, false, false});
    std::vector<int> rest;
    for (int j = s.rank; j < z; ++j) rest.push_back(j);
    hom.class_proj[i] = s.u.select_rows(rest);
    hom.class_rep[i] = s.u_inv.select_cols(rest);
    hom.dims[i] = z - s.rank;
  }
  return hom;
}

RationalMatrix rationalize(const IntMatrix& m) { return to_rational(m); }

}  // namespace

PairSequenceCheck pair_sequence_check(const StratifiedComplex& x,
                                      const std::vector<Simplex>& sub) {
  x.require_full_subcomplex(sub);
  const AllowableChainSystem sys = build_allowable_system(x);
  const int top = sys.top_degree();

  std::vector<QuotientSplit> split(top + 1);
  for (int i = 0; i <= top; ++i)
    split[i] = split_off(sys.ic_basis(i), sub_simplex_rows(x, sub, i));

  // Boundaries of the three complexes, over the rationals.
  std::vector<RationalMatrix> b_sub(top + 1), b_tot(top + 1), b_rel(top + 1);
  b_sub[0] = RationalMatrix(0, split[0].sub_basis.cols());
  b_tot[0] = RationalMatrix(0, sys.ic_rank(0));
  b_rel[0] = RationalMatrix(0, split[0].projection.rows());
  for (int i = 1; i <= top; ++i) {
    const RationalMatrix bi = rationalize(sys.ic_boundary(i));
    b_tot[i] = bi;
    b_sub[i] = solve_in_span(rationalize(split[i - 1].sub_basis),
                             bi * rationalize(split[i].sub_basis));
    b_rel[i] = rationalize(split[i - 1].projection) * bi *
               rationalize(split[i].lift);
  }

  const RationalHomology hw = rational_homology(b_sub);
  const RationalHomology hx = rational_homology(b_tot);
  const RationalHomology hq = rational_homology(b_rel);

  PairSequenceCheck check;
  for (int i = 0; i <= top; ++i) {
    check.sub_ranks.push_back(hw.dims[i]);
    check.total_ranks.push_back(hx.dims[i]);
    check.relative_ranks.push_back(hq.dims[i]);
  }

  // Assemble ... -> H_i(W) -> H_i(X) -> H_i(X,U) -> H_{i-1}(W) -> ... as a
  // flat list of spaces and maps, top degree first.
  std::vector<int> dims;
  std::vector<RationalMatrix> maps;  // maps[t] : space t -> space t+1
  for (int i = top; i >= 0; --i) {
    const RationalMatrix w_reps = hw.cycles[i] * hw.class_rep[i];
    const RationalMatrix incl = hx.class_proj[i] *
                                solve_in_span(hx.cycles[i],
                                              rationalize(split[i].sub_basis) *
                                                  w_reps);
    const RationalMatrix x_reps = hx.cycles[i] * hx.class_rep[i];
    const RationalMatrix proj =
        hq.class_proj[i] *
        solve_in_span(hq.cycles[i], rationalize(split[i].projection) * x_reps);
    dims.push_back(hw.dims[i]);
    maps.push_back(incl);
    dims.push_back(hx.dims[i]);
    maps.push_back(proj);
    dims.push_back(hq.dims[i]);
    if (i > 0) {
      // Connecting map: lift a relative class, take its boundary, read it
      // in the sub complex.
      const RationalMatrix q_reps = hq.cycles[i] * hq.class_rep[i];
      const RationalMatrix lifted = rationalize(split[i].lift) * q_reps;
      const RationalMatrix bd = rationalize(sys.ic_boundary(i)) * lifted;
      const RationalMatrix in_sub =
          solve_in_span(rationalize(split[i - 1].sub_basis), bd);
      const RationalMatrix conn =
          hw.class_proj[i - 1] * solve_in_span(hw.cycles[i - 1], in_sub);
      maps.push_back(conn);
    }
  }

  check.exact = true;
  for (size_t t = 0; t < dims.size() && check.exact; ++t) {
    const int incoming_rank =
        t == 0 ? 0 : rank_over_fractions(maps[t - 1]);
    const int outgoing_kernel =
        t + 1 == dims.size()
            ? dims[t]
            : dims[t] - rank_over_fractions(maps[t]);
    if (t > 0 && t < maps.size() && !(maps[t] * maps[t - 1]).is_zero()) {
      check.exact = false;
      check.detail = "nonzero composition at node " + std::to_string(t);
      break;
    }
    if (incoming_rank != outgoing_kernel) {
      check.exact = false;
      check.detail = "rank mismatch at node " + std::to_string(t) + ": im " +
                     std::to_string(incoming_rank) + ", ker " +
                     std::to_string(outgoing_kernel);
    }
  }
  return check;
}

}  // namespace strathom
