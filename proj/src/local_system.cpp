#include "strathom/local_system.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace strathom {

long long Cocycle::value(int a, int b) const {
  if (a == b) return 0;
  const bool flip = a > b;
  if (flip) std::swap(a, b);
  auto it = values_.find({a, b});
  if (it == values_.end()) return 0;
  return flip ? -it->second : it->second;
}

void Cocycle::set(int a, int b, long long v) {
  if (a == b) throw std::invalid_argument("cocycle edge with equal endpoints");
  const bool flip = a > b;
  if (flip) std::swap(a, b);
  if (flip) v = -v;
  if (v == 0)
    values_.erase({a, b});
  else
    values_[{a, b}] = v;
}

Cocycle add(const Cocycle& a, const Cocycle& b) {
  Cocycle out = a;
  for (const auto& [e, v] : b.entries())
    out.set(e.first, e.second, out.value(e.first, e.second) + v);
  return out;
}

Cocycle scale(const Cocycle& a, long long k) {
  Cocycle out;
  for (const auto& [e, v] : a.entries()) out.set(e.first, e.second, v * k);
  return out;
}

Cocycle coboundary_cocycle(const StratifiedComplex& x,
                           const std::vector<long long>& potential) {
  if (static_cast<int>(potential.size()) != x.vertex_count())
    throw std::invalid_argument("potential size != vertex count");
  Cocycle out;
  for (const auto& e : x.simplices(1)) {
    const int a = e.vertices()[0], b = e.vertices()[1];
    out.set(a, b, potential[b] - potential[a]);
  }
  return out;
}

CocycleCheck validate_cocycle(const StratifiedComplex& x, const Cocycle& w) {
  CocycleCheck check;
  for (const auto& tri : x.simplices(2)) {
    const auto& v = tri.vertices();
    if (w.value(v[0], v[1]) + w.value(v[1], v[2]) - w.value(v[0], v[2]) != 0) {
      check.valid = false;
      check.violation = tri;
      return check;
    }
  }
  // Evaluate on an integral basis of the 1-cycle lattice. The cocycle
  // condition kills boundaries, so these values generate the image of the
  // induced map on first homology.
  const IntMatrix cycles = kernel_basis(x.boundary_matrix(1));
  const auto& edges = x.simplices(1);
  BigInt g(0);
  for (int j = 0; j < cycles.cols(); ++j) {
    BigInt val(0);
    for (int i = 0; i < cycles.rows(); ++i) {
      const BigInt c = cycles.at(i, j);
      if (signum(c) == 0) continue;
      const auto& v = edges[i].vertices();
      val += c * BigInt(static_cast<long>(w.value(v[0], v[1])));
    }
    check.cycle_values.push_back(val);
    g = gcd(g, val);
  }
  check.surjective = (g == 1);
  return check;
}

void require_valid_cocycle(const StratifiedComplex& x, const Cocycle& w) {
  const CocycleCheck check = validate_cocycle(x, w);
  if (!check.valid)
    throw ValidationError("cocycle condition violated on triangle " +
                          check.violation->to_string());
}

Gauge spanning_tree_gauge(const StratifiedComplex& x, const Cocycle& w,
                          GaugeTree tree) {
  require_valid_cocycle(x, w);
  std::vector<std::vector<int>> adjacency(x.vertex_count());
  for (const auto& e : x.simplices(1)) {
    adjacency[e.vertices()[0]].push_back(e.vertices()[1]);
    adjacency[e.vertices()[1]].push_back(e.vertices()[0]);
  }
  const bool ascending = tree == GaugeTree::BfsFromLowest;
  for (auto& nbrs : adjacency) {
    std::sort(nbrs.begin(), nbrs.end());
    if (!ascending) std::reverse(nbrs.begin(), nbrs.end());
  }

  std::vector<int> roots;
  for (const auto& v : x.simplices(0)) roots.push_back(v.vertices()[0]);
  if (!ascending) std::reverse(roots.begin(), roots.end());

  Gauge gauge;
  gauge.potential.assign(x.vertex_count(), 0);
  std::vector<bool> seen(x.vertex_count(), false);
  for (int root : roots) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<int> queue = {root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adjacency[u]) {
        if (seen[v]) continue;
        seen[v] = true;
        gauge.potential[v] = gauge.potential[u] + w.value(u, v);
        queue.push_back(v);
      }
    }
  }
  return gauge;
}

LaurentMatrix twisted_boundary(const StratifiedComplex& x, const Cocycle& w,
                               int degree, GaugeTree tree) {
  if (degree < 0 || degree > x.top_dim())
    throw std::out_of_range("twisted_boundary: degree out of range");
  const Gauge gauge = spanning_tree_gauge(x, w, tree);
  const auto& domain = x.simplices(degree);
  const int rows = degree == 0 ? 0 : x.simplex_count(degree - 1);
  LaurentMatrix m(rows, static_cast<int>(domain.size()));
  if (degree == 0) return m;
  for (size_t j = 0; j < domain.size(); ++j) {
    const auto& verts = domain[j].vertices();
    const auto facets = domain[j].facets();
    for (size_t p = 0; p < facets.size(); ++p) {
      const int i = x.simplex_index(facets[p]);
      // Dropping the lowest vertex moves the basepoint of the face lift;
      // every other face keeps it, hence exponent zero.
      const int expo =
          p == 0 ? static_cast<int>(gauge.value(w, verts[0], verts[1])) : 0;
      const BigRational sign(p % 2 == 0 ? 1 : -1);
      m.set(i, static_cast<int>(j), LaurentPoly::term(sign, expo));
    }
  }
  return m;
}

TwistedChainSystem build_twisted_system(const StratifiedComplex& x,
                                        const Cocycle& w, GaugeTree tree) {
  x.require_valid_and_full();
  require_valid_cocycle(x, w);
  const int top = x.top_dim();
  TwistedChainSystem sys;
  sys.allowable.resize(top + 1);
  sys.ic_basis.resize(top + 1);
  sys.ic_boundary.resize(top + 1);
  for (int i = 0; i <= top; ++i) sys.allowable[i] = allowable_simplices(x, i);

  std::vector<LaurentMatrix> boundary(top + 1);
  for (int i = 0; i <= top; ++i) boundary[i] = twisted_boundary(x, w, i, tree);

  for (int i = 0; i <= top; ++i) {
    const int n_i = x.simplex_count(i);
    LaurentMatrix embed(n_i, static_cast<int>(sys.allowable[i].size()));
    for (size_t j = 0; j < sys.allowable[i].size(); ++j)
      embed.set(sys.allowable[i][j], static_cast<int>(j), LaurentPoly(1L));
    if (i == 0) {
      sys.ic_basis[0] = embed;
      continue;
    }
    std::vector<int> outside;
    {
      std::vector<bool> in(x.simplex_count(i - 1), false);
      for (int r : sys.allowable[i - 1]) in[r] = true;
      for (int r = 0; r < x.simplex_count(i - 1); ++r)
        if (!in[r]) outside.push_back(r);
    }
    const LaurentMatrix restricted =
        boundary[i].select_rows(outside).select_cols(sys.allowable[i]);
    sys.ic_basis[i] = embed * kernel_basis(restricted);
  }
  for (int i = 0; i <= top; ++i) {
    if (i == 0) {
      sys.ic_boundary[0] = LaurentMatrix(0, sys.ic_basis[0].cols());
      continue;
    }
    sys.ic_boundary[i] =
        solve_in_span(sys.ic_basis[i - 1], boundary[i] * sys.ic_basis[i]);
  }
  return sys;
}

TwistedReport twisted_intersection_homology(const StratifiedComplex& x,
                                            const Cocycle& w, GaugeTree tree) {
  return homology_of_complex(build_twisted_system(x, w, tree).ic_boundary);
}

TwistedReport twisted_ordinary_homology(const StratifiedComplex& x,
                                        const Cocycle& w, GaugeTree tree) {
  std::vector<LaurentMatrix> boundaries;
  for (int i = 0; i <= x.top_dim(); ++i)
    boundaries.push_back(twisted_boundary(x, w, i, tree));
  return homology_of_complex(boundaries);
}

Cocycle subdivide_cocycle(const StratifiedComplex& x, const Subdivision& sd,
                          const Cocycle& w) {
  require_valid_cocycle(x, w);
  std::vector<const Simplex*> face_of(sd.face_vertex.size(), nullptr);
  for (const auto& [face, id] : sd.face_vertex) face_of[id] = &face;
  Cocycle out;
  for (const auto& e : sd.complex.simplices(1)) {
    const Simplex& f = *face_of[e.vertices()[0]];
    const Simplex& g = *face_of[e.vertices()[1]];
    const Simplex& small = f.dim() < g.dim() ? f : g;
    const Simplex& large = f.dim() < g.dim() ? g : f;
    if (!large.contains(small))
      throw std::logic_error("subdivide_cocycle: edge is not a face chain");
    const long long v =
        w.value(small.vertices()[0], large.vertices()[0]);
    if (v != 0)
      out.set(sd.face_vertex.at(small), sd.face_vertex.at(large), v);
  }
  return out;
}

namespace {

// A lift of a simplex in the infinite cyclic cover: base vertices paired
// with integer levels.
struct LiftedSimplex {
  std::vector<std::pair<int, int>> verts;  // (vertex, level), vertex-sorted
  bool operator==(const LiftedSimplex&) const = default;
};

LiftedSimplex lift_at(const Simplex& s, const Cocycle& w, int base_level) {
  LiftedSimplex out;
  const auto& v = s.vertices();
  for (size_t k = 0; k < v.size(); ++k)
    out.verts.push_back(
        {v[k], base_level + static_cast<int>(w.value(v[0], v[k]))});
  return out;
}

LiftedSimplex translate(const LiftedSimplex& s, int shift) {
  LiftedSimplex out = s;
  for (auto& [v, level] : out.verts) level += shift;
  return out;
}

}  // namespace

CrosscheckResult cover_crosscheck(const StratifiedComplex& x,
                                  const Cocycle& w) {
  x.require_valid_and_full();
  require_valid_cocycle(x, w);
  const Gauge gauge = spanning_tree_gauge(x, w, GaugeTree::BfsFromLowest);

  CrosscheckResult res;
  for (int degree = 1; degree <= x.top_dim(); ++degree) {
    const LaurentMatrix via_gauge = twisted_boundary(x, w, degree);
    const auto& domain = x.simplices(degree);

    // Cover construction: boundary of the level-zero lift of each simplex,
    // with faces matched against deck translates of the basis lifts.
    LaurentMatrix via_cover(x.simplex_count(degree - 1),
                            static_cast<int>(domain.size()));
    for (size_t j = 0; j < domain.size(); ++j) {
      const LiftedSimplex lifted = lift_at(domain[j], w, 0);
      const auto facets = domain[j].facets();
      for (size_t p = 0; p < facets.size(); ++p) {
        // The face of the lifted simplex, as an explicit lift.
        LiftedSimplex face;
        for (size_t k = 0; k < lifted.verts.size(); ++k)
          if (k != p) face.verts.push_back(lifted.verts[k]);
        // Deck offset: the level of the face's own basepoint.
        const int shift = face.verts[0].second;
        if (translate(lift_at(facets[p], w, 0), shift) != face) {
          res.ok = false;
          res.degree = degree;
          res.detail = "face lift is not a deck translate of the basis lift";
          return res;
        }
        const int i = x.simplex_index(facets[p]);
        via_cover.set(i, static_cast<int>(j),
                      via_cover.at(i, static_cast<int>(j)) +
                          LaurentPoly::term(BigRational(p % 2 == 0 ? 1 : -1),
                                            shift));
      }
    }

    // The two bases differ by the diagonal units t^(potential of basepoint).
    for (int i = 0; i < via_cover.rows(); ++i) {
      const int pot_row = static_cast<int>(
          gauge.potential[x.simplices(degree - 1)[i].vertices()[0]]);
      for (size_t j = 0; j < domain.size(); ++j) {
        const int pot_col =
            static_cast<int>(gauge.potential[domain[j].vertices()[0]]);
        const LaurentPoly expected =
            via_cover.at(i, static_cast<int>(j)).shifted(pot_col - pot_row);
        if (expected != via_gauge.at(i, static_cast<int>(j))) {
          res.ok = false;
          res.degree = degree;
          res.row = i;
          res.col = static_cast<int>(j);
          res.detail = "entry mismatch: gauge " +
                       via_gauge.at(i, static_cast<int>(j)).to_string() +
                       " vs cover " + expected.to_string();
          return res;
        }
      }
    }
  }
  return res;
}

WitnessReport euler_witness(const StratifiedComplex& x, const Cocycle& w,
                            int n) {
  const CocycleCheck check = validate_cocycle(x, w);
  if (!check.valid)
    throw ValidationError("euler_witness: invalid cocycle");
  if (!check.surjective)
    throw ValidationError(
        "euler_witness: cocycle does not induce a surjection onto the "
        "integers");

  WitnessReport report;
  report.n = n;
  const TwistedReport ih = twisted_intersection_homology(x, w);
  const TwistedReport h = twisted_ordinary_homology(x, w);
  for (int i = 0; i <= ih.top_degree(); ++i)
    report.ih_ranks.push_back(ih.rank(i));
  for (int i = 0; i <= h.top_degree(); ++i) report.h_ranks.push_back(h.rank(i));

  const EulerReport euler = euler_report(x);
  report.ichi = euler.ichi;
  report.chi = euler.chi;

  long long ih_sum = 0, h_sum = 0;
  for (size_t i = 0; i < report.ih_ranks.size(); ++i) {
    const long long sign = (i % 2 == 0) ? 1 : -1;
    ih_sum += sign * report.ih_ranks[i];
    if (static_cast<int>(i) != n && report.ih_ranks[i] != 0)
      report.ih_offending.push_back(static_cast<int>(i));
  }
  for (size_t i = 0; i < report.h_ranks.size(); ++i) {
    const long long sign = (i % 2 == 0) ? 1 : -1;
    h_sum += sign * report.h_ranks[i];
    if (static_cast<int>(i) != n && report.h_ranks[i] != 0)
      report.h_offending.push_back(static_cast<int>(i));
  }
  report.ih_identity_ok = (ih_sum == report.ichi);
  report.h_identity_ok = (h_sum == report.chi);
  report.ih_applicable = report.ih_offending.empty();
  report.h_applicable = report.h_offending.empty();
  const long long sign_n = (n % 2 == 0) ? 1 : -1;
  const int ih_mid = n <= ih.top_degree() && n >= 0 ? report.ih_ranks[n] : 0;
  const int h_mid = n <= h.top_degree() && n >= 0 ? report.h_ranks[n] : 0;
  report.ih_witness = sign_n * ih_mid;
  report.h_witness = sign_n * h_mid;
  return report;
}

}  // namespace strathom
