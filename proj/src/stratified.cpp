#include "strathom/stratified.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace strathom {

Simplex::Simplex(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (size_t i = 0; i + 1 < vertices_.size(); ++i)
    if (vertices_[i] == vertices_[i + 1])
      throw std::invalid_argument("Simplex: repeated vertex");
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() <= 1) return out;
  for (size_t j = 0; j < vertices_.size(); ++j) {
    std::vector<int> v;
    v.reserve(vertices_.size() - 1);
    for (size_t k = 0; k < vertices_.size(); ++k)
      if (k != j) v.push_back(vertices_[k]);
    out.emplace_back(std::move(v));
  }
  return out;
}

std::vector<Simplex> Simplex::faces() const {
  std::vector<Simplex> out;
  const size_t m = vertices_.size();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> v;
    for (size_t k = 0; k < m; ++k)
      if (mask & (1u << k)) v.push_back(vertices_[k]);
    out.emplace_back(std::move(v));
  }
  return out;
}

bool Simplex::has_vertex(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::contains(const Simplex& other) const {
  return std::includes(vertices_.begin(), vertices_.end(),
                       other.vertices_.begin(), other.vertices_.end());
}

std::string Simplex::to_string() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out << " ";
    out << vertices_[i];
  }
  out << ")";
  return out.str();
}

bool ValidationReport::ok() const {
  for (const auto& [name, c] : items())
    if (!c->ok) return false;
  return true;
}

std::string ValidationReport::first_failure() const {
  for (const auto& [name, c] : items())
    if (!c->ok) return name;
  return "";
}

std::vector<std::pair<std::string, const ValidationReport::Check*>>
ValidationReport::items() const {
  return {{"is-simplicial-complex", &simplicial},
          {"pure-dimensional", &pure_dimensional},
          {"pseudomanifold", &pseudomanifold},
          {"stratification-compatible", &stratification},
          {"full-triangulation", &fullness},
          {"even-codimension", &even_codimension}};
}

StratifiedComplex::StratifiedComplex(int vertex_count,
                                     std::vector<Simplex> maximal,
                                     int complex_dim,
                                     std::vector<Stratum> strata,
                                     std::map<Simplex, std::string> assignment)
    : vertex_count_(vertex_count),
      maximal_(std::move(maximal)),
      n_(complex_dim),
      strata_(std::move(strata)),
      assignment_(std::move(assignment)) {
  if (maximal_.empty()) throw std::invalid_argument("empty complex");
  std::sort(maximal_.begin(), maximal_.end());
  maximal_.erase(std::unique(maximal_.begin(), maximal_.end()),
                 maximal_.end());

  for (size_t s = 0; s < strata_.size(); ++s) {
    if (strata_[s].complex_dim == n_) {
      if (top_stratum_ >= 0)
        throw std::invalid_argument("more than one top stratum");
      top_stratum_ = static_cast<int>(s);
    }
    for (size_t t = s + 1; t < strata_.size(); ++t)
      if (strata_[s].id == strata_[t].id)
        throw std::invalid_argument("duplicate stratum id");
  }
  if (top_stratum_ < 0)
    throw std::invalid_argument("no stratum of the declared complex dim");

  top_dim_ = 0;
  std::set<Simplex> closure;
  for (const auto& m : maximal_) {
    top_dim_ = std::max(top_dim_, m.dim());
    for (auto& f : m.faces()) closure.insert(f);
  }
  by_dim_.assign(top_dim_ + 1, {});
  for (const auto& s : closure) by_dim_[s.dim()].push_back(s);
  for (auto& level : by_dim_) {
    std::sort(level.begin(), level.end());
    for (size_t i = 0; i < level.size(); ++i)
      index_[level[i]] = static_cast<int>(i);
  }

  std::map<std::string, int> stratum_index;
  for (size_t s = 0; s < strata_.size(); ++s)
    stratum_index[strata_[s].id] = static_cast<int>(s);
  for (const auto& s : closure) stratum_of_[s] = top_stratum_;
  for (const auto& [simplex, id] : assignment_) {
    auto it = stratum_index.find(id);
    if (it == stratum_index.end())
      throw std::invalid_argument("assignment to unknown stratum '" + id +
                                  "'");
    auto sit = stratum_of_.find(simplex);
    if (sit == stratum_of_.end())
      throw std::invalid_argument("assignment of simplex " +
                                  simplex.to_string() +
                                  " that is not in the complex");
    sit->second = it->second;
  }
}

const std::vector<Simplex>& StratifiedComplex::simplices(int dim) const {
  static const std::vector<Simplex> empty;
  if (dim < 0 || dim > top_dim_) return empty;
  return by_dim_[dim];
}

int StratifiedComplex::simplex_count(int dim) const {
  return static_cast<int>(simplices(dim).size());
}

int StratifiedComplex::simplex_index(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end())
    throw std::invalid_argument("simplex " + s.to_string() +
                                " not in complex");
  return it->second;
}

bool StratifiedComplex::has_simplex(const Simplex& s) const {
  return index_.count(s) > 0;
}

std::vector<Simplex> StratifiedComplex::all_simplices() const {
  std::vector<Simplex> out;
  for (const auto& level : by_dim_)
    out.insert(out.end(), level.begin(), level.end());
  return out;
}

int StratifiedComplex::stratum_of(const Simplex& s) const {
  auto it = stratum_of_.find(s);
  if (it == stratum_of_.end())
    throw std::invalid_argument("stratum_of: simplex not in complex");
  return it->second;
}

std::map<Simplex, std::string> StratifiedComplex::singular_assignment() const {
  std::map<Simplex, std::string> out;
  for (const auto& [s, idx] : stratum_of_)
    if (idx != top_stratum_) out[s] = strata_[idx].id;
  return out;
}

ValidationReport StratifiedComplex::validate() const {
  ValidationReport report;

  for (const auto& m : maximal_) {
    if (m.vertices().front() < 0 || m.vertices().back() >= vertex_count_) {
      report.simplicial = {false, "vertex id out of range", m};
      break;
    }
  }
  if (report.simplicial.ok) {
    for (size_t a = 0; a < maximal_.size() && report.simplicial.ok; ++a)
      for (size_t b = 0; b < maximal_.size(); ++b)
        if (a != b && maximal_[b].contains(maximal_[a])) {
          report.simplicial = {false, "maximal simplex contained in another",
                               maximal_[a]};
          break;
        }
  }

  for (const auto& m : maximal_)
    if (m.dim() != top_dim_) {
      report.pure_dimensional = {false, "maximal simplex of lower dimension",
                                 m};
      break;
    }

  if (top_dim_ >= 1) {
    for (const auto& facet : by_dim_[top_dim_ - 1]) {
      int cofaces = 0;
      for (const auto& m : by_dim_[top_dim_])
        if (m.contains(facet)) ++cofaces;
      if (cofaces != 2) {
        report.pseudomanifold = {
            false,
            "face of " + std::to_string(cofaces) + " top simplices, want 2",
            facet};
        break;
      }
    }
  }

  // Compatibility: strata strictly decrease in formal dimension along the
  // face relation, and the singular set has real codimension at least two.
  for (const auto& [s, idx] : stratum_of_) {
    if (!report.stratification.ok) break;
    if (s.dim() == 0) continue;
    for (const auto& f : s.facets()) {
      const int fidx = stratum_of_.at(f);
      if (fidx != idx &&
          strata_[fidx].complex_dim >= strata_[idx].complex_dim) {
        report.stratification = {
            false,
            "face in stratum '" + strata_[fidx].id +
                "' of dimension >= that of '" + strata_[idx].id + "'",
            f};
        break;
      }
    }
  }
  if (report.stratification.ok) {
    for (const auto& [s, idx] : stratum_of_)
      if (idx != top_stratum_ && s.dim() > top_dim_ - 2) {
        report.stratification = {false,
                                 "singular simplex of real dimension > top-2",
                                 s};
        break;
      }
  }

  if (report.stratification.ok) {
    if (const auto witness = fullness_violation())
      report.fullness = {false, "triangulation is not full", witness};
  }

  std::vector<int> real_dim(strata_.size(), -1);
  std::vector<Simplex> real_dim_witness(strata_.size());
  for (const auto& [s, idx] : stratum_of_)
    if (s.dim() > real_dim[idx]) {
      real_dim[idx] = s.dim();
      real_dim_witness[idx] = s;
    }
  for (size_t s = 0; s < strata_.size(); ++s) {
    if (real_dim[s] < 0) continue;  // empty stratum
    if ((top_dim_ - real_dim[s]) % 2 != 0) {
      report.even_codimension = {
          false, "stratum '" + strata_[s].id + "' has odd real codimension",
          real_dim_witness[s]};
      break;
    }
  }

  return report;
}

bool StratifiedComplex::is_full() const { return !fullness_violation(); }

std::optional<Simplex> StratifiedComplex::fullness_violation() const {
  // Distinct filtration levels below the top.
  std::set<int> levels;
  for (size_t s = 0; s < strata_.size(); ++s)
    if (static_cast<int>(s) != top_stratum_)
      levels.insert(strata_[s].complex_dim);

  for (int j : levels) {
    // Closed filtration piece: closure of all strata of complex dim <= j.
    std::set<Simplex> piece;
    for (const auto& [s, idx] : stratum_of_)
      if (strata_[idx].complex_dim <= j && idx != top_stratum_)
        for (auto& f : s.faces()) piece.insert(f);

    for (const auto& [s, idx] : stratum_of_) {
      (void)idx;
      std::set<int> verts;
      bool any = false;
      for (const auto& f : s.faces())
        if (piece.count(f)) {
          any = true;
          for (int v : f.vertices()) verts.insert(v);
        }
      if (!any) continue;
      const Simplex span(std::vector<int>(verts.begin(), verts.end()));
      if (!s.contains(span) || !piece.count(span)) return s;
    }
  }
  return std::nullopt;
}

void StratifiedComplex::require_valid_and_full() const {
  const ValidationReport report = validate();
  if (!report.ok())
    throw ValidationError("complex fails validation: " +
                          report.first_failure());
}

IntMatrix StratifiedComplex::boundary_matrix(int degree) const {
  if (degree < 0 || degree > top_dim_)
    throw std::out_of_range("boundary_matrix: degree out of range");
  const auto& domain = by_dim_[degree];
  const int rows = degree == 0 ? 0 : simplex_count(degree - 1);
  IntMatrix m(rows, static_cast<int>(domain.size()));
  if (degree == 0) return m;
  for (size_t j = 0; j < domain.size(); ++j) {
    const auto facets = domain[j].facets();
    for (size_t p = 0; p < facets.size(); ++p) {
      const int i = simplex_index(facets[p]);
      m.set(i, static_cast<int>(j), BigInt(p % 2 == 0 ? 1 : -1));
    }
  }
  return m;
}

std::vector<Simplex> StratifiedComplex::induced_subcomplex(
    const std::vector<int>& verts) const {
  const std::set<int> vs(verts.begin(), verts.end());
  std::vector<Simplex> out;
  for (const auto& [s, idx] : index_) {
    (void)idx;
    bool inside = true;
    for (int v : s.vertices())
      if (!vs.count(v)) {
        inside = false;
        break;
      }
    if (inside) out.push_back(s);
  }
  return out;
}

void StratifiedComplex::require_full_subcomplex(
    const std::vector<Simplex>& sub) const {
  std::set<int> verts;
  std::set<Simplex> members(sub.begin(), sub.end());
  for (const auto& s : sub) {
    if (!has_simplex(s))
      throw ValidationError("subcomplex member " + s.to_string() +
                            " is not a simplex of the complex");
    for (int v : s.vertices()) verts.insert(v);
  }
  const auto induced =
      induced_subcomplex(std::vector<int>(verts.begin(), verts.end()));
  for (const auto& s : induced)
    if (!members.count(s))
      throw ValidationError("not a full subcomplex: missing " + s.to_string());
  if (members.size() != induced.size())
    throw ValidationError("not a full subcomplex: extra members");
}

std::vector<Simplex> StratifiedComplex::open_star(
    const std::vector<Simplex>& sub) const {
  require_full_subcomplex(sub);
  std::set<int> verts;
  for (const auto& s : sub)
    for (int v : s.vertices()) verts.insert(v);
  std::vector<Simplex> out;
  for (const auto& [s, idx] : index_) {
    (void)idx;
    for (int v : s.vertices())
      if (verts.count(v)) {
        out.push_back(s);
        break;
      }
  }
  return out;
}

Subdivision barycentric_subdivision(const StratifiedComplex& x) {
  // Barycenter ids follow the canonical face enumeration (dim, then lex).
  std::map<Simplex, int> face_vertex;
  int next = 0;
  for (int d = 0; d <= x.top_dim(); ++d)
    for (const auto& s : x.simplices(d)) face_vertex[s] = next++;

  // Maximal simplices of the subdivision: complete flags inside maximal
  // simplices, one per vertex ordering.
  std::vector<Simplex> maximal;
  for (const auto& m : x.maximal_simplices()) {
    std::vector<int> perm = m.vertices();
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<int> chain_ids;
      std::vector<int> prefix;
      for (int v : perm) {
        prefix.push_back(v);
        chain_ids.push_back(face_vertex.at(Simplex(prefix)));
      }
      maximal.emplace_back(chain_ids);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  // A subdivided simplex is a chain of faces and lies in the stratum of the
  // largest face of its chain; explicit entries are needed only where that
  // face is singular.
  std::map<Simplex, std::string> assignment;
  for (int d = 0; d <= x.top_dim(); ++d) {
    for (const auto& s : x.simplices(d)) {
      const int stratum = x.stratum_of(s);
      if (!x.is_singular(stratum)) continue;
      const std::string& id = x.strata()[stratum].id;
      std::vector<std::vector<int>> chains;
      std::vector<std::pair<Simplex, std::vector<int>>> stack;
      stack.push_back({s, {face_vertex.at(s)}});
      while (!stack.empty()) {
        auto [low, ids] = stack.back();
        stack.pop_back();
        chains.push_back(ids);
        for (const auto& g : low.faces())
          if (g != low) {
            std::vector<int> ext = {face_vertex.at(g)};
            ext.insert(ext.end(), ids.begin(), ids.end());
            stack.push_back({g, ext});
          }
      }
      for (auto& ids : chains) assignment[Simplex(ids)] = id;
    }
  }

  StratifiedComplex sd(next, std::move(maximal), x.n(), x.strata(),
                       std::move(assignment));
  return Subdivision{std::move(sd), std::move(face_vertex)};
}

namespace {

using Chain = std::map<Simplex, BigInt>;

void add_to(Chain& dst, const Simplex& s, const BigInt& c) {
  auto it = dst.find(s);
  if (it == dst.end()) {
    if (signum(c) != 0) dst[s] = c;
    return;
  }
  it->second += c;
  if (signum(it->second) == 0) dst.erase(it);
}

// Cone of a chain at an apex vertex, with the sorted-orientation sign.
Chain cone(const Chain& c, int apex) {
  Chain out;
  for (const auto& [s, coeff] : c) {
    std::vector<int> v = s.vertices();
    const auto pos = std::lower_bound(v.begin(), v.end(), apex);
    const int p = static_cast<int>(pos - v.begin());
    v.insert(pos, apex);
    add_to(out, Simplex(v), (p % 2 == 0) ? coeff : -coeff);
  }
  return out;
}

Chain subdivided_chain(const Simplex& s, const std::map<Simplex, int>& ids) {
  if (s.dim() == 0) {
    Chain c;
    c[Simplex({ids.at(s)})] = BigInt(1);
    return c;
  }
  Chain boundary;
  const auto facets = s.facets();
  for (size_t p = 0; p < facets.size(); ++p) {
    const Chain piece = subdivided_chain(facets[p], ids);
    for (const auto& [t, coeff] : piece)
      add_to(boundary, t, p % 2 == 0 ? coeff : -coeff);
  }
  return cone(boundary, ids.at(s));
}

}  // namespace

IntMatrix subdivision_chain_map(const StratifiedComplex& x,
                                const Subdivision& sd, int degree) {
  const auto& domain = x.simplices(degree);
  IntMatrix m(sd.complex.simplex_count(degree),
              static_cast<int>(domain.size()));
  for (size_t j = 0; j < domain.size(); ++j) {
    const Chain c = subdivided_chain(domain[j], sd.face_vertex);
    for (const auto& [t, coeff] : c)
      m.set(sd.complex.simplex_index(t), static_cast<int>(j), coeff);
  }
  return m;
}

}  // namespace strathom
