/*
 * stratified.hpp
 *
 * Stratified simplicial complexes: a finite simplicial complex given by its
 * maximal simplices, a declared complex dimension n, and a stratification
 * assigning each simplex to a stratum of some formal complex dimension.
 * The top stratum is the unique stratum of complex dimension n; simplices
 * without an explicit assignment belong to it.
 *
 * Validation covers the pseudomanifold and compatibility conditions; the
 * fullness test is the gate that makes simplicial intersection homology
 * well-defined downstream.
 */

#ifndef STRATHOM_STRATIFIED_HPP
#define STRATHOM_STRATIFIED_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strathom/errors.hpp"
#include "strathom/matrix.hpp"

namespace strathom {

class Simplex {
 public:
  Simplex() = default;
  /// Vertices are sorted; duplicate ids are rejected.
  explicit Simplex(std::vector<int> vertices);

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  const std::vector<int>& vertices() const { return vertices_; }

  /// Codimension-one faces in drop-position order (position j carries the
  /// boundary sign (-1)^j).
  std::vector<Simplex> facets() const;
  /// All nonempty faces, this simplex included.
  std::vector<Simplex> faces() const;
  bool has_vertex(int v) const;
  bool contains(const Simplex& other) const;

  bool operator==(const Simplex& o) const { return vertices_ == o.vertices_; }
  bool operator!=(const Simplex& o) const { return !(*this == o); }
  bool operator<(const Simplex& o) const { return vertices_ < o.vertices_; }

  std::string to_string() const;

 private:
  std::vector<int> vertices_;
};

struct Stratum {
  std::string id;
  int complex_dim = 0;  // the formal dimension d_S; codimension is n - d_S
};

struct ValidationReport {
  struct Check {
    bool ok = true;
    std::string detail;
    std::optional<Simplex> witness;
  };
  Check simplicial;
  Check pure_dimensional;
  Check pseudomanifold;
  Check stratification;
  Check fullness;
  Check even_codimension;

  bool ok() const;
  /// Name of the first failing flag, empty when all pass.
  std::string first_failure() const;
  std::vector<std::pair<std::string, const Check*>> items() const;
};

class StratifiedComplex {
 public:
  StratifiedComplex(int vertex_count, std::vector<Simplex> maximal,
                    int complex_dim, std::vector<Stratum> strata,
                    std::map<Simplex, std::string> assignment);

  int vertex_count() const { return vertex_count_; }
  /// Declared complex dimension.
  int n() const { return n_; }
  /// Real dimension of the maximal simplices.
  int top_dim() const { return top_dim_; }

  const std::vector<Simplex>& maximal_simplices() const { return maximal_; }
  const std::vector<Stratum>& strata() const { return strata_; }
  int top_stratum() const { return top_stratum_; }
  bool is_singular(int stratum_index) const {
    return stratum_index != top_stratum_;
  }
  /// Complex codimension n - d_S of a stratum.
  int codim(int stratum_index) const {
    return n_ - strata_[stratum_index].complex_dim;
  }

  /// Simplices of one dimension in canonical (lexicographic) order.
  const std::vector<Simplex>& simplices(int dim) const;
  int simplex_count(int dim) const;
  int simplex_index(const Simplex& s) const;
  bool has_simplex(const Simplex& s) const;
  std::vector<Simplex> all_simplices() const;

  int stratum_of(const Simplex& s) const;
  /// Explicit (singular) part of the assignment, canonical for emission.
  std::map<Simplex, std::string> singular_assignment() const;

  ValidationReport validate() const;
  bool is_full() const;
  /// First simplex violating the fullness condition, if any.
  std::optional<Simplex> fullness_violation() const;
  /// Throws ValidationError unless validate() passes and the triangulation
  /// is full; used as the gate in front of homological computations.
  void require_valid_and_full() const;

  /// Matrix of the simplicial boundary C_degree -> C_{degree-1} with the
  /// sorted-vertex orientation convention.
  IntMatrix boundary_matrix(int degree) const;

  /// The induced subcomplex on a vertex set (always a full subcomplex).
  std::vector<Simplex> induced_subcomplex(const std::vector<int>& verts) const;
  /// Throws ValidationError unless sub is a full subcomplex of this complex.
  void require_full_subcomplex(const std::vector<Simplex>& sub) const;
  /// Open star: all simplices with at least one vertex in the subcomplex.
  std::vector<Simplex> open_star(const std::vector<Simplex>& sub) const;

 private:
  int vertex_count_ = 0;
  std::vector<Simplex> maximal_;
  int n_ = 0;
  std::vector<Stratum> strata_;
  std::map<Simplex, std::string> assignment_;

  int top_dim_ = 0;
  int top_stratum_ = -1;
  std::vector<std::vector<Simplex>> by_dim_;
  std::map<Simplex, int> index_;
  std::map<Simplex, int> stratum_of_;
};

struct Subdivision {
  StratifiedComplex complex;
  /// Original face -> barycenter vertex id in the subdivided complex.
  std::map<Simplex, int> face_vertex;
};

/// Barycentric subdivision with inherited strata: each new simplex lies in
/// the stratum of the largest original face in its flag. Vertex ids are the
/// positions of the originating faces in the canonical face enumeration.
Subdivision barycentric_subdivision(const StratifiedComplex& x);

/// Chain map C_degree(x) -> C_degree(sd.complex) realizing the subdivision.
IntMatrix subdivision_chain_map(const StratifiedComplex& x,
                                const Subdivision& sd, int degree);

}  // namespace strathom

#endif
