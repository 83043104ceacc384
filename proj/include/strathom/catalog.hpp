/*
 * catalog.hpp
 *
 * Deterministic builders for the stratified test spaces and cocycles used
 * throughout the test and acceptance suites. Entries model subvarieties of
 * abelian varieties (an elliptic curve, a smooth theta divisor, a nodal
 * curve of geometric genus one) together with a rational nodal curve that
 * admits no abelian embedding and serves as the negative control for the
 * sign checks.
 */

#ifndef STRATHOM_CATALOG_HPP
#define STRATHOM_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strathom/local_system.hpp"
#include "strathom/stratified.hpp"

namespace strathom::catalog {

struct Entry {
  Entry(std::string entry_name, std::string entry_description,
        StratifiedComplex entry_complex)
      : name(std::move(entry_name)),
        description(std::move(entry_description)),
        complex(std::move(entry_complex)) {}

  std::string name;
  std::string description;
  StratifiedComplex complex;
  bool abelian_model = false;     // expected to satisfy the signed-IH check
  bool lci_model = false;         // expected to satisfy the signed-chi check
  bool negative_control = false;  // expected to fail both sign checks
  bool closed = true;             // satisfies the two-coface condition
  std::vector<std::pair<std::string, Cocycle>> cocycles;

  struct Fixtures {
    std::optional<std::vector<int>> ih_ranks;
    std::optional<std::vector<int>> h_ranks;
    bool torsion_free = true;
    std::optional<long long> ichi, chi;
    // Expected twisted intersection homology ranks, by cocycle name.
    std::map<std::string, std::vector<int>> twisted_ih_ranks;
    std::string source;  // derivation note for the expected values
  } fixtures;

  const Cocycle& cocycle(const std::string& cocycle_name) const;
};

/// Vertex identification with the simpliciality safety check: identified
/// vertices within one component must be at combinatorial distance >= 3 so
/// that the quotient is again a simplicial complex.
struct Identification {
  std::vector<Simplex> maximal;
  std::vector<int> vertex_map;  // old id -> new id
  int vertex_count = 0;
};
Identification identify(int vertex_count, const std::vector<Simplex>& maximal,
                        const std::vector<std::pair<int, int>>& pairs);

/// Parameterized builders. Recognized names and parameters:
///   circle(k=3)            cycle with k vertices
///   torus                  seven-vertex triangulation
///   genus_g(g=2)           iterated connected sum of tori
///   pinched_torus          sphere with its poles identified, node stratum
///   nodal_genus1           torus with two distance-3 vertices identified
///   suspension(k=4)        suspension of circle(k), poles stratum
///   cone(k=6)              cone over circle(k), apex stratum
///   product(a=3, b=3)      staircase product of two circles
Entry build(const std::string& name, const std::vector<int>& params = {});

/// Canonical catalog entries (fixed parameters, fixtures attached).
const std::vector<std::string>& names();
Entry entry(const std::string& name);

}  // namespace strathom::catalog

#endif
