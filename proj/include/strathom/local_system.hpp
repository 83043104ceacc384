/*
 * local_system.hpp
 *
 * Rank-one local systems presented by integer simplicial 1-cocycles, and
 * the twisted intersection chain complexes they induce over the Laurent
 * polynomial ring.
 *
 * A cocycle stands for a homomorphism from the fundamental group to the
 * integers through its values on 1-cycles; the associated representation
 * sends a loop of value k to t^k. The chain model of the infinite cyclic
 * cover is finitely presented by twisting each boundary entry with a power
 * of t determined by a spanning-tree gauge.
 */

#ifndef STRATHOM_LOCAL_SYSTEM_HPP
#define STRATHOM_LOCAL_SYSTEM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strathom/ih.hpp"
#include "strathom/stratified.hpp"

namespace strathom {

class Cocycle {
 public:
  /// Value on the oriented edge a -> b; antisymmetric, 0 when absent.
  long long value(int a, int b) const;
  void set(int a, int b, long long v);
  /// Nonzero values keyed by sorted vertex pair.
  const std::map<std::pair<int, int>, long long>& entries() const {
    return values_;
  }

  bool operator==(const Cocycle&) const = default;

 private:
  std::map<std::pair<int, int>, long long> values_;
};

Cocycle add(const Cocycle& a, const Cocycle& b);
Cocycle scale(const Cocycle& a, long long k);
/// The coboundary of a vertex potential: value(a,b) = pot[b] - pot[a] on
/// every edge of the complex.
Cocycle coboundary_cocycle(const StratifiedComplex& x,
                           const std::vector<long long>& potential);

struct CocycleCheck {
  bool valid = true;
  std::optional<Simplex> violation;  // first triangle breaking the condition
  /// Values on an integral basis of the 1-cycle lattice (spans first
  /// homology, so their gcd generates the image in the integers).
  std::vector<BigInt> cycle_values;
  bool surjective = false;
};

CocycleCheck validate_cocycle(const StratifiedComplex& x, const Cocycle& w);
void require_valid_cocycle(const StratifiedComplex& x, const Cocycle& w);

/// Deterministic spanning-tree choice for the lift gauge.
enum class GaugeTree { BfsFromLowest, BfsFromHighest };

struct Gauge {
  std::vector<long long> potential;  // per vertex id; 0 along tree edges
  long long value(const Cocycle& w, int a, int b) const {
    return w.value(a, b) - (potential[b] - potential[a]);
  }
};

Gauge spanning_tree_gauge(const StratifiedComplex& x, const Cocycle& w,
                          GaugeTree tree = GaugeTree::BfsFromLowest);

/// Boundary of the twisted chain complex on the simplex basis. The entry for
/// the face dropping the lowest vertex carries t^(gauged value); all other
/// faces carry plain signs, so specializing t := 1 recovers the ordinary
/// boundary matrix.
LaurentMatrix twisted_boundary(const StratifiedComplex& x, const Cocycle& w,
                               int degree,
                               GaugeTree tree = GaugeTree::BfsFromLowest);

using TwistedReport = ChainHomologyReport<LaurentPoly>;

/// Twisted analogue of the allowable chain system, over the Laurent ring.
struct TwistedChainSystem {
  std::vector<std::vector<int>> allowable;
  std::vector<LaurentMatrix> ic_basis;
  std::vector<LaurentMatrix> ic_boundary;
};

TwistedChainSystem build_twisted_system(
    const StratifiedComplex& x, const Cocycle& w,
    GaugeTree tree = GaugeTree::BfsFromLowest);

TwistedReport twisted_intersection_homology(
    const StratifiedComplex& x, const Cocycle& w,
    GaugeTree tree = GaugeTree::BfsFromLowest);

/// Twisted homology of the full simplicial chain complex (no allowability).
TwistedReport twisted_ordinary_homology(
    const StratifiedComplex& x, const Cocycle& w,
    GaugeTree tree = GaugeTree::BfsFromLowest);

/// Cocycle on the barycentric subdivision representing the same class: a
/// subdivided edge joins the barycenters of faces f < g and carries the
/// original value from the lowest vertex of f to the lowest vertex of g
/// (a path inside g, so the triangle condition transfers).
Cocycle subdivide_cocycle(const StratifiedComplex& x, const Subdivision& sd,
                          const Cocycle& w);

/// Builds the twisted boundary twice: once through the gauged representation
/// and once by enumerating explicit lifts of simplices in the cyclic cover
/// and decomposing their faces into deck translates of the basis lifts. The
/// two agree up to the diagonal unit change prescribed by the gauge
/// potentials; any entry mismatch is reported.
struct CrosscheckResult {
  bool ok = true;
  int degree = -1;
  int row = -1, col = -1;
  std::string detail;
};
CrosscheckResult cover_crosscheck(const StratifiedComplex& x, const Cocycle& w);

/// Signed Euler characteristic witness: when the twisted ranks vanish away
/// from the middle degree, the untwisted Euler characteristic is carried by
/// the middle twisted rank alone, with the predicted sign. One-directional:
/// nonzero off-degree ranks make the criterion inapplicable, not refuted.
struct WitnessReport {
  int n = 0;
  std::vector<int> ih_ranks, h_ranks;
  bool ih_applicable = false, h_applicable = false;
  std::vector<int> ih_offending, h_offending;
  long long ichi = 0, chi = 0;
  long long ih_witness = 0, h_witness = 0;  // (-1)^n * middle rank
  bool ih_identity_ok = false, h_identity_ok = false;
};

WitnessReport euler_witness(const StratifiedComplex& x, const Cocycle& w,
                            int n);

}  // namespace strathom

#endif
