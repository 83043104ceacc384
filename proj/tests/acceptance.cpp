// Acceptance suite: every criterion below is checked exactly (integer and
// polynomial equalities, no tolerances) with wall-clock budgets where the
// criterion states one. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fail.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "random_matrices.hpp"
#include "strathom/catalog.hpp"
#include "strathom/io.hpp"
#include "strathom/local_system.hpp"

using namespace strathom;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok,
            const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": "
            << name;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<int> ranks_of(const HomologyReport& r) {
  std::vector<int> out;
  for (const auto& g : r.groups) out.push_back(g.rank);
  return out;
}

std::string join_ranks(const std::vector<int>& v) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

// 1. The allowability conditions discriminate: the pinched torus has
//    intersection homology ranks (1,0,1) against ordinary ranks (1,1,1).
void criterion_1() {
  const auto start = Clock::now();
  const auto e = catalog::entry("pinched_torus");
  const auto ih = ranks_of(intersection_homology(e.complex));
  const auto h = ranks_of(ordinary_homology(e.complex));
  const double elapsed = seconds_since(start);
  const bool ok = ih == std::vector<int>{1, 0, 1} &&
                  h == std::vector<int>{1, 1, 1} && elapsed < 1.0;
  report(1, "allowability discriminates on the pinched torus", ok,
         "IH " + join_ranks(ih) + ", H " + join_ranks(h) + ", " +
             std::to_string(elapsed) + "s");
}

// 2. Manifold degeneration: intersection homology equals ordinary homology,
//    ranks and torsion, on the circle, the torus, and the genus-2 surface.
void criterion_2() {
  bool ok = true;
  std::string detail;
  for (const char* name : {"circle", "torus", "genus2"}) {
    const auto start = Clock::now();
    const auto e = catalog::entry(name);
    const bool same =
        intersection_homology(e.complex) == ordinary_homology(e.complex);
    const double elapsed = seconds_since(start);
    if (!same || elapsed >= 1.0) ok = false;
    detail += std::string(name) + (same ? " ok " : " MISMATCH ");
  }
  report(2, "intersection homology degenerates to homology on manifolds", ok,
         detail);
}

// 3. The twisted Euler characteristic identity: the alternating sum of
//    twisted intersection homology ranks equals the untwisted intersection
//    homology Euler characteristic, exactly, on every catalog pair.
void criterion_3() {
  bool ok = true;
  int pairs = 0;
  int complexes = 0;
  std::string detail;
  double worst = 0;
  for (const auto& name : catalog::names()) {
    const auto e = catalog::entry(name);
    if (!e.closed) continue;
    ++complexes;
    const long long ichi = euler_report(e.complex).ichi;
    for (const auto& [cname, w] : e.cocycles) {
      const auto start = Clock::now();
      const auto rep = twisted_intersection_homology(e.complex, w);
      long long sum = 0;
      for (int i = 0; i <= rep.top_degree(); ++i)
        sum += (i % 2 == 0 ? 1 : -1) * rep.rank(i);
      const double elapsed = seconds_since(start);
      worst = std::max(worst, elapsed);
      ++pairs;
      if (sum != ichi || elapsed >= 10.0) {
        ok = false;
        detail += name + "/" + cname + " sum " + std::to_string(sum) +
                  " vs ichi " + std::to_string(ichi) + "; ";
      }
    }
  }
  ok = ok && complexes >= 6 && pairs >= 2 * complexes;
  report(3, "twisted rank identity with the Euler characteristic", ok,
         std::to_string(pairs) + " pairs over " + std::to_string(complexes) +
             " complexes, worst " + std::to_string(worst) + "s" +
             (detail.empty() ? "" : "; " + detail));
}

// 4. The representation-built and cover-built twisted boundaries agree
//    entry-exactly on every catalog pair.
void criterion_4() {
  bool ok = true;
  int pairs = 0;
  std::string detail;
  for (const auto& name : catalog::names()) {
    const auto e = catalog::entry(name);
    if (!e.closed) continue;
    for (const auto& [cname, w] : e.cocycles) {
      ++pairs;
      const auto res = cover_crosscheck(e.complex, w);
      if (!res.ok) {
        ok = false;
        detail += name + "/" + cname + ": " + res.detail + "; ";
      }
    }
  }
  report(4, "two-construction crosscheck of the twisted boundary", ok,
         std::to_string(pairs) + " pairs" +
             (detail.empty() ? "" : "; " + detail));
}

// 5. Witness values: genus-2 gives twisted ranks (0,2,0) and witness
//    -2 = (-1)^1 * 2; the nodal genus-one curve gives witness 0.
void criterion_5() {
  const auto genus2 = catalog::entry("genus2");
  const auto w2 = euler_witness(genus2.complex, genus2.cocycle("w1"), 1);
  const bool genus2_ok = w2.ih_applicable &&
                         w2.ih_ranks == std::vector<int>{0, 2, 0} &&
                         w2.ih_witness == -2 && w2.ichi == -2 &&
                         w2.ih_identity_ok;
  const auto nodal = catalog::entry("nodal_genus1");
  const auto wn = euler_witness(nodal.complex, nodal.cocycle("m1"), 1);
  const bool nodal_ok = wn.ih_applicable && wn.ih_witness == 0 &&
                        wn.ichi == 0 && wn.ih_identity_ok;
  report(5, "signed Euler witnesses on the theta divisor and nodal curve",
         genus2_ok && nodal_ok,
         std::string("genus2 ") + (genus2_ok ? "ok" : "BAD") + ", nodal " +
             (nodal_ok ? "ok" : "BAD"));
}

// 6. Sign suite: abelian-model entries satisfy the signed intersection
//    homology inequality, the local-complete-intersection models satisfy
//    the signed Euler inequality, and the pinched torus (no abelian
//    embedding) must fail its sign check.
void criterion_6() {
  bool ok = true;
  std::string detail;
  int abelian = 0, lci = 0;
  for (const auto& name : catalog::names()) {
    const auto e = catalog::entry(name);
    if (!e.closed) continue;
    const auto euler = euler_report(e.complex);
    if (e.abelian_model) {
      ++abelian;
      if (!euler.signed_ih) {
        ok = false;
        detail += name + " fails signed-IH; ";
      }
    }
    if (e.lci_model) {
      ++lci;
      if (!euler.signed_lci) {
        ok = false;
        detail += name + " fails signed-chi; ";
      }
    }
    if (e.negative_control && euler.signed_ih) {
      ok = false;
      detail += name + " negative control unexpectedly passes; ";
    }
  }
  const auto pinched = euler_report(catalog::entry("pinched_torus").complex);
  if (pinched.signed_ih) {
    ok = false;
    detail += "pinched torus sign check passed but must fail; ";
  }
  report(6, "sign suite over the catalog models", ok,
         std::to_string(abelian) + " abelian models, " + std::to_string(lci) +
             " lci models, pinched torus fails as required" +
             (detail.empty() ? "" : "; " + detail));
}

// 7. Long exact sequence of the pair for star neighborhoods: zero
//    compositions and exact ranks at every node, over the rationals.
void criterion_7() {
  const std::vector<std::pair<std::string, Simplex>> pairs = {
      {"circle", Simplex({0})},        {"torus", Simplex({0})},
      {"pinched_torus", Simplex({0})}, {"pinched_torus", Simplex({1})},
      {"genus2", Simplex({2})},        {"nodal_genus1", Simplex({0})}};
  bool ok = pairs.size() >= 4;
  std::string detail;
  for (const auto& [name, vertex] : pairs) {
    const auto e = catalog::entry(name);
    const auto check = pair_sequence_check(e.complex, {vertex});
    if (!check.exact) {
      ok = false;
      detail += name + "@" + vertex.to_string() + ": " + check.detail + "; ";
    }
  }
  report(7, "long exact sequences of star-neighborhood pairs", ok,
         std::to_string(pairs.size()) + " pairs" +
             (detail.empty() ? "" : "; " + detail));
}

// 8. Invariance: one barycentric subdivision preserves every integral and
//    twisted report; changing the gauge tree preserves every twisted report.
void criterion_8() {
  bool ok = true;
  std::string detail;
  for (const auto& name : catalog::names()) {
    const auto e = catalog::entry(name);
    if (!e.closed) continue;
    const auto sd = barycentric_subdivision(e.complex);
    if (intersection_homology(e.complex) !=
            intersection_homology(sd.complex) ||
        ordinary_homology(e.complex) != ordinary_homology(sd.complex)) {
      ok = false;
      detail += name + " integral reports changed; ";
    }
    for (const auto& [cname, w] : e.cocycles) {
      const auto base = twisted_intersection_homology(e.complex, w);
      const Cocycle wsd = subdivide_cocycle(e.complex, sd, w);
      if (twisted_intersection_homology(sd.complex, wsd) != base) {
        ok = false;
        detail += name + "/" + cname + " twisted report changed; ";
      }
      if (twisted_intersection_homology(e.complex, w,
                                        GaugeTree::BfsFromHighest) != base) {
        ok = false;
        detail += name + "/" + cname + " gauge dependence; ";
      }
    }
  }
  report(8, "subdivision and gauge invariance of every report", ok, detail);
}

// 9. Normal-form property suite: 500 random integer matrices and 200 random
//    Laurent matrices satisfy the Smith postconditions, under 60 seconds.
void criterion_9() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  std::mt19937 rng(20250809);
  for (int trial = 0; trial < 500 && ok; ++trial) {
    const IntMatrix m = strathom_tests::random_int_matrix(rng);
    const auto s = smith_normal_form(m);
    if (s.u * m * s.v != s.d ||
        s.u * s.u_inv != IntMatrix::identity(m.rows()) ||
        s.v * s.v_inv != IntMatrix::identity(m.cols()) ||
        abs(determinant(s.u)) != 1 || abs(determinant(s.v)) != 1) {
      ok = false;
      detail = "integer trial " + std::to_string(trial);
    }
    for (int i = 0; i + 1 < static_cast<int>(s.diagonal.size()) && ok; ++i)
      if (signum(s.diagonal[i]) != 0 &&
          !ring_traits<BigInt>::exactly_divides(s.diagonal[i],
                                                s.diagonal[i + 1])) {
        ok = false;
        detail = "integer divisibility, trial " + std::to_string(trial);
      }
  }
  std::mt19937 rng2(8091517);
  for (int trial = 0; trial < 200 && ok; ++trial) {
    const LaurentMatrix m = strathom_tests::random_laurent_matrix(rng2);
    const auto s = smith_normal_form(m);
    if (s.u * m * s.v != s.d ||
        s.u * s.u_inv != LaurentMatrix::identity(m.rows()) ||
        s.v * s.v_inv != LaurentMatrix::identity(m.cols())) {
      ok = false;
      detail = "laurent trial " + std::to_string(trial);
    }
    for (int i = 0; i + 1 < static_cast<int>(s.diagonal.size()) && ok; ++i)
      if (!s.diagonal[i].is_zero() &&
          !s.diagonal[i].divides(s.diagonal[i + 1])) {
        ok = false;
        detail = "laurent divisibility, trial " + std::to_string(trial);
      }
  }
  const double elapsed = seconds_since(start);
  ok = ok && elapsed < 60.0;
  report(9, "normal-form property suite (500 integer + 200 laurent)", ok,
         std::to_string(elapsed) + "s" +
             (detail.empty() ? "" : "; " + detail));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (failures == 0)
    std::cout << "all acceptance criteria passed\n";
  else
    std::cout << failures << " acceptance criteria failed\n";
  return failures == 0 ? 0 : 1;
}
