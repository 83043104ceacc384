#include <doctest.h>

#include "strathom/catalog.hpp"
#include "strathom/local_system.hpp"

using namespace strathom;

namespace {

std::vector<int> ranks_of(const TwistedReport& r) {
  std::vector<int> out;
  for (const auto& g : r.groups) out.push_back(g.rank);
  return out;
}

LaurentPoly t_minus_1() { return LaurentPoly::t_power(1) - LaurentPoly(1L); }

}  // namespace

TEST_CASE("cocycle container") {
  Cocycle w;
  w.set(3, 1, 5);
  CHECK(w.value(3, 1) == 5);
  CHECK(w.value(1, 3) == -5);
  CHECK(w.value(0, 2) == 0);
  w.set(1, 3, 5);
  CHECK(w.value(3, 1) == -5);
  CHECK(scale(w, 2).value(1, 3) == 10);
  CHECK(add(w, scale(w, -1)).entries().empty());
}

TEST_CASE("cocycle validation") {
  SUBCASE("a coboundary is valid, evaluates to zero, is not surjective") {
    const auto x = catalog::entry("torus").complex;
    std::vector<long long> pot(7, 0);
    pot[2] = 3;
    pot[5] = -1;
    const Cocycle w = coboundary_cocycle(x, pot);
    const auto check = validate_cocycle(x, w);
    CHECK(check.valid);
    CHECK_FALSE(check.surjective);
    for (const auto& v : check.cycle_values) CHECK(v == 0);
  }
  SUBCASE("the torus shift cocycles are valid and surjective") {
    const auto e = catalog::entry("torus");
    for (const char* name : {"shift1", "shift2"}) {
      const auto check = validate_cocycle(e.complex, e.cocycle(name));
      CHECK(check.valid);
      CHECK(check.surjective);
    }
  }
  SUBCASE("doubling the circle meridian loses surjectivity") {
    const auto e = catalog::entry("circle");
    const auto check = validate_cocycle(e.complex, e.cocycle("double"));
    CHECK(check.valid);
    CHECK_FALSE(check.surjective);
    BigInt g(0);
    for (const auto& v : check.cycle_values) g = gcd(g, v);
    CHECK(g == 2);
  }
  SUBCASE("a broken cocycle reports the offending triangle") {
    const auto x = catalog::entry("torus").complex;
    Cocycle w;
    w.set(0, 1, 1);  // no compensation on any triangle containing (0,1)
    const auto check = validate_cocycle(x, w);
    CHECK_FALSE(check.valid);
    REQUIRE(check.violation.has_value());
    CHECK(check.violation->dim() == 2);
    CHECK_THROWS_AS(require_valid_cocycle(x, w), ValidationError);
  }
}

TEST_CASE("twisted boundary of the circle") {
  const auto x = catalog::entry("circle").complex;
  const Cocycle w = catalog::entry("circle").cocycle("meridian");
  const LaurentMatrix d1 = twisted_boundary(x, w, 1);

  // Gauge from the lowest-vertex tree: edges (0,1) and (0,2) carry exponent
  // zero, the closing edge (1,2) carries the class.
  const int e01 = x.simplex_index(Simplex({0, 1}));
  const int e02 = x.simplex_index(Simplex({0, 2}));
  const int e12 = x.simplex_index(Simplex({1, 2}));
  CHECK(d1.at(1, e01) == LaurentPoly(1L));
  CHECK(d1.at(0, e01) == LaurentPoly(-1L));
  CHECK(d1.at(2, e02) == LaurentPoly(1L));
  CHECK(d1.at(0, e02) == LaurentPoly(-1L));
  CHECK(d1.at(2, e12) == LaurentPoly::t_power(1));
  CHECK(d1.at(1, e12) == LaurentPoly(-1L));

  // Specializing t := 1 recovers the ordinary boundary.
  CHECK(specialize_at_one(d1) == x.boundary_matrix(1));
}

TEST_CASE("zero cocycle twists nothing") {
  const auto x = catalog::entry("torus").complex;
  for (int i = 0; i <= 2; ++i)
    CHECK(twisted_boundary(x, Cocycle{}, i) == to_laurent(x.boundary_matrix(i)));
}

TEST_CASE("specialization and square-zero across the catalog") {
  for (const auto& name : catalog::names()) {
    const auto e = catalog::entry(name);
    if (!e.closed) continue;
    for (const auto& [cname, w] : e.cocycles) {
      CAPTURE(name);
      CAPTURE(cname);
      std::vector<LaurentMatrix> tb;
      for (int i = 0; i <= e.complex.top_dim(); ++i)
        tb.push_back(twisted_boundary(e.complex, w, i));
      for (int i = 0; i <= e.complex.top_dim(); ++i) {
        CHECK(specialize_at_one(tb[i]) == e.complex.boundary_matrix(i));
        if (i >= 2) CHECK((tb[i - 1] * tb[i]).is_zero());
      }
    }
  }
}

TEST_CASE("twisted intersection homology fixtures") {
  SUBCASE("circle with the meridian: torsion t-1 in degree zero only") {
    const auto e = catalog::entry("circle");
    const auto rep = twisted_intersection_homology(e.complex,
                                                   e.cocycle("meridian"));
    CHECK(ranks_of(rep) == std::vector<int>{0, 0});
    REQUIRE(rep.groups[0].torsion.size() == 1);
    CHECK(rep.groups[0].torsion[0] == t_minus_1());
    CHECK(rep.groups[1].torsion.empty());
  }
  SUBCASE("doubled meridian: torsion t^2 - 1") {
    const auto e = catalog::entry("circle");
    const auto rep =
        twisted_intersection_homology(e.complex, e.cocycle("double"));
    CHECK(ranks_of(rep) == std::vector<int>{0, 0});
    REQUIRE(rep.groups[0].torsion.size() == 1);
    CHECK(rep.groups[0].torsion[0] ==
          LaurentPoly::t_power(2) - LaurentPoly(1L));
  }
  SUBCASE("torus with a surjective class: all degrees torsion") {
    const auto e = catalog::entry("torus");
    const auto rep = twisted_intersection_homology(e.complex,
                                                   e.cocycle("shift1"));
    CHECK(ranks_of(rep) == std::vector<int>{0, 0, 0});
    REQUIRE(rep.groups[0].torsion.size() == 1);
    CHECK(rep.groups[0].torsion[0] == t_minus_1());
  }
  SUBCASE("genus-2 with a surjective class: ranks (0,2,0)") {
    const auto e = catalog::entry("genus2");
    CHECK(ranks_of(twisted_intersection_homology(e.complex,
                                                 e.cocycle("w1"))) ==
          std::vector<int>{0, 2, 0});
  }
  SUBCASE("pinched torus: allowable components of the cover are spheres") {
    const auto e = catalog::entry("pinched_torus");
    CHECK(ranks_of(twisted_intersection_homology(e.complex,
                                                 e.cocycle("nodeloop"))) ==
          std::vector<int>{1, 0, 1});
  }
}

TEST_CASE("gauge independence") {
  for (const char* name : {"circle", "torus", "pinched_torus"}) {
    const auto e = catalog::entry(name);
    for (const auto& [cname, w] : e.cocycles) {
      CAPTURE(name);
      CAPTURE(cname);
      CHECK(twisted_intersection_homology(e.complex, w,
                                          GaugeTree::BfsFromLowest) ==
            twisted_intersection_homology(e.complex, w,
                                          GaugeTree::BfsFromHighest));
    }
  }
}

TEST_CASE("cohomologous cocycles give the same report") {
  const auto e = catalog::entry("torus");
  std::vector<long long> pot(7, 0);
  pot[1] = 2;
  pot[4] = -3;
  const Cocycle shifted =
      add(e.cocycle("shift1"), coboundary_cocycle(e.complex, pot));
  CHECK(validate_cocycle(e.complex, shifted).valid);
  CHECK(twisted_intersection_homology(e.complex, e.cocycle("shift1")) ==
        twisted_intersection_homology(e.complex, shifted));
}

TEST_CASE("cover crosscheck agrees on catalog pairs") {
  for (const char* name : {"circle", "torus", "pinched_torus", "genus2"}) {
    const auto e = catalog::entry(name);
    for (const auto& [cname, w] : e.cocycles) {
      CAPTURE(name);
      CAPTURE(cname);
      const auto res = cover_crosscheck(e.complex, w);
      CHECK(res.ok);
      if (!res.ok) MESSAGE(res.detail);
    }
  }
}

TEST_CASE("euler witness") {
  SUBCASE("genus-2: applicable, witness -2 concentrated in degree one") {
    const auto e = catalog::entry("genus2");
    const auto rep = euler_witness(e.complex, e.cocycle("w1"), 1);
    CHECK(rep.ih_applicable);
    CHECK(rep.ih_ranks == std::vector<int>{0, 2, 0});
    CHECK(rep.ih_witness == -2);
    CHECK(rep.ichi == -2);
    CHECK(rep.ih_identity_ok);
    CHECK(rep.h_applicable);
    CHECK(rep.h_witness == -2);
    CHECK(rep.h_identity_ok);
  }
  SUBCASE("nodal genus-one: witness 0, ordinary variant carries chi = -1") {
    const auto e = catalog::entry("nodal_genus1");
    const auto rep = euler_witness(e.complex, e.cocycle("m1"), 1);
    CHECK(rep.ih_applicable);
    CHECK(rep.ih_witness == 0);
    CHECK(rep.ichi == 0);
    CHECK(rep.ih_identity_ok);
    // The ordinary-homology variant of the witness.
    CHECK(rep.h_applicable);
    CHECK(rep.h_ranks == std::vector<int>{0, 1, 0});
    CHECK(rep.h_witness == -1);
    CHECK(rep.chi == -1);
    CHECK(rep.h_identity_ok);
  }
  SUBCASE("pinched torus: criterion inapplicable, degrees 0 and 2 offend") {
    const auto e = catalog::entry("pinched_torus");
    const auto rep = euler_witness(e.complex, e.cocycle("nodeloop"), 1);
    CHECK_FALSE(rep.ih_applicable);
    CHECK(rep.ih_offending == std::vector<int>{0, 2});
    CHECK(rep.ih_identity_ok);  // the euler identity still holds
  }
  SUBCASE("non-surjective cocycles are rejected") {
    const auto e = catalog::entry("circle");
    CHECK_THROWS_AS(euler_witness(e.complex, e.cocycle("double"), 1),
                    ValidationError);
    CHECK_THROWS_AS(euler_witness(e.complex, Cocycle{}, 1), ValidationError);
  }
}

TEST_CASE("disconnected complexes use a spanning forest") {
  // Two disjoint circles; the cocycle winds around the first one only.
  std::vector<Simplex> maximal;
  for (int i = 0; i < 3; ++i) {
    maximal.push_back(Simplex({i, (i + 1) % 3}));
    maximal.push_back(Simplex({3 + i, 3 + (i + 1) % 3}));
  }
  const StratifiedComplex x(6, maximal, 1, {{"top", 1}}, {});
  REQUIRE(x.validate().ok());
  Cocycle w;
  w.set(2, 0, 1);
  REQUIRE(validate_cocycle(x, w).valid);

  const auto rep = twisted_intersection_homology(x, w);
  // Twisted component contributes torsion only; the untwisted one keeps its
  // free ranks. The alternating rank sum still matches the Euler number.
  CHECK(ranks_of(rep) == std::vector<int>{1, 1});
  CHECK(euler_report(x).ichi == 0);
  CHECK(cover_crosscheck(x, w).ok);
  CHECK(twisted_intersection_homology(x, w, GaugeTree::BfsFromHighest) == rep);
}

TEST_CASE("cocycle subdivision") {
  const auto e = catalog::entry("pinched_torus");
  const auto sd = barycentric_subdivision(e.complex);
  const Cocycle w = subdivide_cocycle(e.complex, sd, e.cocycle("nodeloop"));
  const auto check = validate_cocycle(sd.complex, w);
  CHECK(check.valid);
  CHECK(check.surjective);
  CHECK(twisted_intersection_homology(sd.complex, w) ==
        twisted_intersection_homology(e.complex, e.cocycle("nodeloop")));
}
