#include <doctest.h>

#include <cstdlib>

#include "strathom/catalog.hpp"
#include "strathom/io.hpp"

using namespace strathom;

TEST_CASE("complex format") {
  SUBCASE("canonical emission of the pinched torus") {
    const auto x = catalog::entry("pinched_torus").complex;
    const std::string text = io::emit_complex(x);
    CHECK(text.substr(0, 20) == "strathom-complex v1\n");
    CHECK(text.find("n=1\n") != std::string::npos);
    CHECK(text.find("vertices=7\n") != std::string::npos);
    CHECK(text.find("strata=top 1; node 0\n") != std::string::npos);
    CHECK(text.find("assign=0 -> node\n") != std::string::npos);
  }
  SUBCASE("parse errors") {
    CHECK_THROWS_AS(io::parse_complex("nonsense\n"), ParseError);
    CHECK_THROWS_AS(io::parse_complex("strathom-complex v1\nn=1\n"),
                    ParseError);  // missing fields
    CHECK_THROWS_AS(
        io::parse_complex("strathom-complex v1\nn=1\nvertices=3\n"
                          "maximal=0 0 1\nstrata=top 1\n"),
        ParseError);  // repeated vertex
    CHECK_THROWS_AS(
        io::parse_complex("strathom-complex v1\nn=1\nvertices=3\n"
                          "maximal=0 1 2\nstrata=top 1\nassign=0 -> ghost\n"),
        ParseError);  // unknown stratum
    CHECK_THROWS_AS(
        io::parse_complex("strathom-complex v1\nn=1\nvertices=3\n"
                          "maximal=0 1 2\nstrata=top 0\n"),
        ParseError);  // no stratum of the declared dimension
    CHECK_THROWS_AS(
        io::parse_complex("strathom-complex v1\nn=x\nvertices=3\n"
                          "maximal=0 1 2\nstrata=top 1\n"),
        ParseError);  // non-numeric field
  }
}

TEST_CASE("cocycle format") {
  const auto e = catalog::entry("circle");
  SUBCASE("round trip") {
    const std::string text = io::emit_cocycle(e.cocycle("meridian"));
    CHECK(text == "strathom-cocycle v1\nedge 0 2 -1\n");
    const Cocycle parsed = io::parse_cocycle(text, e.complex);
    CHECK(parsed == e.cocycle("meridian"));
  }
  SUBCASE("reversed orientation normalizes") {
    const Cocycle w =
        io::parse_cocycle("strathom-cocycle v1\nedge 2 0 1\n", e.complex);
    CHECK(w.value(2, 0) == 1);
    CHECK(w == e.cocycle("meridian"));
  }
  SUBCASE("rejects duplicates, unknown edges, and broken conditions") {
    CHECK_THROWS_AS(io::parse_cocycle(
                        "strathom-cocycle v1\nedge 0 1 1\nedge 1 0 2\n",
                        e.complex),
                    ParseError);
    CHECK_THROWS_AS(
        io::parse_cocycle("strathom-cocycle v1\nedge 0 5 1\n", e.complex),
        ParseError);
    const auto torus = catalog::entry("torus");
    CHECK_THROWS_AS(
        io::parse_cocycle("strathom-cocycle v1\nedge 0 1 1\n", torus.complex),
        ValidationError);
    CHECK_THROWS_AS(
        io::parse_cocycle("strathom-cocycle v1\nedge 0 1 one\n", e.complex),
        ParseError);
  }
}

TEST_CASE("content hash") {
  CHECK(io::content_hash("") == "fnv1a64:cbf29ce484222325");
  CHECK(io::content_hash("strathom") != io::content_hash("strathom "));
  CHECK(io::content_hash("abc") == io::content_hash("abc"));
}

TEST_CASE("thread cap does not change any report") {
  const auto e = catalog::entry("genus2");
  const auto baseline = intersection_homology(e.complex);
  const auto twisted = twisted_intersection_homology(e.complex, e.cocycle("w1"));
  setenv("STRATHOM_THREADS", "4", 1);
  CHECK(intersection_homology(e.complex) == baseline);
  CHECK(twisted_intersection_homology(e.complex, e.cocycle("w1")) == twisted);
  unsetenv("STRATHOM_THREADS");
}

TEST_CASE("deterministic json output") {
  const auto e = catalog::entry("pinched_torus");
  const auto once = io::to_json(intersection_homology(e.complex)).dump();
  const auto twice = io::to_json(intersection_homology(e.complex)).dump();
  CHECK(once == twice);
  CHECK(once == R"({"0":{"rank":1,"torsion":[]},"1":{"rank":0,"torsion":[]},"2":{"rank":1,"torsion":[]}})");

  const auto twisted = io::to_json(
      twisted_intersection_homology(e.complex, e.cocycle("nodeloop")));
  CHECK(twisted.dump() ==
        io::to_json(twisted_intersection_homology(e.complex,
                                                  e.cocycle("nodeloop")))
            .dump());
  const auto euler = io::to_json(euler_report(e.complex));
  CHECK(euler.dump() ==
        R"({"ichi":2,"chi":1,"n":1,"signed_ih":false,"signed_lci":false})");
}
