#include "strathom/catalog.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace strathom::catalog {

namespace {

std::vector<Stratum> trivial_strata(int n) { return {{"top", n}}; }

// BFS distances in the 1-skeleton spanned by a maximal-simplex list.
std::vector<int> skeleton_distances(int vertex_count,
                                    const std::vector<Simplex>& maximal,
                                    int source) {
  std::vector<std::set<int>> adj(vertex_count);
  for (const auto& m : maximal) {
    const auto& v = m.vertices();
    for (size_t a = 0; a < v.size(); ++a)
      for (size_t b = a + 1; b < v.size(); ++b) {
        adj[v[a]].insert(v[b]);
        adj[v[b]].insert(v[a]);
      }
  }
  std::vector<int> dist(vertex_count, -1);
  dist[source] = 0;
  std::deque<int> queue = {source};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

}  // namespace

// Identify vertex pairs, keeping the quotient simplicial. Identified
// vertices must be at combinatorial distance at least three (or in
// different components) so that no edges or triangles collapse or double.
Identification identify(int vertex_count, const std::vector<Simplex>& maximal,
                        const std::vector<std::pair<int, int>>& pairs) {
  for (const auto& [a, b] : pairs) {
    const auto dist = skeleton_distances(vertex_count, maximal, a);
    if (dist[b] >= 0 && dist[b] < 3)
      throw ValidationError(
          "identification-distance violation: vertices " + std::to_string(a) +
          " and " + std::to_string(b) + " are at distance " +
          std::to_string(dist[b]));
  }
  std::vector<int> rep(vertex_count);
  for (int i = 0; i < vertex_count; ++i) rep[i] = i;
  for (const auto& [a, b] : pairs) {
    const int ra = std::min(rep[a], rep[b]);
    const int rb = std::max(rep[a], rep[b]);
    for (int i = 0; i < vertex_count; ++i)
      if (rep[i] == rb) rep[i] = ra;
  }
  Identification out;
  out.vertex_map.assign(vertex_count, -1);
  for (int i = 0; i < vertex_count; ++i)
    if (rep[i] == i) out.vertex_map[i] = out.vertex_count++;
  for (int i = 0; i < vertex_count; ++i)
    out.vertex_map[i] = out.vertex_map[rep[i]];
  std::set<Simplex> seen;
  for (const auto& m : maximal) {
    std::vector<int> v;
    for (int u : m.vertices()) v.push_back(out.vertex_map[u]);
    Simplex s(v);  // throws if the identification collapsed the simplex
    if (!seen.insert(s).second)
      throw ValidationError("identification produced a duplicate simplex");
    out.maximal.push_back(s);
  }
  return out;
}

namespace {

Cocycle relabel(const Cocycle& w, const std::vector<int>& vertex_map) {
  Cocycle out;
  for (const auto& [e, v] : w.entries())
    out.set(vertex_map[e.first], vertex_map[e.second],
            out.value(vertex_map[e.first], vertex_map[e.second]) + v);
  return out;
}

// --- circle ---------------------------------------------------------------

std::vector<Simplex> circle_maximal(int k) {
  if (k < 3) throw std::invalid_argument("circle needs at least 3 vertices");
  std::vector<Simplex> out;
  for (int i = 0; i < k; ++i) out.push_back(Simplex({i, (i + 1) % k}));
  return out;
}

Entry make_circle(int k) {
  StratifiedComplex x(k, circle_maximal(k), 1, trivial_strata(1), {});
  Cocycle meridian;
  meridian.set(k - 1, 0, 1);  // the cycle 0 -> 1 -> ... -> k-1 -> 0 reads +1
  Entry e("circle",
          "plain circle with " + std::to_string(k) + " vertices; auxiliary space, not a variety model",
          std::move(x));
  e.cocycles = {{"meridian", meridian},
                {"double", scale(meridian, 2)},
                {"zero", Cocycle{}}};
  e.fixtures.ih_ranks = {{1, 1}};
  e.fixtures.h_ranks = {{1, 1}};
  e.fixtures.ichi = 0;
  e.fixtures.chi = 0;
  e.fixtures.twisted_ih_ranks = {{"meridian", {0, 0}},
                                 {"double", {0, 0}},
                                 {"zero", {1, 1}}};
  e.fixtures.source =
      "hand count; twisted ranks from the line cover (contractible)";
  return e;
}

// --- seven-vertex torus ----------------------------------------------------

std::vector<Simplex> torus7_maximal() {
  std::vector<Simplex> out;
  for (int i = 0; i < 7; ++i) {
    out.push_back(Simplex({i, (i + 1) % 7, (i + 3) % 7}));
    out.push_back(Simplex({i, (i + 2) % 7, (i + 3) % 7}));
  }
  return out;
}

// Translation-invariant cocycle on the seven-vertex torus: the value on an
// edge depends only on the vertex difference class d in {1,2,3}; the
// triangle condition forces f(3) = f(1) + f(2).
Cocycle torus7_shift_cocycle(long long f1, long long f2) {
  const long long f[4] = {0, f1, f2, f1 + f2};
  Cocycle w;
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) {
      const int d = b - a;
      if (d <= 3)
        w.set(a, b, f[d]);
      else
        w.set(a, b, -f[7 - d]);
    }
  return w;
}

Entry make_torus() {
  StratifiedComplex x(7, torus7_maximal(), 1, trivial_strata(1), {});
  Entry e("torus",
          "seven-vertex torus; models an elliptic curve (an abelian " "variety of dimension one)",
          std::move(x));
  e.abelian_model = true;
  e.lci_model = true;
  e.cocycles = {{"shift1", torus7_shift_cocycle(1, 0)},
                {"shift2", torus7_shift_cocycle(0, 1)},
                {"zero", Cocycle{}}};
  e.fixtures.ih_ranks = {{1, 2, 1}};
  e.fixtures.h_ranks = {{1, 2, 1}};
  e.fixtures.ichi = 0;
  e.fixtures.chi = 0;
  e.fixtures.twisted_ih_ranks = {{"shift1", {0, 0, 0}},
                                 {"shift2", {0, 0, 0}},
                                 {"zero", {1, 2, 1}}};
  e.fixtures.source =
      "face counts 7-21+14; twisted ranks from the open-cylinder cover";
  return e;
}

// --- genus g surface --------------------------------------------------------

// Subtract a potential so the cocycle vanishes on the three edges of the
// given triangle (possible exactly because of the cocycle condition there);
// the cohomology class is unchanged.
Cocycle vanish_on_triangle(const Cocycle& w, int vertex_count, int a, int b,
                           int c) {
  std::vector<long long> pot(vertex_count, 0);
  pot[b] = w.value(a, b);
  pot[c] = w.value(a, c);
  Cocycle out;
  for (int x = 0; x < vertex_count; ++x)
    for (int y = x + 1; y < vertex_count; ++y) {
      const long long v = w.value(x, y) - (pot[y] - pot[x]);
      if (v != 0) out.set(x, y, v);
    }
  return out;
}

struct GluedSurface {
  std::vector<Simplex> maximal;
  int vertex_count = 0;
  std::vector<int> last_block_map;  // vertex map of the torus glued last
};

// Connected sum along a removed triangle: the three boundary vertices of
// the incoming torus triangle (0,1,3) are merged with the host triangle's
// vertices, boundary edges are shared, interiors stay disjoint.
GluedSurface glue_torus(const GluedSurface& host, const Simplex& host_tri) {
  GluedSurface out;
  out.vertex_count = host.vertex_count + 4;
  std::vector<int> map(7, -1);
  map[0] = host_tri.vertices()[0];
  map[1] = host_tri.vertices()[1];
  map[3] = host_tri.vertices()[2];
  int next = host.vertex_count;
  for (int v : {2, 4, 5, 6}) map[v] = next++;
  out.last_block_map = map;

  const Simplex removed({0, 1, 3});
  for (const auto& m : host.maximal)
    if (m != host_tri) out.maximal.push_back(m);
  for (const auto& m : torus7_maximal()) {
    if (m == removed) continue;
    std::vector<int> v;
    for (int u : m.vertices()) v.push_back(map[u]);
    out.maximal.push_back(Simplex(v));
  }
  return out;
}

Entry make_genus(int g) {
  if (g < 1) throw std::invalid_argument("genus_g needs g >= 1");
  if (g == 1) {
    Entry e = make_torus();
    e.name = "genus_g";
    return e;
  }
  GluedSurface surface{torus7_maximal(), 7, {}};
  Simplex removal({0, 1, 3});
  for (int step = 1; step < g; ++step) {
    surface = glue_torus(surface, removal);
    // Next removal: the image of triangle (2,4,5) of the block just glued,
    // disjoint from the identified vertices.
    const auto& map = surface.last_block_map;
    removal = Simplex({map[2], map[4], map[5]});
  }

  StratifiedComplex x(surface.vertex_count, surface.maximal, 1,
                      trivial_strata(1), {});
  Entry e(g == 2 ? "genus2" : "genus_g",
          "genus-" + std::to_string(g) + " surface as an iterated connected sum of " "seven-vertex tori; for g = 2 it models a smooth " "theta divisor in an abelian surface",
          std::move(x));
  e.abelian_model = true;
  e.lci_model = true;
  // One surjective class from each of the two outermost handles, shifted to
  // vanish on the glued triangles so the zero extension stays a cocycle.
  Cocycle w1 = vanish_on_triangle(torus7_shift_cocycle(1, 0), 7, 0, 1, 3);
  Cocycle w2 = relabel(vanish_on_triangle(torus7_shift_cocycle(1, 0), 7, 0, 1, 3),
                       surface.last_block_map);
  e.cocycles = {{"w1", w1}, {"w2", w2}};
  if (g == 2) {
    e.fixtures.ih_ranks = {{1, 4, 1}};
    e.fixtures.h_ranks = {{1, 4, 1}};
    e.fixtures.ichi = -2;
    e.fixtures.chi = -2;
    e.fixtures.twisted_ih_ranks = {{"w1", {0, 2, 0}}, {"w2", {0, 2, 0}}};
    e.fixtures.source =
        "surface classification; twisted ranks forced by the Euler identity "
        "with finitely generated cover homology away from the middle degree";
  }
  return e;
}

// --- pinched torus -----------------------------------------------------------

// Sphere triangulated as a drum: two rings of three vertices, two poles,
// poles at skeleton distance three.
std::vector<Simplex> drum_sphere_maximal() {
  std::vector<Simplex> out;
  // Top cap around pole 0 on ring {1,2,3}.
  out.push_back(Simplex({0, 1, 2}));
  out.push_back(Simplex({0, 2, 3}));
  out.push_back(Simplex({0, 1, 3}));
  // Cylinder between ring {1,2,3} and ring {4,5,6}.
  out.push_back(Simplex({1, 2, 4}));
  out.push_back(Simplex({2, 4, 5}));
  out.push_back(Simplex({2, 3, 5}));
  out.push_back(Simplex({3, 5, 6}));
  out.push_back(Simplex({1, 3, 6}));
  out.push_back(Simplex({1, 4, 6}));
  // Bottom cap around pole 7 on ring {4,5,6}.
  out.push_back(Simplex({4, 5, 7}));
  out.push_back(Simplex({5, 6, 7}));
  out.push_back(Simplex({4, 6, 7}));
  return out;
}

Entry make_pinched_torus() {
  const auto glued = identify(8, drum_sphere_maximal(), {{0, 7}});
  std::map<Simplex, std::string> assignment;
  assignment[Simplex({glued.vertex_map[0]})] = "node";
  StratifiedComplex x(glued.vertex_count, glued.maximal, 1,
                      {{"top", 1}, {"node", 0}}, assignment);
  Entry e("pinched_torus",
          "sphere with its two poles identified: a rational nodal curve, " "which admits no abelian embedding (negative control)",
          std::move(x));
  e.negative_control = true;
  Cocycle nodeloop;
  for (int r : {1, 2, 3}) nodeloop.set(0, r, 1);
  e.cocycles = {{"nodeloop", nodeloop}, {"double", scale(nodeloop, 2)}};
  e.fixtures.ih_ranks = {{1, 0, 1}};
  e.fixtures.h_ranks = {{1, 1, 1}};
  e.fixtures.ichi = 2;
  e.fixtures.chi = 1;
  e.fixtures.twisted_ih_ranks = {{"nodeloop", {1, 0, 1}}};
  e.fixtures.source =
      "normalization by the sphere; twisted ranks from the string-of-spheres "
      "cover whose allowable components are single spheres";
  return e;
}

// --- staircase products -------------------------------------------------------

int grid_id(int i, int j, int b) { return i * b + j; }

std::vector<Simplex> staircase_torus_maximal(int a, int b) {
  if (a < 3 || b < 3)
    throw std::invalid_argument("staircase product needs both factors >= 3");
  std::vector<Simplex> out;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      const int u = grid_id(i, j, b);
      const int right = grid_id((i + 1) % a, j, b);
      const int down = grid_id(i, (j + 1) % b, b);
      const int diag = grid_id((i + 1) % a, (j + 1) % b, b);
      out.push_back(Simplex({u, right, diag}));
      out.push_back(Simplex({u, down, diag}));
    }
  return out;
}

// Pullbacks of the circle meridians under the two projections: +1 exactly
// on the edges crossing the wrap seam of the chosen factor.
Cocycle staircase_meridian(int a, int b, bool first_factor) {
  Cocycle w;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      const int u = grid_id(i, j, b);
      const int right = grid_id((i + 1) % a, j, b);
      const int down = grid_id(i, (j + 1) % b, b);
      const int diag = grid_id((i + 1) % a, (j + 1) % b, b);
      if (first_factor) {
        if (i == a - 1) {
          w.set(u, right, 1);
          w.set(u, diag, 1);
        }
      } else {
        if (j == b - 1) {
          w.set(u, down, 1);
          w.set(u, diag, 1);
        }
      }
    }
  return w;
}

Entry make_product(int a, int b) {
  StratifiedComplex x(a * b, staircase_torus_maximal(a, b), 1,
                      trivial_strata(1), {});
  Entry e("product_torus",
          "staircase product of circle(" + std::to_string(a) + ") and circle(" + std::to_string(b) + "); models an elliptic curve",
          std::move(x));
  e.abelian_model = true;
  e.lci_model = true;
  e.cocycles = {{"m1", staircase_meridian(a, b, true)},
                {"m2", staircase_meridian(a, b, false)}};
  e.fixtures.ih_ranks = {{1, 2, 1}};
  e.fixtures.h_ranks = {{1, 2, 1}};
  e.fixtures.ichi = 0;
  e.fixtures.chi = 0;
  e.fixtures.twisted_ih_ranks = {{"m1", {0, 0, 0}}, {"m2", {0, 0, 0}}};
  e.fixtures.source = "same reports as the seven-vertex torus";
  return e;
}

// --- nodal genus-one curve ------------------------------------------------------

Entry make_nodal_genus1() {
  const int a = 6, b = 3;
  const auto maximal = staircase_torus_maximal(a, b);
  // Identify (0,0) with (3,0): distance three in the staircase skeleton.
  const auto glued =
      identify(a * b, maximal, {{grid_id(0, 0, b), grid_id(3, 0, b)}});
  std::map<Simplex, std::string> assignment;
  assignment[Simplex({glued.vertex_map[grid_id(0, 0, b)]})] = "node";
  StratifiedComplex x(glued.vertex_count, glued.maximal, 1,
                      {{"top", 1}, {"node", 0}}, assignment);
  Entry e("nodal_genus1",
          "torus with two distance-three vertices identified: a nodal " "curve of geometric genus one in an abelian surface",
          std::move(x));
  e.abelian_model = true;
  e.lci_model = true;  // a curve on a smooth surface is a divisor
  e.cocycles = {
      {"m1", relabel(staircase_meridian(a, b, true), glued.vertex_map)},
      {"m2", relabel(staircase_meridian(a, b, false), glued.vertex_map)}};
  e.fixtures.ih_ranks = {{1, 2, 1}};
  e.fixtures.h_ranks = {{1, 3, 1}};
  e.fixtures.ichi = 0;
  e.fixtures.chi = -1;
  e.fixtures.twisted_ih_ranks = {{"m1", {0, 0, 0}}, {"m2", {0, 0, 0}}};
  e.fixtures.source =
      "normalization by the torus and the vertex-identification count";
  return e;
}

// --- suspension and cone -----------------------------------------------------

Entry make_suspension(int k) {
  const auto base = circle_maximal(k);
  std::vector<Simplex> maximal;
  const int north = k, south = k + 1;
  for (const auto& edge : base) {
    std::vector<int> up = edge.vertices(), down = edge.vertices();
    up.push_back(north);
    down.push_back(south);
    maximal.push_back(Simplex(up));
    maximal.push_back(Simplex(down));
  }
  std::map<Simplex, std::string> assignment;
  assignment[Simplex({north})] = "poles";
  assignment[Simplex({south})] = "poles";
  StratifiedComplex x(k + 2, maximal, 1, {{"top", 1}, {"poles", 0}},
                      assignment);
  Entry e("suspension_circle",
          "suspension of circle(" + std::to_string(k) + ") with the poles as a point stratum: a sphere, the model of a " "smooth rational curve (no abelian embedding)",
          std::move(x));
  Cocycle cob;
  {
    std::vector<long long> pot(k + 2, 0);
    pot[0] = 1;
    cob = coboundary_cocycle(e.complex, pot);
  }
  e.cocycles = {{"zero", Cocycle{}}, {"cob", cob}};
  e.fixtures.ih_ranks = {{1, 0, 1}};
  e.fixtures.h_ranks = {{1, 0, 1}};
  e.fixtures.ichi = 2;
  e.fixtures.chi = 2;
  e.fixtures.twisted_ih_ranks = {{"zero", {1, 0, 1}}, {"cob", {1, 0, 1}}};
  e.fixtures.source = "sphere homology; point strata do not change it";
  return e;
}

Entry make_cone(int k) {
  const auto base = circle_maximal(k);
  std::vector<Simplex> maximal;
  const int apex = k;
  for (const auto& edge : base) {
    std::vector<int> v = edge.vertices();
    v.push_back(apex);
    maximal.push_back(Simplex(v));
  }
  std::map<Simplex, std::string> assignment;
  assignment[Simplex({apex})] = "apex";
  StratifiedComplex x(k + 1, maximal, 1, {{"top", 1}, {"apex", 0}},
                      assignment);
  Entry e("cone_hexagon",
          "cone over circle(" + std::to_string(k) + ") with its apex as a point stratum; has boundary, " "kept for validation and fullness fixtures only",
          std::move(x));
  e.closed = false;
  e.cocycles = {{"zero", Cocycle{}}};
  e.fixtures.source = "fullness fixture; each triangle meets the apex "
                      "stratum in exactly one vertex";
  return e;
}

}  // namespace

const Cocycle& Entry::cocycle(const std::string& cocycle_name) const {
  for (const auto& [nm, w] : cocycles)
    if (nm == cocycle_name) return w;
  throw std::invalid_argument("no cocycle named '" + cocycle_name +
                              "' in entry " + name);
}

Entry build(const std::string& name, const std::vector<int>& params) {
  auto param = [&](size_t i, int fallback) {
    return i < params.size() ? params[i] : fallback;
  };
  if (name == "circle") return make_circle(param(0, 3));
  if (name == "torus") return make_torus();
  if (name == "genus_g") return make_genus(param(0, 2));
  if (name == "pinched_torus") return make_pinched_torus();
  if (name == "nodal_genus1") return make_nodal_genus1();
  if (name == "suspension") return make_suspension(param(0, 4));
  if (name == "cone") return make_cone(param(0, 6));
  if (name == "product") return make_product(param(0, 3), param(1, 3));
  throw std::invalid_argument("unknown catalog builder '" + name + "'");
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> list = {
      "circle",        "torus",         "product_torus",
      "genus2",        "pinched_torus", "nodal_genus1",
      "suspension_circle", "cone_hexagon"};
  return list;
}

Entry entry(const std::string& name) {
  if (name == "circle") return make_circle(3);
  if (name == "torus") return make_torus();
  if (name == "product_torus") return make_product(3, 3);
  if (name == "genus2") return make_genus(2);
  if (name == "pinched_torus") return make_pinched_torus();
  if (name == "nodal_genus1") return make_nodal_genus1();
  if (name == "suspension_circle") return make_suspension(4);
  if (name == "cone_hexagon") return make_cone(6);
  throw std::invalid_argument("unknown catalog entry '" + name + "'");
}

}  // namespace strathom::catalog
