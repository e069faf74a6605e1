#include <doctest.h>

#include <algorithm>

#include "etcc/cell_complex.hpp"
#include "etcc/error.hpp"
#include "etcc/isomorphism.hpp"
#include "support.hpp"

using namespace etcc;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no etcc::Error thrown");
  return Errc::InvalidCell;
}

}  // namespace

TEST_CASE("grid torus counts and layout") {
  const CellComplex x = test::grid_torus(4, 3);
  CHECK(x.count(0) == 12);
  CHECK(x.count(1) == 24);
  CHECK(x.count(2) == 12);
  CHECK(x.first(1) == 12);
  CHECK(x.first(2) == 36);
  CHECK(euler_characteristic(x) == 0);
  CHECK(is_closed_surface(x));
  CHECK(is_torus(x));
  for (CellId v : x.vertices()) {
    CHECK(x.vertices_of(v).size() == 1);
    CHECK(x.vertices_of(v)[0] == v);
    CHECK(x.edges_at(v).size() == 4);
    CHECK(x.faces_at_vertex(v).size() == 4);
  }
  for (CellId e : x.edges()) CHECK(x.faces_at_edge(e).size() == 2);
}

TEST_CASE("face border alternates vertices and edges") {
  const CellComplex x = test::grid_torus(3, 3);
  for (CellId f : x.faces()) {
    auto b = x.border(f);
    REQUIRE(b.size() == 8);
    for (std::size_t i = 0; i < b.size(); i += 2) {
      CHECK(x.rank(b[i]) == 0);
      CHECK(x.rank(b[i + 1]) == 1);
      const CellId next = b[(i + 2) % b.size()];
      CHECK(x.edge_between(b[i], next) == b[i + 1]);
    }
    CHECK(x.border_edges(f).size() == 4);
    // canonical start at the least vertex
    auto vs = x.vertices_of(f);
    CHECK(vs[0] == *std::min_element(vs.begin(), vs.end()));
  }
}

TEST_CASE("below and above") {
  const CellComplex x = test::grid_torus(3, 3);
  const CellId f = x.first(2);
  auto below = x.below(f);
  CHECK(below.size() == 8);
  CHECK(x.below(0).empty());
  auto above = x.above(0);
  CHECK(above.size() == 8);  // 4 edges and 4 faces
  const CellId e = x.edges_at(0)[0];
  CHECK(x.below(e).size() == 2);
  CHECK(x.above(e).size() == 2);
  CHECK(x.other_end(e, 0) == x.vertices_of(e)[1]);
}

TEST_CASE("vertex fan and configuration") {
  const CellComplex x = test::grid_torus(4, 4);
  for (CellId v : x.vertices()) {
    auto fan = vertex_fan(x, v);
    CHECK(fan.size() == 4);
    const std::vector<std::size_t> cfg = vertex_configuration(x, v);
    CHECK(cfg == std::vector<std::size_t>{4, 4, 4, 4});
  }
}

TEST_CASE("same_configuration is up to rotation and reflection") {
  const std::vector<std::size_t> a = {3, 3, 4, 3, 4}, rot = {4, 3, 4, 3, 3}, refl = {4, 3, 4, 3, 3};
  const std::vector<std::size_t> other = {3, 3, 3, 4, 4};
  CHECK(same_configuration(a, rot));
  CHECK(same_configuration(a, refl));
  CHECK_FALSE(same_configuration(a, other));
  const std::vector<std::size_t> chiral = {3, 4, 6, 4}, mirrored = {4, 6, 4, 3};
  CHECK(same_configuration(chiral, mirrored));
  const std::vector<std::size_t> shorter = {3, 4, 6};
  CHECK_FALSE(same_configuration(chiral, shorter));
}

TEST_CASE("single triangle is not a closed surface") {
  const CellComplex t = test::triangle();
  CHECK(euler_characteristic(t) == 1);
  CHECK_FALSE(is_closed_surface(t));
  CHECK_FALSE(is_torus(t));
  CHECK(code_of([&] { vertex_fan(t, 0); }) == Errc::NotClosedSurface);
  CHECK(code_of([&] { dual_torus(t); }) == Errc::NotClosedSurface);
}

TEST_CASE("build_complex rejects malformed cell lists") {
  SUBCASE("duplicate id") {
    std::vector<Cell> cells = {{0, 0, {0}}, {0, 0, {0}}};
    CHECK(code_of([&] { build_complex(cells); }) == Errc::DuplicateCell);
  }
  SUBCASE("duplicate vertex set") {
    std::vector<Cell> cells = {{0, 0, {0}}, {1, 0, {1}}, {2, 1, {0, 1}}, {3, 1, {1, 0}}};
    CHECK(code_of([&] { build_complex(cells); }) == Errc::DuplicateCell);
  }
  SUBCASE("dangling vertex") {
    std::vector<Cell> cells = {{0, 0, {0}}, {1, 0, {1}}, {2, 1, {0, 7}}};
    CHECK(code_of([&] { build_complex(cells); }) == Errc::DanglingVertexReference);
  }
  SUBCASE("face border without an edge") {
    std::vector<Cell> cells = {{0, 0, {0}}, {1, 0, {1}}, {2, 0, {2}}, {3, 1, {0, 1}}, {4, 1, {1, 2}},
                               {5, 2, {0, 1, 2}}};
    CHECK(code_of([&] { build_complex(cells); }) == Errc::NonCyclicBorder);
  }
  SUBCASE("face repeating a vertex") {
    std::vector<Cell> cells = {{0, 0, {0}}, {1, 0, {1}}, {2, 1, {0, 1}}, {3, 2, {0, 1, 0}}};
    CHECK(code_of([&] { build_complex(cells); }) == Errc::NonCyclicBorder);
  }
  SUBCASE("ranks out of order") {
    std::vector<Cell> cells = {{0, 0, {0}}, {1, 0, {1}}, {2, 1, {0, 1}}, {3, 0, {3}}};
    CHECK(code_of([&] { build_complex(cells); }) == Errc::InvalidCell);
  }
  SUBCASE("loop edge") {
    std::vector<Cell> cells = {{0, 0, {0}}, {1, 1, {0, 0}}};
    CHECK(code_of([&] { build_complex(cells); }) == Errc::InvalidCell);
  }
  SUBCASE("empty") { CHECK(code_of([&] { build_complex(std::vector<Cell>{}); }) == Errc::InvalidCell); }
}

TEST_CASE("skeleton of the grid") {
  const CellComplex x = test::grid_torus(3, 4);
  const Skeleton g = skeleton(x);
  CHECK(g.vertex_count == 12);
  CHECK(g.edge_count() == 24);
  CHECK(is_regular(g) == std::optional<std::size_t>(4));
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto vs = x.vertices_of(x.first(1) + static_cast<CellId>(i));
    CHECK(g.edges[i] == std::pair<CellId, CellId>{vs[0], vs[1]});
  }
  CHECK(degree_sequence(g) == std::vector<std::size_t>(12, 4));
}

TEST_CASE("Skeleton::from_edges rejects loops and repeats") {
  CHECK(code_of([] { Skeleton::from_edges(3, {{0, 0}}); }) == Errc::SkeletonNotSimple);
  CHECK(code_of([] { Skeleton::from_edges(3, {{0, 1}, {1, 0}}); }) == Errc::SkeletonNotSimple);
  CHECK(code_of([] { Skeleton::from_edges(3, {{0, 5}}); }) == Errc::DanglingVertexReference);
  const Skeleton p = path_graph(4);
  CHECK_FALSE(is_regular(p).has_value());
  CHECK(p.adjacent(1, 2));
  CHECK_FALSE(p.adjacent(0, 2));
}

TEST_CASE("axioms on a roomy grid hold and a broken list fails") {
  CHECK(validate_axioms(test::grid_torus(4, 4)).ok());
  // face {0,1,2} whose edge {0,2} is missing
  std::vector<Cell> cells = {{0, 0, {0}}, {1, 0, {1}}, {2, 0, {2}}, {3, 1, {0, 1}}, {4, 1, {1, 2}},
                             {5, 2, {0, 1, 2}}};
  const AxiomReport r = validate_axioms(cells);
  CHECK_FALSE(r.ok());
  CHECK(std::is_sorted(r.violations.begin(), r.violations.end(), [](const auto& a, const auto& b) {
    return std::tie(a.axiom, a.first, a.second) < std::tie(b.axiom, b.first, b.second);
  }));
}

TEST_CASE("dual of the grid is a grid") {
  const CellComplex x = test::grid_torus(4, 3);
  const CellComplex d = dual_torus(x);
  CHECK(d.count(0) == x.count(2));
  CHECK(d.count(1) == x.count(1));
  CHECK(d.count(2) == x.count(0));
  CHECK(complexes_isomorphic(d, x));
  CHECK(complexes_isomorphic(dual_torus(d), x));
}

TEST_CASE("line complex needs a cubic skeleton") {
  CHECK(code_of([] { line_complex(test::grid_torus(3, 3)); }) == Errc::NotCubic);
}

TEST_CASE("relabel keeps the complex up to isomorphism") {
  const CellComplex x = test::grid_torus(3, 3);
  std::vector<CellId> perm(x.size());
  for (CellId id = 0; id < x.size(); ++id) {
    const int r = x.rank(id);
    const CellId lo = x.first(r);
    const CellId n = static_cast<CellId>(x.count(r));
    perm[id] = lo + (n - 1 - (id - lo));  // reverse within each rank
  }
  const CellComplex y = relabel(x, perm);
  CHECK(y.size() == x.size());
  CHECK(complexes_isomorphic(x, y));
  std::vector<CellId> bad(x.size());
  for (CellId id = 0; id < x.size(); ++id) bad[id] = static_cast<CellId>(x.size() - 1 - id);
  CHECK(code_of([&] { relabel(x, bad); }) == Errc::InvalidCell);
  CHECK(code_of([&] { relabel(x, std::vector<CellId>{0}); }) == Errc::InvalidCell);
}

TEST_CASE("face size histogram") {
  const auto h = face_size_counts(test::grid_torus(3, 5));
  REQUIRE(h.size() == 1);
  CHECK(h[0] == std::pair<std::size_t, std::size_t>{4, 15});
}
