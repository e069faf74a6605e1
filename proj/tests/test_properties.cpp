#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "etcc/document.hpp"
#include "etcc/error.hpp"
#include "etcc/isomorphism.hpp"
#include "etcc/search.hpp"
#include "support.hpp"

using namespace etcc;

namespace {

// Random sublattices of the lattice spanned by a and b, of index at most
// max_mult times its own.
std::vector<Lattice2D> random_sublattices(IVec2 a, IVec2 b, int max_mult, unsigned seed, std::size_t n) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<Lattice2D> out;
  while (out.size() < n) {
    const int p = coef(rng), q = coef(rng), r = coef(rng), s = coef(rng);
    const int det = std::abs(p * s - q * r);
    if (det == 0 || det > max_mult) continue;
    out.emplace_back(p * a + q * b, r * a + s * b);
  }
  return out;
}

// Permutes cell ids within each rank.
std::vector<CellId> shuffle_within_ranks(const CellComplex& x, std::mt19937& rng) {
  std::vector<CellId> perm(x.size());
  for (int r = 0; r <= kMaxRank; ++r) {
    std::vector<CellId> ids(x.ids(r).begin(), x.ids(r).end());
    std::vector<CellId> images = ids;
    std::shuffle(images.begin(), images.end(), rng);
    for (std::size_t i = 0; i < ids.size(); ++i) perm[ids[i]] = images[i];
  }
  return perm;
}

}  // namespace

TEST_CASE("closed forms verify on every simple kernel quotient") {
  std::size_t tried = 0;
  for (const Lattice2D& l : random_sublattices({7, 0}, {2, 1}, 6, 11, 40)) {
    try {
      const TorusComplex t = gen_triangular(l);
      CAPTURE(l.to_string());
      CHECK(verify(t.complex, color_triangular(t)).coloring_summary == 5);
      ++tried;
    } catch (const Error& e) {
      CHECK(e.code() == Errc::SkeletonNotSimple);
    }
  }
  for (const Lattice2D& l : random_sublattices({5, 0}, {-2, 1}, 8, 12, 40)) {
    try {
      const TorusComplex t = gen_square(l);
      CAPTURE(l.to_string());
      CHECK(verify(t.complex, color_square(t)).coloring_summary == 5);
      ++tried;
    } catch (const Error& e) {
      CHECK(e.code() == Errc::SkeletonNotSimple);
    }
  }
  CHECK(tried > 40);
}

TEST_CASE("quotient counts scale with the index") {
  for (const Lattice2D& l : random_sublattices({1, 0}, {0, 1}, 40, 13, 30)) {
    try {
      const TorusComplex t = gen_triangular(l);
      const auto n = static_cast<std::size_t>(l.index());
      CHECK(t.complex.count(0) == n);
      CHECK(t.complex.count(1) == 3 * n);
      CHECK(t.complex.count(2) == 2 * n);
      CHECK(is_torus(t.complex));
    } catch (const Error& e) {
      CHECK(e.code() == Errc::SkeletonNotSimple);
    }
  }
}

TEST_CASE("verification is invariant under color permutations") {
  const TorusComplex t = gen_triangular(Lattice2D({7, 0}, {2, 1}));
  const ColorAssignment c = color_triangular(t);
  std::vector<Color> sigma(7);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::mt19937 rng(5);
  for (int round = 0; round < 10; ++round) {
    std::shuffle(sigma.begin(), sigma.end(), rng);
    ColorAssignment p = c;
    for (Color& col : p.colors) col = sigma[static_cast<std::size_t>(col)];
    CHECK(verify(t.complex, p).coloring_summary == 5);
  }
}

TEST_CASE("unsat and counts do not depend on cell order") {
  std::mt19937 rng(17);
  const CellComplex trunc = gen_family(TilingSpec::parse("cr4_6_12"));
  const CellComplex k5 = gen_square(Lattice2D({5, 0}, {2, -1})).complex;
  SearchOptions unsat;
  unsat.k = 3;
  unsat.level = Level::etcc;
  unsat.mode = SearchMode::exists;
  SearchOptions count;
  count.k = 4;
  count.level = Level::setcc;
  count.mode = SearchMode::count;
  count.count_limit = 100000;
  const std::size_t k5_count = solve(k5, count).count;
  REQUIRE_FALSE(solve(trunc, unsat).satisfiable());
  for (int round = 0; round < 4; ++round) {
    const CellComplex a = relabel(trunc, shuffle_within_ranks(trunc, rng));
    CHECK_FALSE(solve(a, unsat).satisfiable());
    const CellComplex b = relabel(k5, shuffle_within_ranks(k5, rng));
    CHECK(solve(b, count).count == k5_count);
  }
}

TEST_CASE("duals and double duals") {
  for (const char* spec : {"triangular", "square", "cr3_3_3_4_4", "rhombille"}) {
    const CellComplex x = gen_family(TilingSpec::parse(spec));
    const CellComplex d = dual_torus(x);
    CHECK(d.count(0) == x.count(2));
    CHECK(d.count(2) == x.count(0));
    CHECK(complexes_isomorphic(dual_torus(d), x));
  }
  // 6 faces and 18 edges: some pair of faces shares two edges
  CHECK_THROWS_AS(dual_torus(gen_family(TilingSpec::parse("cr4_6_12"))), Error);
}

TEST_CASE("every family document round-trips") {
  for (Family f : all_families()) {
    TilingSpec spec;
    spec.family = f;
    spec.lattice = TilingSpec::default_lattice(f);
    const std::string text = to_json(document_for(spec));
    CHECK(to_json(parse_document(text)) == text);
  }
}
