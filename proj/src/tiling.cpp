#include "etcc/tiling.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "etcc/error.hpp"

namespace etcc {

namespace {

Point2 map_point(const PeriodicMotif& motif, double x, double y) {
  return {x * motif.axis_x.x + y * motif.axis_y.x, x * motif.axis_x.y + y * motif.axis_y.y};
}

Point2 map_vec(const PeriodicMotif& motif, IVec2 p) {
  return map_point(motif, static_cast<double>(p.x), static_cast<double>(p.y));
}

const double kSqrt3Half = std::sqrt(3.0) / 2.0;

// Outline of a union of faces once the given edges are gone: one simple
// cycle of old vertex ids.
std::vector<CellId> merged_outline(const CellComplex& x, std::span<const CellId> faces,
                                   const std::set<CellId>& removed) {
  std::map<CellId, int> uses;
  for (CellId f : faces) {
    for (CellId e : x.border_edges(f)) {
      if (!removed.count(e)) ++uses[e];
    }
  }
  std::map<CellId, std::vector<CellId>> around;
  for (auto [e, n] : uses) {
    if (n != 1) throw Error(Errc::DoubleMerge, "edge " + std::to_string(e) + " would lie inside a merged face");
    auto ends = x.vertices_of(e);
    around[ends[0]].push_back(e);
    around[ends[1]].push_back(e);
  }
  for (const auto& [v, es] : around) {
    if (es.size() != 2) {
      throw Error(Errc::DoubleMerge, "merged outline passes vertex " + std::to_string(v) + " more than once");
    }
  }
  if (around.empty()) throw Error(Errc::DoubleMerge, "merged face has no outline");
  std::vector<CellId> cycle;
  const CellId start = around.begin()->first;
  CellId v = start;
  CellId e = around[start][0];
  do {
    cycle.push_back(v);
    v = x.other_end(e, v);
    const auto& es = around[v];
    e = es[0] == e ? es[1] : es[0];
  } while (v != start && cycle.size() <= around.size());
  if (cycle.size() != around.size()) {
    throw Error(Errc::DoubleMerge, "merged outline is not a single cycle");
  }
  return cycle;
}

Embedding keep_positions(const CellComplex& old, const std::vector<CellId>& kept_vertices) {
  const Embedding& emb = *old.embedding();
  Embedding out{{}, emb.period_u, emb.period_v};
  for (CellId v : kept_vertices) out.positions.push_back(emb.positions[v]);
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Flags of the triangular tiling for the 4.6.12 motif. Triangle type 0 is
// {b, b+(1,0), b+(0,1)}, type 1 is {b+(1,0), b+(1,1), b+(0,1)}.
struct Flag {
  int type;
  IVec2 base;
  int corner;
  int toward;  // the other corner on the flag's side
};

IVec2 corner_point(int type, IVec2 base, int corner) {
  static constexpr std::array<std::array<IVec2, 3>, 2> corners{{
      {IVec2{0, 0}, IVec2{1, 0}, IVec2{0, 1}},
      {IVec2{1, 0}, IVec2{1, 1}, IVec2{0, 1}},
  }};
  return base + corners[type][corner];
}

int flag_local(const Flag& f) {
  const int side = f.toward == (f.corner + 1) % 3 ? 0 : 1;
  return f.type * 6 + f.corner * 2 + side;
}

Flag flag_from_local(int local) {
  const int type = local / 6;
  const int corner = (local % 6) / 2;
  const int side = local % 2;
  return {type, {0, 0}, corner, (corner + 1 + side) % 3};
}

Flag sigma0(const Flag& f) { return {f.type, f.base, f.toward, f.corner}; }
Flag sigma1(const Flag& f) { return {f.type, f.base, f.corner, 3 - f.corner - f.toward}; }
Flag sigma2(const Flag& f) {
  const IVec2 p = corner_point(f.type, f.base, f.corner);
  const IVec2 q = corner_point(f.type, f.base, f.toward);
  const int other = 1 - f.type;
  for (std::int64_t dy = -1; dy <= 1; ++dy) {
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      const IVec2 b = f.base + IVec2{dx, dy};
      int cp = -1, cq = -1;
      for (int c = 0; c < 3; ++c) {
        if (corner_point(other, b, c) == p) cp = c;
        if (corner_point(other, b, c) == q) cq = c;
      }
      if (cp >= 0 && cq >= 0) return {other, b, cp, cq};
    }
  }
  throw Error(Errc::InvalidCell, "flag has no neighbour across its side");
}

MotifRef flag_ref(const Flag& f) { return {flag_local(f), f.base}; }

std::vector<MotifRef> flag_orbit(Flag start, Flag (*first)(const Flag&), Flag (*second)(const Flag&)) {
  std::vector<MotifRef> refs;
  Flag f = start;
  for (int step = 0; step < 64; ++step) {
    refs.push_back(flag_ref(f));
    f = (step % 2 == 0) ? first(f) : second(f);
    if (flag_local(f) == flag_local(start) && f.base == start.base) return refs;
  }
  throw Error(Errc::InvalidCell, "flag orbit does not close");
}

bool tri_derived(Family family) {
  switch (family) {
    case Family::square:
    case Family::cr4_8_8:
    case Family::cr4_6_12:
      return false;
    default:
      return true;
  }
}

struct FamilyName {
  Family family;
  std::string_view name;
};

constexpr std::array<FamilyName, 13> kFamilyNames{{
    {Family::square, "square"},
    {Family::triangular, "triangular"},
    {Family::hexagonal, "hexagonal"},
    {Family::trihexagonal, "trihexagonal"},
    {Family::cr4_8_8, "cr4_8_8"},
    {Family::cr3_3_3_4_4, "cr3_3_3_4_4"},
    {Family::cr3_3_4_3_4, "cr3_3_4_3_4"},
    {Family::square_mod7, "square_mod7"},
    {Family::cr3_3_3_3_6, "cr3_3_3_3_6"},
    {Family::cr3_4_6_4, "cr3_4_6_4"},
    {Family::cr3_12_12, "cr3_12_12"},
    {Family::cr4_6_12, "cr4_6_12"},
    {Family::rhombille, "rhombille"},
}};

constexpr std::array<Family, 13> kFamilies{
    Family::square,      Family::triangular,  Family::hexagonal,   Family::trihexagonal, Family::cr4_8_8,
    Family::cr3_3_3_4_4, Family::cr3_3_4_3_4, Family::square_mod7, Family::cr3_3_3_3_6,  Family::cr3_4_6_4,
    Family::cr3_12_12,   Family::cr4_6_12,    Family::rhombille,
};

IVec2 mirror_point(IVec2 p) { return {p.x, -p.y}; }

Lattice2D mirror_lattice(const Lattice2D& l) { return Lattice2D(mirror_point(l.u()), mirror_point(l.v())); }

std::vector<CellId> vertex_class(const TorusComplex& t, const ColorForm& form, int color) {
  std::vector<CellId> out;
  for (CellId v : t.complex.vertices()) {
    if (form.color(t.tags[v].role, t.tags[v].base) == color) out.push_back(v);
  }
  return out;
}

// The perfect code of the triangular (or square) lattice that is not a
// color class of the closed form: x + 3y = 0 mod 7 on the anti motif,
// x + 4y = 0 mod 7 on the main one and x + 3y = 0 mod 5 on the square.
ColorForm cross_code(int modulus, int y_coeff, std::size_t roles) {
  return ColorForm{modulus, 1, y_coeff, std::vector<int>(roles, 0)};
}

void require_kernel(const ColorForm& form, const Lattice2D& lattice, std::string_view what) {
  if (!kernel_check(form, lattice)) {
    throw Error(Errc::NotDescendable, std::string(what) + ": lattice " + lattice.to_string() +
                                          " is not in the kernel of the color form");
  }
}

}  // namespace

std::string_view to_string(Chirality chirality) { return chirality == Chirality::anti ? "anti" : "main"; }

TorusComplex quotient(const PeriodicMotif& motif, const Lattice2D& lattice) {
  const std::vector<IVec2> reps = cosets(lattice);
  const std::size_t n = motif.vertex_count();
  auto vid = [&](const MotifRef& ref, IVec2 at) {
    return static_cast<CellId>(lattice.coset_index(at + ref.shift) * n + static_cast<std::size_t>(ref.local));
  };

  std::vector<PlaneTag> tags;
  for (IVec2 r : reps) {
    for (std::size_t i = 0; i < n; ++i) tags.push_back({motif.vertex_roles[i], r});
  }

  std::vector<std::pair<CellId, CellId>> edges;
  std::set<std::pair<CellId, CellId>> seen_edges;
  for (IVec2 r : reps) {
    for (std::size_t j = 0; j < motif.edges.size(); ++j) {
      CellId a = vid(motif.edges[j][0], r);
      CellId b = vid(motif.edges[j][1], r);
      if (a == b) throw Error(Errc::SkeletonNotSimple, "lattice " + lattice.to_string() + " folds an edge into a loop");
      if (!seen_edges.insert(std::minmax(a, b)).second) {
        throw Error(Errc::SkeletonNotSimple, "lattice " + lattice.to_string() + " identifies two parallel edges");
      }
      edges.emplace_back(a, b);
      tags.push_back({motif.edge_roles[j], r});
    }
  }

  std::vector<std::vector<CellId>> faces;
  std::set<std::vector<CellId>> seen_faces;
  for (IVec2 r : reps) {
    for (std::size_t j = 0; j < motif.faces.size(); ++j) {
      std::vector<CellId> cycle;
      for (const MotifRef& ref : motif.faces[j]) cycle.push_back(vid(ref, r));
      std::vector<CellId> key(cycle);
      std::sort(key.begin(), key.end());
      if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
        throw Error(Errc::SkeletonNotSimple, "lattice " + lattice.to_string() + " folds a face onto itself");
      }
      if (!seen_faces.insert(key).second) {
        throw Error(Errc::SkeletonNotSimple, "lattice " + lattice.to_string() + " identifies two faces");
      }
      faces.push_back(std::move(cycle));
      tags.push_back({motif.face_roles[j], r});
    }
  }

  CellComplex complex = build_complex(reps.size() * n, edges, faces);
  Embedding emb{{}, map_vec(motif, lattice.u()), map_vec(motif, lattice.v())};
  for (IVec2 r : reps) {
    for (std::size_t i = 0; i < n; ++i) {
      emb.positions.push_back(map_point(motif, static_cast<double>(r.x) + motif.positions[i].x,
                                        static_cast<double>(r.y) + motif.positions[i].y));
    }
  }
  return {complex.with_embedding(std::move(emb)), lattice, std::move(tags)};
}

ColorForm square_form() { return {5, 1, 2, {2, 0, 3, 1}}; }

ColorForm triangular_form(Chirality chirality) {
  if (chirality == Chirality::anti) return {7, 1, 5, {0, 4, 6, 3, 2, 4}};
  return {7, 1, 2, {0, 4, 1, 5, 6, 4}};
}

PeriodicMotif square_motif() {
  PeriodicMotif m;
  m.positions = {{0.0, 0.0}};
  m.vertex_roles = {square_role::vertex};
  m.edges = {{MotifRef{0, {0, 0}}, MotifRef{0, {1, 0}}}, {MotifRef{0, {0, 0}}, MotifRef{0, {0, 1}}}};
  m.edge_roles = {square_role::horizontal, square_role::vertical};
  m.faces = {{{0, {0, 0}}, {0, {1, 0}}, {0, {1, 1}}, {0, {0, 1}}}};
  m.face_roles = {square_role::face};
  return m;
}

PeriodicMotif triangular_motif(Chirality chirality) {
  PeriodicMotif m;
  m.positions = {{0.0, 0.0}};
  m.vertex_roles = {tri_role::vertex};
  m.edges = {{MotifRef{0, {0, 0}}, MotifRef{0, {1, 0}}}, {MotifRef{0, {0, 0}}, MotifRef{0, {0, 1}}}};
  m.edge_roles = {tri_role::horizontal, tri_role::vertical, tri_role::diagonal};
  m.face_roles = {tri_role::face_a, tri_role::face_b};
  if (chirality == Chirality::anti) {
    m.edges.push_back({MotifRef{0, {1, 0}}, MotifRef{0, {0, 1}}});
    m.faces = {{{0, {0, 0}}, {0, {1, 0}}, {0, {0, 1}}}, {{0, {1, 0}}, {0, {1, 1}}, {0, {0, 1}}}};
    m.axis_y = {0.5, kSqrt3Half};
  } else {
    m.edges.push_back({MotifRef{0, {0, 0}}, MotifRef{0, {1, 1}}});
    m.faces = {{{0, {0, 0}}, {0, {1, 0}}, {0, {1, 1}}}, {{0, {0, 0}}, {0, {1, 1}}, {0, {0, 1}}}};
    m.axis_y = {-0.5, kSqrt3Half};
  }
  return m;
}

PeriodicMotif truncated_trihexagonal_motif() {
  PeriodicMotif m;
  m.axis_y = {0.5, kSqrt3Half};
  for (int local = 0; local < 12; ++local) {
    const Flag f = flag_from_local(local);
    const IVec2 p = corner_point(f.type, f.base, f.corner);
    const IVec2 q = corner_point(f.type, f.base, f.toward);
    double cx = 0.0, cy = 0.0;
    for (int c = 0; c < 3; ++c) {
      cx += static_cast<double>(corner_point(f.type, f.base, c).x) / 3.0;
      cy += static_cast<double>(corner_point(f.type, f.base, c).y) / 3.0;
    }
    const double mx = (static_cast<double>(p.x) + static_cast<double>(q.x)) / 2.0;
    const double my = (static_cast<double>(p.y) + static_cast<double>(q.y)) / 2.0;
    m.positions.push_back({0.5 * static_cast<double>(p.x) + 0.2 * mx + 0.3 * cx,
                           0.5 * static_cast<double>(p.y) + 0.2 * my + 0.3 * cy});
    m.vertex_roles.push_back(local);
  }
  int role = 0;
  for (Flag (*sigma)(const Flag&) : {&sigma0, &sigma1, &sigma2}) {
    for (int local = 0; local < 12; ++local) {
      const Flag g = sigma(flag_from_local(local));
      if (local < flag_local(g)) {
        m.edges.push_back({MotifRef{local, {0, 0}}, flag_ref(g)});
        m.edge_roles.push_back(role);
      }
    }
    ++role;
  }
  // Hexagons around the two triangles, squares across the three sides of
  // the first triangle, the dodecagon around the origin.
  m.faces.push_back(flag_orbit(flag_from_local(0), &sigma0, &sigma1));
  m.faces.push_back(flag_orbit(flag_from_local(6), &sigma0, &sigma1));
  m.faces.push_back(flag_orbit(Flag{0, {0, 0}, 0, 1}, &sigma0, &sigma2));
  m.faces.push_back(flag_orbit(Flag{0, {0, 0}, 1, 2}, &sigma0, &sigma2));
  m.faces.push_back(flag_orbit(Flag{0, {0, 0}, 2, 0}, &sigma0, &sigma2));
  m.faces.push_back(flag_orbit(flag_from_local(0), &sigma1, &sigma2));
  m.face_roles = {0, 0, 1, 1, 1, 2};
  return m;
}

TorusComplex gen_square(const Lattice2D& lattice) { return quotient(square_motif(), lattice); }

TorusComplex gen_triangular(const Lattice2D& lattice, Chirality chirality) {
  return quotient(triangular_motif(chirality), lattice);
}

CellComplex gen_hexagonal(const Lattice2D& lattice, Chirality chirality) {
  return dual_torus(gen_triangular(lattice, chirality).complex);
}

CellComplex gen_trihexagonal(const Lattice2D& lattice, Chirality chirality) {
  return line_complex(gen_hexagonal(lattice, chirality));
}

CarveResult carve_vertices(const CellComplex& x, std::span<const CellId> deleted) {
  std::vector<char> gone(x.count(0), 0);
  for (CellId v : deleted) {
    if (v >= x.count(0)) throw Error(Errc::InvalidCell, "cell " + std::to_string(v) + " is not a vertex");
    gone[v] = 1;
  }
  for (CellId e : x.edges()) {
    auto ends = x.vertices_of(e);
    if (gone[ends[0]] && gone[ends[1]]) {
      throw Error(Errc::NotIndependent,
                  "vertices " + std::to_string(ends[0]) + " and " + std::to_string(ends[1]) + " are adjacent");
    }
  }
  for (CellId f : x.faces()) {
    int hits = 0;
    for (CellId v : x.vertices_of(f)) hits += gone[v];
    if (hits > 1) throw Error(Errc::FaceWithTwoDeleted, "face " + std::to_string(f) + " holds two deleted vertices");
  }

  std::vector<CellId> vmap(x.count(0), 0);
  std::vector<CellId> kept_vertices;
  for (CellId v : x.vertices()) {
    if (!gone[v]) {
      vmap[v] = static_cast<CellId>(kept_vertices.size());
      kept_vertices.push_back(v);
    }
  }
  std::vector<CellOrigin> origin;
  for (CellId v : kept_vertices) origin.push_back({v, {}, {}, {}});

  std::vector<std::pair<CellId, CellId>> edges;
  for (CellId e : x.edges()) {
    auto ends = x.vertices_of(e);
    if (gone[ends[0]] || gone[ends[1]]) continue;
    edges.emplace_back(vmap[ends[0]], vmap[ends[1]]);
    origin.push_back({e, {}, {}, {}});
  }

  std::vector<std::vector<CellId>> faces;
  std::vector<CellOrigin> face_origin;
  for (CellId f : x.faces()) {
    bool touched = false;
    for (CellId v : x.vertices_of(f)) touched = touched || gone[v];
    if (touched) continue;
    std::vector<CellId> cycle;
    for (CellId v : x.vertices_of(f)) cycle.push_back(vmap[v]);
    faces.push_back(std::move(cycle));
    face_origin.push_back({f, {}, {}, {}});
  }
  std::vector<CellId> sorted(deleted.begin(), deleted.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (CellId v : sorted) {
    std::vector<CellId> around(x.faces_at_vertex(v).begin(), x.faces_at_vertex(v).end());
    std::set<CellId> removed(x.edges_at(v).begin(), x.edges_at(v).end());
    std::vector<CellId> cycle;
    for (CellId u : merged_outline(x, around, removed)) cycle.push_back(vmap[u]);
    faces.push_back(std::move(cycle));
    std::vector<CellId> removed_cells{v};
    removed_cells.insert(removed_cells.end(), removed.begin(), removed.end());
    std::sort(around.begin(), around.end());
    face_origin.push_back({std::nullopt, std::move(removed_cells), std::move(around), v});
  }
  origin.insert(origin.end(), face_origin.begin(), face_origin.end());

  CellComplex result = build_complex(kept_vertices.size(), edges, faces);
  if (x.embedding()) result = result.with_embedding(keep_positions(x, kept_vertices));
  return {std::move(result), std::move(origin)};
}

CarveResult carve_edges(const CellComplex& x, std::span<const CellId> deleted, bool allow_multi_merge) {
  const CellId e0 = x.first(1);
  const CellId f0 = x.first(2);
  std::set<CellId> removed;
  for (CellId e : deleted) {
    if (e < e0 || e >= f0) throw Error(Errc::InvalidCell, "cell " + std::to_string(e) + " is not an edge");
    if (x.faces_at_edge(e).size() != 2 || x.faces_at_edge(e)[0] == x.faces_at_edge(e)[1]) {
      throw Error(Errc::BoundaryEdge, "edge " + std::to_string(e) + " does not separate two faces");
    }
    removed.insert(e);
  }
  UnionFind groups(x.count(2));
  std::vector<int> lost(x.count(2), 0);
  for (CellId e : removed) {
    auto fs = x.faces_at_edge(e);
    for (CellId f : fs) {
      if (++lost[f - f0] > 1 && !allow_multi_merge) {
        throw Error(Errc::DoubleMerge, "face " + std::to_string(f) + " loses two edges");
      }
    }
    groups.unite(fs[0] - f0, fs[1] - f0);
  }
  std::vector<int> degree(x.count(0), 0);
  for (CellId e : x.edges()) {
    if (removed.count(e)) continue;
    for (CellId v : x.vertices_of(e)) ++degree[v];
  }
  for (CellId v : x.vertices()) {
    if (degree[v] < 2) throw Error(Errc::DoubleMerge, "vertex " + std::to_string(v) + " would be left inside a face");
  }

  std::vector<CellOrigin> origin;
  for (CellId v : x.vertices()) origin.push_back({v, {}, {}, {}});
  std::vector<std::pair<CellId, CellId>> edges;
  for (CellId e : x.edges()) {
    if (removed.count(e)) continue;
    edges.emplace_back(x.vertices_of(e)[0], x.vertices_of(e)[1]);
    origin.push_back({e, {}, {}, {}});
  }

  std::map<std::size_t, std::vector<CellId>> group_faces;
  std::map<std::size_t, std::vector<CellId>> group_edges;
  for (CellId e : removed) group_edges[groups.find(x.faces_at_edge(e)[0] - f0)].push_back(e);
  std::vector<std::vector<CellId>> faces;
  for (CellId f : x.faces()) {
    const std::size_t root = groups.find(f - f0);
    if (group_edges.count(root)) {
      group_faces[root].push_back(f);
      continue;
    }
    faces.emplace_back(x.vertices_of(f).begin(), x.vertices_of(f).end());
    origin.push_back({f, {}, {}, {}});
  }
  std::vector<std::size_t> order;
  for (const auto& [root, es] : group_edges) order.push_back(root);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return group_edges[a].front() < group_edges[b].front(); });
  for (std::size_t root : order) {
    const auto& fs = group_faces[root];
    const auto& es = group_edges[root];
    if (es.size() + 1 != fs.size()) {
      throw Error(Errc::DoubleMerge, "faces merged across edge " + std::to_string(es.front()) + " enclose a hole");
    }
    faces.push_back(merged_outline(x, fs, removed));
    origin.push_back({std::nullopt, es, fs, es.size() == 1 ? std::optional<CellId>(es.front()) : std::nullopt});
  }

  CellComplex result = build_complex(x.count(0), edges, faces);
  if (x.embedding()) result = result.with_embedding(*x.embedding());
  return {std::move(result), std::move(origin)};
}

std::vector<CellId> pattern_edges(const TorusComplex& torus, const EdgePattern& pattern) {
  if (!pattern.lattice.contains(torus.lattice)) {
    throw Error(Errc::NotDescendable, "torus lattice " + torus.lattice.to_string() +
                                          " is not contained in the pattern lattice " +
                                          pattern.lattice.to_string());
  }
  std::set<std::pair<int, IVec2>> wanted;
  for (auto [role, p] : pattern.edges) wanted.emplace(role, pattern.lattice.reduce(p));
  std::vector<CellId> out;
  for (CellId e : torus.complex.edges()) {
    const PlaneTag& tag = torus.tags[e];
    if (wanted.count({tag.role, pattern.lattice.reduce(tag.base)})) out.push_back(e);
  }
  return out;
}

EdgePattern mirror(const EdgePattern& pattern) {
  EdgePattern out{mirror_lattice(pattern.lattice), {}};
  for (auto [role, p] : pattern.edges) {
    IVec2 q = mirror_point(p);
    // Vertical and diagonal edges hang from their lower end, which the
    // mirror turns into the upper end.
    if (role == tri_role::vertical || role == tri_role::diagonal) q = q - IVec2{0, 1};
    out.edges.emplace_back(role, out.lattice.reduce(q));
  }
  return out;
}

bool rhombille_center(IVec2 p, Chirality chirality) {
  return floor_mod(chirality == Chirality::anti ? p.x - p.y : p.x + p.y, 3) == 0;
}

std::string_view to_string(Family family) {
  for (const auto& entry : kFamilyNames) {
    if (entry.family == family) return entry.name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& entry : kFamilyNames) {
    if (entry.name == name) return entry.family;
  }
  throw Error(Errc::UnknownFamily, "unknown tiling family '" + std::string(name) + "'");
}

std::span<const Family> all_families() { return kFamilies; }

Lattice2D TilingSpec::default_lattice(Family family, Chirality chirality) {
  auto tri = [&](IVec2 u, IVec2 v) {
    Lattice2D l(u, v);
    return chirality == Chirality::anti ? l : mirror_lattice(l);
  };
  switch (family) {
    case Family::square:
      return Lattice2D({5, 0}, {2, -1});
    case Family::cr4_8_8:
      return Lattice2D({5, 0}, {0, 5});
    case Family::triangular:
    case Family::hexagonal:
    case Family::trihexagonal:
      return tri({7, 0}, {2, 1});
    case Family::cr3_3_3_4_4:
      return tri({7, 0}, {4, 2});
    case Family::square_mod7:
      return chirality == Chirality::anti ? Lattice2D({7, 0}, {0, 7}) : Lattice2D({7, 0}, {1, 4});
    case Family::cr3_3_4_3_4: {
      Lattice2D l = intersect(snub_square_pattern().lattice, Lattice2D({7, 0}, {2, 1}));
      return chirality == Chirality::anti ? l : mirror_lattice(l);
    }
    case Family::cr3_3_3_3_6:
    case Family::cr3_4_6_4:
    case Family::cr3_12_12:
      return tri({7, 0}, {0, 7});
    case Family::cr4_6_12:
      return Lattice2D({1, 0}, {0, 1});
    case Family::rhombille:
      return tri({6, 3}, {11, 2});
  }
  throw Error(Errc::UnknownFamily, "no default lattice");
}

std::string TilingSpec::to_string() const {
  std::string out = std::string(etcc::to_string(family)) + "@" + lattice.to_string();
  if (chirality == Chirality::main) out += ";chirality=main";
  return out;
}

TilingSpec TilingSpec::parse(std::string_view text) {
  TilingSpec spec;
  std::string_view rest = text;
  std::optional<Chirality> chirality;
  const std::string_view tag = ";chirality=";
  if (auto pos = rest.find(tag); pos != std::string_view::npos) {
    std::string_view value = rest.substr(pos + tag.size());
    if (value == "anti") {
      chirality = Chirality::anti;
    } else if (value == "main") {
      chirality = Chirality::main;
    } else {
      throw Error(Errc::ParseError, "chirality must be anti or main, got '" + std::string(value) + "'");
    }
    rest = rest.substr(0, pos);
  }
  const auto at = rest.find('@');
  spec.family = parse_family(rest.substr(0, at));
  spec.chirality = chirality.value_or(Chirality::anti);
  if (spec.chirality == Chirality::main && !tri_derived(spec.family)) {
    throw Error(Errc::ParseError, "chirality applies only to families built on the triangular tiling");
  }
  if (at == std::string_view::npos) {
    spec.lattice = default_lattice(spec.family, spec.chirality);
  } else {
    spec.lattice = Lattice2D::parse(rest.substr(at + 1));
  }
  return spec;
}

Derivation derive(const TilingSpec& spec) {
  Derivation d{spec, std::nullopt, {}, {}};
  const Lattice2D& lattice = spec.lattice;
  const Chirality ch = spec.chirality;
  auto tri_pattern = [&](EdgePattern p) { return ch == Chirality::anti ? p : mirror(p); };
  auto carve_pattern = [&](const EdgePattern& p, bool multi = false) {
    d.steps.push_back(carve_edges(d.base->complex, pattern_edges(*d.base, p), multi));
  };
  auto eds_carve = [&]() {
    d.base = gen_triangular(lattice, ch);
    require_kernel(triangular_form(ch), lattice, to_string(spec.family));
    const ColorForm code = cross_code(7, ch == Chirality::anti ? 3 : 4, 6);
    require_kernel(code, lattice, to_string(spec.family));
    d.steps.push_back(carve_vertices(d.base->complex, vertex_class(*d.base, code, 0)));
  };

  switch (spec.family) {
    case Family::square:
      d.base = gen_square(lattice);
      d.result = d.base->complex;
      return d;
    case Family::triangular:
      d.base = gen_triangular(lattice, ch);
      d.result = d.base->complex;
      return d;
    case Family::hexagonal:
      d.base = gen_triangular(lattice, ch);
      d.result = dual_torus(d.base->complex);
      return d;
    case Family::trihexagonal:
      d.base = gen_triangular(lattice, ch);
      d.result = line_complex(dual_torus(d.base->complex));
      return d;
    case Family::cr4_6_12:
      d.result = quotient(truncated_trihexagonal_motif(), lattice).complex;
      return d;
    case Family::cr4_8_8:
      d.base = gen_square(lattice);
      require_kernel(square_form(), lattice, "cr4_8_8");
      require_kernel(cross_code(5, 3, 4), lattice, "cr4_8_8");
      d.steps.push_back(carve_vertices(d.base->complex, vertex_class(*d.base, cross_code(5, 3, 4), 0)));
      break;
    case Family::cr3_3_3_4_4:
      d.base = gen_triangular(lattice, ch);
      carve_pattern(tri_pattern({Lattice2D({1, 0}, {0, 2}), {{tri_role::diagonal, {0, 0}}}}));
      break;
    case Family::square_mod7:
      // Both variants start from the anti triangulation; chirality selects
      // which edges go in the odd strips.
      d.base = gen_triangular(lattice, Chirality::anti);
      if (ch == Chirality::anti) {
        carve_pattern({Lattice2D({1, 0}, {0, 1}), {{tri_role::diagonal, {0, 0}}}});
      } else {
        carve_pattern({Lattice2D({1, 0}, {0, 2}), {{tri_role::diagonal, {0, 0}}, {tri_role::vertical, {0, 1}}}});
      }
      break;
    case Family::cr3_3_4_3_4:
      d.base = gen_triangular(lattice, ch);
      carve_pattern(tri_pattern(snub_square_pattern()));
      break;
    case Family::cr3_3_3_3_6:
      eds_carve();
      break;
    case Family::cr3_4_6_4: {
      eds_carve();
      const CarveResult& snub = d.steps.back();
      const CellComplex& x = snub.complex;
      std::vector<char> by_hexagon(x.size(), 0);
      for (CellId f : x.faces()) {
        if (snub.origin[f].survivor) continue;
        for (CellId e : x.border_edges(f)) {
          for (CellId g : x.faces_at_edge(e)) {
            if (g != f) by_hexagon[g] = 1;
          }
        }
      }
      std::vector<CellId> doomed;
      for (CellId e : x.edges()) {
        auto fs = x.faces_at_edge(e);
        if (by_hexagon[fs[0]] && by_hexagon[fs[1]]) doomed.push_back(e);
      }
      d.steps.push_back(carve_edges(x, doomed));
      break;
    }
    case Family::cr3_12_12: {
      eds_carve();
      const CarveResult& snub = d.steps.back();
      const CellComplex& x = snub.complex;
      std::vector<CellId> doomed;
      for (CellId f : x.faces()) {
        if (snub.origin[f].survivor) continue;
        for (CellId e : x.border_edges(f)) doomed.push_back(e);
      }
      std::sort(doomed.begin(), doomed.end());
      doomed.erase(std::unique(doomed.begin(), doomed.end()), doomed.end());
      d.steps.push_back(carve_edges(x, doomed, true));
      break;
    }
    case Family::rhombille: {
      d.base = gen_triangular(lattice, ch);
      const Lattice2D centers = ch == Chirality::anti ? Lattice2D({1, 1}, {3, 0}) : Lattice2D({1, -1}, {3, 0});
      if (!centers.contains(lattice)) {
        throw Error(Errc::NotDescendable, "rhombille: lattice " + lattice.to_string() +
                                              " does not preserve the center sublattice");
      }
      std::vector<CellId> doomed;
      for (CellId e : d.base->complex.edges()) {
        auto ends = d.base->complex.vertices_of(e);
        if (!rhombille_center(d.base->tags[ends[0]].base, ch) && !rhombille_center(d.base->tags[ends[1]].base, ch)) {
          doomed.push_back(e);
        }
      }
      d.steps.push_back(carve_edges(d.base->complex, doomed));
      break;
    }
  }
  d.result = d.steps.back().complex;
  return d;
}

CellComplex gen_family(const TilingSpec& spec) { return derive(spec).result; }

const EdgePattern& snub_square_pattern() {
  static const EdgePattern pattern{Lattice2D({4, 0}, {2, 1}),
                                   {{tri_role::horizontal, {0, 0}}, {tri_role::diagonal, {1, 0}}}};
  return pattern;
}

}  // namespace etcc
