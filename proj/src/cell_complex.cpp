#include "etcc/cell_complex.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "etcc/error.hpp"

namespace etcc {

namespace {

std::uint64_t edge_key(CellId a, CellId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::string cell_name(CellId id) { return "cell " + std::to_string(id); }

// Rotate to the least vertex, then pick the smaller of the two directions.
void canonicalize_cycle(std::vector<CellId>& cycle) {
  auto least = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), least, cycle.end());
  std::vector<CellId> reversed(cycle.size());
  reversed[0] = cycle[0];
  std::reverse_copy(cycle.begin() + 1, cycle.end(), reversed.begin() + 1);
  if (reversed < cycle) cycle = std::move(reversed);
}

bool is_subset(const std::vector<CellId>& small, const std::vector<CellId>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Point2 lift_near(const Embedding& emb, Point2 p, Point2 target) {
  Point2 best = p;
  double best_d = INFINITY;
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) {
      Point2 q{p.x + a * emb.period_u.x + b * emb.period_v.x,
               p.y + a * emb.period_u.y + b * emb.period_v.y};
      double d = std::hypot(q.x - target.x, q.y - target.y);
      if (d < best_d - 1e-12) {
        best_d = d;
        best = q;
      }
    }
  }
  return best;
}

// Barycenter of a vertex cycle, lifting each vertex next to its predecessor.
Point2 cycle_center(const Embedding& emb, std::span<const CellId> cycle) {
  Point2 prev = emb.positions[cycle[0]];
  Point2 sum = prev;
  for (std::size_t i = 1; i < cycle.size(); ++i) {
    prev = lift_near(emb, emb.positions[cycle[i]], prev);
    sum.x += prev.x;
    sum.y += prev.y;
  }
  return {sum.x / cycle.size(), sum.y / cycle.size()};
}

}  // namespace

CellId CellComplex::other_end(CellId edge, CellId v) const {
  const auto& vs = cells_[edge].vertices;
  return vs[0] == v ? vs[1] : vs[0];
}

std::vector<CellId> CellComplex::border_edges(CellId face) const {
  std::vector<CellId> out;
  auto b = border(face);
  for (std::size_t i = 1; i < b.size(); i += 2) out.push_back(b[i]);
  return out;
}

std::optional<CellId> CellComplex::edge_between(CellId a, CellId b) const {
  auto key = edge_key(a, b);
  auto it = std::lower_bound(edge_index_.begin(), edge_index_.end(), std::make_pair(key, CellId{0}));
  if (it == edge_index_.end() || it->first != key) return std::nullopt;
  return it->second;
}

std::vector<CellId> CellComplex::below(CellId id) const {
  std::vector<CellId> sorted(cells_[id].vertices);
  std::sort(sorted.begin(), sorted.end());
  std::set<CellId> out;
  for (CellId v : sorted) {
    if (sorted.size() > 1) out.insert(v);
    for (CellId e : vertex_edges_[v]) {
      if (e != id && is_subset(cells_[e].vertices, sorted)) out.insert(e);
    }
    for (CellId f : vertex_faces_[v]) {
      if (f == id) continue;
      std::vector<CellId> fs(cells_[f].vertices);
      std::sort(fs.begin(), fs.end());
      if (fs.size() < sorted.size() && is_subset(fs, sorted)) out.insert(f);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<CellId> CellComplex::above(CellId id) const {
  std::vector<CellId> sorted(cells_[id].vertices);
  std::sort(sorted.begin(), sorted.end());
  std::vector<CellId> out;
  auto consider = [&](CellId c) {
    std::vector<CellId> cs(cells_[c].vertices);
    std::sort(cs.begin(), cs.end());
    if (cs.size() > sorted.size() && is_subset(sorted, cs)) out.push_back(c);
  };
  for (CellId e : vertex_edges_[sorted[0]]) consider(e);
  for (CellId f : vertex_faces_[sorted[0]]) consider(f);
  std::sort(out.begin(), out.end());
  return out;
}

CellComplex CellComplex::with_embedding(Embedding embedding) const {
  CellComplex copy = *this;
  copy.embedding_ = std::move(embedding);
  return copy;
}

CellComplex build_complex(std::vector<Cell> cells) {
  if (cells.empty()) throw Error(Errc::InvalidCell, "empty cell list");
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0 && cells[i].id == cells[i - 1].id) {
      throw Error(Errc::DuplicateCell, "id " + std::to_string(cells[i].id) + " used twice");
    }
    if (cells[i].id != i) throw Error(Errc::InvalidCell, "cell ids must be 0.." + std::to_string(cells.size() - 1));
    if (cells[i].rank < 0 || cells[i].rank > kMaxRank) {
      throw Error(Errc::InvalidCell, cell_name(cells[i].id) + " has rank outside 0..2");
    }
    if (i > 0 && cells[i].rank < cells[i - 1].rank) {
      throw Error(Errc::InvalidCell, "cell ids must be ordered by rank");
    }
  }

  CellComplex x;
  for (const Cell& c : cells) ++x.counts_[c.rank];
  x.first_[0] = 0;
  x.first_[1] = static_cast<CellId>(x.counts_[0]);
  x.first_[2] = static_cast<CellId>(x.counts_[0] + x.counts_[1]);
  const CellId n0 = x.first_[1];

  std::set<std::pair<int, std::vector<CellId>>> seen;
  for (Cell& c : cells) {
    const std::size_t need_min = c.rank == 2 ? 3 : static_cast<std::size_t>(c.rank) + 1;
    if (c.rank < 2 ? c.vertices.size() != need_min : c.vertices.size() < need_min) {
      throw Error(Errc::InvalidCell, cell_name(c.id) + " has the wrong number of vertices for rank " +
                                         std::to_string(c.rank));
    }
    for (CellId v : c.vertices) {
      if (v >= n0) {
        throw Error(Errc::DanglingVertexReference, cell_name(c.id) + " references vertex " + std::to_string(v));
      }
    }
    if (c.rank == 0 && c.vertices[0] != c.id) {
      throw Error(Errc::InvalidCell, "vertex " + cell_name(c.id) + " must have vertex set {id}");
    }
    if (c.rank == 1) {
      if (c.vertices[0] == c.vertices[1]) throw Error(Errc::InvalidCell, cell_name(c.id) + " is a loop");
      std::sort(c.vertices.begin(), c.vertices.end());
    }
    std::vector<CellId> key(c.vertices);
    std::sort(key.begin(), key.end());
    if (c.rank == 2 && std::adjacent_find(key.begin(), key.end()) != key.end()) {
      throw Error(Errc::NonCyclicBorder, "face " + cell_name(c.id) + " repeats a border vertex");
    }
    if (!seen.emplace(c.rank, std::move(key)).second) {
      throw Error(Errc::DuplicateCell, cell_name(c.id) + " repeats the vertex set of an earlier cell");
    }
  }

  for (CellId e = x.first_[1]; e < x.first_[2]; ++e) {
    x.edge_index_.emplace_back(edge_key(cells[e].vertices[0], cells[e].vertices[1]), e);
  }
  std::sort(x.edge_index_.begin(), x.edge_index_.end());
  x.cells_ = std::move(cells);

  x.vertex_edges_.assign(n0, {});
  x.vertex_neighbors_.assign(n0, {});
  x.vertex_faces_.assign(n0, {});
  x.edge_faces_.assign(x.counts_[1], {});
  for (CellId e : x.edges()) {
    auto [a, b] = std::pair{x.cells_[e].vertices[0], x.cells_[e].vertices[1]};
    x.vertex_edges_[a].push_back(e);
    x.vertex_edges_[b].push_back(e);
    x.vertex_neighbors_[a].push_back(b);
    x.vertex_neighbors_[b].push_back(a);
  }
  for (auto& ns : x.vertex_neighbors_) std::sort(ns.begin(), ns.end());

  for (CellId f : x.faces()) {
    auto& cyc = x.cells_[f].vertices;
    canonicalize_cycle(cyc);
    std::vector<CellId> border;
    border.reserve(2 * cyc.size());
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      CellId a = cyc[i];
      CellId b = cyc[(i + 1) % cyc.size()];
      auto e = x.edge_between(a, b);
      if (!e) {
        throw Error(Errc::NonCyclicBorder, "face " + cell_name(f) + ": no edge between vertices " +
                                               std::to_string(a) + " and " + std::to_string(b));
      }
      border.push_back(a);
      border.push_back(*e);
      x.vertex_faces_[a].push_back(f);
      x.edge_faces_[*e - x.first_[1]].push_back(f);
    }
    x.borders_.push_back(std::move(border));
  }
  return x;
}

CellComplex build_complex(std::size_t vertex_count, std::span<const std::pair<CellId, CellId>> edges,
                          std::span<const std::vector<CellId>> faces) {
  std::vector<Cell> cells;
  cells.reserve(vertex_count + edges.size() + faces.size());
  CellId id = 0;
  for (std::size_t v = 0; v < vertex_count; ++v, ++id) cells.push_back({id, 0, {id}});
  for (auto [a, b] : edges) cells.push_back({id++, 1, {a, b}});
  for (const auto& f : faces) cells.push_back({id++, 2, f});
  return build_complex(std::move(cells));
}

bool Skeleton::adjacent(CellId a, CellId b) const {
  return std::binary_search(adjacency[a].begin(), adjacency[a].end(), b);
}

Skeleton Skeleton::from_edges(std::size_t vertex_count, std::vector<std::pair<CellId, CellId>> edges) {
  Skeleton s;
  s.vertex_count = vertex_count;
  s.adjacency.assign(vertex_count, {});
  std::set<std::uint64_t> seen;
  for (auto& [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) {
      throw Error(Errc::DanglingVertexReference, "edge endpoint out of range");
    }
    if (a == b) throw Error(Errc::SkeletonNotSimple, "loop at vertex " + std::to_string(a));
    if (!seen.insert(edge_key(a, b)).second) {
      throw Error(Errc::SkeletonNotSimple,
                  "repeated edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    s.adjacency[a].push_back(b);
    s.adjacency[b].push_back(a);
  }
  for (auto& ns : s.adjacency) std::sort(ns.begin(), ns.end());
  s.edges = std::move(edges);
  return s;
}

Skeleton skeleton(const CellComplex& complex) {
  std::vector<std::pair<CellId, CellId>> edges;
  edges.reserve(complex.count(1));
  for (CellId e : complex.edges()) {
    auto vs = complex.vertices_of(e);
    edges.emplace_back(vs[0], vs[1]);
  }
  return Skeleton::from_edges(complex.count(0), std::move(edges));
}

long euler_characteristic(const CellComplex& complex) {
  return static_cast<long>(complex.count(0)) - static_cast<long>(complex.count(1)) +
         static_cast<long>(complex.count(2));
}

std::vector<std::size_t> degree_sequence(const Skeleton& graph) {
  std::vector<std::size_t> out;
  out.reserve(graph.vertex_count);
  for (const auto& ns : graph.adjacency) out.push_back(ns.size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::optional<std::size_t> is_regular(const Skeleton& graph) {
  if (graph.vertex_count == 0) return std::nullopt;
  std::size_t d = graph.adjacency[0].size();
  for (const auto& ns : graph.adjacency) {
    if (ns.size() != d) return std::nullopt;
  }
  return d;
}

std::vector<FanStep> vertex_fan(const CellComplex& complex, CellId vertex) {
  auto faces = complex.faces_at_vertex(vertex);
  auto edges = complex.edges_at(vertex);
  if (faces.empty() || faces.size() != edges.size()) {
    throw Error(Errc::NotClosedSurface, "vertex " + std::to_string(vertex) + " is not surrounded by a disk of faces");
  }
  // The two border edges of a face at the vertex.
  auto edges_in = [&](CellId f) {
    auto b = complex.border(f);
    std::size_t n = b.size();
    for (std::size_t i = 0; i < n; i += 2) {
      if (b[i] == vertex) return std::pair{b[(i + n - 1) % n], b[i + 1]};
    }
    throw Error(Errc::NotClosedSurface, "inconsistent face incidence");
  };
  for (CellId e : edges) {
    if (complex.faces_at_edge(e).size() != 2) {
      throw Error(Errc::NotClosedSurface, "edge " + std::to_string(e) + " borders " +
                                              std::to_string(complex.faces_at_edge(e).size()) + " faces");
    }
  }
  std::vector<FanStep> fan;
  CellId start = faces[0];
  auto [e1, e2] = edges_in(start);
  CellId face = start;
  CellId out_edge = std::min(e1, e2);
  for (;;) {
    fan.push_back({face, out_edge});
    auto fs = complex.faces_at_edge(out_edge);
    CellId next = fs[0] == face ? fs[1] : fs[0];
    if (next == start) break;
    auto [a, b] = edges_in(next);
    out_edge = a == out_edge ? b : a;
    face = next;
    if (fan.size() > faces.size()) break;
  }
  if (fan.size() != faces.size()) {
    throw Error(Errc::NotClosedSurface, "faces around vertex " + std::to_string(vertex) + " form several cycles");
  }
  return fan;
}

bool is_closed_surface(const CellComplex& complex) {
  try {
    for (CellId v : complex.vertices()) vertex_fan(complex, v);
  } catch (const Error&) {
    return false;
  }
  for (CellId e : complex.edges()) {
    if (complex.faces_at_edge(e).size() != 2) return false;
  }
  return true;
}

bool is_torus(const CellComplex& complex) {
  return euler_characteristic(complex) == 0 && is_closed_surface(complex);
}

std::vector<std::size_t> vertex_configuration(const CellComplex& complex, CellId vertex) {
  std::vector<std::size_t> out;
  for (const FanStep& s : vertex_fan(complex, vertex)) out.push_back(complex.vertices_of(s.face).size());
  return out;
}

bool same_configuration(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool fwd = true;
    bool bwd = true;
    for (std::size_t i = 0; i < n && (fwd || bwd); ++i) {
      if (a[i] != b[(shift + i) % n]) fwd = false;
      if (a[i] != b[(shift + n - i) % n]) bwd = false;
    }
    if (fwd || bwd) return true;
  }
  return n == 0;
}

CellComplex dual_torus(const CellComplex& complex) {
  if (euler_characteristic(complex) != 0 || !is_closed_surface(complex)) {
    throw Error(Errc::NotClosedSurface, "dual_torus needs a closed surface of Euler characteristic 0");
  }
  const CellId f0 = complex.first(2);
  std::vector<std::pair<CellId, CellId>> edges;
  for (CellId e : complex.edges()) {
    auto fs = complex.faces_at_edge(e);
    edges.emplace_back(fs[0] - f0, fs[1] - f0);
  }
  std::vector<std::vector<CellId>> faces;
  for (CellId v : complex.vertices()) {
    std::vector<CellId> cycle;
    for (const FanStep& s : vertex_fan(complex, v)) cycle.push_back(s.face - f0);
    faces.push_back(std::move(cycle));
  }
  CellComplex dual = build_complex(complex.count(2), edges, faces);
  if (const auto& emb = complex.embedding()) {
    Embedding d{{}, emb->period_u, emb->period_v};
    for (CellId f : complex.faces()) d.positions.push_back(cycle_center(*emb, complex.vertices_of(f)));
    dual = dual.with_embedding(std::move(d));
  }
  return dual;
}

CellComplex line_complex(const CellComplex& complex) {
  if (euler_characteristic(complex) != 0 || !is_closed_surface(complex)) {
    throw Error(Errc::NotClosedSurface, "line_complex needs a closed surface of Euler characteristic 0");
  }
  for (CellId v : complex.vertices()) {
    if (complex.edges_at(v).size() != 3) {
      throw Error(Errc::NotCubic, "vertex " + std::to_string(v) + " has degree " +
                                      std::to_string(complex.edges_at(v).size()));
    }
  }
  const CellId e0 = complex.first(1);
  std::vector<std::pair<CellId, CellId>> edges;
  for (CellId v : complex.vertices()) {
    auto es = complex.edges_at(v);
    edges.emplace_back(es[0] - e0, es[1] - e0);
    edges.emplace_back(es[0] - e0, es[2] - e0);
    edges.emplace_back(es[1] - e0, es[2] - e0);
  }
  std::vector<std::vector<CellId>> faces;
  for (CellId f : complex.faces()) {
    std::vector<CellId> cycle;
    for (CellId e : complex.border_edges(f)) cycle.push_back(e - e0);
    faces.push_back(std::move(cycle));
  }
  for (CellId v : complex.vertices()) {
    auto es = complex.edges_at(v);
    faces.push_back({es[0] - e0, es[1] - e0, es[2] - e0});
  }
  CellComplex line = build_complex(complex.count(1), edges, faces);
  if (const auto& emb = complex.embedding()) {
    Embedding d{{}, emb->period_u, emb->period_v};
    for (CellId e : complex.edges()) d.positions.push_back(cycle_center(*emb, complex.vertices_of(e)));
    line = line.with_embedding(std::move(d));
  }
  return line;
}

CellComplex relabel(const CellComplex& complex, std::span<const CellId> perm) {
  if (perm.size() != complex.size()) throw Error(Errc::InvalidCell, "permutation size mismatch");
  std::vector<Cell> cells;
  cells.reserve(complex.size());
  for (const Cell& c : complex.cells()) {
    Cell out{perm[c.id], c.rank, {}};
    if (complex.rank(out.id) != c.rank) throw Error(Errc::InvalidCell, "permutation must preserve rank");
    for (CellId v : c.vertices) out.vertices.push_back(perm[v]);
    cells.push_back(std::move(out));
  }
  CellComplex result = build_complex(std::move(cells));
  if (const auto& emb = complex.embedding()) {
    Embedding e{std::vector<Point2>(emb->positions.size()), emb->period_u, emb->period_v};
    for (CellId v : complex.vertices()) e.positions[perm[v]] = emb->positions[v];
    result = result.with_embedding(std::move(e));
  }
  return result;
}

AxiomReport validate_axioms(std::span<const Cell> cells) {
  std::vector<std::vector<CellId>> sets;
  sets.reserve(cells.size());
  std::map<std::vector<CellId>, std::vector<std::size_t>> by_set;
  std::map<CellId, std::vector<std::size_t>> containing;  // vertex label -> cells
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::vector<CellId> s(cells[i].vertices);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    by_set[s].push_back(i);
    for (CellId v : s) containing[v].push_back(i);
    sets.push_back(std::move(s));
  }
  auto strict_subset = [&](std::size_t a, std::size_t b) {
    return sets[a].size() < sets[b].size() && is_subset(sets[a], sets[b]);
  };

  AxiomReport report;
  auto fail = [&](int axiom, std::size_t a, std::size_t b) {
    report.violations.push_back({axiom, cells[a].id, cells[b].id});
  };

  for (std::size_t a = 0; a < cells.size(); ++a) {
    // Candidate partners share at least one vertex with a.
    std::set<std::size_t> partners;
    for (CellId v : sets[a]) {
      for (std::size_t b : containing[v]) partners.insert(b);
    }
    for (std::size_t b : partners) {
      if (b == a) continue;
      if (a < b) {
        std::vector<CellId> meet;
        std::set_intersection(sets[a].begin(), sets[a].end(), sets[b].begin(), sets[b].end(),
                              std::back_inserter(meet));
        if (!meet.empty() && !by_set.count(meet)) fail(2, a, b);
      }
      if (!strict_subset(a, b)) continue;
      const int ra = cells[a].rank;
      const int rb = cells[b].rank;
      if (ra >= rb) fail(1, a, b);

      // Cells C of rank ra+1 with A < C <= B.
      std::vector<std::size_t> between;
      for (std::size_t c : containing[sets[a][0]]) {
        if (cells[c].rank == ra + 1 && strict_subset(a, c) && (c == b || strict_subset(c, b))) {
          between.push_back(c);
        }
      }
      if (between.empty()) fail(3, a, b);

      if (rb == ra + 2) {
        bool found = false;
        for (std::size_t i = 0; i < between.size() && !found; ++i) {
          for (std::size_t j = i + 1; j < between.size() && !found; ++j) {
            if (between[i] == b || between[j] == b) continue;
            std::vector<CellId> meet;
            std::set_intersection(sets[between[i]].begin(), sets[between[i]].end(), sets[between[j]].begin(),
                                  sets[between[j]].end(), std::back_inserter(meet));
            found = meet == sets[a];
          }
        }
        if (!found) fail(4, a, b);
      }
    }
  }
  std::sort(report.violations.begin(), report.violations.end(), [](const auto& x, const auto& y) {
    return std::tie(x.axiom, x.first, x.second) < std::tie(y.axiom, y.first, y.second);
  });
  return report;
}

AxiomReport validate_axioms(const CellComplex& complex) { return validate_axioms(complex.cells()); }

std::vector<std::pair<std::size_t, std::size_t>> face_size_counts(const CellComplex& complex) {
  std::map<std::size_t, std::size_t> counts;
  for (CellId f : complex.faces()) ++counts[complex.vertices_of(f).size()];
  return {counts.begin(), counts.end()};
}

}  // namespace etcc
