#include "etcc/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "etcc/error.hpp"

namespace etcc {

namespace {

class CanonicalSearch {
 public:
  CanonicalSearch(const Skeleton& graph, std::vector<int> initial)
      : graph_(graph), initial_(std::move(initial)), n_(graph.vertex_count) {}

  CanonicalForm run() {
    std::vector<int> colors = initial_;
    normalize(colors);
    refine(colors);
    descend(colors);
    return *best_;
  }

 private:
  // Relabel colors as dense ranks of their values.
  static void normalize(std::vector<int>& colors) {
    std::vector<int> values(colors);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int& c : colors) c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
  }

  // Colour refinement to the coarsest equitable partition finer than colors.
  void refine(std::vector<int>& colors) const {
    std::size_t classes = count_classes(colors);
    std::vector<std::pair<std::vector<int>, std::size_t>> sigs(n_);
    for (;;) {
      for (std::size_t v = 0; v < n_; ++v) {
        auto& sig = sigs[v].first;
        sig.clear();
        sig.push_back(colors[v]);
        for (CellId w : graph_.adjacency[v]) sig.push_back(colors[w]);
        std::sort(sig.begin() + 1, sig.end());
        sigs[v].second = v;
      }
      std::vector<std::size_t> order(n_);
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sigs[a].first < sigs[b].first; });
      int next = -1;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == 0 || sigs[order[i]].first != sigs[order[i - 1]].first) ++next;
        colors[order[i]] = next;
      }
      std::size_t now = static_cast<std::size_t>(next + 1);
      if (now == classes) return;
      classes = now;
    }
  }

  static std::size_t count_classes(const std::vector<int>& colors) {
    std::vector<int> c(colors);
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void descend(const std::vector<int>& colors) {
    // Target: the non-singleton class with the least color.
    std::vector<int> size(n_, 0);
    for (int c : colors) ++size[c];
    int target = -1;
    for (std::size_t c = 0; c < n_; ++c) {
      if (size[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    }
    if (target < 0) {
      leaf(colors);
      return;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> next(n_);
      for (std::size_t u = 0; u < n_; ++u) next[u] = 2 * colors[u] + (u == v ? 0 : 1);
      normalize(next);
      refine(next);
      descend(next);
    }
  }

  void leaf(const std::vector<int>& colors) {
    // colors is a bijection onto [0, n): position of each vertex.
    std::vector<std::size_t> at(n_);
    for (std::size_t v = 0; v < n_; ++v) at[colors[v]] = v;
    const std::size_t words = (n_ + 63) / 64;
    CanonicalForm form;
    form.colors.resize(n_);
    form.rows.assign(n_ * words, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      std::size_t v = at[i];
      form.colors[i] = initial_[v];
      for (CellId w : graph_.adjacency[v]) {
        std::size_t j = static_cast<std::size_t>(colors[w]);
        form.rows[i * words + j / 64] |= std::uint64_t{1} << (63 - j % 64);
      }
    }
    if (!best_ || *best_ < form) best_ = std::move(form);
  }

  const Skeleton& graph_;
  std::vector<int> initial_;
  std::size_t n_;
  std::optional<CanonicalForm> best_;
};

}  // namespace

CanonicalForm canonical_form(const Skeleton& graph, std::span<const int> vertex_colors, std::size_t max_vertices) {
  if (graph.vertex_count > max_vertices) {
    throw Error(Errc::SizeBound, "graph has " + std::to_string(graph.vertex_count) + " vertices, bound is " +
                                     std::to_string(max_vertices));
  }
  if (graph.vertex_count == 0) return {};
  std::vector<int> initial(graph.vertex_count, 0);
  if (!vertex_colors.empty()) {
    if (vertex_colors.size() != graph.vertex_count) throw Error(Errc::InvalidCell, "vertex color count mismatch");
    initial.assign(vertex_colors.begin(), vertex_colors.end());
  }
  return CanonicalSearch(graph, std::move(initial)).run();
}

bool graph_isomorphic(const Skeleton& g, const Skeleton& h, std::size_t max_vertices) {
  if (g.vertex_count > max_vertices || h.vertex_count > max_vertices) {
    throw Error(Errc::SizeBound, "graph exceeds the isomorphism size bound " + std::to_string(max_vertices));
  }
  if (g.vertex_count != h.vertex_count || g.edge_count() != h.edge_count()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  return canonical_form(g, {}, max_vertices) == canonical_form(h, {}, max_vertices);
}

namespace {

Skeleton incidence_graph(const CellComplex& x, std::vector<int>& ranks) {
  std::vector<std::pair<CellId, CellId>> edges;
  for (CellId e : x.edges()) {
    for (CellId v : x.vertices_of(e)) edges.emplace_back(v, e);
  }
  for (CellId f : x.faces()) {
    for (CellId e : x.border_edges(f)) edges.emplace_back(e, f);
  }
  ranks.clear();
  for (const Cell& c : x.cells()) ranks.push_back(c.rank);
  return Skeleton::from_edges(x.size(), std::move(edges));
}

}  // namespace

bool complexes_isomorphic(const CellComplex& a, const CellComplex& b, std::size_t max_cells) {
  for (int r = 0; r <= kMaxRank; ++r) {
    if (a.count(r) != b.count(r)) return false;
  }
  if (face_size_counts(a) != face_size_counts(b)) return false;
  std::vector<int> ra;
  std::vector<int> rb;
  Skeleton ga = incidence_graph(a, ra);
  Skeleton gb = incidence_graph(b, rb);
  return canonical_form(ga, ra, max_cells) == canonical_form(gb, rb, max_cells);
}

Skeleton complete_graph(std::size_t n) {
  std::vector<std::pair<CellId, CellId>> edges;
  for (CellId a = 0; a < n; ++a) {
    for (CellId b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return Skeleton::from_edges(n, std::move(edges));
}

Skeleton cycle_graph(std::size_t n) {
  std::vector<std::pair<CellId, CellId>> edges;
  for (CellId a = 0; a < n; ++a) edges.emplace_back(a, static_cast<CellId>((a + 1) % n));
  return Skeleton::from_edges(n, std::move(edges));
}

Skeleton path_graph(std::size_t n) {
  std::vector<std::pair<CellId, CellId>> edges;
  for (CellId a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
  return Skeleton::from_edges(n, std::move(edges));
}

}  // namespace etcc
