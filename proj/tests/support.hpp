#pragma once

// Hand-built complexes and small oracles shared by the test files. Nothing
// here calls the generators, so tests can compare them against it.

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "etcc/cell_complex.hpp"
#include "etcc/coloring.hpp"

namespace etcc::test {

// m x n square grid on the torus, vertex (i, j) = i + m * j. Needs m, n >= 3.
inline CellComplex grid_torus(CellId m, CellId n) {
  auto at = [&](CellId i, CellId j) { return (i % m) + m * (j % n); };
  std::vector<std::pair<CellId, CellId>> edges;
  std::vector<std::vector<CellId>> faces;
  for (CellId j = 0; j < n; ++j) {
    for (CellId i = 0; i < m; ++i) {
      edges.emplace_back(at(i, j), at(i + 1, j));
      edges.emplace_back(at(i, j), at(i, j + 1));
      faces.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)});
    }
  }
  return build_complex(m * n, edges, faces);
}

// One triangle: 3 vertices, 3 edges, 1 face.
inline CellComplex triangle() {
  const std::vector<std::pair<CellId, CellId>> edges = {{0, 1}, {1, 2}, {0, 2}};
  const std::vector<std::vector<CellId>> faces = {{0, 1, 2}};
  return build_complex(3, edges, faces);
}

// Edge list of the Heawood graph: the 14-cycle with chords i -- i+5 from
// every even i.
inline Skeleton heawood() {
  std::vector<std::pair<CellId, CellId>> edges;
  for (CellId i = 0; i < 14; ++i) edges.emplace_back(i, (i + 1) % 14);
  for (CellId i = 0; i < 14; i += 2) edges.emplace_back(i, (i + 5) % 14);
  return Skeleton::from_edges(14, edges);
}

inline std::size_t girth(const Skeleton& g) {
  std::size_t best = g.vertex_count + 1;
  for (CellId s = 0; s < g.vertex_count; ++s) {
    std::vector<int> dist(g.vertex_count, -1), parent(g.vertex_count, -1);
    std::vector<CellId> queue = {s};
    dist[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const CellId v = queue[h];
      for (CellId w : g.adjacency[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = static_cast<int>(v);
          queue.push_back(w);
        } else if (parent[v] != static_cast<int>(w)) {
          best = std::min<std::size_t>(best, static_cast<std::size_t>(dist[v] + dist[w] + 1));
        }
      }
    }
  }
  return best;
}

inline bool bipartite(const Skeleton& g) {
  std::vector<int> side(g.vertex_count, -1);
  for (CellId s = 0; s < g.vertex_count; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<CellId> stack = {s};
    while (!stack.empty()) {
      const CellId v = stack.back();
      stack.pop_back();
      for (CellId w : g.adjacency[v]) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// How many cells of each rank carry each color.
inline std::vector<std::size_t> color_histogram(const CellComplex& x, const ColorAssignment& c, int rank) {
  std::vector<std::size_t> h(static_cast<std::size_t>(c.k + 1), 0);
  for (CellId id : x.ids(rank)) ++h[static_cast<std::size_t>(c[id])];
  return h;
}

// Relabels colors so they appear in first-use order along cell ids.
inline std::vector<Color> canonical_relabel(const ColorAssignment& c) {
  std::vector<int> map(static_cast<std::size_t>(c.k + 1), -1);
  int next = 0;
  std::vector<Color> out;
  for (Color col : c.colors) {
    int& m = map[static_cast<std::size_t>(col)];
    if (m < 0) m = next++;
    out.push_back(m);
  }
  return out;
}

}  // namespace etcc::test
