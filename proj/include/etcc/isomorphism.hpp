#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "etcc/cell_complex.hpp"

namespace etcc {

inline constexpr std::size_t kDefaultIsomorphismBound = 64;

// Canonical form of a vertex-colored simple graph: initial colors and
// adjacency rows listed in canonical vertex order. Two colored graphs are
// isomorphic iff their canonical forms compare equal.
struct CanonicalForm {
  std::vector<int> colors;
  std::vector<std::uint64_t> rows;  // packed adjacency bits, n rows of ceil(n/64) words

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

// Individualization-refinement over equitable partitions; the certificate
// is the lexicographically largest leaf. Throws SizeBound above the bound.
CanonicalForm canonical_form(const Skeleton& graph, std::span<const int> vertex_colors = {},
                             std::size_t max_vertices = kDefaultIsomorphismBound);

bool graph_isomorphic(const Skeleton& g, const Skeleton& h,
                      std::size_t max_vertices = kDefaultIsomorphismBound);

// Isomorphism of complexes as rank-colored incidence graphs (vertex-edge and
// edge-face border incidences).
bool complexes_isomorphic(const CellComplex& a, const CellComplex& b, std::size_t max_cells = 512);

Skeleton complete_graph(std::size_t n);
Skeleton cycle_graph(std::size_t n);
Skeleton path_graph(std::size_t n);

}  // namespace etcc
