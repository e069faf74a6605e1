#pragma once

// Finite combinatorial 2-cell complexes.
//
// A complex is a graded family of vertex subsets. Cell ids are dense and
// rank-ordered: vertices occupy [0, n0), edges [n0, n0 + n1) and faces the
// rest. A vertex cell with id v has vertex set {v}, so vertex labels and
// vertex cell ids coincide. Faces keep their vertices in border order
// because a vertex set alone does not determine the border of a face on a
// small torus (on the 5-vertex square torus every pair of vertices is an
// edge).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace etcc {

using CellId = std::uint32_t;
using IdRange = decltype(std::views::iota(CellId{0}, CellId{0}));

inline constexpr int kMaxRank = 2;

struct Cell {
  CellId id = 0;
  int rank = 0;
  // rank 0: {id}; rank 1: the two endpoints; rank 2: border vertices in
  // cyclic order.
  std::vector<CellId> vertices;

  bool operator==(const Cell&) const = default;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// Plane coordinates for drawing. Positions are one lift per vertex; the
// torus is the plane modulo the two period vectors.
struct Embedding {
  std::vector<Point2> positions;
  Point2 period_u;
  Point2 period_v;
};

class CellComplex {
 public:
  std::size_t size() const { return cells_.size(); }
  std::size_t count(int rank) const { return counts_[rank]; }
  CellId first(int rank) const { return first_[rank]; }
  IdRange ids(int rank) const {
    return std::views::iota(first_[rank], first_[rank] + static_cast<CellId>(counts_[rank]));
  }
  IdRange vertices() const { return ids(0); }
  IdRange edges() const { return ids(1); }
  IdRange faces() const { return ids(2); }

  std::span<const Cell> cells() const { return cells_; }
  const Cell& cell(CellId id) const { return cells_[id]; }
  int rank(CellId id) const { return cells_[id].rank; }

  // Vertex set in stored order (sorted for edges, border order for faces).
  std::span<const CellId> vertices_of(CellId id) const { return cells_[id].vertices; }
  CellId other_end(CellId edge, CellId v) const;

  // Alternating vertex/edge ids around a face: v0 e01 v1 e12 ... e(n-1)0.
  std::span<const CellId> border(CellId face) const { return borders_[face - first_[2]]; }
  std::vector<CellId> border_edges(CellId face) const;

  std::optional<CellId> edge_between(CellId a, CellId b) const;
  std::span<const CellId> edges_at(CellId v) const { return vertex_edges_[v]; }
  std::span<const CellId> neighbors(CellId v) const { return vertex_neighbors_[v]; }
  std::span<const CellId> faces_at_vertex(CellId v) const { return vertex_faces_[v]; }
  std::span<const CellId> faces_at_edge(CellId e) const { return edge_faces_[e - first_[1]]; }

  // Every cell strictly contained in / strictly containing the given cell.
  std::vector<CellId> below(CellId id) const;
  std::vector<CellId> above(CellId id) const;

  const std::optional<Embedding>& embedding() const { return embedding_; }
  CellComplex with_embedding(Embedding embedding) const;

  bool operator==(const CellComplex& other) const { return cells_ == other.cells_; }

 private:
  friend CellComplex build_complex(std::vector<Cell> cells);

  std::vector<Cell> cells_;
  std::size_t counts_[kMaxRank + 1] = {0, 0, 0};
  CellId first_[kMaxRank + 1] = {0, 0, 0};
  std::vector<std::vector<CellId>> borders_;
  std::vector<std::vector<CellId>> vertex_edges_;
  std::vector<std::vector<CellId>> vertex_neighbors_;
  std::vector<std::vector<CellId>> vertex_faces_;
  std::vector<std::vector<CellId>> edge_faces_;
  std::vector<std::pair<std::uint64_t, CellId>> edge_index_;  // sorted by key
  std::optional<Embedding> embedding_;
};

// Validates and indexes a cell list. Ids must be a permutation of
// [0, size) with ranks non-decreasing in id. Face borders are canonicalized
// to start at their least vertex and run in the lexicographically smaller
// direction.
CellComplex build_complex(std::vector<Cell> cells);

// Convenience for generators: vertex count, endpoint pairs and face borders.
CellComplex build_complex(std::size_t vertex_count,
                          std::span<const std::pair<CellId, CellId>> edges,
                          std::span<const std::vector<CellId>> faces);

struct Skeleton {
  std::size_t vertex_count = 0;
  std::vector<std::pair<CellId, CellId>> edges;
  std::vector<std::vector<CellId>> adjacency;

  std::size_t edge_count() const { return edges.size(); }
  std::size_t degree(CellId v) const { return adjacency[v].size(); }
  bool adjacent(CellId a, CellId b) const;

  // Throws SkeletonNotSimple on loops or repeated edges.
  static Skeleton from_edges(std::size_t vertex_count,
                             std::vector<std::pair<CellId, CellId>> edges);
};

// Edge i of the skeleton is cell first(1) + i of the complex.
Skeleton skeleton(const CellComplex& complex);

long euler_characteristic(const CellComplex& complex);
std::vector<std::size_t> degree_sequence(const Skeleton& graph);  // non-increasing
std::optional<std::size_t> is_regular(const Skeleton& graph);

// One step of the cyclic fan around a vertex: the face, then the edge it
// shares with the next face of the fan.
struct FanStep {
  CellId face;
  CellId edge;
};

// Faces around a vertex in cyclic order. Throws NotClosedSurface when an
// edge at the vertex does not border exactly two faces or the faces around
// the vertex do not form one cycle.
std::vector<FanStep> vertex_fan(const CellComplex& complex, CellId vertex);

// Closed surface: every edge borders two faces and every vertex link is a
// single cycle.
bool is_closed_surface(const CellComplex& complex);
bool is_torus(const CellComplex& complex);

// Cyclic face sizes around a vertex, in fan order.
std::vector<std::size_t> vertex_configuration(const CellComplex& complex, CellId vertex);
// Equality of cyclic sequences up to rotation and reflection.
bool same_configuration(std::span<const std::size_t> a, std::span<const std::size_t> b);

CellComplex dual_torus(const CellComplex& complex);
CellComplex line_complex(const CellComplex& complex);

// Renumbers cells within each rank. perm[old id] = new id; each rank must
// map onto itself.
CellComplex relabel(const CellComplex& complex, std::span<const CellId> perm);

struct AxiomViolation {
  int axiom = 0;  // 1..4
  CellId first = 0;
  CellId second = 0;

  bool operator==(const AxiomViolation&) const = default;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Exhaustive check of the four graded-poset axioms over all cell pairs,
// with containment and intersection taken on vertex sets. The raw overload
// accepts lists that build_complex would reject (e.g. a face with a missing
// border edge). Violations are sorted by (axiom, first, second).
AxiomReport validate_axioms(std::span<const Cell> cells);
AxiomReport validate_axioms(const CellComplex& complex);

// Face-size histogram, e.g. {3: 14, 6: 7}.
std::vector<std::pair<std::size_t, std::size_t>> face_size_counts(const CellComplex& complex);

}  // namespace etcc
