#pragma once

// Toroidal quotients of plane tilings and the carving operations that derive
// the Archimedean families from the square and triangular tilings.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "etcc/cell_complex.hpp"
#include "etcc/lattice.hpp"

namespace etcc {

enum class Chirality { anti, main };

std::string_view to_string(Chirality chirality);

// A translation-periodic plane complex given by one fundamental domain.
// Edges and faces refer to vertex copies as (local index, translation).
struct MotifRef {
  int local = 0;
  IVec2 shift;
};

struct PeriodicMotif {
  std::vector<Point2> positions;  // lattice coordinates of the local vertices
  std::vector<int> vertex_roles;
  std::vector<std::array<MotifRef, 2>> edges;
  std::vector<int> edge_roles;
  std::vector<std::vector<MotifRef>> faces;
  std::vector<int> face_roles;
  // Drawing-plane images of the lattice directions.
  Point2 axis_x{1.0, 0.0};
  Point2 axis_y{0.0, 1.0};

  std::size_t vertex_count() const { return positions.size(); }
};

// Which plane cell a torus cell comes from: its motif role and translation.
struct PlaneTag {
  int role = 0;
  IVec2 base;
};

struct TorusComplex {
  CellComplex complex;
  Lattice2D lattice;
  std::vector<PlaneTag> tags;  // indexed by cell id
};

// Cells are numbered by (coset in cosets(lattice) order, motif index).
// Throws SkeletonNotSimple when the quotient has loops, repeated edges or
// degenerate faces.
TorusComplex quotient(const PeriodicMotif& motif, const Lattice2D& lattice);

// Roles of the square motif.
namespace square_role {
inline constexpr int vertex = 0, horizontal = 1, vertical = 2, face = 3;
}
// Roles of the triangular motifs. With anti chirality the diagonal joins
// (x+1,y) and (x,y+1), face_a is {(x,y),(x+1,y),(x,y+1)} and face_b is
// {(x+1,y),(x,y+1),(x+1,y+1)}. With main chirality the diagonal joins (x,y)
// and (x+1,y+1), face_a is {(x,y),(x+1,y),(x+1,y+1)} and face_b is
// {(x,y),(x+1,y+1),(x,y+1)}.
namespace tri_role {
inline constexpr int vertex = 0, horizontal = 1, vertical = 2, diagonal = 3, face_a = 4, face_b = 5;
}

// Closed-form color forms indexed by the roles above: c = (x + 2y + offset)
// mod 5 on the square motif, (x + 5y + offset) mod 7 on the anti triangular
// motif and its mirror (x + 2y + offset) mod 7 on the main one.
ColorForm square_form();
ColorForm triangular_form(Chirality chirality);

PeriodicMotif square_motif();
PeriodicMotif triangular_motif(Chirality chirality);
// Flags (triangle, corner, side) of the triangular tiling; the quotient is a
// 4.6.12 complex.
PeriodicMotif truncated_trihexagonal_motif();

TorusComplex gen_square(const Lattice2D& lattice);
TorusComplex gen_triangular(const Lattice2D& lattice, Chirality chirality = Chirality::anti);
// Dual of the triangular quotient.
CellComplex gen_hexagonal(const Lattice2D& lattice, Chirality chirality = Chirality::anti);
// Line complex of the hexagonal quotient.
CellComplex gen_trihexagonal(const Lattice2D& lattice, Chirality chirality = Chirality::anti);

// Provenance of a carved cell: a survivor keeps one old cell; a merged face
// records the removed cells inside it, the old faces it absorbed and, when
// one removed cell accounts for the merge (the removed vertex, or the single
// removed edge), that cell as its center.
struct CellOrigin {
  std::optional<CellId> survivor;
  std::vector<CellId> deleted;
  std::vector<CellId> merged;
  std::optional<CellId> center;
};

struct CarveResult {
  CellComplex complex;
  std::vector<CellOrigin> origin;  // indexed by new cell id
};

// Removes an independent vertex set with no two members on one face; the
// faces around each removed vertex merge into one. Throws NotIndependent,
// FaceWithTwoDeleted.
CarveResult carve_vertices(const CellComplex& complex, std::span<const CellId> deleted);

// Removes edges, merging the two faces on either side. By default no face
// may lose two edges (DoubleMerge); with allow_multi_merge every connected
// group of faces joined by deleted edges becomes one face, provided the
// group is a tree and its outline is one simple cycle.
CarveResult carve_edges(const CellComplex& complex, std::span<const CellId> deleted,
                        bool allow_multi_merge = false);

// Edges of a torus quotient whose plane edge (role, base) satisfies a
// pattern periodic under `pattern`. Throws NotDescendable when the torus
// lattice is not contained in the pattern lattice.
struct EdgePattern {
  Lattice2D lattice;
  // (role, coset representative of the base in cosets(lattice)).
  std::vector<std::pair<int, IVec2>> edges;
};
std::vector<CellId> pattern_edges(const TorusComplex& torus, const EdgePattern& pattern);

enum class Family {
  square,
  triangular,
  hexagonal,
  trihexagonal,
  cr4_8_8,
  cr3_3_3_4_4,
  cr3_3_4_3_4,
  square_mod7,
  cr3_3_3_3_6,
  cr3_4_6_4,
  cr3_12_12,
  cr4_6_12,
  rhombille,
};

std::string_view to_string(Family family);
Family parse_family(std::string_view name);  // throws UnknownFamily
std::span<const Family> all_families();

// "family@u=a,b;v=c,d[;chirality=anti|main]"; the lattice part may be
// omitted, in which case the family's smallest default torus is used.
struct TilingSpec {
  Family family = Family::square;
  Lattice2D lattice{{1, 0}, {0, 1}};
  Chirality chirality = Chirality::anti;

  std::string to_string() const;
  static TilingSpec parse(std::string_view text);  // throws ParseError / UnknownFamily
  static Lattice2D default_lattice(Family family, Chirality chirality = Chirality::anti);

  bool operator==(const TilingSpec& other) const {
    return family == other.family && lattice == other.lattice && chirality == other.chirality;
  }
};

// The construction chain behind a family: a square or triangular quotient,
// then successive carvings. Hexagonal, trihexagonal and 4.6.12 have no
// carving chain; their base is still recorded where one exists.
struct Derivation {
  TilingSpec spec;
  std::optional<TorusComplex> base;
  std::vector<CarveResult> steps;
  CellComplex result;
};

Derivation derive(const TilingSpec& spec);
CellComplex gen_family(const TilingSpec& spec);

// The snub-square deletion pattern: a perfect matching of the triangular
// tiling with period lattice of index 4.
const EdgePattern& snub_square_pattern();

// Mirror image (x, y) -> (x, -y) of a pattern on the anti triangular motif,
// as a pattern on the main one.
EdgePattern mirror(const EdgePattern& pattern);

// Vertices kept at the obtuse corners of the rhombille carving:
// x ≡ y (mod 3) for anti chirality, x ≡ -y (mod 3) for main.
bool rhombille_center(IVec2 p, Chirality chirality);

}  // namespace etcc
