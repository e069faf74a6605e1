#pragma once

// Colorings of complexes: closed forms on the square and triangular
// quotients, and the transports to duals, line complexes and carvings.

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "etcc/cell_complex.hpp"
#include "etcc/tiling.hpp"

namespace etcc {

using Color = int;
using PartialColoring = std::vector<std::optional<Color>>;

// Total map cell id -> color in {0..k}.
struct ColorAssignment {
  int k = 0;
  std::vector<Color> colors;

  Color operator[](CellId id) const { return colors[id]; }
  std::size_t size() const { return colors.size(); }
  bool operator==(const ColorAssignment&) const = default;
};

// Throws NotDescendable when the form does not vanish on the torus lattice.
ColorAssignment color_closed_form(const TorusComplex& torus, const ColorForm& form);
ColorAssignment color_square(const TorusComplex& torus);
ColorAssignment color_triangular(const TorusComplex& torus, Chirality chirality = Chirality::anti);

// Coloring of dual_torus(primal): vertex and face colors swap, edges keep
// theirs.
ColorAssignment color_dual(const CellComplex& primal, const ColorAssignment& colors);

// Colors of line_complex(hex) fixed by inheritance: line vertices from hex
// edges, the hex-face polygons from hex faces, the vertex triangles from hex
// vertices. Line edges are left open.
PartialColoring line_inheritance(const CellComplex& hex, const ColorAssignment& colors);
// Inheritance completed by search at level setcc. Throws NoCompletion.
ColorAssignment color_line(const CellComplex& hex, const ColorAssignment& colors);

// Survivors keep their colors; merged faces are left open.
PartialColoring inherit_colors(const CarveResult& carve, const ColorAssignment& base);

// Each merged face takes the color of the single cell deleted inside it,
// which must also be the one color missing from its new border. Throws
// MissingColorMismatch.
ColorAssignment color_carved(const CarveResult& carve, const ColorAssignment& base);

// Merged faces colored by one of the absorbed faces instead:
// choice[i] picks merged face i's absorbed face (in CellOrigin::merged
// order). No face-rule check is made.
ColorAssignment color_carved_from_faces(const CarveResult& carve, const ColorAssignment& base,
                                        std::span<const int> choice);

// 3².4.3.4 squares colored like one of the two triangles they absorbed.
// The choice is made per translation class of squares, i.e. per deleted
// edge of the snub pattern: 0 takes the face_a triangle, 1 the face_b one.
struct SnubPreset {
  std::string_view name;
  std::array<int, 2> choice;
};
// All four per-class choices.
std::span<const SnubPreset> snub_presets();
const SnubPreset& snub_preset(std::string_view name);  // throws UnknownScheme
// Throws UnknownScheme for other families, InvalidCell on a bad choice.
ColorAssignment color_snub_choice(const Derivation& derivation, std::span<const int> choice);

// Vertex and edge colors around a face, in border order.
std::vector<Color> border_colors(const CellComplex& complex, const ColorAssignment& colors, CellId face);

// The unique color of {0..k} absent from the given colors. Throws
// NotExactlyOneMissing.
Color missing_color(std::span<const Color> colors, int k);

enum class Scheme { closed_form, dual, line, carved, search };

std::string_view to_string(Scheme scheme);
Scheme parse_scheme(std::string_view name);  // throws UnknownScheme
Scheme default_scheme(Family family);

// Colors a derived family. closed_form applies to square and triangular,
// dual to hexagonal, line to trihexagonal, carved to the carving chains
// (for 3.12² the inherited vertex colors are completed by search) and search
// colors from scratch at level setcc. Throws UnknownScheme when the scheme
// does not fit the family.
ColorAssignment color_derivation(const Derivation& derivation, Scheme scheme);

// Color count k for a family: 4 on the square families, 6 otherwise.
int family_k(Family family);

}  // namespace etcc
