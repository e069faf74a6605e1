#pragma once

// DOT and SVG output of a (possibly colored) complex.

#include <span>
#include <string>
#include <string_view>

#include "etcc/document.hpp"

namespace etcc {

// Color numbers 0..6 are black, red, blue, green, hazel, violet and rose.
std::span<const std::string_view> palette_names();
std::string_view palette_hex(Color color);

// 1-skeleton as an undirected graph; colored documents fill nodes and
// stroke edges with their palette colors.
std::string to_dot(const ComplexDocument& doc);

// One fundamental domain at plane coordinates, faces filled, edges stroked
// and vertices drawn as disks, with faded copies across each identified
// side. Throws InvalidCell when the complex carries no embedding.
std::string to_svg(const ComplexDocument& doc);

}  // namespace etcc
