#pragma once

// JSON form of a complex with optional coloring and verification report.
// Output is canonical (sorted keys, two-space indent, integers only), so a
// parse followed by a dump reproduces the input bytes.

#include <optional>
#include <string>
#include <string_view>

#include "etcc/cell_complex.hpp"
#include "etcc/coloring.hpp"
#include "etcc/verify.hpp"

namespace etcc {

inline constexpr int kDocumentVersion = 1;

struct ComplexDocument {
  int version = kDocumentVersion;
  std::optional<std::string> spec;   // TilingSpec text, when generated from one
  std::optional<std::string> torus;  // lattice text "u=a,b;v=c,d"
  CellComplex complex;
  std::optional<ColorAssignment> colors;
  std::optional<VerificationReport> report;
  // Set by a search that proved no coloring exists.
  std::optional<std::string> unsat;
};

// Complex for a spec, with its lattice recorded and the plane embedding kept.
ComplexDocument document_for(const TilingSpec& spec);

std::string to_json(const ComplexDocument& doc);
// Throws ParseError on malformed input or cells build_complex rejects. When
// the document names a spec whose complex matches the cells, the drawing
// embedding is restored from it.
ComplexDocument parse_document(std::string_view text);

ComplexDocument read_document(const std::string& path);  // throws IoError
void write_text(const std::string& path, std::string_view text);  // throws IoError

}  // namespace etcc
