#pragma once

// The five-level ladder: axioms, proper total coloring, efficient total
// coloring, face rule (ETCC) and strict face rule (SETCC).

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "etcc/cell_complex.hpp"
#include "etcc/coloring.hpp"

namespace etcc {

enum class Level { axioms = 1, proper_total = 2, etc = 3, etcc = 4, setcc = 5 };

std::string_view to_string(Level level);  // "axioms", "proper_total", ...
std::string_view level_key(Level level);  // "L1_axioms", ...
Level parse_level(std::string_view text);  // name or L1..L5; throws ParseError

enum class Outcome { pass, fail, not_applicable };

std::string_view to_string(Outcome outcome);

struct Witness {
  std::vector<CellId> cells;
  std::string reason;

  bool operator==(const Witness&) const = default;
};

inline constexpr std::size_t kMaxWitnesses = 16;

struct LevelResult {
  Outcome outcome = Outcome::pass;
  std::size_t violations = 0;
  std::vector<Witness> witnesses;  // the first kMaxWitnesses, least ids first
  std::string note;

  bool ok() const { return outcome != Outcome::fail; }
  bool operator==(const LevelResult&) const = default;
};

struct VerificationReport {
  std::array<LevelResult, 5> levels;
  // Highest level reached by consecutive non-failing levels from L1; a
  // not_applicable level is passed through.
  int summary = 0;
  // The same ladder starting at L2, i.e. ignoring the axiom level.
  int coloring_summary = 0;

  const LevelResult& at(Level level) const { return levels[static_cast<int>(level) - 1]; }
  bool operator==(const VerificationReport&) const = default;
};

// Skeleton-level checks read colors by complex cell id: vertex v at v, the
// skeleton's edge i at the complex's first edge id + i.
LevelResult check_axioms(const CellComplex& complex);
LevelResult check_proper_total(const Skeleton& graph, const ColorAssignment& colors);
LevelResult check_eds(const Skeleton& graph, std::span<const CellId> set);
LevelResult check_etc(const Skeleton& graph, const ColorAssignment& colors);
LevelResult check_etcc(const CellComplex& complex, const ColorAssignment& colors);
LevelResult check_setcc(const CellComplex& complex, const ColorAssignment& colors);

VerificationReport verify(const CellComplex& complex, const ColorAssignment& colors);

}  // namespace etcc
