#pragma once

// Exhaustive backtracking over cell colors with forward checking.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "etcc/cell_complex.hpp"
#include "etcc/coloring.hpp"
#include "etcc/verify.hpp"

namespace etcc {

enum class SearchMode { first, exists, count };

std::string_view to_string(SearchMode mode);
SearchMode parse_search_mode(std::string_view text);  // throws ParseError

inline constexpr std::size_t kDefaultSearchBound = 200;

struct SearchOptions {
  int k = 6;
  // proper_total, etc, etcc or setcc. The etc constraints (rainbow closed
  // neighbourhoods) apply only when the skeleton is k-regular.
  Level level = Level::setcc;
  PartialColoring fixed;  // empty, or one entry per cell
  SearchMode mode = SearchMode::first;
  std::size_t count_limit = 1;  // count mode stops here
  std::size_t max_cells = kDefaultSearchBound;
  unsigned threads = 1;
};

struct SearchResult {
  std::optional<ColorAssignment> solution;  // first mode only
  std::size_t count = 0;                    // solutions found, at most count_limit
  std::uint64_t nodes = 0;

  bool satisfiable() const { return count > 0; }
};

// Depth-first over cells in ascending id, colors ascending, so the first
// solution is the lexicographically least. When nothing is fixed and the
// mode is not count, colorings are explored only up to permutation of the
// colors (each cell may open at most one new color), which keeps the least
// solution. Throws SizeBound, InconsistentFixed.
SearchResult solve(const CellComplex& complex, const SearchOptions& options);

struct ConjectureProbe {
  bool etc_like_exists = false;
  bool etcc_exists = false;
  std::optional<ColorAssignment> etc_like_witness;
  std::optional<ColorAssignment> etcc_witness;
};

// Existence at the skeleton level (proper total coloring, plus the rainbow
// neighbourhood condition when the skeleton is k-regular) and at level etcc.
ConjectureProbe probe_conjecture(const CellComplex& complex, int k, std::size_t max_cells = kDefaultSearchBound,
                                 unsigned threads = 1);

}  // namespace etcc
