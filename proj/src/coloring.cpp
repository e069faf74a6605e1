#include "etcc/coloring.hpp"

#include <algorithm>

#include "etcc/error.hpp"
#include "etcc/search.hpp"

namespace etcc {

ColorAssignment color_closed_form(const TorusComplex& torus, const ColorForm& form) {
  if (!kernel_check(form, torus.lattice)) {
    throw Error(Errc::NotDescendable, "lattice " + torus.lattice.to_string() + " is not in the kernel of the form");
  }
  ColorAssignment c{form.modulus - 1, {}};
  c.colors.reserve(torus.tags.size());
  for (const PlaneTag& tag : torus.tags) c.colors.push_back(form.color(tag.role, tag.base));
  return c;
}

ColorAssignment color_square(const TorusComplex& torus) { return color_closed_form(torus, square_form()); }

ColorAssignment color_triangular(const TorusComplex& torus, Chirality chirality) {
  return color_closed_form(torus, triangular_form(chirality));
}

ColorAssignment color_dual(const CellComplex& primal, const ColorAssignment& c) {
  ColorAssignment out{c.k, {}};
  out.colors.reserve(primal.size());
  for (CellId f : primal.faces()) out.colors.push_back(c[f]);
  for (CellId e : primal.edges()) out.colors.push_back(c[e]);
  for (CellId v : primal.vertices()) out.colors.push_back(c[v]);
  return out;
}

PartialColoring line_inheritance(const CellComplex& hex, const ColorAssignment& c) {
  const std::size_t n0 = hex.count(1);
  const std::size_t n1 = 3 * hex.count(0);
  PartialColoring out(n0 + n1 + hex.count(2) + hex.count(0));
  std::size_t i = 0;
  for (CellId e : hex.edges()) out[i++] = c[e];
  i += n1;
  for (CellId f : hex.faces()) out[i++] = c[f];
  for (CellId v : hex.vertices()) out[i++] = c[v];
  return out;
}

ColorAssignment color_line(const CellComplex& hex, const ColorAssignment& c) {
  const CellComplex line = line_complex(hex);
  SearchOptions o;
  o.k = c.k;
  o.level = Level::setcc;
  o.fixed = line_inheritance(hex, c);
  o.max_cells = line.size();
  SearchResult r = solve(line, o);
  if (!r.solution) throw Error(Errc::NoCompletion, "line-edge colors admit no strict completion");
  return *r.solution;
}

PartialColoring inherit_colors(const CarveResult& carve, const ColorAssignment& base) {
  PartialColoring out(carve.origin.size());
  for (std::size_t i = 0; i < carve.origin.size(); ++i) {
    if (carve.origin[i].survivor) out[i] = base[*carve.origin[i].survivor];
  }
  return out;
}

std::vector<Color> border_colors(const CellComplex& complex, const ColorAssignment& colors, CellId face) {
  std::vector<Color> out;
  for (CellId id : complex.border(face)) out.push_back(colors[id]);
  return out;
}

Color missing_color(std::span<const Color> colors, int k) {
  std::vector<char> seen(static_cast<std::size_t>(k) + 1, 0);
  for (Color c : colors) {
    if (c >= 0 && c <= k) seen[static_cast<std::size_t>(c)] = 1;
  }
  std::optional<Color> missing;
  for (Color c = 0; c <= k; ++c) {
    if (seen[static_cast<std::size_t>(c)]) continue;
    if (missing) throw Error(Errc::NotExactlyOneMissing, "more than one color is missing");
    missing = c;
  }
  if (!missing) throw Error(Errc::NotExactlyOneMissing, "no color is missing");
  return *missing;
}

ColorAssignment color_carved(const CarveResult& carve, const ColorAssignment& base) {
  ColorAssignment out{base.k, std::vector<Color>(carve.origin.size(), -1)};
  for (std::size_t i = 0; i < carve.origin.size(); ++i) {
    if (carve.origin[i].survivor) out.colors[i] = base[*carve.origin[i].survivor];
  }
  for (CellId f : carve.complex.faces()) {
    const CellOrigin& o = carve.origin[f];
    if (o.survivor) continue;
    if (!o.center) {
      throw Error(Errc::MissingColorMismatch, "face " + std::to_string(f) + " merges more than one deleted cell");
    }
    const std::vector<Color> around = border_colors(carve.complex, out, f);
    Color missing = -1;
    try {
      missing = missing_color(around, base.k);
    } catch (const Error&) {
      throw Error(Errc::MissingColorMismatch, "border of merged face " + std::to_string(f) +
                                                  " does not miss exactly one color");
    }
    if (missing != base[*o.center]) {
      throw Error(Errc::MissingColorMismatch, "merged face " + std::to_string(f) + " misses color " +
                                                  std::to_string(missing) + " but its deleted cell has color " +
                                                  std::to_string(base[*o.center]));
    }
    out.colors[f] = missing;
  }
  return out;
}

ColorAssignment color_carved_from_faces(const CarveResult& carve, const ColorAssignment& base,
                                        std::span<const int> choice) {
  ColorAssignment out{base.k, std::vector<Color>(carve.origin.size(), -1)};
  std::size_t merged = 0;
  for (std::size_t i = 0; i < carve.origin.size(); ++i) {
    const CellOrigin& o = carve.origin[i];
    if (o.survivor) {
      out.colors[i] = base[*o.survivor];
      continue;
    }
    if (merged >= choice.size()) throw Error(Errc::InvalidCell, "one choice per merged face is required");
    const auto pick = static_cast<std::size_t>(choice[merged++]);
    if (pick >= o.merged.size()) throw Error(Errc::InvalidCell, "choice exceeds the merged face count");
    out.colors[i] = base[o.merged[pick]];
  }
  return out;
}

namespace {

constexpr std::array<SnubPreset, 4> kSnubPresets = {{
    {"a_a", {0, 0}},
    {"a_b", {0, 1}},
    {"b_a", {1, 0}},
    {"b_b", {1, 1}},
}};

}  // namespace

std::span<const SnubPreset> snub_presets() { return kSnubPresets; }

const SnubPreset& snub_preset(std::string_view name) {
  for (const SnubPreset& p : kSnubPresets) {
    if (p.name == name) return p;
  }
  throw Error(Errc::UnknownScheme, "unknown snub preset '" + std::string(name) + "'");
}

ColorAssignment color_snub_choice(const Derivation& d, std::span<const int> choice) {
  if (d.spec.family != Family::cr3_3_4_3_4) {
    throw Error(Errc::UnknownScheme, "snub choices apply only to cr3_3_4_3_4");
  }
  const EdgePattern pattern =
      d.spec.chirality == Chirality::anti ? snub_square_pattern() : mirror(snub_square_pattern());
  if (choice.size() != pattern.edges.size()) {
    throw Error(Errc::InvalidCell, "one choice per deleted pattern edge is required");
  }
  const TorusComplex& base = *d.base;
  const CarveResult& step = d.steps.back();
  const ColorAssignment c = color_triangular(base, d.spec.chirality);
  ColorAssignment out{c.k, std::vector<Color>(step.origin.size(), -1)};
  for (std::size_t i = 0; i < step.origin.size(); ++i) {
    const CellOrigin& o = step.origin[i];
    if (o.survivor) {
      out.colors[i] = c[*o.survivor];
      continue;
    }
    const PlaneTag& edge = base.tags[*o.center];
    std::size_t cls = 0;
    while (cls < pattern.edges.size() &&
           !(pattern.edges[cls].first == edge.role &&
             pattern.lattice.reduce(pattern.edges[cls].second) == pattern.lattice.reduce(edge.base))) {
      ++cls;
    }
    if (cls == pattern.edges.size()) throw Error(Errc::InvalidCell, "square outside the snub pattern");
    if (choice[cls] != 0 && choice[cls] != 1) throw Error(Errc::InvalidCell, "snub choices are 0 or 1");
    const int role = choice[cls] == 0 ? tri_role::face_a : tri_role::face_b;
    for (CellId f : o.merged) {
      if (base.tags[f].role == role) out.colors[i] = c[f];
    }
  }
  return out;
}

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::closed_form: return "closed_form";
    case Scheme::dual: return "dual";
    case Scheme::line: return "line";
    case Scheme::carved: return "carved";
    case Scheme::search: return "search";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  for (Scheme s : {Scheme::closed_form, Scheme::dual, Scheme::line, Scheme::carved, Scheme::search}) {
    if (name == to_string(s)) return s;
  }
  throw Error(Errc::UnknownScheme, "unknown coloring scheme '" + std::string(name) + "'");
}

Scheme default_scheme(Family family) {
  switch (family) {
    case Family::square:
    case Family::triangular:
      return Scheme::closed_form;
    case Family::hexagonal:
      return Scheme::dual;
    case Family::trihexagonal:
      return Scheme::line;
    case Family::cr4_6_12:
      return Scheme::search;
    default:
      return Scheme::carved;
  }
}

int family_k(Family family) { return family == Family::square || family == Family::cr4_8_8 ? 4 : 6; }

ColorAssignment color_derivation(const Derivation& d, Scheme scheme) {
  const Family family = d.spec.family;
  auto base_colors = [&]() {
    if (!d.base) throw Error(Errc::UnknownScheme, "family has no closed-form base");
    if (family == Family::square || family == Family::cr4_8_8) return color_square(*d.base);
    const Chirality ch = family == Family::square_mod7 ? Chirality::anti : d.spec.chirality;
    return color_triangular(*d.base, ch);
  };
  auto mismatch = [&]() {
    return Error(Errc::UnknownScheme, "scheme " + std::string(to_string(scheme)) + " does not apply to family " +
                                          std::string(to_string(family)));
  };

  switch (scheme) {
    case Scheme::closed_form:
      if (family != Family::square && family != Family::triangular) throw mismatch();
      return base_colors();
    case Scheme::dual:
      if (family != Family::hexagonal) throw mismatch();
      return color_dual(d.base->complex, base_colors());
    case Scheme::line: {
      if (family != Family::trihexagonal) throw mismatch();
      const CellComplex hex = dual_torus(d.base->complex);
      return color_line(hex, color_dual(d.base->complex, base_colors()));
    }
    case Scheme::carved: {
      if (d.steps.empty()) throw mismatch();
      ColorAssignment c = base_colors();
      for (std::size_t i = 0; i < d.steps.size(); ++i) {
        const CarveResult& step = d.steps[i];
        bool multi = false;
        for (CellId f : step.complex.faces()) {
          const CellOrigin& o = step.origin[f];
          multi = multi || (!o.survivor && !o.center);
        }
        if (!multi) {
          c = color_carved(step, c);
          continue;
        }
        // Faces merged across several deleted cells have no inherited
        // color; keep the vertex colors and complete by search.
        SearchOptions o;
        o.k = c.k;
        o.level = Level::setcc;
        o.fixed = inherit_colors(step, c);
        for (CellId id = step.complex.first(1); id < step.complex.size(); ++id) o.fixed[id].reset();
        o.max_cells = step.complex.size();
        SearchResult r = solve(step.complex, o);
        if (!r.solution) throw Error(Errc::NoCompletion, "inherited vertex colors admit no strict completion");
        c = *r.solution;
      }
      return c;
    }
    case Scheme::search: {
      SearchOptions o;
      o.k = family_k(family);
      o.level = Level::setcc;
      o.max_cells = std::max(kDefaultSearchBound, d.result.size());
      SearchResult r = solve(d.result, o);
      if (!r.solution) throw Error(Errc::NoCompletion, "no strict coloring exists on this complex");
      return *r.solution;
    }
  }
  throw mismatch();
}

}  // namespace etcc
