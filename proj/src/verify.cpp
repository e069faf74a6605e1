#include "etcc/verify.hpp"

#include <algorithm>
#include <set>

#include "etcc/error.hpp"

namespace etcc {

namespace {

class Collector {
 public:
  void add(std::vector<CellId> cells, std::string reason) {
    ++count_;
    if (witnesses_.size() < kMaxWitnesses) witnesses_.push_back({std::move(cells), std::move(reason)});
  }

  LevelResult finish(std::string note = {}) {
    LevelResult r;
    r.outcome = count_ == 0 ? Outcome::pass : Outcome::fail;
    r.violations = count_;
    r.witnesses = std::move(witnesses_);
    r.note = std::move(note);
    return r;
  }

 private:
  std::size_t count_ = 0;
  std::vector<Witness> witnesses_;
};

bool in_range(const ColorAssignment& c, CellId id) { return c.colors[id] >= 0 && c.colors[id] <= c.k; }

std::string color_text(Color c) { return std::to_string(c); }

void check_size(const ColorAssignment& colors, std::size_t needed) {
  if (colors.colors.size() < needed) {
    throw Error(Errc::InvalidCell, "coloring covers " + std::to_string(colors.colors.size()) + " cells, need " +
                                       std::to_string(needed));
  }
}

// Shared part of the ETCC and SETCC checks; strict adds the vertex rule.
LevelResult face_rule(const CellComplex& x, const ColorAssignment& c, bool strict) {
  check_size(c, x.size());
  Collector out;
  for (CellId f : x.faces()) {
    if (!in_range(c, f)) {
      out.add({f}, "face color " + color_text(c[f]) + " outside 0.." + std::to_string(c.k));
      continue;
    }
    std::set<Color> seen;
    for (CellId id : x.border(f)) seen.insert(c[id]);
    if (static_cast<int>(seen.size()) != c.k) {
      out.add({f}, "border uses " + std::to_string(seen.size()) + " colors, expected " + std::to_string(c.k));
    } else if (seen.count(c[f])) {
      out.add({f}, "face color " + color_text(c[f]) + " appears on its border");
    }
  }
  for (CellId e : x.edges()) {
    auto fs = x.faces_at_edge(e);
    if (fs.size() == 2 && c[fs[0]] == c[fs[1]]) {
      out.add({std::min(fs[0], fs[1]), std::max(fs[0], fs[1]), e}, "faces across the edge share color " + color_text(c[fs[0]]));
    }
  }
  if (strict) {
    std::set<std::pair<CellId, CellId>> reported;
    for (CellId v : x.vertices()) {
      auto fs = x.faces_at_vertex(v);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
          CellId a = std::min(fs[i], fs[j]), b = std::max(fs[i], fs[j]);
          if (c[a] != c[b]) continue;
          bool share_edge = false;
          for (CellId e : x.border_edges(a)) {
            auto around = x.faces_at_edge(e);
            share_edge = share_edge || std::find(around.begin(), around.end(), b) != around.end();
          }
          if (share_edge) continue;  // already reported by the edge rule
          if (reported.insert({a, b}).second) out.add({a, b, v}, "faces at the vertex share color " + color_text(c[a]));
        }
      }
    }
  }
  return out.finish();
}

}  // namespace

std::string_view to_string(Level level) {
  switch (level) {
    case Level::axioms: return "axioms";
    case Level::proper_total: return "proper_total";
    case Level::etc: return "etc";
    case Level::etcc: return "etcc";
    case Level::setcc: return "setcc";
  }
  return "unknown";
}

std::string_view level_key(Level level) {
  switch (level) {
    case Level::axioms: return "L1_axioms";
    case Level::proper_total: return "L2_proper_total";
    case Level::etc: return "L3_etc";
    case Level::etcc: return "L4_face_rule_etcc";
    case Level::setcc: return "L5_setcc";
  }
  return "unknown";
}

Level parse_level(std::string_view text) {
  for (int i = 1; i <= 5; ++i) {
    const auto level = static_cast<Level>(i);
    if (text == to_string(level) || text == "L" + std::to_string(i) || text == level_key(level)) return level;
  }
  throw Error(Errc::ParseError, "unknown level '" + std::string(text) + "'");
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::not_applicable: return "not_applicable";
  }
  return "unknown";
}

LevelResult check_axioms(const CellComplex& complex) {
  Collector out;
  for (const AxiomViolation& v : validate_axioms(complex).violations) {
    out.add({v.first, v.second}, "axiom " + std::to_string(v.axiom));
  }
  return out.finish();
}

LevelResult check_proper_total(const Skeleton& g, const ColorAssignment& c) {
  const CellId e0 = static_cast<CellId>(g.vertex_count);
  check_size(c, g.vertex_count + g.edge_count());
  Collector out;
  for (CellId id = 0; id < e0 + g.edge_count(); ++id) {
    if (!in_range(c, id)) out.add({id}, "color " + color_text(c[id]) + " outside 0.." + std::to_string(c.k));
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto [a, b] = g.edges[i];
    const CellId e = e0 + static_cast<CellId>(i);
    if (c[a] == c[b]) out.add({std::min(a, b), std::max(a, b)}, "adjacent vertices share color " + color_text(c[a]));
    if (c[a] == c[e]) out.add({a, e}, "vertex and incident edge share color " + color_text(c[a]));
    if (c[b] == c[e]) out.add({b, e}, "vertex and incident edge share color " + color_text(c[b]));
  }
  // Edges meeting at a vertex.
  std::vector<std::vector<CellId>> at(g.vertex_count);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    at[g.edges[i].first].push_back(e0 + static_cast<CellId>(i));
    at[g.edges[i].second].push_back(e0 + static_cast<CellId>(i));
  }
  for (CellId v = 0; v < e0; ++v) {
    for (std::size_t i = 0; i < at[v].size(); ++i) {
      for (std::size_t j = i + 1; j < at[v].size(); ++j) {
        if (c[at[v][i]] == c[at[v][j]]) {
          out.add({at[v][i], at[v][j], v}, "edges at the vertex share color " + color_text(c[at[v][i]]));
        }
      }
    }
  }
  return out.finish();
}

LevelResult check_eds(const Skeleton& g, std::span<const CellId> set) {
  Collector out;
  std::vector<char> in(g.vertex_count, 0);
  for (CellId v : set) {
    if (v >= g.vertex_count) throw Error(Errc::InvalidCell, "vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  for (auto [a, b] : g.edges) {
    if (in[a] && in[b]) out.add({std::min(a, b), std::max(a, b)}, "set is not independent");
  }
  for (CellId v = 0; v < g.vertex_count; ++v) {
    if (in[v]) continue;
    std::size_t hits = 0;
    for (CellId w : g.adjacency[v]) hits += in[w];
    if (hits != 1) out.add({v}, "vertex has " + std::to_string(hits) + " neighbours in the set");
  }
  return out.finish();
}

LevelResult check_etc(const Skeleton& g, const ColorAssignment& c) {
  const auto degree = is_regular(g);
  if (!degree || static_cast<int>(*degree) != c.k) {
    LevelResult r;
    r.outcome = Outcome::not_applicable;
    r.note = degree ? "skeleton is " + std::to_string(*degree) + "-regular, coloring has k = " + std::to_string(c.k)
                    : "skeleton is not regular";
    return r;
  }
  check_size(c, g.vertex_count);
  Collector out;
  for (CellId v = 0; v < g.vertex_count; ++v) {
    std::set<Color> seen{c[v]};
    for (CellId w : g.adjacency[v]) seen.insert(c[w]);
    if (static_cast<int>(seen.size()) != c.k + 1) {
      out.add({v}, "closed neighbourhood uses " + std::to_string(seen.size()) + " colors");
    }
  }
  for (Color t = 0; t <= c.k; ++t) {
    std::vector<CellId> cls;
    for (CellId v = 0; v < g.vertex_count; ++v) {
      if (c[v] == t) cls.push_back(v);
    }
    const LevelResult eds = check_eds(g, cls);
    if (!eds.ok()) {
      std::vector<CellId> where = eds.witnesses.front().cells;
      out.add(std::move(where), "color class " + color_text(t) + ": " + eds.witnesses.front().reason);
    }
  }
  return out.finish();
}

LevelResult check_etcc(const CellComplex& complex, const ColorAssignment& colors) {
  return face_rule(complex, colors, false);
}

LevelResult check_setcc(const CellComplex& complex, const ColorAssignment& colors) {
  return face_rule(complex, colors, true);
}

VerificationReport verify(const CellComplex& complex, const ColorAssignment& colors) {
  check_size(colors, complex.size());
  const Skeleton g = skeleton(complex);
  VerificationReport report;
  report.levels[0] = check_axioms(complex);
  report.levels[1] = check_proper_total(g, colors);
  report.levels[2] = check_etc(g, colors);
  report.levels[3] = check_etcc(complex, colors);
  report.levels[4] = check_setcc(complex, colors);
  for (int i = 0; i < 5 && report.levels[i].ok(); ++i) report.summary = i + 1;
  report.coloring_summary = 1;
  for (int i = 1; i < 5 && report.levels[i].ok(); ++i) report.coloring_summary = i + 1;
  return report;
}

}  // namespace etcc
