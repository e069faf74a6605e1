#include "etcc/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include "etcc/error.hpp"

namespace etcc {

namespace {

constexpr std::array<std::string_view, 7> kNames = {"black", "red", "blue", "green", "hazel", "violet", "rose"};
constexpr std::array<std::string_view, 7> kHex = {"#000000", "#d7191c", "#2b5fd9", "#1a9641",
                                                  "#8e7618", "#7b3fa0", "#f07aa8"};
constexpr double kScale = 48.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

Point2 add(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
Point2 scaled(Point2 a, double s) { return {a.x * s, a.y * s}; }

double dist2(Point2 a, Point2 b) { return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y); }

class Layout {
 public:
  explicit Layout(const Embedding& emb) : emb_(emb) {
    const double det = emb.period_u.x * emb.period_v.y - emb.period_u.y * emb.period_v.x;
    for (const Point2& p : emb.positions) {
      // Reduce each vertex into the parallelogram spanned by the periods.
      const double a = (p.x * emb.period_v.y - p.y * emb.period_v.x) / det;
      const double b = (emb.period_u.x * p.y - emb.period_u.y * p.x) / det;
      const double fa = a - std::floor(a + 1e-9), fb = b - std::floor(b + 1e-9);
      home_.push_back(add(scaled(emb.period_u, fa), scaled(emb.period_v, fb)));
    }
  }

  Point2 home(CellId v) const { return home_[v]; }

  // Lift of w closest to the point p.
  Point2 near(CellId w, Point2 p) const {
    Point2 best = home_[w];
    double best_d = std::numeric_limits<double>::max();
    for (int i = -2; i <= 2; ++i) {
      for (int j = -2; j <= 2; ++j) {
        const Point2 q = add(home_[w], add(scaled(emb_.period_u, i), scaled(emb_.period_v, j)));
        const double d = dist2(q, p);
        if (d < best_d - 1e-9) {
          best_d = d;
          best = q;
        }
      }
    }
    return best;
  }

  Point2 shift(int i, int j) const { return add(scaled(emb_.period_u, i), scaled(emb_.period_v, j)); }

 private:
  const Embedding& emb_;
  std::vector<Point2> home_;
};

std::string fill_of(const ComplexDocument& doc, CellId id) {
  if (!doc.colors) return "#ffffff";
  return std::string(palette_hex((*doc.colors)[id]));
}

std::string title(const ComplexDocument& doc, CellId id) {
  std::string t = "<title>cell " + std::to_string(id);
  if (doc.colors) t += " color " + std::to_string((*doc.colors)[id]);
  return t + "</title>";
}

std::string svg_point(Point2 p) { return num(p.x * kScale) + "," + num(-p.y * kScale); }

// Faces, then edges, then vertices, all shifted by `offset`.
std::string layer(const ComplexDocument& doc, const Layout& layout, Point2 offset) {
  const CellComplex& x = doc.complex;
  std::string out;
  for (CellId f : x.faces()) {
    auto vs = x.vertices_of(f);
    Point2 p = layout.home(vs[0]);
    std::string points = svg_point(add(p, offset));
    for (std::size_t i = 1; i < vs.size(); ++i) {
      p = layout.near(vs[i], p);
      points += " " + svg_point(add(p, offset));
    }
    out += "<polygon points=\"" + points + "\" fill=\"" + fill_of(doc, f) + "\">" + title(doc, f) + "</polygon>\n";
  }
  for (CellId e : x.edges()) {
    auto vs = x.vertices_of(e);
    const Point2 a = add(layout.home(vs[0]), offset);
    const Point2 b = add(layout.near(vs[1], layout.home(vs[0])), offset);
    const std::string stroke = doc.colors ? fill_of(doc, e) : "#606060";
    out += "<line x1=\"" + num(a.x * kScale) + "\" y1=\"" + num(-a.y * kScale) + "\" x2=\"" + num(b.x * kScale) +
           "\" y2=\"" + num(-b.y * kScale) + "\" stroke=\"" + stroke + "\" stroke-width=\"3.00\">" + title(doc, e) + "</line>\n";
  }
  for (CellId v : x.vertices()) {
    const Point2 p = add(layout.home(v), offset);
    const std::string fill = doc.colors ? fill_of(doc, v) : "#303030";
    out += "<circle cx=\"" + num(p.x * kScale) + "\" cy=\"" + num(-p.y * kScale) + "\" r=\"6.00\" fill-opacity=\"1\" fill=\"" + fill +
           "\">" + title(doc, v) + "</circle>\n";
  }
  return out;
}

}  // namespace

std::span<const std::string_view> palette_names() { return kNames; }

std::string_view palette_hex(Color color) {
  if (color < 0 || color >= static_cast<Color>(kHex.size())) return "#bbbbbb";
  return kHex[static_cast<std::size_t>(color)];
}

std::string to_dot(const ComplexDocument& doc) {
  const CellComplex& x = doc.complex;
  std::string out = "graph skeleton {\n  node [shape=circle, style=filled, fontcolor=white];\n";
  for (CellId v : x.vertices()) {
    out += "  " + std::to_string(v) + " [label=\"" + std::to_string(v) + "\"";
    if (doc.colors) out += ", fillcolor=\"" + fill_of(doc, v) + "\"";
    out += "];\n";
  }
  for (CellId e : x.edges()) {
    auto vs = x.vertices_of(e);
    out += "  " + std::to_string(vs[0]) + " -- " + std::to_string(vs[1]);
    if (doc.colors) out += " [color=\"" + fill_of(doc, e) + "\", penwidth=2]";
    out += ";\n";
  }
  return out + "}\n";
}

std::string to_svg(const ComplexDocument& doc) {
  const auto& emb = doc.complex.embedding();
  if (!emb) throw Error(Errc::InvalidCell, "complex has no plane embedding to draw");
  const Layout layout(*emb);

  // View box: the fundamental parallelogram plus a one-unit margin.
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (Point2 c : {Point2{0, 0}, emb->period_u, emb->period_v, add(emb->period_u, emb->period_v)}) {
    lo_x = std::min(lo_x, c.x);
    hi_x = std::max(hi_x, c.x);
    lo_y = std::min(lo_y, c.y);
    hi_y = std::max(hi_y, c.y);
  }
  const double m = 1.0;
  const double x0 = (lo_x - m) * kScale, y0 = -(hi_y + m) * kScale;
  const double w = (hi_x - lo_x + 2 * m) * kScale, h = (hi_y - lo_y + 2 * m) * kScale;

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(x0) + " " + num(y0) + " " + num(w) +
                    " " + num(h) + "\" width=\"" + num(w) + "\" height=\"" + num(h) + "\">\n";
  out += "<g stroke-width=\"1.00\" fill-opacity=\"0.55\" stroke=\"#ffffff\">\n";
  out += "<g opacity=\"0.30\">\n";
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) {
      if (i != 0 || j != 0) out += layer(doc, layout, layout.shift(i, j));
    }
  }
  out += "</g>\n<g>\n" + layer(doc, layout, {0, 0}) + "</g>\n";
  const Point2 u = emb->period_u, v = emb->period_v;
  out += "<polygon points=\"" + svg_point({0, 0}) + " " + svg_point(u) + " " + svg_point(add(u, v)) + " " +
         svg_point(v) + "\" fill=\"none\" stroke=\"#808080\" stroke-dasharray=\"6 4\"/>\n";
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace etcc
