#include "etcc/lattice.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <tuple>

#include "etcc/error.hpp"

namespace etcc {

namespace {

// Returns (g, s, t) with s * a + t * b = g >= 0.
std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t parse_int(std::string_view& text) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (begin != end && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc()) throw Error(Errc::ParseError, "expected an integer in lattice text");
  text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
  return value;
}

void expect(std::string_view& text, std::string_view token) {
  if (text.substr(0, token.size()) != token) {
    throw Error(Errc::ParseError, "expected '" + std::string(token) + "' in lattice text");
  }
  text.remove_prefix(token.size());
}

}  // namespace

Lattice2D::Lattice2D(IVec2 u, IVec2 v) : u_(u), v_(v) {
  const std::int64_t det = u.x * v.y - u.y * v.x;
  if (det == 0) throw Error(Errc::SingularLattice, "generators are linearly dependent");
  auto [g, s, t] = ext_gcd(u.y, v.y);
  if (g == 0) throw Error(Errc::SingularLattice, "generators are linearly dependent");
  height_ = g;
  width_ = std::llabs(det) / g;
  shear_ = floor_mod(s * u.x + t * v.x, width_);
}

IVec2 Lattice2D::reduce(IVec2 p) const {
  const std::int64_t q = floor_div(p.y, height_);
  const std::int64_t x = p.x - q * shear_;
  return {floor_mod(x, width_), p.y - q * height_};
}

std::size_t Lattice2D::coset_index(IVec2 p) const {
  IVec2 r = reduce(p);
  return static_cast<std::size_t>(r.y * width_ + r.x);
}

std::string Lattice2D::to_string() const {
  return "u=" + std::to_string(u_.x) + "," + std::to_string(u_.y) + ";v=" + std::to_string(v_.x) + "," +
         std::to_string(v_.y);
}

Lattice2D Lattice2D::parse(std::string_view text) {
  std::string_view rest = text;
  expect(rest, "u=");
  std::int64_t a = parse_int(rest);
  expect(rest, ",");
  std::int64_t b = parse_int(rest);
  expect(rest, ";v=");
  std::int64_t c = parse_int(rest);
  expect(rest, ",");
  std::int64_t d = parse_int(rest);
  if (!rest.empty()) throw Error(Errc::ParseError, "trailing text after lattice: " + std::string(rest));
  return Lattice2D({a, b}, {c, d});
}

std::vector<IVec2> cosets(const Lattice2D& lattice, std::size_t max_index) {
  if (static_cast<std::size_t>(lattice.index()) > max_index) {
    throw Error(Errc::SizeBound, "lattice index " + std::to_string(lattice.index()) + " exceeds bound " +
                                     std::to_string(max_index));
  }
  std::vector<IVec2> reps;
  reps.reserve(static_cast<std::size_t>(lattice.index()));
  const IVec2 h1 = lattice.hermite_first();
  const IVec2 h2 = lattice.hermite_second();
  for (std::int64_t y = 0; y < h2.y; ++y) {
    for (std::int64_t x = 0; x < h1.x; ++x) reps.push_back({x, y});
  }
  return reps;
}

Lattice2D intersect(const Lattice2D& a, const Lattice2D& b) {
  // Both contain N * Z^2 with N = lcm of the indices, so the Hermite basis
  // of the intersection can be read off a bounded scan.
  const std::int64_t n = std::lcm(a.index(), b.index());
  std::int64_t width = n;
  for (std::int64_t x = 1; x <= n; ++x) {
    if (a.contains(IVec2{x, 0}) && b.contains(IVec2{x, 0})) {
      width = x;
      break;
    }
  }
  for (std::int64_t y = 1; y <= n; ++y) {
    for (std::int64_t x = 0; x < width; ++x) {
      if (a.contains(IVec2{x, y}) && b.contains(IVec2{x, y})) return Lattice2D({width, 0}, {x, y});
    }
  }
  return Lattice2D({n, 0}, {0, n});
}

int ColorForm::linear(IVec2 p) const {
  return static_cast<int>(floor_mod(x_coeff * p.x + y_coeff * p.y, modulus));
}

int ColorForm::color(int role, IVec2 p) const {
  return static_cast<int>(floor_mod(offsets.at(static_cast<std::size_t>(role)) + x_coeff * p.x + y_coeff * p.y,
                                    modulus));
}

bool kernel_check(const ColorForm& form, const Lattice2D& lattice) {
  return form.linear(lattice.u()) == 0 && form.linear(lattice.v()) == 0;
}

}  // namespace etcc
