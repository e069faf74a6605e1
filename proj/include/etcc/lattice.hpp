#pragma once

// Integer sublattices of Z^2 and the affine color forms that descend to
// their quotients.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace etcc {

struct IVec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend IVec2 operator+(IVec2 a, IVec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend IVec2 operator-(IVec2 a, IVec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend IVec2 operator*(std::int64_t s, IVec2 a) { return {s * a.x, s * a.y}; }
  bool operator==(const IVec2&) const = default;
  auto operator<=>(const IVec2&) const = default;
};

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t m) {
  return (a - floor_mod(a, m)) / m;
}

// Rank-2 sublattice spanned by u and v. The Hermite basis is (A, 0), (B, g)
// with A * g = |det| and 0 <= B < A; coset representatives are the points
// (x, y) with 0 <= x < A and 0 <= y < g.
class Lattice2D {
 public:
  Lattice2D(IVec2 u, IVec2 v);  // throws SingularLattice

  IVec2 u() const { return u_; }
  IVec2 v() const { return v_; }
  IVec2 hermite_first() const { return {width_, 0}; }
  IVec2 hermite_second() const { return {shear_, height_}; }
  std::int64_t index() const { return width_ * height_; }

  IVec2 reduce(IVec2 p) const;
  // Position of reduce(p) in cosets() order.
  std::size_t coset_index(IVec2 p) const;
  bool contains(IVec2 p) const { return reduce(p) == IVec2{}; }
  bool contains(const Lattice2D& sub) const { return contains(sub.u_) && contains(sub.v_); }

  // Same lattice, possibly different generators.
  bool same_lattice(const Lattice2D& other) const {
    return width_ == other.width_ && height_ == other.height_ && shear_ == other.shear_;
  }

  // "u=a,b;v=c,d"
  std::string to_string() const;
  static Lattice2D parse(std::string_view text);  // throws ParseError

  bool operator==(const Lattice2D& other) const { return u_ == other.u_ && v_ == other.v_; }

 private:
  IVec2 u_;
  IVec2 v_;
  std::int64_t width_ = 1;
  std::int64_t height_ = 1;
  std::int64_t shear_ = 0;
};

inline constexpr std::size_t kDefaultCosetBound = 4096;

// Canonical representatives, ordered by (y, x). Throws SizeBound.
std::vector<IVec2> cosets(const Lattice2D& lattice, std::size_t max_index = kDefaultCosetBound);

// L1 ∩ L2.
Lattice2D intersect(const Lattice2D& a, const Lattice2D& b);

// c(role, p) = (offsets[role] + x_coeff * p.x + y_coeff * p.y) mod modulus.
struct ColorForm {
  int modulus = 1;
  int x_coeff = 0;
  int y_coeff = 0;
  std::vector<int> offsets;

  int linear(IVec2 p) const;
  int color(int role, IVec2 p) const;
};

// The form descends to the quotient iff it vanishes on both generators.
bool kernel_check(const ColorForm& form, const Lattice2D& lattice);

}  // namespace etcc
