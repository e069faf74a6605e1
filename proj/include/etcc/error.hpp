#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace etcc {

enum class Errc {
  DuplicateCell,
  DanglingVertexReference,
  InvalidCell,
  NonCyclicBorder,
  NotClosedSurface,
  NotCubic,
  SizeBound,
  SingularLattice,
  SkeletonNotSimple,
  NotIndependent,
  FaceWithTwoDeleted,
  BoundaryEdge,
  DoubleMerge,
  UnknownFamily,
  NotDescendable,
  NoCompletion,
  MissingColorMismatch,
  NotExactlyOneMissing,
  InconsistentFixed,
  ParseError,
  IoError,
  UnknownScheme,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace etcc
