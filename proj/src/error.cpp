#include "etcc/error.hpp"

namespace etcc {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateCell: return "DuplicateCell";
    case Errc::DanglingVertexReference: return "DanglingVertexReference";
    case Errc::InvalidCell: return "InvalidCell";
    case Errc::NonCyclicBorder: return "NonCyclicBorder";
    case Errc::NotClosedSurface: return "NotClosedSurface";
    case Errc::NotCubic: return "NotCubic";
    case Errc::SizeBound: return "SizeBound";
    case Errc::SingularLattice: return "SingularLattice";
    case Errc::SkeletonNotSimple: return "SkeletonNotSimple";
    case Errc::NotIndependent: return "NotIndependent";
    case Errc::FaceWithTwoDeleted: return "FaceWithTwoDeleted";
    case Errc::BoundaryEdge: return "BoundaryEdge";
    case Errc::DoubleMerge: return "DoubleMerge";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::NotDescendable: return "NotDescendable";
    case Errc::NoCompletion: return "NoCompletion";
    case Errc::MissingColorMismatch: return "MissingColorMismatch";
    case Errc::NotExactlyOneMissing: return "NotExactlyOneMissing";
    case Errc::InconsistentFixed: return "InconsistentFixed";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
    case Errc::UnknownScheme: return "UnknownScheme";
  }
  return "Unknown";
}

}  // namespace etcc
