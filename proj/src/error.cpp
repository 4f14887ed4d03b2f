#include "sombor/error.hpp"

namespace sombor {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::Disconnected: return "Disconnected";
    case Errc::Acyclic: return "Acyclic";
    case Errc::NotUnicyclic: return "NotUnicyclic";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidDegree: return "InvalidDegree";
    case Errc::TooSmall: return "TooSmall";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::NotAnEdge: return "NotAnEdge";
    case Errc::DegreeTooLow: return "DegreeTooLow";
    case Errc::CommonNeighbor: return "CommonNeighbor";
    case Errc::RemovalMissing: return "RemovalMissing";
    case Errc::AdditionExists: return "AdditionExists";
    case Errc::EmptyClass: return "EmptyClass";
    case Errc::OutOfTheoremRange: return "OutOfTheoremRange";
    case Errc::BadGrid: return "BadGrid";
    case Errc::UnknownConstant: return "UnknownConstant";
    case Errc::InvalidAlpha: return "InvalidAlpha";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace sombor
