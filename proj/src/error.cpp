#include "coalition/error.hpp"

namespace coalition {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OverlappingSets: return "OverlappingSets";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::TooLargeForEnumeration: return "TooLargeForEnumeration";
    case ErrorCode::UnknownSpec: return "UnknownSpec";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::BadF1Params: return "BadF1Params";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::MalformedConstruction: return "MalformedConstruction";
  }
  return "Unknown";
}

}  // namespace coalition
