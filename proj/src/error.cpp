#include "mpa/error.hpp"

namespace mpa {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateLink: return "DuplicateLink";
    case ErrorCode::KindViolation: return "KindViolation";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidTime: return "InvalidTime";
    case ErrorCode::UnsupportedRegime: return "UnsupportedRegime";
    case ErrorCode::EmptySampler: return "EmptySampler";
    case ErrorCode::ResampleExhausted: return "ResampleExhausted";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NoSuchLinks: return "NoSuchLinks";
    case ErrorCode::InsufficientTail: return "InsufficientTail";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::ConflictingDuplicate: return "ConflictingDuplicate";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace mpa
