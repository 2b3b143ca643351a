#include "romgnn/common.hpp"

#include <cstdio>

namespace romgnn {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::RejectionExhausted: return "REJECTION_EXHAUSTED";
    case ErrorCode::MeshingFailed: return "MESHING_FAILED";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::UnsupportedElement: return "UNSUPPORTED_ELEMENT";
    case ErrorCode::SingularSystem: return "SINGULAR_SYSTEM";
    case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::ZeroReference: return "ZERO_REFERENCE";
    case ErrorCode::RankDeficient: return "RANK_DEFICIENT";
    case ErrorCode::IsolatedNode: return "ISOLATED_NODE";
    case ErrorCode::NonScalarLoss: return "NON_SCALAR_LOSS";
    case ErrorCode::GraphCycle: return "GRAPH_CYCLE";
    case ErrorCode::Diverged: return "DIVERGED";
    case ErrorCode::EmptyRange: return "EMPTY_RANGE";
    case ErrorCode::InvalidConfig: return "INVALID_CONFIG";
    case ErrorCode::IoError: return "IO_ERROR";
    case ErrorCode::PartialFailure: return "PARTIAL_FAILURE";
  }
  return "UNKNOWN";
}

int RomError::exit_code() const {
  switch (code_) {
    case ErrorCode::SingularSystem:
    case ErrorCode::Diverged:
    case ErrorCode::RankDeficient:
    case ErrorCode::ZeroReference:
      return 3;
    case ErrorCode::PartialFailure:
      return 4;
    default:
      return 2;
  }
}

std::uint64_t fnv1a(const void* data, std::size_t size, std::uint64_t seed) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t seed) {
  return fnv1a(s.data(), s.size(), seed);
}

std::uint64_t hash_matrix(const Matrix& m, std::uint64_t seed) {
  std::uint64_t h = seed;
  const std::int64_t dims[2] = {m.rows(), m.cols()};
  h = fnv1a(dims, sizeof(dims), h);
  if (m.size() > 0) {
    h = fnv1a(m.data(), static_cast<std::size_t>(m.size()) * sizeof(double), h);
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace romgnn
