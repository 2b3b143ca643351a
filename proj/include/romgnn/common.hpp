#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace romgnn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using SpMat = Eigen::SparseMatrix<double>;

enum class ErrorCode {
  RejectionExhausted,
  MeshingFailed,
  ParseError,
  UnsupportedElement,
  SingularSystem,
  ShapeMismatch,
  ZeroReference,
  RankDeficient,
  IsolatedNode,
  NonScalarLoss,
  GraphCycle,
  Diverged,
  EmptyRange,
  InvalidConfig,
  IoError,
  PartialFailure,
};

const char* error_code_name(ErrorCode code);

// Every recoverable failure in the library is reported through this type.
// The CLI maps categories to process exit codes.
class RomError : public std::runtime_error {
 public:
  RomError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

  // 2 = validation, 3 = numerical, 4 = partial-failure threshold
  int exit_code() const;

 private:
  ErrorCode code_;
};

// FNV-1a, used for config/artifact fingerprints (not cryptographic).
std::uint64_t fnv1a(const void* data, std::size_t size, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::uint64_t fnv1a(const std::string& s, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::uint64_t hash_matrix(const Matrix& m, std::uint64_t seed = 0xcbf29ce484222325ULL);

std::string hash_hex(std::uint64_t h);

}  // namespace romgnn
