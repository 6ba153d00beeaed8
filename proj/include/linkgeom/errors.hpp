#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace linkgeom {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kSingularSystem,
  kNotTransversal,
  kParallelPlanes,
  kApexNotExtreme,
  kApexInHyperplane,
  kPerturbExhausted,
  kSearchExhausted,
  kBudgetExceeded,
  kShapeMismatch,
  kDegenerateFace,
  kMalformedInput,
};

const char* error_code_name(ErrorCode code);

/// Every failure raised by the library. `simplices` carries the offending
/// index tuples when a pairwise computation hit a degenerate pair.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what,
                std::vector<std::vector<std::size_t>> simplices = {})
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code),
        message_(what),
        simplices_(std::move(simplices)) {}

  ErrorCode code() const { return code_; }
  /// what() without the code prefix.
  const std::string& message() const { return message_; }
  const std::vector<std::vector<std::size_t>>& simplices() const { return simplices_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::vector<std::vector<std::size_t>> simplices_;
};

}  // namespace linkgeom
