#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace turan {

enum class ErrorCode {
  kVertexCountOutOfRange,
  kVertexOutOfRange,
  kLoopEdge,
  kGraph6MalformedHeader,
  kGraph6UnsupportedSize,
  kGraph6InvalidCharacter,
  kGraph6Truncated,
  kGraph6TrailingGarbage,
  kGraph6PaddingBits,
  kSizeGuard,
  kResourceGuard,
  kInvalidArgument,
  kUnsupportedFixedSet,
  kPreconditionViolated,
  kOverflow,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Input-validation and guard failures raised by the library. Each failure
/// class has its own code so callers can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace turan
