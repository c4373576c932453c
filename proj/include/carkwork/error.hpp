#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace carkwork {

enum class ErrorCode {
  no_associated_form,
  not_indefinite,
  not_positive_definite,
  not_definite,
  degenerate_direction,
  not_on_spine,
  not_on_same_spine,
  step_cap_exceeded,
  zero_query,
  no_real_geodesic,
  vertical_geodesic,
  invalid_word,
  unknown_cell,
  depth_exceeded,
  internal,
};

std::string_view code_name(ErrorCode code);

/// A typed failure of a mathematical precondition. The interface layer maps
/// these to exit code 1 / HTTP 422.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace carkwork
