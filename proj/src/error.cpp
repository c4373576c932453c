#include "carkwork/error.hpp"

namespace carkwork {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::no_associated_form: return "no_associated_form";
    case ErrorCode::not_indefinite: return "not_indefinite";
    case ErrorCode::not_positive_definite: return "not_positive_definite";
    case ErrorCode::not_definite: return "not_definite";
    case ErrorCode::degenerate_direction: return "degenerate_direction";
    case ErrorCode::not_on_spine: return "not_on_spine";
    case ErrorCode::not_on_same_spine: return "not_on_same_spine";
    case ErrorCode::step_cap_exceeded: return "step_cap_exceeded";
    case ErrorCode::zero_query: return "zero_query";
    case ErrorCode::no_real_geodesic: return "no_real_geodesic";
    case ErrorCode::vertical_geodesic: return "vertical_geodesic";
    case ErrorCode::invalid_word: return "invalid_word";
    case ErrorCode::unknown_cell: return "unknown_cell";
    case ErrorCode::depth_exceeded: return "depth_exceeded";
    case ErrorCode::internal: return "internal";
  }
  return "internal";
}

}  // namespace carkwork
