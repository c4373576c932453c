#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "carkwork/integer.hpp"
#include "carkwork/modular_group.hpp"
#include "carkwork/quadratic_forms.hpp"

namespace carkwork {

struct Solution {
  Integer x, y;
  friend bool operator==(const Solution&, const Solution&) = default;
};

/// Everything the solver learned about one query.
struct SolveReport {
  std::optional<Solution> solution;
  /// Letters from f to the form whose face carries the primitive
  /// representation; act(word_to_matrix(path), f / content) has that face.
  Word path;
  Integer scale{1};  // solution = scale * (primitive solution of n / scale^2)
  std::vector<std::size_t> frontier_sizes;  // per generation, last search only
};

/// Searches the cark of an indefinite form for a face labelled n.
/// Throws zero_query for n == 0 and not_indefinite for other forms.
SolveReport solve_form_report(const QuadForm& f, const Integer& n);

inline std::optional<Solution> solve_form(const QuadForm& f, const Integer& n) {
  return solve_form_report(f, n).solution;
}

/// A generator of the stabilizer of f: act(automorph(f), f) == f, never the
/// identity. Solutions move by column vectors: f(A v) == f(v).
GroupElement automorph(const QuadForm& f);

/// The seed solution followed by its images under repeated automorph.
std::vector<Solution> enumerate_solutions(const QuadForm& f, const Integer& n, std::size_t count);

/// All solutions of a definite form, sorted by (x, y).
/// Throws zero_query for n == 0 and not_definite for indefinite/degenerate f.
std::vector<Solution> solve_definite(const QuadForm& f, const Integer& n);

}  // namespace carkwork
