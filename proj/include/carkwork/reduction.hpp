#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "carkwork/modular_group.hpp"
#include "carkwork/quadratic_forms.hpp"

namespace carkwork {

/// One move of a reduction. Generator moves carry their letter; rho and
/// translation moves carry only the matrix.
struct ReductionStep {
  std::optional<Letter> letter;
  GroupElement matrix;
  QuadForm form;  // form after the step
};

/// Path from `start` to `end`. Invariants: act(total_matrix, start) == end
/// and total_matrix is the ordered product of the step matrices.
struct ReductionPath {
  QuadForm start;
  QuadForm end;
  std::vector<ReductionStep> steps;
  GroupElement total_matrix;
  bool negated = false;  // Lagrange on a negative definite form: -f was reduced

  /// Letters of the generator steps (empty for rho/Lagrange paths).
  Letters letters() const;
};

/// The Gauss operator rho(f) = f U(f), U(f) = (0 -1; 1 s(f)), where s(f) makes
/// -b + 2 s c the representative of -b mod 2|c| lying in (-|c|, |c|] when
/// |c| > sqrt(D) and in (sqrt(D) - 2|c|, sqrt(D)) otherwise.
std::pair<QuadForm, GroupElement> rho_step(const QuadForm& f);

/// Iterates rho until is_gauss_reduced holds.
ReductionPath gauss_reduce(const QuadForm& f);

/// Walks down the Farey tree of the cark until a c < 0 (a spine edge).
ReductionPath cark_reduce_path(const QuadForm& f);

/// Reduces a definite form to its Lagrange-reduced representative.
/// Negative definite forms are handled through -f (flagged `negated`).
ReductionPath lagrange_reduce(const QuadForm& f);

/// 64 + 4 * bitlen(max(|a|, |b|, |c|)): the rho-step budget.
std::size_t gauss_step_cap(const QuadForm& f);

/// 64 + 2 * (|a| + |c|) letters, saturated at 10^7.
std::size_t cark_step_cap(const QuadForm& f);

}  // namespace carkwork
