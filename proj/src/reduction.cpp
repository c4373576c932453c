#include "carkwork/reduction.hpp"

#include <algorithm>
#include <string>

#include "carkwork/error.hpp"

namespace carkwork {

Letters ReductionPath::letters() const {
  Letters out;
  for (const auto& step : steps) {
    if (step.letter) {
      out.push_back(*step.letter);
    }
  }
  return out;
}

std::pair<QuadForm, GroupElement> rho_step(const QuadForm& f) {
  const Integer& b = f.b();
  const Integer& c = f.c();
  if (c.is_zero()) {
    throw DomainError(ErrorCode::degenerate_direction,
                      "degenerate direction: c = 0 in " + f.to_string());
  }
  require_indefinite(f, "rho");
  const Integer d = f.discriminant();
  const Integer abs_c = abs(c);
  const Integer modulus = 2 * abs_c;

  Integer r;
  if (abs_c * abs_c > d) {
    r = floor_mod(-b, modulus);
    if (r > abs_c) {
      r -= modulus;
    }
  } else {
    // sqrt(D) is irrational, so (sqrt(D) - 2|c|, sqrt(D)) holds the integers
    // [t - 2|c| + 1, t] with t = isqrt(D).
    const Integer t = isqrt(d);
    r = t - floor_mod(t + b, modulus);
  }
  const Integer s = (r + b) / (2 * c);
  GroupElement u(0, -1, 1, s);
  QuadForm next = act(u, f);
  return {std::move(next), std::move(u)};
}

std::size_t gauss_step_cap(const QuadForm& f) {
  const Integer m = std::max({abs(f.a()), abs(f.b()), abs(f.c())});
  return 64 + 4 * bit_length(m);
}

std::size_t cark_step_cap(const QuadForm& f) {
  constexpr std::size_t hard_limit = 10'000'000;
  const Integer bound = 64 + 2 * (abs(f.a()) + abs(f.c()));
  return bound > hard_limit ? hard_limit : bound.convert_to<std::size_t>();
}

namespace {

void check_buchmann(const std::vector<QuadForm>& seq) {
  // seq[0] is the raw input; rho-images (index >= 1) are normal forms.
  for (std::size_t i = 1; i + 2 < seq.size(); ++i) {
    if (is_gauss_reduced(seq[i]) || is_gauss_reduced(seq[i + 1]) || is_gauss_reduced(seq[i + 2])) {
      continue;
    }
    if (abs(seq[i].a()) < 2 * abs(seq[i].c())) {
      throw DomainError(ErrorCode::internal,
                        "rho sequence violates |a| >= 2|c| at " + seq[i].to_string());
    }
  }
}

}  // namespace

ReductionPath gauss_reduce(const QuadForm& f) {
  require_indefinite(f, "Gauss reduction");
  ReductionPath path{f, f, {}, GroupElement::identity()};
  const std::size_t cap = gauss_step_cap(f);
  std::vector<QuadForm> seq{f};
  while (!is_gauss_reduced(path.end)) {
    if (path.steps.size() >= cap) {
      throw DomainError(ErrorCode::step_cap_exceeded,
                        "Gauss reduction exceeded " + std::to_string(cap) + " steps on " +
                            f.to_string());
    }
    auto [next, u] = rho_step(path.end);
    path.total_matrix = path.total_matrix * u;
    path.end = next;
    seq.push_back(next);
    path.steps.push_back({std::nullopt, std::move(u), std::move(next)});
  }
  check_buchmann(seq);
  return path;
}

namespace {

struct FaceSizes {
  Integer low, high;
  friend bool operator<=(const FaceSizes& x, const FaceSizes& y) {
    return x.low < y.low || (x.low == y.low && x.high <= y.high);
  }
};

FaceSizes face_sizes(const QuadForm& f) {
  Integer x = abs(f.a()), y = abs(f.c());
  if (y < x) {
    std::swap(x, y);
  }
  return {std::move(x), std::move(y)};
}

}  // namespace

ReductionPath cark_reduce_path(const QuadForm& f) {
  require_indefinite(f, "cark reduction");
  ReductionPath path{f, f, {}, GroupElement::identity()};
  const std::size_t cap = cark_step_cap(f);
  auto apply = [&path](Letter letter, QuadForm next) {
    path.total_matrix = path.total_matrix * GroupElement::generator(letter);
    path.end = next;
    path.steps.push_back({letter, GroupElement::generator(letter), std::move(next)});
  };

  // An off-spine edge has both faces of one sign; its downhill black vertex
  // is the one whose third face a + b + c is smaller in that sign.
  while (path.end.a().sign() * path.end.c().sign() > 0) {
    if (path.steps.size() >= cap) {
      throw DomainError(ErrorCode::step_cap_exceeded,
                        "cark reduction exceeded " + std::to_string(cap) + " steps on " +
                            f.to_string());
    }
    if (path.end.a().sign() * path.end.b().sign() > 0) {
      apply(Letter::S, act(Letter::S, path.end));
    }
    QuadForm via_l = act(Letter::L, path.end);
    QuadForm via_l2 = act(Letter::L2, path.end);
    if (face_sizes(via_l) <= face_sizes(via_l2)) {
      apply(Letter::L, std::move(via_l));
    } else {
      apply(Letter::L2, std::move(via_l2));
    }
  }
  return path;
}

ReductionPath lagrange_reduce(const QuadForm& f) {
  const FormClass kind = classify_form(f);
  if (kind == FormClass::negative_definite) {
    ReductionPath path = lagrange_reduce(negate(f));
    path.start = f;
    path.end = negate(path.end);
    for (auto& step : path.steps) {
      step.form = negate(step.form);
    }
    path.negated = true;
    return path;
  }
  if (kind != FormClass::positive_definite) {
    throw DomainError(ErrorCode::not_positive_definite,
                      "Lagrange reduction needs a definite form; got " + f.to_string() + " (" +
                          std::string(to_string(kind)) + ")");
  }

  ReductionPath path{f, f, {}, GroupElement::identity()};
  auto apply = [&path](GroupElement m, std::optional<Letter> letter) {
    QuadForm next = act(m, path.end);
    path.total_matrix = path.total_matrix * m;
    path.end = next;
    path.steps.push_back({letter, std::move(m), std::move(next)});
  };
  const GroupElement s = GroupElement::generator(Letter::S);

  for (;;) {
    const Integer& a = path.end.a();
    const Integer& b = path.end.b();
    // Translate b into (-a, a]: (1 k; 0 1) sends b to b + 2 a k.
    if (b <= -a || b > a) {
      const Integer k = floor_div(a - b, 2 * a);
      apply(GroupElement(1, k, 0, 1), std::nullopt);
      continue;
    }
    if (a > path.end.c()) {
      apply(s, Letter::S);
      continue;
    }
    if (a == path.end.c() && b.sign() < 0) {
      apply(s, Letter::S);
    }
    break;
  }
  return path;
}

}  // namespace carkwork
