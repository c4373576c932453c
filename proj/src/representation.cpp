#include "carkwork/representation.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "carkwork/cark.hpp"
#include "carkwork/error.hpp"
#include "carkwork/reduction.hpp"

namespace carkwork {

namespace {

void require_nonzero(const Integer& n) {
  if (n.is_zero()) {
    throw DomainError(ErrorCode::zero_query, "query zero not supported");
  }
}

struct Candidate {
  QuadForm form;
  Letters path;  // from the spine entry point
};

bool has_face(const QuadForm& f, const Integer& n) { return f.a() == n || f.c() == n; }

struct PrimitiveHit {
  Letters path;  // from the spine entry point
  QuadForm form;
};

// Looks for a primitive representation of n by the class whose spine is
// `cycle`: a face of the cark labelled n.
std::optional<PrimitiveHit> search_faces(const SpineCycle& cycle, const Integer& n,
                                         std::vector<std::size_t>& frontier_sizes) {
  frontier_sizes.clear();
  const Integer bound = abs(n);
  std::vector<Candidate> frontier;
  std::set<QuadForm> seen;

  Letters along;
  for (std::size_t i = 0; i < cycle.forms.size(); ++i) {
    const QuadForm& g = cycle.forms[i];
    for (Letter turn : {Letter::L, Letter::L2}) {
      QuadForm root = act(turn, g);
      if (root.a().sign() * root.c().sign() <= 0 || root.a().sign() != n.sign()) {
        continue;
      }
      if (!seen.insert(root).second) {
        continue;
      }
      Letters path = along;
      path.push_back(turn);
      if (has_face(root, n)) {
        return PrimitiveHit{std::move(path), std::move(root)};
      }
      frontier.push_back({std::move(root), std::move(path)});
    }
    along.push_back(cycle.steps[i]);
  }

  auto prune = [&bound](std::vector<Candidate>& layer) {
    std::erase_if(layer, [&bound](const Candidate& c) {
      return !(abs(c.form.a()) < bound && abs(c.form.c()) < bound);
    });
  };
  prune(frontier);

  while (!frontier.empty()) {
    frontier_sizes.push_back(frontier.size());
    for (const auto& c : frontier) {
      const QuadForm& h = c.form;
      if (!(abs(h.a()) < bound && abs(h.c()) < bound) || h.a().sign() != n.sign() ||
          h.c().sign() != n.sign()) {
        throw DomainError(ErrorCode::internal, "solver frontier holds " + h.to_string());
      }
    }
    std::vector<Candidate> next;
    std::set<QuadForm> generation;
    for (const auto& c : frontier) {
      const QuadForm turned = act(Letter::S, c.form);
      for (Letter turn : {Letter::L, Letter::L2}) {
        QuadForm child = act(turn, turned);
        if (!generation.insert(child).second) {
          continue;
        }
        Letters path = c.path;
        path.push_back(Letter::S);
        path.push_back(turn);
        if (has_face(child, n)) {
          return PrimitiveHit{std::move(path), std::move(child)};
        }
        next.push_back({std::move(child), std::move(path)});
      }
    }
    prune(next);
    frontier = std::move(next);
  }
  return std::nullopt;
}

Solution checked_solution(const QuadForm& f, const Integer& n, const GroupElement& m) {
  // act(m, f) = F with F(e_i) = n gives f(m e_i) = n: the columns of m.
  for (const auto& [x, y] : {std::pair{m.p(), m.r()}, std::pair{m.q(), m.s()}}) {
    if (evaluate(f, x, y) == n) {
      return {x, y};
    }
  }
  throw DomainError(ErrorCode::internal,
                    "solver path for " + f.to_string() + " = " + n.str() + " does not verify");
}

}  // namespace

SolveReport solve_form_report(const QuadForm& f, const Integer& n) {
  require_nonzero(n);
  require_indefinite(f, "solve_form");
  SolveReport report;

  const Integer g = content(f);
  if (n % g != 0) {
    return report;
  }
  const QuadForm base{f.a() / g, f.b() / g, f.c() / g};
  const Integer target = n / g;

  const ReductionPath to_spine = cark_reduce_path(base);
  const Letters down = to_spine.letters();
  const SpineCycle cycle = revolve_around_spine(to_spine.end);

  const Integer magnitude = abs(target);
  for (Integer k = 1; k * k <= magnitude; ++k) {
    if (target % (k * k) != 0) {
      continue;
    }
    const Integer reduced = target / (k * k);
    auto hit = search_faces(cycle, reduced, report.frontier_sizes);
    if (!hit) {
      continue;
    }
    Letters full = down;
    full.insert(full.end(), hit->path.begin(), hit->path.end());
    report.path = free_reduce(full);
    const GroupElement m = word_to_matrix(report.path);
    if (act(m, base) != hit->form) {
      throw DomainError(ErrorCode::internal, "solver path does not reach " + hit->form.to_string());
    }
    const Solution primitive = checked_solution(base, reduced, m);
    Solution s{primitive.x * k, primitive.y * k};
    if (evaluate(f, s.x, s.y) != n) {
      throw DomainError(ErrorCode::internal, "solver produced an invalid pair");
    }
    report.scale = k;
    report.solution = std::move(s);
    return report;
  }
  return report;
}

GroupElement automorph(const QuadForm& f) {
  require_indefinite(f, "automorph");
  if (is_on_spine(f)) {
    return word_to_matrix(path_on_spine(f, f));
  }
  const ReductionPath to_spine = cark_reduce_path(f);
  const GroupElement& p = to_spine.total_matrix;
  return p * word_to_matrix(path_on_spine(to_spine.end, to_spine.end)) * inverse(p);
}

std::vector<Solution> enumerate_solutions(const QuadForm& f, const Integer& n, std::size_t count) {
  std::vector<Solution> out;
  auto seed = solve_form(f, n);
  if (!seed || count == 0) {
    return out;
  }
  const GroupElement a = automorph(f);
  out.push_back(std::move(*seed));
  while (out.size() < count) {
    const Solution& v = out.back();
    Solution next{a.p() * v.x + a.q() * v.y, a.r() * v.x + a.s() * v.y};
    if (evaluate(f, next.x, next.y) != n) {
      throw DomainError(ErrorCode::internal, "automorph image is not a solution");
    }
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<Solution> solve_definite(const QuadForm& f, const Integer& n) {
  require_nonzero(n);
  const FormClass kind = classify_form(f);
  if (kind != FormClass::positive_definite && kind != FormClass::negative_definite) {
    throw DomainError(ErrorCode::not_definite, "solve_definite needs a definite form; got " +
                                                   f.to_string() + " (" +
                                                   std::string(to_string(kind)) + ")");
  }
  const Integer d = abs(f.discriminant());
  const Integer y_max = isqrt(4 * abs(f.a() * n) / d);
  const Integer x_max = isqrt(4 * abs(f.c() * n) / d);
  std::vector<Solution> out;
  for (Integer x = -x_max; x <= x_max; ++x) {
    for (Integer y = -y_max; y <= y_max; ++y) {
      if (evaluate(f, x, y) == n) {
        out.push_back({x, y});
      }
    }
  }
  return out;
}

}  // namespace carkwork
