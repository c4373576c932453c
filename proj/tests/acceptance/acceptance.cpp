// Acceptance gate: one PASS/FAIL line per criterion.
//
//   carkwork_acceptance            run every criterion
//   carkwork_acceptance <name>     run one (exit status 1 on failure)

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "carkwork/cark.hpp"
#include "carkwork/error.hpp"
#include "carkwork/geometry.hpp"
#include "carkwork/modular_group.hpp"
#include "carkwork/quadratic_forms.hpp"
#include "carkwork/reduction.hpp"
#include "carkwork/representation.hpp"
#include "carkwork/sunburst.hpp"
#include "support/oracle.hpp"

using namespace carkwork;

namespace {

constexpr double fixed_point_tolerance = 1e-9;
constexpr double cayley_tolerance = 1e-12;

// Collects failures; a criterion passes when none were recorded.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures_;
      if (examples_.size() < 5) {
        examples_.push_back(what);
      }
    }
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << failures_ << " failure(s)";
    for (const auto& e : examples_) {
      out << "; " << e;
    }
    return out.str();
  }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> examples_;
};

std::string text(const QuadForm& f) { return f.to_string(); }

std::string text(const Word& w) { return w.empty() ? "I" : w.to_string(); }

std::vector<SpineCycle> cycles_of(long long d) {
  std::vector<SpineCycle> out;
  std::set<QuadForm> covered;
  for (const auto& f : oracle::spine_forms(d)) {
    if (covered.insert(f).second) {
      out.push_back(revolve_around_spine(f));
      covered.insert(out.back().forms.begin(), out.back().forms.end());
    }
  }
  return out;
}

void group_algebra(Check& check) {
  const auto s = GroupElement::generator(Letter::S);
  const auto l = GroupElement::generator(Letter::L);
  check.expect((s * s).is_identity(), "S^2 != I");
  check.expect((l * l * l).is_identity(), "L^3 != I");
  check.expect(!(l * l).is_identity() && !s.is_identity() && !l.is_identity(),
               "generator order too small");
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> length(0, 40);
  for (int i = 0; i < 500; ++i) {
    const Word w(oracle::random_word(rng, length(rng)));
    const GroupElement m = word_to_matrix(w);
    check.expect(oracle::same_element(oracle::product(w.letters()), m),
                 "matrix of " + text(w) + " differs from the naive product");
    check.expect(matrix_to_word(m) == w, "round trip of " + text(w));
  }
}

void discriminant_invariance(Check& check) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long long> coef(-1'000'000'000, 1'000'000'000);
  std::uniform_int_distribution<std::size_t> length(1, 24);
  for (int i = 0; i < 10'000; ++i) {
    const QuadForm f(coef(rng), coef(rng), coef(rng));
    const GroupElement m = word_to_matrix(oracle::random_word(rng, length(rng)));
    const QuadForm g = act(m, f);
    check.expect(g.discriminant() == f.discriminant(), "discriminant changed for " + text(f));
    check.expect(g == oracle::substitute(f, {m.p(), m.q(), m.r(), m.s()}),
                 "action differs from substitution for " + text(f));
  }
}

void gauss_sweep(Check& check) {
  const std::set<QuadForm> d5 = oracle::gauss_reduced_forms(5);
  const std::set<QuadForm> d60 = oracle::gauss_reduced_forms(60);
  check.expect(d5 == std::set<QuadForm>{{1, 1, -1}, {-1, 1, 1}}, "discriminant 5 oracle set");
  check.expect(d60.size() == 8, "discriminant 60 oracle set has " + std::to_string(d60.size()));
  std::size_t swept = 0;
  for (long long a = -30; a <= 30; ++a) {
    for (long long b = -30; b <= 30; ++b) {
      for (long long c = -30; c <= 30; ++c) {
        const QuadForm f(a, b, c);
        if (!is_indefinite(f)) {
          continue;
        }
        ++swept;
        try {
          const ReductionPath path = gauss_reduce(f);
          check.expect(is_gauss_reduced(path.end), text(f) + " did not reduce");
          check.expect(act(path.total_matrix, f) == path.end, text(f) + " path matrix");
          const Integer d = f.discriminant();
          if (d == 5) {
            check.expect(d5.count(path.end) == 1, text(f) + " -> " + text(path.end));
          } else if (d == 60) {
            check.expect(d60.count(path.end) == 1, text(f) + " -> " + text(path.end));
          }
          // |a| >= 2|c| whenever three consecutive rho-images are unreduced.
          std::vector<QuadForm> seq;
          for (const auto& step : path.steps) {
            seq.push_back(step.form);
          }
          for (std::size_t i = 0; i + 2 < seq.size(); ++i) {
            if (!is_gauss_reduced(seq[i]) && !is_gauss_reduced(seq[i + 1]) &&
                !is_gauss_reduced(seq[i + 2])) {
              check.expect(abs(seq[i].a()) >= 2 * abs(seq[i].c()), "bound fails at " + text(seq[i]));
            }
          }
        } catch (const DomainError& e) {
          check.expect(false, text(f) + ": " + e.what());
        }
      }
    }
  }
  check.expect(swept > 100'000, "sweep too small: " + std::to_string(swept));
}

void spine_oracle(Check& check) {
  const SpineCycle cycle = revolve_around_spine({1, 1, -1});
  const auto expected = oracle::spine_forms(5);
  check.expect(cycle.forms.size() == 4, "discriminant 5 spine has " +
                                            std::to_string(cycle.forms.size()) + " forms");
  check.expect(std::set<QuadForm>(cycle.forms.begin(), cycle.forms.end()) ==
                   std::set<QuadForm>(expected.begin(), expected.end()),
               "discriminant 5 spine differs from enumeration");
  for (long long d : {5, 8, 13, 60}) {
    std::size_t covered = 0;
    for (const auto& c : cycles_of(d)) {
      covered += c.forms.size();
      const std::size_t n = c.forms.size();
      for (std::size_t i = 0; i < n; ++i) {
        check.expect(act(c.steps[i], c.forms[i]) == c.forms[(i + 1) % n],
                     "cycle does not close at " + text(c.forms[i]));
        check.expect(revolve_around_spine(c.forms[i]).forms.size() == n,
                     "cycle length depends on entry " + text(c.forms[i]));
        check.expect(spine_signature(revolve_around_spine(c.forms[i])) == spine_signature(c),
                     "signature depends on entry " + text(c.forms[i]));
      }
    }
    check.expect(covered == oracle::spine_forms(d).size(),
                 "cycles of " + std::to_string(d) + " miss semi-reduced forms");
  }
}

void path_soundness(Check& check) {
  for (long long d : {5, 60}) {
    const auto cycles = cycles_of(d);
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
      for (const auto& f : cycles[ci].forms) {
        for (const auto& g : cycles[ci].forms) {
          const Word w = path_on_spine(f, g);
          check.expect(act(word_to_matrix(w), f) == g, "path " + text(f) + " -> " + text(g));
        }
        const GroupElement a = word_to_matrix(path_on_spine(f, f));
        check.expect(!a.is_identity() && act(a, f) == f, "automorph of " + text(f));
        for (std::size_t cj = 0; cj < cycles.size(); ++cj) {
          if (cj == ci) {
            continue;
          }
          try {
            path_on_spine(f, cycles[cj].forms.front());
            check.expect(false, "path across classes from " + text(f));
          } catch (const DomainError& e) {
            check.expect(e.code() == ErrorCode::not_on_same_spine, e.what());
          }
        }
      }
    }
  }
}

void representation_solver(Check& check) {
  const std::vector<std::array<long long, 3>> forms{{1, 1, -1}, {1, 2, -1}, {1, 3, -1}, {1, 6, -6}};
  for (const auto& [a, b, c] : forms) {
    const QuadForm f(a, b, c);
    check.expect(is_on_spine(f), text(f) + " is not a spine form");
    const auto values = oracle::represented_values(a, b, c, 200, 20);
    for (long long n = -20; n <= 20; ++n) {
      if (n == 0) {
        continue;
      }
      const auto s = solve_form(f, n);
      check.expect(s.has_value() == (values.count(n) == 1),
                   text(f) + " = " + std::to_string(n) + ": solver " +
                       (s ? "found" : "found none") + ", brute force " +
                       (values.count(n) ? "found" : "found none"));
      if (s) {
        check.expect(evaluate(f, s->x, s->y) == n, text(f) + " returned an invalid pair");
      }
    }
  }
  const QuadForm pell(1, 0, -2);
  const auto s = solve_form(pell, 1);
  check.expect(s && evaluate(pell, s->x, s->y) == 1, "Pell equation unsolved");
  const auto orbit = enumerate_solutions(pell, 1, 3);
  std::set<std::pair<Integer, Integer>> distinct;
  for (const auto& v : orbit) {
    check.expect(evaluate(pell, v.x, v.y) == 1, "orbit element is not a solution");
    distinct.emplace(v.x, v.y);
  }
  check.expect(distinct.size() == 3, "orbit has " + std::to_string(distinct.size()) + " pairs");
}

void geodesics(Check& check) {
  std::mt19937_64 rng(314);
  std::uniform_int_distribution<std::size_t> length(2, 14);
  int tested = 0;
  while (tested < 100) {
    const GroupElement w = word_to_matrix(oracle::random_word(rng, length(rng)));
    if (classify_element(w) != ElementClass::hyperbolic) {
      continue;
    }
    ++tested;
    const Geodesic g = geodesic_of_element(w);
    for (const auto& e : g.endpoints) {
      const double z = e.value();
      const double image = (to_double(w.p()) * z + to_double(w.q())) /
                           (to_double(w.r()) * z + to_double(w.s()));
      check.expect(std::abs(image - z) < fixed_point_tolerance,
                   "endpoint of " + text(matrix_to_word(w)) + " moves by " +
                       std::to_string(std::abs(image - z)));
    }
    const Geodesic h = geodesic_of_form(form_of_element(w));
    check.expect(h.center == g.center && h.radius_squared == g.radius_squared,
                 "form and element geodesics differ for " + text(matrix_to_word(w)));
  }
  std::uniform_real_distribution<double> x(-10.0, 10.0);
  std::uniform_real_distribution<double> y(0.05, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const Point z(x(rng), y(rng));
    const Point back = from_disk(to_disk(z));
    check.expect(std::abs(back - z) < cayley_tolerance,
                 "Cayley round trip error " + std::to_string(std::abs(back - z)));
  }
}

void sunburst(Check& check) {
  constexpr std::size_t depth = 8;
  const auto cells = enumerate_cells(depth);
  check.expect(cells.size() == 138, "depth 8 has " + std::to_string(cells.size()) + " cells");
  std::vector<std::size_t> sizes(depth + 1);
  for (const auto& c : cells) {
    ++sizes[c.annulus];
  }
  check.expect(sizes == std::vector<std::size_t>{3, 3, 6, 6, 12, 12, 24, 24, 48}, "annulus sizes");

  // Word-length laws, for annuli whose outward neighbors are enumerated.
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const SunburstCell& cell = cells[i];
    if (cell.annulus < 3 || cell.annulus == depth) {
      continue;
    }
    const Word& w = cell.word;
    const auto around = neighbors(cells, i);
    const std::size_t expected = w.back() == Letter::S ? 5 : 4;
    check.expect(around.size() == expected,
                 text(w) + " has " + std::to_string(around.size()) + " neighbors");
    std::set<std::size_t> generated;
    for (Letter l : {Letter::L, Letter::L2, Letter::S}) {
      Letters product = w.letters();
      product.push_back(l);
      const Word next = free_reduce(product);
      const std::size_t j = find_cell(cells, next);
      generated.insert(j);
      check.expect(std::find(around.begin(), around.end(), j) != around.end(),
                   text(next) + " is not adjacent to " + text(w));
      check.expect(word_meet(w, next).size() + 1 >= w.size(),
                   "short meet of " + text(w) + " and " + text(next));
    }
    for (std::size_t j : around) {
      if (generated.count(j) != 0) {
        continue;
      }
      const Word& other = cells[j].word;
      check.expect(other.size() == w.size(), "length law: " + text(w) + " (length " +
                                                 std::to_string(w.size()) + ") borders " +
                                                 text(other) + " (length " +
                                                 std::to_string(other.size()) + ")");
      check.expect(word_meet(w, other).size() + 2 <= w.size(),
                   "meet law: " + text(w) + " and " + text(other));
    }
  }

  for (const char* center : {"S", "LSLLS", "LLSLSL"}) {
    const Word c = Word::parse(center);
    const auto moved = recenter(c, depth);
    check.expect(moved[0].word == c, "recentered I shows " + text(moved[0].word));
    const Word back_word = matrix_to_word(inverse(word_to_matrix(c)));
    const auto back = translate(moved, word_to_matrix(back_word));
    bool restored = true;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      restored = restored && back[i].word == cells[i].word;
    }
    check.expect(restored, std::string("recenter at ") + center + " is not undone");
  }

  const Word w = Word::parse("LSLS" "LLSLLSLLS" "LSL");
  const Word w2 = Word::parse("LSLS" "LLSLLSLLS" "LLSLSLL");
  check.expect(word_meet(w, w2) == Word::parse("LSLSLLSLLSLLS"), "meet example");
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<void(Check&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"group_algebra", 1.0, group_algebra},
      {"discriminant_invariance", 5.0, discriminant_invariance},
      {"gauss_sweep", 30.0, gauss_sweep},
      {"spine_oracle", 5.0, spine_oracle},
      {"path_soundness", 10.0, path_soundness},
      {"representation_solver", 60.0, representation_solver},
      {"geodesics", 2.0, geodesics},
      {"sunburst", 5.0, sunburst},
  };
  return list;
}

bool run(const Criterion& c) {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check.expect(seconds < c.limit_seconds, "over the time limit");
  std::cout << (check.ok() ? "PASS " : "FAIL ") << c.name << " (" << seconds << " s, limit "
            << c.limit_seconds << " s)";
  if (!check.ok()) {
    std::cout << ": " << check.summary();
  }
  std::cout << std::endl;
  return check.ok();
}

}  // namespace

int main(int argc, char** argv) {
  bool all_ok = true;
  bool matched = false;
  for (const auto& c : criteria()) {
    if (argc > 1 && std::string(argv[1]) != c.name) {
      continue;
    }
    matched = true;
    all_ok = run(c) && all_ok;
  }
  if (!matched) {
    std::cerr << "unknown criterion " << argv[1] << "\n";
    return 2;
  }
  return all_ok ? 0 : 1;
}
