#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "carkwork/integer.hpp"
#include "carkwork/modular_group.hpp"

namespace carkwork {

/// The binary quadratic form a x^2 + b x y + c y^2. Coefficients are kept as
/// given; primitivity is a query, never imposed.
class QuadForm {
 public:
  QuadForm() = default;
  QuadForm(Integer a, Integer b, Integer c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }

  Integer discriminant() const { return b_ * b_ - 4 * a_ * c_; }

  /// "(a,b,c)"
  std::string to_string() const;

  friend bool operator==(const QuadForm&, const QuadForm&) = default;
  friend std::strong_ordering operator<=>(const QuadForm& x, const QuadForm& y);

 private:
  Integer a_{0}, b_{0}, c_{0};
};

inline Integer discriminant(const QuadForm& f) { return f.discriminant(); }

enum class FormClass { degenerate, positive_definite, negative_definite, indefinite };

std::string_view to_string(FormClass c);

FormClass classify_form(const QuadForm& f);

inline bool is_indefinite(const QuadForm& f) {
  return classify_form(f) == FormClass::indefinite;
}

/// Throws DomainError(not_indefinite) unless f is indefinite non-degenerate.
void require_indefinite(const QuadForm& f, std::string_view what);

Integer evaluate(const QuadForm& f, const Integer& x, const Integer& y);

/// gcd(a, b, c), non-negative.
Integer content(const QuadForm& f);

bool is_primitive(const QuadForm& f);

QuadForm negate(const QuadForm& f);

/// f_W = (r, s - p, -q) / gcd(r, s - p, q). Throws for the identity.
QuadForm form_of_element(const GroupElement& w);

/// The form with matrix m^t M_f m, i.e. (x, y) -> f(p x + q y, r x + s y).
/// This is a right action: act(b, act(a, f)) == act(a * b, f).
QuadForm act(const GroupElement& m, const QuadForm& f);

/// act for a single generator, without matrix arithmetic.
QuadForm act(Letter letter, const QuadForm& f);

// Exact comparisons against sqrt(d) for a non-square d > 0.
bool less_than_sqrt(const Integer& x, const Integer& d);     // x < sqrt(d)
bool greater_than_sqrt(const Integer& x, const Integer& d);  // x > sqrt(d)

/// Gauss: |sqrt(D) - 2|a|| < b < sqrt(D). Indefinite forms only.
bool is_gauss_reduced(const QuadForm& f);

/// Lagrange: |b| <= a <= c, and b >= 0 if a == c or |b| == a. Positive definite only.
bool is_lagrange_reduced(const QuadForm& f);

/// Zagier: sqrt(D) < b < sqrt(D) + 2a and sqrt(D) < b < sqrt(D) + 2c.
bool is_zagier_reduced(const QuadForm& f);

/// Semi-reduced (labels a spine edge): a c < 0.
bool is_on_spine(const QuadForm& f);

}  // namespace carkwork
