#include "carkwork/quadratic_forms.hpp"

#include <string>

#include "carkwork/error.hpp"

namespace carkwork {

std::string QuadForm::to_string() const {
  return "(" + a_.str() + "," + b_.str() + "," + c_.str() + ")";
}

std::strong_ordering operator<=>(const QuadForm& x, const QuadForm& y) {
  if (x.a_ != y.a_) {
    return x.a_ < y.a_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (x.b_ != y.b_) {
    return x.b_ < y.b_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (x.c_ != y.c_) {
    return x.c_ < y.c_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string_view to_string(FormClass c) {
  switch (c) {
    case FormClass::degenerate: return "degenerate";
    case FormClass::positive_definite: return "positive_definite";
    case FormClass::negative_definite: return "negative_definite";
    case FormClass::indefinite: return "indefinite";
  }
  return "";
}

FormClass classify_form(const QuadForm& f) {
  const Integer d = f.discriminant();
  if (is_perfect_square(d)) {
    return FormClass::degenerate;
  }
  if (d.sign() > 0) {
    return FormClass::indefinite;
  }
  // d < 0 forces a c > 0, so a != 0.
  return f.a().sign() > 0 ? FormClass::positive_definite : FormClass::negative_definite;
}

void require_indefinite(const QuadForm& f, std::string_view what) {
  if (!is_indefinite(f)) {
    throw DomainError(ErrorCode::not_indefinite,
                      std::string(what) + " defined for indefinite forms only; got " +
                          f.to_string() + " (" + std::string(to_string(classify_form(f))) + ")");
  }
}

Integer evaluate(const QuadForm& f, const Integer& x, const Integer& y) {
  return f.a() * x * x + f.b() * x * y + f.c() * y * y;
}

Integer content(const QuadForm& f) { return gcd(gcd(f.a(), f.b()), f.c()); }

bool is_primitive(const QuadForm& f) { return content(f) == 1; }

QuadForm negate(const QuadForm& f) { return {-f.a(), -f.b(), -f.c()}; }

QuadForm form_of_element(const GroupElement& w) {
  Integer a = w.r();
  Integer b = w.s() - w.p();
  Integer c = -w.q();
  const Integer delta = gcd(gcd(a, b), c);
  if (delta.is_zero()) {
    throw DomainError(ErrorCode::no_associated_form,
                      "no associated form: all coefficients vanish for the identity");
  }
  return {a / delta, b / delta, c / delta};
}

QuadForm act(const GroupElement& m, const QuadForm& f) {
  const Integer& p = m.p();
  const Integer& q = m.q();
  const Integer& r = m.r();
  const Integer& s = m.s();
  return {evaluate(f, p, r), 2 * f.a() * p * q + f.b() * (p * s + q * r) + 2 * f.c() * r * s,
          evaluate(f, q, s)};
}

QuadForm act(Letter letter, const QuadForm& f) {
  const Integer& a = f.a();
  const Integer& b = f.b();
  const Integer& c = f.c();
  switch (letter) {
    case Letter::S: return {c, -b, a};
    case Letter::L: return {a + b + c, -2 * a - b, a};
    case Letter::L2: return {c, -b - 2 * c, a + b + c};
  }
  return f;
}

bool less_than_sqrt(const Integer& x, const Integer& d) {
  return x.sign() < 0 || x * x < d;
}

bool greater_than_sqrt(const Integer& x, const Integer& d) {
  return x.sign() > 0 && x * x > d;
}

bool is_gauss_reduced(const QuadForm& f) {
  require_indefinite(f, "Gauss reducedness");
  const Integer d = f.discriminant();
  const Integer& b = f.b();
  const Integer two_a = 2 * abs(f.a());
  // |sqrt(D) - 2|a|| < b  <=>  2|a| - b < sqrt(D) < 2|a| + b
  return less_than_sqrt(b, d) && less_than_sqrt(two_a - b, d) && greater_than_sqrt(two_a + b, d);
}

bool is_lagrange_reduced(const QuadForm& f) {
  if (classify_form(f) != FormClass::positive_definite) {
    throw DomainError(ErrorCode::not_positive_definite,
                      "Lagrange reducedness defined for positive definite forms only; got " +
                          f.to_string());
  }
  const Integer& a = f.a();
  const Integer& b = f.b();
  const Integer& c = f.c();
  if (!(abs(b) <= a && a <= c)) {
    return false;
  }
  if ((a == c || abs(b) == a) && b.sign() < 0) {
    return false;
  }
  return true;
}

bool is_zagier_reduced(const QuadForm& f) {
  require_indefinite(f, "Zagier reducedness");
  const Integer d = f.discriminant();
  const Integer& b = f.b();
  // sqrt(D) < b, and b < sqrt(D) + 2a  <=>  b - 2a < sqrt(D).
  return greater_than_sqrt(b, d) && less_than_sqrt(b - 2 * f.a(), d) &&
         less_than_sqrt(b - 2 * f.c(), d);
}

bool is_on_spine(const QuadForm& f) {
  require_indefinite(f, "spine membership");
  return f.a().sign() * f.c().sign() < 0;
}

}  // namespace carkwork
